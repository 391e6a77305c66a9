"""
commands.invert - Inversion de Lagrange de phi(t) = t (1 + sum alpha_r t^r / r!)
"""

import argparse

from algebra.series import InversionProblem
from core.command_manager import Command, positive, rational_list


class InvertCommand(Command):
    name = "invert"
    help = "compositional inverse of t (1 + sum alpha_r t^r / r!)"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--alphas", type=rational_list, required=True, help="alpha_1,alpha_2,...")
        parser.add_argument("--order", type=positive, required=True, help="number of beta_n to compute")

    def execute(self, args: argparse.Namespace) -> dict:
        problem = InversionProblem.solve(args.alphas, args.order)
        return {
            "alphas": [str(a) for a in problem.alphas],
            "order": problem.order,
            "betas": [str(b) for b in problem.betas],
            "inverse": problem.inverse().to_strings(),
        }

    def render(self, payload: dict) -> str:
        lines = [f"beta_{n} = {beta}" for n, beta in enumerate(payload["betas"], start=1)]
        terms = [f"{c}*u^{i}" for i, c in enumerate(payload["inverse"]) if c != "0"]
        lines.append("phi^-1(u) = " + " + ".join(terms))
        return "\n".join(lines)
