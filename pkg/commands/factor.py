"""
commands.factor - Factorisation explicite dans Z[[x]]
"""

import argparse

from algebra.factorize import SeriesInput, factor, factor_multiple_root
from algebra.polynomial import IntPolynomial
from core.command_manager import Command, positive, prime


class FactorCommand(Command):
    name = "factor"
    help = "factor p^w + p^m g1 x + g2 x^2 + ... in Z[[x]]"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--coeffs", required=True, help="c0,c1,..., constant first")
        parser.add_argument("--prime", type=prime, help="inferred from c0 when omitted")
        parser.add_argument("--order", type=positive, default=8, help="truncation order M of A and B")
        parser.add_argument("--tail", default="zero", help="'zero' (polynomial) or 'geometric:<ratio>'")
        parser.add_argument("--multiple", action="store_true", help="split off gcd(f, f') instead")

    def execute(self, args: argparse.Namespace) -> dict:
        if args.multiple:
            split = factor_multiple_root(IntPolynomial.parse(args.coeffs), args.prime)
            return {"input": {"coeffs": list(IntPolynomial.parse(args.coeffs).coeffs), "tail": "zero"}, **split.to_json()}

        source = SeriesInput.parse(args.coeffs, args.tail)
        pair = factor(source, args.order, p=args.prime)
        return {"input": source.to_json(), **pair.to_json()}

    def render(self, payload: dict) -> str:
        if "G" in payload:
            return f"G = {IntPolynomial(tuple(payload['G']))}\nf_red = {IntPolynomial(tuple(payload['reduced']))}"

        def series(coeffs: list[str]) -> str:
            terms = [c if i == 0 else f"{c}*x^{i}" for i, c in enumerate(coeffs) if c != "0"]
            return " + ".join(terms).replace("+ -", "- ") + f" + O(x^{len(coeffs)})"

        failed = [name for name, passed in payload["checks"].items() if not passed]
        return "\n".join(
            [
                f"A = {series(payload['A'])}",
                f"B = {series(payload['B'])}",
                f"ell = {payload['ell']}, root digits = {payload['root_digits']}, scale = {payload['scale']}",
                "checks: " + ("all passed" if not failed else "failed " + ", ".join(failed)),
            ]
        )
