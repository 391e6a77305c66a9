"""
commands.bell - Évaluer un polynôme de Bell partiel B_{n,k}
"""

import argparse

from algebra.bell import bell, bell_oracle
from core.command_manager import Command, integer, rational_list


class BellCommand(Command):
    name = "bell"
    help = "evaluate the partial Bell polynomial B_{n,k}(x1, x2, ...)"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("n", type=integer)
        parser.add_argument("k", type=integer)
        parser.add_argument("xs", type=rational_list, help="x1,x2,... (integers or num/den)")
        parser.add_argument("--oracle", action="store_true", help="also sum over the partitions of n")

    def execute(self, args: argparse.Namespace) -> dict:
        payload = {
            "n": args.n,
            "k": args.k,
            "xs": [str(x) for x in args.xs],
            "value": str(bell(args.n, args.k, args.xs)),
        }
        if args.oracle:
            payload["oracle"] = str(bell_oracle(args.n, args.k, args.xs))
        return payload

    def render(self, payload: dict) -> str:
        line = f"B_({payload['n']},{payload['k']})({', '.join(payload['xs'])}) = {payload['value']}"
        if "oracle" in payload:
            line += f"  (partition sum {payload['oracle']})"
        return line
