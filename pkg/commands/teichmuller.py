"""
commands.teichmuller - Racines (p-1)-ièmes de l'unité dans Z_p
"""

import argparse

from algebra.errors import OutOfRange
from algebra.hensel import teichmuller
from algebra.padic import PadicInt
from core.command_manager import Command, integer, positive, prime


class TeichmullerCommand(Command):
    name = "teichmuller"
    help = "Teichmüller lift of q mod p (every q when --q is omitted)"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--prime", type=prime, required=True)
        parser.add_argument("--q", type=integer)
        parser.add_argument("--precision", type=positive, required=True)

    def execute(self, args: argparse.Namespace) -> dict:
        p = args.prime
        if args.q is not None and not 1 <= args.q <= p - 1:
            raise OutOfRange(f"q must lie in [1, {p - 1}], got {args.q}")
        qs = [args.q] if args.q is not None else list(range(1, p))
        lifts = []
        for q in qs:
            xi = teichmuller(q, p, args.precision)
            lifts.append({"q": q, "residue": xi.residue, "root": xi.to_json()})
        return {"prime": p, "precision": args.precision, "lifts": lifts}

    def render(self, payload: dict) -> str:
        shown = self.engine.config.output.digits_shown
        return "\n".join(
            f"xi_{lift['q']} = {PadicInt.from_json(lift['root']).render(shown)}  (residue {lift['residue']})"
            for lift in payload["lifts"]
        )
