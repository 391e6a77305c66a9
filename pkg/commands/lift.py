"""
commands.lift - Relever une racine de f mod p en une racine p-adique
"""

import argparse

from algebra.errors import AlgebraError, InvalidInput
from algebra.hensel import LiftReport, lift_branches, lift_general, roots_mod_p
from algebra.padic import PadicInt
from algebra.polynomial import IntPolynomial
from core.command_manager import Command, integer, positive, prime


class LiftCommand(Command):
    name = "lift"
    help = "lift a root of f mod p (or p^nu) to Z_p"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--poly", type=IntPolynomial.parse, required=True, help="coefficients, constant first")
        parser.add_argument("--prime", type=prime, required=True)
        parser.add_argument("--seed", type=integer, help="root r0 mod p, every root mod p when omitted")
        parser.add_argument("--precision", type=positive, required=True, help="target precision N")
        parser.add_argument("--nu", type=positive, help="v_p(f(r0)) to assume")
        parser.add_argument("--kappa", type=integer, help="v_p(f'(r0)) to assume")

    def _seeds(self, f: IntPolynomial, p: int, seed: int | None) -> list[int]:
        if seed is not None:
            return [seed]
        limit = self.engine.config.hensel.scan_limit
        if p > limit:
            raise InvalidInput(f"The mod-p seed scan is limited to p <= {limit}, give --seed")
        return roots_mod_p(f, p)

    def _lift(self, f: IntPolynomial, seed: int, args: argparse.Namespace) -> list[LiftReport]:
        if args.nu is not None or args.kappa is not None:
            return [lift_general(f, seed, args.prime, args.precision, args.nu, args.kappa)]
        return lift_branches(f, seed, args.prime, args.precision)

    def execute(self, args: argparse.Namespace) -> dict:
        f: IntPolynomial = args.poly
        seeds = self._seeds(f, args.prime, args.seed)
        reports: dict[int, LiftReport] = {}
        failure: AlgebraError | None = None
        for seed in seeds:
            try:
                found = self._lift(f, seed, args)
            except AlgebraError as error:
                if args.seed is not None:
                    raise
                self.logger.warn(f"Seed {seed} skipped: {error}")
                failure = error
                continue
            for report in found:
                reports.setdefault(report.root.residue, report)

        if failure is not None and not reports:
            raise failure

        return {
            "poly": list(f.coeffs),
            "prime": args.prime,
            "precision": args.precision,
            "roots": [reports[key].to_json() for key in sorted(reports)],
        }

    def render(self, payload: dict) -> str:
        shown = self.engine.config.output.digits_shown
        lines = [f"f(x) = {IntPolynomial(tuple(payload['poly']))} over Z_{payload['prime']}"]
        if not payload["roots"]:
            lines.append(f"no root mod {payload['prime']}")
        for report in payload["roots"]:
            root = PadicInt.from_json(report["root"])
            lines.append(
                f"r = {root.render(shown)}  (seed {report['seed']}, {report['method']}, "
                f"{report['terms_used']} terms, residue {root.residue})"
            )
        return "\n".join(lines)
