"""
commands.verify - Revérifier une réponse JSON de lift ou factor (commande cachée)
"""

import argparse
import sys

from algebra.bigmath import vp
from algebra.errors import InvalidInput, LemmaViolation
from algebra.factorize import FactorPair, SeriesInput, verify_factorization
from algebra.padic import PadicInt
from algebra.polynomial import IntPolynomial
from core.command_manager import Command
from core.response import Response


class VerifyCommand(Command):
    name = "verify"
    help = "re-check a JSON response of lift or factor"
    hidden = True

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--input", help="file holding the response, stdin when omitted")

    def _read(self, path: str | None) -> Response:
        if path is None:
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as handle:
                text = handle.read()
        try:
            response = Response.loads(text)
        except (ValueError, KeyError) as error:
            raise InvalidInput(f"Not a JSON response: {error}") from error
        if not response.is_ok:
            raise InvalidInput("Only successful responses can be verified")
        return response

    def _verify_lift(self, payload: dict) -> list[dict]:
        f = IntPolynomial.of(payload["poly"])
        results = []
        for report in payload["roots"]:
            root = PadicInt.from_json(report["root"])
            residual = vp(f(root.residue), root.p)
            results.append({"residue": root.residue, "passed": residual >= root.precision})
        return results

    def _verify_factor(self, payload: dict) -> list[dict]:
        data = payload["input"]
        source = SeriesInput.parse(",".join(str(c) for c in data["coeffs"]), data["tail"])
        if "G" in payload:
            g, reduced = IntPolynomial.of(payload["G"]), IntPolynomial.of(payload["reduced"])
            return [{"check": "G * f_red = f", "passed": g * reduced == IntPolynomial(source.coeffs)}]
        pair = FactorPair.from_json(payload)
        report = verify_factorization(source, pair, pair.order)
        return [{"check": name, "passed": passed} for name, passed in report.checks.items()]

    def execute(self, args: argparse.Namespace) -> dict:
        response = self._read(args.input)
        if response.command == "lift":
            results = self._verify_lift(response.payload)
        elif response.command == "factor":
            results = self._verify_factor(response.payload)
        else:
            raise InvalidInput(f"Cannot verify the output of {response.command!r}")

        passed = all(result["passed"] for result in results)
        if not passed:
            raise LemmaViolation(f"Verification of {response.command} failed: {results}")
        return {"command": response.command, "passed": passed, "results": results}

    def render(self, payload: dict) -> str:
        return f"{payload['command']}: {len(payload['results'])} check(s) passed"
