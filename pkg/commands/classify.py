"""
commands.classify - Critères d'irréductibilité dans Z[[x]] à partir de f(0) et f'(0)
"""

import argparse

from algebra.factorize import NEEDS_ROOT_ANALYSIS, classify
from core.command_manager import Command, integer


class ClassifyCommand(Command):
    name = "classify"
    help = "reducibility of f in Z[[x]] from f0 = f(0) and f1 = f'(0)"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--f0", type=integer, required=True)
        parser.add_argument("--f1", type=integer, required=True)

    def execute(self, args: argparse.Namespace) -> dict:
        return classify(args.f0, args.f1).to_json()

    def render(self, payload: dict) -> str:
        if payload["kind"] == NEEDS_ROOT_ANALYSIS:
            return f"{payload['kind']} p={payload['p']} w={payload['w']} m={payload['m']}"
        return payload["kind"]
