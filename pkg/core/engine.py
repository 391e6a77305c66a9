"""
core.engine - Classe principale du moteur de commandes
"""

import argparse
import re

from algebra.errors import UsageError
from core import command_manager, context, error_handler
from core.response import Response
from systems import logging
from systems.config import config


class CommandParser(argparse.ArgumentParser):
    """
    CommandParser - ArgumentParser levant une UsageError au lieu de quitter
    """

    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        # "-2,0,1" ou "-1/2,3" sont des valeurs (coefficients), pas des options
        self._negative_number_matcher = re.compile(r"^-\d[\d,/-]*$")

    def error(self, message: str):
        raise UsageError(message)


class Engine:
    """
    Engine - Classe principale du moteur
    ---
    Analyse argv, exécute la sous-commande et écrit la réponse sur stdout.
    Codes de sortie : 0 succès, 1 erreur du domaine, 2 erreur d'usage.
    """

    def __init__(self) -> None:
        self.config = config

        self.logger = logging.Logger("core.engine")

        self.logger.log("Version " + " ".join(str(value) for value in self.config.release.values()))

        context.EngineContext.set_engine(self)

        self.error_handler = error_handler.ErrorHandler(bool(self.config.debug.misc.error_handler))
        self.command_manager = command_manager.CommandManager()

        self.request: dict | None = None

    def build_parser(self) -> CommandParser:
        """
        build_parser - Construire le parseur principal et ceux des sous-commandes
        """

        common = CommandParser(add_help=False)
        common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

        parser = CommandParser(prog="padic-bell", description="Explicit p-adic lifts and Z[[x]] factorizations")
        parser.add_argument("--json", action="store_true", default=False, help="machine-readable output")
        subparsers = parser.add_subparsers(
            dest="command",
            required=True,
            metavar="{lift,factor,teichmuller,bell,invert,classify}",
            parser_class=CommandParser,
        )
        self.command_manager.register(subparsers, common)
        return parser

    def run(self, argv: list[str]) -> int:
        """
        run - Fonction d'exécution du moteur
        ---
        params:
            - argv: list[str] = Arguments sans le nom du programme
        """

        as_json = "--json" in argv
        command = None
        try:
            args = self.build_parser().parse_args(argv)
            self.request = vars(args)
            as_json = bool(getattr(args, "json", False))
            command = self.command_manager.load(args.command)
            response = Response.ok(args.command, command.execute(args))
            code = 0
        except Exception as error:
            response, code = self.error_handler.handle(error, getattr(command, "name", None))

        self.emit(response, command, as_json)
        return code

    def emit(self, response: Response, command: command_manager.Command | None, as_json: bool) -> None:
        """
        emit - Écrire la réponse sur stdout, en JSON ou sous forme lisible
        """

        if as_json:
            print(response.dumps(self.config.output.json_indent))
        elif response.is_ok and command is not None:
            print(command.render(response.payload))
        else:
            print(f"error [{response.error['code']}]: {response.error['message']}")
