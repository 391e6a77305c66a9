"""
core.command_manager - Chargement et enregistrement des sous-commandes

Contenu:

Classe Command
Classe CommandManager
Types d'arguments (integer, positive, prime, rational_list)
"""

import argparse
import importlib

from algebra.bigmath import Rational, as_rational, require_prime
from core import context
from systems import logging

# ordre d'affichage dans l'aide ; "verify" reste cachée
COMMANDS: tuple[str, ...] = ("lift", "factor", "teichmuller", "bell", "invert", "classify", "verify")


class Command(context.Context):
    """
    Command - Sous-commande du CLI, chargée depuis le dossier "commands/"
    """

    name: str = ""
    help: str = ""
    hidden: bool = False

    def __init__(self) -> None:
        super().__init__()
        self.logger = logging.Logger(f"commands.{self.name}", False)

    def configure(self, parser: argparse.ArgumentParser) -> None:
        """
        configure - Déclarer les arguments de la commande
        """

        pass

    def execute(self, args: argparse.Namespace) -> dict:
        """
        execute - Exécuter la commande et renvoyer le payload de la réponse
        """

        raise NotImplementedError

    def render(self, payload: dict) -> str:
        """
        render - Version lisible du payload (sortie par défaut, sans --json)
        """

        return "\n".join(f"{key}: {value}" for key, value in payload.items())


class CommandManager(context.Context):
    """
    CommandManager - Orchestrer le chargement des objets Command
    """

    def __init__(self) -> None:
        super().__init__()

        self.logger = logging.Logger("core.command_manager")
        self.command_cache: dict[str, Command] = {}

    def load(self, command_name: str) -> Command:
        """
        load - Charger une commande par son nom
        ---
        params:
            - command_name: str = Nom du module dans le dossier "commands/"
        """

        if command_name in self.command_cache:
            return self.command_cache[command_name]

        module_name = f"commands.{command_name}"
        try:
            module = importlib.import_module(module_name)
        except ImportError as e:
            self.logger.error(f"Failed to import command '{command_name}': {e}")
            raise

        class_name = "".join(part.capitalize() for part in command_name.split("_")) + "Command"

        try:
            command_class = getattr(module, class_name)
        except AttributeError:
            raise AttributeError(f"The command '{command_name}' does not contain a '{class_name}' class.")

        command = command_class()
        self.command_cache[command_name] = command
        self.logger.success(f"Loaded command '{command_name}'")
        return command

    def register(self, subparsers, common: argparse.ArgumentParser) -> None:
        """
        register - Ajouter toutes les commandes au parseur
        ---
        params:
            - subparsers = Retour de ArgumentParser.add_subparsers
            - common: ArgumentParser = Parseur parent portant les options partagées (--json)
        """

        for command_name in COMMANDS:
            command = self.load(command_name)
            options = {} if command.hidden else {"help": command.help}
            parser = subparsers.add_parser(command_name, parents=[common], description=command.help, **options)
            command.configure(parser)


# -- Types d'arguments --


def integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"integer expected, got {text!r}")


def positive(text: str) -> int:
    value = integer(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"positive integer expected, got {text!r}")
    return value


def prime(text: str) -> int:
    return require_prime(integer(text))


def rational_list(text: str) -> list[Rational]:
    """ "1,-1/2,3" -> [1, Fraction(-1, 2), 3] """
    return [as_rational(part) for part in text.split(",") if part.strip()]
