"""
systems.logging - module de gestion des logs

Les logs partent sur stderr : stdout est réservé à la réponse de la commande.
"""

from datetime import datetime
import sys

import colorama

from systems.config import config

# niveau minimal de engine.log_level pour afficher chaque type d'entrée
LEVELS: dict[str, int] = {
    "highlight": 0,
    "critical": 1,
    "error": 2,
    "warn": 3,
    "log": 4,
    "success": 4,
}


class Logger:
    """
    Logger - Gestionnaire de logs du projet
    ---
    Permet de tracer les calculs (relèvements, factorisations, vérifications) composant par composant.
    Chaque entrée est filtrée par engine.log_level et par les interrupteurs de debug.logs
    ("special.all", "<nom>" et "<nom>.<groupe>").
    """

    def __init__(self, name: str = "Logger element", verbose: bool = True) -> None:
        self.name: str = name

        if verbose:
            self.log(f"Logger element created for {name} as {self}")

    def check_enabled(self, group: str | None) -> bool:
        """
        check_enabled - Vérifier si les logs pour ce composant et ce groupe sont activés
        ---
        params :
            - group : str | None = Nom du groupe à vérifier
        """

        switches = config.debug.logs
        enabled = bool(switches.get("special.all", False))

        if self.name in switches:
            enabled = bool(switches[self.name])

        if group is not None and f"{self.name}.{group}" in switches:
            enabled = bool(switches[f"{self.name}.{group}"])

        return enabled

    def _emit(self, kind: str, style: str, message: str, group: str | None) -> None:
        if config.engine.log_level < LEVELS[kind] or not self.check_enabled(group):
            return
        label = self.name + (f".{group}" if group else "")
        print(
            f"{style}({datetime.now()}) [{label}] {message}{colorama.Style.RESET_ALL}",
            file=sys.stderr,
        )

    def log(self, message: str, group: str | None = None) -> None:
        """
        log - Affiche une entrée de type log (niveau 4)
        """

        self._emit("log", colorama.Fore.BLUE, message, group)

    def highlight(self, message: str, group: str | None = None) -> None:
        """
        highlight - Affiche une entrée de type highlight (niveau 0)
        """

        self._emit("highlight", colorama.Back.WHITE + colorama.Fore.BLACK, message, group)

    def warn(self, message: str, group: str | None = None) -> None:
        """
        warn - Affiche une entrée de type warn (niveau 3)
        """

        self._emit("warn", colorama.Fore.YELLOW, message, group)

    def success(self, message: str, group: str | None = None) -> None:
        """
        success - Affiche une entrée de type success (niveau 4)
        """

        self._emit("success", colorama.Fore.GREEN, message, group)

    def error(self, message: str, group: str | None = None) -> None:
        """
        error - Affiche une entrée de type error (niveau 2)
        """

        self._emit("error", colorama.Fore.RED, message, group)

    def critical(self, message: str, group: str | None = None) -> None:
        """
        critical - Affiche une entrée de type critical (niveau 1)
        """

        self._emit("critical", colorama.Back.RED, message, group)
