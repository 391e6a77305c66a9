"""
core.error_handler - Gestion des erreurs intégrée avec le module systems.logging
"""

import sys

from algebra.errors import AlgebraError
from core.context import Context
from core.response import Response
from systems.logging import Logger


class ErrorHandler(Context):
    """
    ErrorHandler - Classe à instance unique transformant les erreurs en réponses
    ---
    Les erreurs du domaine (AlgebraError) donnent leur propre code de sortie. Toute autre
    exception est une erreur interne : code 1, log critique et dump de la requête.
    """

    def __init__(self, install_hook: bool = False) -> None:
        super().__init__()
        self.logger = Logger("core.error_handler", False)

        if install_hook:
            sys.excepthook = self._error_handler
            self.logger.success("Registered global error handler")

    def handle(self, error: BaseException, command: str | None = None) -> tuple[Response, int]:
        """
        handle - Construire la réponse d'erreur et le code de sortie
        ---
        params:
            - error: BaseException = Exception levée pendant la commande
            - command: str | None = Nom de la commande en cours, si connue
        """

        if isinstance(error, AlgebraError):
            self.logger.error(f"{error.code}: {error}")
            return Response.failure(command, error.code, str(error), error.details), error.exit_code

        self.dump()
        self.logger.critical(f"Error of type {type(error).__name__} at context [{error}]")
        return Response.failure(command, "InternalError", f"{type(error).__name__}: {error}"), 1

    def dump(self) -> None:
        """
        dump - Afficher l'état du moteur (requête en cours comprise)
        """

        self.logger.highlight("--------- START OF DUMP ---------")
        for key, value in self.engine.__dict__.items():
            if key.startswith("__"):
                continue
            self.logger.log(f"{key}: {type(value).__name__} = {value}")
        self.logger.highlight("--------- END OF DUMP ---------")

    def _error_handler(self, exctype, value, traceback) -> None:
        """
        _error_handler - Fonction privée remplaçante de l'error-handler par défaut
        """

        if exctype is KeyboardInterrupt:
            self.logger.log("Keyboard Interrupt triggered, exiting...")
        else:
            self.logger.critical("Error occurred D: , now displaying execution dump")
            self.dump()
            self.logger.critical(f"Error of type {exctype.__name__} at context [{value}]")
