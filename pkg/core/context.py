"""
core.context - Donner accès au moteur à n'importe quel composant
"""


class EngineContext:
    """
    EngineContext - Classe pointant vers le moteur en cours d'exécution
    """

    _engine = None

    @classmethod
    def set_engine(cls, engine) -> None:
        cls._engine = engine

    @classmethod
    def get_engine(cls):
        return cls._engine


class Context:
    """
    Context - Classe destinée à donner le contexte du moteur à une commande ou un composant
    """

    def __init__(self) -> None:
        self.engine = EngineContext.get_engine()
        assert self.engine is not None
