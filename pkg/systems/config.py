"""
systems.config - code de connexion au fichier de configuration

Le fichier settings.yaml est cherché à la racine du projet (à côté de main.py),
pas dans le dossier courant, pour que la CLI et les tests lisent les mêmes réglages.
"""

from pathlib import Path

from munch import Munch, munchify
import yaml

SETTINGS_PATH: Path = Path(__file__).resolve().parent.parent / "settings.yaml"


def load_settings(path: Path = SETTINGS_PATH) -> Munch:
    """
    load_settings - Charger un fichier de réglages YAML sous forme de Munch
    ---
    params:
        - path: Path = Chemin du fichier YAML
    """

    with open(path, "r", encoding="utf8") as stream:
        return munchify(yaml.safe_load(stream) or {})


config: Munch = load_settings()
