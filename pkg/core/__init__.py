"""
core - Moteur du CLI : analyse des arguments, commandes, réponses et erreurs
"""
