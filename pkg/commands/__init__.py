"""
commands - Sous-commandes du CLI, chargées par core.command_manager
"""
