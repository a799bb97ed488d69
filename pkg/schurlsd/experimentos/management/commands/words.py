# -*- encoding: utf-8 -*-
"""
Comando 'words': lista ou conta as palavras pareadas de um comprimento.
"""
from schurlsd.experimentos import ExperimentCommand, cmd_words


class Command(ExperimentCommand):
    help = "Palavras pareadas e de Catalan"
    name = "words"
    run = staticmethod(cmd_words)
