# -*- encoding: utf-8 -*-
"""
Comando 'check': verifica uma relação entre duas ligações.
"""
from schurlsd.experimentos import ExperimentCommand, cmd_check


class Command(ExperimentCommand):
    help = "Verificações implies, compatible, leadsto e invariance"
    name = "check"
    run = staticmethod(cmd_check)
