# -*- encoding: utf-8 -*-
"""
Comando 'moments': momentos estimados por Monte Carlo, com os alvos teóricos.
"""
from schurlsd.experimentos import ExperimentCommand, cmd_moments


class Command(ExperimentCommand):
    help = "Momentos de Monte Carlo do produto configurado"
    name = "moments"
    run = staticmethod(cmd_moments)
