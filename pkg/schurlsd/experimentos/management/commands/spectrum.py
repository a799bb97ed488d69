# -*- encoding: utf-8 -*-
"""
Comando 'spectrum': autovalores, histograma e distância KS do produto configurado.
"""
from schurlsd.experimentos import ExperimentCommand, cmd_spectrum


class Command(ExperimentCommand):
    help = "Espectros simulados de n^(-1/2) X o Y"
    name = "spectrum"
    run = staticmethod(cmd_spectrum)
