# -*- encoding: utf-8 -*-
"""
Comando 'verify-table2': verifica as linhas da tabela de LSDs dos produtos.
"""
from schurlsd.experimentos import ExperimentCommand, cmd_verify_table2


class Command(ExperimentCommand):
    help = "Verificação da tabela de LSDs dos produtos de Schur-Hadamard"
    name = "verify-table2"
    run = staticmethod(cmd_verify_table2)
