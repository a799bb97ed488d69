# -*- encoding: utf-8 -*-
"""
Comando 'pw': estima p(w) ou p_Z(w, w') pela contagem de circuitos.
"""
from schurlsd.experimentos import ExperimentCommand, cmd_pw


class Command(ExperimentCommand):
    help = "Estimativa de p(w) numa escada de n"
    name = "pw"
    run = staticmethod(cmd_pw)
