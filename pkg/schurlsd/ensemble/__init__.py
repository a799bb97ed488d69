# -*- encoding: utf-8 -*-
from .core import *
