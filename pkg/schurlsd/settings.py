# -*- encoding: utf-8 -*-
import os
import os.path

import appdirs

from schurlsd.utils import mkdir_p

NOME_APLICACAO = "schurlsd"
AUTOR = "schurlsd"
VERSAO = "1.0.0"

dirs = appdirs.AppDirs(NOME_APLICACAO, AUTOR)

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DATA_DIR = os.environ.get("SCHURLSD_DATA_DIR", dirs.user_data_dir)
LOGS_DIR = os.environ.get("SCHURLSD_LOGS_DIR", dirs.user_log_dir)

for d in [DATA_DIR, LOGS_DIR]:
    if not os.path.exists(d):
        mkdir_p(d)

OUTPUT_DIR = os.path.join(DATA_DIR, "runs")
"""
Diretório padrão dos resultados dos experimentos; cada comando grava em
`OUTPUT_DIR/<comando>` quando `--out` não é passado.
"""

DEBUG = False
SECRET_KEY = "schurlsd-nao-usa-sessoes"
DATABASES = {}
ALLOWED_HOSTS = []
USE_TZ = True
TIME_ZONE = "America/Sao_Paulo"
LANGUAGE_CODE = "pt-br"

INSTALLED_APPS = (
    'schurlsd.linkfn',
    'schurlsd.words',
    'schurlsd.ensemble',
    'schurlsd.spectral',
    'schurlsd.circuits',
    'schurlsd.oracle',
    'schurlsd.experimentos',
)

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(levelname)s %(asctime)s %(module)s: %(message)s'
        },
        'simple': {
            'format': '%(levelname)s %(message)s'
        },
    },

    'handlers': {
        'console': {
            'level': 'INFO',
            'class': 'logging.StreamHandler',
            'formatter': 'simple'
        },
        'file': {
            'level': 'DEBUG',
            'class': 'logging.handlers.RotatingFileHandler',
            'formatter': 'verbose',
            'filename': os.path.join(LOGS_DIR, NOME_APLICACAO + '.log'),
            'maxBytes': 1048576,
            'backupCount': 3,
        },
    },
    'loggers': {
        'django': {
            'handlers': ['console', 'file'],
            'propagate': True,
            'level': 'WARNING',
        },

        NOME_APLICACAO: {
            'handlers': ['console', 'file'],
            'level': 'DEBUG',
            'propagate': False,
        }
    }
}

# Parâmetros padrão dos experimentos. Qualquer um deles pode ser
# sobrescrito no JSON passado com --config.

MASTER_SEED = 20130501
"""
Semente mestra usada quando nem a configuração nem `--seed` dão uma.
"""

N = 1000
TRIALS = 20
TOLERANCE = 0.03
"""
Tolerância absoluta das comparações entre `p(w)` extrapolado e o
valor esperado.
"""

MC_MAX_ORDER = 8
"""
Maior ordem de momento calculada por Monte Carlo.
"""

NODE_BUDGET = 10 ** 9
"""
Número máximo estimado de nós numa contagem de circuitos; acima disso
a contagem levanta `BudgetExceeded`.
"""

LADDERS = {
    2: (8, 16, 32, 64),
    4: (8, 16, 32, 64),
    6: (8, 16, 32),
}
"""
Escadas de `n` padrão pra extrapolar `p(w)`, por comprimento `2k` da
palavra.
"""

CHECK_N = 8
"""
Dimensão usada nas verificações exatas de contenção de circuitos.
"""

THREADS = 1
