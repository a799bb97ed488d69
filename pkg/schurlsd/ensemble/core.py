# -*- encoding: utf-8 -*-
"""
Sorteio das entradas, realização das matrizes com padrão e o produto de
Schur-Hadamard.

Cada matriz é sorteada a partir de uma semente própria, derivada da
semente mestra por `child_seed`; por isso o resultado de uma tentativa
não depende da ordem em que as tentativas rodam.
"""

import math
import logging
from dataclasses import dataclass

import numpy
import tablib

from schurlsd.utils import ArgumentError, StateError, format_float
from schurlsd.linkfn import value_grid

logger = logging.getLogger(__name__)

__all__ = [
    "InputDistribution", "RADEMACHER", "UNIFORM", "GAUSSIAN", "DISTRIBUTIONS",
    "parse_distribution", "MatrixRealization", "ProductSpec",
    "ROLE_X", "ROLE_Y", "child_seed", "sample_inputs", "realize",
    "schur_product", "scale", "to_csv",
]

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

ROLE_X = 1
ROLE_Y = 2


def _mix64(z):
    z = (z + _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


def child_seed(master_seed, role, trial):
    """
    Deriva a semente de 64 bits de uma matriz.

    É o finalizador do splitmix64 aplicado em cadeia:
    `mix(mix(mix(master_seed) ^ role) ^ trial)`, com `role` igual a
    `ROLE_X` (1) ou `ROLE_Y` (2).

    Argumentos:
        - master_seed: inteiro de 64 bits, não-negativo
        - role: `ROLE_X` ou `ROLE_Y`
        - trial: índice da tentativa, a partir de 0
    """
    if not 0 <= master_seed <= _MASK64:
        raise ArgumentError("Semente fora de [0, 2^64): {0}".format(master_seed))
    if role not in (ROLE_X, ROLE_Y):
        raise ArgumentError("Papel desconhecido: {0}".format(role))
    if trial < 0:
        raise ArgumentError("Tentativa negativa: {0}".format(trial))
    return _mix64(_mix64(_mix64(master_seed) ^ role) ^ trial)


@dataclass(frozen=True)
class InputDistribution:
    """
    Distribuição das entradas; todas têm média 0 e variância 1.

        - "rademacher": +-1 com probabilidade 1/2 cada
        - "uniform": uniforme em [-sqrt(3), sqrt(3)]
        - "gaussian": normal padrão
    """

    name: str

    def __post_init__(self):
        if self.name not in _SAMPLERS:
            raise ArgumentError("Distribuição desconhecida: {0!r}".format(self.name))

    def sample(self, rng, size):
        return _SAMPLERS[self.name](rng, size)

    def __str__(self):
        return self.name


_SQRT3 = math.sqrt(3.0)

_SAMPLERS = {
    "rademacher": lambda rng, size: rng.integers(0, 2, size=size).astype(numpy.float64) * 2.0 - 1.0,
    "uniform": lambda rng, size: rng.uniform(-_SQRT3, _SQRT3, size=size),
    "gaussian": lambda rng, size: rng.standard_normal(size),
}

RADEMACHER = InputDistribution("rademacher")
UNIFORM = InputDistribution("uniform")
GAUSSIAN = InputDistribution("gaussian")

DISTRIBUTIONS = {d.name: d for d in (RADEMACHER, UNIFORM, GAUSSIAN)}


def parse_distribution(name):
    try:
        return DISTRIBUTIONS[str(name).strip().lower()]
    except KeyError:
        raise ArgumentError("Distribuição desconhecida: {0!r}".format(name))


def sample_inputs(dist, size, seed):
    """
    Sorteia `size` entradas de `dist` com um `numpy.random.Generator`
    novo, criado a partir de `seed`.
    """
    return dist.sample(numpy.random.default_rng(seed), size)


class MatrixRealization(object):
    """
    Uma matriz simétrica realizada.

    Atributos:
        - n: a dimensão
        - entries: array `n x n` de floats (somente leitura)
        - scaled: se o fator `n^{-1/2}` já foi aplicado
        - provenance: tupla descrevendo a origem (ligação, distribuição,
          semente), ou a combinação das origens num produto
    """

    def __init__(self, entries, scaled=False, provenance=()):
        entries = numpy.asarray(entries, dtype=numpy.float64)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ArgumentError("Matriz não quadrada: {0}".format(entries.shape))
        entries.setflags(write=False)
        self.entries = entries
        self.scaled = scaled
        self.provenance = provenance

    @property
    def n(self):
        return self.entries.shape[0]

    def __repr__(self):
        return "<MatrixRealization n={0} scaled={1} {2}>".format(self.n, self.scaled, self.provenance)


def realize(link, dist, n, seed):
    """
    Realiza a matriz (sem escala) da ligação `link` com entradas de `dist`.

    Sorteia uma entrada por valor de ligação *distinto*, na ordem
    crescente dos valores, e a copia pra todas as posições com esse valor.
    """
    if n < 1:
        raise ArgumentError("Dimensão inválida: {0}".format(n))

    grid = value_grid(link, n)
    draws = sample_inputs(dist, len(grid), seed)
    return MatrixRealization(draws[grid.ids], provenance=(link.name, dist.name, seed))


def schur_product(A, B):
    """
    Produto de Schur-Hadamard (entrada a entrada) de duas realizações sem
    escala.
    """
    if A.n != B.n:
        raise ArgumentError("Dimensões diferentes: {0} e {1}".format(A.n, B.n))
    if A.scaled or B.scaled:
        raise StateError("O produto de Schur-Hadamard é feito antes da escala")
    return MatrixRealization(A.entries * B.entries, provenance=(A.provenance, B.provenance))


def scale(A):
    """
    Multiplica a matriz por `n^{-1/2}`.
    """
    if A.scaled:
        raise StateError("Matriz já está escalada")
    return MatrixRealization(A.entries / math.sqrt(A.n), scaled=True, provenance=A.provenance)


def to_csv(realization):
    """
    Exporta a matriz em CSV, linha a linha, com 17 algarismos
    significativos.
    """
    data = tablib.Dataset()
    for row in realization.entries:
        data.append([format_float(x) for x in row])
    return data.export("csv")


@dataclass(frozen=True)
class ProductSpec:
    """
    Descrição completa de um experimento com o produto `X_n o Y_n`.

    `shared_seed` é um modo de diagnóstico: Y usa a mesma semente de X (com
    ligações iguais, `Z` tem as entradas de X ao quadrado).
    """

    linkX: object
    linkY: object
    distX: InputDistribution
    distY: InputDistribution
    n: int
    master_seed: int
    trials: int
    shared_seed: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ArgumentError("Dimensão inválida: {0}".format(self.n))
        if self.trials < 1:
            raise ArgumentError("Número de tentativas inválido: {0}".format(self.trials))

    def seeds(self, trial):
        """
        Retorna o par de sementes `(X, Y)` da tentativa `trial`.
        """
        seedX = child_seed(self.master_seed, ROLE_X, trial)
        if self.shared_seed:
            return seedX, seedX
        return seedX, child_seed(self.master_seed, ROLE_Y, trial)

    def realize_trial(self, trial):
        """
        Realiza `n^{-1/2} X_n o Y_n` da tentativa `trial`.
        """
        seedX, seedY = self.seeds(trial)
        X = realize(self.linkX, self.distX, self.n, seedX)
        Y = realize(self.linkY, self.distY, self.n, seedY)
        logger.debug("Tentativa {0}: {1} o {2}, n={3}".format(trial, self.linkX, self.linkY, self.n))
        return scale(schur_product(X, Y))
