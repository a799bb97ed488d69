# -*- encoding: utf-8 -*-
"""
Quantidades teóricas de referência: momentos do semicírculo, montagem
dos momentos a partir de tabelas de `p(w)`, a cota sub-gaussiana dos
momentos, o diagnóstico de Carleman e a CDF do semicírculo.
"""

import math
import logging
from fractions import Fraction
from dataclasses import dataclass

import numpy
from scipy import integrate

from schurlsd.utils import ArgumentError
from schurlsd.circuits import NODE_BUDGET, p_table
from schurlsd.words import (Word, canonicalize, enumerate_pair_matched,
                            catalan_number)

logger = logging.getLogger(__name__)

__all__ = [
    "MAX_ORDER", "MomentSequence", "CarlemanReport", "semicircle_moments",
    "assemble_moments", "assembled_moments", "moment_bound",
    "carleman_diagnostic", "semicircle_cdf", "semicircle_pdf",
    "semicircle_moment_by_quadrature",
]

MAX_ORDER = 30

CARLEMAN_SUSPECT_RATIO = 0.25
"""
Se o último termo da série de Carleman cai abaixo dessa fração do
primeiro, a tendência é marcada como "suspect".
"""


def _exact_string(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


@dataclass(frozen=True)
class MomentSequence:
    """
    Os momentos `beta_1 .. beta_{h_max}` de uma lei.

    `values[h-1]` é `beta_h`; os valores podem ser `int`, `Fraction` ou
    `float`. `source` é "semicircle", "assembled-from-p" ou "empirical".
    """

    values: tuple
    source: str

    def __post_init__(self):
        for h, value in enumerate(self.values, start=1):
            if h % 2 == 0 and value < 0:
                raise ArgumentError("Momento par negativo: beta_{0} = {1}".format(h, value))

    @property
    def h_max(self):
        return len(self.values)

    def beta(self, h):
        if not 1 <= h <= self.h_max:
            raise ArgumentError("beta_{0} fora da sequência (h_max = {1})".format(h, self.h_max))
        return self.values[h - 1]

    def is_positive_semidefinite(self, tol=1e-9):
        """
        Verifica se a matriz de Hankel `(beta_{i+j})`, com `beta_0 = 1`, é
        positiva semidefinida, condição necessária pra sequência ser de
        momentos de uma lei.
        """
        if self.h_max > 8:
            raise ArgumentError("A verificação de Hankel vai só até h_max = 8")
        moments = [1.0] + [float(v) for v in self.values]
        size = self.h_max // 2 + 1
        matrix = numpy.array([[moments[i + j] for j in range(size)] for i in range(size)])
        return bool(numpy.linalg.eigvalsh(matrix).min() >= -tol * max(1.0, abs(matrix).max()))

    def to_json(self):
        """
        Lista de registros `{h, value, exact}`; `exact` é a forma racional
        exata quando ela existe.
        """
        return [{"h": h, "value": float(v), "exact": _exact_string(v)}
                for h, v in enumerate(self.values, start=1)]


def _check_max_order(h, name="h_max"):
    if not 1 <= h <= MAX_ORDER:
        raise ArgumentError("{0} fora de [1, {1}]: {2}".format(name, MAX_ORDER, h))


def semicircle_moments(h_max):
    """
    Momentos do semicírculo padrão: 0 nas ordens ímpares e o número de
    Catalan `C_k` na ordem `2k`. Aritmética inteira exata.
    """
    _check_max_order(h_max)
    values = tuple(0 if h % 2 else catalan_number(h // 2) for h in range(1, h_max + 1))
    return MomentSequence(values, "semicircle")


def _as_word(key):
    if isinstance(key, Word):
        return key
    return canonicalize(key)


def _as_value(value):
    return getattr(value, "limit", value)


def assemble_moments(p_table, two_k, joint=False, compatible=False):
    """
    Soma `p(w)` sobre as palavras pareadas de comprimento `two_k` (ou
    `p_Z(w, w')` sobre os pares, com `joint=True`).

    Argumentos:
        - p_table: `dict` de palavra (`Word` ou texto), ou par de palavras,
          pra valor; aceita também objetos `PEstimate`
        - two_k: o comprimento
        - joint: se as chaves são pares `(w, w')`
        - compatible: com `joint`, permite tabelas só com a diagonal
          (fora dela `p_Z` é 0 pra ligações compatíveis)

    Levanta `ArgumentError` citando a primeira palavra (ou par) que falta.
    """
    words = enumerate_pair_matched(two_k)

    if not joint:
        table = {_as_word(k): _as_value(v) for k, v in p_table.items()}
        missing = [w for w in words if w not in table]
        if missing:
            raise ArgumentError("Falta p({0}) na tabela".format(missing[0]))
        return sum(table[w] for w in words)

    table = {(_as_word(a), _as_word(b)): _as_value(v) for (a, b), v in p_table.items()}
    total = 0
    for a in words:
        for b in words:
            if (a, b) in table:
                total += table[(a, b)]
            elif a == b or not compatible:
                raise ArgumentError("Falta p_Z({0}, {1}) na tabela".format(a, b))
    return total


def assembled_moments(link, h_max, ladders, budget=NODE_BUDGET, workers=1):
    """
    Monta a sequência de momentos da LSD de uma ligação (`L_T`, `L_H`,
    `L_RC`, ...) a partir das tabelas de `p(w)` estimadas pela contagem de
    circuitos. Momentos ímpares são 0.

    Argumentos:
        - link: a ligação
        - h_max: maior ordem
        - ladders: `dict` `2k -> escada de n`
    """
    _check_max_order(h_max)
    values = []
    for h in range(1, h_max + 1):
        if h % 2:
            values.append(0)
            continue
        if h not in ladders:
            raise ArgumentError("Sem escada de n pra 2k = {0}".format(h))
        table = p_table(link, h, ladders[h], budget, workers)
        values.append(assemble_moments(table, h))
        logger.info("beta_{0}({1}) montado: {2:.6f}".format(h, link.name, values[-1]))
    return MomentSequence(tuple(values), "assembled-from-p")


def moment_bound(two_k, delta):
    """
    A cota `(2k)! / (2^k k!) * delta^k` dos momentos pares, exata
    (`Fraction`).
    """
    if two_k % 2:
        raise ArgumentError("Ordem ímpar: {0}".format(two_k))
    _check_max_order(two_k, "2k")
    if delta < 1:
        raise ArgumentError("delta precisa ser >= 1 (recebido {0})".format(delta))
    k = two_k // 2
    return Fraction(math.factorial(two_k), 2 ** k * math.factorial(k)) * delta ** k


@dataclass(frozen=True)
class CarlemanReport:
    partial_sum: float
    terms: tuple
    lower_bound: float
    trend: str


def carleman_diagnostic(seq, k_max):
    """
    Soma parcial `sum_{k <= k_max} beta_{2k}^{-1/(2k)}` da série de
    Carleman. É só um diagnóstico: a divergência não pode ser decidida
    numericamente.

    O relatório traz a cota inferior `k_max * t_{k_max}` (os termos são
    não-crescentes pra leis de verdade) e a tendência: "suspect" quando o
    último termo é menor que `CARLEMAN_SUSPECT_RATIO` vezes o primeiro,
    senão "diverging".
    """
    if k_max < 1 or 2 * k_max > seq.h_max:
        raise ArgumentError("k_max = {0} fora da sequência (h_max = {1})".format(k_max, seq.h_max))

    terms = []
    for k in range(1, k_max + 1):
        beta = seq.beta(2 * k)
        if beta <= 0:
            raise ArgumentError("Momento par nulo: beta_{0} = {1}".format(2 * k, beta))
        # Por logaritmos: beta pode ser um inteiro enorme.
        terms.append(math.exp(-math.log(beta) / (2 * k)))

    trend = "suspect" if terms[-1] < CARLEMAN_SUSPECT_RATIO * terms[0] else "diverging"
    return CarlemanReport(partial_sum=math.fsum(terms), terms=tuple(terms),
                          lower_bound=k_max * terms[-1], trend=trend)


def semicircle_pdf(x):
    """
    Densidade `sqrt(4 - x^2) / (2 pi)` em `[-2, 2]`, 0 fora.
    """
    x = numpy.asarray(x, dtype=numpy.float64)
    result = numpy.sqrt(numpy.clip(4.0 - x * x, 0.0, None)) / (2 * math.pi)
    return float(result) if result.ndim == 0 else result


def semicircle_cdf(x):
    """
    CDF do semicírculo padrão, pela forma fechada
    `1/2 + x sqrt(4 - x^2) / (4 pi) + arcsin(x/2) / pi` em `[-2, 2]`.
    Aceita escalares ou arrays.
    """
    x = numpy.clip(numpy.asarray(x, dtype=numpy.float64), -2.0, 2.0)
    result = 0.5 + x * numpy.sqrt(4.0 - x * x) / (4 * math.pi) + numpy.arcsin(x / 2) / math.pi
    result = numpy.clip(result, 0.0, 1.0)
    return float(result) if result.ndim == 0 else result


def semicircle_moment_by_quadrature(h):
    """
    `int x^h dF(x)` do semicírculo por quadratura (`scipy.integrate.quad`).
    """
    if h < 1:
        raise ArgumentError("Ordem inválida: {0}".format(h))
    value, _ = integrate.quad(lambda x: x ** h * semicircle_pdf(x), -2.0, 2.0,
                              epsabs=1e-12, epsrel=1e-12)
    return value
