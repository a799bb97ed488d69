# -*- encoding: utf-8 -*-
"""
Funções de ligação (*link functions*) de matrizes simétricas com padrão.

Uma função de ligação `L` associa a cada posição `(i, j)` de uma matriz
`n x n` um *valor de ligação*; a matriz com padrão correspondente é
`A_n = n^{-1/2} (x_{L(i,j)})`, ou seja, posições com o mesmo valor de
ligação recebem a mesma variável de entrada.

Como usar esse módulo
---------------------

>>> from schurlsd.linkfn import TOEPLITZ, eval_link, profile
>>> eval_link(TOEPLITZ, 3, 7, 10)
Scalar(v=4)
>>> profile(TOEPLITZ, 4)
LinkProfile(delta=2, kn=4, alphan=6, n=4)

Funções compostas são criadas com `compose` ou pelo nome, com
`parse_link("square(toeplitz)")`.

Os índices são sempre de 1 a n nas funções públicas; internamente as
grades de valores (`value_grid`) são indexadas a partir de 0.
"""

import re
import math
import logging
import operator
import functools
from fractions import Fraction
from dataclasses import dataclass, field

import numpy

from schurlsd.utils import ArgumentError, EvaluationError

logger = logging.getLogger(__name__)

__all__ = [
    "Scalar", "Pair", "PowerPair", "Transform", "LinkFunction",
    "LinkProfile", "ValueGrid",
    "WIGNER", "TOEPLITZ", "HANKEL", "SYMCIRC", "REVCIRC", "DSYMHANKEL",
    "BUILTIN_LINKS",
    "eval_link", "value_grid", "profile", "profile_product", "compose",
    "is_injective_on_range", "delta_ladder", "induced_transform",
    "parse_link",
]


def _half(doubled):
    """
    Retorna `doubled / 2` de forma exata: um `int` quando `doubled` é
    par, um `Fraction` quando é ímpar.
    """
    if doubled % 2 == 0:
        return doubled // 2
    return Fraction(doubled, 2)


@dataclass(frozen=True)
class Scalar:
    """
    Valor de ligação escalar, não-negativo.

    `v` é um `int`; tabelas definidas pelo usuário podem usar `Fraction`.
    Como `Fraction(4, 2) == 2` e os dois têm o mesmo hash, a igualdade
    continua exata.
    """

    v: object

    def __post_init__(self):
        if self.v < 0:
            raise ArgumentError("Valor escalar negativo: {0}".format(self.v))

    def sort_key(self):
        return (0, self.v)

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class Pair:
    """
    Valor de ligação par-ordenado `(a, b)`, com `1 <= a <= b`; é o valor da
    ligação de Wigner.
    """

    a: int
    b: int

    def __post_init__(self):
        if not 1 <= self.a <= self.b:
            raise ArgumentError("Par inválido: ({0}, {1})".format(self.a, self.b))

    def sort_key(self):
        return (1, self.a, self.b)

    def __str__(self):
        return "({0},{1})".format(self.a, self.b)


@dataclass(frozen=True)
class PowerPair:
    """
    O valor `base_a**i * base_b**j`, guardado pelos expoentes.

    Com `base_a` e `base_b` coprimos, a fatoração única garante que dois
    `PowerPair` com as mesmas bases são iguais se e só se os expoentes são
    iguais, sem calcular potências enormes.
    """

    base_a: int
    base_b: int
    i: int
    j: int

    def sort_key(self):
        return (2, self.base_a, self.base_b, self.i, self.j)

    def value(self):
        """
        O valor inteiro, calculado de forma exata.
        """
        return self.base_a ** self.i * self.base_b ** self.j

    def __str__(self):
        return "{0}^{1}*{2}^{3}".format(self.base_a, self.i, self.base_b, self.j)


@dataclass(frozen=True)
class Transform:
    """
    Uma transformação `rho` dos valores de ligação.

    Tipos:
        - "square": `Scalar(t) -> Scalar(t**2)`
        - "coprimepower": `Pair(i, j) -> PowerPair(a, b, i, j)`
        - "table": uma tabela explícita `LinkValue -> LinkValue`

    O atributo `injective` é o que quem criou a transformação *declara*;
    `is_injective_on_range` é quem verifica.
    """

    kind: str
    a: int = 0
    b: int = 0
    table: tuple = ()
    injective: bool = False
    _lookup: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.kind not in ("square", "coprimepower", "table"):
            raise ArgumentError("Transformação desconhecida: {0}".format(self.kind))
        if self.kind == "table":
            object.__setattr__(self, "_lookup", dict(self.table))

    @classmethod
    def square(cls):
        return cls("square", injective=True)

    @classmethod
    def coprime_power(cls, a, b):
        """
        Cria a transformação `(i, j) -> a**i * b**j`.

        Argumentos:
            - a, b: inteiros positivos e coprimos.
        """
        if a < 1 or b < 1 or a == b or math.gcd(a, b) != 1:
            raise ArgumentError("Bases não coprimas: {0}, {1}".format(a, b))
        return cls("coprimepower", a=a, b=b, injective=True)

    @classmethod
    def user_table(cls, mapping, injective=False):
        """
        Cria uma transformação a partir de um `dict` (ou sequência de pares)
        `LinkValue -> LinkValue`.
        """
        items = mapping.items() if hasattr(mapping, "items") else mapping
        table = tuple(sorted(items, key=lambda item: item[0].sort_key()))
        return cls("table", table=table, injective=injective)

    @property
    def name(self):
        if self.kind == "coprimepower":
            return "coprimepower({0},{1})".format(self.a, self.b)
        return self.kind

    def apply(self, value):
        """
        Aplica a transformação a um valor de ligação.

        Levanta `EvaluationError` (com o valor no texto) quando a
        transformação não está definida nesse valor.
        """
        if self.kind == "square":
            if isinstance(value, Scalar):
                return Scalar(value.v * value.v)
        elif self.kind == "coprimepower":
            if isinstance(value, Pair):
                return PowerPair(self.a, self.b, value.a, value.b)
        else:
            try:
                return self._lookup[value]
            except KeyError:
                pass

        raise EvaluationError("Transformação {0} não definida em {1}".format(self.name, value))


@dataclass(frozen=True)
class LinkFunction:
    """
    Uma função de ligação simétrica.

    `kind` é um dos nomes de `BUILTIN_LINKS` ou "composed"; no último caso
    `transform` e `base` descrevem `transform o base`. A dimensão `n` é
    passada a cada avaliação, não é guardada.
    """

    kind: str
    transform: Transform = None
    base: "LinkFunction" = None

    def __post_init__(self):
        if self.kind == "composed":
            if self.transform is None or self.base is None:
                raise ArgumentError("Ligação composta sem transformação ou base")
        elif self.kind not in _BUILTIN_KINDS:
            raise ArgumentError("Função de ligação desconhecida: {0}".format(self.kind))

    @property
    def name(self):
        if self.kind != "composed":
            return self.kind
        if self.transform.kind == "coprimepower":
            return "coprimepower({0},{1},{2})".format(self.transform.a, self.transform.b, self.base.name)
        return "{0}({1})".format(self.transform.kind, self.base.name)

    def __str__(self):
        return self.name


_BUILTIN_KINDS = ("wigner", "toeplitz", "hankel", "symcirc", "revcirc", "dsymhankel")

WIGNER = LinkFunction("wigner")
TOEPLITZ = LinkFunction("toeplitz")
HANKEL = LinkFunction("hankel")
SYMCIRC = LinkFunction("symcirc")
REVCIRC = LinkFunction("revcirc")
DSYMHANKEL = LinkFunction("dsymhankel")

BUILTIN_LINKS = {link.kind: link for link in (WIGNER, TOEPLITZ, HANKEL, SYMCIRC, REVCIRC, DSYMHANKEL)}
"""
As seis ligações clássicas, indexadas pelo nome usado em configurações
e na linha de comando.
"""


@dataclass(frozen=True)
class LinkProfile:
    """
    Quantidades estruturais de uma ligação numa dimensão `n`:

        - delta: máximo, sobre as linhas, do número de vezes que um mesmo
          valor aparece numa linha (a Propriedade B, nesse `n`)
        - kn: número de valores distintos
        - alphan: multiplicidade máxima de um valor
    """

    delta: int
    kn: int
    alphan: int
    n: int


def _check_index(value, n, name):
    try:
        value = operator.index(value)
    except TypeError:
        raise ArgumentError("Índice {0} não é inteiro: {1!r}".format(name, value))
    if not 1 <= value <= n:
        raise ArgumentError("Índice {0}={1} fora de [1, {2}]".format(name, value, n))
    return value


def _eval_builtin(kind, i, j, n):
    if kind == "wigner":
        return Pair(min(i, j), max(i, j))
    if kind == "toeplitz":
        return Scalar(abs(i - j))
    if kind == "hankel":
        return Scalar(i + j)
    if kind == "symcirc":
        return Scalar(_half(n - abs(n - 2 * abs(i - j))))
    if kind == "revcirc":
        return Scalar((i + j) % n)
    # dsymhankel
    return Scalar(_half(n - abs(n - 2 * ((i + j) % n))))


def eval_link(link, i, j, n):
    """
    Avalia a função de ligação na posição `(i, j)` de uma matriz `n x n`.

    Argumentos:
        - link: objeto `LinkFunction`
        - i, j: índices, de 1 a n
        - n: a dimensão

    Levanta `ArgumentError` se um índice estiver fora do intervalo e
    `EvaluationError` se a transformação de uma ligação composta não
    estiver definida no valor produzido pela base.
    """
    n = operator.index(n)
    if n < 1:
        raise ArgumentError("Dimensão inválida: {0}".format(n))
    i = _check_index(i, n, "i")
    j = _check_index(j, n, "j")

    if link.kind == "composed":
        return link.transform.apply(eval_link(link.base, i, j, n))
    return _eval_builtin(link.kind, i, j, n)


class ValueGrid:
    """
    A grade de valores de uma ligação numa dimensão `n`.

    Atributos:
        - ids: array `n x n` (somente leitura), `ids[i-1, j-1]` é o índice do
          valor `L(i, j)` em `values`
        - values: tupla com os valores distintos, em ordem crescente
    """

    def __init__(self, ids, values):
        ids.setflags(write=False)
        self.ids = ids
        self.values = values

    @property
    def n(self):
        return self.ids.shape[0]

    def __len__(self):
        return len(self.values)


def _builtin_keys(kind, n):
    """
    Chaves inteiras exatas, crescentes com o valor de ligação, pra todas as
    posições de uma ligação clássica (vetorizado). Pras ligações com `n/2`
    a chave é o valor dobrado.
    """
    i = numpy.arange(1, n + 1, dtype=numpy.int64)[:, None]
    j = numpy.arange(1, n + 1, dtype=numpy.int64)[None, :]

    if kind == "wigner":
        return numpy.minimum(i, j) * (n + 1) + numpy.maximum(i, j)
    if kind == "toeplitz":
        return numpy.abs(i - j)
    if kind == "hankel":
        return i + j
    if kind == "symcirc":
        return n - numpy.abs(n - 2 * numpy.abs(i - j))
    if kind == "revcirc":
        return (i + j) % n
    return n - numpy.abs(n - 2 * ((i + j) % n))


def _key_to_value(kind, key, n):
    key = int(key)
    if kind == "wigner":
        return Pair(key // (n + 1), key % (n + 1))
    if kind in ("symcirc", "dsymhankel"):
        return Scalar(_half(key))
    return Scalar(key)


@functools.lru_cache(maxsize=16)
def value_grid(link, n):
    """
    Calcula a grade de valores (`ValueGrid`) da ligação na dimensão `n`.

    As ligações clássicas são avaliadas de forma vetorizada; uma ligação
    composta aplica a transformação somente aos valores distintos da
    base. O resultado é guardado em cache por `(link, n)`.
    """
    n = operator.index(n)
    if n < 1:
        raise ArgumentError("Dimensão inválida: {0}".format(n))

    if link.kind != "composed":
        keys = _builtin_keys(link.kind, n)
        unique_keys, ids = numpy.unique(keys, return_inverse=True)
        values = tuple(_key_to_value(link.kind, key, n) for key in unique_keys)
        return ValueGrid(ids.reshape(n, n), values)

    base = value_grid(link.base, n)
    images = [link.transform.apply(v) for v in base.values]
    values = tuple(sorted(set(images), key=lambda v: v.sort_key()))
    position = {v: index for index, v in enumerate(values)}
    remap = numpy.array([position[v] for v in images], dtype=numpy.int64)
    logger.debug("Grade de {0} em n={1}: {2} valores".format(link.name, n, len(values)))
    return ValueGrid(remap[base.ids], values)


def _max_row_multiplicity(ids, kn):
    n = ids.shape[0]
    row_keys = numpy.arange(n, dtype=numpy.int64)[:, None] * kn + ids
    return int(numpy.bincount(row_keys.ravel()).max())


def profile(link, n):
    """
    Calcula `LinkProfile` (delta, kn, alphan) por enumeração exaustiva das
    n² posições.

    O delta é o da dimensão `n` (máximo sobre as linhas), não o supremo
    sobre todos os `n`; veja `delta_ladder`.
    """
    if n < 2:
        raise ArgumentError("profile exige n >= 2 (recebido {0})".format(n))

    grid = value_grid(link, n)
    kn = len(grid)
    alphan = int(numpy.bincount(grid.ids.ravel()).max())
    return LinkProfile(delta=_max_row_multiplicity(grid.ids, kn), kn=kn, alphan=alphan, n=n)


def profile_product(linkX, linkY, n):
    """
    `LinkProfile` do produto de Schur-Hadamard: `kn` conta os pares de
    valores `(L_X, L_Y)` distintos e `alphan` é a multiplicidade máxima de
    um par.

    O campo `delta` recebe `min(delta_X, delta_Y)`, a cota usada na
    estimativa dos momentos do produto (não é um supremo sobre linhas).
    """
    if n < 2:
        raise ArgumentError("profile_product exige n >= 2 (recebido {0})".format(n))

    gridX = value_grid(linkX, n)
    gridY = value_grid(linkY, n)
    pair_keys = gridX.ids * len(gridY) + gridY.ids
    _, counts = numpy.unique(pair_keys, return_counts=True)

    delta = min(profile(linkX, n).delta, profile(linkY, n).delta)
    return LinkProfile(delta=delta, kn=len(counts), alphan=int(counts.max()), n=n)


def compose(transform, base):
    """
    Retorna a ligação `transform o base`.

    O domínio da transformação só é verificado na avaliação.
    """
    return LinkFunction("composed", transform=transform, base=base)


def is_injective_on_range(transform, base, n):
    """
    Retorna `True` se a transformação não tem colisões na imagem da
    ligação `base` na dimensão `n`, e `False` se tem (ou se não está
    definida em algum valor dessa imagem).
    """
    if n < 2:
        raise ArgumentError("is_injective_on_range exige n >= 2 (recebido {0})".format(n))

    values = value_grid(base, n).values
    try:
        images = {transform.apply(v) for v in values}
    except EvaluationError as exc:
        logger.debug("Transformação fora do domínio: {0}".format(exc))
        return False
    return len(images) == len(values)


def delta_ladder(link, ns):
    """
    Calcula o delta da ligação em cada `n` de uma escada crescente.

    Retorna uma tupla `(deltas, grows)`, onde `deltas` é uma lista de
    pares `(n, delta)` e `grows` é `True` quando o maior delta da metade
    superior da escada passa o maior da metade inferior, sinal de que a
    Propriedade B pode estar falhando.
    """
    ns = sorted(ns)
    if len(ns) < 2:
        raise ArgumentError("A escada precisa de pelo menos 2 valores de n")

    deltas = [(n, profile(link, n).delta) for n in ns]
    half = len(deltas) // 2
    lower = max(d for _, d in deltas[:half])
    upper = max(d for _, d in deltas[half:])
    grows = upper > lower
    if grows:
        logger.warning("Delta de {0} cresce com n: {1}".format(link.name, deltas))
    return deltas, grows


def induced_transform(base, target, n):
    """
    Constrói a tabela `rho` tal que `target = rho o base` na dimensão `n`.

    Serve pras transformações que dependem de `n`, como a
    circulante simétrica como função da Toeplitz, `rho(t) = n/2 - |n/2 - t|`.

    Levanta `ArgumentError` se `base` não determina `target` nesse `n`
    (duas posições com o mesmo valor de `base` e valores diferentes de
    `target`).
    """
    gridB = value_grid(base, n)
    gridT = value_grid(target, n)

    pairs = numpy.unique(numpy.stack([gridB.ids.ravel(), gridT.ids.ravel()]), axis=1)
    if pairs.shape[1] != len(gridB):
        raise ArgumentError("{0} não é função de {1} em n={2}".format(target.name, base.name, n))

    mapping = {gridB.values[b]: gridT.values[t] for b, t in pairs.T}
    injective = len(set(mapping.values())) == len(mapping)
    return Transform.user_table(mapping, injective=injective)


_COMPOSED_RE = re.compile(r"^(\w+)\((.*)\)$")


def parse_link(name):
    """
    Interpreta o nome de uma ligação, como usado nas configurações:
    "wigner", "toeplitz", "hankel", "symcirc", "revcirc", "dsymhankel",
    "square(<ligação>)" e "coprimepower(a,b,<ligação>)".

    Levanta `ArgumentError` com o trecho problemático.
    """
    text = str(name).strip().lower().replace(" ", "")
    if text in BUILTIN_LINKS:
        return BUILTIN_LINKS[text]

    match = _COMPOSED_RE.match(text)
    if not match:
        raise ArgumentError("Função de ligação desconhecida: {0!r}".format(name))

    head, inner = match.groups()
    if head == "square":
        return compose(Transform.square(), parse_link(inner))
    if head == "coprimepower":
        parts = inner.split(",", 2)
        if len(parts) != 3:
            raise ArgumentError("Uso: coprimepower(a,b,<ligação>); recebido {0!r}".format(name))
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ArgumentError("Bases inválidas em {0!r}".format(name))
        return compose(Transform.coprime_power(a, b), parse_link(parts[2]))

    raise ArgumentError("Transformação desconhecida: {0!r}".format(head))
