# -*- encoding: utf-8 -*-
"""
Contagem exata de classes de circuitos e as verificações das relações
entre funções de ligação.

Um circuito de comprimento `h` é uma sequência de vértices
`pi(0), ..., pi(h)` com `pi(h) = pi(0)`. Pra uma palavra `w`, `Pi*(w)` é o
conjunto dos circuitos em que `w[i] = w[j]` implica
`L(pi(i-1), pi(i)) = L(pi(j-1), pi(j))`.

A busca preenche as posições da esquerda pra direita, com todos os
circuitos de um mesmo prefixo guardados numa matriz do numpy (uma linha
por circuito parcial):

    - numa posição geradora (primeira ocorrência de uma letra) cada linha
      se abre em `n` linhas;
    - numa posição não geradora o valor de ligação é conhecido, e os
      candidatos saem de uma tabela `(linha, valor) -> colunas` montada
      uma vez por `(ligação, n)`: são no máximo `delta` (Propriedade B).

A busca é dividida pelo primeiro vértice `pi(0)`, e cada ramo pode rodar
numa thread. Os índices dos vértices são de 0 a n-1 internamente.
"""

import math
import logging
import functools
import itertools
from fractions import Fraction
from dataclasses import dataclass, field
from concurrent.futures import ThreadPoolExecutor

import numpy

from schurlsd.utils import ArgumentError, BudgetExceeded
from schurlsd.linkfn import (WIGNER, TOEPLITZ, SYMCIRC, value_grid, eval_link,
                             compose, is_injective_on_range)
from schurlsd.words import enumerate_pair_matched, is_catalan

logger = logging.getLogger(__name__)

__all__ = [
    "NODE_BUDGET", "BRUTE_FORCE_BUDGET", "IMPLIES_MAX_N", "CircuitClassCount", "PEstimate",
    "CheckReport", "count_pi_star", "count_pi_prime", "count_pi_star_joint",
    "count_pi_prime_joint", "brute_force_count", "estimate_p", "p_table",
    "check_implies_wigner", "check_compatible", "check_leadsto_wigner",
    "check_invariance_containment", "diagnose_multiplicity",
]

NODE_BUDGET = 10 ** 9
"""
Número máximo estimado de nós de uma busca.
"""

BRUTE_FORCE_BUDGET = 2 * 10 ** 7
"""
Número máximo de circuitos da enumeração bruta (`n^h`).
"""

IMPLIES_MAX_N = 64
"""
Maior `n` aceito por `check_implies_wigner`.
"""


@dataclass(frozen=True)
class CircuitClassCount:
    """
    Resultado exato de uma contagem.

    Atributos:
        - words: tupla com uma palavra, ou o par `(w, w')`
        - links: tupla com os nomes das ligações
        - n: a dimensão
        - count: o número exato de circuitos
        - normalizer_exponent: `1 + h/2` (ou seja, `1 + k` com `h = 2k`)
        - kind: "pi_star", "pi_prime", "joint" ou "prime_joint"
    """

    words: tuple
    links: tuple
    n: int
    count: int
    normalizer_exponent: Fraction
    kind: str = "pi_star"

    @property
    def normalized(self):
        """
        `count / n^(1+k)`.
        """
        return self.count / self.n ** float(self.normalizer_exponent)

    def property_b_bound(self, delta):
        """
        A cota `n^(|w|+1) * delta^(h-|w|)` da primeira palavra.
        """
        w = self.words[0]
        return self.n ** (w.num_letters + 1) * delta ** (w.h - w.num_letters)


@dataclass(frozen=True)
class PEstimate:
    """
    Extrapolação de `count / n^(1+k)` pra `n -> infinito`, pelo ajuste
    `p + c/n` em mínimos quadrados.

    `limit` é o intercepto limitado a >= 0; `raw_limit` é o intercepto do
    ajuste, sem corte.
    """

    ns: tuple
    counts: tuple
    values: tuple
    limit: float
    raw_limit: float
    slope: float
    residual: float

    def matches(self, expected, tol):
        """
        Diz se o intercepto do ajuste, sem corte, está a `tol` de
        `expected`.
        """
        return abs(self.raw_limit - expected) <= tol


@dataclass
class CheckReport:
    """
    Relatório de uma verificação: uma lista de registros (dicionários
    prontos pra JSON), cada um com a chave "pass".
    """

    relation: str
    records: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r["pass"] for r in self.records)


class _LinkRule(object):
    """
    Restrição `L(pi(i-1), pi(i)) = L(pi(a-1), pi(a))`, onde `a` é a primeira
    ocorrência da letra da posição `i`.
    """

    def __init__(self, link, n, first):
        self.ids = value_grid(link, n).ids
        self.table = _candidate_table(link, n)
        self.first = first
        self.width = self.table.shape[2]

    def _required(self, rows):
        a = self.first
        return self.ids[rows[:, a - 1], rows[:, a]]

    def candidates(self, rows, i):
        return self.table[rows[:, i - 1], self._required(rows)]

    def accepts(self, rows, cur, i):
        return self.ids[rows[:, i - 1], cur] == self._required(rows)


class _SlopeRule(object):
    """
    Restrição `s(i) + s(a) = 0` (ou, com `wrap`, `s(i) + s(a)` em
    `{0, n, -n}`), com `s(i) = pi(i) - pi(i-1)`.
    """

    def __init__(self, n, wrap, first):
        self.n = n
        self.wrap = wrap
        self.first = first
        self.width = 3 if wrap else 1

    def _slope(self, rows):
        a = self.first
        return rows[:, a] - rows[:, a - 1]

    def candidates(self, rows, i):
        base = rows[:, i - 1] - self._slope(rows)
        if self.wrap:
            cand = numpy.stack([base, base - self.n, base + self.n], axis=1)
        else:
            cand = base[:, None]
        return numpy.where((cand >= 0) & (cand < self.n), cand, -1)

    def accepts(self, rows, cur, i):
        total = cur - rows[:, i - 1] + self._slope(rows)
        ok = total == 0
        if self.wrap:
            ok |= numpy.abs(total) == self.n
        return ok


@functools.lru_cache(maxsize=32)
def _candidate_table(link, n):
    """
    Tabela `table[linha, valor, :]` com as colunas (de 0 a n-1) em que a
    linha tem esse valor de ligação, completada com -1.
    """
    grid = value_grid(link, n)
    kn = len(grid)

    keys = (numpy.arange(n, dtype=numpy.int64)[:, None] * kn + grid.ids).ravel()
    cols = numpy.tile(numpy.arange(n, dtype=numpy.int64), n)
    order = numpy.argsort(keys, kind="stable")
    keys, cols = keys[order], cols[order]

    _, start, counts = numpy.unique(keys, return_index=True, return_counts=True)
    rank = numpy.arange(len(keys)) - numpy.repeat(start, counts)

    table = numpy.full((n * kn, int(counts.max())), -1, dtype=numpy.int64)
    table[keys, rank] = cols
    table.setflags(write=False)
    return table.reshape(n, kn, -1)


def _word_rules(word, make_rule):
    rules = [[] for _ in range(word.h + 1)]
    for i, first in enumerate(word.first_occurrences(), start=1):
        if first != i:
            rules[i].append(make_rule(first))
    return rules


def _merge(*rule_lists):
    return [sum(parts, []) for parts in zip(*rule_lists)]


def _count_branch(v, rules, h, n):
    rows = numpy.array([[v]], dtype=numpy.int64)

    for i in range(1, h):
        active = sorted(rules[i], key=lambda r: r.width)
        if active:
            generator, others = active[0], active[1:]
            cand = generator.candidates(rows, i)
            rows = numpy.repeat(rows, cand.shape[1], axis=0)
            cur = cand.ravel()
            keep = cur >= 0
            rows, cur = rows[keep], cur[keep]
        else:
            others = []
            m = len(rows)
            rows = numpy.repeat(rows, n, axis=0)
            cur = numpy.tile(numpy.arange(n, dtype=numpy.int64), m)

        for rule in others:
            keep = rule.accepts(rows, cur, i)
            rows, cur = rows[keep], cur[keep]

        if not len(rows):
            return 0
        rows = numpy.column_stack([rows, cur])

    # Fechamento: pi(h) = pi(0).
    cur = rows[:, 0]
    keep = numpy.ones(len(rows), dtype=bool)
    for rule in rules[h]:
        keep &= rule.accepts(rows, cur, h)
    return int(keep.sum())


def _search(rules, h, n, budget, workers):
    free = sum(1 for i in range(1, h) if not rules[i])
    estimate = n ** (free + 1)
    if estimate > budget:
        raise BudgetExceeded("Busca estimada em {0} nós (n={1}, {2} posições livres), "
                             "acima do limite {3}".format(estimate, n, free, budget))

    if workers <= 1:
        return sum(_count_branch(v, rules, h, n) for v in range(n))

    with ThreadPoolExecutor(max_workers=workers) as executor:
        return sum(executor.map(lambda v: _count_branch(v, rules, h, n), range(n)))


def _exponent(word):
    return Fraction(word.h, 2) + 1


def _check_n(n):
    if n < 1:
        raise ArgumentError("Dimensão inválida: {0}".format(n))


def count_pi_star(link, w, n, budget=NODE_BUDGET, workers=1):
    """
    Conta exatamente os circuitos de `Pi*(w)` da ligação `link` em
    dimensão `n`.

    Argumentos:
        - link: objeto `LinkFunction`
        - w: objeto `Word`
        - n: a dimensão
        - budget: limite de nós estimados (levanta `BudgetExceeded`)
        - workers: threads usadas nos ramos de `pi(0)`
    """
    _check_n(n)
    rules = _word_rules(w, lambda first: _LinkRule(link, n, first))
    count = _search(rules, w.h, n, budget, workers)
    return CircuitClassCount((w,), (link.name,), n, count, _exponent(w), "pi_star")


def _wrap_for(link):
    if link == TOEPLITZ:
        return False
    if link == SYMCIRC:
        return True
    raise ArgumentError("Pi' só é definido pra toeplitz e symcirc (recebido {0})".format(link.name))


def _check_pair_matched(w):
    if not w.is_pair_matched():
        raise ArgumentError("Pi' exige palavra pareada (recebido {0})".format(w))


def count_pi_prime(link, w, n, budget=NODE_BUDGET, workers=1):
    """
    Conta `Pi'(w)`: circuitos em que `w[i] = w[j]` implica
    `s(i) + s(j) = 0` (Toeplitz) ou `s(i) + s(j)` em `{0, n, -n}`
    (circulante simétrica), com `s(i) = pi(i) - pi(i-1)`.
    """
    wrap = _wrap_for(link)
    _check_pair_matched(w)
    _check_n(n)
    rules = _word_rules(w, lambda first: _SlopeRule(n, wrap, first))
    count = _search(rules, w.h, n, budget, workers)
    return CircuitClassCount((w,), (link.name,), n, count, _exponent(w), "pi_prime")


def _check_same_length(w, w2):
    if w.h != w2.h:
        raise ArgumentError("Palavras de comprimentos diferentes: {0} e {1}".format(w, w2))


def count_pi_star_joint(linkX, linkY, w, w2, n, budget=NODE_BUDGET, workers=1):
    """
    Conta `Pi*_X(w) & Pi*_Y(w')`, os circuitos que satisfazem as
    restrições de `w` pela ligação X e as de `w'` pela ligação Y.
    """
    _check_same_length(w, w2)
    _check_n(n)
    rules = _merge(_word_rules(w, lambda first: _LinkRule(linkX, n, first)),
                   _word_rules(w2, lambda first: _LinkRule(linkY, n, first)))
    count = _search(rules, w.h, n, budget, workers)
    return CircuitClassCount((w, w2), (linkX.name, linkY.name), n, count, _exponent(w), "joint")


def count_pi_prime_joint(linkX, linkY, w, w2, n, budget=NODE_BUDGET, workers=1):
    """
    Conta `Pi'_X(w) & Pi*_Y(w')`, com X Toeplitz ou circulante simétrica.
    """
    wrap = _wrap_for(linkX)
    _check_pair_matched(w)
    _check_same_length(w, w2)
    _check_n(n)
    rules = _merge(_word_rules(w, lambda first: _SlopeRule(n, wrap, first)),
                   _word_rules(w2, lambda first: _LinkRule(linkY, n, first)))
    count = _search(rules, w.h, n, budget, workers)
    return CircuitClassCount((w, w2), (linkX.name, linkY.name), n, count, _exponent(w), "prime_joint")


def _lookup_by_eval(link, n):
    values = {}
    lookup = numpy.empty((n, n), dtype=numpy.int64)
    for i, j in itertools.product(range(n), repeat=2):
        lookup[i, j] = values.setdefault(eval_link(link, i + 1, j + 1, n), len(values))
    return lookup


def _matched_pairs(w):
    return [(p, q) for p, q in itertools.combinations(range(w.h), 2) if w[p] == w[q]]


def brute_force_count(linkX, w, n, linkY=None, w2=None, slope=False):
    """
    Conta os circuitos por força bruta, testando todos os `n^h` circuitos e
    todos os pares `w[p] = w[q]` com `eval_link`. Não usa a busca nem as
    grades de valores: é o oráculo das outras contagens.

    Argumentos:
        - linkX, w: ligação e palavra principais
        - linkY, w2: ligação e palavra da contagem conjunta (opcionais)
        - slope: se `True`, as restrições de `w` são as de `Pi'` (X precisa
          ser Toeplitz ou circulante simétrica)
    """
    h = w.h
    if n ** h > BRUTE_FORCE_BUDGET:
        raise BudgetExceeded("Força bruta com {0} circuitos, acima de {1}".format(n ** h, BRUTE_FORCE_BUDGET))

    paths = numpy.indices((n,) * h).reshape(h, -1).T
    closed = numpy.column_stack([paths, paths[:, 0]])
    keep = numpy.ones(len(paths), dtype=bool)

    if slope:
        wrap = _wrap_for(linkX)
        s = closed[:, 1:] - closed[:, :-1]
        for p, q in _matched_pairs(w):
            total = s[:, p] + s[:, q]
            keep &= (total == 0) | (wrap & (numpy.abs(total) == n))
    else:
        edges = _lookup_by_eval(linkX, n)[closed[:, :-1], closed[:, 1:]]
        for p, q in _matched_pairs(w):
            keep &= edges[:, p] == edges[:, q]

    if linkY is not None:
        _check_same_length(w, w2)
        edges = _lookup_by_eval(linkY, n)[closed[:, :-1], closed[:, 1:]]
        for p, q in _matched_pairs(w2):
            keep &= edges[:, p] == edges[:, q]

    return int(keep.sum())


def estimate_p(counts):
    """
    Extrapola o limite de `count / n^(1+k)` a partir de contagens numa
    escada de `n`, ajustando `p + c/n` por mínimos quadrados
    (`numpy.polyfit` em `1/n`).

    Levanta `ArgumentError` com menos de 3 pontos, com `n` não
    estritamente crescente ou com contagens de classes diferentes.
    """
    counts = list(counts)
    if len(counts) < 3:
        raise ArgumentError("A extrapolação precisa de pelo menos 3 valores de n")

    ns = [c.n for c in counts]
    if any(a >= b for a, b in zip(ns, ns[1:])):
        raise ArgumentError("Escada de n não é estritamente crescente: {0}".format(ns))
    if len({(c.words, c.links, c.kind) for c in counts}) != 1:
        raise ArgumentError("Contagens de classes diferentes na mesma escada")

    x = numpy.array([1.0 / n for n in ns])
    y = numpy.array([c.normalized for c in counts])
    (slope, intercept), residuals, _, _, _ = numpy.polyfit(x, y, 1, full=True)
    residual = math.sqrt(residuals[0] / len(ns)) if len(residuals) else 0.0

    return PEstimate(ns=tuple(ns), counts=tuple(c.count for c in counts),
                     values=tuple(float(v) for v in y), limit=max(0.0, float(intercept)),
                     raw_limit=float(intercept), slope=float(slope), residual=residual)


def _ladder(count, ladder):
    return estimate_p([count(n) for n in sorted(ladder)])


def p_table(link, two_k, ladder, budget=NODE_BUDGET, workers=1):
    """
    Estima `p(w)` pra cada palavra pareada de comprimento `two_k`.

    Retorna um `dict` `Word -> PEstimate`.
    """
    table = {}
    for w in enumerate_pair_matched(two_k):
        table[w] = _ladder(lambda n: count_pi_star(link, w, n, budget, workers), ladder)
        logger.debug("p_{0}({1}) = {2:.4f}".format(link.name, w, table[w].limit))
    return table


def check_implies_wigner(linkX, linkY, n):
    """
    Verifica `(L_X, L_Y) => L_W` em dimensão `n`: posições com o mesmo par
    de valores `(L_X, L_Y)` precisam ter o mesmo valor de Wigner.
    """
    if not 1 <= n <= IMPLIES_MAX_N:
        raise ArgumentError("check_implies_wigner exige 1 <= n <= {0} (recebido {1})".format(IMPLIES_MAX_N, n))
    gridX = value_grid(linkX, n)
    gridY = value_grid(linkY, n)
    gridW = value_grid(WIGNER, n)

    pair_keys = (gridX.ids * len(gridY) + gridY.ids).ravel()
    triples = numpy.stack([pair_keys, gridW.ids.ravel()])
    return len(numpy.unique(pair_keys)) == numpy.unique(triples, axis=1).shape[1]


def _record(linkX, linkY, words, estimate, expected, tol):
    record = {
        "linkX": linkX.name,
        "linkY": linkY.name,
        "word": str(words[0]),
        "n_ladder": list(estimate.ns),
        "counts": list(estimate.counts),
        "p_estimate": estimate.limit,
        "residual": estimate.residual,
        "expected": expected,
        "pass": estimate.matches(expected, tol),
    }
    if len(words) > 1:
        record["word2"] = str(words[1])
    return record


def _check_two_k(two_k):
    if two_k > 6:
        raise ArgumentError("Varreduras completas só até 2k = 6 (recebido {0})".format(two_k))


def check_compatible(linkX, linkY, two_k, ladder, tol, budget=NODE_BUDGET, workers=1):
    """
    Verifica se `p_Z(w, w') = 0` pra todo par de palavras diferentes de
    comprimento `two_k`.
    """
    _check_two_k(two_k)
    report = CheckReport("compatible")
    words = enumerate_pair_matched(two_k)
    for w, w2 in itertools.product(words, repeat=2):
        if w == w2:
            continue
        estimate = _ladder(lambda n: count_pi_star_joint(linkX, linkY, w, w2, n, budget, workers), ladder)
        report.records.append(_record(linkX, linkY, (w, w2), estimate, 0.0, tol))
    logger.info("{0} / {1} compatíveis em 2k={2}: {3}".format(linkX, linkY, two_k, report.passed))
    return report


def check_leadsto_wigner(linkX, linkY, two_k, ladder, tol, budget=NODE_BUDGET, workers=1):
    """
    Verifica `(L_X, L_Y) ~> L_W`: `p_Z(w, w)` é 1 pras palavras de Catalan
    e 0 pras outras.
    """
    _check_two_k(two_k)
    report = CheckReport("leadsto")
    for w in enumerate_pair_matched(two_k):
        expected = 1.0 if is_catalan(w) else 0.0
        estimate = _ladder(lambda n: count_pi_star_joint(linkX, linkY, w, w, n, budget, workers), ladder)
        report.records.append(_record(linkX, linkY, (w,), estimate, expected, tol))
    logger.info("{0} / {1} ~> Wigner em 2k={2}: {3}".format(linkX, linkY, two_k, report.passed))
    return report


def check_invariance_containment(linkX, transform, two_k, n, budget=NODE_BUDGET, workers=1):
    """
    Compara `Pi*_X(w)` com `Pi*_Y(w)` pra `L_Y = transform o L_X`.

    Pra cada palavra: "subset" diz se `#(Pi*_X & Pi*_Y) = #Pi*_X` (a
    contenção como conjunto) e "equal" se as duas contagens são iguais.
    Quando a transformação é injetiva na imagem de `L_X` a igualdade
    também é exigida.
    """
    linkY = compose(transform, linkX)
    injective = is_injective_on_range(transform, linkX, n)
    report = CheckReport("invariance")

    for w in enumerate_pair_matched(two_k):
        cx = count_pi_star(linkX, w, n, budget, workers).count
        cy = count_pi_star(linkY, w, n, budget, workers).count
        cxy = count_pi_star_joint(linkX, linkY, w, w, n, budget, workers).count
        subset = cxy == cx
        equal = cx == cy
        report.records.append({
            "linkX": linkX.name,
            "transform": transform.name,
            "word": str(w),
            "n": n,
            "count_x": cx,
            "count_y": cy,
            "count_joint": cxy,
            "subset": subset,
            "equal": equal,
            "injective": injective,
            "pass": subset and (equal or not injective),
        })
    return report


def diagnose_multiplicity(link, w, ladder, budget=NODE_BUDGET, workers=1):
    """
    Conta `Pi*(w)` pra uma palavra com alguma letra repetida 3 ou mais
    vezes e mostra `count / n^(1+h/2)` indo a zero.
    """
    if max(w.multiplicities()) < 3:
        raise ArgumentError("{0} não tem letra com multiplicidade >= 3".format(w))

    report = CheckReport("multiplicity")
    ratios = []
    for n in sorted(ladder):
        c = count_pi_star(link, w, n, budget, workers)
        ratios.append(c.normalized)
        report.records.append({"link": link.name, "word": str(w), "n": n, "count": c.count,
                               "ratio": c.normalized, "pass": True})

    vanishing = ratios[-1] < ratios[0]
    for record in report.records:
        record["pass"] = vanishing
    return report
