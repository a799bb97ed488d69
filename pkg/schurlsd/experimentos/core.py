# -*- encoding: utf-8 -*-
"""
Os experimentos da linha de comando.

Cada comando (`spectrum`, `moments`, `words`, `pw`, `check`,
`verify-table2`) lê uma configuração JSON (`RunConfig`), roda as
operações dos aplicativos de cálculo, grava os resultados em CSV/JSON num
diretório de saída e termina gravando o `manifest.json` (`RunManifest`).

As funções `cmd_*` fazem o trabalho e não dependem dos comandos do
Django; a classe `ExperimentCommand` só cuida das opções, do tratamento
de erros e do código de saída.
"""

import os
import re
import json
import time
import logging
import dataclasses

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from schurlsd.utils import (SchurLSDError, ArgumentError, atomic_write,
                            config_hash, mkdir_p)
from schurlsd.linkfn import (WIGNER, BUILTIN_LINKS, Transform, parse_link,
                             profile_product, induced_transform)
from schurlsd.words import (parse_word, enumerate_pair_matched, is_catalan)
from schurlsd.ensemble import ProductSpec, parse_distribution
from schurlsd.spectral import (simulate_spectra, mc_moments, pooled_esd,
                               ks_distance, histogram, variance_ratio,
                               MC_MAX_ORDER)
from schurlsd.circuits import (count_pi_star, count_pi_prime,
                               count_pi_star_joint, count_pi_prime_joint,
                               estimate_p, check_implies_wigner,
                               check_compatible, check_leadsto_wigner,
                               check_invariance_containment)
from schurlsd.oracle import (semicircle_moments, semicircle_cdf,
                             assembled_moments, moment_bound)
from schurlsd.experimentos.reports import (eigenvalue_table, histogram_table,
                                           moment_table, word_table)

logger = logging.getLogger(__name__)

__all__ = [
    "ConfigError", "RunConfig", "RunResult", "RunManifest", "Table2Row",
    "TABLE2_ROWS", "reference_target", "reference_moments",
    "parse_transform", "cmd_spectrum", "cmd_moments", "cmd_words", "cmd_pw",
    "cmd_check", "cmd_verify_table2", "ExperimentCommand",
]

SEMICIRCLE = "semicircle"


class ConfigError(ArgumentError):
    """
    Erro na configuração; a mensagem cita a chave e o valor. É um
    `ArgumentError`: as funções `cmd_*` recebem a configuração como
    argumento.
    """


def defaults(command):
    """
    Parâmetros padrão de cada comando, a partir dos valores de
    `settings`.
    """
    common = {"master_seed": settings.MASTER_SEED}
    product = {
        "linkX": "toeplitz",
        "linkY": "hankel",
        "distX": "rademacher",
        "distY": "rademacher",
        "n": settings.N,
    }
    by_command = {
        "spectrum": dict(product, distX="gaussian", distY="gaussian", trials=1, bins=60,
                         lo=-3.0, hi=3.0, reference="auto", per_trial_spectra=True,
                         ks_max=None),
        "moments": dict(product, trials=settings.TRIALS, h_max=6, targets="auto"),
        "words": {"two_k": 4, "action": "list"},
        "pw": {"linkX": "toeplitz", "word": "abab", "linkY": None, "word2": None,
               "mode": "star", "ladder": None, "expected": None,
               "tolerance": settings.TOLERANCE},
        "check": {"relation": "compatible", "linkX": "toeplitz", "linkY": "hankel",
                  "transform": None, "two_k": 4, "ladder": None, "n": settings.CHECK_N,
                  "tolerance": settings.TOLERANCE, "expected": True},
        "verify-table2": {"row": "all", "n": settings.N, "trials": settings.TRIALS,
                          "dist": "rademacher", "h_max": MC_MAX_ORDER,
                          "two_k": 4, "ladder": [8, 16, 32], "check_n": settings.CHECK_N,
                          "tolerance": settings.TOLERANCE,
                          "semicircle_tolerance": {"2": 0.05, "4": 0.15, "6": 0.6},
                          "ks_max": 0.05, "toeplitz_tolerance": 0.15, "stderr_factor": 3.0,
                          "variance_trials": 40, "variance_ns": [400, 800],
                          "variance_range": [1.4, 2.8]},
    }
    if command not in by_command:
        raise ConfigError("Comando desconhecido: {0!r}".format(command))
    return dict(common, **by_command[command])


class RunConfig(object):
    """
    A configuração efetiva de uma execução: os padrões do comando,
    sobrescritos pelo arquivo JSON e pela opção `--seed`.

    `threads` e o diretório de saída não fazem parte da configuração:
    não mudam os resultados nem o hash.
    """

    def __init__(self, command, params):
        self.command = command
        self.params = params

    @classmethod
    def load(cls, command, path=None, seed=None, overrides=None):
        params = defaults(command)
        given = {}
        if path:
            try:
                with open(path) as f:
                    given = json.load(f)
            except (IOError, OSError) as exc:
                raise ConfigError("Não foi possível ler a configuração {0}: {1}".format(path, exc))
            except ValueError as exc:
                raise ConfigError("Configuração {0} não é JSON válido: {1}".format(path, exc))
            if not isinstance(given, dict):
                raise ConfigError("A configuração {0} precisa ser um objeto JSON".format(path))
        given.update(overrides or {})
        if seed is not None:
            given["master_seed"] = seed

        for key, value in given.items():
            if key not in params:
                raise ConfigError("Chave desconhecida na configuração: {0}={1!r}".format(key, value))
            params[key] = value

        config = cls(command, params)
        config.integer("master_seed", 0, 2 ** 64 - 1)
        return config

    @property
    def hash(self):
        return config_hash({"command": self.command, "params": self.params})

    def to_dict(self):
        return {"command": self.command, "params": dict(self.params), "config_hash": self.hash}

    def get(self, key):
        return self.params[key]

    def _fail(self, key, reason):
        raise ConfigError("{0}={1!r}: {2}".format(key, self.params.get(key), reason))

    def integer(self, key, minimum=None, maximum=None):
        value = self.params[key]
        if isinstance(value, bool) or not isinstance(value, int):
            self._fail(key, "precisa ser inteiro")
        if minimum is not None and value < minimum:
            self._fail(key, "precisa ser >= {0}".format(minimum))
        if maximum is not None and value > maximum:
            self._fail(key, "precisa ser <= {0}".format(maximum))
        return value

    def number(self, key):
        value = self.params[key]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            self._fail(key, "precisa ser numérico")
        return float(value)

    def choice(self, key, options):
        value = self.params[key]
        if value not in options:
            self._fail(key, "opções: {0}".format(", ".join(str(o) for o in options)))
        return value

    def _parse(self, key, parser):
        try:
            return parser(self.params[key])
        except ArgumentError as exc:
            self._fail(key, exc)

    def link(self, key):
        return self._parse(key, parse_link)

    def distribution(self, key):
        return self._parse(key, parse_distribution)

    def word(self, key):
        return self._parse(key, parse_word)

    def transform(self, key):
        return self._parse(key, parse_transform)

    def ladder(self, key, two_k):
        value = self.params[key]
        if value is None:
            if two_k not in settings.LADDERS:
                self._fail(key, "sem escada padrão pra 2k={0}".format(two_k))
            return tuple(settings.LADDERS[two_k])
        if (not isinstance(value, list) or len(value) < 3 or
                not all(isinstance(n, int) and n >= 1 for n in value)):
            self._fail(key, "precisa ser uma lista de pelo menos 3 inteiros positivos")
        if any(a >= b for a, b in zip(value, value[1:])):
            self._fail(key, "precisa ser estritamente crescente")
        return tuple(value)


_COPRIME_RE = re.compile(r"^coprimepower\((\d+),(\d+)\)$")


def parse_transform(name):
    """
    Interpreta o nome de uma transformação: "square" ou
    "coprimepower(a,b)".
    """
    text = str(name).strip().lower().replace(" ", "")
    if text == "square":
        return Transform.square()
    match = _COPRIME_RE.match(text)
    if match:
        return Transform.coprime_power(int(match.group(1)), int(match.group(2)))
    raise ArgumentError("Transformação desconhecida: {0!r}".format(name))


def _dump(data):
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


class RunResult(object):
    """
    Acumula os arquivos gravados e as verificações de uma execução.
    """

    def __init__(self, out, config):
        mkdir_p(out)
        self.out = out
        self.config = config
        self.files = []
        self.checks = []

    def write_text(self, name, content):
        atomic_write(os.path.join(self.out, name), content)
        self.files.append(name)
        logger.debug("Gravado {0}".format(os.path.join(self.out, name)))

    def write_json(self, name, data):
        if isinstance(data, dict):
            data = dict(data, config_hash=self.config.hash)
        self.write_text(name, _dump(data))

    def check(self, name, passed, **details):
        self.checks.append(dict(details, name=name, **{"pass": bool(passed)}))
        if not passed:
            logger.warning("Verificação falhou: {0} {1}".format(name, details))

    def report(self, name, report):
        self.check(name, report.passed, failures=[r for r in report.records if not r["pass"]])

    @property
    def passed(self):
        return all(c["pass"] for c in self.checks)


@dataclasses.dataclass
class RunManifest:
    """
    O resumo de uma execução, gravado em `manifest.json` de forma atômica
    no fim de cada comando.
    """

    command: str
    config_hash: str
    version: str
    wall_time: float
    checks: list
    files: list

    @property
    def passed(self):
        return all(c["pass"] for c in self.checks)

    def to_dict(self):
        data = dataclasses.asdict(self)
        data["passed"] = self.passed
        return data

    def write(self, out):
        path = os.path.join(out, "manifest.json")
        atomic_write(path, _dump(self.to_dict()))
        return path


@dataclasses.dataclass(frozen=True)
class Table2Row:
    number: int
    products: tuple
    target: str


TABLE2_ROWS = {
    1: Table2Row(1, tuple(("wigner", y) for y in ("toeplitz", "hankel", "symcirc", "revcirc", "dsymhankel")),
                 SEMICIRCLE),
    2: Table2Row(2, tuple((x, y) for x in ("toeplitz", "symcirc") for y in ("hankel", "revcirc", "dsymhankel")),
                 SEMICIRCLE),
    3: Table2Row(3, (("toeplitz", "symcirc"),), "toeplitz"),
    4: Table2Row(4, (("hankel", "revcirc"), ("hankel", "dsymhankel")), "hankel"),
    5: Table2Row(5, (("revcirc", "dsymhankel"),), "revcirc"),
}
"""
As linhas da tabela de LSDs dos produtos de Schur-Hadamard: os pares
`(L_X, L_Y)` de cada linha e a lei limite ("semicircle" ou a LSD de uma
das ligações).
"""


def _resolve_link(link):
    """
    Desce pelas composições com "square" e "coprimepower" até a ligação
    base: as duas são injetivas, e `transform o base` tem as mesmas
    classes de posições que `base`. Tabelas não são resolvidas.
    """
    while link.kind == "composed" and link.transform.kind in ("square", "coprimepower"):
        link = link.base
    return link


def reference_target(linkX, linkY):
    """
    A lei limite conhecida do produto `linkX o linkY` (o produto é
    comutativo), ou `None`. Composições injetivas são resolvidas pra
    ligação base.
    """
    pair = {_resolve_link(linkX).name, _resolve_link(linkY).name}
    for row in TABLE2_ROWS.values():
        for x, y in row.products:
            if {x, y} == pair:
                return row.target
    return None


def reference_moments(target, h_max, workers=1):
    """
    Os momentos da lei `target` até `h_max`: os números de Catalan pro
    semicírculo, ou os momentos montados a partir das tabelas de `p(w)`
    (até a ordem 6) pras LSDs das ligações.
    """
    if target == SEMICIRCLE:
        return semicircle_moments(h_max)
    return assembled_moments(BUILTIN_LINKS[target], min(h_max, 6), settings.LADDERS, workers=workers)


def _product_spec(config, linkX, linkY, distX, distY, n, trials):
    return ProductSpec(linkX=linkX, linkY=linkY, distX=distX, distY=distY, n=n,
                       master_seed=config.integer("master_seed"), trials=trials)


def cmd_spectrum(config, out, workers=1):
    """
    Espectros do produto configurado: autovalores por tentativa (CSV),
    histograma da ESD agregada (JSON e CSV) e, quando há uma CDF de
    referência, a distância de Kolmogorov-Smirnov.
    """
    result = RunResult(out, config)
    linkX, linkY = config.link("linkX"), config.link("linkY")
    spec = _product_spec(config, linkX, linkY, config.distribution("distX"),
                         config.distribution("distY"), config.integer("n", 1),
                         config.integer("trials", 1))
    bins, lo, hi = config.integer("bins", 1), config.number("lo"), config.number("hi")
    if not lo < hi:
        config._fail("hi", "precisa ser maior que lo={0}".format(lo))

    spectra = simulate_spectra(spec, workers)
    if config.get("per_trial_spectra"):
        result.write_text("eigenvalues.csv", eigenvalue_table(spectra).export("csv"))

    pooled = pooled_esd(spectra)
    hist = histogram(pooled, bins, lo, hi)
    result.write_text("histogram.csv", histogram_table(hist).export("csv"))
    result.write_json("histogram.json", {
        "linkX": linkX.name, "linkY": linkY.name, "n": spec.n, "trials": spec.trials,
        "lo": lo, "hi": hi, "bins": [{"center": c, "density": d} for c, d in hist],
    })

    reference = config.choice("reference", ["auto", SEMICIRCLE, "none"])
    if reference == "auto":
        reference = SEMICIRCLE if reference_target(linkX, linkY) == SEMICIRCLE else "none"

    if reference == SEMICIRCLE:
        distance = ks_distance(pooled, semicircle_cdf)
        result.write_json("ks.json", {"reference": SEMICIRCLE, "distance": distance,
                                      "points": len(pooled)})
        logger.info("KS de {0} o {1} contra o semicírculo: {2:.4f}".format(linkX, linkY, distance))
        if config.get("ks_max") is not None:
            result.check("ks", distance <= config.number("ks_max"), distance=distance)
    return result


def _targets(sequence):
    return {h: sequence.beta(h) for h in range(1, sequence.h_max + 1)}


def cmd_moments(config, out, workers=1):
    """
    Tabela dos momentos estimados por Monte Carlo, com os alvos teóricos
    quando a lei limite do produto é conhecida.
    """
    result = RunResult(out, config)
    linkX, linkY = config.link("linkX"), config.link("linkY")
    spec = _product_spec(config, linkX, linkY, config.distribution("distX"),
                         config.distribution("distY"), config.integer("n", 1),
                         config.integer("trials", 2))
    h_max = config.integer("h_max", 1, MC_MAX_ORDER)
    estimates = mc_moments(spec, h_max, workers)

    targets = None
    target = None
    if config.choice("targets", ["auto", "none"]) == "auto":
        target = reference_target(linkX, linkY)
        if target is not None:
            targets = _targets(reference_moments(target, h_max, workers))

    table = moment_table(estimates, spec.master_seed, targets)
    result.write_json("moments.json", {"linkX": linkX.name, "linkY": linkY.name,
                                       "reference": target,
                                       "moments": json.loads(table.export("json"))})
    return result


def cmd_words(config, out, workers=1):
    """
    Lista (ou conta) as palavras pareadas de comprimento `two_k`, marcando
    as de Catalan.
    """
    result = RunResult(out, config)
    two_k = config.integer("two_k", 1)
    action = config.choice("action", ["list", "count"])
    words = enumerate_pair_matched(two_k)

    if action == "list":
        result.write_json("words.json", {"two_k": two_k,
                                         "words": json.loads(word_table(words).export("json"))})
    else:
        result.write_json("words.json", {"two_k": two_k, "total": len(words),
                                         "catalan": sum(1 for w in words if is_catalan(w))})
    return result


def cmd_pw(config, out, workers=1):
    """
    Estima `p(w)` (ou `p_Z(w, w')`, com `linkY` e `word2`) numa escada de
    `n`. Com `mode = "prime"`, usa a classe `Pi'` (Toeplitz ou circulante
    simétrica).
    """
    result = RunResult(out, config)
    linkX, w = config.link("linkX"), config.word("word")
    mode = config.choice("mode", ["star", "prime"])
    joint = config.get("linkY") is not None
    ladder = config.ladder("ladder", w.h)

    if joint:
        linkY, w2 = config.link("linkY"), config.word("word2")
        count = count_pi_prime_joint if mode == "prime" else count_pi_star_joint
        counts = [count(linkX, linkY, w, w2, n, workers=workers) for n in ladder]
    else:
        count = count_pi_prime if mode == "prime" else count_pi_star
        counts = [count(linkX, w, n, workers=workers) for n in ladder]

    estimate = estimate_p(counts)
    report = {
        "linkX": linkX.name, "word": str(w), "mode": mode,
        "n_ladder": list(estimate.ns), "counts": list(estimate.counts),
        "values": list(estimate.values), "p_estimate": estimate.limit,
        "raw_limit": estimate.raw_limit, "residual": estimate.residual,
    }
    if joint:
        report.update(linkY=linkY.name, word2=str(w2))

    if config.get("expected") is not None:
        expected = config.number("expected")
        report["expected"] = expected
        result.check("pw", abs(estimate.limit - expected) <= config.number("tolerance"),
                     p_estimate=estimate.limit, expected=expected)

    result.write_json("pw.json", report)
    logger.info("p({0}) = {1:.4f} (resíduo {2:.2e})".format(w, estimate.limit, estimate.residual))
    return result


def _invariance_transform(config, linkX, n):
    if config.get("transform") is not None:
        return config.transform("transform")
    # Sem transformação explícita: a tabela rho com L_Y = rho o L_X nesse n.
    return induced_transform(linkX, config.link("linkY"), n)


def cmd_check(config, out, workers=1):
    """
    Roda uma das verificações de relações entre ligações: "implies",
    "compatible", "leadsto" ou "invariance".
    """
    result = RunResult(out, config)
    relation = config.choice("relation", ["implies", "compatible", "leadsto", "invariance"])
    linkX = config.link("linkX")

    if relation == "implies":
        linkY, n = config.link("linkY"), config.integer("n", 2)
        holds = check_implies_wigner(linkX, linkY, n)
        expected = bool(config.get("expected"))
        result.write_json("check.json", {"relation": relation, "linkX": linkX.name,
                                         "linkY": linkY.name, "n": n, "holds": holds})
        result.check("implies", holds == expected, holds=holds, expected=expected)
        return result

    two_k = config.integer("two_k", 2)
    if relation == "invariance":
        n = config.integer("n", 2)
        transform = _invariance_transform(config, linkX, n)
        report = check_invariance_containment(linkX, transform, two_k, n, workers=workers)
    else:
        linkY = config.link("linkY")
        ladder = config.ladder("ladder", two_k)
        check = check_compatible if relation == "compatible" else check_leadsto_wigner
        report = check(linkX, linkY, two_k, ladder, config.number("tolerance"), workers=workers)

    result.write_json("check.json", {"relation": relation, "records": report.records})
    result.report(relation, report)
    return result


def _verify_moments(row, linkX, linkY, config, result, workers, targets):
    prefix = "row{0}_{1}_{2}".format(row.number, linkX.name, linkY.name)
    n, h_max = config.integer("n", 2), config.integer("h_max", 1, MC_MAX_ORDER)
    dist = config.distribution("dist")
    spec = _product_spec(config, linkX, linkY, dist, dist, n, config.integer("trials", 2))

    spectra = simulate_spectra(spec, workers)
    estimates = {e.h: e for e in mc_moments(spec, h_max, spectra=spectra)}
    sigma = config.number("stderr_factor")
    target = targets[row.target]

    table = moment_table(estimates.values(), spec.master_seed, _targets(target))
    result.write_json(prefix + "_moments.json", {"reference": row.target,
                                                 "moments": json.loads(table.export("json"))})

    def near(h, tol):
        e = estimates[h]
        expected = float(target.beta(h))
        result.check("{0}_beta{1}".format(prefix, h), abs(e.mean - expected) <= tol,
                     mean=e.mean, target=expected, tolerance=tol)

    if row.target == SEMICIRCLE:
        for h, tol in sorted(config.get("semicircle_tolerance").items()):
            if int(h) <= h_max:
                near(int(h), float(tol))
        distance = ks_distance(pooled_esd(spectra), semicircle_cdf)
        result.check(prefix + "_ks", distance <= config.number("ks_max"), distance=distance)
    elif row.target == "toeplitz":
        near(4, config.number("toeplitz_tolerance"))
    else:
        for h in (4, 6):
            if h <= min(h_max, target.h_max):
                near(h, sigma * estimates[h].stderr)

    for h in (1, 3, 5):
        if h <= h_max:
            e = estimates[h]
            result.check("{0}_odd{1}".format(prefix, h), abs(e.mean) <= sigma * e.stderr,
                         mean=e.mean, stderr=e.stderr)

    delta = profile_product(linkX, linkY, n).delta
    for two_k in range(2, min(h_max, 8) + 1, 2):
        e = estimates[two_k]
        bound = float(moment_bound(two_k, delta))
        result.check("{0}_bound{1}".format(prefix, two_k), e.mean <= bound + sigma * e.stderr,
                     mean=e.mean, bound=bound)


def _verify_combinatorics(row, config, result, workers):
    two_k = config.integer("two_k", 2)
    n = config.integer("check_n", 2)
    ladder = config.ladder("ladder", two_k)
    tol = config.number("tolerance")
    records = []

    def invariance(base, target):
        report = check_invariance_containment(base, induced_transform(base, target, n), two_k, n,
                                              workers=workers)
        result.report("row{0}_invariance_{1}_{2}".format(row.number, base.name, target.name), report)
        records.extend(report.records)

    for x, y in row.products:
        linkX, linkY = parse_link(x), parse_link(y)
        if row.number == 1:
            holds = check_implies_wigner(linkX, linkY, n)
            result.check("row1_implies_{0}".format(y), holds, holds=holds)
            invariance(WIGNER, linkY)
        elif row.number == 2:
            for name, check in (("compatible", check_compatible), ("leadsto", check_leadsto_wigner)):
                report = check(linkX, linkY, two_k, ladder, tol, workers=workers)
                result.report("row2_{0}_{1}_{2}".format(name, x, y), report)
                records.extend(dict(r, relation=name) for r in report.records)
        else:
            # Linhas 3 a 5: L_Y é função de L_X.
            invariance(linkX, linkY)

    result.write_json("row{0}_checks.json".format(row.number), {"records": records})


def cmd_verify_table2(config, out, workers=1):
    """
    Verifica as linhas da tabela de LSDs: momentos por Monte Carlo contra
    os alvos da linha, momentos ímpares, a cota dos momentos pares e as
    verificações combinatórias que se aplicam à linha. Com `row = "all"`,
    verifica também o decaimento da variância (T o H, h = 4).
    """
    result = RunResult(out, config)
    row = config.get("row")
    if row == "all":
        rows = [TABLE2_ROWS[k] for k in sorted(TABLE2_ROWS)]
    elif row in TABLE2_ROWS:
        rows = [TABLE2_ROWS[row]]
    else:
        config._fail("row", "precisa ser 1 a 5 ou \"all\"")

    targets = {}
    for r in rows:
        if r.target not in targets:
            targets[r.target] = reference_moments(r.target, config.integer("h_max", 1, MC_MAX_ORDER),
                                                  workers)
    result.write_json("targets.json", {name: seq.to_json() for name, seq in targets.items()})

    for r in rows:
        logger.info("Verificando a linha {0} ({1})".format(r.number, r.target))
        for x, y in r.products:
            _verify_moments(r, parse_link(x), parse_link(y), config, result, workers, targets)
        _verify_combinatorics(r, config, result, workers)

    if row == "all":
        _verify_variance_decay(config, result, workers)
    return result


def _verify_variance_decay(config, result, workers):
    n_small, n_large = config.get("variance_ns")
    low, high = config.get("variance_range")
    dist = config.distribution("dist")
    spec = _product_spec(config, BUILTIN_LINKS["toeplitz"], BUILTIN_LINKS["hankel"], dist, dist,
                         n_small, config.integer("variance_trials", 2))
    ratio = variance_ratio(spec, n_small, n_large, 4, workers)
    result.write_json("variance_decay.json", {"h": 4, "n_small": n_small, "n_large": n_large,
                                              "trials": spec.trials, "ratio": ratio})
    result.check("variance_decay", low <= ratio <= high, ratio=ratio)


class ExperimentCommand(BaseCommand):
    """
    Base dos comandos de experimento: opções globais `--config`, `--seed`,
    `--out` e `--threads`, conversão dos erros em `CommandError` e o
    manifesto.

    As subclasses definem `name` e `run` (uma das funções `cmd_*`).
    """

    name = None
    run = None

    def add_arguments(self, parser):
        parser.add_argument("--config", help="arquivo JSON com a configuração")
        parser.add_argument("--seed", type=int, help="semente mestra (sobrescreve a configuração)")
        parser.add_argument("--out", help="diretório de saída")
        parser.add_argument("--threads", type=int, default=settings.THREADS,
                            help="número de threads (não muda os resultados)")

    def handle(self, *args, **options):
        started = time.time()
        out = options["out"] or os.path.join(settings.OUTPUT_DIR, self.name)
        threads = max(1, options["threads"] or 1)

        try:
            config = RunConfig.load(self.name, options["config"], options["seed"])
            result = type(self).run(config, out, threads)
        except SchurLSDError as exc:
            logger.error("{0}: {1}".format(self.name, exc))
            raise CommandError(str(exc))

        manifest = RunManifest(command=self.name, config_hash=config.hash,
                               version=settings.VERSAO, wall_time=round(time.time() - started, 3),
                               checks=result.checks, files=list(result.files))
        path = manifest.write(out)
        self.stdout.write("Resultados em {0} (config {1})".format(out, config.hash[:12]))

        failed = [c["name"] for c in manifest.checks if not c["pass"]]
        if failed:
            logger.error("{0}: {1} verificações falharam".format(self.name, len(failed)))
            raise CommandError("Falharam: {0}. Veja {1}".format(", ".join(failed), path),
                               returncode=1)
        if manifest.checks:
            self.stdout.write("{0} verificações passaram".format(len(manifest.checks)))
