# -*- encoding: utf-8 -*-
"""
Autovalores, distribuições espectrais empíricas (ESD), momentos por
Monte Carlo e distâncias a leis de referência.
"""

import math
import logging
import dataclasses
from concurrent.futures import ThreadPoolExecutor

import numpy

from schurlsd.utils import ArgumentError, StateError

logger = logging.getLogger(__name__)

__all__ = [
    "Spectrum", "ESD", "MomentEstimate", "MC_MAX_ORDER", "TRACE_MAX_ORDER",
    "eigenvalues", "eigendecomposition", "moment_from_spectrum",
    "moment_from_trace", "esd", "pooled_esd", "simulate_spectra",
    "mc_moments", "variance_ratio", "ks_distance", "histogram",
]

MC_MAX_ORDER = 8
TRACE_MAX_ORDER = 8


class Spectrum(object):
    """
    Os autovalores de uma matriz simétrica, em ordem crescente.
    """

    def __init__(self, eigenvalues):
        values = numpy.sort(numpy.asarray(eigenvalues, dtype=numpy.float64))
        values.setflags(write=False)
        self.eigenvalues = values

    @property
    def n(self):
        return len(self.eigenvalues)

    def __len__(self):
        return self.n


def _check_scaled(A):
    if not A.scaled:
        raise StateError("A matriz precisa estar escalada por n^(-1/2)")
    if not numpy.all(numpy.isfinite(A.entries)):
        raise ArgumentError("Matriz com entradas não finitas")


def eigenvalues(A):
    """
    Calcula o espectro de uma realização escalada com `numpy.linalg.eigvalsh`
    (tridiagonalização + iteração QR do LAPACK).
    """
    _check_scaled(A)
    return Spectrum(numpy.linalg.eigvalsh(A.entries))


def eigendecomposition(A):
    """
    Retorna `(Spectrum, Q)` com os autovetores nas colunas de `Q`. Só é
    usada pra verificar o resíduo da reconstrução.
    """
    _check_scaled(A)
    values, vectors = numpy.linalg.eigh(A.entries)
    return Spectrum(values), vectors


def _check_order(h, maximum=None):
    if h < 1:
        raise ArgumentError("Ordem do momento precisa ser >= 1 (recebido {0})".format(h))
    if maximum is not None and h > maximum:
        raise ArgumentError("Ordem {0} acima do máximo {1}".format(h, maximum))


def moment_from_spectrum(s, h):
    """
    O momento `(1/n) sum lambda_i^h` do espectro `s`.
    """
    _check_order(h)
    return float(numpy.sum(s.eigenvalues ** h) / s.n)


def moment_from_trace(A, h):
    """
    O momento `(1/n) tr(A^h)` por potências da matriz; é o oráculo
    independente de `moment_from_spectrum`.
    """
    _check_order(h, TRACE_MAX_ORDER)
    if not A.scaled:
        raise StateError("A matriz precisa estar escalada por n^(-1/2)")
    return float(numpy.trace(numpy.linalg.matrix_power(A.entries, h)) / A.n)


class ESD(object):
    """
    Distribuição espectral empírica: `F(x) = (1/N) #{lambda_i <= x}`.
    """

    def __init__(self, points):
        points = numpy.sort(numpy.asarray(points, dtype=numpy.float64).ravel())
        if len(points) == 0:
            raise ArgumentError("ESD sem pontos")
        points.setflags(write=False)
        self.points = points

    def __len__(self):
        return len(self.points)

    def cdf(self, x):
        """
        Avalia `F(x)`, contínua à direita. Aceita escalares ou arrays.
        """
        counts = numpy.searchsorted(self.points, x, side="right")
        return counts / len(self.points)


def esd(spectrum):
    return ESD(spectrum.eigenvalues)


def pooled_esd(spectra):
    """
    ESD com os autovalores de várias tentativas juntos (massa `1/(n T)`
    em cada um).
    """
    spectra = list(spectra)
    if not spectra:
        raise ArgumentError("Nenhum espectro pra juntar")
    return ESD(numpy.concatenate([s.eigenvalues for s in spectra]))


def _trial_spectrum(spec, trial):
    return eigenvalues(spec.realize_trial(trial))


def simulate_spectra(spec, workers=1):
    """
    Calcula os espectros de todas as tentativas de `spec`.

    As tentativas rodam em paralelo com `workers` threads; a lista
    devolvida está sempre na ordem das tentativas.
    """
    logger.info("Simulando {0} o {1}: n={2}, {3} tentativas".format(
        spec.linkX, spec.linkY, spec.n, spec.trials))

    trials = range(spec.trials)
    if workers <= 1:
        return [_trial_spectrum(spec, t) for t in trials]

    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(lambda t: _trial_spectrum(spec, t), trials))


@dataclasses.dataclass(frozen=True)
class MomentEstimate:
    """
    Estimativa de Monte Carlo de `E beta_h(n^{-1/2} Z_n)`.
    """

    h: int
    mean: float
    variance_across_trials: float
    stderr: float
    trials: int
    n: int

    def to_record(self, seed):
        """
        Registro JSON `{h, mean, variance, stderr, n, trials, seed}`.
        """
        return {
            "h": self.h,
            "mean": self.mean,
            "variance": self.variance_across_trials,
            "stderr": self.stderr,
            "n": self.n,
            "trials": self.trials,
            "seed": seed,
        }


def _mean_and_variance(values):
    # Soma da esquerda pra direita, na ordem das tentativas.
    total = 0.0
    for v in values:
        total += v
    mean = total / len(values)

    squares = 0.0
    for v in values:
        squares += (v - mean) ** 2
    return mean, squares / (len(values) - 1)


def mc_moments(spec, h_max, workers=1, spectra=None):
    """
    Estima os momentos `beta_1 .. beta_{h_max}` do produto descrito por
    `spec`, com média e variância entre as tentativas.

    Argumentos:
        - spec: um `ProductSpec` com pelo menos 2 tentativas
        - h_max: maior ordem, no máximo `MC_MAX_ORDER`
        - workers: número de threads (não muda o resultado)
        - spectra: espectros já calculados de `spec`, se houver
    """
    _check_order(h_max, MC_MAX_ORDER)
    if spec.trials < 2:
        raise ArgumentError("mc_moments exige pelo menos 2 tentativas")

    if spectra is None:
        spectra = simulate_spectra(spec, workers)

    estimates = []
    for h in range(1, h_max + 1):
        values = [moment_from_spectrum(s, h) for s in spectra]
        mean, variance = _mean_and_variance(values)
        estimates.append(MomentEstimate(h=h, mean=mean, variance_across_trials=variance,
                                        stderr=math.sqrt(variance / len(values)),
                                        trials=len(values), n=spec.n))
    return estimates


def variance_ratio(spec, n_small, n_large, h, workers=1):
    """
    Razão `Var(beta_h em n_small) / Var(beta_h em n_large)` entre as
    tentativas. Com variância `O(1/n)`, dobrar `n` dá razão perto de 2.
    """
    if not n_small < n_large:
        raise ArgumentError("Precisa n_small < n_large ({0}, {1})".format(n_small, n_large))

    small = mc_moments(dataclasses.replace(spec, n=n_small), h, workers)[h - 1]
    large = mc_moments(dataclasses.replace(spec, n=n_large), h, workers)[h - 1]
    logger.info("Variância de beta_{0}: {1} (n={2}), {3} (n={4})".format(
        h, small.variance_across_trials, n_small, large.variance_across_trials, n_large))
    return small.variance_across_trials / large.variance_across_trials


def ks_distance(esd, ref_cdf):
    """
    Distância de Kolmogorov-Smirnov `sup |F_n(x) - F(x)|` entre a ESD e uma
    função de distribuição de referência.

    O supremo é atingido num dos pontos da ESD, do lado direito ou do
    esquerdo; no lado esquerdo a referência é avaliada no limite `F(x-)`,
    o que vale também quando ela tem saltos.

    Argumentos:
        - esd: objeto `ESD`
        - ref_cdf: função `x -> F(x)`, não-decrescente, de 0 a 1, que aceita
          arrays (é chamada duas vezes, com todos os pontos de uma vez)
    """
    points = esd.points
    n = len(points)
    upper = numpy.asarray(ref_cdf(points), dtype=numpy.float64)
    lower = numpy.asarray(ref_cdf(numpy.nextafter(points, -numpy.inf)), dtype=numpy.float64)

    # F_n(x) em cada ponto, contando repetições, e o limite à esquerda.
    after = numpy.searchsorted(points, points, side="right") / n
    before = numpy.searchsorted(points, points, side="left") / n

    d_plus = numpy.max(after - upper)
    d_minus = numpy.max(lower - before)
    return float(min(1.0, max(0.0, d_plus, d_minus)))


def histogram(esd, bins, lo, hi):
    """
    Histograma normalizado como densidade: a área total é a fração da
    massa da ESD dentro de `[lo, hi]`.

    Retorna uma lista de pares `(centro do intervalo, densidade)`.
    """
    if bins < 1:
        raise ArgumentError("Número de intervalos inválido: {0}".format(bins))
    if not lo < hi:
        raise ArgumentError("Intervalo vazio: [{0}, {1}]".format(lo, hi))

    counts, edges = numpy.histogram(esd.points, bins=bins, range=(lo, hi))
    width = (hi - lo) / bins
    density = counts / (len(esd) * width)
    centers = (edges[:-1] + edges[1:]) / 2
    return [(float(c), float(d)) for c, d in zip(centers, density)]
