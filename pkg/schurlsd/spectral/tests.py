# -*- encoding: utf-8 -*-
import math

import numpy
from scipy import stats
from django.test import SimpleTestCase

from schurlsd.utils import ArgumentError, StateError
from schurlsd.linkfn import TOEPLITZ, HANKEL, WIGNER
from schurlsd.ensemble import (GAUSSIAN, RADEMACHER, MatrixRealization,
                               ProductSpec, realize, scale)
from schurlsd.oracle import semicircle_cdf
from schurlsd.spectral import (Spectrum, ESD, eigenvalues, eigendecomposition,
                               moment_from_spectrum, moment_from_trace, esd,
                               pooled_esd, simulate_spectra, mc_moments,
                               variance_ratio, ks_distance, histogram)


def escalada(entries):
    return MatrixRealization(entries, scaled=True)


def massa_em_zero(x):
    return numpy.where(numpy.asarray(x) >= 0, 1.0, 0.0)


class EigenvaluesTestCase(SimpleTestCase):
    def teste_identidade(self):
        s = eigenvalues(escalada(numpy.eye(3)))
        self.assertTrue(numpy.allclose(s.eigenvalues, [1, 1, 1]))

    def teste_diagonal(self):
        s = eigenvalues(escalada(numpy.diag([2.0, -1.0, 0.0])))
        self.assertTrue(numpy.allclose(s.eigenvalues, [-1, 0, 2]))

    def teste_2x2(self):
        s = eigenvalues(escalada([[0.0, 1.0], [1.0, 0.0]]))
        self.assertTrue(numpy.allclose(s.eigenvalues, [-1, 1]))

    def teste_residuo_da_reconstrucao(self):
        A = scale(realize(HANKEL, GAUSSIAN, 40, 3))
        s, Q = eigendecomposition(A)
        residual = numpy.linalg.norm(A.entries - Q @ numpy.diag(s.eigenvalues) @ Q.T)
        self.assertTrue(residual <= 1e-10 * 40 * numpy.linalg.norm(A.entries))

    def teste_soma_igual_ao_traco(self):
        A = scale(realize(TOEPLITZ, GAUSSIAN, 30, 5))
        s = eigenvalues(A)
        self.assertEqual(len(s), 30)
        self.assertTrue(numpy.all(numpy.diff(s.eigenvalues) >= 0))
        self.assertTrue(abs(s.eigenvalues.sum() - numpy.trace(A.entries)) <= 1e-8 * 30)

    def teste_sem_escala(self):
        self.assertRaises(StateError, lambda: eigenvalues(MatrixRealization(numpy.eye(2))))

    def teste_nao_finita(self):
        self.assertRaises(ArgumentError, lambda: eigenvalues(escalada([[numpy.nan]])))


class MomentTestCase(SimpleTestCase):
    def teste_espectro(self):
        self.assertEqual(moment_from_spectrum(Spectrum([1, 1, 1]), 5), 1.0)
        self.assertEqual(moment_from_spectrum(Spectrum([-1, 1]), 1), 0.0)
        self.assertEqual(moment_from_spectrum(Spectrum([-1, 1]), 2), 1.0)

    def teste_ordem_invalida(self):
        self.assertRaises(ArgumentError, lambda: moment_from_spectrum(Spectrum([1]), 0))
        self.assertRaises(ArgumentError, lambda: moment_from_trace(escalada(numpy.eye(2)), 9))

    def teste_traco_da_identidade(self):
        for h in range(1, 9):
            self.assertAlmostEqual(moment_from_trace(escalada(numpy.eye(4)), h), 1.0)

    def teste_traco_frobenius_e_diagonal(self):
        A = scale(realize(WIGNER, GAUSSIAN, 12, 8))
        self.assertAlmostEqual(moment_from_trace(A, 2), (A.entries ** 2).sum() / 12)
        self.assertAlmostEqual(moment_from_trace(A, 1), A.entries.diagonal().mean())

    def teste_espectro_concorda_com_traco(self):
        for link, n in ((TOEPLITZ, 20), (HANKEL, 35), (WIGNER, 50)):
            A = scale(realize(link, GAUSSIAN, n, n))
            s = eigenvalues(A)
            for h in range(1, 7):
                a = moment_from_spectrum(s, h)
                b = moment_from_trace(A, h)
                self.assertTrue(abs(a - b) <= 1e-8 * max(1.0, abs(b)), (link, h))


class ESDTestCase(SimpleTestCase):
    def teste_cdf(self):
        F = ESD([0.0, 1.0, 1.0, 3.0])
        self.assertEqual(F.cdf(-10), 0.0)
        self.assertEqual(F.cdf(1.0), 0.75)
        self.assertEqual(F.cdf(2.0), 0.75)
        self.assertEqual(F.cdf(10), 1.0)

    def teste_juntar(self):
        F = pooled_esd([Spectrum([1.0, 2.0]), Spectrum([0.0, 3.0])])
        self.assertEqual(len(F), 4)
        self.assertEqual(F.cdf(1.5), 0.5)

    def teste_vazia(self):
        self.assertRaises(ArgumentError, lambda: pooled_esd([]))


class KSDistanceTestCase(SimpleTestCase):
    def teste_ponto_em_zero(self):
        self.assertEqual(ks_distance(ESD([0.0]), massa_em_zero), 0.0)

    def teste_dois_pontos(self):
        self.assertEqual(ks_distance(ESD([-1.0, 1.0]), massa_em_zero), 0.5)

    def teste_concorda_com_scipy(self):
        points = numpy.random.default_rng(4).uniform(-2, 2, 300)
        expected = stats.kstest(points, semicircle_cdf).statistic
        self.assertAlmostEqual(ks_distance(ESD(points), semicircle_cdf), expected, places=12)

    def teste_referencia_avaliada_em_bloco(self):
        calls = []

        def cdf(x):
            calls.append(numpy.shape(x))
            return semicircle_cdf(x)

        points = numpy.random.default_rng(5).uniform(-2, 2, 500)
        self.assertEqual(ks_distance(ESD(points), cdf), ks_distance(ESD(points), semicircle_cdf))
        self.assertEqual(calls, [(500,), (500,)])

    def teste_wigner_perto_do_semicirculo(self):
        s = eigenvalues(scale(realize(WIGNER, GAUSSIAN, 400, 1)))
        self.assertTrue(ks_distance(esd(s), semicircle_cdf) < 0.05)


class HistogramTestCase(SimpleTestCase):
    def teste_um_ponto(self):
        self.assertEqual(histogram(ESD([0.0]), 1, -1, 1), [(0.0, 0.5)])

    def teste_grade_uniforme(self):
        F = ESD(numpy.linspace(0.005, 0.995, 100))
        densities = [d for _, d in histogram(F, 10, 0, 1)]
        self.assertTrue(numpy.allclose(densities, 1.0))

    def teste_massa_fora(self):
        hist = histogram(ESD([-5.0, 0.1, 0.2, 5.0]), 4, -1, 1)
        self.assertAlmostEqual(sum(d * 0.5 for _, d in hist), 0.5)

    def teste_argumentos(self):
        self.assertRaises(ArgumentError, lambda: histogram(ESD([0.0]), 0, -1, 1))
        self.assertRaises(ArgumentError, lambda: histogram(ESD([0.0]), 3, 1, 1))


class MonteCarloTestCase(SimpleTestCase):
    def spec(self, **kwargs):
        params = dict(linkX=TOEPLITZ, linkY=HANKEL, distX=RADEMACHER, distY=RADEMACHER,
                      n=200, master_seed=77, trials=6)
        params.update(kwargs)
        return ProductSpec(**params)

    def teste_momentos_do_semicirculo(self):
        estimates = mc_moments(self.spec(), 4)
        self.assertEqual([e.h for e in estimates], [1, 2, 3, 4])
        self.assertTrue(abs(estimates[1].mean - 1.0) < 0.1)
        self.assertTrue(abs(estimates[3].mean - 2.0) < 0.4)
        for e in estimates:
            self.assertAlmostEqual(e.stderr, math.sqrt(e.variance_across_trials / e.trials))

    def teste_threads_nao_mudam_o_resultado(self):
        spec = self.spec(n=60, trials=5)
        self.assertEqual(mc_moments(spec, 6, workers=1), mc_moments(spec, 6, workers=3))

    def teste_espectros_em_ordem(self):
        spec = self.spec(n=30, trials=4)
        a = simulate_spectra(spec, workers=1)
        b = simulate_spectra(spec, workers=4)
        for x, y in zip(a, b):
            self.assertTrue(numpy.array_equal(x.eigenvalues, y.eigenvalues))

    def teste_semente_compartilhada(self):
        # Z = X o X: beta_2 é a média das entradas de X^2 ao quadrado.
        spec = self.spec(linkY=TOEPLITZ, distX=GAUSSIAN, distY=GAUSSIAN, n=100, shared_seed=True)
        beta2 = mc_moments(spec, 2)[1].mean
        self.assertTrue(1.5 < beta2 < 5.0)

    def teste_poucas_tentativas(self):
        self.assertRaises(ArgumentError, lambda: mc_moments(self.spec(trials=1), 2))
        self.assertRaises(ArgumentError, lambda: mc_moments(self.spec(), 9))

    def teste_razao_das_variancias(self):
        ratio = variance_ratio(self.spec(trials=12), 50, 100, 4)
        self.assertTrue(ratio > 0)
        self.assertRaises(ArgumentError, lambda: variance_ratio(self.spec(), 100, 50, 2))

    def teste_registro(self):
        e = mc_moments(self.spec(n=20, trials=2), 1)[0]
        self.assertEqual(sorted(e.to_record(77)), ["h", "mean", "n", "seed", "stderr", "trials", "variance"])
