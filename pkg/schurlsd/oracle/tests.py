# -*- encoding: utf-8 -*-
import math
from fractions import Fraction

from django.test import SimpleTestCase

from schurlsd.utils import ArgumentError
from schurlsd.linkfn import TOEPLITZ
from schurlsd.words import enumerate_pair_matched, is_catalan
from schurlsd.oracle import (MomentSequence, semicircle_moments,
                             assemble_moments, assembled_moments,
                             moment_bound, carleman_diagnostic,
                             semicircle_cdf, semicircle_pdf,
                             semicircle_moment_by_quadrature)


def tabela_da_wigner(two_k):
    return {w: 1 if is_catalan(w) else 0 for w in enumerate_pair_matched(two_k)}


class SemicircleMomentsTestCase(SimpleTestCase):
    def teste_catalan(self):
        s = semicircle_moments(10)
        self.assertEqual([s.beta(h) for h in (2, 4, 6, 8, 10)], [1, 2, 5, 14, 42])
        self.assertEqual(s.beta(1), 0)
        self.assertEqual(s.beta(3), 0)
        self.assertEqual(s.source, "semicircle")

    def teste_ordem_maxima(self):
        self.assertEqual(semicircle_moments(30).beta(30), 9694845)
        self.assertRaises(ArgumentError, lambda: semicircle_moments(31))

    def teste_fora_da_sequencia(self):
        self.assertRaises(ArgumentError, lambda: semicircle_moments(4).beta(5))

    def teste_hankel_positiva(self):
        self.assertTrue(semicircle_moments(8).is_positive_semidefinite())
        self.assertFalse(MomentSequence((0, 1, 0, 0.5), "empirical").is_positive_semidefinite())

    def teste_momento_par_negativo(self):
        self.assertRaises(ArgumentError, lambda: MomentSequence((0, -1), "empirical"))

    def teste_json(self):
        records = MomentSequence((0, 1, 0, Fraction(8, 3)), "assembled-from-p").to_json()
        self.assertEqual(records[3], {"h": 4, "value": 8 / 3, "exact": "8/3"})


class AssembleTestCase(SimpleTestCase):
    def teste_wigner(self):
        self.assertEqual(assemble_moments(tabela_da_wigner(6), 6), 5)

    def teste_wigner_igual_ao_semicirculo(self):
        for two_k in range(2, 13, 2):
            self.assertEqual(assemble_moments(tabela_da_wigner(two_k), two_k),
                             semicircle_moments(two_k).beta(two_k))

    def teste_toeplitz(self):
        table = {"aabb": 1, "abba": 1, "abab": Fraction(2, 3)}
        self.assertEqual(assemble_moments(table, 4), Fraction(8, 3))

    def teste_circulante_simetrica(self):
        table = {w: 1 for w in enumerate_pair_matched(6)}
        self.assertEqual(assemble_moments(table, 6), 15)

    def teste_palavra_faltando(self):
        with self.assertRaisesRegex(ArgumentError, "abab"):
            assemble_moments({"aabb": 1, "abba": 1}, 4)

    def teste_conjunta_so_diagonal(self):
        table = {(w, w): v for w, v in tabela_da_wigner(4).items()}
        self.assertEqual(assemble_moments(table, 4, joint=True, compatible=True), 2)
        self.assertRaises(ArgumentError, lambda: assemble_moments(table, 4, joint=True))

    def teste_nunca_passa_da_cota(self):
        for two_k in (2, 4, 6):
            self.assertTrue(assemble_moments(tabela_da_wigner(two_k), two_k) <= moment_bound(two_k, 1))

    def teste_montagem_da_toeplitz(self):
        seq = assembled_moments(TOEPLITZ, 4, {2: (8, 16, 32), 4: (8, 16, 32, 64)})
        self.assertEqual(seq.beta(1), 0)
        self.assertAlmostEqual(seq.beta(2), 1.0, delta=0.01)
        self.assertAlmostEqual(seq.beta(4), 8.0 / 3.0, delta=0.04)
        self.assertEqual(seq.source, "assembled-from-p")

    def teste_sem_escada(self):
        self.assertRaises(ArgumentError, lambda: assembled_moments(TOEPLITZ, 4, {2: (8, 16, 32)}))


class MomentBoundTestCase(SimpleTestCase):
    def teste_exemplos(self):
        self.assertEqual(moment_bound(4, 1), 3)
        self.assertEqual(moment_bound(6, 2), 120)
        self.assertEqual(moment_bound(2, 1), 1)

    def teste_argumentos(self):
        self.assertRaises(ArgumentError, lambda: moment_bound(3, 1))
        self.assertRaises(ArgumentError, lambda: moment_bound(32, 1))
        self.assertRaises(ArgumentError, lambda: moment_bound(4, 0))


class CarlemanTestCase(SimpleTestCase):
    def teste_semicirculo(self):
        report = carleman_diagnostic(semicircle_moments(20), 10)
        self.assertAlmostEqual(report.lower_bound, 10 * 16796 ** (-1.0 / 20))
        self.assertTrue(report.partial_sum >= report.lower_bound)
        self.assertEqual(report.trend, "diverging")

    def teste_fatorial(self):
        values = tuple(0 if h % 2 else math.factorial(h) for h in range(1, 21))
        report = carleman_diagnostic(MomentSequence(values, "empirical"), 10)
        self.assertEqual(report.trend, "suspect")

    def teste_todos_um(self):
        values = tuple(0 if h % 2 else 1 for h in range(1, 13))
        report = carleman_diagnostic(MomentSequence(values, "empirical"), 6)
        self.assertAlmostEqual(report.partial_sum, 6.0)

    def teste_momento_nulo(self):
        seq = MomentSequence((0, 1, 0, 0), "empirical")
        self.assertRaises(ArgumentError, lambda: carleman_diagnostic(seq, 2))


class SemicircleCDFTestCase(SimpleTestCase):
    def teste_valores(self):
        self.assertAlmostEqual(semicircle_cdf(-2), 0.0)
        self.assertAlmostEqual(semicircle_cdf(0), 0.5)
        self.assertAlmostEqual(semicircle_cdf(2), 1.0)
        self.assertEqual(semicircle_cdf(-3), 0.0)
        self.assertEqual(semicircle_cdf(3), 1.0)

    def teste_densidade(self):
        self.assertAlmostEqual(semicircle_pdf(0), 1 / math.pi)
        self.assertEqual(semicircle_pdf(2.5), 0.0)

    def teste_quadratura(self):
        reference = semicircle_moments(8)
        for h in range(1, 9):
            self.assertAlmostEqual(semicircle_moment_by_quadrature(h), reference.beta(h), delta=1e-6)
