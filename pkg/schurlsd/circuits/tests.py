# -*- encoding: utf-8 -*-
from django.test import SimpleTestCase

from schurlsd.utils import ArgumentError, BudgetExceeded
from schurlsd.linkfn import (Scalar, Transform, WIGNER, TOEPLITZ, HANKEL,
                             SYMCIRC, REVCIRC, DSYMHANKEL, BUILTIN_LINKS,
                             profile, compose)
from schurlsd.words import (Word, parse_word, enumerate_pair_matched,
                            enumerate_words, is_catalan)
from schurlsd.circuits import (count_pi_star, count_pi_prime,
                               count_pi_star_joint, count_pi_prime_joint,
                               brute_force_count, estimate_p, p_table,
                               check_implies_wigner, check_compatible,
                               check_leadsto_wigner, PEstimate,
                               check_invariance_containment,
                               diagnose_multiplicity)


def w(text):
    return parse_word(text)


def ladder(count, ns):
    return estimate_p([count(n) for n in ns])


PALAVRAS_CURTAS = enumerate_pair_matched(2) + enumerate_pair_matched(4)

PARES_DA_LINHA_2 = [(X, Y) for X in (TOEPLITZ, SYMCIRC) for Y in (HANKEL, REVCIRC, DSYMHANKEL)]


class CountTestCase(SimpleTestCase):
    def teste_wigner_aa(self):
        c = count_pi_star(WIGNER, w("aa"), 5)
        self.assertEqual(c.count, 25)
        self.assertEqual(c.normalizer_exponent, 2)

    def teste_toeplitz_pi_linha_aa(self):
        self.assertEqual(count_pi_prime(TOEPLITZ, w("aa"), 5).count, 25)

    def teste_threads_nao_mudam_a_contagem(self):
        a = count_pi_star(HANKEL, w("abccba"), 9, workers=1)
        b = count_pi_star(HANKEL, w("abccba"), 9, workers=4)
        self.assertEqual(a, b)

    def teste_limite_de_nos(self):
        self.assertRaises(BudgetExceeded, lambda: count_pi_star(WIGNER, w("abcabc"), 64, budget=1000))

    def teste_pi_linha_so_toeplitz_e_circulante(self):
        self.assertRaises(ArgumentError, lambda: count_pi_prime(HANKEL, w("abab"), 8))
        self.assertRaises(ArgumentError, lambda: count_pi_prime(TOEPLITZ, Word((1, 1, 1)), 8))

    def teste_comprimentos_diferentes(self):
        self.assertRaises(ArgumentError,
                          lambda: count_pi_star_joint(TOEPLITZ, HANKEL, w("aa"), w("abab"), 8))

    def teste_cota_da_propriedade_b(self):
        for link in BUILTIN_LINKS.values():
            delta = profile(link, 10).delta
            for word in enumerate_pair_matched(6):
                c = count_pi_star(link, word, 10)
                self.assertTrue(c.count <= c.property_b_bound(delta), (link, word))


class BruteForceTestCase(SimpleTestCase):
    def teste_pi_estrela(self):
        for link in BUILTIN_LINKS.values():
            for word in PALAVRAS_CURTAS:
                self.assertEqual(count_pi_star(link, word, 8).count,
                                 brute_force_count(link, word, 8), (link, word))

    def teste_palavras_nao_pareadas(self):
        for link in (TOEPLITZ, HANKEL, SYMCIRC):
            for word in enumerate_words(3):
                self.assertEqual(count_pi_star(link, word, 6).count,
                                 brute_force_count(link, word, 6), (link, word))

    def teste_conjunta_toeplitz_hankel(self):
        for a in PALAVRAS_CURTAS:
            for b in PALAVRAS_CURTAS:
                if a.h != b.h:
                    continue
                self.assertEqual(count_pi_star_joint(TOEPLITZ, HANKEL, a, b, 8).count,
                                 brute_force_count(TOEPLITZ, a, 8, HANKEL, b), (a, b))

    def teste_pi_linha(self):
        for link in (TOEPLITZ, SYMCIRC):
            for word in PALAVRAS_CURTAS:
                self.assertEqual(count_pi_prime(link, word, 8).count,
                                 brute_force_count(link, word, 8, slope=True), (link, word))

    def teste_pi_linha_conjunta(self):
        for a in enumerate_pair_matched(4):
            for b in enumerate_pair_matched(4):
                self.assertEqual(count_pi_prime_joint(SYMCIRC, HANKEL, a, b, 7).count,
                                 brute_force_count(SYMCIRC, a, 7, HANKEL, b, slope=True), (a, b))

    def teste_limite(self):
        self.assertRaises(BudgetExceeded, lambda: brute_force_count(TOEPLITZ, w("abcabc"), 64))


class CountPropertiesTestCase(SimpleTestCase):
    def teste_intersecao_menor_que_cada_uma(self):
        for a in enumerate_pair_matched(4):
            for b in enumerate_pair_matched(4):
                joint = count_pi_star_joint(TOEPLITZ, REVCIRC, a, b, 10).count
                self.assertTrue(joint <= count_pi_star(TOEPLITZ, a, 10).count)
                self.assertTrue(joint <= count_pi_star(REVCIRC, b, 10).count)

    def teste_mesma_ligacao(self):
        for link in (TOEPLITZ, DSYMHANKEL):
            for word in enumerate_pair_matched(4):
                self.assertEqual(count_pi_star_joint(link, link, word, word, 9).count,
                                 count_pi_star(link, word, 9).count)

    def teste_wigner_catalan(self):
        for k in (1, 2, 3):
            for word in enumerate_pair_matched(2 * k):
                if not is_catalan(word):
                    continue
                for n in (8, 16):
                    ratio = count_pi_star(WIGNER, word, n).normalized
                    self.assertTrue(1 - (k + 1) ** 2 / n <= ratio <= 1, (word, n))

    def teste_toeplitz_pi_linha_perto_de_pi_estrela(self):
        for word in PALAVRAS_CURTAS:
            for n in (8, 16):
                star = count_pi_star(TOEPLITZ, word, n)
                prime = count_pi_prime(TOEPLITZ, word, n)
                diff = abs(star.count - prime.count) / n ** float(star.normalizer_exponent)
                self.assertTrue(diff <= 4.0 / n, (word, n))


class EstimatePTestCase(SimpleTestCase):
    def teste_wigner(self):
        p = ladder(lambda n: count_pi_star(WIGNER, w("abba"), n), (8, 16, 32))
        self.assertAlmostEqual(p.limit, 1.0, delta=0.02)
        p = ladder(lambda n: count_pi_star(WIGNER, w("abab"), n), (8, 16, 32))
        self.assertAlmostEqual(p.limit, 0.0, delta=0.02)

    def teste_toeplitz_abab(self):
        p = ladder(lambda n: count_pi_star(TOEPLITZ, w("abab"), n), (8, 16, 32, 64))
        self.assertAlmostEqual(p.limit, 2.0 / 3.0, delta=0.02)
        self.assertEqual(p.ns, (8, 16, 32, 64))

    def teste_hankel_abab(self):
        p = ladder(lambda n: count_pi_star(HANKEL, w("abab"), n), (8, 16, 32))
        self.assertTrue(p.limit <= 0.02)

    def teste_circulante_simetrica_pi_linha(self):
        p = ladder(lambda n: count_pi_prime(SYMCIRC, w("abab"), n), (8, 16, 32))
        self.assertAlmostEqual(p.limit, 1.0, delta=0.03)

    def teste_conjunta_toeplitz_hankel(self):
        p = ladder(lambda n: count_pi_star_joint(TOEPLITZ, HANKEL, w("abba"), w("abba"), n), (8, 16, 32))
        self.assertAlmostEqual(p.limit, 1.0, delta=0.03)
        p = ladder(lambda n: count_pi_star_joint(TOEPLITZ, HANKEL, w("abab"), w("abba"), n), (8, 16, 32))
        self.assertTrue(p.limit <= 0.03)

    def teste_limite_nunca_negativo(self):
        p = ladder(lambda n: count_pi_star(HANKEL, w("abab"), n), (8, 16, 32))
        self.assertTrue(p.limit >= 0)
        self.assertEqual(p.limit, max(0.0, p.raw_limit))

    def teste_compara_pelo_intercepto_sem_corte(self):
        estimate = PEstimate(ns=(8, 16, 32), counts=(0, 0, 0), values=(0.0, 0.0, 0.0),
                             limit=0.0, raw_limit=-0.5, slope=0.0, residual=0.0)
        self.assertFalse(estimate.matches(0.0, 0.03))
        self.assertTrue(estimate.matches(-0.49, 0.03))

    def teste_poucos_pontos(self):
        counts = [count_pi_star(WIGNER, w("aa"), n) for n in (8, 16)]
        self.assertRaises(ArgumentError, lambda: estimate_p(counts))

    def teste_escada_fora_de_ordem(self):
        counts = [count_pi_star(WIGNER, w("aa"), n) for n in (16, 8, 32)]
        self.assertRaises(ArgumentError, lambda: estimate_p(counts))

    def teste_tabela_da_wigner(self):
        table = p_table(WIGNER, 4, (8, 16, 32))
        self.assertEqual(sorted(str(x) for x in table), ["aabb", "abab", "abba"])
        for word, estimate in table.items():
            expected = 1.0 if is_catalan(word) else 0.0
            self.assertAlmostEqual(estimate.limit, expected, delta=0.02)


class RelationTestCase(SimpleTestCase):
    def teste_implica_wigner(self):
        for n in (10, 20, 50):
            self.assertTrue(check_implies_wigner(TOEPLITZ, HANKEL, n))
            self.assertFalse(check_implies_wigner(TOEPLITZ, REVCIRC, n))

    def teste_wigner_implica_wigner(self):
        for link in BUILTIN_LINKS.values():
            self.assertTrue(check_implies_wigner(WIGNER, link, 7))

    def teste_compativeis(self):
        for X, Y in PARES_DA_LINHA_2:
            report = check_compatible(X, Y, 4, (8, 16, 32), 0.03)
            self.assertEqual(len(report.records), 6)
            self.assertTrue(report.passed, (X, Y, report.records))

    def teste_leva_a_wigner(self):
        for X, Y in PARES_DA_LINHA_2:
            report = check_leadsto_wigner(X, Y, 4, (8, 16, 32), 0.03)
            expected = {r["word"]: r["expected"] for r in report.records}
            self.assertEqual(expected, {"aabb": 1.0, "abab": 0.0, "abba": 1.0})
            self.assertTrue(report.passed, (X, Y, report.records))
        self.assertTrue(check_leadsto_wigner(WIGNER, WIGNER, 4, (8, 16, 32), 0.03).passed)

    def teste_implica_wigner_n_grande_demais(self):
        self.assertRaises(ArgumentError, lambda: check_implies_wigner(TOEPLITZ, HANKEL, 65))
        self.assertRaises(ArgumentError, lambda: check_implies_wigner(TOEPLITZ, HANKEL, 0))
        self.assertTrue(check_implies_wigner(TOEPLITZ, HANKEL, 64))

    def teste_2k_grande_demais(self):
        self.assertRaises(ArgumentError, lambda: check_compatible(TOEPLITZ, HANKEL, 8, (8, 16, 32), 0.03))


class InvarianceTestCase(SimpleTestCase):
    def teste_quadrado_da_toeplitz(self):
        report = check_invariance_containment(TOEPLITZ, Transform.square(), 4, 10)
        self.assertEqual(len(report.records), 3)
        self.assertTrue(all(r["equal"] for r in report.records))
        self.assertTrue(report.passed)

    def teste_tabela_que_junta_valores(self):
        rho = Transform.user_table({Scalar(t): Scalar(1 if t == 2 else t) for t in range(10)})
        report = check_invariance_containment(TOEPLITZ, rho, 4, 10)
        self.assertTrue(all(r["subset"] for r in report.records))
        self.assertFalse(all(r["equal"] for r in report.records))
        self.assertTrue(report.passed)

    def teste_potencia_coprima_da_wigner(self):
        report = check_invariance_containment(WIGNER, Transform.coprime_power(2, 3), 6, 8)
        self.assertEqual(len(report.records), 15)
        self.assertTrue(all(r["equal"] for r in report.records))

    def teste_composicoes_injetivas_no_produto(self):
        U = compose(Transform.coprime_power(2, 3), WIGNER)
        V = compose(Transform.square(), TOEPLITZ)
        words = enumerate_pair_matched(4)
        for n in (6, 9):
            for w1 in words:
                for w2 in words:
                    self.assertEqual(count_pi_star_joint(U, V, w1, w2, n).count,
                                     count_pi_star_joint(WIGNER, TOEPLITZ, w1, w2, n).count,
                                     (str(w1), str(w2), n))


class MultiplicityTestCase(SimpleTestCase):
    def teste_letra_tripla_some(self):
        report = diagnose_multiplicity(TOEPLITZ, Word((1, 1, 1)), (4, 8, 16))
        self.assertEqual([r["count"] for r in report.records], [4, 8, 16])
        self.assertTrue(report.passed)

    def teste_palavra_pareada(self):
        self.assertRaises(ArgumentError, lambda: diagnose_multiplicity(TOEPLITZ, w("abab"), (4, 8, 16)))
