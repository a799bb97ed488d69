# -*- encoding: utf-8 -*-
import itertools

import numpy
from django.test import SimpleTestCase

from schurlsd.utils import ArgumentError, EvaluationError
from schurlsd.linkfn import (Scalar, Pair, PowerPair, Transform, WIGNER,
                             TOEPLITZ, HANKEL, SYMCIRC, REVCIRC, DSYMHANKEL,
                             BUILTIN_LINKS, eval_link, value_grid, profile,
                             profile_product, compose, is_injective_on_range,
                             delta_ladder, induced_transform, parse_link)


class EvalLinkTestCase(SimpleTestCase):
    def teste_toeplitz(self):
        self.assertEqual(eval_link(TOEPLITZ, 3, 7, 10), Scalar(4))

    def teste_wigner_ordena_o_par(self):
        self.assertEqual(eval_link(WIGNER, 5, 2, 6), Pair(2, 5))

    def teste_hankel(self):
        self.assertEqual(eval_link(HANKEL, 2, 3, 4), Scalar(5))

    def teste_circulante_simetrica(self):
        self.assertEqual(eval_link(SYMCIRC, 1, 3, 4), Scalar(2))
        self.assertEqual(eval_link(SYMCIRC, 1, 4, 4), Scalar(1))

    def teste_circulante_reversa(self):
        self.assertEqual(eval_link(REVCIRC, 2, 3, 4), Scalar(1))

    def teste_hankel_duplamente_simetrica(self):
        self.assertEqual(eval_link(DSYMHANKEL, 1, 1, 4), Scalar(2))

    def teste_simetria(self):
        for link in BUILTIN_LINKS.values():
            for i, j in itertools.product(range(1, 6), repeat=2):
                self.assertEqual(eval_link(link, i, j, 5), eval_link(link, j, i, 5))

    def teste_simetria_das_grades(self):
        links = list(BUILTIN_LINKS.values()) + [
            compose(Transform.square(), TOEPLITZ),
            compose(Transform.square(), SYMCIRC),
            compose(Transform.coprime_power(2, 3), WIGNER),
            parse_link("coprimepower(5,7,wigner)"),
        ]
        for link in links:
            for n in range(1, 33):
                ids = value_grid(link, n).ids
                self.assertTrue(numpy.array_equal(ids, ids.T), (link, n))

    def teste_indice_fora_do_intervalo(self):
        self.assertRaises(ArgumentError, lambda: eval_link(TOEPLITZ, 0, 1, 4))
        self.assertRaises(ArgumentError, lambda: eval_link(TOEPLITZ, 1, 5, 4))

    def teste_composta_fora_do_dominio(self):
        link = compose(Transform.square(), WIGNER)
        self.assertRaises(EvaluationError, lambda: eval_link(link, 1, 2, 3))

    def teste_quadrado_da_toeplitz(self):
        link = compose(Transform.square(), TOEPLITZ)
        self.assertEqual(eval_link(link, 1, 4, 5), Scalar(9))

    def teste_potencia_coprima(self):
        link = compose(Transform.coprime_power(2, 3), WIGNER)
        value = eval_link(link, 3, 1, 4)
        self.assertEqual(value, PowerPair(2, 3, 1, 3))
        self.assertEqual(value.value(), 54)


class ValueGridTestCase(SimpleTestCase):
    def teste_concorda_com_eval_link(self):
        links = list(BUILTIN_LINKS.values()) + [compose(Transform.square(), HANKEL)]
        for link in links:
            for n in (1, 4, 7):
                grid = value_grid(link, n)
                for i, j in itertools.product(range(n), repeat=2):
                    self.assertEqual(grid.values[grid.ids[i, j]], eval_link(link, i + 1, j + 1, n))

    def teste_valores_ordenados(self):
        grid = value_grid(WIGNER, 4)
        keys = [v.sort_key() for v in grid.values]
        self.assertEqual(keys, sorted(keys))

    def teste_somente_leitura(self):
        grid = value_grid(TOEPLITZ, 4)
        def escreve():
            grid.ids[0, 0] = 3
        self.assertRaises(ValueError, escreve)


class ProfileTestCase(SimpleTestCase):
    def teste_toeplitz_n4(self):
        p = profile(TOEPLITZ, 4)
        self.assertEqual((p.delta, p.kn, p.alphan), (2, 4, 6))

    def teste_wigner_n4(self):
        p = profile(WIGNER, 4)
        self.assertEqual((p.delta, p.kn, p.alphan), (1, 10, 2))

    def teste_hankel_n4(self):
        p = profile(HANKEL, 4)
        self.assertEqual((p.delta, p.kn, p.alphan), (1, 7, 4))

    def teste_circulante_simetrica_n4(self):
        p = profile(SYMCIRC, 4)
        self.assertEqual((p.delta, p.kn, p.alphan), (2, 3, 8))

    def teste_propriedade_b(self):
        for n in (5, 16, 33):
            self.assertEqual(profile(WIGNER, n).delta, 1)
            self.assertEqual(profile(HANKEL, n).delta, 1)
            self.assertEqual(profile(REVCIRC, n).delta, 1)
            self.assertTrue(profile(TOEPLITZ, n).delta <= 2)
            self.assertTrue(profile(SYMCIRC, n).delta <= 2)
            self.assertTrue(profile(DSYMHANKEL, n).delta <= 2)

    def teste_n_pequeno(self):
        self.assertRaises(ArgumentError, lambda: profile(TOEPLITZ, 1))

    def teste_produto_com_wigner(self):
        for link in (TOEPLITZ, HANKEL, SYMCIRC):
            p = profile_product(WIGNER, link, 6)
            self.assertEqual(p.kn, 6 * 7 // 2)
            self.assertEqual(p.alphan, 2)

    def teste_produto_toeplitz_hankel(self):
        p = profile_product(TOEPLITZ, HANKEL, 4)
        self.assertEqual(p.delta, 1)
        self.assertEqual(p.alphan, 2)
        self.assertEqual(p.kn, 10)
        self.assertTrue(max(4, 7) <= p.kn <= 4 + 7)

    def teste_produto_passa_da_soma(self):
        # (|i-j|, i+j) determina {i, j}: k_Z = n(n+1)/2 > k_T + k_H a partir de n = 5.
        p = profile_product(TOEPLITZ, HANKEL, 5)
        self.assertEqual(p.kn, 15)
        self.assertTrue(p.kn > profile(TOEPLITZ, 5).kn + profile(HANKEL, 5).kn)

    def teste_limites_do_produto(self):
        for X, Y in itertools.combinations_with_replacement(BUILTIN_LINKS.values(), 2):
            for n in range(2, 33):
                pX, pY, pZ = profile(X, n), profile(Y, n), profile_product(X, Y, n)
                self.assertTrue(max(pX.kn, pY.kn) <= pZ.kn <= pX.kn * pY.kn, (X, Y, n))
                self.assertTrue(pZ.alphan <= min(pX.alphan, pY.alphan), (X, Y, n))
                self.assertTrue(pZ.kn * pZ.alphan >= n * n, (X, Y, n))
                self.assertEqual(pZ.delta, min(pX.delta, pY.delta))

    def teste_produto_com_a_mesma_ligacao(self):
        for link in BUILTIN_LINKS.values():
            p, q = profile(link, 9), profile_product(link, link, 9)
            self.assertEqual((q.kn, q.alphan), (p.kn, p.alphan))

    def teste_crescimento(self):
        for link in BUILTIN_LINKS.values():
            previous = 0
            for n in range(2, 65):
                p = profile(link, n)
                self.assertTrue(p.kn >= previous, (link, n))
                self.assertTrue(n * n <= p.kn * p.alphan <= 4 * n * n, (link, n))
                self.assertTrue(p.alphan <= n * p.delta, (link, n))
                previous = p.kn

    def teste_composicao_injetiva_preserva_perfil(self):
        pares = [(compose(Transform.square(), TOEPLITZ), TOEPLITZ),
                 (compose(Transform.square(), HANKEL), HANKEL),
                 (compose(Transform.coprime_power(2, 3), WIGNER), WIGNER)]
        for composed, base in pares:
            for n in range(2, 33):
                p, q = profile(composed, n), profile(base, n)
                self.assertEqual((p.kn, p.alphan, p.delta), (q.kn, q.alphan, q.delta))


class TransformTestCase(SimpleTestCase):
    def teste_bases_nao_coprimas(self):
        self.assertRaises(ArgumentError, lambda: Transform.coprime_power(2, 4))

    def teste_injetividade(self):
        self.assertTrue(is_injective_on_range(Transform.square(), TOEPLITZ, 8))
        self.assertTrue(is_injective_on_range(Transform.coprime_power(2, 3), WIGNER, 5))
        self.assertFalse(is_injective_on_range(Transform.square(), WIGNER, 5))

    def teste_tabela_induzida(self):
        rho = induced_transform(TOEPLITZ, SYMCIRC, 6)
        self.assertEqual(rho.apply(Scalar(4)), Scalar(2))
        self.assertFalse(rho.injective)
        self.assertFalse(is_injective_on_range(rho, TOEPLITZ, 6))

        link = compose(rho, TOEPLITZ)
        for i, j in itertools.product(range(1, 7), repeat=2):
            self.assertEqual(eval_link(link, i, j, 6), eval_link(SYMCIRC, i, j, 6))

    def teste_tabela_induzida_a_partir_da_wigner(self):
        rho = induced_transform(WIGNER, HANKEL, 5)
        self.assertEqual(rho.apply(Pair(2, 4)), Scalar(6))

    def teste_tabela_impossivel(self):
        self.assertRaises(ArgumentError, lambda: induced_transform(SYMCIRC, TOEPLITZ, 6))

    def teste_tabela_fora_do_dominio(self):
        rho = Transform.user_table({Scalar(0): Scalar(1)})
        self.assertRaises(EvaluationError, lambda: rho.apply(Scalar(2)))


class DeltaLadderTestCase(SimpleTestCase):
    def teste_toeplitz_estavel(self):
        deltas, grows = delta_ladder(TOEPLITZ, [2, 4, 8, 16])
        self.assertEqual(deltas, [(2, 1), (4, 2), (8, 2), (16, 2)])
        self.assertFalse(grows)

    def teste_ligacao_constante_cresce(self):
        constante = Transform.user_table({Scalar(t): Scalar(0) for t in range(32)})
        deltas, grows = delta_ladder(compose(constante, TOEPLITZ), [4, 8, 16, 32])
        self.assertEqual([d for _, d in deltas], [4, 8, 16, 32])
        self.assertTrue(grows)


class ParseLinkTestCase(SimpleTestCase):
    def teste_nomes_simples(self):
        for name, link in BUILTIN_LINKS.items():
            self.assertEqual(parse_link(name.upper()), link)

    def teste_compostas(self):
        self.assertEqual(parse_link("square(toeplitz)").name, "square(toeplitz)")
        link = parse_link("coprimepower(2, 3, wigner)")
        self.assertEqual(link.name, "coprimepower(2,3,wigner)")
        self.assertEqual(parse_link(link.name), link)

    def teste_nome_invalido(self):
        self.assertRaises(ArgumentError, lambda: parse_link("circulante"))
        self.assertRaises(ArgumentError, lambda: parse_link("cube(toeplitz)"))
        self.assertRaises(ArgumentError, lambda: parse_link("coprimepower(2,wigner)"))
