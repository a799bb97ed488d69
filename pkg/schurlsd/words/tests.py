# -*- encoding: utf-8 -*-
import math
import itertools

from django.test import SimpleTestCase

from schurlsd.utils import ArgumentError
from schurlsd.words import (Word, canonicalize, parse_word,
                            enumerate_pair_matched, enumerate_words,
                            is_catalan, is_catalan_by_deletion,
                            generating_positions, catalan_number)


def w(text):
    return parse_word(text)


class CanonicalizeTestCase(SimpleTestCase):
    def teste_exemplos(self):
        self.assertEqual(canonicalize("baab"), w("abba"))
        self.assertEqual(canonicalize("abab"), w("abab"))
        self.assertEqual(canonicalize("ccdd"), w("aabb"))

    def teste_idempotente(self):
        for word in enumerate_words(5):
            self.assertEqual(canonicalize(word), word)

    def teste_invariante_por_permutacao_de_letras(self):
        raw = "abcabcca"
        for perm in itertools.permutations("xyz"):
            renamed = raw.translate(str.maketrans("abc", "".join(perm)))
            self.assertEqual(canonicalize(renamed), canonicalize(raw))

    def teste_vazia(self):
        self.assertRaises(ArgumentError, lambda: canonicalize(""))

    def teste_palavra_nao_canonica(self):
        self.assertRaises(ArgumentError, lambda: Word((2, 1)))
        self.assertRaises(ArgumentError, lambda: parse_word("abd"))

    def teste_texto(self):
        self.assertEqual(str(Word((1, 2, 2, 1))), "abba")


class EnumerateTestCase(SimpleTestCase):
    def teste_2k_4(self):
        self.assertEqual([str(x) for x in enumerate_pair_matched(4)], ["aabb", "abab", "abba"])

    def teste_2k_2(self):
        self.assertEqual(enumerate_pair_matched(2), [w("aa")])

    def teste_contagem(self):
        for k in range(1, 7):
            words = enumerate_pair_matched(2 * k)
            expected = math.factorial(2 * k) // (2 ** k * math.factorial(k))
            self.assertEqual(len(words), expected)
            self.assertEqual(len(set(words)), expected)
            self.assertEqual(words, sorted(words))
            self.assertTrue(all(x.is_pair_matched() for x in words))

    def teste_comprimento_impar(self):
        self.assertRaises(ArgumentError, lambda: enumerate_pair_matched(5))
        self.assertRaises(ArgumentError, lambda: enumerate_pair_matched(18))

    def teste_numeros_de_bell(self):
        self.assertEqual([len(enumerate_words(h)) for h in range(1, 7)], [1, 2, 5, 15, 52, 203])


class CatalanTestCase(SimpleTestCase):
    def teste_sao_catalan(self):
        for text in ("abba", "aabbcc", "abccbdda"):
            self.assertTrue(is_catalan(w(text)))

    def teste_nao_sao_catalan(self):
        for text in ("abab", "abccab", "abcddcab"):
            self.assertFalse(is_catalan(w(text)))

    def teste_contagem(self):
        for k in range(1, 7):
            count = sum(1 for x in enumerate_pair_matched(2 * k) if is_catalan(x))
            self.assertEqual(count, math.comb(2 * k, k) // (k + 1))
            self.assertEqual(count, catalan_number(k))

    def teste_concorda_com_delecao(self):
        for k in range(1, 7):
            for x in enumerate_pair_matched(2 * k):
                self.assertEqual(is_catalan(x), is_catalan_by_deletion(x))

    def teste_nao_pareada(self):
        self.assertRaises(ArgumentError, lambda: is_catalan(w("aaab")))
        self.assertRaises(ArgumentError, lambda: is_catalan_by_deletion(w("abc")))


class GeneratingPositionsTestCase(SimpleTestCase):
    def teste_exemplos(self):
        self.assertEqual(generating_positions(w("abbcab")), {0, 1, 2, 4})
        self.assertEqual(generating_positions(w("aa")), {0, 1})
        self.assertEqual(generating_positions(w("abab")), {0, 1, 2})

    def teste_tamanho(self):
        for x in enumerate_words(6):
            self.assertEqual(len(generating_positions(x)), x.num_letters + 1)
