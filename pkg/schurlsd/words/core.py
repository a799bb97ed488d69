# -*- encoding: utf-8 -*-
"""
Palavras sobre o alfabeto {a, b, c, ...}.

Uma palavra é guardada como uma tupla de inteiros, começando em 1
("abba" é `(1, 2, 2, 1)`). Toda palavra é *canônica*: a primeira letra
é `a` e cada letra nova é a próxima ainda não usada.
"""

import logging
from dataclasses import dataclass

from schurlsd.utils import ArgumentError

logger = logging.getLogger(__name__)

__all__ = [
    "Word", "canonicalize", "parse_word", "enumerate_pair_matched",
    "enumerate_words", "is_catalan", "is_catalan_by_deletion",
    "generating_positions", "catalan_number", "MAX_PAIR_MATCHED_LENGTH",
]

MAX_PAIR_MATCHED_LENGTH = 16
"""
Maior comprimento aceito por `enumerate_pair_matched` (15!! palavras).
"""

MAX_WORD_LENGTH = 12
"""
Maior comprimento aceito por `enumerate_words`.
"""

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def _is_canonical(letters):
    seen = 0
    for letter in letters:
        if letter > seen + 1 or letter < 1:
            return False
        seen = max(seen, letter)
    return True


@dataclass(frozen=True, order=True)
class Word:
    """
    Uma palavra canônica.

    A ordem (`<`) é a lexicográfica das tuplas, que coincide com a ordem
    alfabética das palavras.
    """

    letters: tuple

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise ArgumentError("Palavra vazia")
        if not _is_canonical(letters):
            raise ArgumentError("Palavra não canônica: {0}".format(letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        return self.letters[index]

    @property
    def h(self):
        return len(self.letters)

    @property
    def num_letters(self):
        return max(self.letters)

    def multiplicities(self):
        """
        Lista com o número de ocorrências de cada letra, na ordem das
        letras.
        """
        counts = [0] * self.num_letters
        for letter in self.letters:
            counts[letter - 1] += 1
        return counts

    def is_pair_matched(self):
        return all(c == 2 for c in self.multiplicities())

    def first_occurrences(self):
        """
        Retorna uma lista `first` tal que `first[i]` é a posição (de 1 a h)
        da primeira ocorrência da letra da posição `i+1`.
        """
        seen = {}
        first = []
        for position, letter in enumerate(self.letters, start=1):
            seen.setdefault(letter, position)
            first.append(seen[letter])
        return first

    def __str__(self):
        if self.num_letters <= len(_ALPHABET):
            return "".join(_ALPHABET[x - 1] for x in self.letters)
        return "[" + ",".join(str(x) for x in self.letters) + "]"


def canonicalize(raw):
    """
    Renomeia as letras de uma sequência qualquer pela ordem da primeira
    ocorrência.

    Argumentos:
        - raw: uma string ("xyyx") ou uma sequência de objetos comparáveis

    >>> str(canonicalize("bccb"))
    'abba'
    """
    names = {}
    letters = []
    for item in raw:
        if item not in names:
            names[item] = len(names) + 1
        letters.append(names[item])
    if not letters:
        raise ArgumentError("Palavra vazia")
    return Word(tuple(letters))


def parse_word(text):
    """
    Interpreta uma palavra escrita com letras minúsculas. Diferente de
    `canonicalize`, exige que o texto já seja canônico.
    """
    text = str(text).strip()
    if not text or any(c not in _ALPHABET for c in text):
        raise ArgumentError("Palavra inválida: {0!r}".format(text))
    return Word(tuple(_ALPHABET.index(c) + 1 for c in text))


def _check_even_length(h, maximum):
    if h < 2 or h % 2 != 0:
        raise ArgumentError("Comprimento precisa ser par e >= 2 (recebido {0})".format(h))
    if h > maximum:
        raise ArgumentError("Comprimento {0} acima do máximo {1}".format(h, maximum))


def enumerate_pair_matched(h):
    """
    Lista todas as palavras canônicas de comprimento `h` em que cada letra
    aparece exatamente duas vezes, em ordem lexicográfica. São
    `(h-1)!! = (2k)! / (2^k k!)` palavras.

    >>> [str(w) for w in enumerate_pair_matched(4)]
    ['aabb', 'abab', 'abba']
    """
    _check_even_length(h, MAX_PAIR_MATCHED_LENGTH)

    words = []
    letters = [0] * h

    def rec(next_letter):
        try:
            start = letters.index(0)
        except ValueError:
            words.append(Word(tuple(letters)))
            return

        letters[start] = next_letter
        for partner in range(start + 1, h):
            if letters[partner] == 0:
                letters[partner] = next_letter
                rec(next_letter + 1)
                letters[partner] = 0
        letters[start] = 0

    rec(1)
    words.sort()
    return words


def enumerate_words(h):
    """
    Lista todas as palavras canônicas de comprimento `h` (sem restrição de
    multiplicidade), em ordem lexicográfica.

    São os números de Bell: 1, 2, 5, 15, 52, ...
    """
    if not 1 <= h <= MAX_WORD_LENGTH:
        raise ArgumentError("Comprimento fora de [1, {0}]: {1}".format(MAX_WORD_LENGTH, h))

    words = []

    def rec(prefix, used):
        if len(prefix) == h:
            words.append(Word(tuple(prefix)))
            return
        for letter in range(1, used + 2):
            prefix.append(letter)
            rec(prefix, max(used, letter))
            prefix.pop()

    rec([], 0)
    return words


def _check_pair_matched(w):
    if not w.is_pair_matched():
        raise ArgumentError("{0} não é pareada".format(w))


def is_catalan(w):
    """
    Retorna `True` se a palavra pareada `w` é de Catalan (não-cruzada).

    Usa uma pilha: a primeira ocorrência de uma letra a empilha; a segunda
    precisa encontrá-la no topo.
    """
    _check_pair_matched(w)
    stack = []
    opened = set()
    for letter in w:
        if letter not in opened:
            opened.add(letter)
            stack.append(letter)
        elif not stack or stack.pop() != letter:
            return False
    return True


def is_catalan_by_deletion(w):
    """
    Mesmo resultado de `is_catalan`, mas pela definição: apaga letras
    duplas adjacentes ("...xx...") até a palavra ficar vazia ou não ter
    mais letras duplas.
    """
    _check_pair_matched(w)
    letters = list(w)
    while letters:
        for i in range(len(letters) - 1):
            if letters[i] == letters[i + 1]:
                del letters[i:i + 2]
                break
        else:
            return False
    return True


def generating_positions(w):
    """
    Conjunto das posições geradoras de `w`: a posição 0 e a primeira
    ocorrência (de 1 a h) de cada letra.
    """
    first = w.first_occurrences()
    return frozenset([0]) | frozenset(i for i, f in enumerate(first, start=1) if f == i)


def catalan_number(k):
    """
    O k-ésimo número de Catalan, exato.
    """
    if k < 0:
        raise ArgumentError("k negativo: {0}".format(k))
    result = 1
    for i in range(k):
        result = result * 2 * (2 * i + 1) // (i + 2)
    return result
