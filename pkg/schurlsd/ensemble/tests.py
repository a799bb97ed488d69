# -*- encoding: utf-8 -*-
import numpy
from django.test import SimpleTestCase

from schurlsd.utils import ArgumentError, StateError
from schurlsd.linkfn import (WIGNER, TOEPLITZ, HANKEL, BUILTIN_LINKS,
                             value_grid)
from schurlsd.ensemble import (RADEMACHER, GAUSSIAN, DISTRIBUTIONS,
                               MatrixRealization, ProductSpec, ROLE_X,
                               ROLE_Y, child_seed, parse_distribution,
                               sample_inputs, realize, schur_product, scale,
                               to_csv)


class DistributionTestCase(SimpleTestCase):
    def teste_media_e_variancia(self):
        for dist in DISTRIBUTIONS.values():
            x = sample_inputs(dist, 10 ** 6, 12345)
            self.assertTrue(abs(x.mean()) < 5e-3, dist)
            self.assertTrue(abs(x.var() - 1.0) < 1e-2, dist)

    def teste_nome_desconhecido(self):
        self.assertEqual(parse_distribution("Gaussian"), GAUSSIAN)
        self.assertRaises(ArgumentError, lambda: parse_distribution("cauchy"))


class ChildSeedTestCase(SimpleTestCase):
    def teste_deterministico(self):
        self.assertEqual(child_seed(42, ROLE_X, 3), child_seed(42, ROLE_X, 3))

    def teste_papeis_e_tentativas_diferentes(self):
        seeds = {child_seed(42, role, t) for role in (ROLE_X, ROLE_Y) for t in range(50)}
        self.assertEqual(len(seeds), 100)

    def teste_cabe_em_64_bits(self):
        self.assertTrue(0 <= child_seed(2 ** 64 - 1, ROLE_Y, 10 ** 6) < 2 ** 64)

    def teste_argumentos_invalidos(self):
        self.assertRaises(ArgumentError, lambda: child_seed(-1, ROLE_X, 0))
        self.assertRaises(ArgumentError, lambda: child_seed(1, 3, 0))


class RealizeTestCase(SimpleTestCase):
    def teste_toeplitz_n3_tres_sorteios(self):
        A = realize(TOEPLITZ, GAUSSIAN, 3, 7)
        self.assertEqual(len(numpy.unique(A.entries)), 3)

    def teste_wigner_n2_tres_sorteios(self):
        A = realize(WIGNER, GAUSSIAN, 2, 7)
        self.assertEqual(len(numpy.unique(A.entries)), 3)

    def teste_reprodutivel(self):
        A = realize(HANKEL, RADEMACHER, 10, 99)
        B = realize(HANKEL, RADEMACHER, 10, 99)
        self.assertTrue(numpy.array_equal(A.entries, B.entries))

    def teste_simetria_exata(self):
        for link in BUILTIN_LINKS.values():
            A = realize(link, GAUSSIAN, 9, 1)
            self.assertTrue(numpy.array_equal(A.entries, A.entries.T))

    def teste_fiel_a_ligacao(self):
        for link in BUILTIN_LINKS.values():
            for n in (5, 16):
                A = realize(link, GAUSSIAN, n, 3)
                grid = value_grid(link, n)
                self.assertEqual(len(numpy.unique(A.entries)), len(grid))
                for value_id in range(len(grid)):
                    cells = A.entries[grid.ids == value_id]
                    self.assertTrue(numpy.all(cells == cells[0]))

    def teste_dimensao_invalida(self):
        self.assertRaises(ArgumentError, lambda: realize(TOEPLITZ, GAUSSIAN, 0, 1))

    def teste_csv(self):
        A = MatrixRealization([[0.1, 2.0], [2.0, -1.0 / 3.0]])
        lines = to_csv(A).strip().splitlines()
        self.assertEqual(len(lines), 2)
        self.assertEqual(lines[0].split(","), ["0.10000000000000001", "2"])
        self.assertEqual(float(lines[1].split(",")[1]), -1.0 / 3.0)


class SchurProductTestCase(SimpleTestCase):
    def setUp(self):
        self.A = realize(TOEPLITZ, GAUSSIAN, 6, 1)
        self.B = realize(HANKEL, GAUSSIAN, 6, 2)

    def teste_identidade(self):
        ones = MatrixRealization(numpy.ones((6, 6)))
        self.assertTrue(numpy.array_equal(schur_product(self.A, ones).entries, self.A.entries))

    def teste_comutativo(self):
        self.assertTrue(numpy.array_equal(schur_product(self.A, self.B).entries,
                                          schur_product(self.B, self.A).entries))

    def teste_wigner_rademacher_censura(self):
        W = realize(WIGNER, RADEMACHER, 6, 5)
        Z = schur_product(W, self.A)
        self.assertTrue(numpy.array_equal(numpy.abs(Z.entries), numpy.abs(self.A.entries)))

    def teste_dimensoes_diferentes(self):
        C = realize(TOEPLITZ, GAUSSIAN, 5, 1)
        self.assertRaises(ArgumentError, lambda: schur_product(self.A, C))

    def teste_apos_escala(self):
        self.assertRaises(StateError, lambda: schur_product(scale(self.A), self.B))


class ScaleTestCase(SimpleTestCase):
    def teste_n4(self):
        A = scale(MatrixRealization(numpy.full((4, 4), 2.0)))
        self.assertTrue(numpy.all(A.entries == 1.0))
        self.assertTrue(A.scaled)

    def teste_n1(self):
        A = scale(MatrixRealization([[3.5]]))
        self.assertEqual(A.entries[0, 0], 3.5)

    def teste_duas_vezes(self):
        A = scale(MatrixRealization(numpy.eye(3)))
        self.assertRaises(StateError, lambda: scale(A))

    def teste_produto_escalado(self):
        X = realize(TOEPLITZ, GAUSSIAN, 8, 1)
        Y = realize(HANKEL, GAUSSIAN, 8, 2)
        Z = scale(schur_product(X, Y))
        self.assertTrue(numpy.allclose(Z.entries, X.entries * Y.entries / numpy.sqrt(8)))


class ProductSpecTestCase(SimpleTestCase):
    def spec(self, **kwargs):
        params = dict(linkX=TOEPLITZ, linkY=HANKEL, distX=GAUSSIAN, distY=GAUSSIAN,
                      n=8, master_seed=2013, trials=3)
        params.update(kwargs)
        return ProductSpec(**params)

    def teste_x_independe_de_y(self):
        a = self.spec()
        b = self.spec(linkY=WIGNER, distY=RADEMACHER)
        self.assertEqual(a.seeds(1)[0], b.seeds(1)[0])
        self.assertNotEqual(a.seeds(1)[0], a.seeds(1)[1])

    def teste_semente_compartilhada(self):
        spec = self.spec(linkY=TOEPLITZ, shared_seed=True)
        Z = spec.realize_trial(0)
        self.assertTrue(numpy.all(Z.entries >= 0))

    def teste_tentativas_invalidas(self):
        self.assertRaises(ArgumentError, lambda: self.spec(trials=0))
