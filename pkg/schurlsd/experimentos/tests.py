# -*- encoding: utf-8 -*-
import os
import io
import json
import shutil
import tempfile

from django.core.management import call_command, find_commands, load_command_class
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from schurlsd.utils import ArgumentError
from schurlsd.linkfn import BUILTIN_LINKS, Scalar, Transform, compose
from schurlsd.experimentos import (ConfigError, RunConfig, RunManifest,
                                   TABLE2_ROWS, reference_target,
                                   reference_moments, parse_transform,
                                   cmd_words, cmd_spectrum, cmd_verify_table2)


class TempDirMixin(object):
    def setUp(self):
        self.tmp = tempfile.mkdtemp(prefix="schurlsd-")

    def tearDown(self):
        shutil.rmtree(self.tmp, ignore_errors=True)

    def config_file(self, data, name="config.json"):
        path = os.path.join(self.tmp, name)
        with open(path, "w") as f:
            json.dump(data, f)
        return path

    def read_json(self, *parts):
        with open(os.path.join(self.tmp, *parts)) as f:
            return json.load(f)

    def run_command(self, command, config, out="out", **options):
        stdout = io.StringIO()
        call_command(command, config=self.config_file(config, command + ".json"),
                     out=os.path.join(self.tmp, out), stdout=stdout, **options)
        return stdout.getvalue()


class RunConfigTestCase(TempDirMixin, SimpleTestCase):
    def teste_padroes_tem_semente(self):
        for command in ["spectrum", "moments", "words", "pw", "check", "verify-table2"]:
            self.assertIn("master_seed", RunConfig.load(command).params)

    def teste_comando_desconhecido(self):
        self.assertRaises(ConfigError, lambda: RunConfig.load("plot"))

    def teste_chave_desconhecida(self):
        path = self.config_file({"trails": 3})
        with self.assertRaises(ConfigError) as ctx:
            RunConfig.load("moments", path)
        self.assertIn("trails", str(ctx.exception))

    def teste_ligacao_desconhecida_cita_chave_e_valor(self):
        config = RunConfig.load("moments", self.config_file({"linkY": "toeplits"}))
        with self.assertRaises(ConfigError) as ctx:
            config.link("linkY")
        self.assertIn("linkY", str(ctx.exception))
        self.assertIn("toeplits", str(ctx.exception))

    def teste_distribuicao_desconhecida(self):
        config = RunConfig.load("moments", self.config_file({"distX": "cauchy"}))
        self.assertRaises(ConfigError, lambda: config.distribution("distX"))

    def teste_json_invalido(self):
        path = os.path.join(self.tmp, "ruim.json")
        with open(path, "w") as f:
            f.write("{n: 3")
        self.assertRaises(ConfigError, lambda: RunConfig.load("words", path))

    def teste_semente_da_linha_de_comando(self):
        config = RunConfig.load("words", seed=7)
        self.assertEqual(config.get("master_seed"), 7)
        self.assertRaises(ConfigError, lambda: RunConfig.load("words", seed=-1))
        self.assertRaises(ConfigError, lambda: RunConfig.load("words", seed=2 ** 64))

    def teste_hash(self):
        self.assertEqual(RunConfig.load("words").hash, RunConfig.load("words").hash)
        self.assertNotEqual(RunConfig.load("words").hash, RunConfig.load("words", seed=1).hash)
        self.assertNotEqual(RunConfig.load("words").hash, RunConfig.load("pw").hash)
        self.assertEqual(len(RunConfig.load("words").hash), 64)

    def teste_inteiros(self):
        config = RunConfig.load("moments", self.config_file({"n": 2.5, "trials": True}))
        self.assertRaises(ConfigError, lambda: config.integer("n"))
        self.assertRaises(ConfigError, lambda: config.integer("trials"))

    def teste_escada(self):
        self.assertEqual(RunConfig.load("pw").ladder("ladder", 4), (8, 16, 32, 64))
        config = RunConfig.load("pw", self.config_file({"ladder": [8, 8, 16]}))
        self.assertRaises(ConfigError, lambda: config.ladder("ladder", 4))
        config = RunConfig.load("pw", self.config_file({"ladder": [8, 16]}))
        self.assertRaises(ConfigError, lambda: config.ladder("ladder", 4))
        config = RunConfig.load("pw", self.config_file({"ladder": [6, 12, 24]}))
        self.assertEqual(config.ladder("ladder", 4), (6, 12, 24))


class ReferenceTestCase(SimpleTestCase):
    def teste_linhas(self):
        self.assertEqual(sorted(TABLE2_ROWS), [1, 2, 3, 4, 5])
        self.assertEqual(len(TABLE2_ROWS[1].products), 5)
        self.assertEqual(len(TABLE2_ROWS[2].products), 6)
        for row in TABLE2_ROWS.values():
            for x, y in row.products:
                self.assertIn(x, BUILTIN_LINKS)
                self.assertIn(y, BUILTIN_LINKS)

    def teste_alvo_comutativo(self):
        T, H, SC, W = (BUILTIN_LINKS[k] for k in ("toeplitz", "hankel", "symcirc", "wigner"))
        self.assertEqual(reference_target(T, H), "semicircle")
        self.assertEqual(reference_target(H, T), "semicircle")
        self.assertEqual(reference_target(SC, T), "toeplitz")
        self.assertEqual(reference_target(H, BUILTIN_LINKS["dsymhankel"]), "hankel")
        self.assertIsNone(reference_target(W, W))

    def teste_alvo_de_composicoes_injetivas(self):
        T, W, SC = (BUILTIN_LINKS[k] for k in ("toeplitz", "wigner", "symcirc"))
        U = compose(Transform.coprime_power(2, 3), W)
        V = compose(Transform.square(), T)
        self.assertEqual(reference_target(U, V), "semicircle")
        self.assertEqual(reference_target(V, SC), "toeplitz")
        self.assertEqual(reference_target(compose(Transform.square(), V), SC), "toeplitz")

    def teste_tabela_nao_e_resolvida(self):
        T, SC = BUILTIN_LINKS["toeplitz"], BUILTIN_LINKS["symcirc"]
        rho = Transform.user_table({Scalar(t): Scalar(t + 1) for t in range(40)}, injective=True)
        self.assertIsNone(reference_target(compose(rho, T), SC))

    def teste_momentos_do_semicirculo(self):
        seq = reference_moments("semicircle", 6)
        self.assertEqual([seq.beta(h) for h in range(1, 7)], [0, 1, 0, 2, 0, 5])

    def teste_transformacoes(self):
        self.assertEqual(parse_transform("square").name, "square")
        self.assertEqual(parse_transform("coprimepower(2, 3)").name, "coprimepower(2,3)")
        self.assertRaises(ArgumentError, lambda: parse_transform("cube"))
        self.assertRaises(ArgumentError, lambda: parse_transform("coprimepower(2,4)"))


class ManifestTestCase(TempDirMixin, SimpleTestCase):
    def teste_escrita(self):
        manifest = RunManifest(command="words", config_hash="abc", version="1.0.0",
                               wall_time=0.5, checks=[{"name": "x", "pass": True}],
                               files=["words.json"])
        manifest.write(self.tmp)
        data = self.read_json("manifest.json")
        self.assertTrue(data["passed"])
        self.assertEqual(data["files"], ["words.json"])
        self.assertEqual(os.listdir(self.tmp), ["manifest.json"])

    def teste_falha(self):
        manifest = RunManifest("check", "abc", "1.0.0", 0.0,
                               [{"name": "x", "pass": True}, {"name": "y", "pass": False}], [])
        self.assertFalse(manifest.passed)


class WordsCommandTestCase(TempDirMixin, SimpleTestCase):
    def teste_lista(self):
        self.run_command("words", {"two_k": 4, "action": "list"})
        data = self.read_json("out", "words.json")
        words = [(r["word"], r["catalan"]) for r in data["words"]]
        self.assertEqual(words, [("aabb", True), ("abab", False), ("abba", True)])
        self.assertEqual(data["config_hash"], self.read_json("out", "manifest.json")["config_hash"])

    def teste_contagem(self):
        self.run_command("words", {"two_k": 6, "action": "count"})
        data = self.read_json("out", "words.json")
        self.assertEqual((data["total"], data["catalan"]), (15, 5))

    def teste_comprimento_impar(self):
        self.assertRaises(CommandError, lambda: self.run_command("words", {"two_k": 3}))

    def teste_direto(self):
        config = RunConfig.load("words", self.config_file({"two_k": 8, "action": "count"}))
        result = cmd_words(config, self.tmp)
        self.assertEqual(result.files, ["words.json"])
        self.assertEqual(self.read_json("words.json")["total"], 105)
        self.assertEqual(self.read_json("words.json")["catalan"], 14)


class SpectrumCommandTestCase(TempDirMixin, SimpleTestCase):
    def teste_caso_degenerado(self):
        config = RunConfig.load("spectrum", self.config_file({"n": 2, "trials": 1}))
        result = cmd_spectrum(config, self.tmp)
        with open(os.path.join(self.tmp, "eigenvalues.csv")) as f:
            lines = f.read().strip().splitlines()
        self.assertEqual(lines[0].strip(), "trial,index,eigenvalue")
        self.assertEqual(len(lines), 3)
        self.assertIn("ks.json", result.files)

    def teste_histograma(self):
        self.run_command("spectrum", {"linkX": "wigner", "linkY": "toeplitz", "n": 200,
                                      "trials": 2, "bins": 20, "per_trial_spectra": False})
        data = self.read_json("out", "histogram.json")
        self.assertEqual(len(data["bins"]), 20)
        area = sum(b["density"] for b in data["bins"]) * 6.0 / 20
        self.assertAlmostEqual(area, 1.0, delta=0.02)
        self.assertLess(self.read_json("out", "ks.json")["distance"], 0.15)
        self.assertFalse(os.path.exists(os.path.join(self.tmp, "out", "eigenvalues.csv")))

    def teste_sem_referencia(self):
        config = RunConfig.load("spectrum", self.config_file({"linkX": "wigner", "linkY": "wigner",
                                                              "n": 10}))
        result = cmd_spectrum(config, self.tmp)
        self.assertNotIn("ks.json", result.files)

    def teste_intervalo_invalido(self):
        config = RunConfig.load("spectrum", self.config_file({"n": 4, "lo": 1.0, "hi": -1.0}))
        self.assertRaises(ConfigError, lambda: cmd_spectrum(config, self.tmp))


class MomentsCommandTestCase(TempDirMixin, SimpleTestCase):
    config = {"linkX": "toeplitz", "linkY": "hankel", "n": 30, "trials": 4, "h_max": 4}

    def teste_alvos(self):
        self.run_command("moments", self.config)
        data = self.read_json("out", "moments.json")
        self.assertEqual(data["reference"], "semicircle")
        targets = [r["target"] for r in data["moments"]]
        self.assertEqual(targets, [0.0, 1.0, 0.0, 2.0])
        self.assertEqual([r["h"] for r in data["moments"]], [1, 2, 3, 4])

    def teste_repetivel_com_threads(self):
        self.run_command("moments", self.config, out="a", threads=1)
        self.run_command("moments", self.config, out="b", threads=3)
        with open(os.path.join(self.tmp, "a", "moments.json")) as a:
            with open(os.path.join(self.tmp, "b", "moments.json")) as b:
                self.assertEqual(a.read(), b.read())


class PwCommandTestCase(TempDirMixin, SimpleTestCase):
    def teste_wigner_abab(self):
        self.run_command("pw", {"linkX": "wigner", "word": "abab", "ladder": [8, 16, 32],
                                "expected": 0})
        data = self.read_json("out", "pw.json")
        self.assertEqual(data["n_ladder"], [8, 16, 32])
        self.assertLessEqual(data["p_estimate"], 0.03)
        self.assertTrue(self.read_json("out", "manifest.json")["passed"])

    def teste_conjunto(self):
        self.run_command("pw", {"linkX": "toeplitz", "linkY": "hankel", "word": "abab",
                                "word2": "abba", "ladder": [8, 16, 32]})
        data = self.read_json("out", "pw.json")
        self.assertEqual((data["word"], data["word2"]), ("abab", "abba"))
        self.assertLessEqual(data["p_estimate"], 0.03)

    def teste_palavra_invalida(self):
        self.assertRaises(CommandError, lambda: self.run_command("pw", {"word": "abc"}))


class CheckCommandTestCase(TempDirMixin, SimpleTestCase):
    def teste_implies(self):
        self.run_command("check", {"relation": "implies", "linkX": "toeplitz",
                                   "linkY": "revcirc", "n": 10, "expected": False})
        self.assertFalse(self.read_json("out", "check.json")["holds"])

    def teste_falha_da_codigo_1(self):
        with self.assertRaises(CommandError) as ctx:
            self.run_command("check", {"relation": "implies", "linkX": "toeplitz",
                                       "linkY": "revcirc", "n": 10})
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertFalse(self.read_json("out", "manifest.json")["passed"])

    def teste_invariance_com_tabela_induzida(self):
        self.run_command("check", {"relation": "invariance", "linkX": "toeplitz",
                                   "linkY": "symcirc", "two_k": 4, "n": 8})
        records = self.read_json("out", "check.json")["records"]
        self.assertEqual(len(records), 3)
        self.assertTrue(all(r["subset"] for r in records))

    def teste_invariance_com_transformacao(self):
        self.run_command("check", {"relation": "invariance", "linkX": "toeplitz",
                                   "transform": "square", "two_k": 4, "n": 8})
        records = self.read_json("out", "check.json")["records"]
        self.assertTrue(all(r["equal"] and r["injective"] for r in records))

    def teste_compatible(self):
        self.run_command("check", {"relation": "compatible", "linkX": "toeplitz",
                                   "linkY": "hankel", "two_k": 4, "ladder": [8, 16, 32]})
        self.assertTrue(self.read_json("out", "manifest.json")["passed"])

    def teste_relacao_desconhecida(self):
        self.assertRaises(CommandError, lambda: self.run_command("check", {"relation": "equals"}))


class VerifyTable2CommandTestCase(TempDirMixin, SimpleTestCase):
    LINHA_3 = {"row": 3, "n": 60, "trials": 6, "dist": "gaussian", "h_max": 4,
               "stderr_factor": 50.0, "toeplitz_tolerance": 1.0}

    def checks(self):
        return {c["name"]: c for c in self.read_json("out", "manifest.json")["checks"]}

    def teste_linha_3(self):
        self.run_command("verify-table2", self.LINHA_3)
        checks = self.checks()
        self.assertIn("row3_toeplitz_symcirc_beta4", checks)
        self.assertIn("row3_toeplitz_symcirc_odd1", checks)
        self.assertIn("row3_toeplitz_symcirc_bound4", checks)
        self.assertNotIn("variance_decay", checks)
        self.assertTrue(all(c["pass"] for c in checks.values()))
        targets = self.read_json("out", "targets.json")
        self.assertEqual(list(targets), ["toeplitz"])

    def teste_tolerancia_zero_falha(self):
        with self.assertRaises(CommandError) as ctx:
            self.run_command("verify-table2", dict(self.LINHA_3, toeplitz_tolerance=0.0))
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertFalse(self.checks()["row3_toeplitz_symcirc_beta4"]["pass"])
        self.assertFalse(self.read_json("out", "manifest.json")["passed"])

    def teste_linha_desconhecida(self):
        for row in (0, 6, "2"):
            config = RunConfig.load("verify-table2", self.config_file(dict(self.LINHA_3, row=row)))
            self.assertRaises(ArgumentError, lambda: cmd_verify_table2(config, os.path.join(self.tmp, "out")))
        self.assertRaises(CommandError, lambda: self.run_command("verify-table2", dict(self.LINHA_3, row=6)))


class ComandosTestCase(SimpleTestCase):
    def teste_nome_igual_ao_arquivo(self):
        path = os.path.join(os.path.dirname(__file__), "management")
        names = find_commands(path)
        self.assertEqual(sorted(names), ["check", "moments", "pw", "spectrum", "verify-table2", "words"])
        for name in names:
            self.assertEqual(load_command_class("schurlsd.experimentos", name).name, name)
