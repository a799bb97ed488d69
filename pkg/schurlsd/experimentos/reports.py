# -*- encoding: utf-8 -*-

"""Tabelas dos resultados dos experimentos, exportadas em CSV ou JSON.

Classes definidas:

- `Table`, um gerador de tabelas baseado em `tablib.Dataset`.
- `TableField`, um campo de uma `Table`.

E as tabelas usadas pelos comandos: `eigenvalue_table`,
`histogram_table`, `moment_table`, `word_table`.
"""

import types

import tablib
from django.utils.text import slugify

from schurlsd.utils import format_float
from schurlsd.words import is_catalan, generating_positions


class TableField(object):
    """Um campo de uma :class:`Table`. Guarda o cabeçalho e o slug, que é
    o nome da coluna nos arquivos exportados."""

    def __init__(self, header, slug=None):
        """Inicializa um :class:`TableField`.

        Se `slug` não for dado, é gerado a partir de `header`."""

        self.header = header
        self.slug = slug or slugify(header).replace("-", "_")


class Table(tablib.Dataset):
    """Uma extensão de `tablib.Dataset` com campos, que processa os dados
    que recebe com uma função passada na inicialização."""

    def __init__(self, fields, process_data, *args, **kwargs):
        """Inicializa um objeto :class:`Table`; estende
        :class:`tablib.Dataset.__init__`.

        :Parameters:
            - `fields`: lista de objetos :class:`TableField`.
            - `process_data`: função que processa os dados, criando as
              linhas da tabela. Recebe a própria tabela como primeiro
              argumento."""

        super(Table, self).__init__(*args, **kwargs)
        self.fields = fields
        self._process_data = types.MethodType(process_data, self)
        self.headers = [f.slug for f in self.fields]

    def process_data(self, *args, **kwargs):
        """Processa os dados, criando as linhas correspondentes.

        Repassa pra função de processamento dada na inicialização."""
        self._process_data(*args, **kwargs)
        return self


def _eigenvalue_rows(table, spectra):
    for trial, spectrum in enumerate(spectra):
        for index, value in enumerate(spectrum.eigenvalues):
            table.append([trial, index, format_float(value)])


def eigenvalue_table(spectra):
    fields = [TableField("trial"), TableField("index"), TableField("eigenvalue")]
    return Table(fields, _eigenvalue_rows).process_data(spectra)


def _histogram_rows(table, bins):
    for center, density in bins:
        table.append([format_float(center), format_float(density)])


def histogram_table(bins):
    fields = [TableField("center"), TableField("density")]
    return Table(fields, _histogram_rows).process_data(bins)


def _moment_rows(table, estimates, seed, targets):
    for e in estimates:
        record = e.to_record(seed)
        target = targets.get(e.h) if targets else None
        z_score = None
        if target is not None and e.stderr > 0:
            z_score = (e.mean - float(target)) / e.stderr
        table.append([record[f.slug] for f in table.fields[:7]] +
                     [None if target is None else float(target), z_score])


def moment_table(estimates, seed, targets=None):
    """
    Tabela dos momentos estimados, com os alvos teóricos (`targets`,
    `dict` `h -> valor`) e o escore-z de cada estimativa.
    """
    fields = [TableField("h"), TableField("mean"), TableField("variance"),
              TableField("stderr"), TableField("n"), TableField("trials"),
              TableField("seed"), TableField("target"), TableField("z score")]
    return Table(fields, _moment_rows).process_data(estimates, seed, targets)


def _word_rows(table, words):
    for w in words:
        table.append([str(w), is_catalan(w), sorted(generating_positions(w))])


def word_table(words):
    fields = [TableField("word"), TableField("catalan"), TableField("generating positions")]
    return Table(fields, _word_rows).process_data(words)
