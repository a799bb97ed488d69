# -*- encoding: utf-8 -*-
import os, errno
import json
import hashlib
import tempfile

"""
Classes e funções utilitárias que NÃO dependem do Django.

Os aplicativos de cálculo (`linkfn`, `ensemble`, `spectral`, `words`,
`circuits`, `oracle`) só importam daqui; somente o aplicativo
`experimentos` conversa com o Django.
"""


class SchurLSDError(Exception):
    """
    Classe base dos erros levantados pelos aplicativos de cálculo.
    """


class ArgumentError(SchurLSDError, ValueError):
    """
    Argumento fora do domínio da operação (índice fora do intervalo,
    comprimento ímpar, dimensões diferentes, nome desconhecido...).
    """


class StateError(SchurLSDError, RuntimeError):
    """
    Operação inválida pro estado atual do objeto (e.g. escalar duas vezes
    a mesma matriz).
    """


class EvaluationError(SchurLSDError, LookupError):
    """
    Uma transformação não está definida sobre um valor produzido pela
    função de ligação base.
    """


class BudgetExceeded(SchurLSDError, RuntimeError):
    """
    A busca de circuitos passaria do orçamento de nós configurado.
    """


def mkdir_p(path):
    """
    Cria o diretório fornecido (e seus pais, se necessário) caso ele não exista.  (imita `mkdir -p`)
    """
    try:
        os.makedirs(path)
    except OSError as exc:
        if exc.errno == errno.EEXIST and os.path.isdir(path):
            pass
        else:
            raise


def format_float(x):
    """
    Formata um `float` com 17 algarismos significativos, o suficiente
    pra reconstruir exatamente o mesmo `float` na leitura.
    """
    return format(float(x), ".17g")


def canonical_json(data):
    """
    Serializa `data` em JSON canônico: chaves ordenadas, sem espaços
    supérfluos. Usado pra calcular hashes de configuração.
    """
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def config_hash(data):
    """
    Retorna o SHA-256 (hexadecimal) do JSON canônico de `data`.
    """
    return hashlib.sha256(canonical_json(data).encode("utf-8")).hexdigest()


def atomic_write(path, content):
    """
    Escreve `content` (string) em `path` de forma atômica: escreve num
    arquivo temporário no mesmo diretório e o renomeia por cima do
    destino.

    Argumentos:
        - path: caminho do arquivo de destino
        - content: o conteúdo, uma string
    """
    directory = os.path.dirname(os.path.abspath(path))
    mkdir_p(directory)
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp_")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as tmp_file:
            tmp_file.write(content)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise
