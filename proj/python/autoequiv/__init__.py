"""Automorphic equivalence of finite algebras, models and multi-models.

Models are passed as model-file JSON, either as text or as an already
parsed dict; results are plain dicts and lists.
"""

import json

from . import _core
from ._core import (
    AutoequivError,
    DomainMismatch,
    IoError,
    ParseError,
    PreconditionError,
    ResourceError,
    ShapeError,
    SignatureError,
    ValidationError,
)

__all__ = [
    "AutoequivError",
    "DomainMismatch",
    "IoError",
    "ParseError",
    "PreconditionError",
    "ResourceError",
    "ShapeError",
    "SignatureError",
    "ValidationError",
    "automorphisms",
    "complement",
    "equivalent",
    "graph_checks",
    "load",
    "normalize",
    "oracle_equivalent",
    "run_cli",
    "sigma_transform",
    "simple_graph_complement",
    "validate",
    "verify",
]


def _text(model):
    return model if isinstance(model, str) else json.dumps(model)


def load(path):
    """Reads a model file and returns its canonical JSON text."""
    with open(path, encoding="utf-8") as f:
        return normalize(f.read())


def validate(model):
    return _core.validate(_text(model))


def normalize(model):
    return _core.normalize(_text(model))


def automorphisms(model, relations_only=False, max_nodes=None):
    return _core.automorphisms(_text(model), relations_only, max_nodes)


def equivalent(a, b, mode="multi", strict_single_mu=False, max_nodes=None):
    return _core.equivalent(_text(a), _text(b), mode, strict_single_mu, max_nodes)


def verify(a, b, witness, mode="multi"):
    return _core.verify(_text(a), _text(b), witness, mode)


def sigma_transform(model, sigma):
    return _core.sigma_transform(_text(model), sigma)


def complement(model):
    return _core.complement(_text(model))


def simple_graph_complement(model):
    return _core.simple_graph_complement(_text(model))


def graph_checks(model):
    return _core.graph_checks(_text(model))


def oracle_equivalent(a, b, mode="multi"):
    return _core.oracle_equivalent(_text(a), _text(b), mode)


def run_cli(args):
    return _core.run_cli(list(args))
