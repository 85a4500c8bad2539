"""Exact Hodge tables and mirror checks for invertible Landau-Ginzburg orbifolds.

Inputs are the same JSON documents the command-line tool reads, given as a
dict, a JSON string, or a path. Reports come back as dicts.
"""

import json
import os

from . import _bhk
from ._bhk import BhkError, CapExceeded, DegeneratePotential, InputError, NotCalabiYau

__all__ = [
    "BhkError", "CapExceeded", "DegeneratePotential", "InputError", "NotCalabiYau",
    "analyze", "rings", "verify", "check_unified", "dual", "milnor_dims", "exit_code", "render_text",
]


def _text(spec):
    if isinstance(spec, dict):
        return json.dumps(spec)
    if isinstance(spec, os.PathLike) or (isinstance(spec, str) and not spec.lstrip().startswith("{")):
        with open(spec, encoding="utf-8") as fh:
            return fh.read()
    return spec


def analyze(spec):
    return json.loads(_bhk.analyze(_text(spec)))


def rings(spec, side="B", engine=None, window_margin=None, threads=None):
    return json.loads(_bhk.rings(_text(spec), side, engine, window_margin, threads))


def verify(spec, engine=None, window_margin=None, degree_bound=None, threads=None):
    return json.loads(_bhk.verify(_text(spec), engine, window_margin, degree_bound, threads))


def check_unified(spec, degree_bound=None):
    return json.loads(_bhk.check_unified(_text(spec), degree_bound))


def dual(spec):
    return json.loads(_bhk.dual(_text(spec)))


def milnor_dims(spec):
    """Nonzero graded pieces of the Milnor ring as {degree: dimension}."""
    return dict(_bhk.milnor_dims(_text(spec)))


def exit_code(report):
    return _bhk.exit_code(json.dumps(report))


def render_text(report):
    return _bhk.render_text(json.dumps(report))
