"""Python front end for the qtorder native core.

Exact values come back as :class:`fractions.Fraction`; reports come back as
dictionaries following the CLI's JSON schema.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    QtorderError,
    ball_enumerate,
    ball_size,
    brooks_count,
    brooks_homogenized,
    counting_hom,
    dehornoy_compare,
    dehornoy_floor,
    embedding,
    free_reduce,
    handle_reduce,
    homeo_lex_compare,
    magnus_compare,
    modular_decompose,
    mobius_translation_number,
    pl_compose,
    pl_invert,
    rademacher,
    rademacher_raw,
)

__all__ = [
    "QtorderError",
    "ball_enumerate",
    "ball_size",
    "braid_translation_number",
    "brooks_count",
    "brooks_homogenized",
    "compute",
    "counting_hom",
    "dehornoy_compare",
    "dehornoy_floor",
    "embedding",
    "free_reduce",
    "handle_reduce",
    "homeo_lex_compare",
    "magnus_compare",
    "modular_decompose",
    "mobius_translation_number",
    "pl_compose",
    "pl_eval",
    "pl_invert",
    "pl_rotation_number",
    "rademacher",
    "rademacher_raw",
    "verify",
]


def _pair(p):
    return Fraction(p[0]), Fraction(p[1])


def pl_rotation_number(lift, iters=1000):
    """Enclosure (lo, hi) of the rotation number of a PL lift given as a dict or JSON text."""
    return _pair(_core.pl_rotation_number(_text(lift), iters))


def braid_translation_number(braid, strands, iters=64):
    return _pair(_core.braid_translation_number(braid, strands, iters))


def pl_eval(lift, x):
    return Fraction(_core.pl_eval(_text(lift), str(Fraction(x))))


def compute(subject, **kwargs):
    return [json.loads(line) for line in _core.compute(subject, **kwargs)]


def verify(suite, radius=None, iters=None, seed=0):
    return [json.loads(line) for line in _core.verify(suite, radius, iters, seed)]


def _text(lift):
    return lift if isinstance(lift, str) else json.dumps(lift)
