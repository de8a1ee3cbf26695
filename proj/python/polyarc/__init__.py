"""Polyarc geometry, Babylonian approximations and sexagesimal arithmetic.

Thin wrapper over the C++ extension. Exact values come back as
fractions.Fraction, high-precision reals as decimal strings.
"""

import json
from fractions import Fraction

from . import _polyarc
from ._polyarc import DomainError, MissingSurrogate, ParseError

__all__ = [
    "DomainError",
    "MissingSurrogate",
    "ParseError",
    "compute",
    "heron",
    "oracle_area",
    "rational_to_sexagesimal",
    "render",
    "sexagesimal_to_rational",
    "surd",
    "table",
    "verify_all",
]


def _fraction(text):
    return Fraction(text)


def _decode(obj):
    if isinstance(obj, dict):
        if set(obj) == {"num", "den"}:
            return Fraction(int(obj["num"]), int(obj["den"]))
        return {key: _decode(value) for key, value in obj.items()}
    if isinstance(obj, list):
        return [_decode(item) for item in obj]
    return obj


def sexagesimal_to_rational(text):
    """'0;13,20' -> Fraction(2, 9)."""
    return _fraction(_polyarc.sexagesimal_to_rational(text))


def rational_to_sexagesimal(q, places=5, round=False):
    return _polyarc.rational_to_sexagesimal(str(Fraction(q)), places, round)


def heron(radicand, seed, steps):
    """Seed followed by `steps` Heron iterates, as fractions."""
    return [_fraction(x) for x in _polyarc.heron(str(Fraction(radicand)), str(Fraction(seed)), steps)]


def surd(a, b, plus=True):
    """a ± b/(2a), the linear approximation of sqrt(a² ± b)."""
    return _fraction(_polyarc.surd(str(Fraction(a)), str(Fraction(b)), plus))


def compute(figure, size=1, n=0, context=None, precision=30):
    """Figure metrics as a dict; context=None evaluates exactly."""
    return _decode(json.loads(_polyarc.compute(figure, str(Fraction(size)), n, context or "", precision)))


def verify_all(precision=30):
    return _decode(json.loads(_polyarc.verify_all(precision)))


def table(which):
    return _decode(json.loads(_polyarc.table(which)))


def render(subject, guides=False, width=480.0, height=480.0, n=0):
    return _polyarc.render(subject, guides, width, height, n)


def oracle_area(figure, n=0, chords_per_arc=4096):
    return _polyarc.oracle_area(figure, n, chords_per_arc)
