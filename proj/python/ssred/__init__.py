"""Exact p-adic computations for the mod p reduction of V_{k,L}.

Integers come back as int and rationals as fractions.Fraction. Traces and
predictions are the same JSON documents the command-line tool emits.
"""

import json
from fractions import Fraction

from . import _core
from ._core import SsredError, binom_mod_p2, stirling_lucas_check

__all__ = [
    "SsredError",
    "binom_mod_p2",
    "eliminate",
    "lambda_closed",
    "lambda_report",
    "predict",
    "run_cli",
    "solve_lambda",
    "star_full",
    "star_mod_p2",
    "stirling2",
    "stirling_lucas_check",
    "vp",
]


def _text(q):
    if isinstance(q, Fraction):
        return f"{q.numerator}/{q.denominator}"
    if isinstance(q, int):
        return str(q)
    if isinstance(q, str):
        return q
    raise TypeError(f"expected int, Fraction or str, got {type(q).__name__}")


def vp(q, p):
    """p-adic valuation of an int or Fraction; None for zero."""
    v = _core.vp(_text(q), p)
    return None if v == "inf" else Fraction(v)


def stirling2(t, s):
    return int(_core.stirling2(t, s))


def solve_lambda(p, b, n):
    """Map from each index i in I to lambda_i."""
    return {i: Fraction(v) for i, v in _core.solve_lambda(p, b, n)}


def lambda_closed(p, b, n, i):
    return Fraction(_core.lambda_closed(p, b, n, i))


def lambda_report(p, b, n):
    return json.loads(_core.lambda_json(p, b, n))


def star_full(p, r, n, j, vL):
    return Fraction(_core.star_full(p, r, n, j, _text(vL)))


def star_mod_p2(p, r, n, j, vL):
    return _core.star_mod_p2(p, r, n, j, _text(vL))


def eliminate(p, r, vL=None):
    return json.loads(_core.eliminate_json(p, r, None if vL is None else _text(vL)))


def predict(p, r, vL=None):
    return json.loads(_core.predict_json(p, r, None if vL is None else _text(vL)))


def run_cli(*args):
    """Runs the command-line tool in process; returns (exit code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
