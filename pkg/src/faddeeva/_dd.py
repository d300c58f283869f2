"""Minimal double-double arithmetic used to tabulate expansion coefficients.

Values are ``(hi, lo)`` tuples with ``|lo| <= ulp(hi)/2``.  Only the handful of
operations needed by :func:`faddeeva.kernel.precompute_coeffs` are provided.
"""
import math

_SPLITTER = 134217729.0  # 2**27 + 1

PI = (math.pi, 1.2246467991473532e-16)


def two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def _split(a):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def dd(a):
    return (float(a), 0.0)


def add(x, y):
    s, e = two_sum(x[0], y[0])
    e += x[1] + y[1]
    return quick_two_sum(s, e)


def neg(x):
    return (-x[0], -x[1])


def mul(x, y):
    p, e = two_prod(x[0], y[0])
    e += x[0] * y[1] + x[1] * y[0]
    return quick_two_sum(p, e)


def exp(x):
    e = math.exp(x[0])
    return quick_two_sum(e, e * x[1])


def sin(x):
    s = math.sin(x[0])
    return quick_two_sum(s, math.cos(x[0]) * x[1])


def cos(x):
    c = math.cos(x[0])
    return quick_two_sum(c, -math.sin(x[0]) * x[1])


def to_float(x):
    return x[0] + x[1]
