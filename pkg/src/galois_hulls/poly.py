"""Dense univariate polynomials over a :class:`~galois_hulls.gf.GF`.

A polynomial is a list of element codes, constant term first.  The zero
polynomial is ``[]`` and has degree ``-inf``.
"""
from __future__ import annotations

import math
from typing import Sequence

from .gf import GF

NEG_INF = -math.inf


def trim(f: Sequence[int]) -> list[int]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f: Sequence[int]) -> int | float:
    f = trim(f)
    return len(f) - 1 if f else NEG_INF


def evaluate(F: GF, f: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def add(F: GF, f: Sequence[int], g: Sequence[int]) -> list[int]:
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return trim(F.add(a, b) for a, b in zip(f, g))


def scale(F: GF, f: Sequence[int], c: int) -> list[int]:
    return trim(F.mul(a, c) for a in f)


def mul(F: GF, f: Sequence[int], g: Sequence[int]) -> list[int]:
    f, g = trim(f), trim(g)
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out)


def from_roots(F: GF, roots: Sequence[int]) -> list[int]:
    """The monic polynomial ``prod (x - r)``."""
    out = [1]
    for r in roots:
        out = mul(F, out, [F.neg(r), 1])
    return out


def power(F: GF, f: Sequence[int], k: int) -> list[int]:
    out = [1]
    base = trim(f)
    while k:
        if k & 1:
            out = mul(F, out, base)
        base = mul(F, base, base)
        k >>= 1
    return out


def divide_linear(F: GF, f: Sequence[int], r: int) -> list[int]:
    """Quotient of ``f`` by ``(x - r)`` via synthetic division (remainder dropped)."""
    n = len(f)
    if n <= 1:
        return []
    out = [0] * (n - 1)
    acc = f[-1]
    out[-1] = acc
    for i in range(n - 2, 0, -1):
        acc = F.add(f[i], F.mul(acc, r))
        out[i - 1] = acc
    return out


def interpolate(F: GF, xs: Sequence[int], ys: Sequence[int]) -> list[int]:
    """The unique polynomial of degree < n through the points ``(xs[i], ys[i])``."""
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    master = from_roots(F, xs)
    out = [0] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = divide_linear(F, master, xi)
        denom = F.prod(F.sub(xi, xj) for j, xj in enumerate(xs) if j != i)
        c = F.div(yi, denom)
        for j, b in enumerate(basis):
            out[j] = F.add(out[j], F.mul(c, b))
    return trim(out)
