"""Integer arithmetic behind the constructions: gcds, Bezout twists, dimension bounds."""
from __future__ import annotations

import math

from .exceptions import HypothesisError


def galois_gcd(p: int, r: int, s: int) -> int:
    """``gcd(p^r + 1, p^s - 1)`` by the three-case closed form."""
    if s < 1 or p < 2 or r < 0:
        raise ValueError("need s >= 1, p >= 2, r >= 0")
    g = math.gcd(r, s)
    if (s // g) % 2 == 0:
        return p**g + 1
    return 1 if p % 2 == 0 else 2


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``a x + b y = g = gcd(a, b)``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        t, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - t * x1
        y0, y1 = y1, y0 - t * y1
    return a, x0, y0


def bezout_twist(p: int, h: int, e_prime: int, target: int) -> tuple[int, int]:
    """``(mu, nu)`` with ``mu (p^e' + 1) + nu (p^h - 1) = target``, ``0 <= mu < (p^h-1)/gcd``."""
    a, b = p**e_prime + 1, p**h - 1
    g, x, _ = extended_gcd(a, b)
    if target % g:
        raise HypothesisError(f"{target} is not a multiple of gcd({a}, {b}) = {g}")
    mu = (x * (target // g)) % (b // g)
    nu, rem = divmod(target - mu * a, b)
    assert rem == 0
    return mu, nu


def dimension_bound(p: int, e_prime: int, n: int, deg_h: int) -> int:
    """``floor((p^e' + n - 1 - deg h) / (p^e' + 1))``."""
    pe = p**e_prime
    return (pe + n - 1 - deg_h) // (pe + 1)


def hermitian_bound(p: int, h: int, n: int) -> int:
    """``floor((sqrt(q) + n - 1) / (sqrt(q) + 1))``, the usual Hermitian seed range."""
    r = p ** (h // 2)
    return (r + n - 1) // (r + 1)


def _floor_log(p: int, num: int, den: int) -> int | None:
    """Largest ``e`` with ``p^e <= num / den``; ``None`` when ``num / den < 1``."""
    if num < den or den <= 0:
        return None
    e = 0
    while p ** (e + 1) * den <= num:
        e += 1
    return e


def comparison_threshold(p: int, h: int, n: int, deg_h: int) -> int | None:
    """``floor(log_p((r(n-3) - (r+1) deg h - 1) / (r + n - 1)))`` with ``r = sqrt(q)``.

    ``None`` when the argument of the logarithm is below 1, so that no
    ``e' >= 0`` qualifies.
    """
    r = p ** (h // 2)
    return _floor_log(p, r * (n - 3) - (r + 1) * deg_h - 1, r + n - 1)


def bound_comparison(p: int, h: int, e_prime: int, deg_h: int, n: int) -> bool:
    """Whether ``e'`` meets one of the two sufficient conditions for the larger range.

    Condition 1: ``deg h = 0`` and ``n >= 3``.  Condition 2: ``deg h > 0``,
    ``e'`` at most :func:`comparison_threshold` and
    ``n >= floor((4r + (r+1) deg h) / (r - 1))``.
    """
    if h % 2:
        raise ValueError("h must be even")
    if not 0 <= e_prime < h // 2:
        raise ValueError("need 0 <= e' < h/2")
    if deg_h == 0:
        return n >= 3
    r = p ** (h // 2)
    t = comparison_threshold(p, h, n, deg_h)
    return t is not None and e_prime <= t and n >= (4 * r + (r + 1) * deg_h) // (r - 1)


def mersenne_feasible(p: int, e: int) -> int | None:
    """``t`` with ``2^t = p^e + 1``, or ``None``."""
    x = p**e + 1
    if x & (x - 1):
        return None
    return x.bit_length() - 1
