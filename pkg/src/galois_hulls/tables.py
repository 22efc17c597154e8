"""Parameter tables: admissible (p, h, e, e') families and worked bound examples."""
from __future__ import annotations

import math
from typing import Iterator

from sympy import isprime, primerange

from .bounds import comparison_threshold, dimension_bound, hermitian_bound, mersenne_feasible

ENUM_COLUMNS = (
    "class", "p", "h", "q", "e", "e_prime", "t", "m", "w", "z",
    "n", "k_min", "k_max", "l_min", "l_max",
)
BOUND_COLUMNS = ("p", "h", "n", "deg_h", "e_prime", "k_max")

# (p, h, n, deg_h, e' values) of the worked examples.
EXAMPLES = {
    "example1": (3, 8, 6561, 0, (1, 3, 5, 7)),
    "example5": (3, 6, 520, 7, (0, 2, 4)),
    "example5-part2": (3, 10, 48801, 24644, (0, 2, 4, 6, 8)),
}


def twist_gcd_ok(h: int, e_prime: int) -> int | None:
    """``e = gcd(e', h)`` when ``h / e`` is even and ``1 <= e' <= h-1``, else ``None``."""
    if not 1 <= e_prime <= h - 1:
        return None
    e = math.gcd(e_prime, h)
    return e if (h // e) % 2 == 0 else None


def hermitian_transfer_ok(h: int, e_prime: int) -> bool:
    """``h`` even, ``0 <= e' <= h-1`` and ``h / gcd(e', h)`` odd."""
    return h % 2 == 0 and 0 <= e_prime <= h - 1 and (h // math.gcd(e_prime, h)) % 2 == 1


def coset_params(p: int, h: int) -> Iterator[tuple[int, int, int]]:
    """``(e, t, m)`` with ``2^t = p^e + 1`` and ``2^t | h/m``."""
    if p == 2:
        return
    for e in range(h):
        t = mersenne_feasible(p, e)
        if t is None:
            continue
        for m in range(1, h + 1):
            if h % m == 0 and (h // m) % (2**t) == 0:
                yield e, t, m


def table3(h_max: int) -> list[tuple[int, int, tuple[int, ...]]]:
    """Rows ``(h, e, e' values)`` for even ``h <= h_max``."""
    rows = []
    for h in range(2, h_max + 1, 2):
        groups: dict[int, list[int]] = {}
        for ep in range(1, h):
            e = twist_gcd_ok(h, ep)
            if e is not None:
                groups.setdefault(e, []).append(ep)
        rows += [(h, e, tuple(eps)) for e, eps in sorted(groups.items())]
    return rows


def table4(h_max: int) -> list[tuple[int, tuple[int, ...]]]:
    return [
        (h, tuple(ep for ep in range(h) if hermitian_transfer_ok(h, ep)))
        for h in range(2, h_max + 1, 2)
        if any(hermitian_transfer_ok(h, ep) for ep in range(h))
    ]


def table5(q_max: int) -> list[tuple[int, int, int, int, int]]:
    """Rows ``(p, t, m, h, q)`` with ``e = 1`` and ``q <= q_max``.

    ``2^t = p + 1`` forces ``p = 2^t - 1``, so ``t`` is enumerated instead of ``p``.
    """
    rows = []
    t = 2
    while (2**t - 1) ** (2**t) <= q_max:
        p = 2**t - 1
        if isprime(p):
            h = 2**t
            while p**h <= q_max:
                rows += [(p, t, m, h, p**h) for ee, _, m in coset_params(p, h) if ee == 1]
                h += 2**t
        t += 1
    return sorted(rows)


def example_rows(name: str) -> list[dict]:
    if name not in EXAMPLES:
        raise KeyError(f"unknown example {name!r}; choose from {sorted(EXAMPLES)}")
    p, h, n, deg_h, eps = EXAMPLES[name]
    return [
        {"p": p, "h": h, "n": n, "deg_h": deg_h, "e_prime": ep, "k_max": dimension_bound(p, ep, n, deg_h)}
        for ep in eps
    ]


def remark_thresholds() -> list[dict]:
    """Largest ``e'`` passing the comparison test for the two worked examples."""
    out = []
    for name in ("example5", "example5-part2"):
        p, h, n, deg_h, _ = EXAMPLES[name]
        out.append({
            "p": p, "h": h, "n": n, "deg_h": deg_h,
            "threshold": comparison_threshold(p, h, n, deg_h),
            "hermitian_k_max": hermitian_bound(p, h, n),
        })
    return out


def _prime_powers(q_max: int, h_filter: int | None) -> Iterator[tuple[int, int]]:
    for p in primerange(2, math.isqrt(q_max) + 1):
        h = 2
        while p**h <= q_max:
            if h_filter is None or h == h_filter:
                yield p, h
            h += 1


def _blank(cls: int, p: int, h: int) -> dict:
    row = dict.fromkeys(ENUM_COLUMNS, "")
    row.update({"class": cls, "p": p, "h": h, "q": p**h})
    return row


def enumerate_class(
    cls: int,
    q_max: int,
    h_filter: int | None = None,
    n: int | None = None,
    deg_h: int = 0,
) -> Iterator[dict]:
    """Admissible parameter rows for one of the six construction classes.

    Classes 1-4 transfer a seed of ``n`` locators; without ``n`` the length
    and dimension columns stay empty.  Classes 2, 4 and 6 are extended
    codes: the ``n`` column is the code length (locators plus one) while
    ``k_max`` is computed from the locator count.
    """
    if cls not in range(1, 7):
        raise ValueError(f"unknown class {cls}; expected 1..6")
    extended = cls % 2 == 0
    for p, h in _prime_powers(q_max, h_filter):
        q = p**h
        if cls in (1, 2):
            if q < 5:
                continue
            pairs = [(twist_gcd_ok(h, ep), ep) for ep in range(1, h)]
            pairs = [(e, ep) for e, ep in pairs if e is not None]
        elif cls in (3, 4):
            if p == 2 or h % 2:
                continue
            pairs = [(h // 2, ep) for ep in range(h) if hermitian_transfer_ok(h, ep)]
        else:
            for e, t, m in coset_params(p, h):
                for z in range(1, h // m):
                    for w in range(1, p**m + 1):
                        locs = w * p ** (m * z)
                        k_max = dimension_bound(p, e, locs, 0)
                        if k_max < 1:
                            continue
                        row = _blank(cls, p, h)
                        row.update({
                            "e": e, "e_prime": e, "t": t, "m": m, "w": w, "z": z,
                            "n": locs + extended, "k_min": 1, "k_max": k_max,
                            "l_min": 0, "l_max": k_max - extended,
                        })
                        yield row
            continue
        for e, ep in pairs:
            row = _blank(cls, p, h)
            row.update({"e": e, "e_prime": ep})
            if n is not None:
                if n > q:
                    continue
                k_max = dimension_bound(p, ep, n, deg_h)
                if k_max < 1:
                    continue
                row.update({"n": n + extended, "k_min": 1, "k_max": k_max,
                            "l_min": 0, "l_max": k_max - extended})
            yield row
