"""Generalized Reed-Solomon codes and their self-orthogonality witnesses."""
from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Sequence

import numpy as np

from . import poly
from .codes import LinearCode
from .exceptions import FieldError, HypothesisError, NotSelfOrthogonal
from .gf import GF, _nth_root_code, field_create


@dataclass(frozen=True)
class GrsSpec:
    """``GRS_k(a, v)``, or ``GRS_k(a, v, inf)`` when ``extended``.

    ``a`` and ``v`` hold element codes of ``field``.
    """

    field: GF
    a: tuple[int, ...]
    v: tuple[int, ...]
    k: int
    extended: bool = False

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        v = tuple(int(x) for x in self.v)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "v", v)
        if len(a) != len(v):
            raise ValueError("locator and multiplier vectors differ in length")
        if len(set(a)) != len(a):
            raise ValueError("code locators must be pairwise distinct")
        if any(x == 0 for x in v):
            raise ValueError("column multipliers must be nonzero")
        if self.k < 1:
            raise ValueError("dimension must be at least 1")
        if self.k > len(a) + (1 if self.extended else 0):
            raise ValueError(f"dimension {self.k} exceeds length")

    @property
    def n(self) -> int:
        """Number of locators (the extended code has length ``n + 1``)."""
        return len(self.a)

    @property
    def length(self) -> int:
        return self.n + (1 if self.extended else 0)

    def with_multipliers(self, v: Sequence[int], k: int | None = None) -> "GrsSpec":
        return GrsSpec(self.field, self.a, tuple(v), self.k if k is None else k, self.extended)

    def to_dict(self) -> dict:
        F = self.field
        return {
            "field": F.to_dict(),
            "a": [F.element_digits(x) for x in self.a],
            "v": [F.element_digits(x) for x in self.v],
            "k": self.k,
            "extended": self.extended,
        }

    @classmethod
    def from_dict(cls, d: dict, F: GF | None = None) -> "GrsSpec":
        if F is None:
            fd = d["field"]
            F = field_create(int(fd["p"]), int(fd["h"]), fd.get("modulus"))
        a = [F.from_digits(x) for x in d["a"]]
        v = [F.from_digits(x) for x in d["v"]]
        return cls(F, tuple(a), tuple(v), int(d["k"]), bool(d.get("extended", False)))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "GrsSpec":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class SelfOrthogonalWitness:
    """Monic ``h`` and ``lam`` with ``lam * u_i * h(a_i) = v_i^(p^e + 1)``."""

    h_poly: list[int]
    lam: int
    e: int
    g_poly: list[int] = dc_field(default_factory=list)

    @property
    def deg_h(self) -> int:
        return int(poly.degree(self.h_poly))

    def to_dict(self, F: GF) -> dict:
        return {
            "e": self.e,
            "lambda": F.element_digits(self.lam),
            "h": [F.element_digits(c) for c in self.h_poly],
            "deg_h": self.deg_h,
        }


def compute_u(F: GF, a: Sequence[int]) -> list[int]:
    """``u_i = prod_{j != i} (a_i - a_j)^-1``."""
    a = [int(x) for x in a]
    if len(set(a)) != len(a):
        raise ValueError("repeated locators")
    if len(a) < 2:
        raise ValueError("need at least two locators")
    return [F.inv(F.prod(F.sub(ai, aj) for j, aj in enumerate(a) if j != i)) for i, ai in enumerate(a)]


def generator_matrix(spec: GrsSpec) -> LinearCode:
    """Rows ``(v_1 a_1^r, ..., v_n a_n^r)`` for ``r < k``, plus the ``f_{k-1}`` column."""
    F = spec.field
    a = np.array(spec.a, dtype=np.int64)
    v = np.array(spec.v, dtype=np.int64)
    rows = [F.mul(v, F.pow(a, r)) for r in range(spec.k)]
    G = np.array(rows, dtype=np.int64).reshape(spec.k, spec.n)
    if spec.extended:
        col = np.zeros((spec.k, 1), dtype=np.int64)
        col[-1, 0] = 1
        G = np.hstack([G, col])
    return LinearCode(F, G)


def encode(spec: GrsSpec, f: Sequence[int]) -> np.ndarray:
    F = spec.field
    if poly.degree(f) > spec.k - 1:
        raise ValueError("message polynomial degree exceeds k-1")
    word = [F.mul(vi, poly.evaluate(F, f, ai)) for ai, vi in zip(spec.a, spec.v)]
    if spec.extended:
        f = list(f) + [0] * spec.k
        word.append(int(f[spec.k - 1]))
    return np.array(word, dtype=np.int64)


def _scaled_targets(spec: GrsSpec, e: int, u: Sequence[int]) -> list[int]:
    """``u_i^-1 v_i^(p^e + 1)``."""
    F = spec.field
    pe1 = F.p**e + 1
    return [F.div(F.pow(vi, pe1), ui) for vi, ui in zip(spec.v, u)]


@functools.lru_cache(maxsize=64)
def _witness_setup(spec: GrsSpec, e: int) -> tuple[list, list, list]:
    """Per-(spec, e) data for :func:`dual_membership_witness`.

    Returns the scaled targets ``u_i^-1 v_i^(p^e+1)``, the powers
    ``a_i^j`` (``k x n``) and the Lagrange basis polynomials as rows
    (``n x n``, constant term first).
    """
    F = spec.field
    n = spec.n
    base = np.array(_scaled_targets(spec, e, compute_u(F, spec.a)), dtype=np.int64)
    a = np.array(spec.a, dtype=np.int64)
    vander = np.array([F.pow(a, j) for j in range(spec.k)], dtype=np.int64).reshape(spec.k, n)
    master = poly.from_roots(F, spec.a)
    lag = np.zeros((n, n), dtype=np.int64)
    for i, ai in enumerate(spec.a):
        b = poly.divide_linear(F, master, ai)
        denom = F.prod(F.sub(ai, aj) for j, aj in enumerate(spec.a) if j != i)
        lag[i, : len(b)] = F.mul(np.array(b, dtype=np.int64), F.inv(denom))
    return base.tolist(), vander.tolist(), lag.tolist()


def dual_membership_witness(spec: GrsSpec, f: Sequence[int], e: int) -> list[int] | None:
    """The polynomial ``g`` certifying that the codeword of ``f`` is in the e-Galois dual.

    ``g`` interpolates ``(a_i, u_i^-1 v_i^(p^e+1) f(a_i)^(p^e))``.  It is
    returned when ``deg g <= n-k-1`` (plain code), or ``deg g <= n-k``
    with ``g_{n-k} = -f_{k-1}^(p^e)`` (extended code); otherwise ``None``.
    """
    F = spec.field
    n, k = spec.n, spec.k
    f = poly.trim(f)
    if poly.degree(f) > k - 1:
        raise ValueError("message polynomial degree exceeds k-1")
    base, vander, lag = _witness_setup(spec, e)
    fv = [int(c) for c in f] + [0] * (k - len(f))
    vals = [F.sum(F.mul(c, row[i]) for c, row in zip(fv, vander) if c) for i in range(n)]
    ys = [F.mul(b, F.frob(x, e)) for b, x in zip(base, vals)]
    g = poly.trim(F.sum(F.mul(y, lag[i][j]) for i, y in enumerate(ys) if y) for j in range(n))
    if not spec.extended:
        return g if poly.degree(g) <= n - k - 1 else None
    if poly.degree(g) > n - k:
        return None
    top = g[n - k] if len(g) > n - k else 0
    lead = fv[k - 1]
    return g if top == F.neg(F.frob(lead, e)) else None


def check_self_orthogonal(spec: GrsSpec, e: int) -> bool:
    """``G . (G^(p^e))^T == 0``."""
    F = spec.field
    G = generator_matrix(spec).gen
    T = F.frob(G, e)
    for i in range(spec.k):
        for j in range(spec.k):
            if F.sum(F.mul(G[i], T[j]).tolist()):
                return False
    return True


def recover_h(spec: GrsSpec, e: int) -> SelfOrthogonalWitness:
    """Recover ``(h, lam)`` from a self-orthogonal spec by Lagrange interpolation."""
    if not check_self_orthogonal(spec, e):
        raise NotSelfOrthogonal(f"GRS code is not {e}-Galois self-orthogonal")
    if spec.extended and spec.k < 2:
        raise HypothesisError("extended witnesses need k >= 2")
    F = spec.field
    n, k = spec.n, spec.k
    u = compute_u(F, spec.a)
    g = poly.interpolate(F, spec.a, _scaled_targets(spec, e, u))
    assert poly.degree(g) <= n - k - 1, "witness degree bound violated"
    lam = g[-1]
    h = poly.scale(F, g, F.inv(lam))
    return SelfOrthogonalWitness(h_poly=h, lam=lam, e=e, g_poly=g)


def check_witness(spec: GrsSpec, w: SelfOrthogonalWitness) -> bool:
    F = spec.field
    u = compute_u(F, spec.a)
    pe1 = F.p**w.e + 1
    return all(
        F.mul(F.mul(w.lam, ui), poly.evaluate(F, w.h_poly, ai)) == F.pow(vi, pe1)
        for ai, ui, vi in zip(spec.a, u, spec.v)
    )


def _monic(F: GF, d: int) -> Iterator[list[int]]:
    for tail in itertools.product(range(F.q), repeat=d):
        yield list(tail) + [1]


def find_self_orthogonal_seed(
    F: GF,
    a: Sequence[int],
    k: int,
    e: int,
    extended: bool = False,
    max_deg: int | None = None,
    h_candidates: Sequence[Sequence[int]] | None = None,
) -> tuple[GrsSpec, SelfOrthogonalWitness] | None:
    """Search for multipliers making ``GRS_k(a, v)`` e-Galois self-orthogonal.

    The code depends on ``v`` only through the values ``v_i^(p^e+1)``, and
    a self-orthogonal code forces ``v_i^(p^e+1) = lam u_i h(a_i)`` with
    monic ``deg h <= n-k-1``.  Candidates ``(h, lam)`` are enumerated by
    increasing ``deg h``, then by the coefficient codes of ``h``, then by
    ``lam``; roots with the smallest discrete log give ``v``.  The first
    candidate that passes :func:`check_self_orthogonal` is returned.
    ``h_candidates`` replaces the enumeration of ``h`` by an explicit list.
    """
    a = tuple(int(x) for x in a)
    n = len(a)
    u = compute_u(F, a)
    pe1 = F.p**e + 1
    top = n - k - 1 if max_deg is None else min(max_deg, n - k - 1)
    powers = np.zeros(F.q, dtype=bool)
    powers[np.unique(F.pow(np.arange(1, F.q), pe1))] = True
    lams = np.arange(1, F.q, dtype=np.int64)
    ua = np.array(u, dtype=np.int64)
    if h_candidates is None:
        h_iter = itertools.chain.from_iterable(_monic(F, d) for d in range(top + 1))
    else:
        h_iter = (list(h) for h in h_candidates)
    for h in h_iter:
        hv = np.array([poly.evaluate(F, h, ai) for ai in a], dtype=np.int64)
        if np.any(hv == 0):
            continue
        base = F.mul(ua, hv)
        vals = F.mul(lams[:, None], base[None, :])
        good = np.flatnonzero(powers[vals].all(axis=1))
        for idx in good:
            v = tuple(_nth_root_code(F, int(w), pe1) for w in vals[idx])
            spec = GrsSpec(F, a, v, k, extended)
            if check_self_orthogonal(spec, e):
                lam = int(lams[idx])
                return spec, SelfOrthogonalWitness(h_poly=h, lam=lam, e=e, g_poly=poly.scale(F, h, lam))
    return None


def find_extended_seed(F: GF, a: Sequence[int], m: int, e: int, limit: int = 10**5) -> GrsSpec:
    """Extended e-Galois self-orthogonal seed of dimension ``m >= 2``.

    Such a code forces ``lam = -1`` and ``deg h = n - m - p^e (m - 1)``, so
    only monic ``h`` of that degree are searched.
    """
    n = len(a)
    if m < 2:
        raise HypothesisError("extended seeds need dimension m >= 2")
    d = n - m - F.p**e * (m - 1)
    if d < 0:
        raise HypothesisError(f"no extended self-orthogonal [{n + 1},{m}] seed: witness degree {d} < 0")
    if F.q**d > limit:
        raise HypothesisError(f"witness search over q^{d} polynomials is too large; pass an explicit seed")
    found = find_self_orthogonal_seed(F, a, m, e, extended=True, h_candidates=_monic(F, d))
    if found is None:
        raise HypothesisError("no extended self-orthogonal seed on these locators")
    return found[0]


def hermitian_family_seed(F: GF, s: int, k: int | None = None):
    """Hermitian self-orthogonal seed on ``s`` cosets of the order-(sqrt(q)+1) subgroup.

    Length ``n = s (sqrt(q) + 1)`` with ``k <= s - 1`` (default ``s - 1``).
    On these locators ``u_i a_i^sqrt(q)`` is constant on each coset and lies
    in GF(sqrt(q)), so ``h(x) = x^sqrt(q)`` is tried as the witness and the
    search only has to find ``lam``.
    """
    if F.h % 2:
        raise FieldError("Hermitian seeds need an even extension degree")
    r = F.p ** (F.h // 2)
    if not 1 <= s <= r - 1:
        raise HypothesisError(f"need 1 <= s <= {r - 1}")
    k = s - 1 if k is None else k
    if not 1 <= k <= s - 1:
        raise HypothesisError("need 1 <= k <= s - 1")
    step = F.order // (r + 1)
    a = [F.mul(F.exp(c), F.exp(j * step)) for c in range(s) for j in range(r + 1)]
    return find_self_orthogonal_seed(F, a, k, F.h // 2, h_candidates=[[0] * r + [1]])
