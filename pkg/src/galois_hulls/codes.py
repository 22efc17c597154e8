"""Linear codes over GF(q): Galois duals, hulls, MDS verification."""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import linalg
from .exceptions import InstanceTooLarge
from .gf import GF

MINORS_LIMIT = 10**6
CODEWORD_LIMIT = 10**6


@dataclass(frozen=True)
class LinearCode:
    """An ``[n, k]`` linear code given by a full-rank ``k x n`` generator."""

    field: GF
    gen: np.ndarray

    def __post_init__(self):
        G = linalg.as_matrix(self.gen)
        if G.ndim != 2:
            raise ValueError("generator must be a matrix")
        if linalg.rank(self.field, G) != G.shape[0]:
            raise ValueError("generator rows are linearly dependent")
        object.__setattr__(self, "gen", G)

    @classmethod
    def from_rows(cls, F: GF, M) -> "LinearCode":
        """Code spanned by the rows of ``M``; dependent rows are dropped."""
        M = linalg.as_matrix(M)
        return cls(F, linalg.row_basis(F, M).reshape(-1, M.shape[1]))

    @property
    def n(self) -> int:
        return self.gen.shape[1]

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    def same_space(self, other: "LinearCode") -> bool:
        if self.k != other.k:
            return False
        return linalg.rank(self.field, np.vstack([self.gen, other.gen])) == self.k

    def codewords(self) -> np.ndarray:
        """All ``q^k`` codewords (row per codeword)."""
        if self.field.q**self.k > CODEWORD_LIMIT:
            raise InstanceTooLarge(f"q^k = {self.field.q}^{self.k} codewords")
        return _span(self.field, self.gen)


@dataclass(frozen=True)
class HullReport:
    e: int
    dim: int
    basis: np.ndarray

    def to_dict(self, F: GF) -> dict:
        return {
            "e": self.e,
            "hull_dim": self.dim,
            "basis": [[F.element_digits(int(x)) for x in row] for row in self.basis],
        }


def galois_inner(F: GF, x, y, e: int) -> int:
    """``sum_i x_i * y_i^(p^e)``."""
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    return F.sum(F.mul(x, F.frob(y, e)).tolist())


def galois_dual(C: LinearCode, e: int) -> LinearCode:
    """``{x : sum_i c_i x_i^(p^e) = 0 for all c in C}``.

    ``x`` is in the e-Galois dual iff ``x^(p^e)`` is Euclidean-orthogonal to
    ``C``, so the dual is the Euclidean dual with ``x -> x^(p^(h-e))``
    applied entrywise.
    """
    F = C.field
    K = linalg.kernel_basis(F, C.gen)
    if K.shape[0] == 0:
        return LinearCode(F, np.zeros((0, C.n), dtype=np.int64))
    twisted = F.frob(K, (F.h - e) % F.h)
    return LinearCode(F, linalg.row_basis(F, twisted))


def hull(C: LinearCode, e: int) -> HullReport:
    F = C.field
    D = galois_dual(C, e)
    basis = linalg.rowspace_intersection(F, C.gen, D.gen)
    return HullReport(e=e, dim=basis.shape[0], basis=basis)


def is_self_orthogonal(C: LinearCode, e: int) -> bool:
    F = C.field
    gram = linalg.matmul(F, C.gen, F.frob(C.gen, e).T)
    return not np.any(gram)


def hull_dim_bruteforce(C: LinearCode, e: int) -> int:
    """``log_q`` of the number of codewords orthogonal to every generator row."""
    F = C.field
    words = C.codewords()
    tw = F.frob(words, e)
    ok = np.ones(len(words), dtype=bool)
    for row in C.gen:
        acc = np.zeros(len(words), dtype=np.int64)
        for i in range(C.n):
            acc = F.add(acc, F.mul(int(row[i]), tw[:, i]))
        ok &= acc == 0
    count = int(ok.sum())
    d = round(math.log(count, F.q)) if count > 1 else 0
    assert F.q**d == count, "orthogonal codewords do not form a subspace"
    return d


def _span(F: GF, G: np.ndarray) -> np.ndarray:
    words = np.zeros((1, G.shape[1]), dtype=np.int64)
    scalars = np.arange(F.q, dtype=np.int64)
    for row in G:
        layer = F.mul(scalars[:, None], row[None, :])
        words = F.add(words[None, :, :], layer[:, None, :]).reshape(-1, G.shape[1])
    return words


def min_distance_bruteforce(C: LinearCode) -> int:
    """Exact minimum weight by enumerating all nonzero codewords."""
    F = C.field
    if C.k == 0:
        raise ValueError("minimum distance of the zero code is undefined")
    if F.q**C.k > CODEWORD_LIMIT:
        raise InstanceTooLarge(f"q^k = {F.q}^{C.k} exceeds {CODEWORD_LIMIT}")
    prefix = _span(F, C.gen[:-1])
    last = C.gen[-1]
    best = C.n
    for a in range(F.q):
        words = F.add(prefix, F.mul(a, last)[None, :])
        w = np.count_nonzero(words, axis=1)
        if a == 0:
            w = w[1:]
        if w.size:
            best = min(best, int(w.min()))
    return best


def _nonsingular_batch(F: GF, S: np.ndarray) -> np.ndarray:
    """Which of the square matrices ``S[b]`` are invertible."""
    S = S.copy()
    B, k, _ = S.shape
    ok = np.ones(B, dtype=bool)
    idx = np.arange(B)
    for c in range(k):
        nz = S[:, c:, c] != 0
        has = nz.any(axis=1)
        ok &= has
        piv = c + np.argmax(nz, axis=1)
        top = S[idx, c].copy()
        S[idx, c] = S[idx, piv]
        S[idx, piv] = top
        d = np.where(has, S[:, c, c], 1)
        prow = F.mul(S[:, c, :], F.inv(d)[:, None])
        if c + 1 < k:
            fac = S[:, c + 1 :, c]
            S[:, c + 1 :, :] = F.sub(S[:, c + 1 :, :], F.mul(fac[:, :, None], prow[:, None, :]))
    return ok


def _all_minors_nonzero(F: GF, G: np.ndarray, workers: int = 1, chunk: int = 20000) -> bool:
    k, n = G.shape
    combos = itertools.combinations(range(n), k)

    def check(block):
        cols = np.array(block, dtype=np.int64)
        sub = G[:, cols].transpose(1, 0, 2)
        return bool(_nonsingular_batch(F, sub).all())

    def blocks():
        while True:
            block = list(itertools.islice(combos, chunk))
            if not block:
                return
            yield block

    if workers <= 1:
        return all(check(b) for b in blocks())
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return all(pool.map(check, blocks()))


def is_mds(C: LinearCode, strategy: str = "auto", workers: int = 1) -> str:
    """Decide whether ``d = n - k + 1``.

    Returns ``"proved-mds"``, ``"proved-not-mds"`` or ``"skipped"``.
    ``minors`` checks every ``k x k`` column submatrix, ``minweight``
    enumerates codewords; ``auto`` picks the first one within its limit.
    """
    F, n, k = C.field, C.n, C.k
    if strategy == "auto":
        if math.comb(n, k) <= MINORS_LIMIT:
            strategy = "minors"
        elif F.q**k <= CODEWORD_LIMIT:
            strategy = "minweight"
        else:
            return "skipped"
    if k == 0:
        return "proved-mds"
    if strategy == "minors":
        ok = _all_minors_nonzero(F, C.gen, workers=workers)
    elif strategy == "minweight":
        ok = min_distance_bruteforce(C) == n - k + 1
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return "proved-mds" if ok else "proved-not-mds"


def hull_report_json(C: LinearCode, e: int, mds: str | None = None, report: HullReport | None = None) -> dict:
    report = report or hull(C, e)
    out = {"n": C.n, "k": C.k}
    out.update(report.to_dict(C.field))
    out["mds"] = mds if mds is not None else is_mds(C)
    return {key: out[key] for key in ("n", "k", "e", "hull_dim", "mds", "basis")}
