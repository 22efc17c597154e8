"""Dense linear algebra over GF(q).

Matrices are 2-D numpy ``int64`` arrays of element codes paired with the
field they live in.  Every basis returned here is in reduced row echelon
form, so equal row spaces give identical arrays.
"""
from __future__ import annotations

import numpy as np

from .gf import GF


def as_matrix(M, cols: int | None = None) -> np.ndarray:
    A = np.array(M, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(0, cols if cols is not None else 0) if A.size == 0 else A[None, :]
    return A


def rref(F: GF, M) -> tuple[np.ndarray, list[int], int]:
    """Reduced row echelon form.

    Returns
    -------
    R : ndarray
        The RREF, same shape as ``M``.
    pivots : list of int
        Pivot columns in increasing order.
    rank : int
    """
    A = as_matrix(M).copy()
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = F.mul(A[r], F.inv(int(A[r, c])))
        col = A[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            A[hit] = F.sub(A[hit], F.mul(col[hit, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A, pivots, r


def rank(F: GF, M) -> int:
    return rref(F, M)[2]


def row_basis(F: GF, M) -> np.ndarray:
    """RREF basis of the row space (zero rows dropped)."""
    R, _, r = rref(F, M)
    return R[:r]


def kernel_basis(F: GF, M) -> np.ndarray:
    """Basis of ``{x : M x^T = 0}`` as rows, in RREF."""
    A = as_matrix(M)
    cols = A.shape[1]
    R, pivots, r = rref(F, A)
    free = [c for c in range(cols) if c not in set(pivots)]
    K = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        K[t, f] = 1
        for i, pc in enumerate(pivots):
            K[t, pc] = F.neg(int(R[i, f]))
    return row_basis(F, K) if len(free) else K


def matmul(F: GF, A, B) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for j in range(A.shape[1]):
        out = F.add(out, F.mul(A[:, j : j + 1], B[j : j + 1, :]))
    return out


def stack(A, B) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[1] != B.shape[1]:
        raise ValueError(f"column mismatch {A.shape[1]} != {B.shape[1]}")
    return np.vstack([A, B])


def rowspace_intersection(F: GF, A, B) -> np.ndarray:
    """RREF basis of ``rowspace(A) & rowspace(B)``.

    Solves ``y A = z B`` through the kernel of ``[A; -B]^T`` and maps the
    ``y`` part back through ``A``.
    """
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[1] != B.shape[1]:
        raise ValueError(f"column mismatch {A.shape[1]} != {B.shape[1]}")
    cols = A.shape[1]
    A, B = row_basis(F, A), row_basis(F, B)
    ra = A.shape[0]
    if ra == 0 or B.shape[0] == 0:
        return np.zeros((0, cols), dtype=np.int64)
    S = np.vstack([A, F.neg(B)]).T
    K = kernel_basis(F, S)
    if K.shape[0] == 0:
        return np.zeros((0, cols), dtype=np.int64)
    return row_basis(F, matmul(F, K[:, :ra], A))


def in_rowspace(F: GF, basis, x) -> bool:
    basis = as_matrix(basis)
    x = np.asarray(x, dtype=np.int64)[None, :]
    return rank(F, np.vstack([basis, x])) == rank(F, basis)


def serialize_matrix(F: GF, M) -> str:
    M = as_matrix(M)
    lines = [f"{M.shape[0]} {M.shape[1]}"]
    lines += [F.serialize_element(int(x)) for x in M.ravel()]
    return "\n".join(lines)


def deserialize_matrix(F: GF, text: str) -> np.ndarray:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    rows, cols = (int(t) for t in lines[0].split())
    vals = [F.deserialize_element(ln) for ln in lines[1:]]
    if len(vals) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, got {len(vals)}")
    return np.array(vals, dtype=np.int64).reshape(rows, cols)
