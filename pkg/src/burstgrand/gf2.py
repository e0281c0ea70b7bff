"""Small dense GF(2) linear algebra on uint8 numpy arrays."""
from __future__ import annotations

import numpy as np


def as_gf2(a) -> np.ndarray:
    a = np.asarray(a)
    if a.dtype == bool:
        return a.astype(np.uint8)
    if np.any((a != 0) & (a != 1)):
        raise ValueError("matrix entries must be 0 or 1")
    return a.astype(np.uint8)


def rref(a):
    """Reduced row echelon form; returns ``(R, pivot_columns)``."""
    r = as_gf2(a).copy()
    rows, cols = r.shape
    pivots = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        hits = np.nonzero(r[row:, col])[0]
        if hits.size == 0:
            continue
        p = row + hits[0]
        if p != row:
            r[[row, p]] = r[[p, row]]
        mask = r[:, col].astype(bool)
        mask[row] = False
        r[mask] ^= r[row]
        pivots.append(col)
        row += 1
    return r, pivots


def rank(a) -> int:
    return len(rref(a)[1])


def inv(a) -> np.ndarray:
    a = as_gf2(a)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("square matrix required")
    r, piv = rref(np.hstack([a, np.eye(n, dtype=np.uint8)]))
    if piv[:n] != list(range(n)):
        raise np.linalg.LinAlgError("matrix is singular over GF(2)")
    return r[:, n:]


def nullspace(a) -> np.ndarray:
    """Basis of ``{x : a x = 0}`` as rows."""
    r, piv = rref(a)
    cols = r.shape[1]
    free = [c for c in range(cols) if c not in piv]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, p in enumerate(piv):
            basis[i, p] = r[row, f]
    return basis


def matmul(a, b) -> np.ndarray:
    return (as_gf2(a).astype(np.int64) @ as_gf2(b).astype(np.int64) % 2).astype(np.uint8)
