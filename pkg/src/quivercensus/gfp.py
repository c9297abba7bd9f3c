"""Dense exact linear algebra over small prime fields F_p.

Matrices are numpy int64 arrays with entries reduced mod p.  Everything here
is plain Gauss-Jordan elimination; p stays tiny (2..7) so inverses come from
Fermat little-theorem powers.
"""

from __future__ import annotations

import numpy as np

_PRIMES = (2, 3, 5, 7)


def check_prime(p: int) -> int:
    if p not in _PRIMES:
        raise ValueError(f"field order must be one of {_PRIMES}, got {p}")
    return p


def normalize(a, p: int) -> np.ndarray:
    """Coerce to an int64 matrix with entries in [0, p)."""
    m = np.asarray(a, dtype=np.int64) % p
    if m.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={m.ndim}")
    return m


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def identity(k: int) -> np.ndarray:
    return np.eye(k, dtype=np.int64)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def _inv_scalar(x: int, p: int) -> int:
    return pow(int(x), p - 2, p)


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p; returns (R, pivot column list)."""
    r = normalize(a, p).copy()
    rows, cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        r[row] = (r[row] * _inv_scalar(r[row, col], p)) % p
        other = np.nonzero(r[:, col])[0]
        other = other[other != row]
        if other.size:
            r[other] = (r[other] - np.outer(r[other, col], r[row])) % p
        pivots.append(col)
        row += 1
    return r, pivots


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right kernel, one row per basis vector.

    The basis is the standard one read off the reduced echelon form (a 1 in
    each free column), so it is deterministic.
    """
    a = normalize(a, p)
    rows, cols = a.shape
    if cols == 0:
        return zeros(0, 0)
    if rows == 0:
        return identity(cols)
    r, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = zeros(len(free), cols)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = (-r[i, f]) % p
    return basis


def inverse(a: np.ndarray, p: int) -> np.ndarray:
    a = normalize(a, p)
    k = a.shape[0]
    if a.shape != (k, k):
        raise ValueError("only square matrices can be inverted")
    aug = np.concatenate([a, identity(k)], axis=1)
    r, pivots = rref(aug, p)
    if pivots[:k] != list(range(k)):
        raise ValueError("matrix is singular")
    return r[:, k:]
