"""
Dense linear algebra over F_p on numpy int64 arrays.

Entries are kept in [0, p). The prime must be below 2^31 so that a product of two
entries fits in a signed 64-bit integer.
"""
from typing import List, Tuple

import numpy as np

from samuel.core.exceptions import UnsupportedCharacteristic

MAX_PRIME = 2 ** 31


def check_prime(p: int):
    if p <= 1 or p >= MAX_PRIME:
        raise UnsupportedCharacteristic(f'Characteristic {p} is not a supported prime (need 1 < p < 2^31)')
    if p > 2 and (p % 2 == 0 or any(p % k == 0 for k in range(3, int(p ** 0.5) + 1, 2))):
        raise UnsupportedCharacteristic(f'Characteristic {p} is not prime')


def rref(matrix: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form mod p.

    Returns:
        (R, pivot_cols): R has one row per pivot (zero rows dropped), each pivot
        entry equal to 1 and zero elsewhere in its column.
    """
    R = np.array(matrix, dtype=np.int64) % p
    if R.ndim != 2:
        raise ValueError(f'Expected a matrix, found shape {R.shape}')
    m, n = R.shape
    pivot_cols: List[int] = []
    pivot_row = 0
    for col in range(n):
        if pivot_row == m:
            break
        nonzero = np.flatnonzero(R[pivot_row:, col])
        if len(nonzero) == 0:
            continue
        found = pivot_row + nonzero[0]
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]
        inverse = pow(int(R[pivot_row, col]), p - 2, p)
        R[pivot_row] = (R[pivot_row] * inverse) % p
        others = np.flatnonzero(R[:, col])
        others = others[others != pivot_row]
        if len(others):
            R[others] = (R[others] - np.outer(R[others, col], R[pivot_row])) % p
        pivot_cols.append(col)
        pivot_row += 1
    return R[:pivot_row], pivot_cols


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """a @ b mod p, splitting the inner dimension so partial sums never overflow int64"""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    step = max(1, 2 ** 62 // max(1, (p - 1) ** 2))
    result = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for start in range(0, a.shape[1], step):
        result = (result + a[:, start:start + step] @ b[start:start + step]) % p
    return result


def rank(matrix: np.ndarray, p: int) -> int:
    return len(rref(matrix, p)[1])


def reduce_vectors(vectors: np.ndarray, basis: np.ndarray, pivots: List[int], p: int) -> np.ndarray:
    """Normal forms of the rows of vectors modulo the row space of an rref basis"""
    V = np.array(vectors, dtype=np.int64) % p
    if len(pivots) == 0 or V.size == 0:
        return V
    return (V - matmul_mod(V[:, pivots], basis, p)) % p


def in_rowspace(vectors: np.ndarray, basis: np.ndarray, pivots: List[int], p: int) -> bool:
    return not reduce_vectors(vectors, basis, pivots, p).any()


def nullspace(matrix: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of {x : M x = 0}"""
    M = np.array(matrix, dtype=np.int64)
    n = M.shape[1]
    R, pivots = rref(M, p)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    kernel = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        kernel[k, f] = 1
        for i, pc in enumerate(pivots):
            kernel[k, pc] = (-R[i, f]) % p
    return kernel


def intersect_rowspaces(a: np.ndarray, b: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """rref basis of span(a) ∩ span(b) by the Zassenhaus trick"""
    n = a.shape[1] if a.ndim == 2 else b.shape[1]
    if len(a) == 0 or len(b) == 0:
        return np.zeros((0, n), dtype=np.int64), []
    stacked = np.vstack([np.hstack([a, a]), np.hstack([b, np.zeros_like(b)])])
    R, pivots = rref(stacked, p)
    lower = [i for i, pc in enumerate(pivots) if pc >= n]
    return rref(R[lower, n:], p)
