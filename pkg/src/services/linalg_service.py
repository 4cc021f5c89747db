# src/services/linalg_service.py
import logging
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import numpy.typing as npt

from src.exceptions import InputError

IntArray = npt.NDArray[np.int64]
MatrixLike = Union[IntArray, Sequence[Sequence[int]]]


def as_matrix(matrix: MatrixLike, p: int, n_cols: Optional[int] = None) -> IntArray:
    """
    Copy a matrix into a fresh int64 array of residues mod p.

    Parameters:
        - matrix (MatrixLike): Rectangular array or nested sequence of integers.
        - p (int): Prime modulus.
        - n_cols (Optional[int]): Column count to use when the matrix has no rows.

    Returns:
        IntArray: A 2-D int64 array with entries in [0, p).

    Raises:
        InputError: If the input is ragged or not two-dimensional.
    """
    if isinstance(matrix, np.ndarray):
        array = matrix
    else:
        rows = [list(row) for row in matrix]
        if not rows:
            return np.zeros((0, n_cols or 0), dtype=np.int64)
        if len({len(row) for row in rows}) > 1:
            raise InputError("ragged matrix: rows have different lengths")
        array = np.array([[int(x) % p for x in row] for row in rows], dtype=np.int64)
    if array.ndim != 2:
        raise InputError(f"expected a 2-D matrix, got {array.ndim} dimension(s)")
    return np.mod(array.astype(np.int64, copy=True), p)


def row_reduce(matrix: MatrixLike, p: int) -> Tuple[IntArray, Tuple[int, ...]]:
    """
    Reduced row echelon form over F_p with pivots chosen by column order.

    Parameters:
        - matrix (MatrixLike): Input matrix; it is not modified.
        - p (int): Prime modulus.

    Returns:
        Tuple[IntArray, Tuple[int, ...]]: The nonzero rows of the RREF (pivot entries equal
        to 1, strictly increasing pivot columns) and the pivot columns.
    """
    a = as_matrix(matrix, p)
    n_rows, n_cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            a[[r, pivot], :] = a[[pivot, r], :]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, :] = (a[r, :] * inv) % p
        factors = a[:, c].copy()
        factors[r] = 0
        targets = np.flatnonzero(factors)
        if targets.size:
            a[targets, :] = (a[targets, :] - np.outer(factors[targets], a[r, :]) % p) % p
        pivots.append(c)
        r += 1
    return a[:r, :], tuple(pivots)


def echelon_rank(matrix: MatrixLike, p: int) -> int:
    """Exact rank over F_p."""
    _, pivots = row_reduce(matrix, p)
    return len(pivots)


def kernel_basis(matrix: MatrixLike, p: int, n_cols: Optional[int] = None) -> IntArray:
    """
    Basis of the right null space {x : A x = 0}, one basis vector per row.

    The basis vector attached to a free column f has a 1 in position f and zeros in every
    other free position.
    """
    a = as_matrix(matrix, p, n_cols)
    n_cols = a.shape[1]
    rref, pivots = row_reduce(a, p)
    pivot_set = set(pivots)
    free = [c for c in range(n_cols) if c not in pivot_set]
    basis = np.zeros((len(free), n_cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, c in enumerate(pivots):
            basis[k, c] = (-rref[row, f]) % p
    return basis


def kernel_dim(matrix: MatrixLike, p: int, n_cols: Optional[int] = None) -> int:
    """Nullity: number of columns minus rank."""
    a = as_matrix(matrix, p, n_cols)
    return a.shape[1] - echelon_rank(a, p)


def solve_linear(matrix: MatrixLike, rhs: Sequence[int], p: int) -> Optional[IntArray]:
    """
    One solution of A x = b over F_p, or None when the system is inconsistent.

    Free variables are set to zero, so the returned solution is deterministic.

    Raises:
        InputError: If b does not have one entry per row of A.
    """
    a = as_matrix(matrix, p)
    b = np.mod(np.asarray(rhs, dtype=np.int64), p)
    if b.ndim != 1 or b.shape[0] != a.shape[0]:
        raise InputError(f"right-hand side of length {b.shape[0]} for a matrix with {a.shape[0]} rows")
    n_cols = a.shape[1]
    rref, pivots = row_reduce(np.hstack([a, b.reshape(-1, 1)]), p)
    if pivots and pivots[-1] == n_cols:
        logging.debug(f"inconsistent system: {a.shape[0]}x{n_cols}")
        return None
    solution = np.zeros(n_cols, dtype=np.int64)
    for row, c in enumerate(pivots):
        solution[c] = rref[row, n_cols]
    return solution
