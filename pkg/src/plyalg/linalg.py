"""Exact linear algebra: fraction-free (Bareiss) elimination over the
integers, used for OSBB decomposition and the spanning-rank oracles."""
from __future__ import annotations

from fractions import Fraction
from math import lcm


class SingularSolveError(Exception):
    """A solve that the surrounding theory guarantees solvable failed;
    signals an internal enumeration bug, not bad user input."""


def _integerize(rows):
    """Scale each row by the lcm of its denominators; returns (int rows, scales)."""
    out, scales = [], []
    for row in rows:
        d = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(Fraction(x) * d) for x in row])
        scales.append(d)
    return out, scales


def _bareiss_forward(a):
    """In-place fraction-free forward elimination with row pivoting.

    Returns the list of pivot column indices. Entries stay integers; the
    divisions are exact by the Bareiss identity.
    """
    n_rows = len(a)
    n_cols = len(a[0]) if n_rows else 0
    prev = 1
    piv_r = 0
    pivots = []
    for piv_c in range(n_cols):
        if piv_r >= n_rows:
            break
        for i in range(piv_r, n_rows):
            if a[i][piv_c] != 0:
                break
        else:
            continue
        if i != piv_r:
            a[piv_r], a[i] = a[i], a[piv_r]
        p = a[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            if not any(a[r][piv_c:]):
                continue
            f = a[r][piv_c]
            for c in range(n_cols):
                a[r][c] = (a[r][c] * p - f * a[piv_r][c]) // prev
        prev = p
        pivots.append(piv_c)
        piv_r += 1
    return pivots


def rank(rows):
    """Exact rank of a rational matrix."""
    if not rows:
        return 0
    a, _ = _integerize([list(r) for r in rows])
    return len(_bareiss_forward(a))


def invert(rows):
    """Exact inverse of a square rational matrix as Fraction rows."""
    n = len(rows)
    assert all(len(r) == n for r in rows)
    a, scales = _integerize([list(r) for r in rows])
    # augment with the row-scale diagonal so a row-scaled system inverts cleanly
    for i in range(n):
        a[i].extend(scales[i] if j == i else 0 for j in range(n))
    pivots = _bareiss_forward(a)
    if len(pivots) != n or pivots != list(range(n)):
        raise SingularSolveError("matrix is singular (rank %d of %d)" % (len(pivots), n))
    inv = [[Fraction(0)] * n for _ in range(n)]
    for col in range(n):
        x = [Fraction(0)] * n
        for r in range(n - 1, -1, -1):
            s = Fraction(a[r][n + col])
            for c in range(r + 1, n):
                s -= a[r][c] * x[c]
            x[r] = s / a[r][r]
        for r in range(n):
            inv[r][col] = x[r]
    return inv
