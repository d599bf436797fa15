# charparam/linalg.py
"""Exact linear algebra over Q and Z on top of :class:`sympy.Matrix`."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

Row = Sequence[Fraction]


def _to_sympy(value) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value) -> Fraction:
    q = sympy.Rational(value)
    return Fraction(int(q.p), int(q.q))


def to_matrix(rows: Sequence[Row], ncols: int | None = None) -> sympy.Matrix:
    if not rows:
        return sympy.zeros(0, ncols or 0)
    return sympy.Matrix([[_to_sympy(v) for v in row] for row in rows])


def from_matrix(M: sympy.Matrix) -> List[List[Fraction]]:
    return [[_to_fraction(M[i, j]) for j in range(M.cols)] for i in range(M.rows)]


def rref(rows: Sequence[Row]) -> Tuple[List[List[Fraction]], Tuple[int, ...]]:
    """Reduced row echelon form and pivot columns; zero rows dropped."""
    if not rows:
        return [], ()
    M, pivots = to_matrix(rows).rref()
    reduced = from_matrix(M)[: len(pivots)]
    return reduced, tuple(pivots)


def rank(rows: Sequence[Row]) -> int:
    return len(rref(rows)[1]) if rows else 0


def nullspace(rows: Sequence[Row], ncols: int) -> List[List[Fraction]]:
    """Basis of ``{v : rows . v = 0}``, one vector per free column of the RREF."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    return [[_to_fraction(x) for x in vec] for vec in to_matrix(rows).nullspace()]


def determinant(rows: Sequence[Row]) -> Fraction:
    if not rows:
        return Fraction(1)
    return _to_fraction(to_matrix(rows).det())


def in_span(basis: Sequence[Row], vector: Row) -> bool:
    return rank(list(basis) + [vector]) == rank(basis)


def _integer_echelon(rows: List[List[int]], ncols: int) -> int:
    """Unimodular row reduction of the first ``ncols`` columns in place; returns the rank."""
    r = 0
    for col in range(ncols):
        while True:
            live = [i for i in range(r, len(rows)) if rows[i][col]]
            if not live:
                break
            p = min(live, key=lambda i: abs(rows[i][col]))
            rows[r], rows[p] = rows[p], rows[r]
            done = True
            for i in range(r + 1, len(rows)):
                if rows[i][col]:
                    f = rows[i][col] // rows[r][col]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
                    if rows[i][col]:
                        done = False
            if done:
                r += 1
                break
        if r == len(rows):
            break
    return r


def integer_kernel(images: Sequence[Sequence[int]]) -> List[List[int]]:
    """Z-basis of ``{c in Z^h : sum_i c_i images[i] = 0}``.

    The basis comes out of a unimodular transformation, so it spans the
    saturated kernel lattice.
    """
    h = len(images)
    width = len(images[0]) if h else 0
    rows = [list(images[i]) + [int(i == j) for j in range(h)] for i in range(h)]
    rk = _integer_echelon(rows, width)
    return [row[width:] for row in rows[rk:]]


def is_primitive(vectors: Sequence[Sequence[int]]) -> bool:
    """True iff the integer vectors are independent and span a saturated sublattice."""
    if not vectors:
        return True
    snf = smith_normal_form(sympy.Matrix([list(v) for v in vectors]), domain=ZZ)
    diagonal = [snf[i, i] for i in range(min(snf.rows, snf.cols))]
    return len(diagonal) == len(vectors) and all(abs(d) == 1 for d in diagonal)


def gram_determinant(vectors: Sequence[Sequence[int]]) -> Fraction:
    M = sympy.Matrix([list(v) for v in vectors])
    return _to_fraction((M * M.T).det())


def coordinates_in(basis: Sequence[Sequence[int]], vector: Sequence[int]) -> List[Fraction]:
    """Rational coordinates of ``vector`` over independent ``basis`` rows."""
    B = sympy.Matrix([list(b) for b in basis]).T
    sol, params = B.gauss_jordan_solve(sympy.Matrix(list(vector)))
    if params.shape[0]:
        raise ValueError("basis vectors are not independent")
    return [_to_fraction(x) for x in sol]
