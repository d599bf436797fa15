# chartab/dixon.py
"""Character tables from class-algebra eigenvectors over a prime field.

The central characters ``w_k = |C_k| chi(g_k) / chi(1)`` are the common
eigenvectors of the class matrices ``(M_j)_{ik} = #{x in C_j : x^-1 g_k in C_i}``.
They are found modulo a prime ``q = 1 (mod m)`` with ``q > 2 sqrt|G|``; the
degrees follow from the orthogonality relation, and each value is lifted to
``Q(zeta_m)`` from the multiplicities of the eigenvalues of ``rho(g_k)``.
"""

from __future__ import annotations

import logging
import math
from typing import Dict, List, Sequence, Tuple

from sympy import isprime, primitive_root

from permcore import PermGroup, compose, inverse
from utilities.config import get_enumeration_cap

from .cyclotomic import CyclotomicNumber
from .table import CharacterTable, CharacterTableError, column_orthogonality, verify_orthogonality

logger = logging.getLogger(__name__)

Vector = List[int]


def choose_prime(order: int, exponent: int) -> int:
    """Smallest prime ``q = 1 (mod exponent)`` with ``q > 2 sqrt(order)``."""
    bound = 2 * math.isqrt(order) + 2
    q = exponent + 1
    while q <= bound or not isprime(q):
        q += exponent
    return q


def _class_members(G: PermGroup) -> List[List[Tuple[int, ...]]]:
    members: List[List[Tuple[int, ...]]] = [[] for _ in G.classes]
    for g in G.elements:
        members[G.class_index_of(g)].append(g)
    return members


def class_matrix(G: PermGroup, j: int, members: Sequence[Sequence[Tuple[int, ...]]]) -> List[List[int]]:
    """Structure constants ``c[i][k] = #{x in C_j : x^-1 g_k in C_i}``."""
    h = len(G.classes)
    c = [[0] * h for _ in range(h)]
    inverses = [inverse(x) for x in members[j]]
    for k, cls in enumerate(G.classes):
        g = cls.representative
        for xi in inverses:
            c[G.class_index_of(compose(xi, g))][k] += 1
    return c


def _rref_mod(rows: List[Vector], q: int) -> Tuple[List[Vector], List[int]]:
    rows = [list(r) for r in rows]
    pivots: List[int] = []
    ncols = len(rows[0]) if rows else 0
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] % q), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][col], -1, q)
        rows[r] = [(v * inv) % q for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] % q:
                f = rows[i][col]
                rows[i] = [(a - f * b) % q for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _nullspace_mod(matrix: List[Vector], q: int) -> List[Vector]:
    n = len(matrix[0])
    reduced, pivots = _rref_mod(matrix, q)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, p in zip(reduced, pivots):
            v[p] = (-row[f]) % q
        basis.append(v)
    return basis


def _charpoly_mod(R: List[Vector], q: int) -> List[int]:
    """Faddeev-LeVerrier; returns ascending coefficients, monic of degree ``len(R)``."""
    d = len(R)
    coeffs = [0] * (d + 1)
    coeffs[d] = 1
    M = [[0] * d for _ in range(d)]
    for k in range(1, d + 1):
        # M_k = R M_{k-1} + c_{d-k+1} I
        prev = M
        M = [[sum(R[i][t] * prev[t][j] for t in range(d)) % q for j in range(d)] for i in range(d)]
        for i in range(d):
            M[i][i] = (M[i][i] + coeffs[d - k + 1]) % q
        RM = [[sum(R[i][t] * M[t][j] for t in range(d)) % q for j in range(d)] for i in range(d)]
        trace = sum(RM[i][i] for i in range(d)) % q
        coeffs[d - k] = (-trace * pow(k, -1, q)) % q
    return coeffs


def _roots_mod(coeffs: List[int], q: int) -> List[int]:
    roots = []
    for lam in range(q):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * lam + c) % q
        if acc == 0:
            roots.append(lam)
    return roots


def _split_space(
    basis: List[Vector], pivots: List[int], A: List[List[int]], q: int
) -> List[Tuple[List[Vector], List[int]]]:
    d = len(basis)
    images = [[sum(A[i][k] * b[k] for k in range(len(b))) % q for i in range(len(b))] for b in basis]
    # column i of R holds the coordinates of A b_i
    R = [[images[i][pivots[t]] for i in range(d)] for t in range(d)]
    parts = []
    for lam in _roots_mod(_charpoly_mod(R, q), q):
        shifted = [[(R[t][i] - (lam if t == i else 0)) % q for i in range(d)] for t in range(d)]
        coords = _nullspace_mod(shifted, q)
        if not coords:
            continue
        vectors = [
            [sum(c[t] * basis[t][k] for t in range(d)) % q for k in range(len(basis[0]))]
            for c in coords
        ]
        parts.append(_rref_mod(vectors, q))
    if sum(len(b) for b, _ in parts) != d:
        # not diagonalizable modulo q: leave the space as it is
        return [(basis, pivots)]
    return parts


def _central_characters(G: PermGroup, q: int) -> List[Vector]:
    h = len(G.classes)
    members = _class_members(G)
    spaces = [([[1 if i == k else 0 for i in range(h)] for k in range(h)], list(range(h)))]
    order = sorted(range(1, h), key=lambda j: (G.classes[j].size, j))
    for j in order:
        if all(len(b) == 1 for b, _ in spaces):
            break
        A = class_matrix(G, j, members)
        nxt = []
        for basis, pivots in spaces:
            nxt.extend([(basis, pivots)] if len(basis) == 1 else _split_space(basis, pivots, A, q))
        spaces = nxt
        logger.debug("%s: class %d splits the class algebra into %d spaces", G.name, j, len(spaces))
    if any(len(b) != 1 for b, _ in spaces):
        raise CharacterTableError(f"class matrices of {G.name} do not separate the characters")
    out = []
    for (vec,), _ in spaces:
        if vec[0] % q == 0:
            raise CharacterTableError("central character with vanishing identity entry")
        inv = pow(vec[0], -1, q)
        out.append([(v * inv) % q for v in vec])
    return out


def character_table(G: PermGroup) -> CharacterTable:
    """Exact irreducible characters of an enumerated group, verified before return.

    :raises CharacterTableError: when verification fails
    """
    cap = get_enumeration_cap()
    if G.order > cap:
        from permcore import GroupTooLargeError

        raise GroupTooLargeError(cap, G.name)

    m = G.exponent
    q = choose_prime(G.order, m)
    h = len(G.classes)
    sizes = G.class_sizes
    inv_class = [G.inverse_class(k) for k in range(h)]
    z = pow(primitive_root(q), (q - 1) // m, q)
    logger.info("character table of %s: h=%d, exponent %d, working prime %d", G.name, h, m, q)

    rows: List[Tuple[CyclotomicNumber, ...]] = []
    for w in _central_characters(G, q):
        total = sum(w[k] * w[inv_class[k]] * pow(sizes[k], -1, q) for k in range(h)) % q
        target = (G.order * pow(total, -1, q)) % q
        degree = next((d for d in range(1, math.isqrt(G.order) + 1) if (d * d) % q == target), None)
        if degree is None:
            raise CharacterTableError(f"no character degree matches modulo {q} for {G.name}")
        chi_mod = [(w[k] * degree * pow(sizes[k], -1, q)) % q for k in range(h)]
        rows.append(tuple(_lift(G, k, chi_mod, degree, m, z, q) for k in range(h)))

    rows.sort(key=_row_key)
    table = CharacterTable(
        name=G.name,
        order=G.order,
        exponent=m,
        class_sizes=sizes,
        cycle_types=G.cycle_types,
        characters=tuple(rows),
        group=G,
    )
    if not verify_orthogonality(table) or not column_orthogonality(table):
        raise CharacterTableError(f"computed table of {G.name} failed orthogonality")
    return table


def _lift(G: PermGroup, k: int, chi_mod: Sequence[int], degree: int, m: int, z: int, q: int) -> CyclotomicNumber:
    o = G.classes[k].element_order
    zeta_o = pow(z, m // o, q)
    inv_o = pow(o, -1, q)
    powers = [chi_mod[G.power_map(k, i)] for i in range(o)]
    coeffs: Dict[int, int] = {}
    for l in range(o):
        mu = inv_o * sum(powers[i] * pow(zeta_o, (-i * l) % o, q) for i in range(o)) % q
        if mu > degree:
            raise CharacterTableError(f"eigenvalue multiplicity {mu} exceeds degree {degree} in {G.name}")
        if mu:
            coeffs[l * (m // o)] = mu
    return CyclotomicNumber.from_exponents(m, coeffs)


def _row_key(row: Sequence[CyclotomicNumber]):
    # ascending degree, then larger values first so the trivial character leads
    return row[0].to_fraction(), tuple(tuple(-c for c in v.coordinates()) for v in row)
