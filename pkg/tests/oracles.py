"""Independent oracle implementations used only by the tests.

Each oracle recomputes a library answer by a visibly different route:
decompositions by solving the hom-count linear system, catenoid detection by
path search in the irreducible-morphism digraph, orbit lists by brute force
over all matrix tuples of F_2.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from lindeg import (
    Decomposition,
    Interval,
    RepMatrices,
    hom_dim_intervals,
    intertwiner_space_dim,
    interval_rep,
)


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over Q for a square nonsingular system."""
    k = len(rows)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    for col in range(k):
        pivot = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][k] for r in range(k)]


def decomposition_oracle(rep: RepMatrices) -> Decomposition:
    """Recover interval multiplicities from hom dimensions alone.

    dim Hom(U_I, M) = sum_J mult_J hom(U_I, U_J) is a square linear system
    over the intervals; the left side comes from the intertwiner kernel, the
    right side from the hom table.  No rank tables involved.
    """
    n = rep.n
    intervals = [Interval(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
    rows = [
        [Fraction(hom_dim_intervals(x, y)) for y in intervals] for x in intervals
    ]
    rhs = []
    for x in intervals:
        ux = interval_rep(n, x, rep.field)
        rhs.append(
            Fraction(intertwiner_space_dim(rep.field, ux.dims, ux.maps, rep.dims, rep.maps))
        )
    sol = _solve_exact(rows, rhs)
    mult = {}
    for iv, k in zip(intervals, sol):
        assert k.denominator == 1 and k >= 0, f"non-integral multiplicity {k} for {iv}"
        if k:
            mult[iv] = int(k)
    return Decomposition.from_multiplicities(n, mult)


def _ar_arrows(interval: Interval) -> list[Interval]:
    """Targets of irreducible morphisms out of an interval module."""
    out = []
    if interval.start > 1:
        out.append(Interval(interval.start - 1, interval.end))
    if interval.start < interval.end:
        out.append(Interval(interval.start, interval.end - 1))
    return out


def _reaches(x: Interval, y: Interval) -> bool:
    """Directed path search in the irreducible-morphism digraph."""
    seen = {x}
    frontier = [x]
    while frontier:
        cur = frontier.pop()
        if cur == y:
            return True
        for nxt in _ar_arrows(cur):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return x == y


def catenoid_oracle(D: Decomposition) -> bool:
    """Brute force: some ordering of the distinct summands forms one path."""
    supports = D.intervals()
    if len(supports) <= 1:
        return True
    for perm in itertools.permutations(supports):
        if all(_reaches(perm[i], perm[i + 1]) for i in range(len(perm) - 1)):
            return True
    return False


def _gf2_rank(rows: list[int]) -> int:
    """Rank of a 0/1 matrix with rows packed as bitmasks."""
    rank = 0
    basis: list[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
            rank += 1
    return rank


def bruteforce_orbit_tables_f2(m: int, n: int) -> set[tuple[tuple[int, ...], ...]]:
    """All rank tables of tuples of m x m matrices over F_2, by exhaustion.

    Returns tables in row form ((R[1][1], ..., R[1][n]), (R[2][2], ...), ...).
    """
    cells = m * m
    all_matrices = []
    for bits in range(1 << cells):
        rows = [[bits >> (i * m + j) & 1 for j in range(m)] for i in range(m)]
        all_matrices.append(rows)

    def mat_mul(A, B):
        return [
            [sum(A[i][k] * B[k][j] for k in range(m)) % 2 for j in range(m)]
            for i in range(m)
        ]

    def mat_rank(A):
        packed = [sum(A[i][j] << j for j in range(m)) for i in range(m)]
        return _gf2_rank(packed)

    identity = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    tables = set()
    for combo in itertools.product(range(1 << cells), repeat=n - 1):
        maps = [all_matrices[c] for c in combo]
        rows = []
        for a in range(1, n + 1):
            row = []
            prod = identity
            for b in range(a, n + 1):
                if b > a:
                    prod = mat_mul(maps[b - 2], prod)
                row.append(mat_rank(prod))
            rows.append(tuple(row))
        tables.add(tuple(rows))
    return tables
