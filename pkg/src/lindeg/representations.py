"""Representation theory of the equioriented A_n quiver.

Indecomposables are interval modules U[a,b] (one-dimensional on the vertices
a..b, identity along the arrows inside, zero outside).  A representation is
either a matrix tuple (``RepMatrices``) or its Gabriel decomposition
(``Decomposition``, a multiset of intervals).  The two views are connected by
rank tables: the rank of every composite map determines the decomposition and
conversely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import linalg
from .errors import NotRealizableError, NotSubrepresentationError, ValidationError
from .linalg import Field, Matrix, Subspace


@dataclass(frozen=True, order=True)
class Interval:
    """The interval module U[start, end], 1-based and inclusive."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if not 1 <= self.start <= self.end:
            raise ValidationError(f"bad interval [{self.start}, {self.end}]")

    def contains(self, vertex: int) -> bool:
        return self.start <= vertex <= self.end

    def __str__(self) -> str:
        return f"U[{self.start},{self.end}]"


def hom_dim_intervals(x: Interval, y: Interval) -> int:
    """dim Hom(U[x], U[y]); nonzero exactly when y.start <= x.start <= y.end <= x.end."""
    return 1 if y.start <= x.start <= y.end <= x.end else 0


def ext_dim_intervals(x: Interval, y: Interval) -> int:
    """dim Ext^1(U[x], U[y]); nonzero exactly when x.start + 1 <= y.start <= x.end + 1 <= y.end."""
    return 1 if x.start + 1 <= y.start <= x.end + 1 <= y.end else 0


def euler_form(d: Sequence[int], e: Sequence[int]) -> int:
    """Euler form of A_n: sum d_i e_i - sum d_i e_{i+1}."""
    if len(d) != len(e):
        raise ValidationError("dimension vectors have different lengths")
    n = len(d)
    return sum(d[i] * e[i] for i in range(n)) - sum(d[i] * e[i + 1] for i in range(n - 1))


@dataclass(frozen=True)
class DimVector:
    """Flag dimension vector: 0 < d_1 < ... < d_n < m."""

    m: int
    d: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "d", tuple(self.d))
        if not self.d:
            raise ValidationError("dimension vector is empty")
        if any(b <= a for a, b in zip(self.d, self.d[1:])) or not (
            0 < self.d[0] and self.d[-1] < self.m
        ):
            raise ValidationError(
                f"flag dimensions must satisfy 0 < d_1 < ... < d_n < m, got d={self.d}, m={self.m}"
            )

    @property
    def n(self) -> int:
        return len(self.d)

    def steps(self) -> tuple[int, ...]:
        """Successive differences d_{i+1} - d_i."""
        return tuple(b - a for a, b in zip(self.d, self.d[1:]))

    def segment(self, lo: int, hi: int) -> "DimVector":
        """Sub-vector on the 1-based vertex range lo..hi (inclusive)."""
        if not 1 <= lo <= hi <= self.n:
            raise ValidationError(f"bad vertex range {lo}..{hi}")
        return DimVector(self.m, self.d[lo - 1 : hi])

    def complement(self) -> tuple[int, ...]:
        return tuple(self.m - x for x in self.d)

    def flag_dimension(self) -> int:
        """Dimension of the variety of flags with these dimensions in F^m."""
        return euler_form(self.d, self.complement())


@dataclass(frozen=True)
class Decomposition:
    """Multiset of interval modules over a fixed quiver length n."""

    n: int
    items: tuple[tuple[Interval, int], ...]

    def __post_init__(self) -> None:
        prev = None
        for iv, k in self.items:
            if iv.end > self.n:
                raise ValidationError(f"{iv} does not fit in A_{self.n}")
            if k <= 0:
                raise ValidationError("multiplicities must be positive")
            if prev is not None and not prev < iv:
                raise ValidationError("items must be sorted by interval with no repeats")
            prev = iv

    @staticmethod
    def from_multiplicities(n: int, mult: Mapping) -> "Decomposition":
        items = []
        for key in sorted(mult, key=lambda k: (k.start, k.end) if isinstance(k, Interval) else k):
            iv = key if isinstance(key, Interval) else Interval(*key)
            k = mult[key]
            if k:
                items.append((iv, int(k)))
        return Decomposition(n, tuple(items))

    @staticmethod
    def from_intervals(n: int, intervals: Iterable) -> "Decomposition":
        counts: dict[Interval, int] = {}
        for key in intervals:
            iv = key if isinstance(key, Interval) else Interval(*key)
            counts[iv] = counts.get(iv, 0) + 1
        return Decomposition.from_multiplicities(n, counts)

    def multiplicity(self, interval: Interval | tuple[int, int]) -> int:
        iv = interval if isinstance(interval, Interval) else Interval(*interval)
        for item, k in self.items:
            if item == iv:
                return k
        return 0

    def intervals(self) -> tuple[Interval, ...]:
        return tuple(iv for iv, _ in self.items)

    def summands(self) -> tuple[Interval, ...]:
        """All summands with multiplicity, expanded."""
        out = []
        for iv, k in self.items:
            out.extend([iv] * k)
        return tuple(out)

    def total(self) -> int:
        return sum(k for _, k in self.items)

    def vertex_dims(self) -> tuple[int, ...]:
        dims = [0] * self.n
        for iv, k in self.items:
            for v in range(iv.start, iv.end + 1):
                dims[v - 1] += k
        return tuple(dims)

    def is_zero(self) -> bool:
        return not self.items

    def __add__(self, other: "Decomposition") -> "Decomposition":
        if self.n != other.n:
            raise ValidationError("cannot add decompositions of different lengths")
        counts = {iv: k for iv, k in self.items}
        for iv, k in other.items:
            counts[iv] = counts.get(iv, 0) + k
        return Decomposition.from_multiplicities(self.n, counts)

    def __rmul__(self, scalar: int) -> "Decomposition":
        if scalar < 0:
            raise ValidationError("multiplicity scale must be nonnegative")
        return Decomposition.from_multiplicities(self.n, {iv: k * scalar for iv, k in self.items})

    def __str__(self) -> str:
        if not self.items:
            return "0"
        return " + ".join(f"{k}*{iv}" if k > 1 else str(iv) for iv, k in self.items)


def hom_dim(A: Decomposition, B: Decomposition) -> int:
    """dim Hom(A, B), extended bilinearly over the interval hom table."""
    if A.n != B.n:
        raise ValidationError("decompositions have different quiver lengths")
    return sum(
        ka * kb * hom_dim_intervals(x, y) for x, ka in A.items for y, kb in B.items
    )


def ext_dim(A: Decomposition, B: Decomposition) -> int:
    """dim Ext^1(A, B), extended bilinearly over the interval ext table."""
    if A.n != B.n:
        raise ValidationError("decompositions have different quiver lengths")
    return sum(
        ka * kb * ext_dim_intervals(x, y) for x, ka in A.items for y, kb in B.items
    )


@dataclass(frozen=True)
class RankTable:
    """Triangular table of composite ranks: entry (a, b) with 1 <= a <= b <= n.

    The diagonal holds vertex dimensions; entry (a, b) for a < b is the rank
    of the composite map from vertex a to vertex b.  Out-of-range queries
    (a = 0 or b = n + 1) return 0, which is the boundary convention the
    multiplicity inversion uses.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValidationError("rank table must have one row per vertex")
        for a, row in enumerate(self.rows, start=1):
            if len(row) != self.n - a + 1:
                raise ValidationError(f"row {a} of rank table has wrong length")
            if any(not isinstance(x, int) for x in row):
                raise ValidationError("rank table entries must be integers")

    @staticmethod
    def from_function(n: int, entry) -> "RankTable":
        return RankTable(n, tuple(tuple(entry(a, b) for b in range(a, n + 1)) for a in range(1, n + 1)))

    def r(self, a: int, b: int) -> int:
        if a < 1 or b > self.n:
            return 0
        if a > b:
            raise ValidationError(f"rank table entry ({a}, {b}) needs a <= b")
        return self.rows[a - 1][b - a]

    def vertex_dims(self) -> tuple[int, ...]:
        return tuple(self.r(a, a) for a in range(1, self.n + 1))

    def entries_flat(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def leq(self, other: "RankTable") -> bool:
        """Entrywise comparison (same shape required)."""
        if self.n != other.n:
            raise ValidationError("rank tables have different lengths")
        return all(x <= y for x, y in zip(self.entries_flat(), other.entries_flat()))

    def multiplicity(self, a: int, b: int) -> int:
        """Second difference giving the multiplicity of U[a,b] in any realization."""
        return self.r(a, b) - self.r(a - 1, b) - self.r(a, b + 1) + self.r(a - 1, b + 1)


@dataclass(frozen=True)
class RepMatrices:
    """A quiver representation as vertex dimensions plus a matrix tuple."""

    field: Field
    dims: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        if not self.dims:
            raise ValidationError("representation needs at least one vertex")
        if len(self.maps) != len(self.dims) - 1:
            raise ValidationError("need exactly n-1 maps for n vertices")
        for i, f in enumerate(self.maps):
            if f.field != self.field:
                raise ValidationError("map fields disagree with representation field")
            if f.shape != (self.dims[i + 1], self.dims[i]):
                raise ValidationError(
                    f"map {i + 1} has shape {f.shape}, expected ({self.dims[i + 1]}, {self.dims[i]})"
                )

    @property
    def n(self) -> int:
        return len(self.dims)

    @staticmethod
    def from_maps(field: Field, maps: Sequence[Matrix], dims: Sequence[int] | None = None) -> "RepMatrices":
        if dims is None:
            if not maps:
                raise ValidationError("cannot infer dims from an empty map tuple")
            dims = [maps[0].ncols] + [f.nrows for f in maps]
        return RepMatrices(field, tuple(dims), tuple(maps))

    @staticmethod
    def identity_tuple(field: Field, m: int, n: int) -> "RepMatrices":
        return RepMatrices(field, (m,) * n, tuple(Matrix.identity(field, m) for _ in range(n - 1)))

    @staticmethod
    def zero_tuple(field: Field, m: int, n: int) -> "RepMatrices":
        return RepMatrices(field, (m,) * n, tuple(Matrix.zeros(field, m, m) for _ in range(n - 1)))

    @staticmethod
    def from_decomposition(D: Decomposition, field: Field) -> "RepMatrices":
        """0/1 block realization: one basis strand per summand, in sorted order."""
        strands = D.summands()
        layout = []  # layout[v-1]: strand indices alive at vertex v, in order
        for v in range(1, D.n + 1):
            layout.append([s for s, iv in enumerate(strands) if iv.contains(v)])
        dims = tuple(len(layer) for layer in layout)
        maps = []
        for v in range(1, D.n):
            here, there = layout[v - 1], layout[v]
            pos_there = {s: r for r, s in enumerate(there)}
            rows = [[0] * len(here) for _ in range(len(there))]
            for c, s in enumerate(here):
                if s in pos_there:
                    rows[pos_there[s]][c] = 1
            maps.append(Matrix.from_rows(field, rows, ncols=len(here)))
        return RepMatrices(field, dims, tuple(maps))

    def composite(self, a: int, b: int) -> Matrix:
        """The composed map from vertex a to vertex b (1-based, a < b)."""
        if not 1 <= a < b <= self.n:
            raise ValidationError(f"composite needs 1 <= a < b <= n, got ({a}, {b})")
        acc = self.maps[a - 1]
        for i in range(a + 1, b):
            acc = self.maps[i - 1] @ acc
        return acc


def interval_rep(n: int, interval: Interval | tuple[int, int], field: Field) -> RepMatrices:
    iv = interval if isinstance(interval, Interval) else Interval(*interval)
    return RepMatrices.from_decomposition(Decomposition.from_intervals(n, [iv]), field)


def rep_hom_dim(A: RepMatrices, B: RepMatrices) -> int:
    """dim Hom(A, B) computed from the matrices alone (intertwiner equations)."""
    if A.field != B.field:
        raise ValidationError("representations are over different fields")
    return linalg.intertwiner_space_dim(A.field, A.dims, A.maps, B.dims, B.maps)


def rank_profile(rep: RepMatrices) -> RankTable:
    """Table of all composite ranks (diagonal = vertex dimensions)."""
    rows = []
    for a in range(1, rep.n + 1):
        row = [rep.dims[a - 1]]
        acc: Matrix | None = None
        for b in range(a + 1, rep.n + 1):
            acc = rep.maps[b - 2] if acc is None else rep.maps[b - 2] @ acc
            row.append(acc.rank())
        rows.append(tuple(row))
    return RankTable(rep.n, tuple(rows))


def decompose_from_ranks(table: RankTable) -> Decomposition:
    """Gabriel decomposition read off a rank table.

    The multiplicity of U[a,b] is the second difference of the table at
    (a, b).  Raises NotRealizableError when any multiplicity is negative.
    """
    counts: dict[Interval, int] = {}
    offending = []
    for a in range(1, table.n + 1):
        for b in range(a, table.n + 1):
            k = table.multiplicity(a, b)
            if k < 0:
                offending.append((a, b, k))
            elif k:
                counts[Interval(a, b)] = k
    if offending:
        raise NotRealizableError(
            "rank table is not realizable; negative multiplicities at "
            + ", ".join(f"U[{a},{b}] -> {k}" for a, b, k in offending),
            offending,
        )
    return Decomposition.from_multiplicities(table.n, counts)


def ranks_from_decomposition(D: Decomposition) -> RankTable:
    """Rank table of any representation with the given decomposition."""
    def entry(a: int, b: int) -> int:
        return sum(k for iv, k in D.items if iv.start <= a and b <= iv.end)

    return RankTable.from_function(D.n, entry)


def is_realizable_table(table: RankTable) -> bool:
    try:
        decompose_from_ranks(table)
    except NotRealizableError:
        return False
    return True


def well_behaved_rep(dv: DimVector) -> Decomposition:
    """Decomposition of the degeneration whose maps all have the least ranks
    compatible with flatness and irreducibility, with independent kernels."""
    n, m, d = dv.n, dv.m, dv.d
    counts: dict[Interval, int] = {}
    for i in range(1, n):
        step = d[i] - d[i - 1]
        counts[Interval(1, i)] = counts.get(Interval(1, i), 0) + step
        counts[Interval(i + 1, n)] = counts.get(Interval(i + 1, n), 0) + step
    counts[Interval(1, n)] = counts.get(Interval(1, n), 0) + (m - d[-1] + d[0])
    return Decomposition.from_multiplicities(n, counts)


def minimal_projective_resolution(D: Decomposition) -> tuple[Decomposition, Decomposition]:
    """The pair (P, Q) with 0 -> Q -> P -> M -> 0 the minimal projective
    resolution: P has P_i with multiplicity dim Hom(M, S_i), Q has P_i with
    multiplicity dim Ext^1(M, S_i).  Here P_i = U[i, n]."""
    n = D.n
    p_counts: dict[Interval, int] = {}
    q_counts: dict[Interval, int] = {}
    for iv, k in D.items:
        proj = Interval(iv.start, n)
        p_counts[proj] = p_counts.get(proj, 0) + k
        if iv.end < n:
            cop = Interval(iv.end + 1, n)
            q_counts[cop] = q_counts.get(cop, 0) + k
    P = Decomposition.from_multiplicities(n, p_counts)
    Q = Decomposition.from_multiplicities(n, q_counts)
    pd, qd, md = P.vertex_dims(), Q.vertex_dims(), D.vertex_dims()
    assert all(p - q == m for p, q, m in zip(pd, qd, md)), "resolution dims do not close"
    return P, Q


def is_catenoid(D: Decomposition) -> bool:
    """True iff the distinct summands are pairwise comparable componentwise,
    i.e. all lie on one oriented path of the Auslander-Reiten quiver."""
    ivs = D.intervals()
    for i, x in enumerate(ivs):
        for y in ivs[i + 1 :]:
            if not (
                (x.start <= y.start and x.end <= y.end)
                or (y.start <= x.start and y.end <= x.end)
            ):
                return False
    return True


def schubert_embedding_target(D: Decomposition, dv: DimVector) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Ambient flag dimensions and target subspace dimensions for realizing
    the quiver Grassmannian Gr_dv(M) inside a partial flag variety.

    Returns (dim P, dv + dim Q) where 0 -> Q -> P -> M -> 0 is the minimal
    projective resolution.
    """
    if D.n != dv.n:
        raise ValidationError("decomposition and dimension vector lengths differ")
    if D.vertex_dims() != (dv.m,) * dv.n:
        raise ValidationError("decomposition does not have constant vertex dimension m")
    P, Q = minimal_projective_resolution(D)
    ambient = P.vertex_dims()
    target = tuple(d + q for d, q in zip(dv.d, Q.vertex_dims()))
    return ambient, target


@dataclass(frozen=True)
class SubrepPoint:
    """A point of a quiver Grassmannian: one subspace per vertex.

    When every subspace is spanned by standard basis vectors the point is a
    coordinate point and ``coordinates`` holds the 1-based index subsets.
    """

    spaces: tuple[Subspace, ...]
    coordinates: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "spaces", tuple(self.spaces))
        if not self.spaces:
            raise ValidationError("a point needs at least one vertex")
        if self.coordinates is not None:
            coords = tuple(tuple(sorted(c)) for c in self.coordinates)
            object.__setattr__(self, "coordinates", coords)
            if len(coords) != len(self.spaces):
                raise ValidationError("coordinate subsets and subspaces differ in length")
            for space, subset in zip(self.spaces, coords):
                expected = linalg.coordinate_subspace(
                    space.field, space.ambient, [j - 1 for j in subset]
                )
                if space != expected:
                    raise ValidationError("coordinate subsets do not match the subspaces")

    @property
    def n(self) -> int:
        return len(self.spaces)

    @property
    def is_coordinate(self) -> bool:
        return self.coordinates is not None

    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.spaces)

    @staticmethod
    def from_coordinates(
        field: Field, ambient_dims: Sequence[int], subsets: Sequence[Iterable[int]]
    ) -> "SubrepPoint":
        """Coordinate point from 1-based index subsets, one per vertex."""
        if len(subsets) != len(ambient_dims):
            raise ValidationError("need one index subset per vertex")
        cleaned = []
        spaces = []
        for amb, subset in zip(ambient_dims, subsets):
            idx = tuple(sorted(set(subset)))
            if idx and not (1 <= idx[0] and idx[-1] <= amb):
                raise ValidationError(f"coordinate indices {idx} not within 1..{amb}")
            cleaned.append(idx)
            spaces.append(linalg.coordinate_subspace(field, amb, [j - 1 for j in idx]))
        return SubrepPoint(tuple(spaces), tuple(cleaned))

    @staticmethod
    def detect_coordinates(spaces: Sequence[Subspace]) -> "SubrepPoint":
        """Wrap subspaces, recognizing coordinate points."""
        coords: list[tuple[int, ...]] = []
        for space in spaces:
            if any(
                x != 0
                for row in space.basis
                for c, x in enumerate(row)
                if c not in space.pivots
            ):
                return SubrepPoint(tuple(spaces))
            coords.append(tuple(c + 1 for c in space.pivots))
        return SubrepPoint(tuple(spaces), tuple(coords))


def _check_subrep(rep: RepMatrices, spaces: Sequence[Subspace]) -> None:
    if len(spaces) != rep.n:
        raise NotSubrepresentationError("need one subspace per vertex")
    for i, space in enumerate(spaces):
        if space.field != rep.field:
            raise NotSubrepresentationError("subspace field differs from representation field")
        if space.ambient != rep.dims[i]:
            raise NotSubrepresentationError(
                f"subspace at vertex {i + 1} lives in dimension {space.ambient}, expected {rep.dims[i]}"
            )
    for i, f in enumerate(rep.maps):
        if not linalg.contains(spaces[i + 1], linalg.map_subspace(f, spaces[i])):
            raise NotSubrepresentationError(f"map {i + 1} does not preserve the subspaces")


def restrict_rep(rep: RepMatrices, spaces: Sequence[Subspace]) -> RepMatrices:
    """The subrepresentation on the given subspaces, in their RREF bases."""
    _check_subrep(rep, spaces)
    maps = []
    for i, f in enumerate(rep.maps):
        src, tgt = spaces[i], spaces[i + 1]
        cols = [tgt.coordinates(f.apply(row)) for row in src.basis]
        rows = list(zip(*cols)) if cols else [() for _ in range(tgt.dim)]
        maps.append(Matrix.from_rows(rep.field, [list(r) for r in rows], ncols=src.dim))
    return RepMatrices(rep.field, tuple(s.dim for s in spaces), tuple(maps))


def quotient_rep(rep: RepMatrices, spaces: Sequence[Subspace]) -> RepMatrices:
    """The quotient representation on complement coordinates.

    At each vertex the complement is spanned by the standard basis vectors at
    the non-pivot positions of the subspace, in increasing order.
    """
    _check_subrep(rep, spaces)
    comps = [s.complement_positions() for s in spaces]
    maps = []
    for i, f in enumerate(rep.maps):
        src_comp, tgt_comp = comps[i], comps[i + 1]
        tgt_space = spaces[i + 1]
        cols = []
        for j in src_comp:
            e = [0] * rep.dims[i]
            e[j] = 1
            w = tgt_space.reduce(f.apply(e))
            cols.append(tuple(w[c] for c in tgt_comp))
        rows = list(zip(*cols)) if cols else [() for _ in range(len(tgt_comp))]
        maps.append(Matrix.from_rows(rep.field, [list(r) for r in rows], ncols=len(src_comp)))
    return RepMatrices(rep.field, tuple(len(c) for c in comps), tuple(maps))
