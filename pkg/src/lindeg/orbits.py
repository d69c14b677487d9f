"""Orbit combinatorics of linear degenerations.

Orbits of endomorphism tuples acting on a fixed flag ambient F^m are in
bijection with realizable rank tables whose diagonal is constant m.  The
closure order is entrywise comparison, strata are indexed by the set of zero
maps, and every orbit has a canonical representative by coordinate
projections.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .errors import GuardExceededError, NotRealizableError, ValidationError
from .linalg import Field, Matrix
from .representations import (
    Decomposition,
    DimVector,
    RankTable,
    RepMatrices,
    decompose_from_ranks,
    ranks_from_decomposition,
)

ORBIT_GUARD = 10**6


@dataclass(frozen=True)
class RankSequence:
    """Orbit invariant: a rank table whose diagonal entries all equal m."""

    m: int
    table: RankTable

    def __post_init__(self) -> None:
        if any(x != self.m for x in self.table.vertex_dims()):
            raise ValidationError("rank sequence must have constant vertex dimension m")

    @property
    def n(self) -> int:
        return self.table.n

    def r(self, a: int, b: int) -> int:
        return self.table.r(a, b)

    def edge_ranks(self) -> tuple[int, ...]:
        return tuple(self.table.r(i, i + 1) for i in range(1, self.n))

    def leq(self, other: "RankSequence") -> bool:
        if self.m != other.m:
            raise ValidationError("rank sequences have different ambient dimensions")
        return self.table.leq(other.table)

    def node_id(self) -> str:
        """Stable DOT node name: 'r_' plus the flattened table."""
        return "r_" + "_".join(str(x) for x in self.table.entries_flat())

    @staticmethod
    def from_table(m: int, table: RankTable) -> "RankSequence":
        return RankSequence(m, table)

    @staticmethod
    def identity_orbit(m: int, n: int) -> "RankSequence":
        return RankSequence(m, RankTable.from_function(n, lambda a, b: m))

    @staticmethod
    def zero_orbit(m: int, n: int) -> "RankSequence":
        return RankSequence(m, RankTable.from_function(n, lambda a, b: m if a == b else 0))

    @staticmethod
    def two_step(m: int, rank: int) -> "RankSequence":
        """The n = 2 orbit with the single map of the given rank."""
        return RankSequence(m, RankTable(2, ((m, rank), (m,))))

    @staticmethod
    def from_rep(rep: RepMatrices) -> "RankSequence":
        from .representations import rank_profile

        dims = set(rep.dims)
        if len(dims) != 1:
            raise ValidationError("representation does not have constant vertex dimension")
        return RankSequence(dims.pop(), rank_profile(rep))

    def __str__(self) -> str:
        return f"ranks{self.edge_ranks()} on F^{self.m}"


def is_realizable(rs: RankSequence) -> bool:
    """True iff some endomorphism tuple has exactly this rank table."""
    try:
        decompose_from_ranks(rs.table)
    except NotRealizableError:
        return False
    return True


def decomposition_of(rs: RankSequence) -> Decomposition:
    return decompose_from_ranks(rs.table)


def degenerates_to(r: RankSequence, s: RankSequence) -> bool:
    """True iff the orbit of s lies in the closure of the orbit of r."""
    if r.m != s.m or r.n != s.n:
        raise ValidationError("rank sequences live on different quivers")
    return s.table.leq(r.table)


def enumerate_orbits(m: int, n: int, guard: int = ORBIT_GUARD) -> tuple[RankSequence, ...]:
    """All realizable orbits for (m, n), one per multiplicity table.

    Enumerates nonnegative interval multiplicities with every vertex sum equal
    to m; aborts with GuardExceededError past ``guard`` orbits.
    """
    if m < 0 or n < 1:
        raise ValidationError("need m >= 0 and n >= 1")
    intervals = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
    caps = [m] * (n + 1)  # caps[v] for 1-based v; caps[0] unused
    counts: dict[tuple[int, int], int] = {}
    out: list[RankSequence] = []

    def emit() -> None:
        if len(out) >= guard:
            raise GuardExceededError(f"more than {guard} orbits for m={m}, n={n}")
        dec = Decomposition.from_multiplicities(n, dict(counts))
        out.append(RankSequence(m, ranks_from_decomposition(dec)))

    def rec(pos: int) -> None:
        if pos == len(intervals):
            emit()
            return
        a, b = intervals[pos]
        if b == n:
            # last interval starting at a: it must drain vertex a exactly
            k = caps[a]
            if all(caps[v] >= k for v in range(a, n + 1)):
                for v in range(a, n + 1):
                    caps[v] -= k
                counts[(a, b)] = k
                rec(pos + 1)
                del counts[(a, b)]
                for v in range(a, n + 1):
                    caps[v] += k
            return
        maxk = min(caps[v] for v in range(a, b + 1))
        for k in range(maxk + 1):
            for v in range(a, b + 1):
                caps[v] -= k
            counts[(a, b)] = k
            rec(pos + 1)
            del counts[(a, b)]
            for v in range(a, b + 1):
                caps[v] += k

    rec(0)
    return tuple(out)


@dataclass(frozen=True)
class ProjectionTuple:
    """Endomorphism tuple of coordinate projections.

    ``zero_sets[i]`` holds the 1-based coordinate indices killed by the map
    out of vertex i + 1; all other coordinates are fixed.
    """

    m: int
    zero_sets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "zero_sets", tuple(frozenset(s) for s in self.zero_sets))
        allowed = set(range(1, self.m + 1))
        for s in self.zero_sets:
            if not s <= allowed:
                raise ValidationError(f"zero set {sorted(s)} not within 1..{self.m}")

    @property
    def n(self) -> int:
        return len(self.zero_sets) + 1

    def matrices(self, field: Field) -> RepMatrices:
        maps = tuple(
            Matrix.projection(field, self.m, {j - 1 for j in s}) for s in self.zero_sets
        )
        return RepMatrices(field, (self.m,) * self.n, maps)

    def rank_sequence(self) -> RankSequence:
        """Rank table of the tuple; composites of projections kill unions."""
        def entry(a: int, b: int) -> int:
            if a == b:
                return self.m
            killed: set[int] = set()
            for i in range(a, b):
                killed |= self.zero_sets[i - 1]
            return self.m - len(killed)

        return RankSequence(self.m, RankTable.from_function(self.n, entry))

    def __str__(self) -> str:
        return f"projections m={self.m}, zero sets {[sorted(s) for s in self.zero_sets]}"


def single_kill_tuple(m: int, n: int, h: int) -> ProjectionTuple:
    """The tuple that is the identity everywhere except killing v_1 at edge h."""
    if not 1 <= h <= n - 1:
        raise ValidationError(f"edge index h={h} out of range 1..{n - 1}")
    return ProjectionTuple(
        m, tuple(frozenset({1}) if i == h else frozenset() for i in range(1, n))
    )


def representative(rs: RankSequence) -> ProjectionTuple:
    """Canonical projection-tuple representative of an orbit.

    Scans vertices left to right, assigning each summand strand a coordinate
    index; indices freed by strands that end are reused in increasing order.
    The zero set of edge i collects the indices of strands ending at vertex i.
    """
    dec = decompose_from_ranks(rs.table)
    n, m = rs.n, rs.m
    zero_sets: list[frozenset[int]] = []
    # strand bookkeeping: alive[index] = end vertex of the strand using it
    alive: dict[int, int] = {}
    fresh = list(range(1, m + 1))

    def start_strands(v: int, available: list[int]) -> None:
        starters = sorted(
            (iv for iv in dec.summands() if iv.start == v), key=lambda iv: iv.end
        )
        if len(starters) > len(available):
            raise AssertionError("representative ran out of coordinate indices")
        for iv, idx in zip(starters, available):
            alive[idx] = iv.end

    start_strands(1, fresh)
    for v in range(1, n):
        ending = sorted(idx for idx, end in alive.items() if end == v)
        zero_sets.append(frozenset(ending))
        for idx in ending:
            del alive[idx]
        start_strands(v + 1, ending)
    return ProjectionTuple(m, tuple(zero_sets))


def stratum_of(rs: RankSequence) -> tuple[int, ...]:
    """1-based indices of the zero maps."""
    return tuple(i for i in range(1, rs.n) if rs.r(i, i + 1) == 0)


def stratum_rank_targets(I: Iterable[int], dv: DimVector) -> tuple[RankSequence, RankSequence]:
    """The flat-irreducibility and flatness rank targets of the stratum.

    Entries at edges in I (and composites crossing I) are zero; inside a
    segment the first target is m + d_a - d_b and the second is one less.
    A rank table at least the second target is flat over its stratum, at
    least the first is flat with irreducible fibers.
    """
    iset = frozenset(I)
    if not iset <= set(range(1, dv.n)):
        raise ValidationError(f"stratum {sorted(iset)} not within edges 1..{dv.n - 1}")

    def make(level: int) -> RankSequence:
        def entry(a: int, b: int) -> int:
            if a == b:
                return dv.m
            if any(i in iset for i in range(a, b)):
                return 0
            val = dv.m + dv.d[a - 1] - dv.d[b - 1] - (level - 1)
            assert val >= 0
            return val

        return RankSequence(dv.m, RankTable.from_function(dv.n, entry))

    return make(1), make(2)


def _covering_pairs(orbits: Sequence[RankSequence]) -> list[tuple[int, int]]:
    k = len(orbits)
    less = [[False] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i != j and orbits[j].leq(orbits[i]) and orbits[i] != orbits[j]:
                less[i][j] = True  # j strictly below i
    covers = []
    for i in range(k):
        for j in range(k):
            if less[i][j] and not any(less[i][t] and less[t][j] for t in range(k)):
                covers.append((i, j))
    return covers


def hasse_dot(
    orbits: Sequence[RankSequence],
    annotate: Callable[[RankSequence], str] | Mapping[RankSequence, str] | None = None,
    graph_name: str = "orbits",
) -> str:
    """Deterministic DOT source for the Hasse diagram of the closure order.

    Nodes are named 'r_' + flattened rank table; edges point from an orbit to
    the orbits it covers (towards deeper degenerations).
    """
    seen: dict[str, RankSequence] = {}
    for rs in orbits:
        seen.setdefault(rs.node_id(), rs)
    ordered = sorted(seen.values(), key=lambda rs: rs.table.entries_flat(), reverse=True)
    if ordered:
        m0, n0 = ordered[0].m, ordered[0].n
        if any(rs.m != m0 or rs.n != n0 for rs in ordered):
            raise ValidationError("orbits live on different quivers")

    def label(rs: RankSequence) -> str:
        text = "r=" + ",".join(str(x) for x in rs.edge_ranks())
        extra = None
        if callable(annotate):
            extra = annotate(rs)
        elif annotate is not None:
            extra = annotate.get(rs)
        if extra:
            text += "\\n" + extra
        return text

    lines = [f"digraph {graph_name} {{", "  rankdir=TB;"]
    for rs in ordered:
        lines.append(f'  "{rs.node_id()}" [label="{label(rs)}"];')
    covers = _covering_pairs(ordered)
    edges = sorted(
        (ordered[i].node_id(), ordered[j].node_id()) for i, j in covers
    )
    for src, dst in edges:
        lines.append(f'  "{src}" -> "{dst}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def strata_subsets(n: int) -> tuple[tuple[int, ...], ...]:
    """All strata (subsets of edges 1..n-1), sorted by size then entries."""
    edges = list(range(1, n))
    subsets: list[tuple[int, ...]] = []
    for mask in range(1 << len(edges)):
        subsets.append(tuple(e for k, e in enumerate(edges) if mask >> k & 1))
    return tuple(sorted(subsets, key=lambda s: (len(s), s)))


def stratum_node_id(I: Sequence[int]) -> str:
    return "S" + "".join(f"_{i}" for i in I)


def strata_dot(
    n: int,
    annotate: Callable[[tuple[int, ...]], str] | None = None,
    graph_name: str = "strata",
) -> str:
    """DOT source for the closure order on strata (reverse Boolean lattice).

    The stratum of J contains the stratum of I in its closure iff J is a
    subset of I; edges point from each stratum to the covering deeper ones.
    """
    subsets = strata_subsets(n)
    lines = [f"digraph {graph_name} {{", "  rankdir=TB;"]
    for I in subsets:
        text = "{" + ",".join(str(i) for i in I) + "}"
        if annotate:
            extra = annotate(I)
            if extra:
                text += "\\n" + extra
        lines.append(f'  "{stratum_node_id(I)}" [label="{text}"];')
    for I in subsets:
        for e in range(1, n):
            if e not in I:
                J = tuple(sorted(I + (e,)))
                lines.append(f'  "{stratum_node_id(I)}" -> "{stratum_node_id(J)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
