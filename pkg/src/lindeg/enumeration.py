"""Brute-force enumeration over small finite fields.

Quiver Grassmannian points are tuples of subspaces, one per vertex, mapped
into each other by the representation maps.  This module streams them in a
deterministic order, analyzes single points (tangent space, obstruction),
counts singular points, and checks the corank-one singular-locus model
against the actual singular points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .classifier import dimension, is_irreducible, singular_model
from .errors import GuardExceededError, NotIrreducibleError, ValidationError
from .linalg import (
    Field,
    Matrix,
    Subspace,
    contains,
    coordinate_subspace,
    map_subspace,
    subspace_sum,
)
from .orbits import ProjectionTuple, RankSequence, single_kill_tuple
from .representations import (
    Decomposition,
    DimVector,
    RepMatrices,
    SubrepPoint,
    decompose_from_ranks,
    ext_dim,
    euler_form,
    hom_dim,
    quotient_rep,
    rank_profile,
    restrict_rep,
)

POINT_GUARD = 10**7


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def subspaces_iter(field: Field, ambient: int, dim: int) -> Iterator[Subspace]:
    """All dim-dimensional subspaces of F_p^ambient, in canonical order.

    Order: pivot columns lexicographically, then the free entries of the RREF
    basis counted up base p.  Coordinate subspaces come first in each pivot
    class.
    """
    if not field.is_modular:
        raise ValidationError("subspace enumeration needs a finite field")
    if not 0 <= dim <= ambient:
        raise ValidationError(f"subspace dimension {dim} out of range 0..{ambient}")
    p = field.characteristic
    for pivots in itertools.combinations(range(ambient), dim):
        pivset = set(pivots)
        free = [
            (i, j)
            for i in range(dim)
            for j in range(pivots[i] + 1, ambient)
            if j not in pivset
        ]
        for values in itertools.product(range(p), repeat=len(free)):
            rows = [[0] * ambient for _ in range(dim)]
            for i, c in enumerate(pivots):
                rows[i][c] = 1
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            yield Subspace(field, ambient, tuple(tuple(r) for r in rows), pivots)


def _search_bound(rep: RepMatrices, targets: Sequence[int]) -> int:
    """Upper bound used by the guard: product of per-vertex subspace counts."""
    if not rep.field.is_modular:
        raise ValidationError("point counting needs a finite field")
    p = rep.field.characteristic
    total = 1
    for amb, t in zip(rep.dims, targets):
        total *= gaussian_binomial(amb, t, p)
    return total


def count_points(rep: RepMatrices, targets, guard: int = POINT_GUARD) -> int:
    """Number of points of the quiver Grassmannian Gr_targets(rep) over F_p."""
    return sum(1 for _ in enumerate_subreps(rep, targets, guard=guard))


def _normalize_targets(rep: RepMatrices, targets) -> tuple[int, ...]:
    if isinstance(targets, DimVector):
        if rep.dims != (targets.m,) * targets.n:
            raise ValidationError("representation does not act on F^m at every vertex")
        return targets.d
    t = tuple(int(x) for x in targets)
    if len(t) != rep.n:
        raise ValidationError("need one target dimension per vertex")
    for amb, x in zip(rep.dims, t):
        if not 0 <= x <= amb:
            raise ValidationError(f"target dimension {x} out of range 0..{amb}")
    return t


def enumerate_subreps(
    rep: RepMatrices, targets, guard: int = POINT_GUARD
) -> Iterator[SubrepPoint]:
    """Stream the points of the quiver Grassmannian Gr_targets(rep).

    targets may be a DimVector (then rep must act on F^m everywhere) or any
    per-vertex dimension sequence.  Points come out vertex-lexicographically
    in the subspaces_iter order.  Raises GuardExceededError if the search
    space (product of subspace counts) exceeds ``guard``.
    """
    t = _normalize_targets(rep, targets)
    bound = _search_bound(rep, t)
    if bound > guard:
        raise GuardExceededError(
            f"search space of size {bound} exceeds the guard {guard}"
        )

    def rec(v: int, chosen: list[Subspace]) -> Iterator[SubrepPoint]:
        if v == rep.n:
            yield SubrepPoint.detect_coordinates(tuple(chosen))
            return
        required = (
            map_subspace(rep.maps[v - 1], chosen[v - 1]) if v > 0 else None
        )
        for V in subspaces_iter(rep.field, rep.dims[v], t[v]):
            if required is None or contains(V, required):
                chosen.append(V)
                yield from rec(v + 1, chosen)
                chosen.pop()

    return rec(0, [])


def fixed_points(J: ProjectionTuple, dv: DimVector) -> list[tuple[tuple[int, ...], ...]]:
    """Coordinate points of Gr_d for a projection tuple, as 1-based subsets.

    These are the points fixed by the diagonal torus: chains S_1, ..., S_n of
    index subsets with |S_v| = d_v and S_v minus the killed indices contained
    in S_{v+1}.  Listed lexicographically.
    """
    if J.m != dv.m or J.n != dv.n:
        raise ValidationError("projection tuple and dimension vector do not match")
    out: list[tuple[tuple[int, ...], ...]] = []
    universe = range(1, dv.m + 1)

    def rec(v: int, prefix: list[tuple[int, ...]]) -> None:
        if v == dv.n:
            out.append(tuple(prefix))
            return
        need = set(prefix[-1]) - J.zero_sets[v - 1] if v > 0 else set()
        for S in itertools.combinations(universe, dv.d[v]):
            if need <= set(S):
                prefix.append(S)
                rec(v + 1, prefix)
                prefix.pop()

    rec(0, [])
    return out


@dataclass(frozen=True)
class PointAnalysis:
    """Local data of one Grassmannian point: L inside M with quotient M/L."""

    sub: Decomposition
    quotient: Decomposition
    hom: int
    ext: int
    tangent_dim: int
    singular: bool


def analyze_point(rep: RepMatrices, point) -> PointAnalysis:
    """Tangent space Hom(L, M/L) and obstruction Ext^1(L, M/L) at a point.

    When the tuple has no zero maps and lies in the irreducible locus, the
    point is smooth iff Ext^1 vanishes, and then the tangent dimension equals
    the local dimension.  (With zero maps the variety is a product and the
    cross-segment extension classes are unobstructed; compare tangent_dim
    against the product dimension instead, as the census does.)  hom - ext
    always equals the Euler form of the dimension vectors, which is checked.
    """
    spaces = point.spaces if isinstance(point, SubrepPoint) else tuple(point)
    sub = restrict_rep(rep, spaces)
    quo = quotient_rep(rep, spaces)
    sub_dec = decompose_from_ranks(rank_profile(sub))
    quo_dec = decompose_from_ranks(rank_profile(quo))
    hom = hom_dim(sub_dec, quo_dec)
    ext = ext_dim(sub_dec, quo_dec)
    assert hom - ext == euler_form(sub.dims, quo.dims)
    return PointAnalysis(sub_dec, quo_dec, hom, ext, hom, ext > 0)


@dataclass(frozen=True)
class CensusResult:
    total: int
    singular: int
    smooth: int


def singular_point_census(
    rep: RepMatrices, dv: DimVector, guard: int = POINT_GUARD
) -> CensusResult:
    """Count points and singular points of an irreducible Gr_d(rep).

    A point is singular iff its tangent space is larger than the variety,
    whose dimension is the flag dimension summed over the segments between
    zero maps; this stays correct on product varieties, where Ext^1 alone
    would overcount.
    """
    dims = set(rep.dims)
    if dims != {dv.m}:
        raise ValidationError("representation does not act on F^m at every vertex")
    rs = RankSequence(dv.m, rank_profile(rep))
    if not is_irreducible(rs, dv):
        raise NotIrreducibleError("point census is defined for irreducible varieties")
    expected = dimension(rs, dv)
    total = singular = 0
    for point in enumerate_subreps(rep, dv, guard=guard):
        total += 1
        if analyze_point(rep, point).tangent_dim > expected:
            singular += 1
    return CensusResult(total, singular, total - singular)


def corank_one_rep(field: Field, m: int, n: int, h: int) -> RepMatrices:
    """The projection tuple killing one coordinate at edge h, as matrices."""
    return single_kill_tuple(m, n, h).matrices(field)


def _drop_first_matrix(field: Field, m: int) -> Matrix:
    """(m-1) x m matrix deleting the first coordinate."""
    return Matrix.from_rows(
        field,
        [[1 if j == i + 1 else 0 for j in range(m)] for i in range(m - 1)],
        ncols=m,
    )


def _include_last_matrix(field: Field, m: int) -> Matrix:
    """m x (m-1) matrix embedding onto the last m-1 coordinates."""
    return Matrix.from_rows(
        field,
        [[1 if i == j + 1 else 0 for j in range(m - 1)] for i in range(m)],
        ncols=m - 1,
    )


def singular_model_rep(field: Field, m: int, n: int, h: int) -> RepMatrices:
    """Concrete matrices for the corank-one singular-locus module.

    Vertex dimensions are m except m - 1 at h and h + 1; the maps are
    identities except the coordinate deletion into vertex h and the shifted
    embedding out of vertex h + 1.
    """
    if n < 2 or not 1 <= h <= n - 1:
        raise ValidationError(f"edge index h={h} out of range 1..{n - 1}")
    dims = tuple(m - 1 if v in (h, h + 1) else m for v in range(1, n + 1))
    maps = []
    for i in range(1, n):
        if i == h - 1:
            maps.append(_drop_first_matrix(field, m))
        elif i == h:
            maps.append(Matrix.identity(field, m - 1))
        elif i == h + 1:
            maps.append(_include_last_matrix(field, m))
        else:
            maps.append(Matrix.identity(field, m))
    return RepMatrices(field, dims, tuple(maps))


@dataclass(frozen=True)
class SigmaReport:
    """Result of matching the singular-locus model against actual points.

    The model Grassmannian Gr_{d - e_h} of the corank-one module should map
    bijectively onto the singular points of Gr_d of the corank-one tuple;
    sigma is the forward map and sigma' the inverse.
    """

    m: int
    dims: tuple[int, ...]
    h: int
    prime: int
    singular_count: int
    model_count: int
    ok: bool
    failures: tuple[str, ...] = ()


def _sigma_forward(
    ambient: RepMatrices, h: int, point: SubrepPoint
) -> tuple[Subspace, ...]:
    """Push a model point into the ambient Grassmannian.

    Away from h and h + 1 the subspace is kept; at h and h + 1 it is embedded
    by the index shift, and at h the first coordinate line is added back.
    """
    field, m = ambient.field, ambient.dims[0]
    incl = _include_last_matrix(field, m)
    e1 = coordinate_subspace(field, m, [0])
    spaces = []
    for v, V in enumerate(point.spaces, start=1):
        if v == h:
            spaces.append(subspace_sum(map_subspace(incl, V), e1))
        elif v == h + 1:
            spaces.append(map_subspace(incl, V))
        else:
            spaces.append(V)
    return tuple(spaces)


def _sigma_backward(
    ambient: RepMatrices, h: int, point: SubrepPoint
) -> tuple[Subspace, ...]:
    """Project a singular ambient point down to the model Grassmannian."""
    field, m = ambient.field, ambient.dims[0]
    drop = _drop_first_matrix(field, m)
    spaces = []
    for v, V in enumerate(point.spaces, start=1):
        if v in (h, h + 1):
            spaces.append(map_subspace(drop, V))
        else:
            spaces.append(V)
    return tuple(spaces)


def sigma_bijection_report(
    m: int,
    dv: DimVector,
    h: int,
    prime: int = 2,
    guard: int = POINT_GUARD,
) -> SigmaReport:
    """Verify the singular-locus model point by point over F_prime.

    Enumerates the singular points of Gr_d of the corank-one tuple and the
    points of the model Grassmannian, checks that sigma lands on singular
    points, hits all of them exactly once, and that sigma' inverts it.
    """
    if dv.m != m:
        raise ValidationError("ambient dimension does not match the dimension vector")
    model_info = singular_model(dv, h)
    field = Field(prime)
    ambient = corank_one_rep(field, m, dv.n, h)
    model = singular_model_rep(field, m, dv.n, h)
    assert model.dims == model_info.module_dims

    singular_points = {
        point.spaces
        for point in enumerate_subreps(ambient, dv, guard=guard)
        if analyze_point(ambient, point).singular
    }
    failures: list[str] = []
    image: set[tuple[Subspace, ...]] = set()
    model_count = 0
    for mp in enumerate_subreps(model, model_info.sub_dims, guard=guard):
        model_count += 1
        fwd = _sigma_forward(ambient, h, mp)
        if fwd not in singular_points:
            failures.append(f"sigma misses the singular locus at model point {model_count}")
            continue
        if fwd in image:
            failures.append(f"sigma collides at model point {model_count}")
            continue
        image.add(fwd)
        back = _sigma_backward(ambient, h, SubrepPoint(fwd))
        if back != mp.spaces:
            failures.append(f"sigma' does not invert sigma at model point {model_count}")
    if image != singular_points:
        failures.append(
            f"sigma image has {len(image)} of {len(singular_points)} singular points"
        )
    return SigmaReport(
        m=m,
        dims=dv.d,
        h=h,
        prime=prime,
        singular_count=len(singular_points),
        model_count=model_count,
        ok=not failures,
        failures=tuple(failures),
    )


def sigma_bijection_check(
    m: int, dv: DimVector, h: int, prime: int = 2, guard: int = POINT_GUARD
) -> bool:
    return sigma_bijection_report(m, dv, h, prime, guard).ok
