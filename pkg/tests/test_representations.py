"""Interval modules, rank tables, decompositions and their round-trips."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lindeg import (
    GF,
    QQ,
    Decomposition,
    DimVector,
    Interval,
    NotRealizableError,
    NotSubrepresentationError,
    RankTable,
    RepMatrices,
    SubrepPoint,
    ValidationError,
    decompose_from_ranks,
    ext_dim,
    ext_dim_intervals,
    euler_form,
    hom_dim,
    hom_dim_intervals,
    interval_rep,
    is_catenoid,
    is_realizable_table,
    minimal_projective_resolution,
    quotient_rep,
    rank_profile,
    ranks_from_decomposition,
    rep_hom_dim,
    restrict_rep,
    schubert_embedding_target,
    span,
    well_behaved_rep,
)
from oracles import catenoid_oracle, decomposition_oracle


def _all_intervals(n):
    return [Interval(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]


def _random_decomposition(rng, n, max_mult=3):
    counts = {}
    for iv in _all_intervals(n):
        k = rng.randint(0, max_mult)
        if k:
            counts[iv] = k
    if not counts:
        counts[Interval(1, n)] = 1
    return Decomposition.from_multiplicities(n, counts)


class TestIntervalHomExt:
    def test_hom_hand_values(self):
        assert hom_dim_intervals(Interval(1, 2), Interval(1, 1)) == 1
        assert hom_dim_intervals(Interval(1, 1), Interval(1, 2)) == 0
        assert hom_dim_intervals(Interval(2, 2), Interval(1, 2)) == 1
        assert hom_dim_intervals(Interval(1, 3), Interval(2, 2)) == 0
        assert hom_dim_intervals(Interval(2, 3), Interval(1, 2)) == 1

    def test_ext_hand_values(self):
        assert ext_dim_intervals(Interval(1, 1), Interval(2, 2)) == 1
        assert ext_dim_intervals(Interval(2, 2), Interval(1, 1)) == 0
        assert ext_dim_intervals(Interval(1, 2), Interval(2, 3)) == 1
        assert ext_dim_intervals(Interval(2, 3), Interval(1, 2)) == 0
        assert ext_dim_intervals(Interval(1, 1), Interval(2, 3)) == 1
        assert ext_dim_intervals(Interval(1, 2), Interval(3, 3)) == 1

    def test_hom_matches_matrices(self):
        """The combinatorial table equals the intertwiner-equation count."""
        n = 3
        for field in (QQ, GF(2)):
            for x in _all_intervals(n):
                for y in _all_intervals(n):
                    got = rep_hom_dim(interval_rep(n, x, field), interval_rep(n, y, field))
                    assert got == hom_dim_intervals(x, y), (x, y, field)

    def test_euler_is_hom_minus_ext(self):
        for n in range(1, 6):
            for x in _all_intervals(n):
                for y in _all_intervals(n):
                    dx = Decomposition.from_intervals(n, [x]).vertex_dims()
                    dy = Decomposition.from_intervals(n, [y]).vertex_dims()
                    assert (
                        hom_dim_intervals(x, y) - ext_dim_intervals(x, y)
                        == euler_form(dx, dy)
                    )

    def test_bilinear_extension(self):
        rng = random.Random(11)
        for _ in range(25):
            n = rng.randint(1, 4)
            A = _random_decomposition(rng, n)
            B = _random_decomposition(rng, n)
            assert hom_dim(A, B) - ext_dim(A, B) == euler_form(A.vertex_dims(), B.vertex_dims())

    def test_interval_validation(self):
        with pytest.raises(ValidationError):
            Interval(2, 1)
        with pytest.raises(ValidationError):
            Interval(0, 1)


class TestDimVector:
    def test_valid(self):
        dv = DimVector(6, (1, 4))
        assert dv.n == 2
        assert dv.steps() == (3,)
        assert dv.flag_dimension() == 11

    def test_flag_dimension_full_flag(self):
        assert DimVector(3, (1, 2)).flag_dimension() == 3
        assert DimVector(4, (1, 2, 3)).flag_dimension() == 6
        assert DimVector(4, (2,)).flag_dimension() == 4

    def test_rejects_bad_vectors(self):
        for m, d in [(3, (0, 2)), (3, (2, 2)), (3, (2, 1)), (3, (1, 3)), (2, ()), (3, (3,))]:
            with pytest.raises(ValidationError):
                DimVector(m, d)


class TestDecomposition:
    def test_str_and_order(self):
        D = Decomposition.from_intervals(2, [(1, 2), (1, 1), (1, 2)])
        assert str(D) == "U[1,1] + 2*U[1,2]"
        assert D.vertex_dims() == (3, 2)
        assert D.total() == 3

    def test_add_and_scale(self):
        A = Decomposition.from_intervals(2, [(1, 1)])
        B = Decomposition.from_intervals(2, [(1, 1), (2, 2)])
        assert (A + B).multiplicity((1, 1)) == 2
        assert (2 * A).vertex_dims() == (2, 0)

    def test_rejects_misfit(self):
        with pytest.raises(ValidationError):
            Decomposition.from_intervals(2, [(1, 3)])


class TestRankTable:
    def test_boundary_zeros(self):
        t = RankTable(2, ((3, 1), (2,)))
        assert t.r(0, 1) == 0
        assert t.r(1, 3) == 0
        assert t.r(1, 2) == 1
        assert t.vertex_dims() == (3, 2)

    def test_multiplicity_inversion(self):
        t = RankTable(2, ((3, 1), (2,)))
        # strand counts: U[1,1] = 3-1 = 2, U[2,2] = 2-1 = 1, U[1,2] = 1
        assert t.multiplicity(1, 1) == 2
        assert t.multiplicity(2, 2) == 1
        assert t.multiplicity(1, 2) == 1

    def test_shape_validation(self):
        with pytest.raises(ValidationError):
            RankTable(2, ((3,), (2,)))
        with pytest.raises(ValidationError):
            RankTable(2, ((3, 1),))

    def test_leq(self):
        lo = RankTable(2, ((3, 0), (2,)))
        hi = RankTable(2, ((3, 1), (2,)))
        assert lo.leq(hi) and not hi.leq(lo)


class TestRoundTrips:
    def test_decompose_inverts_ranks(self):
        rng = random.Random(4)
        for _ in range(40):
            n = rng.randint(1, 5)
            D = _random_decomposition(rng, n)
            table = ranks_from_decomposition(D)
            assert is_realizable_table(table)
            assert decompose_from_ranks(table) == D

    def test_matrix_realization_has_the_ranks(self):
        rng = random.Random(9)
        for field in (QQ, GF(2), GF(5)):
            for _ in range(15):
                n = rng.randint(2, 4)
                D = _random_decomposition(rng, n, max_mult=2)
                rep = RepMatrices.from_decomposition(D, field)
                assert rank_profile(rep) == ranks_from_decomposition(D)

    def test_not_realizable_reports_entry(self):
        table = RankTable(2, ((0, 1), (1,)))
        assert not is_realizable_table(table)
        with pytest.raises(NotRealizableError) as exc:
            decompose_from_ranks(table)
        assert exc.value.offending == ((1, 1, -1),)

    def test_decomposition_oracle_agrees(self):
        """Cross-check against the hom-counting linear system."""
        rng = random.Random(17)
        for field in (QQ, GF(3)):
            for _ in range(8):
                n = rng.randint(2, 4)
                D = _random_decomposition(rng, n, max_mult=2)
                rep = RepMatrices.from_decomposition(D, field)
                assert decomposition_oracle(rep) == D


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 4), st.data())
def test_rank_profile_weakly_decreasing(n, data):
    """Extending the composition window can only lower the rank."""
    counts = {
        iv: data.draw(st.integers(0, 2), label=str(iv)) for iv in _all_intervals(n)
    }
    counts[Interval(1, n)] = counts.get(Interval(1, n), 0) + 1
    D = Decomposition.from_multiplicities(n, counts)
    t = ranks_from_decomposition(D)
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            if a > 1:
                assert t.r(a - 1, b) <= t.r(a, b)
            if b < n:
                assert t.r(a, b + 1) <= t.r(a, b)


class TestResolution:
    def test_interval_cases(self):
        D = Decomposition.from_intervals(3, [(1, 2)])
        P, Q = minimal_projective_resolution(D)
        assert P == Decomposition.from_intervals(3, [(1, 3)])
        assert Q == Decomposition.from_intervals(3, [(3, 3)])

    def test_projective_has_no_kernel(self):
        D = Decomposition.from_intervals(3, [(2, 3)])
        P, Q = minimal_projective_resolution(D)
        assert P == D and Q.is_zero()

    def test_dims_close_up(self):
        rng = random.Random(23)
        for _ in range(30):
            n = rng.randint(1, 5)
            D = _random_decomposition(rng, n)
            P, Q = minimal_projective_resolution(D)
            assert tuple(
                p - q for p, q in zip(P.vertex_dims(), Q.vertex_dims())
            ) == D.vertex_dims()


class TestCatenoid:
    def test_known_cases(self):
        assert not is_catenoid(Decomposition.from_intervals(3, [(1, 3), (2, 2)]))
        assert is_catenoid(Decomposition.from_intervals(3, [(1, 2), (2, 3)]))
        assert is_catenoid(Decomposition.from_intervals(2, [(1, 1), (1, 2), (2, 2)]))

    def test_all_pairs_n2(self):
        for x in _all_intervals(2):
            for y in _all_intervals(2):
                D = Decomposition.from_intervals(2, [x, y])
                assert is_catenoid(D)

    def test_matches_path_oracle(self):
        """Exhaustive check against reachability in the irreducible-map graph."""
        n = 4
        ivs = _all_intervals(n)
        for size in (1, 2, 3):
            for subset in itertools.combinations(ivs, size):
                D = Decomposition.from_intervals(n, subset)
                assert is_catenoid(D) == catenoid_oracle(D), subset


class TestSchubertEmbedding:
    def test_hand_example(self):
        D = Decomposition.from_multiplicities(
            2, {Interval(1, 1): 1, Interval(2, 2): 1, Interval(1, 2): 2}
        )
        ambient, target = schubert_embedding_target(D, DimVector(3, (1, 2)))
        assert ambient == (3, 4)
        assert target == (1, 3)

    def test_identity_is_trivial(self):
        D = Decomposition.from_multiplicities(2, {Interval(1, 2): 3})
        ambient, target = schubert_embedding_target(D, DimVector(3, (1, 2)))
        assert ambient == (3, 3)
        assert target == (1, 2)

    def test_rejects_wrong_dims(self):
        D = Decomposition.from_intervals(2, [(1, 1)])
        with pytest.raises(ValidationError):
            schubert_embedding_target(D, DimVector(3, (1, 2)))


class TestWellBehaved:
    def test_flag_example(self):
        D = well_behaved_rep(DimVector(6, (1, 4)))
        assert D == Decomposition.from_multiplicities(
            2, {Interval(1, 1): 3, Interval(1, 2): 3, Interval(2, 2): 3}
        )

    def test_constant_vertex_dimension(self):
        for m in range(2, 7):
            for n in range(2, 4):
                for d in itertools.combinations(range(1, m), n):
                    D = well_behaved_rep(DimVector(m, d))
                    assert D.vertex_dims() == (m,) * n


class TestSubrep:
    def test_restrict_and_quotient(self):
        rep = RepMatrices.identity_tuple(QQ, 2, 2)
        spaces = (span(QQ, 2, [[1, 0]]), span(QQ, 2, [[1, 0]]))
        sub = restrict_rep(rep, spaces)
        quo = quotient_rep(rep, spaces)
        assert sub.dims == (1, 1) and quo.dims == (1, 1)
        assert rank_profile(sub).r(1, 2) == 1
        assert rank_profile(quo).r(1, 2) == 1

    def test_rejects_non_invariant(self):
        rep = RepMatrices.identity_tuple(QQ, 2, 2)
        spaces = (span(QQ, 2, [[1, 0]]), span(QQ, 2, [[0, 1]]))
        with pytest.raises(NotSubrepresentationError):
            restrict_rep(rep, spaces)

    def test_zero_map_allows_anything(self):
        rep = RepMatrices.zero_tuple(GF(2), 2, 2)
        spaces = (span(GF(2), 2, [[1, 1]]), span(GF(2), 2, [[0, 1]]))
        sub = restrict_rep(rep, spaces)
        assert rank_profile(sub).r(1, 2) == 0


class TestSubrepPoint:
    def test_from_coordinates(self):
        pt = SubrepPoint.from_coordinates(GF(2), (3, 3), [(1,), (1, 3)])
        assert pt.is_coordinate
        assert pt.dims() == (1, 2)
        assert pt.coordinates == ((1,), (1, 3))

    def test_detect_coordinates(self):
        spaces = (span(QQ, 3, [[1, 0, 0], [0, 0, 1]]),)
        pt = SubrepPoint.detect_coordinates(spaces)
        assert pt.coordinates == ((1, 3),)
        skew = (span(QQ, 3, [[1, 1, 0]]),)
        assert SubrepPoint.detect_coordinates(skew).coordinates is None

    def test_rejects_mismatched_coordinates(self):
        spaces = (span(QQ, 2, [[1, 1]]),)
        with pytest.raises(ValidationError):
            SubrepPoint(spaces, ((1,),))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValidationError):
            SubrepPoint.from_coordinates(QQ, (2,), [(3,)])
