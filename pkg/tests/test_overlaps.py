import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ivowa.overlaps import (
    OverlapError,
    RealOverlap,
    builtin_overlaps,
    check_commutative_first_two,
    check_m3_component,
    check_m4_component,
    convex_sum,
    lattice_join,
    lattice_meet,
    mean_of_components,
    pointwise_leq,
    projection_aggregator,
    real_owa,
    verify_overlap_axioms,
)
from ivowa.sampling import REAL_GRID

CATALOG = builtin_overlaps()
GRID_PTS = REAL_GRID.endpoints()


class TestCatalog:
    def test_expected_ids(self):
        assert set(CATALOG) == {
            "product", "min", "minmax:p=1", "minmax:p=2", "minmax:p=3",
            "xyp:p=2", "xyp:p=3", "mig:poly", "lukasiewicz",
        }

    def test_lukasiewicz_flagged_not_overlap(self):
        assert not CATALOG["lukasiewicz"].claims_overlap()
        assert all(CATALOG[k].claims_overlap() for k in CATALOG if k != "lukasiewicz")

    def test_pointwise_examples(self):
        assert CATALOG["minmax:p=2"](0.5, 1.0) == 0.5
        assert CATALOG["product"](1.0, 1.0) == 1.0
        assert CATALOG["lukasiewicz"](0.5, 0.5) == 0.0

    @pytest.mark.parametrize("name", [k for k in CATALOG if k != "lukasiewicz"])
    def test_axioms_hold(self, name):
        results = verify_overlap_axioms(CATALOG[name])
        failed = {axiom for axiom, res in results.items() if not res.ok}
        assert not failed, (name, failed, {a: results[a].witness for a in failed})

    def test_lukasiewicz_fails_exactly_the_zero_boundary(self):
        results = verify_overlap_axioms(CATALOG["lukasiewicz"])
        assert not results["go2"].ok
        x, y = results["go2"].witness
        value = CATALOG["lukasiewicz"](x, y)
        assert (value == 0.0) != (x * y == 0.0)
        for axiom in ("go1", "go3", "go4", "go5"):
            assert results[axiom].ok, axiom

    def test_minmax_p1_equals_product_pointwise(self):
        g, h = CATALOG["minmax:p=1"], CATALOG["product"]
        for x in GRID_PTS:
            for y in GRID_PTS:
                assert g(x, y) == h(x, y)


class TestCombinators:
    def test_join_meet_values(self):
        j = lattice_join(CATALOG["product"], CATALOG["min"])
        assert j(0.4, 0.6) == pytest.approx(0.4, abs=1e-12)
        assert j(0.0, 0.9) == 0.0
        m = lattice_meet(CATALOG["product"], CATALOG["min"])
        assert m(0.4, 0.6) == pytest.approx(0.24, abs=1e-12)

    def test_join_meet_are_overlaps(self):
        for combined in (
            lattice_join(CATALOG["product"], CATALOG["min"]),
            lattice_meet(CATALOG["minmax:p=2"], CATALOG["xyp:p=2"]),
        ):
            results = verify_overlap_axioms(combined)
            assert all(res.ok for res in results.values()), combined.name

    def test_lattice_laws_pointwise(self):
        g1, g2, g3 = CATALOG["product"], CATALOG["min"], CATALOG["minmax:p=2"]
        j12 = lattice_join(g1, g2)
        for x in GRID_PTS[::4]:
            for y in GRID_PTS[::4]:
                assert j12(x, y) == lattice_join(g2, g1)(x, y)
                assert lattice_join(g1, lattice_join(g2, g3))(x, y) == \
                    lattice_join(j12, g3)(x, y)
                assert lattice_join(g1, g1)(x, y) == g1(x, y)
                assert lattice_meet(g1, g1)(x, y) == g1(x, y)
                assert lattice_meet(g1, j12)(x, y) == g1(x, y)

    def test_convex_sum_value(self):
        c = convex_sum(0.5, 0.5, CATALOG["product"], CATALOG["min"])
        assert c(0.4, 0.6) == pytest.approx(0.32, abs=1e-12)
        assert c(1.0, 1.0) == 1.0
        first_only = convex_sum(1.0, 0.0, CATALOG["product"], CATALOG["min"])
        for x in GRID_PTS[::2]:
            for y in GRID_PTS[::2]:
                assert first_only(x, y) == CATALOG["product"](x, y)

    def test_convex_sum_is_overlap(self):
        c = convex_sum(0.25, 0.75, CATALOG["minmax:p=2"], CATALOG["product"])
        assert all(res.ok for res in verify_overlap_axioms(c).values())

    @pytest.mark.parametrize("w1,w2", [(0.5, 0.6), (0.9, 0.0), (-0.1, 1.1)])
    def test_convex_sum_rejects_bad_weights(self, w1, w2):
        with pytest.raises(OverlapError):
            convex_sum(w1, w2, CATALOG["product"], CATALOG["min"])

    def test_pointwise_leq(self):
        assert pointwise_leq(CATALOG["product"], CATALOG["min"], GRID_PTS).ok
        assert not pointwise_leq(CATALOG["min"], CATALOG["product"], GRID_PTS).ok


class TestRealOwa:
    def test_examples(self):
        assert real_owa((1.0, 0.0), (0.3, 0.8)) == 0.8
        assert real_owa((0.5, 0.5), (0.3, 0.8)) == pytest.approx(0.55, abs=1e-12)
        assert real_owa((0.0, 0.0, 1.0), (0.9, 0.2, 0.5)) == 0.2

    @given(st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=1, max_size=6))
    def test_uniform_weights_give_mean(self, xs):
        n = len(xs)
        got = real_owa([1.0 / n] * n, xs)
        assert got == pytest.approx(math.fsum(xs) / n, abs=1e-12)

    def test_rejects_bad_weights(self):
        with pytest.raises(OverlapError):
            real_owa((0.4, 0.4), (0.1, 0.2))
        with pytest.raises(OverlapError):
            real_owa((1.5, -0.5), (0.1, 0.2))
        with pytest.raises(OverlapError):
            real_owa((1.0,), (0.1, 0.2))


class TestFourAryAggregators:
    def test_projection_picks_component(self):
        pick = projection_aggregator(3)
        assert pick(0.1, 0.2, 0.3, 0.4) == 0.3
        assert check_m3_component(pick, 3).ok
        assert check_m4_component(pick, 3).ok
        assert check_commutative_first_two(pick).ok
        assert not check_m3_component(pick, 4).ok

    def test_mean_of_components(self):
        mean34 = mean_of_components((3, 4))
        assert mean34(0.0, 1.0, 0.2, 0.4) == pytest.approx(0.3, abs=1e-12)
        assert check_m3_component(mean34, 4).ok
        assert check_m4_component(mean34, 3).ok

    def test_index_bounds(self):
        with pytest.raises(OverlapError):
            projection_aggregator(5)
        with pytest.raises(OverlapError):
            mean_of_components((0, 2))

    def test_arity_enforced(self):
        pick = projection_aggregator(1)
        with pytest.raises(OverlapError):
            pick(0.1, 0.2)

    def test_registering_unverified_function_is_allowed(self):
        bogus = RealOverlap(lambda x, y: 0.5, "constant-half")
        results = verify_overlap_axioms(bogus)
        assert not results["go2"].ok and not results["go3"].ok
