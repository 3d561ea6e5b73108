import itertools
import random
from fractions import Fraction as F

import pytest

from svset.encodings import (
    IFSPair,
    LVISS,
    RoughPair,
    SoftSet,
    crisp_to_sv,
    fuzzy_to_sv,
    ifs_to_sv,
    it2_to_sv,
    lfuzzy_to_sv,
    lviss_membership_to_sv,
    multiset_to_sv,
    rough_to_sv,
    soft_to_sv,
    sv_to_crisp,
    sv_to_fuzzy,
    sv_to_ifs,
    sv_to_it2,
    sv_to_lfuzzy,
    sv_to_multiset,
    sv_to_rough,
    sv_to_simple_lviss,
    sv_to_soft,
    sv_to_type2,
    type2_to_sv,
)
from svset.errors import ConstraintViolationError, WrongScaleError
from svset.scale import ChainScale, m3_scale
from svset.sets import ParamSet, Universe, sv_complement, sv_intersection, sv_union


def rand_unit(rng: random.Random) -> F:
    return F(rng.randrange(0, 21), 20)


class TestCrisp:
    def test_exhaustive_round_trip_64_subsets(self):
        u = Universe("U", ("a", "b", "c", "d", "e", "f"))
        for bits in itertools.product([0, 1], repeat=6):
            s = frozenset(x for x, bit in zip(u.elements, bits) if bit)
            assert sv_to_crisp(crisp_to_sv(u, s)) == s

    def test_ops_match_set_algebra(self):
        u = Universe("U", ("a", "b", "c", "d"))
        rng = random.Random(20)
        for _ in range(50):
            s = frozenset(x for x in u.elements if rng.random() < 0.5)
            t = frozenset(x for x in u.elements if rng.random() < 0.5)
            assert sv_to_crisp(sv_union(crisp_to_sv(u, s), crisp_to_sv(u, t))) == s | t
            assert sv_to_crisp(sv_intersection(crisp_to_sv(u, s), crisp_to_sv(u, t))) == s & t
            assert sv_to_crisp(sv_complement(crisp_to_sv(u, s))) == frozenset(u.elements) - s

    def test_rejects_foreign_members(self):
        with pytest.raises(ConstraintViolationError):
            crisp_to_sv(Universe("U", ("a",)), {"a", "zz"})

    def test_wrong_scale_decode(self):
        u = Universe("U", ("a",))
        with pytest.raises(WrongScaleError):
            sv_to_crisp(fuzzy_to_sv(u, {"a": F("0.5")}))


class TestSoft:
    def test_exhaustive_round_trip(self):
        # all soft sets over |U| = 4, |E| = 3 would be 2^12; sample the full
        # space via the product over per-parameter subsets of a 2-element core
        u = Universe("U", ("a", "b", "c", "d"))
        e = ParamSet("E", ("p", "q", "r"))
        subsets = [frozenset(s) for n in range(5) for s in itertools.combinations(u.elements, n)]
        rng = random.Random(21)
        for _ in range(200):
            assignment = {param: rng.choice(subsets) for param in e.params}
            f = SoftSet(u, e, assignment)
            assert sv_to_soft(soft_to_sv(f)) == f

    def test_ops_preserved(self):
        u = Universe("U", ("a", "b", "c"))
        e = ParamSet("E", ("p", "q"))
        f = SoftSet(u, e, {"p": frozenset({"a", "b"}), "q": frozenset({"c"})})
        g = SoftSet(u, e, {"p": frozenset({"b", "c"}), "q": frozenset()})
        assert soft_to_sv(f.union(g)) == sv_union(soft_to_sv(f), soft_to_sv(g))
        assert soft_to_sv(f.intersection(g)) == sv_intersection(soft_to_sv(f), soft_to_sv(g))
        assert soft_to_sv(f.complement()) == sv_complement(soft_to_sv(f))

    def test_missing_parameter_rejected(self):
        u = Universe("U", ("a",))
        e = ParamSet("E", ("p", "q"))
        with pytest.raises(ConstraintViolationError):
            SoftSet(u, e, {"p": frozenset()})


class TestFuzzyMultisetLFuzzy:
    def test_fuzzy_round_trip_random(self):
        u = Universe("U", ("a", "b", "c"))
        rng = random.Random(22)
        for _ in range(200):
            mu = {x: rand_unit(rng) for x in u.elements}
            assert sv_to_fuzzy(fuzzy_to_sv(u, mu)) == mu

    def test_fuzzy_ops_are_min_max(self):
        u = Universe("U", ("a",))
        f = fuzzy_to_sv(u, {"a": F("0.3")})
        g = fuzzy_to_sv(u, {"a": F("0.8")})
        assert sv_union(f, g)("a") == F("0.8")
        assert sv_intersection(f, g)("a") == F("0.3")
        assert sv_complement(f)("a") == F("0.7")

    def test_multiset_round_trip_random(self):
        u = Universe("U", ("a", "b", "c"))
        rng = random.Random(23)
        for _ in range(200):
            k = rng.randrange(1, 12)
            m = {x: rng.randrange(0, k + 1) for x in u.elements}
            assert sv_to_multiset(multiset_to_sv(u, m, k)) == m

    def test_multiset_bound_enforced(self):
        u = Universe("U", ("a",))
        with pytest.raises(ConstraintViolationError):
            multiset_to_sv(u, {"a": 7}, 5)

    def test_lfuzzy_round_trip_on_non_chain(self):
        u = Universe("U", ("a", "b", "c", "d"))
        rng = random.Random(24)
        scale = m3_scale()
        for _ in range(200):
            mu = {x: scale.sample(rng) for x in u.elements}
            assert sv_to_lfuzzy(lfuzzy_to_sv(u, mu, scale)) == mu


class TestIFS:
    def test_round_trip_random(self):
        u = Universe("U", ("a", "b"))
        rng = random.Random(25)
        for _ in range(200):
            mu, nu = {}, {}
            for x in u.elements:
                m = rand_unit(rng)
                mu[x] = m
                nu[x] = F(rng.randrange(0, int((1 - m) * 20) + 1), 20)
            p = IFSPair(u, mu, nu)
            assert sv_to_ifs(ifs_to_sv(p)) == p

    def test_simplex_constraint(self):
        u = Universe("U", ("a",))
        with pytest.raises(ConstraintViolationError):
            IFSPair(u, {"a": F("0.7")}, {"a": F("0.4")})

    def test_union_is_max_min(self):
        u = Universe("U", ("a",))
        p = ifs_to_sv(IFSPair(u, {"a": F("0.6")}, {"a": F("0.3")}))
        q = ifs_to_sv(IFSPair(u, {"a": F("0.4")}, {"a": F("0.2")}))
        assert sv_union(p, q)("a") == (F("0.6"), F("0.2"))
        assert sv_complement(p)("a") == (F("0.3"), F("0.6"))


class TestRough:
    def test_exhaustive_round_trip_27_pairs(self):
        # every element independently takes one of three statuses
        u = Universe("U", ("a", "b", "c"))
        statuses = [(0, 0), (0, 1), (1, 1)]
        count = 0
        for combo in itertools.product(statuses, repeat=3):
            lower = frozenset(x for x, s in zip(u.elements, combo) if s == (1, 1))
            upper = frozenset(x for x, s in zip(u.elements, combo) if s != (0, 0))
            r = RoughPair(u, lower, upper)
            assert sv_to_rough(rough_to_sv(r)) == r
            count += 1
        assert count == 27

    def test_ops_preserved(self):
        u = Universe("U", ("a", "b", "c", "d"))
        r = RoughPair(u, frozenset({"a"}), frozenset({"a", "b", "c"}))
        s = RoughPair(u, frozenset({"b", "c"}), frozenset({"b", "c", "d"}))
        assert rough_to_sv(r.union(s)) == sv_union(rough_to_sv(r), rough_to_sv(s))
        assert rough_to_sv(r.intersection(s)) == sv_intersection(rough_to_sv(r), rough_to_sv(s))
        assert rough_to_sv(r.complement()) == sv_complement(rough_to_sv(r))

    def test_bad_pair_rejected(self):
        u = Universe("U", ("a", "b"))
        with pytest.raises(ConstraintViolationError):
            RoughPair(u, frozenset({"a"}), frozenset({"b"}))


class TestType2:
    GRID = ["0", "0.25", "0.5", "0.75", "1"]

    def test_round_trip_random(self):
        u = Universe("U", ("a", "b"))
        rng = random.Random(26)
        for _ in range(200):
            grid = [F(g) for g in self.GRID]
            membership = {(x, g): rand_unit(rng) for x in u.elements for g in grid}
            a = type2_to_sv(u, membership, self.GRID)
            assert sv_to_type2(a) == membership

    def test_union_pointwise_on_grid(self):
        u = Universe("U", ("a",))
        grid = [F(g) for g in self.GRID]
        f = {(x, g): F("0.2") for x in u.elements for g in grid}
        g2 = {(x, g): F("0.7") for x in u.elements for g in grid}
        joined = sv_union(type2_to_sv(u, f, self.GRID), type2_to_sv(u, g2, self.GRID))
        assert sv_to_type2(joined) == g2


class TestIT2:
    def test_round_trip_random(self):
        u = Universe("U", ("a", "b", "c"))
        rng = random.Random(27)
        for _ in range(200):
            lo, hi = {}, {}
            for x in u.elements:
                a, b = sorted((rand_unit(rng), rand_unit(rng)))
                lo[x], hi[x] = a, b
            assert sv_to_it2(it2_to_sv(u, lo, hi)) == (lo, hi)

    def test_crossed_bounds_rejected(self):
        u = Universe("U", ("a",))
        with pytest.raises(ConstraintViolationError):
            it2_to_sv(u, {"a": F("0.8")}, {"a": F("0.2")})

    def test_complement_flips_endpoints(self):
        u = Universe("U", ("a",))
        a = it2_to_sv(u, {"a": F("0.2")}, {"a": F("0.5")})
        lo, hi = sv_to_it2(sv_complement(a))
        assert lo["a"] == F("0.5") and hi["a"] == F("0.8")


class TestLVISS:
    def _random_lviss(self, u, e, rng):
        scale = ChainScale(4)
        lower, upper = {}, {}
        for x in u.elements:
            for p in e.params:
                a, b = sorted((rng.randrange(5), rng.randrange(5)))
                lower[(x, p)], upper[(x, p)] = a, b
        return LVISS(u, e, scale, lower, upper)

    def test_membership_encoding_round_trip_random(self):
        u = Universe("U", ("a", "b"))
        e = ParamSet("E", ("p", "q"))
        rng = random.Random(28)
        for _ in range(200):
            f = self._random_lviss(u, e, rng)
            a = lviss_membership_to_sv(f)
            for x in u.elements:
                for p in e.params:
                    assert a(x, p) == (f.lower[(x, p)], f.upper[(x, p)])

    def test_ops_preserved(self):
        u = Universe("U", ("a", "b"))
        e = ParamSet("E", ("p",))
        rng = random.Random(29)
        for _ in range(100):
            f = self._random_lviss(u, e, rng)
            g = self._random_lviss(u, e, rng)
            assert lviss_membership_to_sv(f.union(g)) == sv_union(
                lviss_membership_to_sv(f), lviss_membership_to_sv(g)
            )
            assert lviss_membership_to_sv(f.intersection(g)) == sv_intersection(
                lviss_membership_to_sv(f), lviss_membership_to_sv(g)
            )

    def test_simple_view_collapses_intervals(self):
        # the degenerate-interval view is a section, not an inverse: two
        # different LVISS assignments can map to SV-sets whose simple views
        # coincide, so no decode can recover interval width
        u = Universe("U", ("a",))
        e = ParamSet("E", ("p",))
        scale = ChainScale(4)
        wide = LVISS(u, e, scale, {("a", "p"): 1}, {("a", "p"): 3})
        sv = lviss_membership_to_sv(wide)
        simple = sv_to_simple_lviss(sv)
        assert simple.lower == simple.upper
        assert simple.lower[("a", "p")] == (1, 3)
        assert simple.value_scale != scale

    def test_mismatched_endpoints_rejected(self):
        u = Universe("U", ("a",))
        e = ParamSet("E", ("p",))
        with pytest.raises(ConstraintViolationError):
            LVISS(u, e, ChainScale(4), {("a", "p"): 3}, {("a", "p"): 1})
