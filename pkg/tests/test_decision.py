import pathlib
import random
from fractions import Fraction as F

import pytest

from svset.decision import (
    DecisionTable,
    EvidenceGrade,
    aggregate_min,
    break_even,
    hybrid_score,
    lambda_sweep,
    projection_rankings,
    rank,
    score,
)
from svset.errors import (
    BadDocumentError,
    BoundMismatchError,
    EmptyCriteriaError,
    LambdaOutOfRangeError,
)

DATA = pathlib.Path(__file__).resolve().parents[1] / "data"


@pytest.fixture(scope="module")
def laptops():
    return DecisionTable.from_csv(str(DATA / "laptops.csv"), 10)


@pytest.fixture(scope="module")
def suppliers():
    return DecisionTable.from_csv(str(DATA / "suppliers.csv"), 5)


@pytest.fixture(scope="module")
def proposals():
    return DecisionTable.from_csv(str(DATA / "proposals.csv"), 5)


class TestGrades:
    def test_validation(self):
        with pytest.raises(BadDocumentError):
            EvidenceGrade(F("1.1"), 1, 5)
        with pytest.raises(BadDocumentError):
            EvidenceGrade(F("0.5"), 6, 5)
        with pytest.raises(BadDocumentError):
            EvidenceGrade(F("0.5"), 0, 0)

    def test_str(self):
        assert str(EvidenceGrade(F("0.5"), 3, 5)) == "(0.5,3)"

    def test_hybrid_score_exact(self):
        g = EvidenceGrade(F("0.6"), 9, 10)
        assert hybrid_score(g, F(7, 10)) == F(69, 100)

    def test_lambda_endpoints_rejected(self):
        g = EvidenceGrade(F("0.5"), 3, 5)
        for lam in (F(0), F(1), F(-1, 2), F(3, 2)):
            with pytest.raises(LambdaOutOfRangeError):
                hybrid_score(g, lam)

    def test_mixed_bounds_rejected(self):
        with pytest.raises(BoundMismatchError):
            score({"a": EvidenceGrade(F(1, 2), 1, 5), "b": EvidenceGrade(F(1, 2), 1, 10)}, F(1, 2))


class TestLaptops:
    def test_aggregated_profiles(self, laptops):
        profile = aggregate_min(laptops)
        assert profile["L1"].as_pair() == (F("0.50"), 3)
        assert profile["L2"].as_pair() == (F("0.60"), 5)
        assert profile["L3"].as_pair() == (F("0.60"), 4)
        assert profile["L4"].as_pair() == (F("0.60"), 9)

    def test_scores_at_seven_tenths(self, laptops):
        result = rank(laptops, F(7, 10))
        assert result.scores == {
            "L1": F("0.44"),
            "L2": F("0.57"),
            "L3": F("0.54"),
            "L4": F("0.69"),
        }
        assert result.strict_order() == ["L4", "L2", "L3", "L1"]

    def test_order_stable_across_whole_interval(self, laptops):
        sweep = lambda_sweep(laptops)
        assert sweep.breakpoints == ()
        assert len(sweep.intervals) == 1
        assert sweep.intervals[0].ranking.strict_order() == ["L4", "L2", "L3", "L1"]

    def test_grade_projection_ties_three_laptops(self, laptops):
        proj = projection_rankings(laptops)
        assert set(proj.grade_order[0]) == {"L2", "L3", "L4"}
        assert proj.grade_order[1] == ("L1",)


class TestSuppliers:
    def test_aggregated_profiles(self, suppliers):
        profile = aggregate_min(suppliers)
        assert profile["S1"].as_pair() == (F("0.60"), 1)
        assert profile["S2"].as_pair() == (F("0.60"), 2)
        assert profile["S3"].as_pair() == (F("0.60"), 3)
        assert profile["S4"].as_pair() == (F("0.75"), 2)

    def test_scores_both_weights(self, suppliers):
        hi = rank(suppliers, F(7, 10))
        assert hi.scores == {
            "S1": F("0.48"), "S2": F("0.54"), "S3": F("0.60"), "S4": F("0.645"),
        }
        assert hi.strict_order() == ["S4", "S3", "S2", "S1"]
        lo = rank(suppliers, F(2, 5))
        assert lo.scores == {
            "S1": F("0.36"), "S2": F("0.48"), "S3": F("0.60"), "S4": F("0.54"),
        }
        assert lo.strict_order() == ["S3", "S4", "S2", "S1"]

    def test_break_even_four_sevenths(self, suppliers):
        profile = aggregate_min(suppliers)
        report = break_even(profile["S3"], profile["S4"], ("S3", "S4"))
        assert report.relation == "crossing"
        assert report.lambda_star == F(4, 7)
        assert report.low_lambda_winner == "S3"
        assert report.high_lambda_winner == "S4"

    def test_sweep_brackets_the_crossing(self, suppliers):
        sweep = lambda_sweep(suppliers)
        assert F(4, 7) in sweep.breakpoints
        below = next(iv for iv in sweep.intervals if iv.high == F(4, 7))
        above = next(iv for iv in sweep.intervals if iv.low == F(4, 7))
        assert below.ranking.strict_order().index("S3") < below.ranking.strict_order().index("S4")
        assert above.ranking.strict_order().index("S4") < above.ranking.strict_order().index("S3")
        assert ("S3", "S4") in sweep.ties_at[F(4, 7)] or ("S4", "S3") in sweep.ties_at[F(4, 7)]


class TestProposals:
    def test_lambda_star(self, proposals):
        profile = aggregate_min(proposals)
        report = break_even(profile["P2"], profile["P3"], ("P2", "P3"))
        assert report.relation == "crossing"
        assert report.lambda_star == F(8, 11)

    def test_scores_below_and_above(self, proposals):
        below = rank(proposals, F(1, 2))
        assert below.scores == {"P1": F("0.525"), "P2": F("0.725"), "P3": F("0.60")}
        assert below.strict_order() == ["P2", "P3", "P1"]
        above = rank(proposals, F(9, 10))
        assert above.scores == {"P1": F("0.625"), "P2": F("0.665"), "P3": F("0.76")}
        assert above.strict_order() == ["P3", "P2", "P1"]

    def test_projections_tie_exactly_as_stated(self, proposals):
        proj = projection_rankings(proposals)
        assert proj.grade_order == (("P3",), ("P1", "P2"))
        assert proj.evidence_order == (("P2",), ("P1", "P3"))


class TestHybridTheorem:
    def _random_config(self, rng):
        k = rng.randrange(1, 11)
        a = rng.randrange(0, 20)
        b = rng.randrange(a + 1, 21)
        m = rng.randrange(0, k)
        m2 = rng.randrange(m + 1, k + 1)
        return k, F(a, 20), F(b, 20), m, m2

    def test_three_alternative_order_both_sides(self):
        # 500 seeded configurations with mu < mu' and m < m'
        rng = random.Random(50)
        for _ in range(500):
            k, mu, mu2, m, m2 = self._random_config(rng)
            u1 = EvidenceGrade(mu, m, k)
            u2 = EvidenceGrade(mu, m2, k)
            u3 = EvidenceGrade(mu2, m, k)
            lam_star = F(m2 - m, k * (mu2 - mu) + (m2 - m))
            assert 0 < lam_star < 1
            report = break_even(u2, u3, ("u2", "u3"))
            assert report.relation == "crossing"
            assert report.lambda_star == lam_star
            for lam in (lam_star / 2, lam_star + (1 - lam_star) / 2):
                s1, s2, s3 = (hybrid_score(g, lam) for g in (u1, u2, u3))
                assert s2 > s1 and s3 > s1
                if lam < lam_star:
                    assert s2 > s3
                else:
                    assert s3 > s2
            assert hybrid_score(u2, lam_star) == hybrid_score(u3, lam_star)

    def test_dominance_and_tie_classification(self):
        k = 5
        a = EvidenceGrade(F("0.5"), 2, k)
        better = EvidenceGrade(F("0.6"), 3, k)
        assert break_even(a, better).relation == "dominance"
        assert break_even(a, better).dominant == "second"
        assert break_even(a, a).relation == "always-tied"
        with pytest.raises(BoundMismatchError):
            break_even(a, EvidenceGrade(F("0.5"), 2, 6))


class TestSweepConsistency:
    def test_midpoint_rankings_constant_inside_cells(self, suppliers):
        # oracle: re-rank at two other interior points of every cell
        sweep = lambda_sweep(suppliers)
        for iv in sweep.intervals:
            for t in (F(1, 4), F(3, 4)):
                lam = iv.low + t * (iv.high - iv.low)
                assert rank(suppliers, lam).order == iv.ranking.order

    def test_random_tables_sweep_agrees_with_pointwise_ranking(self):
        rng = random.Random(51)
        for _ in range(40):
            k = rng.randrange(2, 8)
            alts = tuple(f"A{i}" for i in range(rng.randrange(2, 5)))
            crits = tuple(f"c{i}" for i in range(rng.randrange(1, 4)))
            values = {
                (u, e): EvidenceGrade(F(rng.randrange(0, 21), 20), rng.randrange(0, k + 1), k)
                for u in alts
                for e in crits
            }
            table = DecisionTable(alts, crits, k, values)
            sweep = lambda_sweep(table)
            assert sweep.intervals[0].low == 0 and sweep.intervals[-1].high == 1
            for iv in sweep.intervals:
                lam = iv.low + F(1, 3) * (iv.high - iv.low)
                assert rank(table, lam).order == iv.ranking.order


class TestIngestion:
    def test_csv_json_round_trip(self, laptops):
        again = DecisionTable.from_json(laptops.to_json())
        assert again == laptops

    def test_svset_view_uses_product_scale(self, proposals):
        a = proposals.to_svset()
        assert a("P3", "overall") == (F("0.80"), 2)
        assert a.scale.kind == "product"

    def test_bad_cells(self, tmp_path):
        p = tmp_path / "bad.csv"
        p.write_text("alternative,c\nA1,0.5\n")
        with pytest.raises(BadDocumentError):
            DecisionTable.from_csv(str(p), 5)
        p.write_text("alternative,c\nA1,0.5;x\n")
        with pytest.raises(BadDocumentError):
            DecisionTable.from_csv(str(p), 5)

    def test_empty_criteria_refused(self):
        with pytest.raises(EmptyCriteriaError):
            aggregate_min(DecisionTable(("A",), (), 5, {}))

    def test_mixed_bounds_in_table(self):
        with pytest.raises(BoundMismatchError):
            DecisionTable(
                ("A",), ("c",), 5, {("A", "c"): EvidenceGrade(F(1, 2), 1, 6)}
            )
