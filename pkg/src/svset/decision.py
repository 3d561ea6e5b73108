"""Product-scale decision engine: grade/evidence pairs, min-aggregation,
lambda-weighted hybrid scores, rankings, break-even points, and sweeps.

Every number is an exact rational, so worked examples reproduce digit for
digit and break-even points come out in lowest terms.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    BadDocumentError,
    BoundMismatchError,
    EmptyCriteriaError,
    LambdaOutOfRangeError,
)
from .rationals import format_rational, parse_rational
from .scale import ChainScale, ProductScale, UnitRationalScale
from .sets import ParamSet, SVSet, Universe


@dataclass(frozen=True)
class EvidenceGrade:
    """Suitability grade mu in [0,1] backed by m of at most k evidence items."""

    mu: Fraction
    m: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "mu", Fraction(self.mu))
        if self.k < 1:
            raise BadDocumentError(f"evidence bound must be >= 1, got {self.k}")
        if not 0 <= self.mu <= 1:
            raise BadDocumentError(f"grade {self.mu} outside [0, 1]")
        if not 0 <= self.m <= self.k:
            raise BadDocumentError(f"evidence count {self.m} outside 0..{self.k}")

    def as_pair(self) -> tuple[Fraction, int]:
        return (self.mu, self.m)

    def __str__(self) -> str:
        return f"({format_rational(self.mu)},{self.m})"


def _require_same_bound(grades: Sequence[EvidenceGrade]) -> int:
    bounds = {g.k for g in grades}
    if len(bounds) != 1:
        raise BoundMismatchError(f"mixed evidence bounds {sorted(bounds)}")
    return bounds.pop()


@dataclass(frozen=True)
class DecisionTable:
    """Alternatives x criteria -> evidence grades, all sharing one bound k."""

    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    k: int
    values: Mapping[tuple[str, str], EvidenceGrade]

    def __post_init__(self):
        for u in self.alternatives:
            for e in self.criteria:
                if (u, e) not in self.values:
                    raise BadDocumentError(f"missing grade for ({u!r}, {e!r})")
                g = self.values[(u, e)]
                if g.k != self.k:
                    raise BoundMismatchError(
                        f"grade at ({u!r}, {e!r}) has bound {g.k}, table has {self.k}"
                    )

    def grade(self, u: str, e: str) -> EvidenceGrade:
        return self.values[(u, e)]

    def to_svset(self) -> SVSet:
        """The same data as an SV-set over the product scale [0,1] x {0..k}."""
        scale = ProductScale(UnitRationalScale(), ChainScale(self.k))
        return SVSet.from_function(
            Universe("alternatives", self.alternatives),
            ParamSet("criteria", self.criteria),
            scale,
            lambda u, e: self.values[(u, e)].as_pair(),
        )

    # -- ingestion --------------------------------------------------------
    @classmethod
    def from_csv(cls, path: str, k: int) -> "DecisionTable":
        """CSV with header row = criteria, first column = alternatives, cells "mu;m"."""
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        if len(rows) < 2 or len(rows[0]) < 2:
            raise BadDocumentError("decision CSV needs a header row and at least one alternative")
        criteria = tuple(c.strip() for c in rows[0][1:])
        alternatives = []
        values = {}
        for row in rows[1:]:
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(criteria) + 1:
                raise BadDocumentError(f"row {row!r} does not match the header width")
            u = row[0].strip()
            alternatives.append(u)
            for e, cell in zip(criteria, row[1:]):
                values[(u, e)] = _parse_cell(cell, k)
        return cls(tuple(alternatives), criteria, k, values)

    @classmethod
    def from_json(cls, doc: Mapping) -> "DecisionTable":
        for key in ("alternatives", "criteria", "k", "values"):
            if key not in doc:
                raise BadDocumentError(f"decision document missing {key!r}")
        k = int(doc["k"])
        values = {}
        for key, cell in doc["values"].items():
            if "|" not in key:
                raise BadDocumentError(f"value key {key!r} must be 'alternative|criterion'")
            u, e = key.split("|", 1)
            values[(u, e)] = _parse_cell(cell, k)
        return cls(tuple(doc["alternatives"]), tuple(doc["criteria"]), k, values)

    def to_json(self) -> dict:
        return {
            "alternatives": list(self.alternatives),
            "criteria": list(self.criteria),
            "k": self.k,
            "values": {
                f"{u}|{e}": f"{format_rational(g.mu)};{g.m}"
                for (u, e), g in sorted(self.values.items())
            },
        }


def _parse_cell(cell: str, k: int) -> EvidenceGrade:
    parts = cell.strip().split(";")
    if len(parts) != 2:
        raise BadDocumentError(f"cell {cell!r} must look like 'mu;m'")
    try:
        m = int(parts[1])
    except ValueError as exc:
        raise BadDocumentError(f"evidence count in {cell!r} is not an integer") from exc
    return EvidenceGrade(parse_rational(parts[0]), m, k)


# ---------------------------------------------------------------------------
# aggregation and scoring


def aggregate_min(table: DecisionTable) -> dict[str, EvidenceGrade]:
    """Componentwise minimum over criteria (meet in the product scale)."""
    if not table.criteria:
        raise EmptyCriteriaError("refusing the empty meet: it would be the top grade")
    out = {}
    for u in table.alternatives:
        grades = [table.grade(u, e) for e in table.criteria]
        out[u] = EvidenceGrade(
            min(g.mu for g in grades), min(g.m for g in grades), table.k
        )
    return out


def _check_lambda(lam: Fraction) -> Fraction:
    lam = Fraction(lam)
    if not 0 < lam < 1:
        raise LambdaOutOfRangeError(f"lambda must lie strictly inside (0, 1), got {lam}")
    return lam


def hybrid_score(grade: EvidenceGrade, lam: Fraction) -> Fraction:
    lam = _check_lambda(lam)
    return lam * grade.mu + (1 - lam) * Fraction(grade.m, grade.k)


def score(profile: Mapping[str, EvidenceGrade], lam: Fraction) -> dict[str, Fraction]:
    _require_same_bound(list(profile.values()))
    return {u: hybrid_score(g, lam) for u, g in profile.items()}


def _tie_groups(scores: Mapping[str, Fraction], alternatives: Sequence[str]) -> list[list[str]]:
    by_score: dict[Fraction, list[str]] = {}
    for u in alternatives:
        by_score.setdefault(scores[u], []).append(u)
    return [by_score[s] for s in sorted(by_score, reverse=True)]


@dataclass(frozen=True)
class RankingResult:
    lam: Fraction
    scores: Mapping[str, Fraction]
    order: tuple[tuple[str, ...], ...]  # tie groups, best first

    def strict_order(self) -> list[str]:
        """Flattened order; only meaningful when there are no ties."""
        return [u for group in self.order for u in group]

    def format_order(self) -> str:
        return " ≻ ".join("{" + ", ".join(g) + "}" if len(g) > 1 else g[0] for g in self.order)


def rank(table: DecisionTable, lam: Fraction) -> RankingResult:
    profile = aggregate_min(table)
    scores = score(profile, lam)
    groups = _tie_groups(scores, table.alternatives)
    return RankingResult(Fraction(lam), scores, tuple(tuple(g) for g in groups))


# ---------------------------------------------------------------------------
# break-even analysis


@dataclass(frozen=True)
class BreakEvenReport:
    pair: tuple[str, str]
    relation: str  # "crossing" | "dominance" | "always-tied"
    lambda_star: Fraction | None = None
    low_lambda_winner: str | None = None  # winner for lambda below lambda_star
    high_lambda_winner: str | None = None
    dominant: str | None = None

    def summary(self) -> str:
        a, b = self.pair
        if self.relation == "always-tied":
            return f"{a} and {b} tie for every lambda"
        if self.relation == "dominance":
            return f"{self.dominant} scores at least as well as the other for every lambda"
        return (
            f"break-even at lambda* = {format_rational(self.lambda_star)}: "
            f"{self.low_lambda_winner} wins below, {self.high_lambda_winner} wins above"
        )


def break_even(
    g1: EvidenceGrade, g2: EvidenceGrade, labels: tuple[str, str] = ("first", "second")
) -> BreakEvenReport:
    """Classify a pair of grades: crossing (with exact lambda*), dominance, or tie.

    Crossing happens exactly when grade and evidence move in opposite
    directions; then lambda* = (m' - m) / (k (mu' - mu) + (m' - m)) with the
    primes on the grade-richer profile.
    """
    if g1.k != g2.k:
        raise BoundMismatchError(f"mixed evidence bounds {g1.k} and {g2.k}")
    a, b = labels
    if g1.as_pair() == g2.as_pair():
        return BreakEvenReport((a, b), "always-tied")
    if g1.mu <= g2.mu and g1.m <= g2.m:
        return BreakEvenReport((a, b), "dominance", dominant=b)
    if g2.mu <= g1.mu and g2.m <= g1.m:
        return BreakEvenReport((a, b), "dominance", dominant=a)
    # orient so "hi" has the larger grade and the smaller evidence count
    if g1.mu < g2.mu:
        lo_label, lo, hi_label, hi = a, g1, b, g2
    else:
        lo_label, lo, hi_label, hi = b, g2, a, g1
    k = g1.k
    lam_star = Fraction(lo.m - hi.m, k * (hi.mu - lo.mu) + (lo.m - hi.m))
    return BreakEvenReport(
        (a, b),
        "crossing",
        lambda_star=lam_star,
        low_lambda_winner=lo_label,  # evidence-rich profile wins when evidence matters
        high_lambda_winner=hi_label,
    )


@dataclass(frozen=True)
class SweepInterval:
    low: Fraction
    high: Fraction
    ranking: RankingResult


@dataclass(frozen=True)
class SweepReport:
    breakpoints: tuple[Fraction, ...]
    intervals: tuple[SweepInterval, ...]
    ties_at: Mapping[Fraction, tuple[tuple[str, ...], ...]]

    def summary(self) -> str:
        lines = []
        for iv in self.intervals:
            lines.append(
                f"({format_rational(iv.low)}, {format_rational(iv.high)}): "
                f"{iv.ranking.format_order()}"
            )
        for lam in self.breakpoints:
            groups = [g for g in self.ties_at[lam] if len(g) > 1]
            tied = "; ".join("{" + ", ".join(g) + "}" for g in groups)
            lines.append(f"at lambda = {format_rational(lam)}: ties {tied}")
        return "\n".join(lines)


def lambda_sweep(table: DecisionTable) -> SweepReport:
    """Partition (0, 1) by pairwise break-even points and rank each cell.

    Rankings inside a cell are computed at its midpoint; since scores are
    affine in lambda, the order is constant between consecutive breakpoints.
    """
    if len(table.alternatives) < 1:
        raise BadDocumentError("sweep needs at least one alternative")
    profile = aggregate_min(table)
    points = set()
    alts = table.alternatives
    for i, u in enumerate(alts):
        for v in alts[i + 1 :]:
            report = break_even(profile[u], profile[v], (u, v))
            if report.relation == "crossing":
                points.add(report.lambda_star)
    breakpoints = tuple(sorted(points))
    edges = [Fraction(0), *breakpoints, Fraction(1)]
    intervals = []
    for low, high in zip(edges, edges[1:]):
        mid = (low + high) / 2
        intervals.append(SweepInterval(low, high, rank(table, mid)))
    ties_at = {lam: rank(table, lam).order for lam in breakpoints}
    return SweepReport(breakpoints, tuple(intervals), ties_at)


# ---------------------------------------------------------------------------
# one-coordinate projections


@dataclass(frozen=True)
class ProjectionReport:
    grade_order: tuple[tuple[str, ...], ...]
    evidence_order: tuple[tuple[str, ...], ...]

    def summary(self) -> str:
        def fmt(order):
            return " ≻ ".join(
                "{" + ", ".join(g) + "}" if len(g) > 1 else g[0] for g in order
            )

        return (
            f"grade-only:    {fmt(self.grade_order)}\n"
            f"evidence-only: {fmt(self.evidence_order)}"
        )


def projection_rankings(table: DecisionTable) -> ProjectionReport:
    """Rankings by each coordinate alone, ties kept explicit.

    Alternatives differing only in the dropped coordinate collapse into tie
    groups, which is the information loss the hybrid score avoids.
    """
    profile = aggregate_min(table)
    grade_scores = {u: profile[u].mu for u in table.alternatives}
    evidence_scores = {u: Fraction(profile[u].m) for u in table.alternatives}
    return ProjectionReport(
        tuple(tuple(g) for g in _tie_groups(grade_scores, table.alternatives)),
        tuple(tuple(g) for g in _tie_groups(evidence_scores, table.alternatives)),
    )
