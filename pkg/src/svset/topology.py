"""Cuts, SV-topologies, cut topologies, and SV-continuity.

Families are finite lists of unparameterized SV-sets over a shared universe
and scale.  "Arbitrary joins" reduce to joins of subfamilies, and for finite
families those are generated by binary joins together with the constant
bottom, so closure checks work pairwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    AlphaIsTopError,
    ClosureSizeExceededError,
    InvalidFamilyError,
    NotAChainError,
    ScaleMismatchError,
    ShapeMismatchError,
    UnknownParamError,
)
from .scale import Scale, Value, m3_scale
from .sets import (
    SVSet,
    Universe,
    pullback,
    sv_intersection,
    sv_slice,
    sv_union,
    unparameterized,
)

DEFAULT_CLOSURE_CAP = 4096


# ---------------------------------------------------------------------------
# cuts


def strong_cut(a: SVSet, alpha: Value) -> frozenset:
    """{x : A(x) > alpha}; alpha must be below top.

    On a chain "A(x) > alpha" is the usual strict order.  On a general
    lattice it reads "not A(x) <= alpha": that is the reading under which
    cuts distribute over arbitrary joins on every scale, and the two agree
    whenever A(x) and alpha are comparable.
    """
    if not a.is_unparameterized:
        raise ShapeMismatchError("cuts are defined for unparameterized SV-sets")
    a.scale.check(alpha)
    if alpha == a.scale.top:
        raise AlphaIsTopError("strong cut needs alpha strictly below top")
    return frozenset(x for x in a.universe.elements if not a.scale.leq(a(x), alpha))


def weak_cut(a: SVSet, alpha: Value) -> frozenset:
    """{x : alpha <= A(x)}."""
    if not a.is_unparameterized:
        raise ShapeMismatchError("cuts are defined for unparameterized SV-sets")
    a.scale.check(alpha)
    return frozenset(x for x in a.universe.elements if a.scale.leq(alpha, a(x)))


# ---------------------------------------------------------------------------
# crisp topologies


@dataclass(frozen=True)
class CrispTopology:
    universe: Universe
    opens: frozenset[frozenset]

    def is_valid(self) -> bool:
        return not self.violations()

    def violations(self) -> list[str]:
        issues = []
        full = frozenset(self.universe.elements)
        if frozenset() not in self.opens:
            issues.append("missing empty set")
        if full not in self.opens:
            issues.append("missing whole universe")
        for a, b in itertools.combinations(self.opens, 2):
            if a | b not in self.opens:
                issues.append(f"union {sorted(a)} | {sorted(b)} missing")
            if a & b not in self.opens:
                issues.append(f"intersection {sorted(a)} & {sorted(b)} missing")
        return issues


# ---------------------------------------------------------------------------
# SV-topologies


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    issues: tuple[str, ...] = ()

    def summary(self) -> str:
        if self.ok:
            return "valid"
        return "invalid:\n" + "\n".join(f"  - {i}" for i in self.issues)


@dataclass(frozen=True)
class SVTopology:
    scale: Scale
    universe: Universe
    opens: tuple[SVSet, ...]

    def members(self) -> tuple[SVSet, ...]:
        return self.opens

    def __contains__(self, a: SVSet) -> bool:
        return any(a == o for o in self.opens)


def _shape_check(topo: SVTopology) -> None:
    for o in topo.opens:
        if not o.is_unparameterized:
            raise ShapeMismatchError("SV-topology opens must be unparameterized")
        if o.universe.elements != topo.universe.elements or o.scale != topo.scale:
            raise ShapeMismatchError("open does not match the topology's universe/scale")


def validate_sv_topology(topo: SVTopology) -> ValidationReport:
    """Check constants and closure under binary joins and pairwise meets."""
    _shape_check(topo)
    issues: list[str] = []
    bottom = SVSet.constant(topo.universe, unparameterized(), topo.scale, topo.scale.bottom)
    top = SVSet.constant(topo.universe, unparameterized(), topo.scale, topo.scale.top)
    if bottom not in topo:
        issues.append("missing constant-bottom map")
    if top not in topo:
        issues.append("missing constant-top map")
    for i, a in enumerate(topo.opens):
        for b in topo.opens[i:]:
            j = sv_union(a, b)
            if j not in topo:
                issues.append(f"join of {a!r} and {b!r} missing")
            m = sv_intersection(a, b)
            if m not in topo:
                issues.append(f"meet of {a!r} and {b!r} missing")
    return ValidationReport(not issues, tuple(issues))


def generate_sv_topology(
    universe: Universe,
    scale: Scale,
    generators: Sequence[SVSet],
    cap: int = DEFAULT_CLOSURE_CAP,
) -> SVTopology:
    """Least SV-topology containing the generators; fixpoint closure with a size cap."""
    bottom = SVSet.constant(universe, unparameterized(), scale, scale.bottom)
    top = SVSet.constant(universe, unparameterized(), scale, scale.top)
    opens: list[SVSet] = [bottom, top]
    for g in generators:
        if not g.is_unparameterized:
            raise ShapeMismatchError("generators must be unparameterized")
        if g.universe.elements != universe.elements or g.scale != scale:
            raise ShapeMismatchError("generator does not match the universe/scale")
        if g not in opens:
            opens.append(g)

    changed = True
    while changed:
        changed = False
        snapshot = list(opens)
        for a, b in itertools.combinations(snapshot, 2):
            for c in (sv_union(a, b), sv_intersection(a, b)):
                if c not in opens:
                    opens.append(c)
                    changed = True
                    if len(opens) > cap:
                        raise ClosureSizeExceededError(
                            f"closure exceeded the cap of {cap} opens"
                        )
    return SVTopology(scale, universe, tuple(opens))


def intersect_sv_topologies(t1: SVTopology, t2: SVTopology) -> SVTopology:
    if t1.universe.elements != t2.universe.elements or t1.scale != t2.scale:
        raise ShapeMismatchError("topologies live over different universes or scales")
    common = tuple(o for o in t1.opens if o in t2)
    return SVTopology(t1.scale, t1.universe, common)


def cut_topology(topo: SVTopology, alpha: Value) -> CrispTopology:
    """Strong cuts of every open; chain scales only (fails off chains)."""
    if not topo.scale.is_chain:
        raise NotAChainError(
            "cut topologies require a chain scale: strong cuts need not be closed "
            "under intersection otherwise (the diamond lattice witnesses this)"
        )
    topo.scale.check(alpha)
    if alpha == topo.scale.top:
        raise AlphaIsTopError("cut topology needs alpha strictly below top")
    cuts = frozenset(strong_cut(a, alpha) for a in topo.opens)
    crisp = CrispTopology(topo.universe, cuts)
    problems = crisp.violations()
    if problems:
        # Thm guarantees this cannot happen for a valid chain-scale SV-topology
        raise InvalidFamilyError("cut family is not a topology: " + "; ".join(problems))
    return crisp


# ---------------------------------------------------------------------------
# the diamond counterexample


@dataclass(frozen=True)
class CounterexampleReport:
    scale: Scale
    a: SVSet
    b: SVSet
    alpha: Value
    cut_intersection: frozenset
    meet_cut: frozenset

    @property
    def demonstrates_failure(self) -> bool:
        return self.cut_intersection != self.meet_cut

    def summary(self) -> str:
        lines = [
            "diamond-scale cut counterexample (U = {x}, A(x)=p, B(x)=q, alpha=0):",
            f"  A^>0 ∩ B^>0 = {sorted(self.cut_intersection)}",
            f"  (A∧B)(x) = {self.scale.format_value(self.a.scale.meet(self.a('x'), self.b('x')))}",
            f"  (A∧B)^>0 = {sorted(self.meet_cut)}",
            "  strong cuts are not closed under intersection off chains,",
            "  so cut topologies are only built over chain scales.",
        ]
        return "\n".join(lines)


def m3_cut_counterexample() -> CounterexampleReport:
    """Single-point universe over the diamond: cuts of meets lose the point."""
    scale = m3_scale()
    u = Universe("U", ("x",))
    a = SVSet.unparameterized_from(u, scale, {"x": "p"})
    b = SVSet.unparameterized_from(u, scale, {"x": "q"})
    alpha = scale.bottom
    cut_intersection = strong_cut(a, alpha) & strong_cut(b, alpha)
    meet_cut = strong_cut(sv_intersection(a, b), alpha)
    return CounterexampleReport(scale, a, b, alpha, cut_intersection, meet_cut)


# ---------------------------------------------------------------------------
# SV-continuity


@dataclass(frozen=True)
class ContinuityReport:
    continuous: bool
    failing_open: SVSet | None = None

    def summary(self) -> str:
        if self.continuous:
            return "continuous"
        return f"not continuous: pullback of {self.failing_open!r} is not open"


def pullback_along(f: Mapping[str, str], b: SVSet, universe: Universe) -> SVSet:
    """B composed with f, as an unparameterized SV-set over the source universe."""
    star = {"*": "*"}
    return pullback(f, star, b, universe, unparameterized())


def check_sv_continuity(
    f: Mapping[str, str], tau_u: SVTopology, tau_v: SVTopology
) -> ContinuityReport:
    """f is SV-continuous when every open of the target pulls back to an open."""
    if tau_u.scale != tau_v.scale:
        raise ScaleMismatchError("source and target topologies must share a scale")
    for b in tau_v.opens:
        if pullback_along(f, b, tau_u.universe) not in tau_u:
            return ContinuityReport(False, b)
    return ContinuityReport(True)


# ---------------------------------------------------------------------------
# parameterized families


def slice_topology(
    universe: Universe, scale: Scale, family: Sequence[SVSet], e: str
) -> SVTopology:
    """Slice a parameterized family at one parameter; the result must validate."""
    if not family:
        raise InvalidFamilyError("empty parameterized family")
    if e not in family[0].params:
        raise UnknownParamError(f"unknown parameter {e!r}")
    sliced = SVTopology(scale, universe, tuple(sv_slice(a, e) for a in family))
    report = validate_sv_topology(sliced)
    if not report.ok:
        raise InvalidFamilyError(
            "slice is not an SV-topology (the family itself violates the axioms): "
            + "; ".join(report.issues)
        )
    return sliced
