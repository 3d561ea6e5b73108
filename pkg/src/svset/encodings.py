"""Encoders between classical generalized-set models and scale-valued sets.

Each model gets an encode/decode pair that is mutually inverse on valid
inputs, and the encodings carry unions, intersections, and complements (where
the model has one) to the pointwise SV operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import ConstraintViolationError, WrongScaleError
from .scale import (
    BoolScale,
    ChainScale,
    FunctionGridScale,
    IFSDeltaScale,
    RoughChainScale,
    Scale,
    UnitRationalScale,
    interval_scale,
)
from .sets import ParamSet, SVSet, Universe


def _require_scale(a: SVSet, kind: str) -> None:
    if a.scale.kind != kind:
        raise WrongScaleError(f"expected a {kind} SV-set, got {a.scale.kind}")


# ---------------------------------------------------------------------------
# crisp sets


def crisp_to_sv(universe: Universe, subset: frozenset | set) -> SVSet:
    extra = set(subset) - set(universe.elements)
    if extra:
        raise ConstraintViolationError(f"subset members outside universe: {sorted(extra)}")
    return SVSet.unparameterized_from(
        universe, BoolScale(), {x: x in subset for x in universe.elements}
    )


def sv_to_crisp(a: SVSet) -> frozenset:
    _require_scale(a, "bool")
    if not a.is_unparameterized:
        raise WrongScaleError("crisp decode needs an unparameterized SV-set")
    return frozenset(x for x in a.universe.elements if a(x))


# ---------------------------------------------------------------------------
# soft sets


@dataclass(frozen=True)
class SoftSet:
    """Parameterized family of subsets: one subset per parameter."""

    universe: Universe
    params: ParamSet
    assignment: Mapping[str, frozenset]

    def __post_init__(self):
        for e in self.params.params:
            if e not in self.assignment:
                raise ConstraintViolationError(f"soft set undefined at parameter {e!r}")
            extra = set(self.assignment[e]) - set(self.universe.elements)
            if extra:
                raise ConstraintViolationError(
                    f"soft set at {e!r} contains non-universe members {sorted(extra)}"
                )

    def union(self, other: "SoftSet") -> "SoftSet":
        return SoftSet(
            self.universe,
            self.params,
            {e: frozenset(self.assignment[e] | other.assignment[e]) for e in self.params.params},
        )

    def intersection(self, other: "SoftSet") -> "SoftSet":
        return SoftSet(
            self.universe,
            self.params,
            {e: frozenset(self.assignment[e] & other.assignment[e]) for e in self.params.params},
        )

    def complement(self) -> "SoftSet":
        full = set(self.universe.elements)
        return SoftSet(
            self.universe,
            self.params,
            {e: frozenset(full - self.assignment[e]) for e in self.params.params},
        )


def soft_to_sv(f: SoftSet) -> SVSet:
    return SVSet.from_function(
        f.universe, f.params, BoolScale(), lambda x, e: x in f.assignment[e]
    )


def sv_to_soft(a: SVSet) -> SoftSet:
    _require_scale(a, "bool")
    return SoftSet(
        a.universe,
        a.params,
        {
            e: frozenset(x for x in a.universe.elements if a(x, e))
            for e in a.params.params
        },
    )


# ---------------------------------------------------------------------------
# identity-on-values encodings: fuzzy, bounded multiset, L-fuzzy


def fuzzy_to_sv(universe: Universe, mu: Mapping[str, Fraction]) -> SVSet:
    return SVSet.unparameterized_from(
        universe, UnitRationalScale(), {x: Fraction(mu[x]) for x in universe.elements}
    )


def sv_to_fuzzy(a: SVSet) -> dict[str, Fraction]:
    _require_scale(a, "unit-rational")
    return {x: a(x) for x in a.universe.elements}


def multiset_to_sv(universe: Universe, m: Mapping[str, int], k: int) -> SVSet:
    for x in universe.elements:
        if not 0 <= m[x] <= k:
            raise ConstraintViolationError(f"multiplicity m({x!r})={m[x]} outside 0..{k}")
    return SVSet.unparameterized_from(universe, ChainScale(k), dict(m))


def sv_to_multiset(a: SVSet) -> dict[str, int]:
    _require_scale(a, "chain")
    return {x: a(x) for x in a.universe.elements}


def lfuzzy_to_sv(universe: Universe, mu: Mapping[str, object], lattice: Scale) -> SVSet:
    return SVSet.unparameterized_from(universe, lattice, dict(mu))


def sv_to_lfuzzy(a: SVSet) -> dict[str, object]:
    return {x: a(x) for x in a.universe.elements}


# ---------------------------------------------------------------------------
# intuitionistic fuzzy sets


@dataclass(frozen=True)
class IFSPair:
    """Membership/non-membership functions with mu + nu <= 1 pointwise."""

    universe: Universe
    mu: Mapping[str, Fraction]
    nu: Mapping[str, Fraction]

    def __post_init__(self):
        for x in self.universe.elements:
            m, n = Fraction(self.mu[x]), Fraction(self.nu[x])
            if not (0 <= m <= 1 and 0 <= n <= 1 and m + n <= 1):
                raise ConstraintViolationError(
                    f"mu({x!r})+nu({x!r}) = {m}+{n} violates the simplex constraint"
                )


def ifs_to_sv(p: IFSPair) -> SVSet:
    return SVSet.unparameterized_from(
        p.universe,
        IFSDeltaScale(),
        {x: (Fraction(p.mu[x]), Fraction(p.nu[x])) for x in p.universe.elements},
    )


def sv_to_ifs(a: SVSet) -> IFSPair:
    _require_scale(a, "ifs-delta")
    return IFSPair(
        a.universe,
        {x: a(x)[0] for x in a.universe.elements},
        {x: a(x)[1] for x in a.universe.elements},
    )


# ---------------------------------------------------------------------------
# rough pairs


@dataclass(frozen=True)
class RoughPair:
    """Lower/upper approximation pair with lower contained in upper."""

    universe: Universe
    lower: frozenset
    upper: frozenset

    def __post_init__(self):
        if not self.lower <= self.upper:
            raise ConstraintViolationError("lower approximation must be inside the upper one")
        extra = set(self.upper) - set(self.universe.elements)
        if extra:
            raise ConstraintViolationError(f"upper approximation outside universe: {sorted(extra)}")

    def union(self, other: "RoughPair") -> "RoughPair":
        return RoughPair(self.universe, self.lower | other.lower, self.upper | other.upper)

    def intersection(self, other: "RoughPair") -> "RoughPair":
        return RoughPair(self.universe, self.lower & other.lower, self.upper & other.upper)

    def complement(self) -> "RoughPair":
        full = frozenset(self.universe.elements)
        return RoughPair(self.universe, full - self.upper, full - self.lower)


def rough_to_sv(r: RoughPair) -> SVSet:
    def status(x: str) -> tuple[int, int]:
        return (int(x in r.lower), int(x in r.upper))

    return SVSet.unparameterized_from(
        r.universe, RoughChainScale(), {x: status(x) for x in r.universe.elements}
    )


def sv_to_rough(a: SVSet) -> RoughPair:
    _require_scale(a, "rough-chain")
    return RoughPair(
        a.universe,
        frozenset(x for x in a.universe.elements if a(x) == (1, 1)),
        frozenset(x for x in a.universe.elements if a(x) != (0, 0)),
    )


# ---------------------------------------------------------------------------
# Type-2 on a finite grid, and interval Type-2


def type2_to_sv(
    universe: Universe, membership: Mapping[tuple[str, Fraction], Fraction], grid
) -> SVSet:
    """Secondary membership functions sampled on a finite grid."""
    scale = FunctionGridScale(grid)
    return SVSet.unparameterized_from(
        universe,
        scale,
        {
            x: tuple(Fraction(membership[(x, u)]) for u in scale.grid)
            for x in universe.elements
        },
    )


def sv_to_type2(a: SVSet) -> dict[tuple[str, Fraction], Fraction]:
    _require_scale(a, "function-grid")
    grid = a.scale.grid
    return {(x, u): a(x)[i] for x in a.universe.elements for i, u in enumerate(grid)}


def it2_to_sv(
    universe: Universe, lower: Mapping[str, Fraction], upper: Mapping[str, Fraction]
) -> SVSet:
    """Footprint-of-uncertainty encoding: one [lower, upper] interval per element."""
    scale = interval_scale(UnitRationalScale())
    values = {}
    for x in universe.elements:
        lo, hi = Fraction(lower[x]), Fraction(upper[x])
        if lo > hi:
            raise ConstraintViolationError(f"lower({x!r})={lo} exceeds upper({x!r})={hi}")
        values[x] = (lo, hi)
    return SVSet.unparameterized_from(universe, scale, values)


def sv_to_it2(a: SVSet) -> tuple[dict[str, Fraction], dict[str, Fraction]]:
    _require_scale(a, "interval")
    return (
        {x: a(x)[0] for x in a.universe.elements},
        {x: a(x)[1] for x in a.universe.elements},
    )


# ---------------------------------------------------------------------------
# lattice-valued interval soft sets (full domain, function-lattice presentation)


@dataclass(frozen=True)
class LVISS:
    """Interval-valued soft set over a function-lattice presentation.

    Each parameter is assigned an interval of membership functions U -> V,
    stored as its lower and upper endpoint functions.  Only the full parameter
    domain is supported; restricted domains are not representable here.
    """

    universe: Universe
    params: ParamSet
    value_scale: Scale
    lower: Mapping[tuple[str, str], object]
    upper: Mapping[tuple[str, str], object]

    def __post_init__(self):
        for x in self.universe.elements:
            for e in self.params.params:
                lo = self.lower[(x, e)]
                hi = self.upper[(x, e)]
                if not self.value_scale.leq(lo, hi):
                    raise ConstraintViolationError(
                        f"interval endpoints out of order at ({x!r}, {e!r})"
                    )

    def union(self, other: "LVISS") -> "LVISS":
        s = self.value_scale
        keys = list(self.lower)
        return LVISS(
            self.universe,
            self.params,
            s,
            {k: s.join(self.lower[k], other.lower[k]) for k in keys},
            {k: s.join(self.upper[k], other.upper[k]) for k in keys},
        )

    def intersection(self, other: "LVISS") -> "LVISS":
        s = self.value_scale
        keys = list(self.lower)
        return LVISS(
            self.universe,
            self.params,
            s,
            {k: s.meet(self.lower[k], other.lower[k]) for k in keys},
            {k: s.meet(self.upper[k], other.upper[k]) for k in keys},
        )


def lviss_membership_to_sv(f: LVISS) -> SVSet:
    """Evaluate the interval assignment pointwise: values land in the interval scale."""
    scale = interval_scale(f.value_scale)
    return SVSet.from_function(
        f.universe, f.params, scale, lambda x, e: (f.lower[(x, e)], f.upper[(x, e)])
    )


def sv_to_simple_lviss(a: SVSet) -> LVISS:
    """View any SV-set as the simple (degenerate-interval) LVISS it induces."""
    table = {(x, e): a(x, e) for x in a.universe.elements for e in a.params.params}
    return LVISS(a.universe, a.params, a.scale, table, table)
