"""Scale-valued sets: total tables (element, parameter) -> scale value.

Pointwise algebra, slices, and the three transports (value relabeling along a
scale hom, pullback along universe/parameter maps, pushforward along a
universe map).  All objects are immutable; shape mismatches raise rather than
coerce.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from types import MappingProxyType
from typing import Callable, Mapping

from .errors import (
    BadDocumentError,
    NonTotalMapError,
    ScaleMismatchError,
    ShapeMismatchError,
    UnknownParamError,
)
from .scale import Scale, ScaleHom, Value, scale_from_json

STAR = "*"


@dataclass(frozen=True)
class Universe:
    name: str
    elements: tuple[str, ...]

    def __post_init__(self):
        if not self.elements:
            raise BadDocumentError(f"universe {self.name!r} must be nonempty")
        if len(set(self.elements)) != len(self.elements):
            raise BadDocumentError(f"universe {self.name!r} has duplicate labels")

    def __contains__(self, label: str) -> bool:
        return label in self.elements


@dataclass(frozen=True)
class ParamSet:
    name: str
    params: tuple[str, ...]

    def __post_init__(self):
        if not self.params:
            raise BadDocumentError(f"parameter set {self.name!r} must be nonempty")
        if len(set(self.params)) != len(self.params):
            raise BadDocumentError(f"parameter set {self.name!r} has duplicate labels")

    def __contains__(self, label: str) -> bool:
        return label in self.params


def unparameterized() -> ParamSet:
    return ParamSet(STAR, (STAR,))


class SVSet:
    """Total map universe x params -> scale carrier."""

    __slots__ = ("universe", "params", "scale", "_values")

    def __init__(
        self,
        universe: Universe,
        params: ParamSet,
        scale: Scale,
        values: Mapping[tuple[str, str], Value],
    ):
        table: dict[tuple[str, str], Value] = {}
        for x in universe.elements:
            for e in params.params:
                try:
                    v = values[(x, e)]
                except KeyError:
                    raise BadDocumentError(f"missing value for ({x!r}, {e!r})") from None
                table[(x, e)] = scale.check(v)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "_values", MappingProxyType(table))

    def __setattr__(self, name, value):
        raise AttributeError("SVSet is immutable")

    # -- construction helpers --------------------------------------------
    @classmethod
    def from_function(
        cls, universe: Universe, params: ParamSet, scale: Scale, fn: Callable[[str, str], Value]
    ) -> "SVSet":
        return cls(
            universe,
            params,
            scale,
            {(x, e): fn(x, e) for x in universe.elements for e in params.params},
        )

    @classmethod
    def constant(cls, universe: Universe, params: ParamSet, scale: Scale, value: Value) -> "SVSet":
        return cls.from_function(universe, params, scale, lambda x, e: value)

    @classmethod
    def unparameterized_from(
        cls, universe: Universe, scale: Scale, table: Mapping[str, Value]
    ) -> "SVSet":
        return cls.from_function(universe, unparameterized(), scale, lambda x, e: table[x])

    # -- access -----------------------------------------------------------
    def __call__(self, x: str, e: str = STAR) -> Value:
        try:
            return self._values[(x, e)]
        except KeyError:
            raise UnknownParamError(f"({x!r}, {e!r}) outside the table") from None

    def values(self) -> Mapping[tuple[str, str], Value]:
        return self._values

    @property
    def is_unparameterized(self) -> bool:
        return self.params.params == (STAR,)

    def same_shape(self, other: "SVSet") -> bool:
        return (
            self.universe.elements == other.universe.elements
            and self.params.params == other.params.params
            and self.scale == other.scale
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SVSet)
            and self.same_shape(other)
            and all(self._values[k] == other._values[k] for k in self._values)
        )

    def __hash__(self) -> int:
        return hash(
            (
                self.universe.elements,
                self.params.params,
                self.scale,
                tuple(sorted((k, _hashable(v)) for k, v in self._values.items())),
            )
        )

    def __repr__(self) -> str:
        cells = ", ".join(
            f"{x}|{e}={self.scale.format_value(v)}" for (x, e), v in sorted(self._values.items())
        )
        return f"SVSet({cells})"

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "universe": list(self.universe.elements),
            "params": list(self.params.params),
            "scale": self.scale.to_json(),
            "values": {
                f"{x}|{e}": self.scale.format_value(self._values[(x, e)])
                for x in self.universe.elements
                for e in self.params.params
            },
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "SVSet":
        for key in ("universe", "scale", "values"):
            if key not in doc:
                raise BadDocumentError(f"SV-set document missing {key!r}")
        universe = Universe("U", tuple(doc["universe"]))
        params = ParamSet("E", tuple(doc.get("params", [STAR])))
        scale = scale_from_json(doc["scale"])
        values = {}
        for key, raw in doc["values"].items():
            if "|" not in key:
                raise BadDocumentError(f"value key {key!r} must be 'element|param'")
            x, e = key.split("|", 1)
            if x not in universe:
                raise BadDocumentError(f"value key {key!r}: unknown element {x!r}")
            if e not in params:
                raise BadDocumentError(f"value key {key!r}: unknown param {e!r}")
            values[(x, e)] = scale.parse_value(raw)
        return cls(universe, params, scale, values)


def _hashable(v: Value):
    return tuple(v) if isinstance(v, list) else v


def load_svset(path: str) -> SVSet:
    with open(path) as fh:
        return SVSet.from_json(json.load(fh))


# ---------------------------------------------------------------------------
# pointwise algebra


def _require_shape(a: SVSet, b: SVSet) -> None:
    if not a.same_shape(b):
        raise ShapeMismatchError("operands differ in universe, params, or scale")


def sv_union(a: SVSet, b: SVSet) -> SVSet:
    _require_shape(a, b)
    return SVSet.from_function(
        a.universe, a.params, a.scale, lambda x, e: a.scale.join(a(x, e), b(x, e))
    )


def sv_intersection(a: SVSet, b: SVSet) -> SVSet:
    _require_shape(a, b)
    return SVSet.from_function(
        a.universe, a.params, a.scale, lambda x, e: a.scale.meet(a(x, e), b(x, e))
    )


def sv_complement(a: SVSet) -> SVSet:
    return SVSet.from_function(a.universe, a.params, a.scale, lambda x, e: a.scale.neg(a(x, e)))


def sv_subset(a: SVSet, b: SVSet) -> bool:
    _require_shape(a, b)
    return all(
        a.scale.leq(a(x, e), b(x, e)) for x in a.universe.elements for e in a.params.params
    )


def sv_slice(a: SVSet, e: str) -> SVSet:
    if e not in a.params:
        raise UnknownParamError(f"unknown parameter {e!r}")
    return SVSet.from_function(a.universe, unparameterized(), a.scale, lambda x, _: a(x, e))


# ---------------------------------------------------------------------------
# transports


def transport(hom: ScaleHom, a: SVSet) -> SVSet:
    """Relabel values along a scale homomorphism."""
    if a.scale != hom.source:
        raise ScaleMismatchError("SV-set scale does not match the hom source")
    return SVSet.from_function(a.universe, a.params, hom.target, lambda x, e: hom.apply(a(x, e)))


def pullback(
    f: Mapping[str, str],
    g: Mapping[str, str],
    a: SVSet,
    universe: Universe,
    params: ParamSet | None = None,
) -> SVSet:
    """Reindex along f: U' -> U on elements and g: E' -> E on parameters."""
    params = params or unparameterized()
    for x in universe.elements:
        if x not in f:
            raise NonTotalMapError(f"element map leaves {x!r} unmapped")
        if f[x] not in a.universe:
            raise NonTotalMapError(f"element map sends {x!r} outside the target universe")
    for e in params.params:
        if e not in g:
            raise NonTotalMapError(f"parameter map leaves {e!r} unmapped")
        if g[e] not in a.params:
            raise NonTotalMapError(f"parameter map sends {e!r} outside the target params")
    return SVSet.from_function(universe, params, a.scale, lambda x, e: a(f[x], g[e]))


def pushforward(f: Mapping[str, str], a: SVSet, universe: Universe) -> SVSet:
    """Join values over fibers of f: U -> V; empty fibers get bottom.

    All universes here are finite, so the fiber joins always exist regardless
    of scale completeness.
    """
    for x in a.universe.elements:
        if x not in f:
            raise NonTotalMapError(f"element map leaves {x!r} unmapped")
        if f[x] not in universe:
            raise NonTotalMapError(f"element map sends {x!r} outside the target universe")

    def value(v: str, e: str) -> Value:
        acc = a.scale.bottom
        for x in a.universe.elements:
            if f[x] == v:
                acc = a.scale.join(acc, a(x, e))
        return acc

    return SVSet.from_function(universe, a.params, a.scale, value)
