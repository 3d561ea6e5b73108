"""Membership scales: bounded lattices with an antitone involution.

A scale packages a carrier, join/meet, bottom/top, and a De Morgan negation.
Built-ins cover the usual membership carriers (boolean, finite chain, exact
unit rationals, grade/non-grade pairs, the three-valued rough chain, the
four-element diamond, products, interval lattices, and finite function grids)
plus custom finite lattices given by cover pairs.  Every operation checks its
arguments against the carrier; values are plain immutable Python objects.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping

from .errors import (
    BadDocumentError,
    BadGridError,
    BadInvolutionError,
    BoundsMismatchError,
    DeMorganViolationError,
    ElementNotInCarrier,
    InfiniteCarrierError,
    NotALatticeError,
    ScaleMismatchError,
)
from .rationals import format_rational, parse_rational, split_top_level

Value = Any

# denominators used when sampling random unit rationals
_SAMPLE_DENOMS = (2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 20, 100)


def _sample_unit_rational(rng: random.Random) -> Fraction:
    d = rng.choice(_SAMPLE_DENOMS)
    return Fraction(rng.randint(0, d), d)


class Scale:
    """Base class; subclasses implement _join/_meet/_neg plus carrier access."""

    kind: str = "abstract"
    is_finite: bool = False
    is_chain: bool = False

    # -- subclass API -----------------------------------------------------
    def _join(self, a: Value, b: Value) -> Value:
        raise NotImplementedError

    def _meet(self, a: Value, b: Value) -> Value:
        raise NotImplementedError

    def _neg(self, a: Value) -> Value:
        raise NotImplementedError

    @property
    def bottom(self) -> Value:
        raise NotImplementedError

    @property
    def top(self) -> Value:
        raise NotImplementedError

    def contains(self, a: Value) -> bool:
        raise NotImplementedError

    def carrier(self) -> list[Value]:
        raise InfiniteCarrierError(f"scale {self.kind!r} has an infinite carrier")

    def sample(self, rng: random.Random) -> Value:
        raise NotImplementedError

    def descriptor(self) -> tuple:
        raise NotImplementedError

    def format_value(self, a: Value) -> str:
        raise NotImplementedError

    def parse_value(self, text: str) -> Value:
        raise NotImplementedError

    # -- shared behaviour -------------------------------------------------
    def check(self, a: Value) -> Value:
        if not self.contains(a):
            raise ElementNotInCarrier(f"{a!r} is not in the {self.kind} carrier")
        return a

    def join(self, a: Value, b: Value) -> Value:
        self.check(a)
        self.check(b)
        return self._join(a, b)

    def meet(self, a: Value, b: Value) -> Value:
        self.check(a)
        self.check(b)
        return self._meet(a, b)

    def neg(self, a: Value) -> Value:
        self.check(a)
        return self._neg(a)

    def leq(self, a: Value, b: Value) -> bool:
        return self.meet(a, b) == a

    def lt(self, a: Value, b: Value) -> bool:
        """Strictly below in the lattice order (works off chains too)."""
        return a != b and self.leq(a, b)

    def to_json(self) -> dict:
        raise NotImplementedError

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Scale) and self.descriptor() == other.descriptor()

    def __hash__(self) -> int:
        return hash(self.descriptor())

    def __repr__(self) -> str:
        return f"<Scale {self.kind}>"


class BoolScale(Scale):
    kind = "bool"
    is_finite = True
    is_chain = True

    @property
    def bottom(self) -> bool:
        return False

    @property
    def top(self) -> bool:
        return True

    def contains(self, a: Value) -> bool:
        return isinstance(a, bool)

    def _join(self, a, b):
        return a or b

    def _meet(self, a, b):
        return a and b

    def _neg(self, a):
        return not a

    def carrier(self):
        return [False, True]

    def sample(self, rng):
        return rng.random() < 0.5

    def descriptor(self):
        return ("bool",)

    def format_value(self, a):
        return "1" if a else "0"

    def parse_value(self, text):
        t = text.strip().lower()
        if t in ("1", "true"):
            return True
        if t in ("0", "false"):
            return False
        raise BadDocumentError(f"cannot parse boolean value {text!r}")

    def to_json(self):
        return {"kind": "bool"}


class ChainScale(Scale):
    """Finite chain 0 < 1 < ... < k with negation n -> k - n."""

    kind = "chain"
    is_finite = True
    is_chain = True

    def __init__(self, k: int):
        if k < 1:
            raise BadDocumentError(f"chain bound must be >= 1, got {k}")
        self.k = k

    @property
    def bottom(self):
        return 0

    @property
    def top(self):
        return self.k

    def contains(self, a):
        return isinstance(a, int) and not isinstance(a, bool) and 0 <= a <= self.k

    def _join(self, a, b):
        return max(a, b)

    def _meet(self, a, b):
        return min(a, b)

    def _neg(self, a):
        return self.k - a

    def carrier(self):
        return list(range(self.k + 1))

    def sample(self, rng):
        return rng.randint(0, self.k)

    def descriptor(self):
        return ("chain", self.k)

    def format_value(self, a):
        return str(a)

    def parse_value(self, text):
        try:
            n = int(text.strip())
        except ValueError as exc:
            raise BadDocumentError(f"cannot parse chain value {text!r}") from exc
        if not 0 <= n <= self.k:
            raise ElementNotInCarrier(f"{n} outside chain(0..{self.k})")
        return n

    def to_json(self):
        return {"kind": "chain", "k": self.k}


class UnitRationalScale(Scale):
    """Exact rationals in [0, 1] with max/min and t -> 1 - t.

    Not complete: suprema of infinite families may be missed, but nothing in
    this package ever takes an infinite join.
    """

    kind = "unit-rational"
    is_finite = False
    is_chain = True

    @property
    def bottom(self):
        return Fraction(0)

    @property
    def top(self):
        return Fraction(1)

    def contains(self, a):
        return isinstance(a, (int, Fraction)) and not isinstance(a, bool) and 0 <= a <= 1

    def _join(self, a, b):
        return max(Fraction(a), Fraction(b))

    def _meet(self, a, b):
        return min(Fraction(a), Fraction(b))

    def _neg(self, a):
        return 1 - Fraction(a)

    def sample(self, rng):
        return _sample_unit_rational(rng)

    def descriptor(self):
        return ("unit-rational",)

    def format_value(self, a):
        return format_rational(Fraction(a))

    def parse_value(self, text):
        q = parse_rational(text)
        if not 0 <= q <= 1:
            raise ElementNotInCarrier(f"{text!r} outside [0, 1]")
        return q

    def to_json(self):
        return {"kind": "unit-rational"}


class IFSDeltaScale(Scale):
    """Pairs (a, b) with a + b <= 1; order (a,b) <= (c,d) iff a<=c and b>=d."""

    kind = "ifs-delta"
    is_finite = False
    is_chain = False

    @property
    def bottom(self):
        return (Fraction(0), Fraction(1))

    @property
    def top(self):
        return (Fraction(1), Fraction(0))

    def contains(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == 2
            and all(isinstance(t, (int, Fraction)) and not isinstance(t, bool) for t in a)
            and 0 <= a[0] <= 1
            and 0 <= a[1] <= 1
            and a[0] + a[1] <= 1
        )

    def _join(self, a, b):
        return (max(a[0], b[0]), min(a[1], b[1]))

    def _meet(self, a, b):
        return (min(a[0], b[0]), max(a[1], b[1]))

    def _neg(self, a):
        return (a[1], a[0])

    def sample(self, rng):
        mu = _sample_unit_rational(rng)
        d = rng.choice(_SAMPLE_DENOMS)
        cap = 1 - mu
        nu = Fraction(rng.randint(0, d), d) * cap
        return (mu, nu)

    def descriptor(self):
        return ("ifs-delta",)

    def format_value(self, a):
        return f"({format_rational(a[0])},{format_rational(a[1])})"

    def parse_value(self, text):
        t = text.strip()
        if not (t.startswith("(") and t.endswith(")")):
            raise BadDocumentError(f"cannot parse pair value {text!r}")
        parts = split_top_level(t[1:-1])
        if len(parts) != 2:
            raise BadDocumentError(f"cannot parse pair value {text!r}")
        mu, nu = (parse_rational(p) for p in parts)
        pair = (mu, nu)
        self.check(pair)
        return pair

    def to_json(self):
        return {"kind": "ifs-delta"}


_ROUGH_ORDER = ((0, 0), (0, 1), (1, 1))
_ROUGH_NEG = {(0, 0): (1, 1), (0, 1): (0, 1), (1, 1): (0, 0)}


class RoughChainScale(Scale):
    """Three-valued chain (0,0) < (0,1) < (1,1): outside / boundary / inside."""

    kind = "rough-chain"
    is_finite = True
    is_chain = True

    @property
    def bottom(self):
        return (0, 0)

    @property
    def top(self):
        return (1, 1)

    def contains(self, a):
        return a in _ROUGH_ORDER

    def _join(self, a, b):
        return _ROUGH_ORDER[max(_ROUGH_ORDER.index(a), _ROUGH_ORDER.index(b))]

    def _meet(self, a, b):
        return _ROUGH_ORDER[min(_ROUGH_ORDER.index(a), _ROUGH_ORDER.index(b))]

    def _neg(self, a):
        return _ROUGH_NEG[a]

    def carrier(self):
        return list(_ROUGH_ORDER)

    def sample(self, rng):
        return rng.choice(_ROUGH_ORDER)

    def descriptor(self):
        return ("rough-chain",)

    def format_value(self, a):
        return f"({a[0]},{a[1]})"

    def parse_value(self, text):
        t = text.strip().replace(" ", "")
        table = {"(0,0)": (0, 0), "(0,1)": (0, 1), "(1,1)": (1, 1)}
        if t not in table:
            raise BadDocumentError(f"cannot parse rough-chain value {text!r}")
        return table[t]

    def to_json(self):
        return {"kind": "rough-chain"}


class ProductScale(Scale):
    """Componentwise structure on pairs from two component scales."""

    kind = "product"

    def __init__(self, left: Scale, right: Scale):
        self.left = left
        self.right = right
        self.is_finite = left.is_finite and right.is_finite
        self.is_chain = False

    @property
    def bottom(self):
        return (self.left.bottom, self.right.bottom)

    @property
    def top(self):
        return (self.left.top, self.right.top)

    def contains(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == 2
            and self.left.contains(a[0])
            and self.right.contains(a[1])
        )

    def _join(self, a, b):
        return (self.left.join(a[0], b[0]), self.right.join(a[1], b[1]))

    def _meet(self, a, b):
        return (self.left.meet(a[0], b[0]), self.right.meet(a[1], b[1]))

    def _neg(self, a):
        return (self.left.neg(a[0]), self.right.neg(a[1]))

    def carrier(self):
        return [(x, y) for x in self.left.carrier() for y in self.right.carrier()]

    def sample(self, rng):
        return (self.left.sample(rng), self.right.sample(rng))

    def descriptor(self):
        return ("product", self.left.descriptor(), self.right.descriptor())

    def format_value(self, a):
        return f"({self.left.format_value(a[0])},{self.right.format_value(a[1])})"

    def parse_value(self, text):
        t = text.strip()
        if not (t.startswith("(") and t.endswith(")")):
            raise BadDocumentError(f"cannot parse product value {text!r}")
        parts = split_top_level(t[1:-1])
        if len(parts) != 2:
            raise BadDocumentError(f"cannot parse product value {text!r}")
        return (self.left.parse_value(parts[0]), self.right.parse_value(parts[1]))

    def to_json(self):
        return {"kind": "product", "left": self.left.to_json(), "right": self.right.to_json()}


class IntervalScale(Scale):
    """Closed intervals [l, u] of a base scale, ordered endpointwise."""

    kind = "interval"

    def __init__(self, base: Scale):
        self.base = base
        self.is_finite = base.is_finite
        self.is_chain = False

    @property
    def bottom(self):
        return (self.base.bottom, self.base.bottom)

    @property
    def top(self):
        return (self.base.top, self.base.top)

    def contains(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == 2
            and self.base.contains(a[0])
            and self.base.contains(a[1])
            and self.base.leq(a[0], a[1])
        )

    def _join(self, a, b):
        return (self.base.join(a[0], b[0]), self.base.join(a[1], b[1]))

    def _meet(self, a, b):
        return (self.base.meet(a[0], b[0]), self.base.meet(a[1], b[1]))

    def _neg(self, a):
        return (self.base.neg(a[1]), self.base.neg(a[0]))

    def carrier(self):
        elems = self.base.carrier()
        return [(l, u) for l in elems for u in elems if self.base.leq(l, u)]

    def sample(self, rng):
        a = self.base.sample(rng)
        b = self.base.sample(rng)
        return (self.base.meet(a, b), self.base.join(a, b))

    def descriptor(self):
        return ("interval", self.base.descriptor())

    def format_value(self, a):
        return f"[{self.base.format_value(a[0])},{self.base.format_value(a[1])}]"

    def parse_value(self, text):
        t = text.strip()
        if not (t.startswith("[") and t.endswith("]")):
            raise BadDocumentError(f"cannot parse interval value {text!r}")
        parts = split_top_level(t[1:-1])
        if len(parts) != 2:
            raise BadDocumentError(f"cannot parse interval value {text!r}")
        pair = (self.base.parse_value(parts[0]), self.base.parse_value(parts[1]))
        self.check(pair)
        return pair

    def to_json(self):
        return {"kind": "interval", "base": self.base.to_json()}


class FunctionGridScale(Scale):
    """Unit-rational-valued functions on a finite grid, ordered pointwise."""

    kind = "function-grid"
    is_finite = False
    is_chain = False

    def __init__(self, grid: Iterable):
        pts = tuple(parse_rational(g) for g in grid)
        if not pts:
            raise BadGridError("grid must be nonempty")
        if any(not 0 <= g <= 1 for g in pts):
            raise BadGridError(f"grid points must lie in [0, 1]: {pts}")
        if any(a >= b for a, b in zip(pts, pts[1:])):
            raise BadGridError(f"grid must be strictly increasing: {pts}")
        self.grid = pts

    @property
    def bottom(self):
        return tuple(Fraction(0) for _ in self.grid)

    @property
    def top(self):
        return tuple(Fraction(1) for _ in self.grid)

    def contains(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == len(self.grid)
            and all(
                isinstance(t, (int, Fraction)) and not isinstance(t, bool) and 0 <= t <= 1
                for t in a
            )
        )

    def _join(self, a, b):
        return tuple(max(Fraction(x), Fraction(y)) for x, y in zip(a, b))

    def _meet(self, a, b):
        return tuple(min(Fraction(x), Fraction(y)) for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(1 - Fraction(x) for x in a)

    def sample(self, rng):
        return tuple(_sample_unit_rational(rng) for _ in self.grid)

    def descriptor(self):
        return ("function-grid", self.grid)

    def format_value(self, a):
        return "(" + ",".join(format_rational(Fraction(x)) for x in a) + ")"

    def parse_value(self, text):
        t = text.strip()
        if not (t.startswith("(") and t.endswith(")")):
            raise BadDocumentError(f"cannot parse function-grid value {text!r}")
        parts = split_top_level(t[1:-1])
        if len(parts) != len(self.grid):
            raise BadDocumentError(
                f"expected {len(self.grid)} grid values, got {len(parts)} in {text!r}"
            )
        value = tuple(parse_rational(p) for p in parts)
        self.check(value)
        return value

    def to_json(self):
        return {"kind": "function-grid", "grid": [format_rational(g) for g in self.grid]}


# ---------------------------------------------------------------------------
# custom finite lattices from cover pairs


@dataclass(frozen=True)
class FiniteLatticeSpec:
    """Presentation of a finite lattice: named elements, cover pairs, negation."""

    elements: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]
    neg: Mapping[str, str]
    bottom: str
    top: str


class FiniteScale(Scale):
    """Finite lattice with precomputed join/meet tables.  Build via build_finite_scale."""

    kind = "custom"
    is_finite = True

    def __init__(self, spec: FiniteLatticeSpec, leq, join_table, meet_table):
        self.spec = spec
        self._leq_set = leq
        self._join_table = join_table
        self._meet_table = meet_table
        self._neg_table = dict(spec.neg)
        elems = spec.elements
        self.is_chain = all(
            (a, b) in leq or (b, a) in leq for a, b in itertools.combinations(elems, 2)
        )

    @property
    def bottom(self):
        return self.spec.bottom

    @property
    def top(self):
        return self.spec.top

    def contains(self, a):
        return a in self._neg_table

    def _join(self, a, b):
        return self._join_table[(a, b)]

    def _meet(self, a, b):
        return self._meet_table[(a, b)]

    def _neg(self, a):
        return self._neg_table[a]

    def leq(self, a, b):
        self.check(a)
        self.check(b)
        return (a, b) in self._leq_set

    def carrier(self):
        return list(self.spec.elements)

    def sample(self, rng):
        return rng.choice(self.spec.elements)

    def descriptor(self):
        return (
            "custom",
            self.spec.elements,
            tuple(sorted(self.spec.covers)),
            tuple(sorted(self._neg_table.items())),
            self.spec.bottom,
            self.spec.top,
        )

    def format_value(self, a):
        return a

    def parse_value(self, text):
        name = text.strip()
        self.check(name)
        return name

    def to_json(self):
        return {
            "kind": "custom",
            "elements": list(self.spec.elements),
            "covers": [list(c) for c in self.spec.covers],
            "neg": dict(self._neg_table),
            "bottom": self.spec.bottom,
            "top": self.spec.top,
        }


def build_finite_scale(spec: FiniteLatticeSpec) -> FiniteScale:
    """Build and fully validate a finite scale from a cover presentation.

    Raises NotALatticeError / BadInvolutionError / DeMorganViolationError /
    BoundsMismatchError when the presentation fails the corresponding law.
    """
    elems = spec.elements
    if len(set(elems)) != len(elems):
        raise BadDocumentError("element names must be unique")
    for lo, hi in spec.covers:
        if lo not in elems or hi not in elems:
            raise BadDocumentError(f"cover ({lo!r}, {hi!r}) references unknown element")
    if spec.bottom not in elems or spec.top not in elems:
        raise BadDocumentError("bottom/top must be declared elements")

    # reflexive-transitive closure of the cover relation
    succ = {e: set() for e in elems}
    for lo, hi in spec.covers:
        succ[lo].add(hi)
    leq = set()
    for e in elems:
        seen = {e}
        frontier = [e]
        while frontier:
            x = frontier.pop()
            for y in succ[x]:
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        leq.update((e, s) for s in seen)
    for a, b in itertools.combinations(elems, 2):
        if (a, b) in leq and (b, a) in leq:
            raise NotALatticeError(f"cover relation has a cycle through {a!r} and {b!r}")

    if any((spec.bottom, e) not in leq for e in elems):
        raise BoundsMismatchError(f"{spec.bottom!r} is not below every element")
    if any((e, spec.top) not in leq for e in elems):
        raise BoundsMismatchError(f"{spec.top!r} is not above every element")

    def extremum(a: str, b: str, upper: bool) -> str:
        if upper:
            bounds = [c for c in elems if (a, c) in leq and (b, c) in leq]
            least = [c for c in bounds if all((c, d) in leq for d in bounds)]
        else:
            bounds = [c for c in elems if (c, a) in leq and (c, b) in leq]
            least = [c for c in bounds if all((d, c) in leq for d in bounds)]
        if len(least) != 1:
            word = "upper" if upper else "lower"
            raise NotALatticeError(f"pair ({a!r}, {b!r}) lacks a unique least {word} bound")
        return least[0]

    join_table = {}
    meet_table = {}
    for a in elems:
        for b in elems:
            join_table[(a, b)] = extremum(a, b, upper=True)
            meet_table[(a, b)] = extremum(a, b, upper=False)

    neg = dict(spec.neg)
    if set(neg) != set(elems):
        raise BadInvolutionError("neg must be total on the elements")
    for a in elems:
        if neg[a] not in elems:
            raise BadInvolutionError(f"neg({a!r}) = {neg[a]!r} is not an element")
        if neg[neg[a]] != a:
            raise BadInvolutionError(f"neg is not involutive at {a!r}")
    for a, b in itertools.product(elems, repeat=2):
        if (a, b) in leq and (neg[b], neg[a]) not in leq:
            raise BadInvolutionError(f"neg is not antitone on ({a!r}, {b!r})")
    for a, b in itertools.product(elems, repeat=2):
        if neg[join_table[(a, b)]] != meet_table[(neg[a], neg[b])]:
            raise DeMorganViolationError(f"neg(a∨b) != neg(a)∧neg(b) at ({a!r}, {b!r})")
        if neg[meet_table[(a, b)]] != join_table[(neg[a], neg[b])]:
            raise DeMorganViolationError(f"neg(a∧b) != neg(a)∨neg(b) at ({a!r}, {b!r})")

    return FiniteScale(spec, leq, join_table, meet_table)


def m3_scale(negation: str = "swap") -> FiniteScale:
    """Four-element diamond 0 < p, q < 1 with p, q incomparable.

    Two antitone involutions exist; ``negation`` selects "swap" (p <-> q,
    the default) or "fix" (p and q fixed).
    """
    if negation == "swap":
        neg = {"0": "1", "1": "0", "p": "q", "q": "p"}
    elif negation == "fix":
        neg = {"0": "1", "1": "0", "p": "p", "q": "q"}
    else:
        raise BadDocumentError(f"unknown m3 negation variant {negation!r}")
    spec = FiniteLatticeSpec(
        elements=("0", "p", "q", "1"),
        covers=(("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")),
        neg=neg,
        bottom="0",
        top="1",
    )
    scale = build_finite_scale(spec)
    scale._m3_negation = negation
    return scale


# constructor aliases matching the operation names used elsewhere
def product_scale(left: Scale, right: Scale) -> ProductScale:
    return ProductScale(left, right)


def interval_scale(base: Scale) -> IntervalScale:
    return IntervalScale(base)


def function_scale(grid: Iterable) -> FunctionGridScale:
    return FunctionGridScale(grid)


# ---------------------------------------------------------------------------
# law verification


@dataclass(frozen=True)
class LawCheck:
    name: str
    ok: bool
    witness: tuple[str, ...] | None = None


@dataclass(frozen=True)
class LawReport:
    checks: tuple[LawCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[LawCheck]:
        return [c for c in self.checks if not c.ok]

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            status = "pass" if c.ok else "FAIL"
            extra = f"  witness: {', '.join(c.witness)}" if c.witness else ""
            lines.append(f"{status}  {c.name}{extra}")
        return "\n".join(lines)


def _law_triples(scale: Scale, exhaustive: bool, samples: int, seed: int):
    if exhaustive:
        elems = scale.carrier()
        pairs = list(itertools.product(elems, repeat=2))
        triples = list(itertools.product(elems, repeat=3))
        singles = list(elems)
    else:
        rng = random.Random(seed)
        singles = [scale.sample(rng) for _ in range(samples)]
        pairs = [(scale.sample(rng), scale.sample(rng)) for _ in range(samples)]
        triples = [
            (scale.sample(rng), scale.sample(rng), scale.sample(rng)) for _ in range(samples)
        ]
    return singles, pairs, triples


def verify_scale_laws(
    scale: Scale, *, exhaustive: bool = False, samples: int = 1000, seed: int = 0
) -> LawReport:
    """Check the bounded-De-Morgan-lattice laws on a scale.

    Exhaustive mode enumerates the carrier (finite scales only); random mode
    draws seeded samples.  The report lists one entry per law with a witness
    on failure.
    """
    singles, pairs, triples = _law_triples(scale, exhaustive, samples, seed)
    fmt = scale.format_value
    checks: list[LawCheck] = []

    def run(name: str, items, predicate, describe):
        for item in items:
            if not predicate(item):
                checks.append(LawCheck(name, False, describe(item)))
                return
        checks.append(LawCheck(name, True))

    run(
        "join-idempotent",
        singles,
        lambda a: scale.join(a, a) == a,
        lambda a: (fmt(a),),
    )
    run(
        "meet-idempotent",
        singles,
        lambda a: scale.meet(a, a) == a,
        lambda a: (fmt(a),),
    )
    run(
        "join-commutative",
        pairs,
        lambda p: scale.join(p[0], p[1]) == scale.join(p[1], p[0]),
        lambda p: (fmt(p[0]), fmt(p[1])),
    )
    run(
        "meet-commutative",
        pairs,
        lambda p: scale.meet(p[0], p[1]) == scale.meet(p[1], p[0]),
        lambda p: (fmt(p[0]), fmt(p[1])),
    )
    run(
        "join-associative",
        triples,
        lambda t: scale.join(scale.join(t[0], t[1]), t[2])
        == scale.join(t[0], scale.join(t[1], t[2])),
        lambda t: tuple(fmt(x) for x in t),
    )
    run(
        "meet-associative",
        triples,
        lambda t: scale.meet(scale.meet(t[0], t[1]), t[2])
        == scale.meet(t[0], scale.meet(t[1], t[2])),
        lambda t: tuple(fmt(x) for x in t),
    )
    run(
        "absorption",
        pairs,
        lambda p: scale.join(p[0], scale.meet(p[0], p[1])) == p[0]
        and scale.meet(p[0], scale.join(p[0], p[1])) == p[0],
        lambda p: (fmt(p[0]), fmt(p[1])),
    )
    run(
        "bounds",
        singles,
        lambda a: scale.leq(scale.bottom, a) and scale.leq(a, scale.top),
        lambda a: (fmt(a),),
    )
    run(
        "involution",
        singles,
        lambda a: scale.neg(scale.neg(a)) == a,
        lambda a: (fmt(a),),
    )
    run(
        "neg-antitone",
        pairs,
        lambda p: not scale.leq(p[0], p[1]) or scale.leq(scale.neg(p[1]), scale.neg(p[0])),
        lambda p: (fmt(p[0]), fmt(p[1])),
    )
    run(
        "de-morgan-join",
        pairs,
        lambda p: scale.neg(scale.join(p[0], p[1]))
        == scale.meet(scale.neg(p[0]), scale.neg(p[1])),
        lambda p: (fmt(p[0]), fmt(p[1])),
    )
    run(
        "de-morgan-meet",
        pairs,
        lambda p: scale.neg(scale.meet(p[0], p[1]))
        == scale.join(scale.neg(p[0]), scale.neg(p[1])),
        lambda p: (fmt(p[0]), fmt(p[1])),
    )
    run(
        "order-consistency",
        pairs,
        lambda p: scale.leq(p[0], p[1])
        == (scale.join(p[0], p[1]) == p[1])
        == (scale.meet(p[0], p[1]) == p[0]),
        lambda p: (fmt(p[0]), fmt(p[1])),
    )
    run(
        "neg-swaps-bounds",
        [None],
        lambda _: scale.neg(scale.bottom) == scale.top and scale.neg(scale.top) == scale.bottom,
        lambda _: (),
    )
    return LawReport(tuple(checks))


# ---------------------------------------------------------------------------
# scale homomorphisms


@dataclass(frozen=True)
class ScaleHom:
    """Map between scales; mapping is an explicit table or a callable."""

    source: Scale
    target: Scale
    mapping: Mapping | Callable[[Value], Value]

    def apply(self, a: Value) -> Value:
        self.source.check(a)
        if callable(self.mapping):
            value = self.mapping(a)
        else:
            try:
                value = self.mapping[a]
            except KeyError as exc:
                raise ScaleMismatchError(f"hom mapping undefined at {a!r}") from exc
        return self.target.check(value)


def identity_hom(scale: Scale) -> ScaleHom:
    return ScaleHom(scale, scale, lambda a: a)


def verify_scale_hom(
    hom: ScaleHom, *, exhaustive: bool = False, samples: int = 1000, seed: int = 0
) -> LawReport:
    """Check that a hom preserves join, meet, neg, bottom, and top."""
    singles, pairs, _ = _law_triples(hom.source, exhaustive, samples, seed)
    fmt = hom.source.format_value
    checks: list[LawCheck] = []

    def run(name, items, predicate, describe):
        for item in items:
            if not predicate(item):
                checks.append(LawCheck(name, False, describe(item)))
                return
        checks.append(LawCheck(name, True))

    run(
        "preserves-join",
        pairs,
        lambda p: hom.apply(hom.source.join(p[0], p[1]))
        == hom.target.join(hom.apply(p[0]), hom.apply(p[1])),
        lambda p: (fmt(p[0]), fmt(p[1])),
    )
    run(
        "preserves-meet",
        pairs,
        lambda p: hom.apply(hom.source.meet(p[0], p[1]))
        == hom.target.meet(hom.apply(p[0]), hom.apply(p[1])),
        lambda p: (fmt(p[0]), fmt(p[1])),
    )
    run(
        "preserves-neg",
        singles,
        lambda a: hom.apply(hom.source.neg(a)) == hom.target.neg(hom.apply(a)),
        lambda a: (fmt(a),),
    )
    run(
        "preserves-bottom",
        [None],
        lambda _: hom.apply(hom.source.bottom) == hom.target.bottom,
        lambda _: (),
    )
    run(
        "preserves-top",
        [None],
        lambda _: hom.apply(hom.source.top) == hom.target.top,
        lambda _: (),
    )
    return LawReport(tuple(checks))


# ---------------------------------------------------------------------------
# JSON descriptors


def scale_from_json(doc: Mapping) -> Scale:
    """Build a scale from its JSON descriptor (see README for the grammar)."""
    if not isinstance(doc, Mapping) or "kind" not in doc:
        raise BadDocumentError(f"scale descriptor needs a 'kind' field: {doc!r}")
    kind = doc["kind"]
    if kind == "bool":
        return BoolScale()
    if kind == "chain":
        if "k" not in doc:
            raise BadDocumentError("chain descriptor needs 'k'")
        return ChainScale(int(doc["k"]))
    if kind == "unit-rational":
        return UnitRationalScale()
    if kind == "ifs-delta":
        return IFSDeltaScale()
    if kind == "rough-chain":
        return RoughChainScale()
    if kind == "m3-diamond":
        return m3_scale(doc.get("negation", "swap"))
    if kind == "product":
        return ProductScale(scale_from_json(doc["left"]), scale_from_json(doc["right"]))
    if kind == "interval":
        return IntervalScale(scale_from_json(doc["base"]))
    if kind == "function-grid":
        return FunctionGridScale(doc["grid"])
    if kind == "custom":
        spec = FiniteLatticeSpec(
            elements=tuple(doc["elements"]),
            covers=tuple((lo, hi) for lo, hi in doc["covers"]),
            neg=dict(doc["neg"]),
            bottom=doc["bottom"],
            top=doc["top"],
        )
        return build_finite_scale(spec)
    raise BadDocumentError(f"unknown scale kind {kind!r}")
