"""Finite groups and SV-subgroups.

Groups are Cayley tables over labeled elements, validated at construction.
SV-subgroup checking, the derived identities, weak level sets, the
level-equivalence test, pointwise meets, and pullbacks along homomorphisms
all operate on unparameterized SV-sets whose universe is the group's element
set.  Parameterized SV-sets are accepted sliceswise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadDocumentError,
    HomMismatchError,
    NotASubgroupError,
    ShapeMismatchError,
    UniverseMismatchError,
)
from .scale import Value
from .sets import SVSet, Universe, sv_intersection, sv_slice


class FiniteGroup:
    """Group given by a total Cayley table; all group laws checked at build."""

    def __init__(self, name: str, elements: Sequence[str], table: Mapping[tuple[str, str], str]):
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise BadDocumentError("group elements must be unique")
        for a, b in itertools.product(elements, repeat=2):
            if (a, b) not in table:
                raise BadDocumentError(f"Cayley table undefined at ({a!r}, {b!r})")
            if table[(a, b)] not in elements:
                raise BadDocumentError(f"product {a!r}*{b!r} leaves the element set")
        for a, b, c in itertools.product(elements, repeat=3):
            if table[(table[(a, b)], c)] != table[(a, table[(b, c)])]:
                raise BadDocumentError(f"associativity fails at ({a!r}, {b!r}, {c!r})")
        identity = None
        for e in elements:
            if all(table[(e, a)] == a and table[(a, e)] == a for a in elements):
                identity = e
                break
        if identity is None:
            raise BadDocumentError("no two-sided identity element")
        inverse = {}
        for a in elements:
            inv = [b for b in elements if table[(a, b)] == identity and table[(b, a)] == identity]
            if not inv:
                raise BadDocumentError(f"{a!r} has no two-sided inverse")
            inverse[a] = inv[0]
        self.name = name
        self.elements = elements
        self.table = dict(table)
        self.identity = identity
        self._inverse = inverse

    def mul(self, a: str, b: str) -> str:
        return self.table[(a, b)]

    def inv(self, a: str) -> str:
        return self._inverse[a]

    def universe(self) -> Universe:
        return Universe(self.name, self.elements)

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "table": [[self.table[(a, b)] for b in self.elements] for a in self.elements],
            "identity": self.identity,
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "FiniteGroup":
        elements = tuple(doc["elements"])
        rows = doc["table"]
        if len(rows) != len(elements) or any(len(r) != len(elements) for r in rows):
            raise BadDocumentError("Cayley table must be square over the element list")
        table = {
            (elements[i], elements[j]): rows[i][j]
            for i in range(len(elements))
            for j in range(len(elements))
        }
        group = cls(doc.get("name", "G"), elements, table)
        if "identity" in doc and doc["identity"] != group.identity:
            raise BadDocumentError(
                f"declared identity {doc['identity']!r} is not the identity "
                f"(found {group.identity!r})"
            )
        return group


# -- canned groups -----------------------------------------------------------


def cyclic_group(n: int) -> FiniteGroup:
    elems = tuple(str(i) for i in range(n))
    table = {(str(a), str(b)): str((a + b) % n) for a in range(n) for b in range(n)}
    return FiniteGroup(f"Z{n}", elems, table)


def symmetric_group_s3() -> FiniteGroup:
    perms = {
        "e": (0, 1, 2),
        "r": (1, 2, 0),
        "r2": (2, 0, 1),
        "s": (0, 2, 1),
        "sr": (2, 1, 0),
        "sr2": (1, 0, 2),
    }
    by_perm = {p: name for name, p in perms.items()}

    def compose(p, q):  # (p*q)(i) = p(q(i))
        return tuple(p[q[i]] for i in range(3))

    table = {
        (a, b): by_perm[compose(perms[a], perms[b])] for a in perms for b in perms
    }
    return FiniteGroup("S3", tuple(perms), table)


def dihedral_group_d4() -> FiniteGroup:
    # r = quarter rotation, s = reflection; s r s = r^-1
    names = ("e", "r", "r2", "r3", "s", "sr", "sr2", "sr3")

    def key(flip: int, rot: int) -> str:
        suffix = {0: "", 1: "r", 2: "r2", 3: "r3"}[rot]
        if flip:
            return "s" + suffix
        return suffix or "e"

    def parse(name: str) -> tuple[int, int]:
        flip = name.startswith("s")
        rest = name[1:] if flip else name
        rot = {"": 0, "e": 0, "r": 1, "r2": 2, "r3": 3}[rest]
        return (int(flip), rot)

    def mul(a: str, b: str) -> str:
        fa, ra = parse(a)
        fb, rb = parse(b)
        # (s^fa r^ra)(s^fb r^rb) = s^(fa+fb) r^(rb + (-1)^fb * ra)
        rot = (rb + (ra if not fb else -ra)) % 4
        return key((fa + fb) % 2, rot)

    table = {(a, b): mul(a, b) for a in names for b in names}
    return FiniteGroup("D4", names, table)


BUILTIN_GROUPS = {
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "Z4": lambda: cyclic_group(4),
    "Z6": lambda: cyclic_group(6),
    "Z12": lambda: cyclic_group(12),
    "S3": symmetric_group_s3,
    "D4": dihedral_group_d4,
}


@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    mapping: Mapping[str, str]

    def __post_init__(self):
        for a in self.source.elements:
            if a not in self.mapping:
                raise HomMismatchError(f"hom undefined at {a!r}")
            if self.mapping[a] not in self.target.elements:
                raise HomMismatchError(f"hom sends {a!r} outside the target group")
        for a, b in itertools.product(self.source.elements, repeat=2):
            if self.mapping[self.source.mul(a, b)] != self.target.mul(
                self.mapping[a], self.mapping[b]
            ):
                raise HomMismatchError(f"not a homomorphism at ({a!r}, {b!r})")

    def apply(self, a: str) -> str:
        return self.mapping[a]


# ---------------------------------------------------------------------------
# crisp subgroup utilities (also serve as test oracles)


def is_crisp_subgroup(group: FiniteGroup, subset: Iterable[str]) -> bool:
    s = set(subset)
    if group.identity not in s:
        return False
    return all(group.mul(a, group.inv(b)) in s for a in s for b in s)


def all_subgroups(group: FiniteGroup) -> list[frozenset]:
    """Brute-force enumeration over all subsets containing the identity."""
    rest = [e for e in group.elements if e != group.identity]
    found = []
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            candidate = frozenset(combo) | {group.identity}
            if is_crisp_subgroup(group, candidate):
                found.append(candidate)
    return found


# ---------------------------------------------------------------------------
# SV-subgroups


@dataclass(frozen=True)
class SubgroupReport:
    ok: bool
    witness: tuple[str, str] | None = None
    reason: str = ""

    def summary(self) -> str:
        if self.ok:
            return "SV-subgroup"
        if self.witness:
            return f"not an SV-subgroup: {self.reason} (witness {self.witness})"
        return f"not an SV-subgroup: {self.reason}"


def _require_group_set(group: FiniteGroup, a: SVSet) -> None:
    if a.universe.elements != group.elements:
        raise UniverseMismatchError("SV-set universe must equal the group's element set")
    if not a.is_unparameterized:
        raise ShapeMismatchError("use slices (or is_parameterized_sv_subgroup) for parameterized sets")


def is_sv_subgroup(group: FiniteGroup, a: SVSet) -> SubgroupReport:
    """A(identity) = top and A(x y^-1) >= A(x) ∧ A(y) for all pairs."""
    _require_group_set(group, a)
    s = a.scale
    if a(group.identity) != s.top:
        return SubgroupReport(False, None, "value at the identity is not top")
    for x, y in itertools.product(group.elements, repeat=2):
        bound = s.meet(a(x), a(y))
        if not s.leq(bound, a(group.mul(x, group.inv(y)))):
            return SubgroupReport(False, (x, y), "quotient inequality fails")
    return SubgroupReport(True)


def is_parameterized_sv_subgroup(group: FiniteGroup, a: SVSet) -> dict[str, SubgroupReport]:
    """Accept a parameterized SV-set iff every slice passes; reports per parameter."""
    return {e: is_sv_subgroup(group, sv_slice(a, e)) for e in a.params.params}


@dataclass(frozen=True)
class DerivedPropertiesReport:
    ok: bool
    failures: tuple[str, ...] = ()


def derived_properties_check(group: FiniteGroup, a: SVSet) -> DerivedPropertiesReport:
    """Re-verify the consequences of the subgroup inequality.

    Requires an SV-subgroup; the three identities must then always hold, so a
    failure here is a library bug, not a data condition.
    """
    verdict = is_sv_subgroup(group, a)
    if not verdict.ok:
        raise NotASubgroupError(verdict.summary())
    s = a.scale
    failures = []
    for x in group.elements:
        if not s.leq(a(x), a(group.identity)):
            failures.append(f"A({x}) above A(identity)")
        if a(group.inv(x)) != a(x):
            failures.append(f"A({x}^-1) != A({x})")
    for x, y in itertools.product(group.elements, repeat=2):
        if not s.leq(s.meet(a(x), a(y)), a(group.mul(x, y))):
            failures.append(f"A({x}{y}) below A({x})∧A({y})")
    return DerivedPropertiesReport(not failures, tuple(failures))


def level_subgroup(group: FiniteGroup, a: SVSet, alpha: Value) -> frozenset:
    """Weak level set {x : alpha <= A(x)} as a subset of the group."""
    _require_group_set(group, a)
    a.scale.check(alpha)
    return frozenset(x for x in group.elements if a.scale.leq(alpha, a(x)))


def _level_test_alphas(a: SVSet) -> list[Value]:
    """Alphas that decide the level-equivalence test.

    Full carrier when finite; otherwise the meet-closure of the image together
    with top, which covers every value of the form A(x) ∧ A(y) the proof uses.
    """
    s = a.scale
    if s.is_finite:
        return s.carrier()
    values = {a(x) for x in a.universe.elements}
    values.add(s.top)
    closed = set(values)
    changed = True
    while changed:
        changed = False
        for v, w in itertools.combinations(list(closed), 2):
            m = s.meet(v, w)
            if m not in closed:
                closed.add(m)
                changed = True
    return sorted(closed, key=lambda v: str(s.format_value(v)))


@dataclass(frozen=True)
class EquivalenceReport:
    sv_subgroup: bool
    all_levels_subgroups: bool
    failing_alpha: Value | None = None

    @property
    def consistent(self) -> bool:
        return self.sv_subgroup == self.all_levels_subgroups


def level_equivalence_check(group: FiniteGroup, a: SVSet) -> EquivalenceReport:
    """Compare the subgroup inequality against crisp status of every level set.

    The two verdicts must agree; a discrepancy would be a library bug.
    """
    _require_group_set(group, a)
    sv = is_sv_subgroup(group, a).ok
    failing = None
    for alpha in _level_test_alphas(a):
        if not is_crisp_subgroup(group, level_subgroup(group, a, alpha)):
            failing = alpha
            break
    return EquivalenceReport(sv, failing is None, failing)


def meet_subgroups(group: FiniteGroup, parts: Sequence[SVSet]) -> SVSet:
    """Pointwise meet of SV-subgroups; the result is re-verified, not assumed."""
    if not parts:
        raise BadDocumentError("need at least one SV-subgroup to meet")
    for p in parts:
        verdict = is_sv_subgroup(group, p)
        if not verdict.ok:
            raise NotASubgroupError(f"input fails: {verdict.summary()}")
    acc = parts[0]
    for p in parts[1:]:
        acc = sv_intersection(acc, p)
    verdict = is_sv_subgroup(group, acc)
    if not verdict.ok:
        raise NotASubgroupError(f"meet unexpectedly fails: {verdict.summary()}")
    return acc


def pullback_subgroup(hom: GroupHom, a: SVSet) -> SVSet:
    """Compose with a group homomorphism; the result is re-verified over the source."""
    verdict = is_sv_subgroup(hom.target, a)
    if not verdict.ok:
        raise NotASubgroupError(f"input fails: {verdict.summary()}")
    pulled = SVSet.unparameterized_from(
        hom.source.universe(), a.scale, {x: a(hom.apply(x)) for x in hom.source.elements}
    )
    verdict = is_sv_subgroup(hom.source, pulled)
    if not verdict.ok:
        raise NotASubgroupError(f"pullback unexpectedly fails: {verdict.summary()}")
    return pulled
