"""Command-line entry point.

Verbs are grouped by area (scale / set / topo / group / decide); every library
operation is reachable from at least one verb.  Output is plain text by
default or deterministic JSON with --json (sorted keys, schema-versioned).
Exit codes: 0 success or validation pass, 1 validation failure, 2 usage or
document errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import decision, encodings, groups, topology
from .errors import BadDocumentError, LambdaOutOfRangeError, SVError
from .rationals import format_rational, parse_rational
from .scale import ScaleHom, scale_from_json, verify_scale_hom, verify_scale_laws
from .sets import (
    ParamSet,
    SVSet,
    Universe,
    pullback,
    pushforward,
    sv_complement,
    sv_intersection,
    sv_slice,
    sv_subset,
    sv_union,
    transport,
    unparameterized,
)

SCHEMA_VERSION = 1

# library operation -> CLI verb that reaches it (audited by a test)
OPERATION_COVERAGE = {
    "scale.join": "set op",
    "scale.meet": "set op",
    "scale.neg": "set op",
    "scale.leq": "set op",
    "scale.build_finite_scale": "scale check",
    "scale.product_scale": "scale check",
    "scale.interval_scale": "scale check",
    "scale.function_scale": "scale check",
    "scale.verify_scale_laws": "scale check",
    "scale.verify_scale_hom": "scale hom-check",
    "svset.sv_union": "set op",
    "svset.sv_intersection": "set op",
    "svset.sv_complement": "set op",
    "svset.sv_subset": "set op",
    "svset.slice": "set slice",
    "svset.transport": "set transport",
    "svset.pullback": "set pullback",
    "svset.pushforward": "set pushforward",
    "encodings.crisp_to_sv": "set encode",
    "encodings.soft_to_sv": "set encode",
    "encodings.multiset_to_sv": "set encode",
    "encodings.fuzzy_to_sv": "set encode",
    "encodings.lfuzzy_to_sv": "set encode",
    "encodings.ifs_to_sv": "set encode",
    "encodings.rough_to_sv": "set encode",
    "encodings.type2_to_sv": "set encode",
    "encodings.it2_to_sv": "set encode",
    "encodings.lviss_membership_to_sv": "set encode",
    "encodings.sv_to_simple_lviss": "set encode",
    "topology.strong_cut": "set cut",
    "topology.weak_cut": "set cut",
    "topology.validate_sv_topology": "topo validate",
    "topology.generate_sv_topology": "topo generate",
    "topology.cut_topology": "topo cut",
    "topology.m3_cut_counterexample": "topo counterexample",
    "topology.check_sv_continuity": "topo continuity",
    "topology.slice_topology": "topo slice",
    "groups.is_sv_subgroup": "group check",
    "groups.derived_properties_check": "group derived",
    "groups.level_subgroup": "group levels",
    "groups.level_equivalence_check": "group levels",
    "groups.meet_subgroups": "group meet",
    "groups.pullback_subgroup": "group pullback",
    "decision.aggregate_min": "decide rank",
    "decision.score": "decide rank",
    "decision.rank": "decide rank",
    "decision.break_even": "decide breakeven",
    "decision.lambda_sweep": "decide sweep",
    "decision.projection_rankings": "decide projections",
}


def _load_doc(arg: str):
    """Accept inline JSON (starts with '{' or '[') or a file path."""
    text = arg.strip()
    if not text.startswith(("{", "[")):
        try:
            with open(arg) as fh:
                text = fh.read()
        except OSError as exc:
            raise BadDocumentError(f"cannot read {arg!r}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadDocumentError(f"malformed JSON in {arg!r}: {exc}") from exc


def _load_svset(arg: str) -> SVSet:
    return SVSet.from_json(_load_doc(arg))


def _load_topology(arg: str) -> topology.SVTopology:
    doc = _load_doc(arg)
    for key in ("scale", "universe", "opens"):
        if key not in doc:
            raise BadDocumentError(f"topology document missing {key!r}")
    scale = scale_from_json(doc["scale"])
    universe = Universe("U", tuple(doc["universe"]))
    opens = []
    for table in doc["opens"]:
        opens.append(
            SVSet.unparameterized_from(
                universe, scale, {x: scale.parse_value(table[x]) for x in universe.elements}
            )
        )
    return topology.SVTopology(scale, universe, tuple(opens))


def _load_group(arg: str) -> groups.FiniteGroup:
    if arg in groups.BUILTIN_GROUPS:
        return groups.BUILTIN_GROUPS[arg]()
    return groups.FiniteGroup.from_json(_load_doc(arg))


def _load_scale_hom(arg: str) -> ScaleHom:
    doc = _load_doc(arg)
    for key in ("source", "target", "map"):
        if key not in doc:
            raise BadDocumentError(f"scale hom document missing {key!r}")
    source = scale_from_json(doc["source"])
    target = scale_from_json(doc["target"])
    mapping = {
        source.parse_value(k): target.parse_value(v) for k, v in doc["map"].items()
    }
    return ScaleHom(source, target, mapping)


def _load_table(args) -> decision.DecisionTable:
    if args.table.endswith(".json"):
        return decision.DecisionTable.from_json(_load_doc(args.table))
    if args.k is None:
        raise BadDocumentError("--k is required with CSV tables")
    return decision.DecisionTable.from_csv(args.table, args.k)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        payload = {"schema": SCHEMA_VERSION, **payload}
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(text)


# ---------------------------------------------------------------------------
# scale verbs


def _cmd_scale_check(args) -> int:
    scale = scale_from_json(_load_doc(args.scale))
    report = verify_scale_laws(
        scale, exhaustive=args.exhaustive, samples=args.samples, seed=args.seed
    )
    payload = {
        "command": "scale check",
        "scale": scale.to_json(),
        "ok": report.ok,
        "checks": [
            {"name": c.name, "ok": c.ok, "witness": list(c.witness) if c.witness else None}
            for c in report.checks
        ],
    }
    _emit(args, payload, report.summary())
    return 0 if report.ok else 1


def _cmd_scale_hom_check(args) -> int:
    hom = _load_scale_hom(args.hom)
    report = verify_scale_hom(
        hom, exhaustive=args.exhaustive, samples=args.samples, seed=args.seed
    )
    payload = {
        "command": "scale hom-check",
        "ok": report.ok,
        "checks": [
            {"name": c.name, "ok": c.ok, "witness": list(c.witness) if c.witness else None}
            for c in report.checks
        ],
    }
    _emit(args, payload, report.summary())
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# set verbs


def _cmd_set_op(args) -> int:
    a = _load_svset(args.a)
    if args.op == "complement":
        result = sv_complement(a)
        _emit(args, {"command": "set op", "op": args.op, "result": result.to_json()},
              json.dumps(result.to_json(), sort_keys=True))
        return 0
    if args.b is None:
        raise BadDocumentError(f"--b is required for op {args.op!r}")
    b = _load_svset(args.b)
    if args.op == "subset":
        verdict = sv_subset(a, b)
        _emit(args, {"command": "set op", "op": "subset", "result": verdict},
              "subset" if verdict else "not-subset")
        return 0 if verdict else 1
    fn = {"union": sv_union, "intersection": sv_intersection}.get(args.op)
    if fn is None:
        raise BadDocumentError(f"unknown set op {args.op!r}")
    result = fn(a, b)
    _emit(args, {"command": "set op", "op": args.op, "result": result.to_json()},
          json.dumps(result.to_json(), sort_keys=True))
    return 0


def _universe_from(doc) -> Universe:
    return Universe("U", tuple(doc["universe"]))


def _encode_model(kind: str, doc) -> SVSet:
    u = _universe_from(doc)
    if kind == "crisp":
        return encodings.crisp_to_sv(u, frozenset(doc["subset"]))
    if kind == "soft":
        params = ParamSet("E", tuple(doc["params"]))
        assignment = {e: frozenset(doc["assignment"][e]) for e in params.params}
        return encodings.soft_to_sv(encodings.SoftSet(u, params, assignment))
    if kind == "fuzzy":
        return encodings.fuzzy_to_sv(u, {x: parse_rational(v) for x, v in doc["mu"].items()})
    if kind == "multiset":
        return encodings.multiset_to_sv(u, {x: int(v) for x, v in doc["m"].items()}, int(doc["k"]))
    if kind == "lfuzzy":
        scale = scale_from_json(doc["scale"])
        return encodings.lfuzzy_to_sv(
            u, {x: scale.parse_value(v) for x, v in doc["mu"].items()}, scale
        )
    if kind == "ifs":
        return encodings.ifs_to_sv(
            encodings.IFSPair(
                u,
                {x: parse_rational(v) for x, v in doc["mu"].items()},
                {x: parse_rational(v) for x, v in doc["nu"].items()},
            )
        )
    if kind == "rough":
        return encodings.rough_to_sv(
            encodings.RoughPair(u, frozenset(doc["lower"]), frozenset(doc["upper"]))
        )
    if kind == "type2":
        grid = [parse_rational(g) for g in doc["grid"]]
        membership = {
            (x, g): parse_rational(v)
            for x, row in doc["membership"].items()
            for g, v in zip(grid, row)
        }
        return encodings.type2_to_sv(u, membership, grid)
    if kind == "it2":
        return encodings.it2_to_sv(
            u,
            {x: parse_rational(v) for x, v in doc["lower"].items()},
            {x: parse_rational(v) for x, v in doc["upper"].items()},
        )
    if kind == "lviss":
        params = ParamSet("E", tuple(doc["params"]))
        scale = scale_from_json(doc["scale"])

        def read(table):
            out = {}
            for key, v in table.items():
                x, e = key.split("|", 1)
                out[(x, e)] = scale.parse_value(v)
            return out

        lviss = encodings.LVISS(u, params, scale, read(doc["lower"]), read(doc["upper"]))
        return encodings.lviss_membership_to_sv(lviss)
    raise BadDocumentError(f"unknown encoding kind {kind!r}")


def _cmd_set_encode(args) -> int:
    result = _encode_model(args.kind, _load_doc(args.file))
    _emit(args, {"command": "set encode", "kind": args.kind, "result": result.to_json()},
          json.dumps(result.to_json(), sort_keys=True))
    return 0


def _cmd_set_cut(args) -> int:
    a = _load_svset(args.file)
    alpha = a.scale.parse_value(args.alpha)
    cut = topology.weak_cut(a, alpha) if args.weak else topology.strong_cut(a, alpha)
    members = sorted(cut)
    _emit(args, {"command": "set cut", "weak": bool(args.weak), "cut": members},
          "{" + ", ".join(members) + "}")
    return 0


def _cmd_set_slice(args) -> int:
    result = sv_slice(_load_svset(args.file), args.param)
    _emit(args, {"command": "set slice", "param": args.param, "result": result.to_json()},
          json.dumps(result.to_json(), sort_keys=True))
    return 0


def _cmd_set_transport(args) -> int:
    result = transport(_load_scale_hom(args.hom), _load_svset(args.file))
    _emit(args, {"command": "set transport", "result": result.to_json()},
          json.dumps(result.to_json(), sort_keys=True))
    return 0


def _cmd_set_pullback(args) -> int:
    a = _load_svset(args.file)
    f = _load_doc(args.elem_map)
    g = _load_doc(args.param_map) if args.param_map else {"*": "*"}
    universe = Universe("U", tuple(args.universe.split(",")))
    params = ParamSet("E", tuple(args.params.split(","))) if args.params else unparameterized()
    result = pullback(f, g, a, universe, params)
    _emit(args, {"command": "set pullback", "result": result.to_json()},
          json.dumps(result.to_json(), sort_keys=True))
    return 0


def _cmd_set_pushforward(args) -> int:
    a = _load_svset(args.file)
    f = _load_doc(args.elem_map)
    universe = Universe("V", tuple(args.universe.split(",")))
    result = pushforward(f, a, universe)
    _emit(args, {"command": "set pushforward", "result": result.to_json()},
          json.dumps(result.to_json(), sort_keys=True))
    return 0


# ---------------------------------------------------------------------------
# topo verbs


def _topology_payload(topo: topology.SVTopology) -> dict:
    return {
        "scale": topo.scale.to_json(),
        "universe": list(topo.universe.elements),
        "opens": [
            {x: o.scale.format_value(o(x)) for x in topo.universe.elements} for o in topo.opens
        ],
    }


def _cmd_topo_validate(args) -> int:
    report = topology.validate_sv_topology(_load_topology(args.file))
    _emit(args, {"command": "topo validate", "ok": report.ok, "issues": list(report.issues)},
          report.summary())
    return 0 if report.ok else 1


def _cmd_topo_generate(args) -> int:
    topo = _load_topology(args.file)  # same document shape; opens act as generators
    generated = topology.generate_sv_topology(topo.universe, topo.scale, topo.opens, cap=args.cap)
    payload = _topology_payload(generated)
    _emit(args, {"command": "topo generate", "result": payload},
          json.dumps(payload, sort_keys=True))
    return 0


def _cmd_topo_cut(args) -> int:
    topo = _load_topology(args.file)
    alpha = topo.scale.parse_value(args.alpha)
    crisp = topology.cut_topology(topo, alpha)
    opens = sorted(sorted(o) for o in crisp.opens)
    _emit(args, {"command": "topo cut", "opens": opens},
          "\n".join("{" + ", ".join(o) + "}" for o in opens))
    return 0


def _cmd_topo_continuity(args) -> int:
    f = _load_doc(args.map)
    report = topology.check_sv_continuity(f, _load_topology(args.source), _load_topology(args.target))
    payload = {
        "command": "topo continuity",
        "continuous": report.continuous,
        "failing_open": report.failing_open.to_json() if report.failing_open else None,
    }
    _emit(args, payload, report.summary())
    return 0 if report.continuous else 1


def _cmd_topo_slice(args) -> int:
    doc = _load_doc(args.file)
    scale = scale_from_json(doc["scale"])
    universe = Universe("U", tuple(doc["universe"]))
    params = ParamSet("E", tuple(doc["params"]))
    family = []
    for table in doc["opens"]:
        family.append(
            SVSet.from_function(
                universe, params, scale, lambda x, e, t=table: scale.parse_value(t[f"{x}|{e}"])
            )
        )
    sliced = topology.slice_topology(universe, scale, family, args.param)
    payload = _topology_payload(sliced)
    _emit(args, {"command": "topo slice", "result": payload}, json.dumps(payload, sort_keys=True))
    return 0


def _cmd_topo_counterexample(args) -> int:
    report = topology.m3_cut_counterexample()
    payload = {
        "command": "topo counterexample",
        "cut_intersection": sorted(report.cut_intersection),
        "meet_cut": sorted(report.meet_cut),
        "demonstrates_failure": report.demonstrates_failure,
    }
    _emit(args, payload, report.summary())
    return 0


# ---------------------------------------------------------------------------
# group verbs


def _cmd_group_check(args) -> int:
    group = _load_group(args.group)
    a = _load_svset(args.set)
    verdict = groups.is_sv_subgroup(group, a)
    payload = {
        "command": "group check",
        "ok": verdict.ok,
        "witness": list(verdict.witness) if verdict.witness else None,
        "reason": verdict.reason,
    }
    _emit(args, payload, verdict.summary())
    return 0 if verdict.ok else 1


def _cmd_group_derived(args) -> int:
    group = _load_group(args.group)
    report = groups.derived_properties_check(group, _load_svset(args.set))
    payload = {"command": "group derived", "ok": report.ok, "failures": list(report.failures)}
    _emit(args, payload, "all derived properties hold" if report.ok else "\n".join(report.failures))
    return 0 if report.ok else 1


def _cmd_group_levels(args) -> int:
    group = _load_group(args.group)
    a = _load_svset(args.set)
    if args.alpha is not None:
        level = sorted(groups.level_subgroup(group, a, a.scale.parse_value(args.alpha)))
        crisp = groups.is_crisp_subgroup(group, level)
        payload = {"command": "group levels", "level": level, "is_subgroup": crisp}
        _emit(args, payload, "{" + ", ".join(level) + "}" + (" (subgroup)" if crisp else " (not a subgroup)"))
        return 0 if crisp else 1
    report = groups.level_equivalence_check(group, a)
    payload = {
        "command": "group levels",
        "sv_subgroup": report.sv_subgroup,
        "all_levels_subgroups": report.all_levels_subgroups,
        "consistent": report.consistent,
    }
    text = (
        f"SV-subgroup: {report.sv_subgroup}; all level sets subgroups: "
        f"{report.all_levels_subgroups}; verdicts agree: {report.consistent}"
    )
    _emit(args, payload, text)
    return 0 if report.sv_subgroup else 1


def _cmd_group_meet(args) -> int:
    group = _load_group(args.group)
    parts = [_load_svset(p) for p in args.sets.split(",")]
    result = groups.meet_subgroups(group, parts)
    _emit(args, {"command": "group meet", "result": result.to_json()},
          json.dumps(result.to_json(), sort_keys=True))
    return 0


def _cmd_group_pullback(args) -> int:
    doc = _load_doc(args.hom)
    hom = groups.GroupHom(_load_group_ref(doc["source"]), _load_group_ref(doc["target"]), doc["map"])
    result = groups.pullback_subgroup(hom, _load_svset(args.set))
    _emit(args, {"command": "group pullback", "result": result.to_json()},
          json.dumps(result.to_json(), sort_keys=True))
    return 0


def _load_group_ref(ref) -> groups.FiniteGroup:
    if isinstance(ref, str):
        return _load_group(ref)
    return groups.FiniteGroup.from_json(ref)


# ---------------------------------------------------------------------------
# decide verbs


def _scores_payload(scores) -> dict:
    return {u: format_rational(s) for u, s in sorted(scores.items())}


def _cmd_decide_rank(args) -> int:
    table = _load_table(args)
    lam = parse_rational(args.lam)
    result = decision.rank(table, lam)
    profile = decision.aggregate_min(table)
    payload = {
        "command": "decide rank",
        "lambda": format_rational(lam),
        "aggregated": {u: str(g) for u, g in sorted(profile.items())},
        "scores": _scores_payload(result.scores),
        "order": [list(g) for g in result.order],
    }
    lines = [f"lambda = {format_rational(lam)}"]
    for u in table.alternatives:
        lines.append(f"  {u}: B = {profile[u]}, score = {format_rational(result.scores[u])}")
    lines.append(f"ranking: {result.format_order()}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_decide_sweep(args) -> int:
    table = _load_table(args)
    report = decision.lambda_sweep(table)
    payload = {
        "command": "decide sweep",
        "breakpoints": [format_rational(b) for b in report.breakpoints],
        "intervals": [
            {
                "low": format_rational(iv.low),
                "high": format_rational(iv.high),
                "order": [list(g) for g in iv.ranking.order],
            }
            for iv in report.intervals
        ],
        "ties_at": {
            format_rational(lam): [list(g) for g in groups_]
            for lam, groups_ in report.ties_at.items()
        },
    }
    _emit(args, payload, report.summary())
    return 0


def _cmd_decide_breakeven(args) -> int:
    table = _load_table(args)
    names = tuple(p.strip() for p in args.pair.split(","))
    if len(names) != 2:
        raise BadDocumentError("--pair needs exactly two alternative labels")
    for n in names:
        if n not in table.alternatives:
            raise BadDocumentError(f"unknown alternative {n!r}")
    profile = decision.aggregate_min(table)
    report = decision.break_even(profile[names[0]], profile[names[1]], names)
    payload = {
        "command": "decide breakeven",
        "pair": list(names),
        "relation": report.relation,
        "lambda_star": format_rational(report.lambda_star) if report.lambda_star is not None else None,
        "low_lambda_winner": report.low_lambda_winner,
        "high_lambda_winner": report.high_lambda_winner,
        "dominant": report.dominant,
    }
    _emit(args, payload, report.summary())
    return 0


def _cmd_decide_projections(args) -> int:
    table = _load_table(args)
    report = decision.projection_rankings(table)
    payload = {
        "command": "decide projections",
        "grade_order": [list(g) for g in report.grade_order],
        "evidence_order": [list(g) for g in report.evidence_order],
    }
    _emit(args, payload, report.summary())
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="svset", description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    sub = parser.add_subparsers(dest="area", required=True)

    def sampling_flags(p):
        p.add_argument("--exhaustive", action="store_true")
        p.add_argument("--samples", type=int, default=1000)
        p.add_argument("--seed", type=int, default=0)

    scale_p = sub.add_parser("scale").add_subparsers(dest="verb", required=True)
    p = scale_p.add_parser("check")
    p.add_argument("--scale", required=True)
    sampling_flags(p)
    p.set_defaults(handler=_cmd_scale_check)
    p = scale_p.add_parser("hom-check")
    p.add_argument("--hom", required=True)
    sampling_flags(p)
    p.set_defaults(handler=_cmd_scale_hom_check)

    set_p = sub.add_parser("set").add_subparsers(dest="verb", required=True)
    p = set_p.add_parser("op")
    p.add_argument("--op", required=True, choices=["union", "intersection", "complement", "subset"])
    p.add_argument("--a", required=True)
    p.add_argument("--b")
    p.set_defaults(handler=_cmd_set_op)
    p = set_p.add_parser("encode")
    p.add_argument("--kind", required=True,
                   choices=["crisp", "soft", "fuzzy", "multiset", "lfuzzy", "ifs", "rough",
                            "type2", "it2", "lviss"])
    p.add_argument("--file", required=True)
    p.set_defaults(handler=_cmd_set_encode)
    p = set_p.add_parser("cut")
    p.add_argument("--file", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--weak", action="store_true")
    p.set_defaults(handler=_cmd_set_cut)
    p = set_p.add_parser("slice")
    p.add_argument("--file", required=True)
    p.add_argument("--param", required=True)
    p.set_defaults(handler=_cmd_set_slice)
    p = set_p.add_parser("transport")
    p.add_argument("--hom", required=True)
    p.add_argument("--file", required=True)
    p.set_defaults(handler=_cmd_set_transport)
    p = set_p.add_parser("pullback")
    p.add_argument("--file", required=True)
    p.add_argument("--elem-map", required=True)
    p.add_argument("--param-map")
    p.add_argument("--universe", required=True, help="comma-separated source elements")
    p.add_argument("--params", help="comma-separated source parameters")
    p.set_defaults(handler=_cmd_set_pullback)
    p = set_p.add_parser("pushforward")
    p.add_argument("--file", required=True)
    p.add_argument("--elem-map", required=True)
    p.add_argument("--universe", required=True, help="comma-separated target elements")
    p.set_defaults(handler=_cmd_set_pushforward)

    topo_p = sub.add_parser("topo").add_subparsers(dest="verb", required=True)
    p = topo_p.add_parser("validate")
    p.add_argument("--file", required=True)
    p.set_defaults(handler=_cmd_topo_validate)
    p = topo_p.add_parser("generate")
    p.add_argument("--file", required=True)
    p.add_argument("--cap", type=int, default=topology.DEFAULT_CLOSURE_CAP)
    p.set_defaults(handler=_cmd_topo_generate)
    p = topo_p.add_parser("cut")
    p.add_argument("--file", required=True)
    p.add_argument("--alpha", required=True)
    p.set_defaults(handler=_cmd_topo_cut)
    p = topo_p.add_parser("continuity")
    p.add_argument("--map", required=True)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.set_defaults(handler=_cmd_topo_continuity)
    p = topo_p.add_parser("slice")
    p.add_argument("--file", required=True)
    p.add_argument("--param", required=True)
    p.set_defaults(handler=_cmd_topo_slice)
    p = topo_p.add_parser("counterexample")
    p.set_defaults(handler=_cmd_topo_counterexample)

    group_p = sub.add_parser("group").add_subparsers(dest="verb", required=True)
    p = group_p.add_parser("check")
    p.add_argument("--group", required=True)
    p.add_argument("--set", required=True)
    p.set_defaults(handler=_cmd_group_check)
    p = group_p.add_parser("derived")
    p.add_argument("--group", required=True)
    p.add_argument("--set", required=True)
    p.set_defaults(handler=_cmd_group_derived)
    p = group_p.add_parser("levels")
    p.add_argument("--group", required=True)
    p.add_argument("--set", required=True)
    p.add_argument("--alpha")
    p.set_defaults(handler=_cmd_group_levels)
    p = group_p.add_parser("meet")
    p.add_argument("--group", required=True)
    p.add_argument("--sets", required=True, help="comma-separated SV-set files")
    p.set_defaults(handler=_cmd_group_meet)
    p = group_p.add_parser("pullback")
    p.add_argument("--hom", required=True)
    p.add_argument("--set", required=True)
    p.set_defaults(handler=_cmd_group_pullback)

    decide_p = sub.add_parser("decide").add_subparsers(dest="verb", required=True)
    for verb, handler, extra in [
        ("rank", _cmd_decide_rank, ("lambda",)),
        ("sweep", _cmd_decide_sweep, ()),
        ("breakeven", _cmd_decide_breakeven, ("pair",)),
        ("projections", _cmd_decide_projections, ()),
    ]:
        p = decide_p.add_parser(verb)
        p.add_argument("--table", required=True)
        p.add_argument("--k", type=int)
        if "lambda" in extra:
            p.add_argument("--lambda", dest="lam", required=True)
        if "pair" in extra:
            p.add_argument("--pair", required=True)
        p.set_defaults(handler=handler)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.handler(args)
    except (BadDocumentError, LambdaOutOfRangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SVError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
