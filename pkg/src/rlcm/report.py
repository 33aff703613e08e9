"""Run the full battery of checks on an instance and render the result.

Every check ends up as a :class:`CheckRecord`, a flattened verdict whose
witness has already been turned into text, so that text and machine output
are produced from the same data and the machine form round-trips.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .boundary import require_tree
from .errors import UsageError
from .germs import topological_freeness_probe
from .hull import ZERO, InverseHull, Pair, Zero
from .instances.free import format_word
from .instances.selfsimilar import ZappaSzepMonoid, msf_enumerate
from .semigroup import (axioms_probe, condition_H, core_contains, find_disjoint_pair)
from .verdict import Status, Verdict, conjunction

SCHEMA_VERSION = "rlcm-report/1"
CSTAR_CAVEAT = "modulo C*=C*_r"
DEFAULT_DEPTH = 6
DEFAULT_EP_CAP = 4

LABELS = {
    "axioms": "axioms",
    "condition_H": "condition (H)",
    "e_star_unitary": "E*-unitary",
    "locally_contracting": "locally contracting",
    "minimality": "minimality",
    "ep_on_core": "condition (EP) on core",
    "topological_freeness": "topological freeness",
    "simplicity": "simplicity",
    "pure_infiniteness": "pure infiniteness",
}


@dataclass
class CheckRecord:
    name: str
    status: str
    exact: bool
    bound: int | None
    reason: str = ""
    witness: str | None = None
    caveat: str | None = None

    def describe(self) -> str:
        v = Verdict(Status(self.status.lower()), None, self.bound, self.exact, self.reason)
        text = v.describe()
        if self.caveat and self.status == "HOLDS":
            head, _, rest = text.partition(" ")
            text = f"{head} {self.caveat} {rest}".rstrip()
        return text


@dataclass
class AnalysisReport:
    instance: str
    description: str
    depth: int
    ep_cap: int
    checks: list = field(default_factory=list)
    core: dict = field(default_factory=dict)
    msf: list = field(default_factory=list)

    def check(self, name) -> CheckRecord:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


class _Formatter:
    def __init__(self, P, H):
        self.P, self.H = P, H

    def __call__(self, obj) -> str:
        P, H = self.P, self.H
        if obj is None:
            return "none"
        if isinstance(obj, (Pair, Zero)):
            return H.format(obj)
        if P.contains(obj):
            return P.format(obj)
        if P.group is not None and not isinstance(obj, str) and P.group.contains(obj):
            return P.group.format(obj)
        if isinstance(obj, str):
            return format_word(obj)
        if isinstance(obj, dict):
            return "{" + ", ".join(f"{self(k)}: {self(v)}" for k, v in obj.items()) + "}"
        if isinstance(obj, (list, tuple, set, frozenset)):
            items = sorted(obj, key=str) if isinstance(obj, (set, frozenset)) else obj
            return "[" + ", ".join(self(x) for x in items) + "]"
        return str(obj)


def _record(name, v: Verdict, fmt, caveat=None, show_witness=True) -> CheckRecord:
    witness = fmt(v.witness) if (show_witness and v.witness is not None) else None
    return CheckRecord(name, v.status.name, v.exact, v.bound, v.reason, witness, caveat)


def _core_elements(P, H, cap, bound):
    out = []
    for s in H.elements(cap):
        a, b = core_contains(P, s.p, bound), core_contains(P, s.q, bound)
        if a.is_holds and b.is_holds:
            out.append(s)
    return out


def analyze(P, depth: int = DEFAULT_DEPTH, ep_cap: int = DEFAULT_EP_CAP) -> AnalysisReport:
    if depth < 1:
        raise UsageError("depth must be at least 1")
    H = InverseHull(P)
    fmt = _Formatter(P, H)
    report = AnalysisReport(P.name, P.describe(), depth, ep_cap)
    add = report.checks.append
    small = min(depth, 3)

    add(_record("axioms", axioms_probe(P, samples=200, bound=small), fmt))

    cond_h = condition_H(P, depth)
    add(_record("condition_H", cond_h, fmt))

    core_in, core_out = [], []
    shortcut = None
    for p in P.elements(1):
        v = core_contains(P, p, depth)
        shortcut = shortcut or (v.reason if v.exact else None)
        if v.is_holds:
            core_in.append(P.format(p))
        elif v.is_fails:
            core_out.append({"element": P.format(p), "disjoint_from": fmt(v.witness)})
    report.core = {"in": core_in, "out": core_out, "shortcut": shortcut, "size_cap": 1}

    add(_record("e_star_unitary", H.e_star_unitary_probe(min(depth, 4)), fmt))

    if P.all_in_core:
        lc = Verdict.fails("P = P0", reason="every pair of principal right ideals meets")
    else:
        pair = find_disjoint_pair(P, depth)
        if pair is None:
            lc = Verdict.unknown(depth, "no disjoint pair found")
        else:
            p, q = pair
            w = H.locally_contracting_witness(P.identity, p, q)
            if not w.ok:
                raise AssertionError("locally contracting witness failed its checks")
            lc = Verdict.holds({"p": p, "q": q, "f0": w.f0, "f1": w.f1, "a": w.a},
                               exact=True, reason="disjoint ideals, so P != P0")
    add(_record("locally_contracting", lc, fmt))

    add(_record("minimality", Verdict.holds(exact=True, reason="cited: the tight groupoid is minimal"),
                fmt))

    core_hull = _core_elements(P, H, ep_cap, depth)
    ep_bound = min(depth, 4)
    ep_verdicts = []
    for s in core_hull:
        v = H.condition_EP(s, ep_bound)
        if not v.is_holds:
            v = Verdict(v.status, {"s": s, "k": v.witness}, v.bound, v.exact, v.reason)
        ep_verdicts.append(v)
    ep = conjunction(ep_verdicts, reason=f"core elements of size <= {ep_cap}: {len(core_hull)}")
    if ep.is_fails:
        ep = Verdict.fails(next(v.witness for v in ep_verdicts if v.is_fails),
                           bound=ep.bound, reason=ep.reason)
    add(_record("ep_on_core", ep, fmt))

    try:
        require_tree(P)
        tf_verdicts = []
        for s in core_hull:
            v = topological_freeness_probe(H, s, depth)
            if v.is_fails:
                v = Verdict.fails({"s": s, **v.witness}, bound=v.bound, reason=v.reason)
            tf_verdicts.append(v)
        tf = conjunction(tf_verdicts, reason=f"core elements of size <= {ep_cap}: {len(core_hull)}")
        if tf.is_fails:
            tf = next(v for v in tf_verdicts if v.is_fails)
        add(_record("topological_freeness", tf, fmt, show_witness=not tf.is_holds))
    except UsageError as exc:
        add(_record("topological_freeness", Verdict.unknown(0, str(exc)), fmt))

    simple = conjunction([cond_h, ep], reason="condition (H) and (EP) on the core")
    add(_record("simplicity", simple, fmt, caveat=CSTAR_CAVEAT, show_witness=False))

    if simple.is_holds and lc.is_holds:
        pi = conjunction([simple, lc], reason="simple, and two disjoint cylinders exist")
    elif simple.is_holds and lc.is_fails:
        pi = Verdict.fails("one-point groupoid", reason="simple with P = P0")
    elif simple.is_fails:
        pi = Verdict.unknown(depth, "the criterion needs simplicity")
    else:
        pi = Verdict.unknown(depth, "simplicity or local contraction undecided")
    add(_record("pure_infiniteness", pi, fmt, caveat=CSTAR_CAVEAT, show_witness=False))

    if isinstance(P, ZappaSzepMonoid):
        G = P.group
        for g in G.elements(2):
            if g == G.identity:
                continue
            res = msf_enumerate(P, g)
            report.msf.append({"element": G.format(g), "words": [format_word(w) for w in res.words],
                               "finiteness": res.finiteness.describe()})
    return report


def render_text(report: AnalysisReport) -> str:
    lines = [f"instance: {report.instance} ({report.description})",
             f"depth: {report.depth}, ep-cap: {report.ep_cap}"]
    core_head = True
    for c in report.checks:
        lines.append(f"{LABELS[c.name]}: {c.describe()}")
        if c.witness is not None:
            lines.append(f"  witness: {c.witness}")
        if c.name == "condition_H" and core_head:
            core_head = False
            core = report.core
            lines.append(f"core (elements of size <= {core['size_cap']}):")
            lines.append("  in: " + (", ".join(core["in"]) or "none"))
            for o in core["out"]:
                lines.append(f"  out: {o['element']} (disjoint from {o['disjoint_from']})")
            if core["shortcut"]:
                lines.append(f"  shortcut: {core['shortcut']}")
    if report.msf:
        lines.append("MSF tables:")
        for row in report.msf:
            ws = "{" + ", ".join(row["words"]) + "}"
            lines.append(f"  {row['element']}: {ws} finiteness {row['finiteness']}")
    return "\n".join(lines) + "\n"


def to_machine(report: AnalysisReport) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "instance": {"name": report.instance, "description": report.description},
        "parameters": {"depth": report.depth, "ep_cap": report.ep_cap},
        "checks": [asdict(c) for c in report.checks],
        "core": report.core,
        "msf": report.msf,
    }


def from_machine(doc: dict) -> AnalysisReport:
    if doc.get("schema") != SCHEMA_VERSION:
        raise UsageError(f"unsupported report schema {doc.get('schema')!r}")
    return AnalysisReport(
        instance=doc["instance"]["name"],
        description=doc["instance"]["description"],
        depth=doc["parameters"]["depth"],
        ep_cap=doc["parameters"]["ep_cap"],
        checks=[CheckRecord(**c) for c in doc["checks"]],
        core=doc["core"],
        msf=doc["msf"],
    )


def render_report(report: AnalysisReport, format: str = "text") -> str:
    if format == "text":
        return render_text(report)
    if format == "machine":
        return json.dumps(to_machine(report), indent=2, ensure_ascii=False) + "\n"
    raise UsageError(f"unknown format {format!r}: expected text or machine")
