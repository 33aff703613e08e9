"""Germs of the hull action on the boundary (tree instances only)."""
from __future__ import annotations

from dataclasses import dataclass

from .boundary import (BoundaryPoint, covered, fixed_sets, from_word, require_tree,
                       theta_apply)
from .errors import UsageError
from .hull import ZERO, InverseHull
from .verdict import Verdict


@dataclass(frozen=True)
class Germ:
    s: object
    x: BoundaryPoint


def germ(H: InverseHull, s, x: BoundaryPoint) -> Germ:
    require_tree(H.P)
    if s is ZERO or not x.has_prefix(H.P.word(s.q)):
        raise UsageError(f"{x} is not in the domain of {H.format(s)}")
    return Germ(s, x)


def unit_germ(H: InverseHull, x: BoundaryPoint) -> Germ:
    return Germ(H.one, x)


def source(H, a: Germ) -> BoundaryPoint:
    return a.x


def target(H, a: Germ):
    return theta_apply(H, a.s, a.x)


def format_germ(H, a: Germ) -> str:
    return f"[{H.format(a.s)}, {a.x}]"


def germ_eq(H: InverseHull, a: Germ, b: Germ, bound: int) -> Verdict:
    """Is there a prefix idempotent ``e = [γ, γ]`` of the base point with ``s e == t e``?"""
    P = H.P
    if a.x != b.x:
        return Verdict.fails(("source", a.x, b.x), reason="different base points")
    ra, rb = theta_apply(H, a.s, a.x), theta_apply(H, b.s, b.x)
    if ra.point is not None and rb.point is not None:
        if ra.point != rb.point:
            return Verdict.fails(("range", ra.point, rb.point), reason="different range points")
    elif ra.take(bound) != rb.take(bound):
        return Verdict.fails(("range", ra.take(bound), rb.take(bound)),
                             reason="range points differ")
    shift_a = len(P.word(a.s.p)) - len(P.word(a.s.q))
    shift_b = len(P.word(b.s.p)) - len(P.word(b.s.q))
    if shift_a != shift_b and len(P.alphabet) > 1:
        # near x one map prepends more letters than the other; the extra letters
        # cannot be constant on a cylinder since the group part acts bijectively
        return Verdict.fails(("shift", shift_a, shift_b), reason="different length shifts")
    start = max(len(P.word(a.s.q)), len(P.word(b.s.q)))
    for n in range(start, max(bound, start) + 1):
        e = H.idempotent(from_word(P, a.x.take(n)))
        if H.mul(a.s, e) == H.mul(b.s, e):
            return Verdict.holds(e, exact=True, reason="agree on a prefix cylinder")
        if P.cancellative:
            # with E*-unitarity, disagreement below both sources persists
            return Verdict.fails(("no merge", e), reason="cancellative, restrictions differ")
    return Verdict.unknown(bound, "prefix cylinders never merged")


def compose(H: InverseHull, a: Germ, b: Germ) -> Germ:
    """``[t, θ_s(x)][s, x] = [ts, x]``; needs the range of ``b`` to equal the source of ``a``."""
    img = theta_apply(H, b.s, b.x)
    if img.point is None or img.point != a.x:
        raise UsageError(f"germs are not composable: range {img} differs from source {a.x}")
    return Germ(H.mul(a.s, b.s), b.x)


def inverse(H: InverseHull, a: Germ) -> Germ:
    img = theta_apply(H, a.s, a.x)
    if img.point is None:
        raise UsageError("the range of this germ is only known up to truncation")
    return Germ(H.star(a.s), img.point)


def is_unit(H, a: Germ, bound: int) -> Verdict:
    return germ_eq(H, a, unit_germ(H, a.x), bound)


def isotropy_probe(H: InverseHull, x: BoundaryPoint, generator_bound: int, bound: int):
    """Hull elements of size at most ``generator_bound`` fixing ``x`` with non-unit germs.

    Returns the non-unit germs found and separately those whose triviality is unknown.
    """
    require_tree(H.P)
    nontrivial, undecided = [], []
    for s in H.elements(generator_bound):
        if not x.has_prefix(H.P.word(s.q)):
            continue
        img = theta_apply(H, s, x)
        if img.point != x:
            continue
        v = is_unit(H, Germ(s, x), bound)
        if v.is_fails:
            nontrivial.append(Germ(s, x))
        elif v.is_unknown:
            undecided.append(Germ(s, x))
    return {"nontrivial": nontrivial, "unknown": undecided, "cap": generator_bound}


def topological_freeness_probe(H: InverseHull, s, depth: int) -> Verdict:
    """Is every cylinder fixed by ``s`` trivially fixed?

    A fixed stem outside the trivially fixed ones is confirmed one level
    deeper before being reported.
    """
    if s is ZERO:
        raise UsageError("topological freeness is asked of nonzero elements")
    fs = fixed_sets(H, s, depth)
    bad = [st for st in fs["fixed"] if not covered(st, fs["trivially_fixed"])]
    if not bad:
        return Verdict.holds(fs, bound=fs["depth"], reason="fixed cylinders are trivially fixed")
    deeper = fixed_sets(H, s, fs["depth"] + 1)
    for st in bad:
        if covered(st, deeper["fixed"]) and not any(
                t.startswith(st) or st.startswith(t) for t in deeper["trivially_fixed"]):
            return Verdict.fails({"stem": st, "trivially_fixed": deeper["trivially_fixed"]},
                                 bound=fs["depth"] + 1,
                                 reason="fixed cylinder with no trivially fixed part")
    return Verdict.unknown(fs["depth"] + 1, "fixed cylinders not confirmed at the next depth")
