"""Tight filters of tree-like hulls, realized as eventually periodic infinite words.

In a prefix tree every tight filter is an ultrafilter, and ultrafilters are
infinite words. We only ever handle words ``u w w w ...``, for which
equality, cylinder membership and images under the hull action are exactly
computable.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .errors import UsageError
from .hull import ZERO, InverseHull
from .instances.free import EMPTY_WORD_TOKENS, words, words_upto
from .semigroup import in_ideal, meets
from .verdict import Verdict

#: restriction states followed along a period before giving up on periodicity
CYCLE_CAP = 512


def _primitive_root(w: str) -> str:
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    return w


@dataclass(frozen=True)
class BoundaryPoint:
    """The infinite word ``prefix + period + period + ...`` in canonical form."""

    prefix: str
    period: str

    def __post_init__(self):
        if not self.period:
            raise UsageError("the period of a boundary point must be nonempty")
        u, w = self.prefix, _primitive_root(self.period)
        while u and u[-1] == w[-1]:
            u, w = u[:-1], w[-1] + w[:-1]
        object.__setattr__(self, "prefix", u)
        object.__setattr__(self, "period", w)

    @classmethod
    def parse(cls, text: str) -> "BoundaryPoint":
        m = re.fullmatch(r"\s*([^()\s]*)\s*\(([^()\s]+)\)\s*", text)
        if not m:
            raise UsageError(f"cannot read {text!r} as a boundary point u(w)")
        u = m.group(1)
        return cls("" if u in EMPTY_WORD_TOKENS else u, m.group(2))

    def take(self, n: int) -> str:
        """The first ``n`` letters."""
        if n <= len(self.prefix):
            return self.prefix[:n]
        rest = n - len(self.prefix)
        reps = rest // len(self.period) + 1
        return self.prefix + (self.period * reps)[:rest]

    def has_prefix(self, stem: str) -> bool:
        return self.take(len(stem)) == stem

    def drop(self, n: int) -> "BoundaryPoint":
        if n <= len(self.prefix):
            return BoundaryPoint(self.prefix[n:], self.period)
        k = (n - len(self.prefix)) % len(self.period)
        return BoundaryPoint("", self.period[k:] + self.period[:k])

    def prepend(self, word: str) -> "BoundaryPoint":
        return BoundaryPoint(word + self.prefix, self.period)

    def letters(self):
        return set(self.prefix) | set(self.period)

    def __str__(self):
        return f"{self.prefix}({self.period})"


@dataclass(frozen=True)
class ThetaImage:
    """Result of applying a hull element to a boundary point.

    ``point`` is set when the image is exactly known; otherwise ``prefix``
    holds its first letters and ``truncated`` is true.
    """

    defined: bool
    point: BoundaryPoint | None = None
    prefix: str | None = None
    truncated: bool = False

    def take(self, n: int) -> str:
        if self.point is not None:
            return self.point.take(n)
        return (self.prefix or "")[:n]

    def __str__(self):
        if not self.defined:
            return "undefined"
        if self.point is not None:
            return str(self.point)
        return f"{self.prefix}… (truncated)"


def require_tree(P):
    if not P.is_tree:
        raise UsageError(f"{P.name} does not have a tree of principal right ideals; "
                         "its boundary is not modelled")


def tree_probe(P, bound: int) -> Verdict:
    """Are principal right ideals pairwise nested or disjoint?"""
    if P.is_tree:
        return Verdict.holds(exact=True, reason="ideals are determined by word prefixes")
    if bound <= 0:
        return Verdict.unknown(0, "empty search")
    reps = list(P.ideal_reps(bound))
    for p, q in itertools.combinations(reps, 2):
        if meets(P, p, q) and not (in_ideal(P, p, q) or in_ideal(P, q, p)):
            return Verdict.fails((p, q), bound=bound, reason="meeting ideals that are not nested")
    return Verdict.holds(bound=bound)


def in_basic_set(x: BoundaryPoint, X, Y) -> bool:
    """Membership in ``U(X, Y)``: every stem of ``X`` is a prefix of ``x``, none of ``Y`` is."""
    return all(x.has_prefix(a) for a in X) and not any(x.has_prefix(b) for b in Y)


def from_word(P, w: str):
    """The element of a tree instance whose word part is ``w`` and unit part trivial."""
    if P.group is not None:
        return (w, P.group.identity)
    return w


def _unit(P, element):
    u = P.unit_part(element)
    return None if u is None or u == P.group.identity else u


def act_point(P, g, x: BoundaryPoint, display_depth: int = 32) -> ThetaImage:
    """Image of ``x`` under the group element ``g`` (``None`` acts trivially)."""
    if g is None:
        return ThetaImage(True, point=x)
    G = P.group
    head, h = G.act_restrict(g, x.prefix)
    states = {}
    pieces = []
    exact = G.exact
    while exact and h not in states and len(pieces) < CYCLE_CAP:
        states[h] = len(pieces)
        img, h = G.act_restrict(h, x.period)
        pieces.append(img)
    if exact and h in states:
        i = states[h]
        return ThetaImage(True, point=BoundaryPoint(head + "".join(pieces[:i]),
                                                    "".join(pieces[i:])))
    return ThetaImage(True, prefix=G.act(g, x.take(display_depth)), truncated=True)


def theta_apply(H: InverseHull, s, x: BoundaryPoint, display_depth: int = 32) -> ThetaImage:
    """Apply ``s = [p, q]``: defined on points starting with ``q``'s word, ``q γ ↦ p (g·γ)``."""
    P = H.P
    require_tree(P)
    if s is ZERO:
        raise UsageError("the zero element acts nowhere")
    beta, alpha = P.word(s.q), P.word(s.p)
    if not x.has_prefix(beta):
        return ThetaImage(False)
    img = act_point(P, _unit(P, s.p), x.drop(len(beta)), display_depth)
    if img.point is not None:
        return ThetaImage(True, point=img.point.prepend(alpha))
    return ThetaImage(True, prefix=(alpha + img.prefix)[:display_depth], truncated=True)


def sample_points(stem: str, alphabet, period_len: int = 2):
    """Points ``stem w w w ...`` with ``|w| <= period_len``; every cylinder contains one."""
    for n in range(1, period_len + 1):
        for w in words(alphabet, n):
            if _primitive_root(w) == w:
                yield BoundaryPoint(stem, w)


def minimal_stems(stems, alphabet):
    """Collapse complete sibling families into their parent, then drop covered stems."""
    current = set(stems)
    changed = True
    while changed:
        changed = False
        parents = {s[:-1] for s in current if s}
        for par in parents:
            kids = {par + x for x in alphabet}
            if par not in current and kids <= current:
                current -= kids
                current.add(par)
                changed = True
    return sorted((s for s in current if not any(t != s and s.startswith(t) for t in current)),
                  key=lambda s: (len(s), s))


def covered(stem: str, stems) -> bool:
    return any(stem.startswith(t) for t in stems)


def _fixed_stems(H, s, L, display_depth):
    """Stems of cylinders fixed pointwise by ``s``, found by walking the tree from ``s``'s source.

    A branch is pruned as soon as the image of its stem disagrees with the
    stem; a whole subtree is accepted at once when ``s`` acts on it as the
    identity on the nose (same stem, trivial restriction).
    """
    P = H.P
    alpha, beta = P.word(s.p), P.word(s.q)
    g = _unit(P, s.p)
    G = P.group
    out = []
    stack = [beta]
    while stack:
        stem = stack.pop()
        rest = stem[len(beta):]
        if g is None:
            head, res_trivial = alpha + rest, True
        else:
            img, res = G.act_restrict(g, rest)
            head, res_trivial = alpha + img, res == G.identity
        n = min(len(head), len(stem))
        if head[:n] != stem[:n]:
            continue
        if head == stem and res_trivial:
            out.append(stem)
            continue
        if len(stem) < L:
            stack.extend(stem + x for x in P.alphabet)
            continue
        if all(_point_fixed(H, s, x, display_depth) for x in sample_points(stem, P.alphabet)):
            out.append(stem)
    return out


def _point_fixed(H, s, x, display_depth):
    img = theta_apply(H, s, x, display_depth)
    if img.point is not None:
        return img.point == x
    return img.take(display_depth) == x.take(display_depth)


def fixed_sets(H: InverseHull, s, depth: int, display_depth: int = 32):
    """Cylinders fixed pointwise by ``s`` (sampled) and those trivially fixed.

    Both are returned as minimal stem lists. A stem of length ``L`` counts as
    fixed when every sampled point of its cylinder is fixed, where ``L`` is
    ``depth`` but never shorter than the words of ``s``.
    """
    P = H.P
    require_tree(P)
    if s is ZERO:
        raise UsageError("fixed sets of the zero element are empty by convention")
    L = max(depth, len(P.word(s.q)), len(P.word(s.p)))
    fixed_min = minimal_stems(_fixed_stems(H, s, L, display_depth), P.alphabet)
    trivial_min = minimal_stems([P.word(r) for r in H.j_set(s, L)], P.alphabet)
    for t in trivial_min:
        if not covered(t, fixed_min):
            raise AssertionError(f"trivially fixed stem {t!r} is not fixed")
    return {"fixed": fixed_min, "trivially_fixed": trivial_min, "depth": L}


def minimality_probe(H: InverseHull, x: BoundaryPoint, X, Y):
    """An element ``[r, 1]`` sending ``x`` into ``U(X, Y)``.

    ``r`` starts at the longest stem of ``X`` and is extended (shortest first)
    until the translate of ``x`` avoids every stem of ``Y``.
    """
    P = H.P
    require_tree(P)
    X, Y = list(X), list(Y)
    if in_basic_set(x, X, Y):
        return H.one
    base = max(X, key=len) if X else ""
    if not all(base.startswith(a) for a in X):
        raise UsageError("U(X, Y) is empty: the stems of X are not nested")
    longest = max((len(y) for y in Y), default=0)
    for t in words_upto(P.alphabet, max(0, longest - len(base))):
        r = base + t
        if in_basic_set(x.prepend(r), X, Y):
            return H.pair(from_word(P, r), P.identity)
    raise UsageError("U(X, Y) is empty: every extension of the X-stem meets Y")
