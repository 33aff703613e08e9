"""The inverse hull of a right LCM semigroup.

Nonzero elements are classes ``[p, q]`` of pairs modulo ``(p, q) ~ (pu, qu)``
for units ``u``. The product is

    [a, b][c, d] = [a b', d c']   when  bP ∩ cP = rP,  b b' = c c' = r,
    [a, b][c, d] = 0              when  bP ∩ cP = ∅,

and ``[a, b]* = [b, a]``. For Zappa-Szep instances pairs are normalized so
that the group part of ``q`` is the identity, which identifies
``[(α, g), (β, h)]`` with the triple ``(α, g h⁻¹, β)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import UsageError
from .semigroup import (DISJOINT, Meet, SemigroupInstance, core_contains, in_ideal,
                        is_foundation_set, meets, right_cancellative_probe, same_ideal)
from .verdict import Verdict, conjunction
from .instances.free import EMPTY_WORD_TOKENS, format_word


@dataclass(frozen=True)
class Zero:
    def __repr__(self):
        return "0"


ZERO = Zero()


@dataclass(frozen=True)
class Pair:
    p: object
    q: object


class InverseHull:
    """Inverse semigroup ``{[p, q]} ∪ {0}`` over a right LCM semigroup."""

    def __init__(self, P: SemigroupInstance):
        self.P = P
        self.one = Pair(P.identity, P.identity)
        self._triples = P.group is not None and P.is_tree

    # construction and normal forms

    def pair(self, p, q):
        P = self.P
        if not (P.contains(p) and P.contains(q)):
            raise UsageError(f"[{p!r}, {q!r}] has a coordinate outside {P.name}")
        return self._normalize(p, q)

    def _normalize(self, p, q):
        if self._triples:
            G = self.P.group
            h = q[1]
            if h != G.identity:
                return Pair((p[0], G.mul(p[1], G.inv(h))), (q[0], G.identity))
        return Pair(p, q)

    def triple(self, alpha: str, g, beta: str):
        if not self._triples:
            raise UsageError("triples only exist for Zappa-Szep instances")
        return self.pair((alpha, g), (beta, self.P.group.identity))

    def as_triple(self, s):
        if s is ZERO:
            return None
        return (s.p[0], s.p[1], s.q[0])

    def idempotent(self, r):
        return self.pair(r, r)

    # operations

    def mul(self, s, t):
        if s is ZERO or t is ZERO:
            return ZERO
        P = self.P
        out = P.right_lcm(s.q, t.p)
        if out is DISJOINT:
            return ZERO
        return self._normalize(P.mul(s.p, out.p_comp), P.mul(t.q, out.q_comp))

    def star(self, s):
        if s is ZERO:
            return ZERO
        return self._normalize(s.q, s.p)

    def leq(self, s, t) -> bool:
        """Natural partial order: ``s <= t`` iff ``s == t s* s``."""
        if s is ZERO:
            return True
        return s == self.mul(t, self.mul(self.star(s), s))

    def is_idempotent(self, s) -> bool:
        return s is ZERO or self.mul(s, s) == s

    def source(self, s):
        """``s* s``, the idempotent on whose cylinder ``s`` is defined."""
        return self.mul(self.star(s), s)

    def triple_mul(self, s, t):
        """Product through the explicit triple formula; used to cross-check :meth:`mul`."""
        if not self._triples:
            raise UsageError("triple formula only applies to Zappa-Szep instances")
        if s is ZERO or t is ZERO:
            return ZERO
        G = self.P.group
        alpha, g, beta = self.as_triple(s)
        gamma, h, nu = self.as_triple(t)
        if gamma.startswith(beta):
            rest = gamma[len(beta):]
            img, res = G.act_restrict(g, rest)
            return self.triple(alpha + img, G.mul(res, h), nu)
        if beta.startswith(gamma):
            rest = beta[len(gamma):]
            img, res = G.act_restrict(G.inv(h), rest)
            return self.triple(alpha, G.mul(g, G.inv(res)), nu + img)
        return ZERO

    # enumeration and I/O

    def size(self, s) -> int:
        if s is ZERO:
            return 0
        return self.P.size(s.p) + self.P.size(s.q)

    def sort_key(self, s):
        if s is ZERO:
            return (-1,)
        return (self.size(s), self.P.sort_key(s.p), self.P.sort_key(s.q))

    def elements(self, size: int):
        """Nonzero elements of size at most ``size``, in a deterministic order."""
        P = self.P
        seen = set()
        for p in P.elements(size):
            rest = size - P.size(p)
            qs = P.ideal_reps(rest) if self._triples else P.elements(rest)
            for q in qs:
                if P.size(q) > rest:
                    continue
                seen.add(self._normalize(p, q))
        return sorted(seen, key=self.sort_key)

    def idempotents(self, bound: int):
        out = []
        for r in self.P.ideal_reps(bound):
            e = self.idempotent(r)
            if e not in out:
                out.append(e)
        return out

    def format(self, s) -> str:
        if s is ZERO:
            return "0"
        if self._triples:
            alpha, g, beta = self.as_triple(s)
            return f"({format_word(alpha)},{self.P.group.format(g)},{format_word(beta)})"
        return f"[{self.P.format(s.p)},{self.P.format(s.q)}]"

    def parse(self, text: str):
        body = text.strip()
        if body == "0":
            return ZERO
        if len(body) < 2 or (body[0], body[-1]) not in (("[", "]"), ("(", ")")):
            raise UsageError(f"cannot read hull element {text!r}: expected [p,q] or (α,g,β)")
        parts = _split_top(body[1:-1])
        if len(parts) == 3 and self._triples:
            alpha, g, beta = (x.strip() for x in parts)
            alpha = "" if alpha in EMPTY_WORD_TOKENS else alpha
            beta = "" if beta in EMPTY_WORD_TOKENS else beta
            for w in (alpha, beta):
                if not all(x in self.P.alphabet for x in w):
                    raise UsageError(f"{w!r} is not a word over {''.join(self.P.alphabet)}")
            return self.triple(alpha, self.P.group.parse(g), beta)
        if len(parts) != 2:
            raise UsageError(f"cannot read hull element {text!r}")
        return self.pair(self.P.parse(parts[0]), self.P.parse(parts[1]))

    # structural computations

    def starnot_identity(self, p, q):
        """``[1, p][q, 1]``, checked against ``[p', q']`` from the right LCM of ``p, q``."""
        P = self.P
        prod = self.mul(self.pair(P.identity, p), self.pair(q, P.identity))
        out = P.right_lcm(p, q)
        expected = ZERO if out is DISJOINT else self._normalize(out.p_comp, out.q_comp)
        if prod != expected:
            raise AssertionError(f"[1,p][q,1] = {self.format(prod)}, expected {self.format(expected)}")
        return prod

    def j_set(self, s, bound: int):
        """Ideals ``rP`` with ``[r, r] <= s``, found as ``r = p k = q k`` with ``|r| <= bound``."""
        if s is ZERO:
            raise UsageError("j_set is defined for nonzero elements")
        P = self.P
        out = []
        for k in P.ideal_reps(bound):
            r = P.mul(s.p, k)
            if P.length(r) > bound or r != P.mul(s.q, k):
                continue
            if not any(same_ideal(P, r, x) for x in out):
                out.append(r)
        return out

    def j_cover(self, s, bound: int) -> Verdict:
        """A finite set of ideals generating ``J_s``, seen from below the bound.

        The minimal members of ``J_s`` are offered as generators; the answer is
        unknown if a new minimal member still appears at the bound itself.
        """
        P = self.P
        J = self.j_set(s, bound)
        gens = P.equalizer_generators(s.p, s.q, bound)
        if gens is not None:
            stray = [r for r in J if not any(in_ideal(P, f, r) for f in gens)]
            if stray:
                raise AssertionError(f"{P.format(stray[0])} lies outside the known generators")
            return Verdict.holds(gens, exact=True, reason="generated by minimal strongly fixed words")
        F = [r for r in J if not any(f != r and in_ideal(P, f, r) for f in J)]
        floor = max(P.length(s.p), P.length(s.q))
        for r in F:
            if P.length(r) == bound and P.length(r) > floor:
                return Verdict.unknown(bound, f"{P.format(r)} is a new generator at the bound",
                                       witness=r)
        return Verdict.holds(F, bound=bound)

    def hausdorff_probe(self, bound: int, size_cap: int = 2) -> Verdict:
        """Finite covers of ``J_s`` for every nonzero ``s`` of size at most ``size_cap``.

        This is the hull-side counterpart of :func:`rlcm.semigroup.condition_H`.
        """
        if bound <= 0:
            return Verdict.unknown(0, "empty search")
        witnesses = {}
        for s in self.elements(size_cap):
            v = self.j_cover(s, bound)
            if not v.is_holds:
                return Verdict.unknown(bound, v.reason, witness=s)
            if v.witness:
                witnesses[s] = v.witness
        return Verdict.holds(witnesses, bound=bound, reason="finite covers of J-sets")

    def _require_idempotent(self, *elements):
        for e in elements:
            if e is ZERO or not self.is_idempotent(e):
                raise UsageError(f"{self.format(e)} is not a nonzero idempotent")

    def is_cover(self, F, x, bound: int) -> Verdict:
        """Does every nonzero idempotent below ``x`` meet some member of ``F``?"""
        F = list(F)
        self._require_idempotent(x, *F)
        for f in F:
            if not self.leq(f, x):
                raise UsageError(f"{self.format(f)} is not below {self.format(x)}")
        P = self.P
        base = x.p
        if P.is_tree and F:
            depth = max(P.length(f.p) for f in F) - P.length(base)
            reps = [P.mul(base, k) for k in P.ideal_reps(max(depth, 0))
                    if P.length(k) == max(depth, 0)]
            exact = True
        else:
            reps = [P.mul(base, k) for k in P.ideal_reps(bound)]
            exact = False
        for r in reps:
            if not any(meets(P, f.p, r) for f in F):
                return Verdict.fails(self.idempotent(r), bound=None if exact else bound,
                                     reason="orthogonal to every member")
        if exact:
            return Verdict.holds(F, exact=True, reason="prefix tree, decided at the deepest member")
        return Verdict.holds(F, bound=bound)

    def weakly_fixed(self, k, s, bound: int):
        """Is ``[qk, qk]`` fixed (``pk == qk``) or weakly fixed (``qkaP ∩ pkaP ≠ ∅`` for all ``a``)?"""
        P = self.P
        if s is ZERO:
            raise UsageError("weakly_fixed needs a nonzero element")
        if not P.contains(k):
            raise UsageError(f"{k!r} is not an element of {P.name}")
        pk, qk = P.mul(s.p, k), P.mul(s.q, k)
        fixed = pk == qk
        if fixed:
            return {"fixed": True, "weakly_fixed": Verdict.holds(exact=True, reason="fixed")}
        if P.all_in_core:
            return {"fixed": False,
                    "weakly_fixed": Verdict.holds(exact=True, reason="all principal ideals meet")}
        for a in P.ideal_reps(bound):
            if not meets(P, P.mul(pk, a), P.mul(qk, a)):
                return {"fixed": False,
                        "weakly_fixed": Verdict.fails(a, bound=bound, reason="disjoint translates")}
        return {"fixed": False, "weakly_fixed": Verdict.holds(bound=bound)}

    def condition_EP(self, s, bound: int, f_len: int = 2) -> Verdict:
        """For every weakly fixed ``[qk, qk]`` find a foundation set ``F`` with ``qkf == pkf``.

        Candidate foundation sets are drawn from elements of length at most
        ``f_len``; not finding one gives an unknown verdict, except in a
        cancellative instance where ``pk != qk`` rules every candidate out.
        """
        if s is ZERO:
            raise UsageError("condition (EP) is stated for nonzero elements")
        P = self.P
        if s.p == s.q:
            return Verdict.holds({P.identity: [P.identity]}, exact=True,
                                 reason="idempotent, F = {1}")
        witnesses = {}
        for k in P.ideal_reps(bound):
            wf = self.weakly_fixed(k, s, bound)
            if wf["weakly_fixed"].is_fails:
                continue
            if wf["fixed"]:
                witnesses[k] = [P.identity]
                continue
            pk, qk = P.mul(s.p, k), P.mul(s.q, k)
            cands = [f for f in P.ideal_reps(f_len) if P.mul(pk, f) == P.mul(qk, f)]
            F = [f for f in cands if not any(g != f and in_ideal(P, g, f) for g in cands)]
            found = bool(F) and is_foundation_set(P, F, bound).is_holds
            if found:
                witnesses[k] = F
                continue
            if P.cancellative and wf["weakly_fixed"].exact:
                return Verdict.fails(k, reason="weakly fixed but pk != qk in a cancellative semigroup")
            return Verdict.unknown(bound, f"no foundation set found for k = {P.format(k)}",
                                   witness=k)
        return Verdict.holds(witnesses, bound=bound,
                             reason="no weakly fixed idempotents" if not witnesses else "")

    def hull_core_contains(self, s, bound: int):
        """Membership in both core notions.

        ``lcm_core``: both coordinates lie in the core of ``P``.
        ``appendix_core``: ``s*s e`` and ``s s* e`` are nonzero for every nonzero idempotent ``e``.
        """
        if s is ZERO:
            raise UsageError("core membership is asked of nonzero elements")
        P = self.P
        lcm = conjunction([core_contains(P, s.p, bound), core_contains(P, s.q, bound)])
        src, rng = self.source(s), self.mul(s, self.star(s))
        wit = {}
        for e in self.idempotents(bound):
            if "s*s" not in wit and self.mul(src, e) is ZERO:
                wit["s*s"] = e
            if "ss*" not in wit and self.mul(rng, e) is ZERO:
                wit["ss*"] = e
            if len(wit) == 2:
                break
        if wit:
            app = Verdict.fails(wit, bound=bound, reason="orthogonal idempotent")
        elif P.all_in_core:
            app = Verdict.holds(exact=True, reason="all idempotents meet")
        else:
            app = Verdict.holds(bound=bound)
        agree = None if (lcm.is_unknown or app.is_unknown) else lcm.status == app.status
        return {"lcm_core": lcm, "appendix_core": app, "agree": agree}

    def e_star_unitary_probe(self, bound: int) -> Verdict:
        """Search for a nonzero idempotent below a non-idempotent element."""
        if bound <= 0:
            return Verdict.unknown(0, "empty search")
        P = self.P
        if P.cancellative:
            return Verdict.holds(exact=True, reason="cancellative")
        for s in self.elements(bound):
            if s.p == s.q:
                continue
            J = self.j_set(s, bound)
            if J:
                return Verdict.fails((self.idempotent(J[0]), s), bound=bound,
                                     reason="idempotent below a non-idempotent")
        cancel = right_cancellative_probe(P, bound)
        reason = "" if cancel.is_holds else "disagrees with the cancellation probe"
        return Verdict.holds(bound=bound, reason=reason)

    def locally_contracting_witness(self, r, p, q):
        """Witness ``a = f1 = rp``, ``f0 = rprq`` with ``[f0,f0][a,1][f1,f1] == 0``."""
        P = self.P
        for x in (r, p, q):
            if not P.contains(x):
                raise UsageError(f"{x!r} is not an element of {P.name}")
        if meets(P, p, q):
            raise UsageError(f"{P.format(p)}P and {P.format(q)}P intersect")
        a = f1 = P.mul(r, p)
        f0 = P.mul(P.mul(f1, r), q)
        product = self.mul(self.mul(self.idempotent(f0), self.pair(a, P.identity)),
                           self.idempotent(f1))
        conditions = {
            "f0P ⊂ f1P": in_ideal(P, f1, f0),
            "f1P ⊂ rP": in_ideal(P, r, f1),
            "a f1P ⊂ f1P": in_ideal(P, f1, P.mul(a, f1)),
        }
        return LocallyContracting(f0, f1, a, product is ZERO, conditions)


@dataclass(frozen=True)
class LocallyContracting:
    f0: object
    f1: object
    a: object
    product_is_zero: bool
    conditions: dict

    @property
    def ok(self) -> bool:
        return self.product_is_zero and all(self.conditions.values())


def _split_top(body: str):
    """Split at commas that are not nested inside brackets."""
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts
