"""Right LCM semigroups: the instance interface and the decision procedures.

Every question that quantifies over the whole (infinite) semigroup returns a
:class:`~rlcm.verdict.Verdict`. ``Holds`` with ``exact=True`` is reserved for
answers backed by an instance-supplied argument; everything else records the
search bound it was established at.
"""
from __future__ import annotations

import itertools
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterable, Iterator

from .errors import UsageError
from .verdict import Verdict

Element = Any


@dataclass(frozen=True)
class Disjoint:
    def __repr__(self):
        return "Disjoint"


DISJOINT = Disjoint()


@dataclass(frozen=True)
class Meet:
    """``pP ∩ qP = rP`` with ``p * p_comp == r == q * q_comp``."""

    r: Element
    p_comp: Element
    q_comp: Element


class SemigroupInstance(ABC):
    """A concrete right LCM semigroup with canonical normal forms.

    Subclasses fix the element representation. The class attributes below
    are certificates: they are only set when the instance can justify them
    for the whole semigroup, not just for the enumerated part.
    """

    name: str = "P"
    identity: Element = None
    #: principal right ideals are nested or disjoint
    is_tree: bool = False
    #: two-sided cancellativity is proven for the instance
    cancellative: bool = False
    right_cancellative: bool = False
    #: every pair of principal right ideals meets, i.e. P equals its core
    all_in_core: bool = False
    #: group of units acting on words, for word-based tree instances
    group = None
    alphabet: tuple = ()

    @abstractmethod
    def mul(self, p, q): ...

    @abstractmethod
    def right_lcm(self, p, q) -> Disjoint | Meet: ...

    @abstractmethod
    def unit_between(self, p, q):
        """A unit ``u`` with ``p * u == q``, or ``None``."""

    @abstractmethod
    def divides(self, p, m):
        """The cofactor ``c`` with ``p * c == m`` if ``m`` lies in ``pP``, else ``None``."""

    @abstractmethod
    def elements(self, bound: int) -> Iterator:
        """Elements of size at most ``bound`` in enumeration order."""

    @abstractmethod
    def ideal_reps(self, bound: int) -> Iterator:
        """One representative per principal right ideal, of length at most ``bound``."""

    @abstractmethod
    def contains(self, p) -> bool: ...

    @abstractmethod
    def format(self, p) -> str: ...

    @abstractmethod
    def parse(self, text: str): ...

    def length(self, p) -> int:
        return self.size(p)

    @abstractmethod
    def size(self, p) -> int: ...

    def units(self, bound: int) -> Iterator:
        for p in self.elements(bound):
            if self.is_unit(p):
                yield p

    def is_unit(self, p) -> bool:
        return self.unit_between(p, self.identity) is not None

    def word(self, p) -> str:
        """Word part of ``p``; only tree instances define this."""
        raise UsageError(f"{self.name} is not a word-based tree instance")

    def unit_part(self, p):
        return None

    def describe(self) -> str:
        return self.name

    # instance-specific shortcuts; ``None`` means "no shortcut"
    def core_shortcut(self, p) -> Verdict | None:
        return None

    def condition_H_shortcut(self, bound: int) -> Verdict | None:
        return None

    def equalizer_generators(self, p, q, bound: int) -> list | None:
        """Exact generators of ``{pk : pk == qk}`` when the instance knows them."""
        return None

    def foundation_shortcut(self, F) -> Verdict | None:
        if not self.is_tree:
            return None
        m = max(self.length(f) for f in F)
        for p in self.ideal_reps(m):
            if self.length(p) != m:
                continue
            if not any(isinstance(self.right_lcm(f, p), Meet) for f in F):
                return Verdict.fails(p, reason="no member of F meets this element")
        return Verdict.holds(sorted(F, key=self.sort_key), exact=True,
                             reason=f"prefix tree, all words of length {m} checked")

    def sort_key(self, p):
        return (self.size(p), self.format(p))


def _check(P: SemigroupInstance, *elements):
    for p in elements:
        if not P.contains(p):
            raise UsageError(f"{p!r} is not an element of {P.name}")


def mul(P: SemigroupInstance, p, q):
    _check(P, p, q)
    return P.mul(p, q)


def right_lcm(P: SemigroupInstance, p, q):
    _check(P, p, q)
    return P.right_lcm(p, q)


def ideal_eq(P: SemigroupInstance, p, q) -> Verdict:
    """Decide ``pP == qP`` by producing a unit ``u`` with ``p u == q``."""
    _check(P, p, q)
    u = P.unit_between(p, q)
    if u is None:
        return Verdict.fails((p, q), reason="no unit carries one to the other")
    return Verdict.holds(u, exact=True)


def in_ideal(P: SemigroupInstance, p, m) -> bool:
    return P.divides(p, m) is not None


def same_ideal(P: SemigroupInstance, p, q) -> bool:
    return P.unit_between(p, q) is not None


def meets(P: SemigroupInstance, p, q) -> bool:
    return isinstance(P.right_lcm(p, q), Meet)


def find_disjoint_pair(P: SemigroupInstance, bound: int):
    reps = list(P.ideal_reps(bound))
    for p, q in itertools.combinations(reps, 2):
        if not meets(P, p, q):
            return p, q
    return None


def core_contains(P: SemigroupInstance, p, bound: int) -> Verdict:
    """Is ``p`` in the core, i.e. does ``pP`` meet every principal right ideal?"""
    _check(P, p)
    shortcut = P.core_shortcut(p)
    if shortcut is not None:
        return shortcut
    for q in P.ideal_reps(bound):
        if not meets(P, p, q):
            return Verdict.fails(q, bound=bound, reason="disjoint principal ideal")
    return Verdict.unknown(bound, "no disjoint ideal found")


def is_foundation_set(P: SemigroupInstance, F: Iterable, bound: int) -> Verdict:
    F = list(F)
    if not F:
        raise UsageError("a foundation set must be nonempty")
    _check(P, *F)
    shortcut = P.foundation_shortcut(F)
    if shortcut is not None:
        return shortcut
    for p in P.ideal_reps(bound):
        if not any(meets(P, f, p) for f in F):
            return Verdict.fails(p, bound=bound, reason="no member of F meets this element")
    return Verdict.holds(F, bound=bound)


def equalizer(P: SemigroupInstance, p, q, bound: int) -> list:
    """Ideal representatives ``b`` of length at most ``bound`` with ``p b == q b``."""
    return [b for b in P.ideal_reps(bound) if P.mul(p, b) == P.mul(q, b)]


def condition_H(P: SemigroupInstance, bound: int) -> Verdict:
    """Search for finite covers of the equalizer sets ``{b : pb = qb}``.

    For each meeting pair up to the bound, the members of the equalizer found
    strictly below the bound are offered as the finite set; it is accepted if
    every member found at the bound meets one of them.
    """
    if bound <= 0:
        return Verdict.unknown(0, "empty search")
    shortcut = P.condition_H_shortcut(bound)
    if shortcut is not None:
        return shortcut
    if P.right_cancellative:
        return Verdict.holds({}, exact=True, reason="right cancellative")
    witnesses = {}
    elems = list(P.elements(bound))
    for p, q in itertools.permutations(elems, 2):
        B = equalizer(P, p, q, bound)
        if not B:
            continue
        F = [b for b in B if P.length(b) < bound]
        if not F:
            return Verdict.unknown(bound, f"{P.format(p)}, {P.format(q)} first meet at the bound")
        for b in B:
            if not any(meets(P, f, b) for f in F):
                return Verdict.unknown(
                    bound, f"equalizer of {P.format(p)}, {P.format(q)} still growing")
        witnesses[(p, q)] = _minimal_reps(P, F)
    return Verdict.holds(witnesses, bound=bound, reason="finite covers found")


def _minimal_reps(P, F):
    """Members of ``F`` whose ideal is not strictly inside another member's."""
    out = []
    for f in F:
        if not any(g != f and in_ideal(P, g, f) and not same_ideal(P, g, f) for g in F):
            out.append(f)
    return out


def right_cancellative_probe(P: SemigroupInstance, bound: int) -> Verdict:
    """Search for ``p != q`` and ``b`` with ``p b == q b``."""
    if P.right_cancellative:
        return Verdict.holds(exact=True, reason="right cancellative")
    if bound <= 0:
        return Verdict.unknown(0, "empty search")
    elems = list(P.elements(bound))
    bs = list(P.ideal_reps(bound))
    for p, q in itertools.combinations(elems, 2):
        for b in bs:
            if P.mul(p, b) == P.mul(q, b):
                return Verdict.fails((p, q, b), bound=bound, reason="p b == q b with p != q")
    return Verdict.holds(bound=bound)


def axioms_probe(P: SemigroupInstance, samples: int = 200, bound: int = 3,
                 seed: int = 0) -> Verdict:
    """Exhaustive-at-bound plus randomized check of the right LCM axioms.

    Checked: identity, associativity, left cancellativity, correctness of
    ``right_lcm`` against sampled common multiples, the translation identity
    ``a(pP ∩ qP) = apP ∩ aqP`` and unit invariance of ``right_lcm``.
    The counterexample of a failure is ``(law, inputs)``.
    """
    if bound <= 0:
        return Verdict.unknown(0, "empty search")
    rng = random.Random(seed)
    elems = list(P.elements(bound))
    small = [p for p in elems if P.size(p) <= max(1, bound - 1)]
    units = [u for u in small if P.is_unit(u)][:6]

    for p in elems:
        if P.mul(P.identity, p) != p or P.mul(p, P.identity) != p:
            return Verdict.fails(("identity", (p,)), bound=bound)

    triples = list(itertools.product(small, repeat=3))
    triples += [tuple(rng.choice(elems) for _ in range(3)) for _ in range(samples)]
    for p, q, r in triples:
        if P.mul(P.mul(p, q), r) != P.mul(p, P.mul(q, r)):
            return Verdict.fails(("associativity", (p, q, r)), bound=bound)

    for p in elems:
        seen = {}
        for q in small:
            pq = P.mul(p, q)
            if pq in seen and seen[pq] != q:
                return Verdict.fails(("left cancellativity", (p, seen[pq], q)), bound=bound)
            seen[pq] = q

    pairs = list(itertools.product(small, repeat=2))
    pairs += [(rng.choice(elems), rng.choice(elems)) for _ in range(samples)]
    for p, q in pairs:
        out = P.right_lcm(p, q)
        if isinstance(out, Meet):
            if P.mul(p, out.p_comp) != out.r or P.mul(q, out.q_comp) != out.r:
                return Verdict.fails(("lcm complements", (p, q)), bound=bound)
        for x in small:
            m = P.mul(p, x)
            if P.divides(q, m) is None:
                continue
            if not isinstance(out, Meet) or P.divides(out.r, m) is None:
                return Verdict.fails(("lcm divides common multiples", (p, q, x)), bound=bound)
        a = rng.choice(elems)
        translated = P.right_lcm(P.mul(a, p), P.mul(a, q))
        if isinstance(out, Meet) != isinstance(translated, Meet) or (
                isinstance(out, Meet) and not same_ideal(P, translated.r, P.mul(a, out.r))):
            return Verdict.fails(("translation identity", (a, p, q)), bound=bound)
        for u, v in itertools.product(units, repeat=2):
            shifted = P.right_lcm(P.mul(p, u), P.mul(q, v))
            if isinstance(out, Meet) != isinstance(shifted, Meet) or (
                    isinstance(out, Meet) and not same_ideal(P, shifted.r, out.r)):
                return Verdict.fails(("unit invariance", (p, q, u, v)), bound=bound)
    return Verdict.holds(bound=bound, reason=f"{len(triples)} triples, {len(pairs)} pairs")
