"""Free monoids X* and free abelian monoids N^k."""
from __future__ import annotations

import itertools

from ..errors import UsageError
from ..semigroup import DISJOINT, Meet, SemigroupInstance
from ..verdict import Verdict

EMPTY_WORD_TOKENS = ("", "ε", "∅")


def words(alphabet, n):
    """All words of length ``n`` in lexicographic order of ``alphabet``."""
    return ("".join(t) for t in itertools.product(alphabet, repeat=n))


def words_upto(alphabet, bound):
    for n in range(bound + 1):
        yield from words(alphabet, n)


def format_word(w: str) -> str:
    return w if w else "ε"


class FreeMonoid(SemigroupInstance):
    """Words over a finite alphabet of single-character letters under concatenation."""

    is_tree = True
    cancellative = True
    right_cancellative = True

    def __init__(self, alphabet):
        alphabet = tuple(alphabet)
        if not alphabet:
            raise UsageError("the alphabet must be nonempty")
        if any(len(x) != 1 for x in alphabet) or len(set(alphabet)) != len(alphabet):
            raise UsageError(f"letters must be distinct single characters, got {alphabet!r}")
        self.alphabet = alphabet
        self.identity = ""
        self.name = "free:" + "".join(alphabet)
        self.all_in_core = len(alphabet) == 1

    def describe(self):
        return f"free monoid on {{{','.join(self.alphabet)}}}"

    def mul(self, p, q):
        return p + q

    def right_lcm(self, p, q):
        if q.startswith(p):
            return Meet(q, q[len(p):], "")
        if p.startswith(q):
            return Meet(p, "", p[len(q):])
        return DISJOINT

    def unit_between(self, p, q):
        return "" if p == q else None

    def divides(self, p, m):
        return m[len(p):] if m.startswith(p) else None

    def elements(self, bound):
        return words_upto(self.alphabet, bound)

    ideal_reps = elements

    def contains(self, p):
        return isinstance(p, str) and all(x in self.alphabet for x in p)

    def size(self, p):
        return len(p)

    def word(self, p):
        return p

    def format(self, p):
        return format_word(p)

    def parse(self, text):
        text = text.strip()
        if text in EMPTY_WORD_TOKENS:
            return ""
        if not self.contains(text):
            raise UsageError(f"{text!r} is not a word over {''.join(self.alphabet)}")
        return text

    def sort_key(self, p):
        return (len(p), [self.alphabet.index(x) for x in p])

    def core_shortcut(self, p):
        if len(self.alphabet) == 1:
            return Verdict.holds(exact=True, reason="unary alphabet, ideals totally ordered")
        if p == "":
            return Verdict.holds(exact=True, reason="the core of a free monoid is {ε}")
        other = next(x for x in self.alphabet if x != p[0])
        return Verdict.fails(other, reason="words with different first letters are disjoint")


class FreeAbelianMonoid(SemigroupInstance):
    """N^k under addition; the right LCM is the componentwise maximum."""

    cancellative = True
    right_cancellative = True
    all_in_core = True

    def __init__(self, k: int):
        if k < 1:
            raise UsageError("rank must be at least 1")
        self.k = k
        self.identity = (0,) * k
        self.name = f"nat:{k}"

    def describe(self):
        return f"free abelian monoid N^{self.k}"

    def mul(self, p, q):
        return tuple(a + b for a, b in zip(p, q))

    def right_lcm(self, p, q):
        r = tuple(max(a, b) for a, b in zip(p, q))
        return Meet(r, tuple(c - a for c, a in zip(r, p)), tuple(c - b for c, b in zip(r, q)))

    def unit_between(self, p, q):
        return self.identity if p == q else None

    def divides(self, p, m):
        c = tuple(b - a for a, b in zip(p, m))
        return c if all(x >= 0 for x in c) else None

    def elements(self, bound):
        for n in range(bound + 1):
            yield from sorted(_compositions(n, self.k), reverse=True)

    ideal_reps = elements

    def contains(self, p):
        return (isinstance(p, tuple) and len(p) == self.k
                and all(isinstance(a, int) and a >= 0 for a in p))

    def size(self, p):
        return sum(p)

    def format(self, p):
        return "(" + ",".join(map(str, p)) + ")"

    def parse(self, text):
        body = text.strip().strip("()")
        try:
            p = tuple(int(t) for t in body.split(",")) if body else ()
        except ValueError:
            raise UsageError(f"cannot read {text!r} as a vector") from None
        if not self.contains(p):
            raise UsageError(f"{text!r} is not an element of N^{self.k}")
        return p

    def sort_key(self, p):
        return (sum(p), tuple(-a for a in p))

    def core_shortcut(self, p):
        return Verdict.holds(exact=True, reason="componentwise maximum always exists")


def _compositions(n, k):
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest
