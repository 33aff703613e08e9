"""Groups acting self-similarly on words.

Each group knows how a single element acts on a single letter
(``act_letter``) and what it restricts to there (``restrict_letter``);
everything else is derived from the recursion ``g(xw) = (g.x)(g|_x . w)``.

Three word-problem oracles are provided:

* :class:`IntegerPowerGroup` -- the infinite cyclic group, elements are exponents;
* :class:`FiniteTableGroup` -- a finite group given by its multiplication table;
* :class:`PortraitGroup` -- reduced words in the generators, with equality decided
  by comparing actions on all words of a fixed length (sound only up to that depth).
"""
from __future__ import annotations

import itertools
import re
from collections import deque
from functools import lru_cache

from ..errors import ConstructionError, UsageError

_TOKEN = re.compile(r"\s*(\^\s*-?\d+)?")


def parse_group_word(text: str, names, identity_names=("e", "1")):
    """Split ``text`` into ``(name, exponent)`` pairs.

    Names are matched longest-first, so ``ab^-1`` over names ``a, b`` reads as
    ``[("a", 1), ("b", -1)]``. Identity tokens contribute nothing.
    """
    names = sorted(set(names) | set(identity_names), key=len, reverse=True)
    out = []
    i = 0
    text = text.strip()
    while i < len(text):
        if text[i] in " *·":
            i += 1
            continue
        for name in names:
            if text.startswith(name, i):
                break
        else:
            raise UsageError(f"unknown group symbol at {text[i:]!r}")
        i += len(name)
        m = _TOKEN.match(text, i)
        exp = 1
        if m.group(1):
            exp = int(m.group(1)[1:].strip())
        i = m.end()
        if name not in identity_names and exp:
            out.append((name, exp))
    return out


class SelfSimilarGroup:
    """Shared machinery: word action, restriction and letter-level bookkeeping."""

    exact = True
    identity = None
    alphabet: tuple = ()

    def act_letter(self, g, x): ...
    def restrict_letter(self, g, x): ...
    def mul(self, g, h): ...
    def inv(self, g): ...
    def elements(self, bound): ...
    def size(self, g) -> int: ...
    def format(self, g) -> str: ...
    def parse(self, text): ...
    def contains(self, g) -> bool: ...

    def _init_cache(self):
        self.act_restrict = lru_cache(maxsize=1 << 17)(self._act_restrict)

    def _act_restrict(self, g, word):
        out = []
        for x in word:
            out.append(self.act_letter(g, x))
            g = self.restrict_letter(g, x)
        return "".join(out), g

    def act(self, g, word: str) -> str:
        return self.act_restrict(g, word)[0]

    def restrict(self, g, word: str):
        return self.act_restrict(g, word)[1]

    def sort_key(self, g):
        return (self.size(g), self.format(g))


class IntegerPowerGroup(SelfSimilarGroup):
    """The infinite cyclic group generated by one letter map with integer restrictions."""

    def __init__(self, gen: str, alphabet, letter_map: dict, restriction: dict):
        self.gen = gen
        self.alphabet = tuple(alphabet)
        self.identity = 0
        self._fwd = dict(letter_map)
        self._res = dict(restriction)
        _require_bijection(gen, self.alphabet, self._fwd)
        self._bwd = {y: x for x, y in self._fwd.items()}
        self._init_cache()
        self._letter = lru_cache(maxsize=None)(self._letter_uncached)

    def _letter_uncached(self, m, x):
        r = 0
        if m >= 0:
            for _ in range(m):
                r += self._res[x]
                x = self._fwd[x]
        else:
            for _ in range(-m):
                x = self._bwd[x]
                r -= self._res[x]
        return x, r

    def act_letter(self, g, x):
        return self._letter(g, x)[0]

    def restrict_letter(self, g, x):
        return self._letter(g, x)[1]

    def mul(self, g, h):
        return g + h

    def inv(self, g):
        return -g

    def elements(self, bound):
        yield 0
        for m in range(1, bound + 1):
            yield m
            yield -m

    def size(self, g):
        return abs(g)

    def sort_key(self, g):
        return (abs(g), g < 0)

    def contains(self, g):
        return isinstance(g, int) and not isinstance(g, bool)

    def format(self, g):
        if g == 0:
            return "e"
        if g == 1:
            return self.gen
        return f"{self.gen}^{g}"

    def parse(self, text):
        return sum(exp for _, exp in parse_group_word(text, [self.gen]))


class FiniteTableGroup(SelfSimilarGroup):
    """A finite group from an explicit table; generator rules are extended by ZS2/ZS8."""

    def __init__(self, names, table: dict, alphabet, rules: dict):
        self.names = list(names)
        self.alphabet = tuple(alphabet)
        idx = {n: i for i, n in enumerate(self.names)}
        n = len(self.names)
        self._idx = idx
        self._table = [[None] * n for _ in range(n)]
        for (a, b), c in table.items():
            self._table[idx[a]][idx[b]] = idx[c]
        if any(c is None for row in self._table for c in row):
            raise UsageError("multiplication table is incomplete")
        ids = [i for i in range(n) if all(self._table[i][j] == j for j in range(n))]
        if not ids:
            raise UsageError("multiplication table has no identity")
        self.identity = ids[0]
        self._inv = [next(j for j in range(n) if self._table[i][j] == self.identity)
                     for i in range(n)]
        self.generators = [idx[g] for g in rules]
        act = {self.identity: {x: x for x in self.alphabet}}
        res = {self.identity: {x: self.identity for x in self.alphabet}}
        gen_act, gen_res = {}, {}
        for g, rule in rules.items():
            i = idx[g]
            gen_act[i] = {x: y for x, (y, _) in rule.items()}
            _require_bijection(g, self.alphabet, gen_act[i])
            gen_res[i] = {x: self._eval(w) for x, (_, w) in rule.items()}
        # breadth-first: every element as (generator) * (shorter element)
        self._dist = {self.identity: 0}
        queue = deque([self.identity])
        while queue:
            h = queue.popleft()
            for a in self.generators:
                g = self._table[a][h]
                if g in act:
                    continue
                act[g] = {x: gen_act[a][act[h][x]] for x in self.alphabet}
                res[g] = {x: self._table[gen_res[a][act[h][x]]][res[h][x]]
                          for x in self.alphabet}
                self._dist[g] = self._dist[h] + 1
                queue.append(g)
        if len(act) != n:
            raise UsageError("the generators with rules do not generate the whole table")
        self._act, self._restr = act, res
        self._init_cache()

    def _eval(self, word):
        g = self.identity
        for name, exp in parse_group_word(word, self.names):
            step = self._idx[name] if exp > 0 else self._inv[self._idx[name]]
            for _ in range(abs(exp)):
                g = self._table[g][step]
        return g

    def act_letter(self, g, x):
        return self._act[g][x]

    def restrict_letter(self, g, x):
        return self._restr[g][x]

    def mul(self, g, h):
        return self._table[g][h]

    def inv(self, g):
        return self._inv[g]

    def elements(self, bound):
        return iter(sorted((g for g, d in self._dist.items() if d <= bound),
                           key=lambda g: (self._dist[g], g)))

    def size(self, g):
        return self._dist[g]

    def sort_key(self, g):
        return (self._dist[g], g)

    def contains(self, g):
        return isinstance(g, int) and 0 <= g < len(self.names)

    def format(self, g):
        return self.names[g]

    def parse(self, text):
        return self._eval(text)


class PortraitElement:
    """A reduced generator word whose equality is decided by its portrait."""

    __slots__ = ("word", "group", "_key")

    def __init__(self, word, group):
        self.word = word
        self.group = group
        self._key = None

    @property
    def key(self):
        if self._key is None:
            self._key = self.group._portrait(self.word)
        return self._key

    def __eq__(self, other):
        return isinstance(other, PortraitElement) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"PortraitElement({self.group.format(self)})"


class PortraitGroup(SelfSimilarGroup):
    """Group generated by letter rules, elements compared by action on ``X^(2*depth)``.

    Two words with the same action to that depth are identified, so anything
    that depends on equality is only as good as the depth.
    """

    exact = False

    def __init__(self, alphabet, rules: dict, depth: int):
        self.alphabet = tuple(alphabet)
        self.depth = depth
        self.gens = list(rules)
        self._fwd, self._res = {}, {}
        for g, rule in rules.items():
            self._fwd[g] = {x: y for x, (y, _) in rule.items()}
            _require_bijection(g, self.alphabet, self._fwd[g])
        self._bwd = {g: {y: x for x, y in m.items()} for g, m in self._fwd.items()}
        for g, rule in rules.items():
            self._res[g] = {x: _reduce(tuple(parse_group_word(w, self.gens)))
                            for x, (_, w) in rule.items()}
        self._probe_words = ["".join(t) for t in itertools.product(self.alphabet, repeat=2 * depth)]
        self._portrait = lru_cache(maxsize=1 << 14)(self._portrait_uncached)
        self.identity = PortraitElement((), self)
        self._init_cache()

    def _letter_word(self, word, x):
        restr = ()
        for name, exp in reversed(word):
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                if step > 0:
                    r = self._res[name][x]
                    x = self._fwd[name][x]
                else:
                    x = self._bwd[name][x]
                    r = _inverse(self._res[name][x])
                restr = _reduce(r + restr)
        return x, restr

    def _portrait_uncached(self, word):
        out = []
        for w in self._probe_words:
            img = []
            for x in w:
                y, word = self._letter_word(word, x)
                img.append(y)
            out.append("".join(img))
        return tuple(out)

    def act_letter(self, g, x):
        return self._letter_word(g.word, x)[0]

    def restrict_letter(self, g, x):
        return PortraitElement(self._letter_word(g.word, x)[1], self)

    def mul(self, g, h):
        return PortraitElement(_reduce(g.word + h.word), self)

    def inv(self, g):
        return PortraitElement(_inverse(g.word), self)

    def elements(self, bound):
        seen = set()
        letters = [(g, 1) for g in self.gens] + [(g, -1) for g in self.gens]
        for n in range(bound + 1):
            for t in itertools.product(letters, repeat=n):
                word = _reduce(t)
                if len(word) != n:
                    continue
                el = PortraitElement(word, self)
                if el not in seen:
                    seen.add(el)
                    yield el

    def size(self, g):
        return sum(abs(e) for _, e in g.word)

    def contains(self, g):
        return isinstance(g, PortraitElement) and g.group is self

    def format(self, g):
        if not g.word:
            return "e"
        return "".join(n if e == 1 else f"{n}^{e}" for n, e in g.word)

    def parse(self, text):
        return PortraitElement(_reduce(tuple(parse_group_word(text, self.gens))), self)


def _reduce(word):
    out = []
    for name, exp in word:
        if out and out[-1][0] == name:
            exp += out.pop()[1]
        if exp:
            out.append((name, exp))
    return tuple(out)


def _inverse(word):
    return tuple((n, -e) for n, e in reversed(word))


def _require_bijection(gen, alphabet, letter_map):
    if set(letter_map) != set(alphabet):
        missing = sorted(set(alphabet) - set(letter_map))
        raise ConstructionError("bijection", (gen, missing), "rules missing for letters")
    if sorted(letter_map.values()) != sorted(alphabet):
        raise ConstructionError("bijection", (gen, dict(letter_map)),
                                "letter action is not a bijection of the alphabet")
