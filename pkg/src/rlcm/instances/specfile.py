"""Line-oriented text format for self-similar group specifications.

Example::

    # binary odometer with a brick letter
    alphabet: 0 1 B
    group: integer-power
    z . 0 = 1 | e
    z . 1 = 0 | z
    z . B = B | e

``group`` is ``integer-power``, ``finite-table`` or ``bounded-portrait(depth=N)``.
A rule ``g . x = y | w`` says ``g.x = y`` and ``g|_x = w`` (a word in the
generators, ``e`` for the identity). Finite tables also need an
``elements:`` line, whose first entry is the identity, and product lines
``a * b = c``; products with the identity may be omitted.
"""
from __future__ import annotations

import re

from ..errors import SpecParseError
from .groups import parse_group_word
from .selfsimilar import SelfSimilarSpec

_RULE = re.compile(r"^\s*(\S+)\s*\.\s*(\S+)\s*=\s*(\S+)\s*\|\s*(.*?)\s*$")
_PRODUCT = re.compile(r"^\s*(\S+)\s*\*\s*(\S+)\s*=\s*(\S+)\s*$")
_PORTRAIT = re.compile(r"^bounded-portrait\s*(?:\(\s*depth\s*=\s*(\d+)\s*\))?$")


def parse_spec(text: str, name: str = "self-similar") -> SelfSimilarSpec:
    alphabet = None
    group = None
    depth = 3
    elements = ()
    rules: dict = {}
    rule_pos: dict = {}
    table: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        key, sep, value = line.partition(":")
        key = key.strip()
        if sep and key in ("alphabet", "group", "elements"):
            vcol = len(key) + 2 + col
            if key == "alphabet":
                letters = value.split()
                if not letters:
                    raise SpecParseError(lineno, vcol, "alphabet is empty")
                bad = [x for x in letters if len(x) != 1]
                if bad:
                    raise SpecParseError(lineno, line.index(bad[0]) + 1,
                                         f"letters must be single characters, got {bad[0]!r}")
                if len(set(letters)) != len(letters):
                    raise SpecParseError(lineno, vcol, "alphabet repeats a letter")
                alphabet = tuple(letters)
            elif key == "group":
                kind = value.strip()
                m = _PORTRAIT.match(kind)
                if m:
                    group = "bounded-portrait"
                    depth = int(m.group(1) or depth)
                elif kind in ("integer-power", "finite-table"):
                    group = kind
                else:
                    raise SpecParseError(lineno, vcol, f"unknown group oracle {kind!r}")
            else:
                elements = tuple(value.split())
                if not elements:
                    raise SpecParseError(lineno, vcol, "elements list is empty")
            continue
        m = _RULE.match(line)
        if m:
            g, x, y, w = m.groups()
            if alphabet is None:
                raise SpecParseError(lineno, col, "rule before the alphabet line")
            for letter, idx in ((x, m.start(2)), (y, m.start(3))):
                if letter not in alphabet:
                    raise SpecParseError(lineno, idx + 1, f"{letter!r} is not in the alphabet")
            rule = rules.setdefault(g, {})
            if x in rule:
                raise SpecParseError(lineno, m.start(2) + 1, f"second rule for {g} . {x}")
            clash = [x0 for x0, (y0, _) in rule.items() if y0 == y]
            if clash:
                raise SpecParseError(
                    lineno, m.start(3) + 1,
                    f"not a bijection on X: {g} sends both {clash[0]} and {x} to {y}")
            rule[x] = (y, w or "e")
            rule_pos[(g, x)] = (lineno, m.start(4) + 1)
            continue
        m = _PRODUCT.match(line)
        if m:
            a, b, c = m.groups()
            for sym, idx in ((a, m.start(1)), (b, m.start(2)), (c, m.start(3))):
                if sym not in elements:
                    raise SpecParseError(lineno, idx + 1, f"{sym!r} is not a listed element")
            table[(a, b)] = c
            continue
        raise SpecParseError(lineno, col, f"cannot parse {line.strip()!r}")

    end = len(text.splitlines()) or 1
    if alphabet is None:
        raise SpecParseError(end, 1, "missing alphabet line")
    if group is None:
        raise SpecParseError(end, 1, "missing group line")
    if not rules:
        raise SpecParseError(end, 1, "no generator rules")
    for g, rule in rules.items():
        missing = [x for x in alphabet if x not in rule]
        if missing:
            raise SpecParseError(end, 1, f"not a bijection on X: no rule for {g} . {missing[0]}")
    names = list(elements) if group == "finite-table" else list(rules)
    for (g, x), (lineno, col) in rule_pos.items():
        try:
            parse_group_word(rules[g][x][1], names)
        except ValueError as exc:
            raise SpecParseError(lineno, col, str(exc)) from None
    if group == "finite-table":
        if not elements:
            raise SpecParseError(end, 1, "finite-table groups need an elements line")
        ident = elements[0]
        for a in elements:
            table.setdefault((ident, a), a)
            table.setdefault((a, ident), a)
        missing = [(a, b) for a in elements for b in elements if (a, b) not in table]
        if missing:
            a, b = missing[0]
            raise SpecParseError(end, 1, f"multiplication table has no entry for {a} * {b}")
    elif group == "integer-power" and len(rules) != 1:
        raise SpecParseError(end, 1, "integer-power groups take exactly one generator")
    return SelfSimilarSpec(alphabet=alphabet, group=group, rules=rules, elements=elements,
                           table=table, portrait_depth=depth, name=name)
