"""Named instances and the instance-description parser used by the CLI."""
from __future__ import annotations

import os
import re

from ..errors import UsageError
from .free import FreeAbelianMonoid, FreeMonoid
from .selfsimilar import build_self_similar
from .specfile import parse_spec

ODOMETER = """\
alphabet: 0 1
group: integer-power
z . 0 = 1 | e
z . 1 = 0 | z
"""

MODIFIED_ODOMETER = ODOMETER.replace("alphabet: 0 1", "alphabet: 0 1 B") + "z . B = B | e\n"

BUILTIN_SPECS = {"odometer": ODOMETER, "modified-odometer": MODIFIED_ODOMETER}


def free_monoid(alphabet) -> FreeMonoid:
    return FreeMonoid(alphabet)


def free_abelian_monoid(k: int) -> FreeAbelianMonoid:
    return FreeAbelianMonoid(k)


def odometer():
    return build_self_similar(parse_spec(ODOMETER, name="odometer"))


def modified_odometer():
    return build_self_similar(parse_spec(MODIFIED_ODOMETER, name="modified-odometer"))


def parse_instance(source: str):
    """Resolve a built-in name or a path to a spec file.

    Built-ins: ``free:<letters>`` (an ``X`` in front of further letters is a
    marker for "alphabet", so ``free:X01`` is the free monoid on ``{0, 1}``),
    ``nat:<k>``, ``odometer`` and ``modified-odometer``.
    """
    text = source.strip()
    if text.startswith("free:"):
        letters = text[len("free:"):]
        if len(letters) > 1 and letters[0] == "X":
            letters = letters[1:]
        P = FreeMonoid(tuple(letters))
        P.name = text
        return P
    m = re.fullmatch(r"nat:(\d+)", text)
    if m:
        P = FreeAbelianMonoid(int(m.group(1)))
        return P
    if text in BUILTIN_SPECS:
        return build_self_similar(parse_spec(BUILTIN_SPECS[text], name=text))
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            spec = parse_spec(fh.read(), name=os.path.basename(text))
        return build_self_similar(spec)
    raise UsageError(f"unknown instance {source!r}: expected free:<letters>, nat:<k>, "
                     "odometer, modified-odometer or a spec file path")
