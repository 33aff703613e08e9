"""Three-valued results for questions that are only semi-decidable.

A :class:`Verdict` is deliberately not usable as a boolean: callers must look
at :attr:`Verdict.status` and decide what an unknown answer means for them.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Any


class Status(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    status: Status
    witness: Any = None
    bound: int | None = None
    exact: bool = False
    reason: str = ""

    @classmethod
    def holds(cls, witness=None, *, bound=None, exact=False, reason=""):
        if not exact and bound is None:
            raise ValueError("a bounded Holds must record its bound")
        return cls(Status.HOLDS, witness, bound, exact, reason)

    @classmethod
    def fails(cls, counterexample, *, bound=None, reason=""):
        # a concrete counterexample settles the question
        return cls(Status.FAILS, counterexample, bound, True, reason)

    @classmethod
    def unknown(cls, bound, reason="", witness=None):
        return cls(Status.UNKNOWN, witness, bound, False, reason)

    @property
    def is_holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def is_fails(self) -> bool:
        return self.status is Status.FAILS

    @property
    def is_unknown(self) -> bool:
        return self.status is Status.UNKNOWN

    def __bool__(self):
        raise TypeError("Verdict is three-valued; inspect .status instead of bool()")

    def with_reason(self, reason: str) -> "Verdict":
        return replace(self, reason=reason)

    def describe(self) -> str:
        if self.status is Status.UNKNOWN:
            text = f"UNKNOWN at bound {self.bound}"
            return f"{text} ({self.reason})" if self.reason else text
        head = "HOLDS" if self.status is Status.HOLDS else "FAILS"
        parts = []
        if self.status is Status.HOLDS:
            parts.append("exact" if self.exact else f"bound={self.bound}")
        elif self.bound is not None:
            parts.append(f"bound={self.bound}")
        if self.reason:
            parts.append(self.reason)
        return f"{head} ({', '.join(parts)})" if parts else head


def conjunction(verdicts, reason="") -> Verdict:
    """Kleene conjunction: any failure wins, then any unknown, else holds.

    The result is exact only if every conjunct is exact; its bound is the
    smallest bound among the bounded conjuncts.
    """
    verdicts = list(verdicts)
    for v in verdicts:
        if v.is_fails:
            return Verdict.fails(v.witness, bound=v.bound, reason=reason or v.reason)
    bounds = [v.bound for v in verdicts if v.bound is not None]
    bound = min(bounds) if bounds else None
    for v in verdicts:
        if v.is_unknown:
            return Verdict.unknown(v.bound if v.bound is not None else 0, reason or v.reason)
    exact = all(v.exact for v in verdicts)
    if not exact and bound is None:
        bound = 0
    return Verdict.holds(bound=None if exact else bound, exact=exact, reason=reason)
