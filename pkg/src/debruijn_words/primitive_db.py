"""Greedy De Bruijn sequences over the primitive words of Sigma_k^n.

Starting from 0**(n-1), repeatedly append the largest symbol i such that the
last n-1 symbols followed by i form a primitive word not seen before. The
result has length (#primitive words) + n - 1 and holds every primitive word
exactly once; dropping its trailing 0**(n-1) gives the circular sequence.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .debruijn import CircularSequence
from .words import AlphabetParams, Word, as_word, is_primitive


class Reason(enum.Enum):
    NOT_PRIMITIVE = "not_primitive"
    ALREADY_SEEN = "already_seen"


@dataclass(frozen=True)
class Step:
    context: Word
    chosen: int | None  # None: the greedy loop terminated here
    rejected: tuple[tuple[int, Reason], ...] = ()

    @property
    def terminated(self) -> bool:
        return self.chosen is None


@dataclass(frozen=True)
class GreedyTrace:
    params: AlphabetParams
    output: Word
    steps: tuple[Step, ...] = field(repr=False)


def generate_primitive_db(params: AlphabetParams) -> GreedyTrace:
    k, n = params.k, params.n
    if n < 2:
        raise ValueError(
            "primitive De Bruijn generation needs n >= 2 (the context 0**(n-1) is empty for n = 1)"
        )
    params.check_enumerable()
    out = [0] * (n - 1)
    seen: set[Word] = set()
    steps = []
    while True:
        ctx = tuple(out[len(out) - n + 1 :])
        rejected = []
        chosen = None
        for i in range(k - 1, -1, -1):
            cand = ctx + (i,)
            if not is_primitive(cand):
                rejected.append((i, Reason.NOT_PRIMITIVE))
            elif cand in seen:
                rejected.append((i, Reason.ALREADY_SEEN))
            else:
                chosen = i
                break
        steps.append(Step(ctx, chosen, tuple(rejected)))
        if chosen is None:
            break
        seen.add(ctx + (chosen,))
        out.append(chosen)
    return GreedyTrace(params=params, output=tuple(out), steps=tuple(steps))


def to_circular_db(trace: GreedyTrace) -> CircularSequence:
    """Drop the trailing 0**(n-1) of a greedy trace to get the circular sequence."""
    n = trace.params.n
    w = trace.output
    if len(w) < 2 * (n - 1) or any(w[: n - 1]) or any(w[len(w) - n + 1 :]):
        raise ValueError("malformed trace: output must start and end with 0**(n-1)")
    if not trace.steps or not trace.steps[-1].terminated:
        raise ValueError("malformed trace: greedy loop did not terminate")
    return CircularSequence(w[: len(w) - n + 1], n)


class BudgetExhausted(RuntimeError):
    """The f_u construction ran past its step budget (an implementation defect)."""


def build_fu(u: Word, k: int | None = None, budget: int | None = None) -> Word:
    """Extend primitive ``u`` by the smallest symbols keeping every length-n
    window primitive, stopping once the last n-1 symbols are all zero.

    ``budget`` caps the number of appended symbols; by default k**n + n, using
    ``k = max(u) + 1`` (at least 2) when the alphabet is not given.
    """
    u = as_word(u, k)
    n = len(u)
    if n < 2:
        raise ValueError("build_fu needs |u| >= 2")
    if not is_primitive(u):
        raise ValueError(f"build_fu needs a primitive word, got {u}")
    if k is None:
        k = max(2, max(u) + 1)
    if budget is None:
        budget = k**n + n
    f = list(u)
    appended = 0
    while any(f[len(f) - n + 1 :]):
        if appended >= budget:
            raise BudgetExhausted(f"f_u for u={u} exceeded {budget} appended symbols")
        ctx = tuple(f[len(f) - n + 1 :])
        # smallest-first scan, opposite to the main greedy
        for i in range(k):
            if is_primitive(ctx + (i,)):
                f.append(i)
                break
        else:
            raise AssertionError(f"no primitive completion of {ctx}")
        appended += 1
    return tuple(f)
