"""Prefer-largest De Bruijn generation over all of Sigma_k^m, and circular views."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Collection

from .words import AlphabetParams, ResourceCeilingError, Word, as_word

__all__ = [
    "CircularSequence",
    "circular_factors",
    "generate_classic_db",
    "is_debruijn_of",
    "ResourceCeilingError",
]


@dataclass(frozen=True)
class CircularSequence:
    """A word read cyclically, queried for factors of length ``order``."""

    word: Word
    order: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", as_word(self.word))
        if len(self.word) < 1:
            raise ValueError("circular sequence must be non-empty")
        if self.order < 1:
            raise ValueError(f"factor order must be >= 1, got {self.order}")

    def factor_at(self, i: int) -> Word:
        L = len(self.word)
        return tuple(self.word[(i + j) % L] for j in range(self.order))


def generate_classic_db(params: AlphabetParams) -> Word:
    """Greedy De Bruijn word of order ``params.n``: start with n zeros, then
    repeatedly append the largest symbol that does not repeat a length-n factor.

    Returns the linear word of length k**n + n - 1; it ends with 0**(n-1),
    so its first k**n symbols are the circular sequence.
    """
    params.check_enumerable()
    k, m = params.k, params.n
    out = [0] * m
    seen = {tuple(out)}
    while True:
        ctx = tuple(out[len(out) - m + 1 :]) if m > 1 else ()
        for i in range(k - 1, -1, -1):
            cand = ctx + (i,)
            if cand not in seen:
                seen.add(cand)
                out.append(i)
                break
        else:
            return tuple(out)


def circular_factors(seq: CircularSequence) -> Counter[Word]:
    """Multiset of the |word| cyclic factors of length ``seq.order``."""
    if seq.order > len(seq.word):
        raise ValueError(
            f"factor order {seq.order} exceeds sequence length {len(seq.word)}"
        )
    return Counter(seq.factor_at(i) for i in range(len(seq.word)))


def is_debruijn_of(seq: CircularSequence, dictionary: Collection[Word]) -> bool:
    """True iff every dictionary word, and nothing else, occurs exactly once."""
    lengths = {len(w) for w in dictionary}
    if len(lengths) > 1:
        raise ValueError(f"dictionary mixes word lengths {sorted(lengths)}")
    if lengths and lengths != {seq.order}:
        raise ValueError(
            f"dictionary word length {lengths.pop()} differs from order {seq.order}"
        )
    if seq.order > len(seq.word):
        return False
    factors = circular_factors(seq)
    return set(factors) == {tuple(w) for w in dictionary} and all(
        c == 1 for c in factors.values()
    )
