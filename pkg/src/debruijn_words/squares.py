"""Short words containing every square vv, v in Sigma_k^n.

The construction walks a linear De Bruijn word ``s`` of order n-1. At step j
with context x = s[j..j+n-2] it tries each symbol i = 0..k-1; if (xi)^2 is
not yet a factor of the word built so far, it appends xi extended
periodically to length n + delta(xi). A symbol is also skipped when a
rotation of xi was accepted earlier, since that square is already on its
way. Each step then appends s[j], and the
last step appends the tail s[k^(n-1)+1 ..]. The result has length
k^n + n*C(n,k) + k^(n-1) + n - 2, against a lower bound of k^n + n*C(n,k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .debruijn import CircularSequence, generate_classic_db, is_debruijn_of
from .words import (
    AlphabetParams,
    Word,
    all_words,
    as_word,
    canonical_rotation,
    conjugacy_class_count,
    delta,
)


def fractional_power(x: Sequence[int], total_length: int) -> Word:
    """Prefix of length ``total_length`` of x x x ..."""
    x = tuple(x)
    if not x:
        raise ValueError("fractional power of the empty word")
    if total_length < len(x):
        raise ValueError(f"total_length {total_length} below |x| = {len(x)}")
    q, r = divmod(total_length, len(x))
    return x * q + x[:r]


class LengthBreakdown(NamedTuple):
    squares_part: int
    accept_part: int
    seed_part: int

    @property
    def total(self) -> int:
        return self.squares_part + self.accept_part + self.seed_part


@dataclass(frozen=True)
class Acceptance:
    step: int  # 1-based position j in the seed
    symbol: int
    root: Word  # s[j..j+n-2] followed by symbol
    block: Word  # root extended to length n + delta(root)


@dataclass(frozen=True)
class SquareConstructionReport:
    params: AlphabetParams
    word: Word
    accepted: tuple[Acceptance, ...]
    seed: Word
    breakdown: LengthBreakdown


def expected_length(params: AlphabetParams) -> LengthBreakdown:
    k, n = params.k, params.n
    return LengthBreakdown(
        squares_part=k**n,
        accept_part=n * conjugacy_class_count(params),
        seed_part=k ** (n - 1) + n - 2,
    )


def validate_seed(seed: Sequence[int], params: AlphabetParams) -> Word:
    """Check ``seed`` is a linear De Bruijn word of order n-1 and return it."""
    k, n = params.k, params.n
    m = n - 1
    s = as_word(seed, k)
    want = k**m + m - 1
    if len(s) != want:
        raise ValueError(f"seed must have length k^(n-1) + n - 2 = {want}, got {len(s)}")
    cyc = s[: k**m]
    if s[k**m :] != cyc[: m - 1]:
        raise ValueError("seed must end with a repeat of its first n-2 symbols")
    dictionary = list(all_words(AlphabetParams(k, m)))
    if not is_debruijn_of(CircularSequence(cyc, m), dictionary):
        raise ValueError(f"seed is not a De Bruijn word of order {m} over {k} symbols")
    return s


def generate_square_word(
    params: AlphabetParams, seed: Sequence[int] | None = None
) -> SquareConstructionReport:
    k, n = params.k, params.n
    if n < 2:
        raise ValueError("square construction needs n >= 2 (seed order n-1 must be >= 1)")
    params.check_enumerable()
    if seed is None:
        s = generate_classic_db(AlphabetParams(k, n - 1))
    else:
        s = validate_seed(seed, params)

    w: list[int] = []
    # all length-2n factors of w so far, kept in step with every append
    windows: set[Word] = set()

    def extend(symbols: Sequence[int]) -> None:
        for c in symbols:
            w.append(c)
            if len(w) >= 2 * n:
                windows.add(tuple(w[-2 * n :]))

    # An accepted block is always followed by its root's first n-1 symbols,
    # so the squares of its whole rotation class are committed at acceptance
    # even though they complete only later.
    committed: set[Word] = set()
    accepted = []
    steps = k ** (n - 1)
    for j in range(steps):
        x = s[j : j + n - 1]
        for i in range(k):
            root = x + (i,)
            if root + root in windows or canonical_rotation(root) in committed:
                continue
            block = fractional_power(root, n + delta(root))
            extend(block)
            committed.add(canonical_rotation(root))
            accepted.append(Acceptance(step=j + 1, symbol=i, root=root, block=block))
        extend(s[j : j + 1])
    extend(s[steps:])

    breakdown = expected_length(params)
    word = tuple(w)
    if len(word) != breakdown.total:
        raise AssertionError(
            f"constructed length {len(word)} != expected {breakdown.total}"
        )
    return SquareConstructionReport(
        params=params,
        word=word,
        accepted=tuple(accepted),
        seed=s,
        breakdown=breakdown,
    )


def square_lower_bound(params: AlphabetParams) -> int:
    """k^n + n*C(n,k): no word containing all squares of length 2n is shorter."""
    return params.k**params.n + params.n * conjugacy_class_count(params)


class ConstructionGap(NamedTuple):
    lower: int
    achieved: int
    ratio: Fraction  # achieved / k^n


def construction_gap(params: AlphabetParams, seed: Sequence[int] | None = None) -> ConstructionGap:
    achieved = len(generate_square_word(params, seed).word)
    return ConstructionGap(
        lower=square_lower_bound(params),
        achieved=achieved,
        ratio=Fraction(achieved, params.k**params.n),
    )
