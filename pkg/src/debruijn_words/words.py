"""Words over the alphabet {0, ..., k-1}: primitivity, rotations, conjugacy.

A word is a plain tuple of ints. Functions that need the alphabet size take
it explicitly (usually through :class:`AlphabetParams`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

Word = tuple[int, ...]

#: Largest k**n any enumerating function will walk.
ENUMERATION_CEILING = 2**24


class ResourceCeilingError(ValueError):
    """Raised when an enumeration would exceed :data:`ENUMERATION_CEILING`."""


@dataclass(frozen=True)
class AlphabetParams:
    k: int
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 2:
            raise ValueError(f"alphabet size k must be an integer >= 2, got {self.k!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"word length n must be an integer >= 1, got {self.n!r}")

    @property
    def size(self) -> int:
        """Number of words of length n, k**n."""
        return self.k**self.n

    def check_enumerable(self, ceiling: int = ENUMERATION_CEILING) -> None:
        if self.size > ceiling:
            raise ResourceCeilingError(
                f"k**n = {self.k}**{self.n} exceeds the enumeration ceiling {ceiling}"
            )


def as_word(symbols: Sequence[int], k: int | None = None) -> Word:
    """Coerce a sequence to a word, checking symbols against ``k`` if given."""
    w = tuple(int(s) for s in symbols)
    if k is not None:
        for s in w:
            if not 0 <= s < k:
                raise ValueError(f"symbol {s} outside alphabet 0..{k - 1}")
    return w


def all_words(params: AlphabetParams) -> Iterator[Word]:
    """All k**n words in lexicographic order."""
    params.check_enumerable()
    return itertools.product(range(params.k), repeat=params.n)


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def is_primitive(w: Sequence[int]) -> bool:
    """True iff ``w`` is not x**p for any word x and p >= 2."""
    n = len(w)
    if n == 0:
        raise ValueError("empty word has no primitivity status")
    w = tuple(w)
    for d in divisors(n):
        if d < n and w == w[:d] * (n // d):
            return False
    return True


def rotate(w: Sequence[int], p: int) -> Word:
    """``w[p+1..n] w[1..p]``: move the first p symbols to the end."""
    if not 0 <= p <= len(w):
        raise ValueError(f"rotation {p} out of range 0..{len(w)}")
    w = tuple(w)
    return w[p:] + w[:p]


def delta(w: Sequence[int]) -> int:
    """Least p >= 1 with rotate(w, p) == w."""
    n = len(w)
    if n == 0:
        raise ValueError("empty word has no rotation period")
    w = tuple(w)
    # the least rotation period always divides n
    for d in divisors(n):
        if w[d:] + w[:d] == w:
            return d
    raise AssertionError("unreachable: rotate(w, n) == w")


def canonical_rotation(w: Sequence[int]) -> Word:
    """Lexicographically least rotation of ``w``."""
    w = tuple(w)
    if not w:
        return w
    return min(w[p:] + w[:p] for p in range(len(w)))


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Word
    size: int

    def members(self) -> list[Word]:
        r = self.representative
        return sorted({rotate(r, p) for p in range(self.size)})

    def __contains__(self, w: object) -> bool:
        return isinstance(w, tuple) and len(w) == len(self.representative) and (
            canonical_rotation(w) == self.representative
        )


def conjugacy_classes(params: AlphabetParams) -> list[ConjugacyClass]:
    """Partition of all k**n words into rotation orbits, sorted by representative.

    Practical ceiling is :data:`ENUMERATION_CEILING` words; the symbol-tuple
    representation makes this slow well before that.
    """
    seen: set[Word] = set()
    classes = []
    for w in all_words(params):
        if w in seen:
            continue
        orbit = {rotate(w, p) for p in range(params.n)}
        seen.update(orbit)
        # enumeration is lexicographic, so the first unseen member is least
        classes.append(ConjugacyClass(representative=w, size=len(orbit)))
    return classes


def _prime_factors(d: int) -> list[int]:
    out = []
    p = 2
    while p * p <= d:
        if d % p == 0:
            out.append(p)
            while d % p == 0:
                d //= p
        p += 1
    if d > 1:
        out.append(d)
    return out


def euler_phi(d: int) -> int:
    if d < 1:
        raise ValueError(f"euler_phi requires d >= 1, got {d}")
    result = d
    for p in _prime_factors(d):
        result -= result // p
    return result


def mobius(d: int) -> int:
    if d < 1:
        raise ValueError(f"mobius requires d >= 1, got {d}")
    primes = _prime_factors(d)
    for p in primes:
        if (d // p) % p == 0:
            return 0
    return -1 if len(primes) % 2 else 1


def conjugacy_class_count(params: AlphabetParams) -> int:
    """Number of rotation orbits of length-n words: (1/n) sum_{d|n} phi(d) k^(n/d)."""
    k, n = params.k, params.n
    total = sum(euler_phi(d) * k ** (n // d) for d in divisors(n))
    assert total % n == 0
    return total // n


def count_primitive(params: AlphabetParams, method: str = "mobius") -> int:
    """Number of primitive words of length n.

    ``method="mobius"`` uses sum_{d|n} mu(d) k^(n/d); ``method="enumerate"``
    tests every word.
    """
    k, n = params.k, params.n
    if method == "mobius":
        return sum(mobius(d) * k ** (n // d) for d in divisors(n))
    if method == "enumerate":
        return sum(1 for w in all_words(params) if is_primitive(w))
    raise ValueError(f"unknown method {method!r}")


def primitive_words(params: AlphabetParams) -> list[Word]:
    return [w for w in all_words(params) if is_primitive(w)]

