"""Brute-force checks kept apart from the generators.

Nothing here reuses the generators' bookkeeping: occurrences are recounted
from scratch by sliding a window over the finished word.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Collection, Sequence

from .words import AlphabetParams, Word, all_words, canonical_rotation


@dataclass(frozen=True)
class CoverageReport:
    """Occurrence accounting of ``targets`` in a word.

    Positions are 1-based starting indices of the window.
    """

    targets: frozenset[Word]
    found_once: frozenset[Word]
    found_multiple: dict[Word, list[int]]
    missing: frozenset[Word]
    extraneous: frozenset[Word] = field(default_factory=frozenset)

    @property
    def verdict(self) -> bool:
        return not self.found_multiple and not self.missing

    @property
    def exact(self) -> bool:
        """Verdict holds and no other factor of the target length occurs."""
        return self.verdict and not self.extraneous


def verify_coverage(
    w: Sequence[int], targets: Collection[Sequence[int]], circular: bool = False
) -> CoverageReport:
    word = tuple(w)
    tset = frozenset(tuple(t) for t in targets)
    lengths = {len(t) for t in tset}
    if len(lengths) > 1:
        raise ValueError(f"targets mix lengths {sorted(lengths)}")
    L = lengths.pop() if lengths else 0
    if tset and L > len(word):
        raise ValueError(f"target length {L} exceeds word length {len(word)}")

    positions: dict[Word, list[int]] = defaultdict(list)
    if tset:
        if circular:
            doubled = word + word[: L - 1]
            starts = range(len(word))
        else:
            doubled = word
            starts = range(len(word) - L + 1)
        for p in starts:
            positions[doubled[p : p + L]].append(p + 1)

    found_once = frozenset(t for t in tset if len(positions.get(t, ())) == 1)
    found_multiple = {t: positions[t] for t in tset if len(positions.get(t, ())) > 1}
    missing = frozenset(t for t in tset if t not in positions)
    extraneous = frozenset(f for f in positions if f not in tset)
    return CoverageReport(tset, found_once, found_multiple, missing, extraneous)


def squares_of(params: AlphabetParams) -> list[Word]:
    """All squares vv with v of length n."""
    return [v + v for v in all_words(params)]


def count_rotation_orbits(k: int, n: int) -> int:
    """Number of rotation orbits of Sigma_k^n, by walking every orbit.

    Words are packed as base-k integers; a byte per word marks visits.
    """
    total = k**n
    top = k ** (n - 1)
    visited = bytearray(total)
    orbits = 0
    for x in range(total):
        if visited[x]:
            continue
        orbits += 1
        y = x
        while not visited[y]:
            visited[y] = 1
            # cyclic left shift of the base-k digits
            y = (y % top) * k + y // top
    return orbits


def verify_nonsquare_gap_counting(w: Sequence[int], params: AlphabetParams) -> bool:
    """Mechanize the counting behind the square lower bound.

    Every square vv is pinned to its first occurrence, and the squares are
    listed in order of those positions. Whenever two consecutive roots lie
    in different conjugacy classes, at least n windows of length 2n strictly
    between them must be non-designated (not the pinned occurrence of any
    square). Also checks the resulting total window count is at least
    k^n + n*(C - 1), where C is the number of classes met.
    """
    word = tuple(w)
    n = params.n
    targets = squares_of(params)
    report = verify_coverage(word, targets)
    if report.missing:
        raise ValueError(f"word misses {len(report.missing)} of {len(targets)} squares")

    first: dict[Word, int] = {}
    for p in range(len(word) - 2 * n + 1):
        block = word[p : p + 2 * n]
        if block[:n] == block[n:] and block not in first:
            first[block] = p
    order = sorted(first.items(), key=lambda item: item[1])

    classes_met = {canonical_rotation(sq[:n]) for sq, _ in order}
    for (a, pa), (b, pb) in zip(order, order[1:]):
        if canonical_rotation(a[:n]) == canonical_rotation(b[:n]):
            continue
        # every window strictly between two consecutive pinned positions is unpinned
        if pb - pa - 1 < n:
            return False
    windows = len(word) - 2 * n + 1
    return windows >= params.k**n + n * (len(classes_met) - 1)


class InconclusiveSearch(RuntimeError):
    """The exhaustive search ran out of budget before finding an optimum."""


#: exhaustive_min_cover refuses k**n above this unless told otherwise
MIN_COVER_DEFAULT_LIMIT = 4


def exhaustive_min_cover(
    params: AlphabetParams, budget: int = 10**6, allow_large: bool = False
) -> tuple[int, Word]:
    """Shortest word containing every square vv, v in Sigma_k^n.

    Breadth-first search over (last 2n-1 symbols, covered squares) with
    children expanded in symbol order, so the witness is the
    lexicographically least among shortest words. ``budget`` bounds the
    number of distinct states visited.
    """
    k, n = params.k, params.n
    if params.size > MIN_COVER_DEFAULT_LIMIT and not allow_large:
        raise ValueError(
            f"exhaustive search is gated to k**n <= {MIN_COVER_DEFAULT_LIMIT}; "
            "pass allow_large=True to override"
        )
    index = {sq: i for i, sq in enumerate(squares_of(params))}
    full = (1 << len(index)) - 1
    keep = 2 * n - 1

    start: tuple[Word, int] = ((), 0)
    parent: dict[tuple[Word, int], tuple[tuple[Word, int], int] | None] = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        tail, covered = state
        if covered == full:
            out = []
            s: tuple[Word, int] | None = state
            while parent[s] is not None:
                s, c = parent[s]
                out.append(c)
            return len(out), tuple(reversed(out))
        for c in range(k):
            grown = tail + (c,)
            cov = covered
            if len(grown) == 2 * n and grown in index:
                cov |= 1 << index[grown]
            child = (grown[-keep:] if keep else (), cov)
            if child in parent:
                continue
            if len(parent) >= budget:
                raise InconclusiveSearch(
                    f"state budget {budget} exhausted before covering all squares"
                )
            parent[child] = (state, c)
            queue.append(child)
    raise AssertionError("search space exhausted without covering all squares")
