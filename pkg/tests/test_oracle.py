import itertools

import pytest

from debruijn_words.oracle import (
    InconclusiveSearch,
    count_rotation_orbits,
    exhaustive_min_cover,
    squares_of,
    verify_coverage,
    verify_nonsquare_gap_counting,
)
from debruijn_words.primitive_db import generate_primitive_db
from debruijn_words.squares import generate_square_word, square_lower_bound
from debruijn_words.words import AlphabetParams, conjugacy_class_count, primitive_words

from conftest import w

# found by the BFS and confirmed by the exhaustive enumeration below
MIN_COVER_2_2 = (12, w("000010101111"))


def covers(word, targets):
    return all(any(word[p : p + len(t)] == t for p in range(len(word) - len(t) + 1)) for t in targets)


def test_coverage_of_paper_square_word():
    word = w("0000001001001101101111110")
    report = verify_coverage(word, squares_of(AlphabetParams(2, 3)))
    assert report.missing == frozenset()
    assert len(report.found_once) + len(report.found_multiple) == 8


def test_coverage_of_paper_primitive_word():
    report = verify_coverage(w("000111011001000"), primitive_words(AlphabetParams(2, 4)))
    assert report.verdict and report.exact
    assert len(report.found_once) == 12


def test_overlapping_occurrences():
    report = verify_coverage(w("0000"), {w("00")})
    assert report.found_multiple == {w("00"): [1, 2, 3]}
    assert not report.verdict


def test_circular_wraps():
    report = verify_coverage(w("0011"), {w("10")}, circular=True)
    assert report.found_once == {w("10")}
    assert w("10") in verify_coverage(w("0011"), {w("10")}).missing


def test_report_partition():
    targets = {w("00"), w("01"), w("11"), w("10")}
    report = verify_coverage(w("00010"), targets)
    assert report.found_once | set(report.found_multiple) | report.missing == targets
    assert report.found_once == {w("01"), w("10")}
    assert report.missing == {w("11")}
    assert set(report.found_multiple) == {w("00")}


def test_extraneous():
    report = verify_coverage(w("0011"), {w("00"), w("01")})
    assert report.verdict and not report.exact
    assert report.extraneous == {w("11")}


def test_mixed_targets_rejected():
    with pytest.raises(ValueError, match="mix"):
        verify_coverage(w("0011"), {w("0"), w("01")})


@pytest.mark.parametrize("make", ["primitive", "square"])
@pytest.mark.parametrize("k, n", [(2, 4), (2, 6), (3, 3), (4, 2)])
def test_single_symbol_mutation_is_detected(make, k, n):
    params = AlphabetParams(k, n)
    if make == "primitive":
        word = generate_primitive_db(params).output
        targets = primitive_words(params)
        ok = lambda r: r.verdict  # noqa: E731
    else:
        word = generate_square_word(params).word
        targets = squares_of(params)
        ok = lambda r: not r.missing  # noqa: E731
    assert ok(verify_coverage(word, targets))
    for p in range(len(word)):
        for c in range(k):
            if c != word[p]:
                mutated = word[:p] + (c,) + word[p + 1 :]
                report = verify_coverage(mutated, targets)
                assert not report.verdict


def test_exhaustive_min_cover_2_2():
    length, witness = exhaustive_min_cover(AlphabetParams(2, 2))
    assert (length, witness) == MIN_COVER_2_2
    assert not verify_coverage(witness, squares_of(AlphabetParams(2, 2))).missing
    assert 10 <= length <= len(generate_square_word(AlphabetParams(2, 2)).word) == 12


def test_min_cover_2_2_by_enumeration():
    targets = squares_of(AlphabetParams(2, 2))
    for L in (10, 11):
        assert not any(covers(c, targets) for c in itertools.product((0, 1), repeat=L))
    first = next(c for c in itertools.product((0, 1), repeat=12) if covers(c, targets))
    assert first == MIN_COVER_2_2[1]


def test_exhaustive_min_cover_n1():
    params = AlphabetParams(2, 1)
    length, witness = exhaustive_min_cover(params)
    assert (length, witness) == (4, w("0011"))
    assert length >= square_lower_bound(params)


def test_min_cover_gate_and_budget():
    with pytest.raises(ValueError, match="gated"):
        exhaustive_min_cover(AlphabetParams(2, 3))
    with pytest.raises(InconclusiveSearch):
        exhaustive_min_cover(AlphabetParams(2, 2), budget=5)


def test_min_cover_k3_n1_above_gate():
    params = AlphabetParams(3, 1)
    length, witness = exhaustive_min_cover(params, allow_large=True)
    assert length == 6 == square_lower_bound(params)
    assert not verify_coverage(witness, squares_of(params)).missing


def test_gap_counting_on_paper_word():
    assert verify_nonsquare_gap_counting(w("0000001001001101101111110"), AlphabetParams(2, 3))


def test_gap_counting_requires_cover():
    # only the class {00,...} of 000 / 111: misses 001-class squares
    with pytest.raises(ValueError, match="misses"):
        verify_nonsquare_gap_counting(w("000000111111"), AlphabetParams(2, 3))


@pytest.mark.parametrize("k, n", [(2, 1), (2, 5), (3, 3), (4, 4), (5, 2)])
def test_orbit_count(k, n):
    assert count_rotation_orbits(k, n) == conjugacy_class_count(AlphabetParams(k, n))
