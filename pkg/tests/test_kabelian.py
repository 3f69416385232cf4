"""Order-k equivalence of words and the interval-driven classification."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sturmian_spectra.kabelian import (
    classify_brute,
    classify_by_intervals,
    kab_equivalent,
    kab_equivalent_counts,
    prefix_suffix_sufficient,
    signature,
    verify_ternary_property,
)
from sturmian_spectra.quadreal import QuadReal
from sturmian_spectra.words import SturmianSpec, factors_of_length

FIB_SLOPE = QuadReal(3, -1, 5, 2)
SILVER_SLOPE = QuadReal(-1, 1, 2, 1)
FIB_WORD = SturmianSpec(FIB_SLOPE, FIB_SLOPE)


def _binary(n):
    return st.text(alphabet="01", min_size=n, max_size=n)


word_pairs = st.integers(0, 22).flatmap(lambda n: st.tuples(_binary(n), _binary(n)))


def test_signature_known_value():
    sig = signature("01001", 2)
    assert sig.prefix == "0" and sig.suffix == "1"
    assert dict(sig.counts) == {"01": 2, "10": 1, "00": 1}


def test_signature_degenerates_below_order():
    sig = signature("01", 4)
    assert sig.prefix == "01" and sig.suffix == "01" and sig.counts == ()
    assert kab_equivalent("01", "01", 4)
    assert not kab_equivalent("01", "10", 4)


def test_order_one_is_letter_counting():
    assert kab_equivalent("0110", "1010", 1)
    assert not kab_equivalent("0110", "1110", 1)


def test_equivalence_requires_equal_length():
    with pytest.raises(ValueError):
        kab_equivalent("0", "00", 2)
    with pytest.raises(ValueError):
        kab_equivalent_counts("0", "00", 2)


def test_known_classes_of_the_fibonacci_factors():
    """Length-5 factors split into four order-2 classes."""
    words = [w for w, _ in factors_of_length(FIB_SLOPE, 5)]
    classes = classify_brute(words, 2)
    assert [c.members for c in classes] == [
        ("00100",),
        ("00101", "01001"),
        ("01010",),
        ("10010", "10100"),
    ]


def test_interval_classification_matches_brute_force():
    """The coarse-family grouping is the signature partition, in circle order."""
    for alpha in (FIB_SLOPE, SILVER_SLOPE):
        for k in range(1, 5):
            for m in range(1, 26):
                words = [w for w, _ in factors_of_length(alpha, m)]
                by_interval = classify_by_intervals(alpha, k, m)
                brute = classify_brute(words, k)
                got = sorted(c.members for c in by_interval if c.members)
                want = sorted(c.members for c in brute)
                assert got == want


def test_interval_classes_carry_their_interval_index():
    classes = classify_by_intervals(FIB_SLOPE, 2, 5)
    assert [c.interval_index for c in classes] == [0, 1, 2, 3]
    assert all(c.k == 2 and c.length == 5 for c in classes)


def test_shared_ends_decide_order_three_on_fibonacci_factors():
    """At k=3 the slope is steep enough that the two ends say everything."""
    assert prefix_suffix_sufficient(FIB_SLOPE, 3)
    for m in range(2, 21):
        words = [w for w, _ in factors_of_length(FIB_SLOPE, m)]
        edge = min(m, 2)
        for i, u in enumerate(words):
            for v in words[i + 1 :]:
                same_ends = u[:edge] == v[:edge] and u[-edge:] == v[-edge:]
                assert kab_equivalent(u, v, 3) == same_ends


def test_shared_ends_do_not_decide_order_two():
    assert not prefix_suffix_sufficient(FIB_SLOPE, 2)
    assert not prefix_suffix_sufficient(SILVER_SLOPE, 2)
    # and the criterion genuinely fails at order 2: same ends, different counts
    found = False
    for m in range(2, 15):
        words = [w for w, _ in factors_of_length(FIB_SLOPE, m)]
        for i, u in enumerate(words):
            for v in words[i + 1 :]:
                if u[0] == v[0] and u[-1] == v[-1] and not kab_equivalent(u, v, 2):
                    found = True
    assert found


def test_ternary_image_classes_are_decided_by_their_ends():
    for k in (2, 3):
        report = verify_ternary_property(FIB_WORD, k, 12)
        assert report.ok
        assert report.counterexamples == []
        assert report.pairs_checked > 100


def test_ternary_check_validation():
    with pytest.raises(ValueError):
        verify_ternary_property(FIB_WORD, 1, 5)
    steep = SturmianSpec(QuadReal(-1, 1, 5, 2), QuadReal(0))  # slope 0.618...
    with pytest.raises(ValueError):
        verify_ternary_property(steep, 2, 5)


@given(word_pairs, st.integers(1, 4))
@settings(max_examples=100)
def test_signature_equality_matches_raw_counts(pair, k):
    """Prefix + suffix + top-order counts carry all lower-order counts."""
    u, v = pair
    assert kab_equivalent(u, v, k) == kab_equivalent_counts(u, v, k)


@given(word_pairs, st.integers(1, 3))
@settings(max_examples=100)
def test_higher_order_refines_lower_order(pair, k):
    u, v = pair
    if kab_equivalent(u, v, k + 1):
        assert kab_equivalent(u, v, k)


@given(word_pairs, st.text("01", max_size=6), st.text("01", max_size=6),
       st.integers(1, 3))
@settings(max_examples=100)
def test_equivalence_is_a_congruence(pair, x, y, k):
    """Wrapping both words in one context preserves equivalence."""
    u, v = pair
    if kab_equivalent(u, v, k):
        assert kab_equivalent(x + u + y, x + v + y, k)
