"""Core hypergroup structure: axioms, subsets, closure, normality.

Expected values for the two running examples were derived by hand from
the point sets they model and are frozen here:

* pentagon: distance classes on a 5-cycle give products
  1*1={0,2}, 1*2=2*1={1,2}, 2*2={0,1}; only {0} and the whole set are
  closed; nothing except the neutral element is thin.
* square: distance classes on a 4-cycle give 1*1={0,2}, 1*2={1},
  2*2={0}; closed subsets {0}, {0,2}, all; 2 is a thin element and
  {0,2} is the smallest strongly normal closed subset.
"""
from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

import schemehall as sh
from schemehall import (
    AssocViolationError,
    ElementSubset,
    EmptyProductError,
    NoInverseError,
    NoNeutralError,
    ParentMismatchError,
)
from schemehall.exhaustive import all_closed_subsets_scan, closure_scan

PENTAGON = [
    [{0}, {1}, {2}],
    [{1}, {0, 2}, {1, 2}],
    [{2}, {1, 2}, {0, 1}],
]

SQUARE = [
    [{0}, {1}, {2}],
    [{1}, {0, 2}, {1}],
    [{2}, {1}, {0}],
]


@pytest.fixture
def pentagon():
    return sh.validate_hypergroup(PENTAGON, name="pentagon")


@pytest.fixture
def square():
    return sh.validate_hypergroup(SQUARE, name="square")


def test_validate_accepts_pentagon(pentagon):
    assert pentagon.size == 3
    assert pentagon.inverse == (0, 1, 2)
    assert pentagon.product(1, 1).members() == (0, 2)
    assert pentagon.product(2, 2).members() == (0, 1)


def test_neutral_is_reindexed_to_zero():
    # same structure as C2 but with the neutral element listed second
    table = [
        [{0}, {1}],
        [{1}, {0}],
    ]
    shuffled = [
        [{1}, {0}],
        [{0}, {1}],
    ]
    a = sh.validate_hypergroup(table)
    b = sh.validate_hypergroup(shuffled)
    assert a.table == b.table


def test_missing_neutral_rejected():
    bad = [[{1}, {0, 1}], [{0, 1}, {0}]]
    with pytest.raises(NoNeutralError):
        sh.validate_hypergroup(bad)


def test_empty_product_rejected():
    bad = [[{0}, {1}], [{1}, set()]]
    with pytest.raises(EmptyProductError):
        sh.validate_hypergroup(bad)


def test_missing_inverse_rejected():
    # 1*1 = {1} means no inverse for 1
    bad = [[{0}, {1}], [{1}, {1}]]
    with pytest.raises(NoInverseError):
        sh.validate_hypergroup(bad)


def test_associativity_violation_rejected():
    # Klein-like table with 1*1 fattened to {0,1}: every exchange
    # condition still holds, but (1*1)*2 = {2,3} while 1*(1*2) = {2}
    bad = [
        [{0}, {1}, {2}, {3}],
        [{1}, {0, 1}, {3}, {2}],
        [{2}, {3}, {0}, {1}],
        [{3}, {2}, {1}, {0}],
    ]
    with pytest.raises(AssocViolationError) as exc:
        sh.validate_hypergroup(bad)
    assert "(1, 1, 2)" in str(exc.value)


def test_subset_algebra(pentagon):
    a = pentagon.subset([1])
    b = pentagon.subset([2])
    assert (a | b).members() == (1, 2)
    assert (a * b).members() == (1, 2)
    assert (a * a).members() == (0, 2)
    assert a.star() == a
    assert len(a * b) == 2


def test_parent_mismatch_rejected(pentagon, square):
    with pytest.raises(ParentMismatchError):
        pentagon.subset([1]) | square.subset([1])


def test_closure_pentagon(pentagon):
    got = sh.closure(pentagon.subset([1]))
    assert got.members() == (0, 1, 2)
    with pytest.raises(sh.EmptyInputError):
        sh.closure(pentagon.subset([]))


def test_closed_subsets_pentagon(pentagon):
    subsets = sh.enumerate_closed_subsets(pentagon)
    assert [c.members() for c in subsets] == [(0,), (0, 1, 2)]
    assert [c.bits for c in all_closed_subsets_scan(pentagon)] == [c.bits for c in subsets]


def test_closed_subsets_square(square):
    subsets = sh.enumerate_closed_subsets(square)
    assert [c.members() for c in subsets] == [(0,), (0, 2), (0, 1, 2)]


def test_closure_against_scan(square):
    for bits in range(1, 1 << square.size):
        fast = sh.closure(square.subset(bits))
        slow = closure_scan(square.subset(bits))
        assert fast.bits == slow.bits


def test_thin_detection(pentagon, square):
    assert sh.thin_elements(pentagon).elements.members() == (0,)
    assert sh.thin_elements(square).elements.members() == (0, 2)
    assert not sh.is_thin(pentagon)
    assert not sh.is_thin(square)
    assert sh.is_thin(sh.thin_hypergroup(sh.cyclic(4)))


def test_theta_core(pentagon, square):
    assert sh.theta_core(pentagon).members() == (0, 1, 2)
    assert sh.theta_core(square).members() == (0, 2)


def test_metathin(square, pentagon):
    # square: theta core {0,2} equals the thin elements, so metathin
    assert sh.is_metathin(square)
    assert not sh.is_metathin(pentagon)


def test_strong_normality(square):
    full = square.universe()
    assert sh.is_strongly_normal(square.subset([0, 2]), full)
    assert not sh.is_strongly_normal(square.subset([0]), full)


def test_double_cosets(square):
    masks = sh.double_cosets(square, square.subset([0, 2]))
    # {0,2} and {1}
    assert masks == [0b101, 0b010]


def test_double_cosets_require_closed(pentagon):
    with pytest.raises(sh.NotSubsetError):
        sh.double_cosets(pentagon, pentagon.subset([1]))


def test_format_table_smoke(square):
    text = sh.format_table(square)
    assert "{0,2}" in text


# A thin hypergroup built from any group table must satisfy all axioms
# and report every element as thin.
@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=12))
def test_thin_hypergroup_from_cyclic(n):
    hg = sh.thin_hypergroup(sh.cyclic(n))
    assert hg.size == n
    assert sh.thin_elements(hg).elements.bits == hg.full_mask


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=7), st.integers(min_value=0, max_value=7))
def test_subset_star_reverses_products(a_bits, b_bits):
    hg = sh.validate_hypergroup(PENTAGON)
    a = ElementSubset(hg, a_bits & hg.full_mask)
    b = ElementSubset(hg, b_bits & hg.full_mask)
    assert (a * b).star().bits == (b.star() * a.star()).bits


def test_is_closed_matches_definition(pentagon):
    assert sh.is_closed(pentagon.subset([0]))
    assert not sh.is_closed(pentagon.subset([0, 1]))
    assert sh.is_closed(pentagon.universe())
