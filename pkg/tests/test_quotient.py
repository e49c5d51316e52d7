"""Quotients, restrictions, homomorphisms and isomorphism search.

Frozen values, worked out by hand before being written down here:

* C6 = <g>, D = {0, 3} (the order-2 subgroup).  Cosets of D in order of
  smallest member: {0,3}, {1,4}, {2,5}.  Coset products collapse to the
  C3 multiplication table, so the quotient is thin of order 3.
* S3 with F = closure of a transposition (order 2, not normal).  The
  double cosets are F itself and the other four elements lumped
  together, so the quotient has order 2 and the non-neutral double
  coset q satisfies q*q = {0, 1}: the quotient is not thin.
* Square (4-cycle distance hypergroup) mod {0, 2} gives the thin C2.
"""

import pytest

import schemehall as sh
from schemehall.hypergroup import bits_of

PENTAGON = [[{0}, {1}, {2}], [{1}, {0, 2}, {1, 2}], [{2}, {1, 2}, {0, 1}]]
SQUARE = [[{0}, {1}, {2}], [{1}, {0, 2}, {1}], [{2}, {1}, {0}]]


@pytest.fixture
def c6():
    return sh.thin_hypergroup(sh.cyclic(6), name="c6")


@pytest.fixture
def c3():
    return sh.thin_hypergroup(sh.cyclic(3), name="c3")


def test_c6_mod_order2_is_thin_c3(c6, c3):
    d = c6.subset([0, 3])
    q = sh.quotient(c6, d)
    assert q.size == 3
    assert [tuple(bits_of(m)) for m in q.cosets] == [(0, 3), (1, 4), (2, 5)]
    assert q.table == ((1, 2, 4), (2, 4, 1), (4, 1, 2))
    assert q.inverse == (0, 2, 1)
    assert sh.is_thin(q)
    assert sh.is_thin_quotient(q)
    assert sh.find_isomorphism(q, c3) == (0, 1, 2)


def test_square_mod_diagonal_is_thin_c2():
    sq = sh.validate_hypergroup(SQUARE, name="square")
    q = sh.quotient(sq, sq.subset([0, 2]))
    assert q.size == 2
    assert q.table == ((1, 2), (2, 1))
    assert [tuple(bits_of(m)) for m in q.cosets] == [(0, 2), (1,)]


def test_nonnormal_modulus_gives_nonthin_quotient():
    s3 = sh.thin_hypergroup(sh.symmetric(3), name="s3")
    f = sh.closure(s3.subset([1]))
    assert len(f) == 2
    assert not sh.is_normal_in(f, s3.universe())
    q = sh.quotient(s3, f)
    assert q.size == 2
    # the big double coset squares to everything
    assert q.table == ((1, 2), (2, 3))
    assert tuple(sh.thin_elements(q).elements.members()) == (0,)
    assert not sh.is_thin_quotient(q)


def test_quotient_by_full_is_trivial(c6):
    q = sh.quotient(c6, c6.universe())
    assert q.size == 1
    assert q.table == ((1,),)


def test_quotient_rejects_nonclosed_modulus(c6):
    with pytest.raises(sh.NotClosedError):
        sh.quotient(c6, c6.subset([0, 1]))


def test_quotient_rejects_foreign_subset(c6, c3):
    with pytest.raises(sh.ParentMismatchError):
        sh.quotient(c6, c3.subset([0]))


def test_restriction_to_closed_subset(c6):
    e = sh.closure(c6.subset([2]))
    assert tuple(e.members()) == (0, 2, 4)
    sub, members = sh.restriction(c6, e)
    assert members == (0, 2, 4)
    assert sub.size == 3
    assert sub.table == ((1, 2, 4), (2, 4, 1), (4, 1, 2))


def test_subquotient_degenerate_cases(c6):
    d = c6.subset([0, 3])
    whole = sh.subquotient(c6, c6.universe(), d)
    assert whole.table == sh.quotient(c6, d).table
    part = sh.subquotient(c6, sh.closure(c6.subset([2])), c6.neutral_subset())
    assert part.size == 3
    assert sh.is_thin(part)


def test_lift_project_bijection(c6):
    """Closed subsets above the modulus correspond to closed subsets
    of the quotient, one-to-one and inclusion-preserving."""
    d = c6.subset([0, 3])
    q = sh.quotient(c6, d)
    above = [cs for cs in sh.enumerate_closed_subsets(c6) if d.issubset(cs)]
    below = list(sh.enumerate_closed_subsets(q))
    assert [tuple(cs.members()) for cs in above] == [(0, 3), (0, 1, 2, 3, 4, 5)]
    assert [tuple(cs.members()) for cs in below] == [(0,), (0, 1, 2)]
    for cs in above:
        down = sh.project_closed(q, cs)
        assert tuple(sh.lift_closed(q, down).members()) == tuple(cs.members())
    for cs in below:
        up = sh.lift_closed(q, cs)
        assert tuple(sh.project_closed(q, up).members()) == tuple(cs.members())


def test_natural_projection_and_kernel(c6):
    d = c6.subset([0, 3])
    phi, q = sh.natural_projection(c6, d)
    assert phi.mapping == (0, 1, 2, 0, 1, 2)
    assert phi.target is q
    assert tuple(sh.kernel(phi).members()) == (0, 3)


def test_validate_homomorphism_accepts_coset_map(c6, c3):
    phi = sh.validate_homomorphism(c6, c3, (0, 1, 2, 0, 1, 2))
    assert tuple(sh.kernel(phi).members()) == (0, 3)


def test_validate_homomorphism_accepts_embedding(c6, c3):
    # C3 into C6 doubling exponents; image is the closed subset {0,2,4}
    phi = sh.validate_homomorphism(c3, c6, (0, 2, 4))
    assert tuple(sh.closure(c6.subset(phi.mapping)).members()) == (0, 2, 4)
    assert tuple(sh.kernel(phi).members()) == (0,)


def test_validate_homomorphism_rejects_law_violation(c6, c3):
    with pytest.raises(ValueError, match="homomorphism law"):
        sh.validate_homomorphism(c6, c3, (0, 1, 2, 0, 1, 1))


def test_validate_homomorphism_rejects_nonneutral_image(c6, c3):
    with pytest.raises(ValueError):
        sh.validate_homomorphism(c6, c3, (1, 2, 0, 1, 2, 0))


def test_find_isomorphism_positive_and_negative(c3):
    pent = sh.validate_hypergroup(PENTAGON, name="pentagon")
    assert sh.find_isomorphism(pent, c3) is None
    assert sh.find_isomorphism(pent, pent) == (0, 1, 2)
    c6a = sh.thin_hypergroup(sh.cyclic(6))
    s3 = sh.thin_hypergroup(sh.symmetric(3))
    assert sh.find_isomorphism(c6a, s3) is None


def test_find_isomorphism_order_cap():
    big = sh.thin_hypergroup(sh.cyclic(25))
    with pytest.raises(sh.SearchOverflowError):
        sh.find_isomorphism(big, big)


def test_second_isomorphism_instances_on_c6(c6):
    """Collapsing in two steps agrees with collapsing in one: for
    closed D inside normal closed E, (H//D)//(E//D) is isomorphic to
    H//E.  Checked over every admissible pair in C6."""
    pairs = 0
    for dm in sh.enumerate_closed_subsets(c6):
        for em in sh.enumerate_closed_subsets(c6):
            if not dm.issubset(em):
                continue
            if not sh.is_normal_in(em, c6.universe()):
                continue
            qd = sh.quotient(c6, dm)
            big = sh.quotient(qd, sh.project_closed(qd, em))
            direct = sh.quotient(c6, em)
            assert sh.find_isomorphism(big, direct) is not None
            pairs += 1
    assert pairs == 9  # 4 closed subsets of C6, all normal, nested pairs
