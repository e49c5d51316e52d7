"""Hall subsets: search, conjugacy and extension.

Frozen expectations, cross-checked against plain group theory before
being written down: in S4 the Sylow 2-subgroups are the three dihedral
subgroups of order 8 (counted here by brute-force subgroup enumeration,
see `all_subgroups`), O_2(S4) is the Klein four-group of double
transpositions, and O_3(S4) is trivial.
"""

import pytest

import schemehall as sh
from schemehall.groups import all_subgroups


@pytest.fixture(scope="module")
def s4_scheme():
    return sh.from_group(sh.symmetric(4), name="s4")


@pytest.fixture(scope="module")
def wreath28():
    return sh.bundled_scheme("hm176_28").scheme()


def test_c6_hall_certificates():
    c6 = sh.from_group(sh.cyclic(6), name="c6")
    cert2 = sh.find_hall(c6, {2})
    assert tuple(cert2.hall.members()) == (0, 3)
    assert cert2.index == 3
    assert tuple(cert2.o_pi.members()) == (0, 3)
    cert3 = sh.find_hall(c6, {3})
    assert tuple(cert3.hall.members()) == (0, 2, 4)
    assert cert3.index == 2
    empty = sh.find_hall(c6, set())
    assert tuple(empty.hall.members()) == (0,)
    assert empty.index == 6


def test_s4_three_sylow2_subsets(s4_scheme):
    halls = sh.all_hall_subsets(s4_scheme, {2})
    assert len(halls) == 3
    assert all(len(h.members()) == 8 for h in halls)
    # brute-force subgroup enumeration sees the same three
    masks = [m for m in all_subgroups(sh.symmetric(4)) if bin(m).count("1") == 8]
    assert len(masks) == 3
    assert sorted(h.bits for h in halls) == sorted(masks)


def test_find_hall_returns_first_hall_subset(s4_scheme):
    halls = sh.all_hall_subsets(s4_scheme, {2})
    cert = sh.find_hall(s4_scheme, {2})
    assert cert.hall == halls[0]
    assert tuple(cert.hall.members()) == (0, 1, 6, 7, 16, 17, 22, 23)


def test_s4_sylows_are_conjugate(s4_scheme):
    halls = sh.all_hall_subsets(s4_scheme, {2})
    for t in halls:
        for u in halls:
            g = sh.conjugating_element(s4_scheme, t, u, {2})
            moved = sh.conjugate_subset(s4_scheme, t, g)
            assert tuple(moved.members()) == tuple(u.members())
    assert sh.conjugating_element(s4_scheme, halls[0], halls[0], {2}) == 0
    assert sh.all_conjugating_elements(s4_scheme, halls[0], halls[1]) == (
        4, 5, 8, 9, 14, 15, 18, 19,
    )


def test_conjugating_element_rejects_non_hall(s4_scheme):
    halls = sh.all_hall_subsets(s4_scheme, {2})
    with pytest.raises(sh.NotHallError):
        sh.conjugating_element(s4_scheme, s4_scheme.identity_subset(), halls[0], {2})


def test_o_pi_values(s4_scheme):
    v4 = sh.compute_o_pi(s4_scheme, {2})
    assert tuple(v4.members()) == (0, 7, 16, 23)
    assert len(v4.members()) == 4
    assert tuple(sh.compute_o_pi(s4_scheme, {3}).members()) == (0,)


def test_extend_to_hall(s4_scheme):
    tab = sh.symmetric(4)
    involution = next(x for x in range(1, 24) if tab[x][x] == 0)
    small = s4_scheme.relation_closure([involution])
    assert tuple(small.members()) == (0, 1)
    cert = sh.extend_to_hall(s4_scheme, small, {2})
    assert len(cert.hall.members()) == 8
    assert set(small.members()) <= set(cert.hall.members())


def test_extend_to_hall_rejects_non_pi_subset(s4_scheme):
    tab = sh.symmetric(4)
    three_cycle = next(x for x in range(1, 24) if tab[x][x] != 0)
    odd = s4_scheme.relation_closure([three_cycle])
    with pytest.raises(sh.NotClosedPiSubsetError):
        sh.extend_to_hall(s4_scheme, odd, {2})


def test_wreath28_certificate(wreath28):
    cert = sh.find_hall(wreath28, {2})
    assert wreath28.valency_of_mask(cert.hall.bits) == 4
    assert cert.index == 7
    assert wreath28.valency_of_mask(cert.o_pi.bits) == 4
    assert len(cert.thin_quotient_group) == 7
    assert cert.lifted_subgroup == 1  # only the neutral coset upstairs
    assert cert.conjugator is None


def test_precondition_errors_and_messages(wreath28):
    with pytest.raises(
        sh.NotPiValencedError,
        match=r"scheme is not \{7\}-valenced: relation 4 has valency 4",
    ):
        sh.find_hall(wreath28, {7})
    pent = sh.bundled_scheme("pentagon").scheme()
    with pytest.raises(sh.NotSolvableError):
        sh.find_hall(pent, {2})
    # the Petersen scheme is {2,3}-valenced, so it passes the first
    # gate and fails on solvability
    pet = sh.bundled_scheme("petersen").scheme()
    with pytest.raises(sh.NotSolvableError):
        sh.find_hall(pet, {2, 3})


def test_hall_subgroups_matches_brute_force():
    for table, pi in [
        (sh.symmetric(4), {2}),
        (sh.symmetric(4), {3}),
        (sh.dihedral(6), {2}),
        (sh.dihedral(6), {3}),
        (sh.quaternion(), {2}),
    ]:
        order = len(table)
        target = sh.pi_part(order, pi)
        brute = sorted(
            m for m in all_subgroups(table) if bin(m).count("1") == target
        )
        assert sorted(sh.hall_subgroups(table, pi)) == brute
        assert brute, (order, pi)
