"""Hall subsets of solvable schemes with bounded valency primes.

The route is always the same: locate the core O (the largest subnormal
closed subset whose valencies stay inside pi), quotient by it to get a
thin scheme, read that off as a group, solve the classical Hall problem
there, and lift the answer back through the closed-subset
correspondence.  Every step that theory promises is re-checked at run
time, and an exhaustive filter over all closed subsets runs beside the
constructive route so the two can never drift apart silently.
"""
from __future__ import annotations

from collections.abc import Iterable

from .arith import format_pi, is_pi_number, pi_part, validate_pi
from .errors import (
    InternalInconsistencyError,
    NoConjugatorFoundError,
    NotClosedPiSubsetError,
    NotHallError,
    NotPiValencedError,
    NotSolvableError,
    NotSolvableGroupError,
)
from .groups import (
    Table,
    all_subgroups,
    find_subgroup_conjugator,
    thin_hypergroup,
    validate_group,
)
from .hypergroup import (
    ElementSubset,
    Hypergroup,
    bits_of,
    enumerate_closed_subsets,
    is_strongly_normal,
    is_subnormal,
)
from .quotient import QuotientHypergroup, is_thin_quotient, lift_closed, project_closed, quotient
from .scheme import (
    AssociationScheme,
    SchemeClosedSubset,
    conjugators,
    is_solvable_scheme,
    pi_predicates,
)
from .solvability import is_solvable

__all__ = [
    "HallCertificate",
    "compute_o_pi",
    "group_from_thin",
    "hall_subgroups",
    "all_hall_subsets",
    "find_hall",
    "conjugating_element",
    "all_conjugating_elements",
    "extend_to_hall",
]


class HallCertificate:
    """Everything find_hall and extend_to_hall establish, in one record.

    hall is the closed subset itself; o_pi the core it was built over;
    thin_quotient_group the Cayley table of the quotient; and
    lifted_subgroup the subgroup (as a bitmask over quotient elements)
    whose lift is hall.  conjugator is only set by conjugacy queries.
    """

    __slots__ = (
        "pi",
        "scheme",
        "hall",
        "o_pi",
        "thin_quotient_group",
        "lifted_subgroup",
        "conjugator",
        "hyper_quotient",
    )

    def __init__(
        self,
        pi: frozenset[int],
        scheme: AssociationScheme,
        hall: SchemeClosedSubset,
        o_pi: SchemeClosedSubset,
        thin_quotient_group: Table,
        lifted_subgroup: int,
        hyper_quotient: QuotientHypergroup,
        conjugator: int | None = None,
    ):
        self.pi = pi
        self.scheme = scheme
        self.hall = hall
        self.o_pi = o_pi
        self.thin_quotient_group = thin_quotient_group
        self.lifted_subgroup = lifted_subgroup
        self.hyper_quotient = hyper_quotient
        self.conjugator = conjugator

    @property
    def index(self) -> int:
        return self.scheme.n_points // self.hall.valency

    def __repr__(self) -> str:
        return (
            f"<HallCertificate pi={format_pi(self.pi)} "
            f"n_T={self.hall.valency} index={self.index}>"
        )


def _require_solvable_and_valenced(scheme: AssociationScheme, ps: frozenset[int]) -> None:
    for s, v in enumerate(scheme.valencies):
        if not is_pi_number(v, ps):
            raise NotPiValencedError(
                f"scheme is not {format_pi(ps)}-valenced: "
                f"relation {s} has valency {v}"
            )
    if not is_solvable_scheme(scheme):
        raise NotSolvableError(
            "scheme admits no chain of strongly normal closed subsets "
            "with prime valency indices"
        )


def compute_o_pi(scheme: AssociationScheme, pi: Iterable[int]) -> SchemeClosedSubset:
    """Largest subnormal closed subset with all valencies pi-numbers.

    Enumerates every closed subset, filters, and takes the maximum; the
    claims that make the result usable downstream (it contains every
    candidate, it is strongly normal, the quotient by it is thin) are
    asserted rather than trusted.
    """
    ps = validate_pi(pi)
    _require_solvable_and_valenced(scheme, ps)
    hg = scheme.hypergroup
    universe = hg.universe()
    candidates: list[SchemeClosedSubset] = []
    for c in enumerate_closed_subsets(hg):
        t = SchemeClosedSubset(scheme, c)
        if not is_pi_number(t.valency, ps):
            continue
        if not all(is_pi_number(scheme.valencies[s], ps) for s in c.members()):
            continue
        if not is_subnormal(c, universe):
            continue
        candidates.append(t)
    if not candidates:
        raise InternalInconsistencyError(
            "a solvable scheme has no subnormal closed pi-subsets at all"
        )
    core = max(candidates, key=lambda t: t.valency)
    for t in candidates:
        if t.bits & ~core.bits:
            raise InternalInconsistencyError(
                "maximal subnormal closed pi-subset does not contain "
                f"candidate {t.members()}"
            )
    if not is_strongly_normal(core.subset, universe):
        raise InternalInconsistencyError("the pi-core must be strongly normal")
    if not is_thin_quotient(quotient(hg, core.subset)):
        raise InternalInconsistencyError("quotient by the pi-core must be thin")
    return core


def group_from_thin(hg: Hypergroup) -> Table:
    """Read a thin hypergroup off as a Cayley table."""
    n = hg.size
    rows: list[list[int]] = []
    for p in range(n):
        row = []
        for q in range(n):
            m = hg.table[p][q]
            if m & (m - 1):
                raise InternalInconsistencyError(
                    f"product {p} * {q} is not a single element; "
                    "hypergroup is not thin"
                )
            row.append(m.bit_length() - 1)
        rows.append(row)
    return validate_group(rows)


def hall_subgroups(table: Table, pi: Iterable[int]) -> tuple[int, ...]:
    """All subgroups whose order is the pi-part of the group order.

    Subgroup bitmasks, ordered by member tuple.  The group must be
    solvable; existence and mutual conjugacy of the result are classical
    facts re-checked here, not assumed.
    """
    ps = validate_pi(pi)
    t = validate_group(table)
    if not is_solvable(thin_hypergroup(t)):
        raise NotSolvableGroupError(f"group of order {len(t)} is not solvable")
    target = pi_part(len(t), ps)
    halls = tuple(m for m in all_subgroups(t) if m.bit_count() == target)
    if not halls:
        raise InternalInconsistencyError(
            f"solvable group of order {len(t)} has no subgroup of order {target}"
        )
    for other in halls[1:]:
        if find_subgroup_conjugator(t, halls[0], other) is None:
            raise InternalInconsistencyError(
                "two Hall subgroups of a solvable group are not conjugate"
            )
    return halls


def all_hall_subsets(
    scheme: AssociationScheme, pi: Iterable[int]
) -> tuple[SchemeClosedSubset, ...]:
    """Exhaustive filter: every closed subset passing the Hall predicate."""
    ps = validate_pi(pi)
    out = []
    for t in scheme.closed_subsets():
        if pi_predicates(scheme, t, ps).is_hall_pi_subset:
            out.append(t)
    return tuple(out)


def find_hall(scheme: AssociationScheme, pi: Iterable[int]) -> HallCertificate:
    """A Hall subset for pi, with its construction trail.

    Constructive route through the thin quotient group, verified
    against the exhaustive filter; the lexicographically least Hall
    subset is the one certified.
    """
    ps = validate_pi(pi)
    core = compute_o_pi(scheme, ps)
    hg = scheme.hypergroup
    hq = quotient(hg, core.subset)
    gtable = group_from_thin(hq)
    lifted: list[tuple[int, SchemeClosedSubset]] = []
    for gm in hall_subgroups(gtable, ps):
        up = lift_closed(hq, ElementSubset(hq, gm))
        t = scheme.closed_subset(up.bits)
        if not pi_predicates(scheme, t, ps).is_hall_pi_subset:
            raise InternalInconsistencyError(
                f"lift of a group Hall subgroup is not Hall: {t.members()}"
            )
        lifted.append((gm, t))

    filtered = all_hall_subsets(scheme, ps)
    if {t.bits for _, t in lifted} != {t.bits for t in filtered}:
        raise InternalInconsistencyError(
            "constructive Hall family differs from the exhaustive filter"
        )
    for t in filtered:
        if core.bits & ~t.bits:
            raise InternalInconsistencyError(
                "a Hall subset does not contain the pi-core"
            )

    gm, best = min(lifted, key=lambda pair: pair[1].members())
    return HallCertificate(ps, scheme, best, core, gtable, gm, hq)


def all_conjugating_elements(
    scheme: AssociationScheme, t: SchemeClosedSubset, u: SchemeClosedSubset
) -> tuple[int, ...]:
    """Every relation s with s^ T s = U, by direct scan."""
    return conjugators(scheme, t, u)


def conjugating_element(
    scheme: AssociationScheme,
    t: SchemeClosedSubset,
    u: SchemeClosedSubset,
    pi: Iterable[int],
) -> int:
    """A relation conjugating one Hall subset onto another.

    Inputs are re-verified as Hall subsets.  The conjugator is found by
    direct scan; the quotient-group route is run as well and must land
    inside the scanned set.  Returns the least valid relation index.
    """
    ps = validate_pi(pi)
    core = compute_o_pi(scheme, ps)
    for label, x in (("first", t), ("second", u)):
        if not pi_predicates(scheme, x, ps).is_hall_pi_subset:
            raise NotHallError(
                f"{label} subset (relations {list(x.members())}, valency "
                f"{x.valency}) is not a Hall {format_pi(ps)}-subset"
            )

    direct = conjugators(scheme, t, u)
    if not direct:
        raise NoConjugatorFoundError(
            "no relation conjugates the first Hall subset onto the second; "
            "conjugacy is guaranteed here, so this is an engine bug"
        )

    for x in (t, u):
        if core.bits & ~x.bits:
            raise InternalInconsistencyError(
                "a verified Hall subset does not contain the pi-core"
            )
    hq = quotient(scheme.hypergroup, core.subset)
    gtable = group_from_thin(hq)
    a = project_closed(hq, t.subset).bits
    b = project_closed(hq, u.subset).bits
    g = find_subgroup_conjugator(gtable, a, b)
    if g is None:
        raise InternalInconsistencyError(
            "quotient group route found no conjugator although a direct "
            "one exists"
        )
    coset = set(bits_of(hq.cosets[g]))
    if not coset & set(direct):
        raise InternalInconsistencyError(
            "no member of the lifted conjugator coset conjugates the "
            "subsets directly"
        )
    return min(direct)


def extend_to_hall(
    scheme: AssociationScheme,
    subset: SchemeClosedSubset,
    pi: Iterable[int],
) -> HallCertificate:
    """Grow a closed pi-subset into a Hall subset containing it.

    Multiplies by the core, projects to the quotient group, extends
    there, lifts back.  Containment of the original subset is checked
    directly at the end.
    """
    ps = validate_pi(pi)
    core = compute_o_pi(scheme, ps)
    preds = pi_predicates(scheme, subset, ps)
    if not preds.is_closed_pi_subset:
        raise NotClosedPiSubsetError(
            f"subset of valency {subset.valency} with relations "
            f"{list(subset.members())} is not a closed {format_pi(ps)}-subset"
        )

    hg = scheme.hypergroup
    grown = hg.mul_masks(core.bits, subset.bits)
    if not hg.is_closed_mask(grown):
        raise InternalInconsistencyError(
            "product of the pi-core with a closed subset must be closed"
        )
    hq = quotient(hg, core.subset)
    gtable = group_from_thin(hq)
    img = project_closed(hq, hg.subset(grown)).bits

    chosen = None
    for gm in hall_subgroups(gtable, ps):
        if img & ~gm == 0:
            chosen = gm
            break
    if chosen is None:
        raise InternalInconsistencyError(
            "no group Hall subgroup contains the projected pi-subgroup"
        )

    up = lift_closed(hq, ElementSubset(hq, chosen))
    hall = scheme.closed_subset(up.bits)
    if not pi_predicates(scheme, hall, ps).is_hall_pi_subset:
        raise InternalInconsistencyError("extension is not a Hall subset")
    if grown & ~hall.bits or subset.bits & ~hall.bits:
        raise InternalInconsistencyError(
            "extension does not contain the subset it was grown from"
        )
    return HallCertificate(ps, scheme, hall, core, gtable, chosen, hq)
