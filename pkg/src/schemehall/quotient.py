"""Quotients of hypergroups and structure preserving maps.

The quotient of a hypergroup H by a closed subset F lives on the double
cosets F h F.  Coset i is represented by the smallest element it
contains, cosets are numbered in order of their representatives, and
the coset of the neutral element (which is F itself) therefore always
lands at index 0.
"""
from __future__ import annotations

from collections.abc import Sequence

from .errors import (
    InternalInconsistencyError,
    NotClosedError,
    NotSubsetError,
    SearchOverflowError,
)
from .hypergroup import (
    ClosedSubset,
    ElementSubset,
    Hypergroup,
    bits_of,
    is_strongly_normal,
    mask_of,
    validate_hypergroup,
)

__all__ = [
    "QuotientHypergroup",
    "quotient",
    "subquotient",
    "restriction",
    "lift_closed",
    "project_closed",
    "is_thin_quotient",
    "HypergroupHomomorphism",
    "validate_homomorphism",
    "kernel",
    "natural_projection",
    "find_isomorphism",
    "ISOMORPHISM_ORDER_CAP",
]


class QuotientHypergroup(Hypergroup):
    """Hypergroup of double cosets, remembering where it came from.

    Inherits the full Hypergroup interface; `parent`, `modulus`,
    `cosets` (bitmasks over parent elements, indexed by coset) and
    `coset_of` (parent element to coset index) carry the projection
    data.
    """

    __slots__ = ("parent", "modulus", "cosets", "coset_of")

    def __init__(
        self,
        table: tuple[tuple[int, ...], ...],
        inverse: tuple[int, ...],
        parent: Hypergroup,
        modulus: ClosedSubset,
        cosets: tuple[int, ...],
        coset_of: tuple[int, ...],
        name: str = "",
    ):
        super().__init__(table, inverse, name=name)
        self.parent = parent
        self.modulus = modulus
        self.cosets = cosets
        self.coset_of = coset_of


def quotient(hg: Hypergroup, modulus: ElementSubset) -> QuotientHypergroup:
    """H // F for a closed subset F of H.

    The product of cosets with representatives a and b is the set of
    cosets meeting a F b.  The resulting table is re-validated against
    the hypergroup axioms before being returned.
    """
    modulus._check(hg.universe())
    if not hg.is_closed_mask(modulus.bits):
        raise NotClosedError("quotient modulus must be a closed subset")
    f = modulus.bits

    coset_of = [-1] * hg.size
    cosets: list[int] = []
    for h in hg.elements:
        if coset_of[h] != -1:
            continue
        coset = hg.mul_masks(hg.mul_masks(f, 1 << h), f)
        idx = len(cosets)
        for x in bits_of(coset):
            if coset_of[x] != -1:
                raise InternalInconsistencyError(
                    "double cosets failed to partition the element set"
                )
            coset_of[x] = idx
        cosets.append(coset)

    k = len(cosets)
    reps = [min(bits_of(c)) for c in cosets]
    raw: list[list[int]] = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            prod = hg.mul_masks(hg.mul_masks(1 << reps[i], f), 1 << reps[j])
            m = 0
            for x in bits_of(prod):
                m |= 1 << coset_of[x]
            raw[i][j] = m

    checked = validate_hypergroup(raw, name=f"{hg.name}//{modulus.members()}")
    # coset 0 contains the parent neutral, so validation must not permute
    if checked.table != tuple(tuple(row) for row in raw):
        raise InternalInconsistencyError("quotient neutral coset was not at index 0")

    return QuotientHypergroup(
        checked.table,
        checked.inverse,
        parent=hg,
        modulus=ClosedSubset(hg, f),
        cosets=tuple(cosets),
        coset_of=tuple(coset_of),
        name=checked.name,
    )


def restriction(hg: Hypergroup, subset: ElementSubset) -> tuple[Hypergroup, tuple[int, ...]]:
    """The closed subset as a hypergroup of its own.

    Returns the re-indexed hypergroup together with the member tuple, so
    new index i corresponds to old element members[i].
    """
    subset._check(hg.universe())
    if not hg.is_closed_mask(subset.bits):
        raise NotClosedError("can only restrict to a closed subset")
    members = subset.members()
    pos = {old: new for new, old in enumerate(members)}
    k = len(members)
    raw = [[0] * k for _ in range(k)]
    for i, a in enumerate(members):
        for j, b in enumerate(members):
            m = 0
            for x in bits_of(hg.table[a][b]):
                m |= 1 << pos[x]
            raw[i][j] = m
    sub = validate_hypergroup(raw, name=f"{hg.name}|{members}")
    return sub, members


def subquotient(hg: Hypergroup, outer: ElementSubset, inner: ElementSubset) -> QuotientHypergroup:
    """outer // inner, both closed subsets of hg with inner inside outer."""
    outer._check(inner)
    if not inner.issubset(outer):
        raise NotSubsetError("inner subset must lie inside the outer one")
    sub, members = restriction(hg, outer)
    pos = {old: new for new, old in enumerate(members)}
    inner_in_sub = sub.subset(mask_of(pos[x] for x in inner.members()))
    return quotient(sub, inner_in_sub)


def lift_closed(q: QuotientHypergroup, subset: ElementSubset) -> ClosedSubset:
    """Union of the cosets named by a closed subset of the quotient."""
    subset._check(q.universe())
    if not q.is_closed_mask(subset.bits):
        raise NotClosedError("can only lift a closed subset of the quotient")
    m = 0
    for c in bits_of(subset.bits):
        m |= q.cosets[c]
    if not q.parent.is_closed_mask(m):
        raise InternalInconsistencyError("lift of a closed subset is not closed")
    return ClosedSubset(q.parent, m)


def project_closed(q: QuotientHypergroup, subset: ElementSubset) -> ClosedSubset:
    """Image in the quotient of a closed subset of the parent containing F."""
    subset._check(q.parent.universe())
    if not q.parent.is_closed_mask(subset.bits):
        raise NotClosedError("can only project a closed subset")
    if q.modulus.bits & ~subset.bits:
        raise NotSubsetError("projection needs a subset containing the modulus")
    m = 0
    for x in bits_of(subset.bits):
        m |= 1 << q.coset_of[x]
    if not q.is_closed_mask(m):
        raise InternalInconsistencyError("projection of a closed subset is not closed")
    return ClosedSubset(q, m)


def is_thin_quotient(q: QuotientHypergroup) -> bool:
    """True when every coset of the quotient is thin.

    Equivalent to the modulus being strongly normal in the parent; the
    equivalence is asserted on every call.
    """
    thin = all(q.is_thin_element(s) for s in q.elements)
    strong = is_strongly_normal(q.modulus, q.parent.universe())
    assert thin == strong, "thin quotient must coincide with strong normality"
    return thin


# ---------------------------------------------------------------------------
# homomorphisms


class HypergroupHomomorphism:
    """A validated map phi with phi(ab) = phi(a) phi(b) as sets."""

    __slots__ = ("source", "target", "mapping")

    def __init__(self, source: Hypergroup, target: Hypergroup, mapping: tuple[int, ...]):
        self.source = source
        self.target = target
        self.mapping = mapping

    def __call__(self, s: int) -> int:
        return self.mapping[s]

    def image_mask(self, mask: int) -> int:
        out = 0
        for s in bits_of(mask):
            out |= 1 << self.mapping[s]
        return out

    def image(self) -> ElementSubset:
        return ElementSubset(self.target, self.image_mask(self.source.full_mask))

    def __repr__(self) -> str:
        return f"<HypergroupHomomorphism {self.mapping}>"


def validate_homomorphism(
    source: Hypergroup,
    target: Hypergroup,
    mapping: Sequence[int],
) -> HypergroupHomomorphism:
    """Check the homomorphism law, with set images compared for equality."""
    if len(mapping) != source.size:
        raise ValueError("mapping length does not match the source order")
    for v in mapping:
        if not 0 <= v < target.size:
            raise ValueError(f"mapping value {v} outside the target")
    if mapping[0] != 0:
        raise ValueError("homomorphisms must send neutral to neutral")
    phi = HypergroupHomomorphism(source, target, tuple(mapping))
    for a in source.elements:
        for b in source.elements:
            lhs = phi.image_mask(source.table[a][b])
            rhs = target.table[mapping[a]][mapping[b]]
            if lhs != rhs:
                raise ValueError(
                    f"homomorphism law fails at ({a}, {b}): "
                    f"image {lhs:#x} versus product {rhs:#x}"
                )
    return phi


def kernel(phi: HypergroupHomomorphism) -> ClosedSubset:
    """Preimage of the neutral element; always a closed subset."""
    m = mask_of(s for s in phi.source.elements if phi.mapping[s] == 0)
    if not phi.source.is_closed_mask(m):
        raise InternalInconsistencyError("kernel of a homomorphism must be closed")
    return ClosedSubset(phi.source, m)


def natural_projection(hg: Hypergroup, modulus: ElementSubset) -> tuple[
    HypergroupHomomorphism, QuotientHypergroup
]:
    """The map h -> F h F onto the quotient, validated as a homomorphism.

    For a normal modulus this always succeeds; for other closed subsets
    the homomorphism law can fail, in which case validation raises.
    """
    q = quotient(hg, modulus)
    phi = validate_homomorphism(hg, q, q.coset_of)
    return phi, q


# ---------------------------------------------------------------------------
# isomorphism search

ISOMORPHISM_ORDER_CAP = 24


def _fingerprint(hg: Hypergroup, h: int) -> tuple:
    row = sorted(hg.table[h][x].bit_count() for x in hg.elements)
    col = sorted(hg.table[x][h].bit_count() for x in hg.elements)
    inv = hg.inverse[h]
    return (
        inv == h,
        hg.table[inv][h].bit_count(),
        hg.table[h][inv].bit_count(),
        tuple(row),
        tuple(col),
    )


def find_isomorphism(h1: Hypergroup, h2: Hypergroup) -> tuple[int, ...] | None:
    """Search for an isomorphism from h1 onto h2.

    Returns the image tuple (element i of h1 maps to mapping[i]) or None.
    The backtracking fixes neutral to neutral, forces inverse
    compatibility, and prunes with per-element fingerprints built from
    product set cardinalities.  Deterministic: candidate images are
    tried in increasing order, so the first hit is the lexicographically
    least isomorphism.  Orders above ISOMORPHISM_ORDER_CAP raise
    SearchOverflowError.
    """
    if h1.size != h2.size:
        return None
    k = h1.size
    if k > ISOMORPHISM_ORDER_CAP:
        raise SearchOverflowError(
            f"isomorphism search capped at order {ISOMORPHISM_ORDER_CAP}, got {k}"
        )
    fp1 = [_fingerprint(h1, h) for h in range(k)]
    fp2 = [_fingerprint(h2, h) for h in range(k)]
    if sorted(fp1) != sorted(fp2):
        return None
    candidates = [
        [b for b in range(k) if fp2[b] == fp1[a]] for a in range(k)
    ]

    mapping = [-1] * k
    used = [False] * k

    def consistent(a: int) -> bool:
        # inverse compatibility
        ia = h1.inverse[a]
        if mapping[ia] != -1 and mapping[ia] != h2.inverse[mapping[a]]:
            return False
        # membership profile against every mapped pair
        for x in range(k):
            if mapping[x] == -1:
                continue
            for (p, q) in ((a, x), (x, a)):
                s = h1.table[p][q]
                t = h2.table[mapping[p]][mapping[q]]
                if s.bit_count() != t.bit_count():
                    return False
                for z in range(k):
                    if mapping[z] == -1:
                        continue
                    if bool(s >> z & 1) != bool(t >> mapping[z] & 1):
                        return False
        return True

    def place(a: int) -> bool:
        if a == k:
            return True
        for b in candidates[a]:
            if used[b]:
                continue
            if a == 0 and b != 0:
                continue
            mapping[a] = b
            used[b] = True
            if consistent(a) and place(a + 1):
                return True
            mapping[a] = -1
            used[b] = False
        return False

    if place(0):
        return tuple(mapping)
    return None
