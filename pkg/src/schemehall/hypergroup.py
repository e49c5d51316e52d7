"""Finite hypergroups with set-valued multiplication.

Elements are the integers 0..size-1 and the neutral element always sits
at index 0 (validation re-indexes the input if necessary).  Subsets of
elements are bitmasks wrapped in ElementSubset; the wrapper remembers
which hypergroup it belongs to and refuses to mix subsets of different
parents.

The axioms checked by validate_hypergroup:

  H1  p(qr) = (pq)r for all elements p, q, r (products of sets taken
      elementwise and unioned),
  H2  there is a neutral element e with s*e = {s} for every s,
  H3  there is an inverse map s -> s^ such that whenever r lies in pq,
      q lies in p^r and p lies in r q^.

The inverse map, when it exists, is pinned down by H2/H3: t is the
inverse of s exactly when the neutral element lies in ts.  Validation
exploits that to locate the unique candidate and then checks H3
literally over all triples.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from .errors import (
    AssocViolationError,
    EmptyInputError,
    EmptyProductError,
    NoInverseError,
    NoNeutralError,
    NotSubsetError,
    ParentMismatchError,
)

__all__ = [
    "Hypergroup",
    "ElementSubset",
    "ClosedSubset",
    "validate_hypergroup",
    "subset_product",
    "star",
    "is_closed",
    "closure",
    "enumerate_closed_subsets",
    "normalizes",
    "is_normal_in",
    "is_strongly_normal",
    "is_subnormal",
    "theta_core",
    "theta_core_generated",
    "thin_elements",
    "is_thin",
    "is_metathin",
    "double_cosets",
    "format_table",
]


def bits_of(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for s in elements:
        m |= 1 << s
    return m


class Hypergroup:
    """A finite hypergroup.

    table[a][b] is the bitmask of the product set ab, inverse[s] is the
    index of s^.  Instances are value objects but compare by identity;
    the identity is what ties an ElementSubset to its parent.  Build
    instances through validate_hypergroup.
    """

    __slots__ = ("size", "table", "inverse", "name", "_closed", "_normal_edges", "_solvable")

    def __init__(
        self,
        table: tuple[tuple[int, ...], ...],
        inverse: tuple[int, ...],
        name: str = "",
    ):
        self.size = len(table)
        self.table = table
        self.inverse = inverse
        self.name = name
        self._closed: tuple[ClosedSubset, ...] | None = None
        self._normal_edges: dict[int, tuple[int, ...]] | None = None

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Hypergroup{tag} of order {self.size}>"

    # -- element level ------------------------------------------------

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def product_mask(self, a: int, b: int) -> int:
        return self.table[a][b]

    def product(self, a: int, b: int) -> "ElementSubset":
        return ElementSubset(self, self.table[a][b])

    def is_thin_element(self, s: int) -> bool:
        """An element h is thin when h^h = {0}."""
        return self.table[self.inverse[s]][s] == 1

    # -- mask level (internal workhorses) -----------------------------

    def mul_masks(self, left: int, right: int) -> int:
        out = 0
        table = self.table
        for a in bits_of(left):
            row = table[a]
            for b in bits_of(right):
                out |= row[b]
        return out

    def star_mask(self, mask: int) -> int:
        inv = self.inverse
        out = 0
        for s in bits_of(mask):
            out |= 1 << inv[s]
        return out

    def closure_mask(self, mask: int) -> int:
        if mask == 0:
            raise EmptyInputError("cannot close the empty set")
        cur = mask | 1
        while True:
            nxt = cur | self.star_mask(cur) | self.mul_masks(cur, cur)
            if nxt == cur:
                return cur
            cur = nxt

    def is_closed_mask(self, mask: int) -> bool:
        if mask == 0:
            return False
        by_def = self.mul_masks(self.star_mask(mask), mask) | mask == mask
        # the three-way characterization must agree with the definition
        three = (
            mask & 1 != 0
            and self.star_mask(mask) == mask
            and self.mul_masks(mask, mask) == mask
        )
        assert by_def == three, f"closedness criteria disagree on {mask:#x}"
        return by_def

    # -- subset constructors -------------------------------------------

    def subset(self, elements: Iterable[int] | int) -> "ElementSubset":
        mask = elements if isinstance(elements, int) else mask_of(elements)
        if mask < 0 or mask > self.full_mask:
            raise ValueError(f"mask {mask:#x} is out of range for order {self.size}")
        return ElementSubset(self, mask)

    def singleton(self, s: int) -> "ElementSubset":
        return self.subset(1 << s)

    def universe(self) -> "ClosedSubset":
        return ClosedSubset(self, self.full_mask)

    def neutral_subset(self) -> "ClosedSubset":
        return ClosedSubset(self, 1)


class ElementSubset:
    """Subset of a hypergroup's elements, stored as a bitmask.

    Algebraic operations require both operands to come from the same
    parent object; mixing parents raises ParentMismatchError.  Equality
    against a subset of a different parent is simply False.
    """

    __slots__ = ("parent", "bits")

    def __init__(self, parent: Hypergroup, bits: int):
        self.parent = parent
        self.bits = bits

    def members(self) -> tuple[int, ...]:
        return tuple(bits_of(self.bits))

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, s: int) -> bool:
        return bool(self.bits >> s & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementSubset):
            return NotImplemented
        return self.parent is other.parent and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((id(self.parent), self.bits))

    def __repr__(self) -> str:
        inner = ", ".join(str(s) for s in self.members())
        return "{" + inner + "}"

    def _check(self, other: "ElementSubset") -> None:
        if not isinstance(other, ElementSubset):
            raise TypeError(f"expected ElementSubset, got {type(other).__name__}")
        if self.parent is not other.parent:
            raise ParentMismatchError(
                "subsets belong to different hypergroups"
            )

    def __or__(self, other: "ElementSubset") -> "ElementSubset":
        self._check(other)
        return ElementSubset(self.parent, self.bits | other.bits)

    def __and__(self, other: "ElementSubset") -> "ElementSubset":
        self._check(other)
        return ElementSubset(self.parent, self.bits & other.bits)

    def __sub__(self, other: "ElementSubset") -> "ElementSubset":
        self._check(other)
        return ElementSubset(self.parent, self.bits & ~other.bits)

    def __mul__(self, other: "ElementSubset") -> "ElementSubset":
        self._check(other)
        return ElementSubset(self.parent, self.parent.mul_masks(self.bits, other.bits))

    def issubset(self, other: "ElementSubset") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def star(self) -> "ElementSubset":
        return ElementSubset(self.parent, self.parent.star_mask(self.bits))

    def is_closed(self) -> bool:
        return self.parent.is_closed_mask(self.bits)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Deterministic ordering: by size, then by member tuple."""
        return (self.bits.bit_count(), self.members())


class ClosedSubset(ElementSubset):
    """An ElementSubset that has been checked to be closed."""

    __slots__ = ()

    def __init__(self, parent: Hypergroup, bits: int):
        super().__init__(parent, bits)


def _as_closed(parent: Hypergroup, bits: int) -> ClosedSubset:
    assert parent.is_closed_mask(bits)
    return ClosedSubset(parent, bits)


# ---------------------------------------------------------------------------
# validation


def validate_hypergroup(
    table: Sequence[Sequence[Iterable[int] | int]],
    name: str = "",
) -> Hypergroup:
    """Check H1-H3 on a raw product table and build a Hypergroup.

    table[a][b] may be any iterable of element indices, or an int
    bitmask.  On success the neutral element is re-indexed to 0.  On
    failure the first violated axiom is reported with a witness:
    EmptyProductError, NoNeutralError, NoInverseError or
    AssocViolationError.
    """
    k = len(table)
    if k == 0:
        raise NoNeutralError("empty table has no neutral element")
    masks: list[list[int]] = []
    for a, row in enumerate(table):
        if len(row) != k:
            raise ValueError(f"row {a} has length {len(row)}, expected {k}")
        mrow = []
        for b, cell in enumerate(row):
            if isinstance(cell, int):
                m = cell
                if m < 0 or m >> k:
                    raise ValueError(f"cell ({a}, {b}) mask out of range")
            else:
                m = 0
                for s in cell:
                    if not 0 <= s < k:
                        raise ValueError(
                            f"cell ({a}, {b}) contains {s}, outside 0..{k - 1}"
                        )
                    m |= 1 << s
            if m == 0:
                raise EmptyProductError(a, b)
            mrow.append(m)
        masks.append(mrow)

    # H2: a neutral element e with se = {s} for every s.
    candidates = [
        e for e in range(k) if all(masks[s][e] == 1 << s for s in range(k))
    ]
    if not candidates:
        raise NoNeutralError("no element acts as a right neutral")
    if len(candidates) > 1:
        raise NoNeutralError(f"multiple right neutral elements: {candidates}")
    e = candidates[0]

    # H3, existence half: the inverse of s is the unique t with e in ts.
    inv = [-1] * k
    for s in range(k):
        ts = [t for t in range(k) if masks[t][s] >> e & 1]
        if len(ts) != 1:
            raise NoInverseError(
                f"element {s} has {len(ts)} inverse candidates {ts}, expected 1"
            )
        inv[s] = ts[0]

    # H3, literal check with the map just built.
    for p in range(k):
        ip = inv[p]
        for q in range(k):
            iq = inv[q]
            pq = masks[p][q]
            for r in bits_of(pq):
                if not masks[ip][r] >> q & 1:
                    raise NoInverseError(
                        f"H3 fails: {r} in {p}*{q} but {q} not in inv({p})*{r}"
                    )
                if not masks[r][iq] >> p & 1:
                    raise NoInverseError(
                        f"H3 fails: {r} in {p}*{q} but {p} not in {r}*inv({q})"
                    )

    # H1 over all triples.
    for p in range(k):
        for q in range(k):
            pq = masks[p][q]
            for r in range(k):
                lhs = 0
                for x in bits_of(masks[q][r]):
                    lhs |= masks[p][x]
                rhs = 0
                for y in bits_of(pq):
                    rhs |= masks[y][r]
                if lhs != rhs:
                    raise AssocViolationError(p, q, r)

    if e != 0:
        # swap labels 0 and e so the neutral element lands at index 0
        perm = list(range(k))
        perm[0], perm[e] = e, 0

        def pm(mask: int) -> int:
            out = 0
            for s in bits_of(mask):
                out |= 1 << perm[s]
            return out

        new_masks = [[0] * k for _ in range(k)]
        for a in range(k):
            for b in range(k):
                new_masks[perm[a]][perm[b]] = pm(masks[a][b])
        new_inv = [0] * k
        for s in range(k):
            new_inv[perm[s]] = perm[inv[s]]
        masks, inv = new_masks, new_inv

    return Hypergroup(
        tuple(tuple(row) for row in masks),
        tuple(inv),
        name=name,
    )


# ---------------------------------------------------------------------------
# subset operations


def subset_product(left: ElementSubset, right: ElementSubset) -> ElementSubset:
    """Complex product of two subsets (union of elementwise products)."""
    return left * right


def star(subset: ElementSubset) -> ElementSubset:
    """Elementwise inverse image of a subset."""
    return subset.star()


def is_closed(subset: ElementSubset) -> bool:
    """True when the subset is nonempty and A^A lands inside A."""
    return subset.is_closed()


def closure(subset: ElementSubset) -> ClosedSubset:
    """Smallest closed subset containing the given nonempty subset."""
    return _as_closed(subset.parent, subset.parent.closure_mask(subset.bits))


def enumerate_closed_subsets(hg: Hypergroup) -> tuple[ClosedSubset, ...]:
    """All closed subsets, sorted by size then member tuple.

    Every closed subset is a join of closures of singletons, so the
    worklist seeds with those and keeps joining until nothing new
    appears.  The result is cached on the hypergroup.
    """
    if hg._closed is not None:
        return hg._closed
    singles = sorted({hg.closure_mask(1 << s) for s in hg.elements})
    found: set[int] = set(singles)
    work = list(singles)
    while work:
        cur = work.pop()
        for s in singles:
            joined = cur | s
            if joined != cur:
                joined = hg.closure_mask(joined)
            if joined not in found:
                found.add(joined)
                work.append(joined)
    out = tuple(
        sorted(
            (_as_closed(hg, m) for m in found),
            key=ElementSubset.sort_key,
        )
    )
    hg._closed = out
    return out


def normalizes(d: ElementSubset, e: ElementSubset) -> bool:
    """True when E d is contained in d E for every element d of D."""
    d._check(e)
    hg = d.parent
    for x in bits_of(d.bits):
        if hg.mul_masks(e.bits, 1 << x) & ~hg.mul_masks(1 << x, e.bits):
            return False
    return True


def is_normal_in(f: ElementSubset, g: ElementSubset) -> bool:
    """F normal in G: F, G closed, F inside G and G normalizes F."""
    f._check(g)
    if not f.issubset(g):
        return False
    return normalizes(g, f)


def is_strongly_normal(f: ElementSubset, g: ElementSubset) -> bool:
    """F strongly normal in G: h^ F h inside F for every h in G.

    Raises NotSubsetError when F is not contained in G.
    """
    f._check(g)
    if not f.issubset(g):
        raise NotSubsetError("strong normality is only defined for F inside G")
    hg = f.parent
    inv = hg.inverse
    for h in bits_of(g.bits):
        conj = hg.mul_masks(hg.mul_masks(1 << inv[h], f.bits), 1 << h)
        if conj & ~f.bits:
            return False
    return True


def _normal_edges(hg: Hypergroup) -> dict[int, tuple[int, ...]]:
    """For each closed subset mask, the masks of closed supersets it is normal in."""
    if hg._normal_edges is not None:
        return hg._normal_edges
    subs = enumerate_closed_subsets(hg)
    edges: dict[int, tuple[int, ...]] = {}
    for c in subs:
        ups = []
        for d in subs:
            if c.bits != d.bits and c.issubset(d) and normalizes(d, c):
                ups.append(d.bits)
        edges[c.bits] = tuple(ups)
    hg._normal_edges = edges
    return edges


def is_subnormal(f: ElementSubset, g: ElementSubset) -> bool:
    """True when a chain F = F0 normal in F1 ... normal in Fn = G exists."""
    f._check(g)
    if not f.issubset(g):
        return False
    if f.bits == g.bits:
        return True
    edges = _normal_edges(f.parent)
    seen = {f.bits}
    stack = [f.bits]
    target = g.bits
    while stack:
        cur = stack.pop()
        for up in edges.get(cur, ()):
            if up & ~target:
                continue
            if up == target:
                return True
            if up not in seen:
                seen.add(up)
                stack.append(up)
    return False


def theta_core(hg: Hypergroup) -> ClosedSubset:
    """Intersection of all strongly normal closed subsets of hg.

    The intersection is itself strongly normal and closed; both facts
    are asserted rather than trusted.
    """
    universe = hg.universe()
    acc = hg.full_mask
    for c in enumerate_closed_subsets(hg):
        if is_strongly_normal(c, universe):
            acc &= c.bits
    core = _as_closed(hg, acc)
    assert is_strongly_normal(core, universe), "theta core lost strong normality"
    return core


def theta_core_generated(hg: Hypergroup) -> ClosedSubset:
    """Closure of the union of all products h^h.

    Candidate companion to theta_core.  The two agree on every bundled
    structure, but the code never assumes it: callers that care compare
    the two results explicitly.
    """
    acc = 1
    for h in hg.elements:
        acc |= hg.table[hg.inverse[h]][h]
    return _as_closed(hg, hg.closure_mask(acc))


class ThinReport:
    """Thin element survey: the set of thin elements plus the metathin flag."""

    __slots__ = ("elements", "metathin")

    def __init__(self, elements: ElementSubset, metathin: bool):
        self.elements = elements
        self.metathin = metathin


def thin_elements(hg: Hypergroup) -> ThinReport:
    """All thin elements of hg, and whether hg is metathin.

    hg is metathin when its theta core consists of thin elements only.
    """
    mask = mask_of(s for s in hg.elements if hg.is_thin_element(s))
    subset = ElementSubset(hg, mask)
    metathin = theta_core(hg).bits & ~mask == 0
    return ThinReport(subset, metathin)


def is_thin(hg: Hypergroup) -> bool:
    return all(hg.is_thin_element(s) for s in hg.elements)


def is_metathin(hg: Hypergroup) -> bool:
    return thin_elements(hg).metathin


def double_cosets(hg: Hypergroup, f: ElementSubset, within: int | None = None) -> list[int]:
    """Masks of the double cosets F h F, for h ranging over `within`.

    `within` defaults to the full element set; masks are returned in
    order of their smallest member.
    """
    if not hg.is_closed_mask(f.bits):
        raise NotSubsetError("double cosets need a closed modulus")
    domain = hg.full_mask if within is None else within
    out: list[int] = []
    remaining = domain
    while remaining:
        h = remaining & -remaining
        coset = hg.mul_masks(hg.mul_masks(f.bits, h), f.bits)
        out.append(coset)
        if coset & ~domain:
            raise NotSubsetError("double coset escaped the ambient subset")
        remaining &= ~coset
    return out


def format_table(hg: Hypergroup) -> str:
    """Text grid of the product table, for debugging and the CLI."""
    cells = [
        ["{" + ",".join(map(str, bits_of(hg.table[a][b]))) + "}" for b in hg.elements]
        for a in hg.elements
    ]
    width = max(len(c) for row in cells for c in row)
    head = "    " + " ".join(str(b).rjust(width) for b in hg.elements)
    lines = [head]
    for a in hg.elements:
        lines.append(
            str(a).rjust(3) + " " + " ".join(c.rjust(width) for c in cells[a])
        )
    return "\n".join(lines)
