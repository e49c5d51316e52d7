"""Cayley tables for small groups, plus subgroup utilities.

Tables are tuples of tuples with table[x][g] = xg and the identity at
index 0.  Subgroups are bitmasks over element indices.  Everything here
is sized for groups of order at most a few hundred.
"""
from __future__ import annotations

from collections.abc import Sequence
from itertools import permutations

from .errors import NotAGroupError
from .hypergroup import Hypergroup, bits_of, mask_of, validate_hypergroup

__all__ = [
    "validate_group",
    "group_inverse",
    "cyclic",
    "dihedral",
    "dicyclic",
    "quaternion",
    "symmetric",
    "alternating",
    "direct_product",
    "thin_hypergroup",
    "all_subgroups",
    "generated_subgroup",
    "conjugate_subgroup",
    "find_subgroup_conjugator",
]

Table = tuple[tuple[int, ...], ...]


def validate_group(table: Sequence[Sequence[int]]) -> Table:
    """Check the group axioms on a raw Cayley table.

    Requires a square table over 0..n-1 whose rows and columns are
    permutations, an identity at index 0, two-sided inverses and full
    associativity.  Raises NotAGroupError naming the failed axiom.
    """
    n = len(table)
    if n == 0:
        raise NotAGroupError("empty table")
    rows = []
    for x, row in enumerate(table):
        if len(row) != n:
            raise NotAGroupError(f"row {x} has length {len(row)}, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise NotAGroupError(f"entry {v} in row {x} outside 0..{n - 1}")
        rows.append(tuple(row))
    t = tuple(rows)
    for x in range(n):
        if len(set(t[x])) != n:
            raise NotAGroupError(f"row {x} is not a permutation")
        if len({t[y][x] for y in range(n)}) != n:
            raise NotAGroupError(f"column {x} is not a permutation")
    for x in range(n):
        if t[x][0] != x or t[0][x] != x:
            raise NotAGroupError("index 0 is not a two-sided identity")
    inv = [-1] * n
    for x in range(n):
        for y in range(n):
            if t[x][y] == 0:
                inv[x] = y
                break
        if t[inv[x]][x] != 0:
            raise NotAGroupError(f"element {x} has no two-sided inverse")
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            for c in range(n):
                if t[ab][c] != t[a][t[b][c]]:
                    raise NotAGroupError(
                        f"associativity fails at ({a}, {b}, {c})"
                    )
    return t


def group_inverse(table: Table) -> tuple[int, ...]:
    n = len(table)
    inv = [0] * n
    for x in range(n):
        for y in range(n):
            if table[x][y] == 0:
                inv[x] = y
                break
    return tuple(inv)


# ---------------------------------------------------------------------------
# constructors


def cyclic(n: int) -> Table:
    return tuple(tuple((i + j) % n for j in range(n)) for i in range(n))


def dihedral(n: int) -> Table:
    """Dihedral group of order 2n: indices f*n + r for s^f rot^r."""
    if n < 1:
        raise ValueError("dihedral(n) needs n >= 1")

    def mul(x: int, y: int) -> int:
        f1, r1 = divmod(x, n)
        f2, r2 = divmod(y, n)
        f = (f1 + f2) % 2
        r = ((-r1 if f2 else r1) + r2) % n
        return f * n + r

    return tuple(tuple(mul(x, y) for y in range(2 * n)) for x in range(2 * n))


def dicyclic(n: int) -> Table:
    """Dicyclic group of order 4n: a of order 2n, b^2 = a^n, b a b^-1 = a^-1."""
    if n < 2:
        raise ValueError("dicyclic(n) needs n >= 2")
    m = 2 * n

    def mul(x: int, y: int) -> int:
        f1, r1 = divmod(x, m)
        f2, r2 = divmod(y, m)
        if f1 == 0 and f2 == 0:
            return (r1 + r2) % m
        if f1 == 0:
            return m + (r1 + r2) % m
        if f2 == 0:
            return m + (r1 - r2) % m
        return (n + r1 - r2) % m

    return tuple(tuple(mul(x, y) for y in range(4 * n)) for x in range(4 * n))


def quaternion() -> Table:
    return dicyclic(2)


def _perm_group(perms: list[tuple[int, ...]]) -> Table:
    perms = sorted(perms)
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = []
    for p in perms:
        row = []
        for q in perms:
            # composition: apply p first, then q
            row.append(index[tuple(q[p[i]] for i in range(len(p)))])
        table.append(tuple(row))
    return tuple(table)


def symmetric(n: int) -> Table:
    """Symmetric group on n letters; identity is lexicographically first."""
    return _perm_group([p for p in permutations(range(n))])


def _is_even(p: tuple[int, ...]) -> bool:
    seen = [False] * len(p)
    parity = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity == 0


def alternating(n: int) -> Table:
    return _perm_group([p for p in permutations(range(n)) if _is_even(p)])


def direct_product(g1: Table, g2: Table) -> Table:
    n1, n2 = len(g1), len(g2)

    def mul(x: int, y: int) -> int:
        a1, a2 = divmod(x, n2)
        b1, b2 = divmod(y, n2)
        return g1[a1][b1] * n2 + g2[a2][b2]

    return tuple(tuple(mul(x, y) for y in range(n1 * n2)) for x in range(n1 * n2))


def thin_hypergroup(table: Sequence[Sequence[int]], name: str = "") -> Hypergroup:
    """The group as a hypergroup with singleton products."""
    t = validate_group(table)
    raw = [[1 << v for v in row] for row in t]
    return validate_hypergroup(raw, name=name)


# ---------------------------------------------------------------------------
# subgroups


def generated_subgroup(table: Table, gens: int) -> int:
    """Mask of the subgroup generated by the masked elements."""
    cur = gens | 1
    while True:
        nxt = cur
        for a in bits_of(cur):
            row = table[a]
            for b in bits_of(cur):
                nxt |= 1 << row[b]
        if nxt == cur:
            return cur
        cur = nxt


def all_subgroups(table: Table) -> tuple[int, ...]:
    """Every subgroup, by closing one added generator at a time.

    Deterministic output sorted by (order, member tuple).  This is the
    blunt enumeration used both by the Hall engine and as the oracle in
    tests; it is exhaustive because any subgroup is reached by adding
    its elements one by one.
    """
    n = len(table)
    found = {1}
    work = [1]
    while work:
        cur = work.pop()
        for g in range(1, n):
            if cur >> g & 1:
                continue
            ext = generated_subgroup(table, cur | 1 << g)
            if ext not in found:
                found.add(ext)
                work.append(ext)
    return tuple(sorted(found, key=lambda m: (m.bit_count(), tuple(bits_of(m)))))


def conjugate_subgroup(table: Table, sub: int, g: int) -> int:
    """The subgroup g^-1 (sub) g."""
    inv = group_inverse(table)
    ig = inv[g]
    return mask_of(table[table[ig][x]][g] for x in bits_of(sub))


def find_subgroup_conjugator(table: Table, sub_a: int, sub_b: int) -> int | None:
    """Smallest g with g^-1 A g = B, or None."""
    for g in range(len(table)):
        if conjugate_subgroup(table, sub_a, g) == sub_b:
            return g
    return None
