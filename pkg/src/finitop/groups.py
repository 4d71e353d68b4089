"""Finite groups given by Cayley tables, identity fixed at index 0."""

from __future__ import annotations

import re
from typing import Sequence

from finitop.bits import bits, full_mask
from finitop.errors import InvalidGroupTable, OrderTooLarge, UnknownSpec

MAX_ORDER = 16


class FiniteGroup:
    """Group on 0..order-1 with a validated multiplication table.

    Construction checks the identity at index 0, associativity over all
    triples, and two-sided inverses; the inverse table is derived once.
    """

    __slots__ = ("order", "table", "inverse", "name")

    def __init__(self, table: Sequence[Sequence[int]], name: str | None = None):
        rows = tuple(tuple(int(v) for v in row) for row in table)
        n = len(rows)
        if not 1 <= n <= MAX_ORDER:
            raise OrderTooLarge(f"group order {n} outside 1..{MAX_ORDER}")
        for row in rows:
            if len(row) != n:
                raise InvalidGroupTable("table is not square")
            for v in row:
                if not 0 <= v < n:
                    raise InvalidGroupTable(f"entry {v} out of range")
        for a in range(n):
            if rows[0][a] != a or rows[a][0] != a:
                raise InvalidGroupTable("element 0 is not a two-sided identity")
        for a in range(n):
            for b in range(n):
                ab = rows[a][b]
                for c in range(n):
                    if rows[ab][c] != rows[a][rows[b][c]]:
                        raise InvalidGroupTable(
                            f"associativity fails on ({a},{b},{c})"
                        )
        inverse = [-1] * n
        for a in range(n):
            for b in range(n):
                if rows[a][b] == 0 and rows[b][a] == 0:
                    inverse[a] = b
                    break
            if inverse[a] < 0:
                raise InvalidGroupTable(f"element {a} has no two-sided inverse")
        self.order = n
        self.table = rows
        self.inverse = tuple(inverse)
        self.name = name or f"group{n}"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    @property
    def full(self) -> int:
        return full_mask(self.order)

    def set_product(self, a_mask: int, b_mask: int) -> int:
        out = 0
        for a in bits(a_mask):
            row = self.table[a]
            for b in bits(b_mask):
                out |= 1 << row[b]
        return out

    def set_inverse(self, mask: int) -> int:
        out = 0
        for a in bits(mask):
            out |= 1 << self.inverse[a]
        return out

    def left_translate(self, g: int, mask: int) -> int:
        row = self.table[g]
        out = 0
        for a in bits(mask):
            out |= 1 << row[a]
        return out

    def right_translate(self, mask: int, g: int) -> int:
        out = 0
        for a in bits(mask):
            out |= 1 << self.table[a][g]
        return out

    def conjugate(self, g: int, mask: int) -> int:
        """g * mask * g^-1 elementwise."""
        gi = self.inverse[g]
        out = 0
        for a in bits(mask):
            out |= 1 << self.table[self.table[g][a]][gi]
        return out

    def is_abelian(self) -> bool:
        n = self.order
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(n)
            for b in range(a + 1, n)
        )

    def noncommuting_pair(self) -> tuple[int, int] | None:
        n = self.order
        for a in range(n):
            for b in range(n):
                if self.table[a][b] != self.table[b][a]:
                    return (a, b)
        return None

    def is_subgroup_mask(self, mask: int) -> bool:
        if not mask & 1:
            return False
        for a in bits(mask):
            if not (mask >> self.inverse[a]) & 1:
                return False
            row = self.table[a]
            for b in bits(mask):
                if not (mask >> row[b]) & 1:
                    return False
        return True

    def subgroup_masks(self) -> list[int]:
        """All subgroups as masks, ascending (0-containing subsets filtered)."""
        out = []
        for m in range(1, 1 << self.order, 2):
            if self.is_subgroup_mask(m):
                out.append(m)
        return out

    def is_normal_mask(self, mask: int) -> bool:
        return all(self.conjugate(g, mask) == mask for g in range(self.order))

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


# -- builtin constructions ----------------------------------------------------


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise UnknownSpec("cyclic order must be positive")
    if n > MAX_ORDER:
        raise OrderTooLarge(f"cyclic({n}) exceeds order {MAX_ORDER}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, name=f"cyclic({n})")


def _twisted_pair_table(n: int, twist: int) -> list[list[int]]:
    """Order-2n table on generators a (order n) and b with b^2 = a^twist
    and b a = a^-1 b; index of a^i b^j is j*n + i."""

    def mul(i1, j1, i2, j2):
        i = (i1 + (i2 if j1 == 0 else -i2)) % n
        if j1 and j2:
            i = (i + twist) % n
        return ((j1 + j2) % 2) * n + i

    size = 2 * n
    table = [[0] * size for _ in range(size)]
    for x in range(size):
        for y in range(size):
            table[x][y] = mul(x % n, x // n, y % n, y // n)
    return table


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of the regular n-gon, order 2n."""
    if n < 1:
        raise UnknownSpec("dihedral parameter must be positive")
    if 2 * n > MAX_ORDER:
        raise OrderTooLarge(f"dihedral({n}) has order {2 * n} > {MAX_ORDER}")
    return FiniteGroup(_twisted_pair_table(n, 0), name=f"dihedral({n})")


def quaternion_group() -> FiniteGroup:
    """The eight-element quaternion group (b^2 = a^2, b a = a^-1 b)."""
    return FiniteGroup(_twisted_pair_table(4, 2), name="quaternion(8)")


def symmetric_group_3() -> FiniteGroup:
    """S3 on the six permutations of {0,1,2} in lexicographic order."""
    perms = [
        (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0),
    ]
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[k]] for k in range(3))] for q in perms] for p in perms
    ]
    return FiniteGroup(table, name="symmetric(3)")


def direct_product(a: FiniteGroup, b: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """Pairs indexed row-major, (x, y) -> x * |b| + y, matching the space
    product convention."""
    n = a.order * b.order
    if n > MAX_ORDER:
        raise OrderTooLarge(f"product order {n} exceeds {MAX_ORDER}")
    nb = b.order
    table = [[0] * n for _ in range(n)]
    for x1 in range(a.order):
        for y1 in range(nb):
            for x2 in range(a.order):
                for y2 in range(nb):
                    table[x1 * nb + y1][x2 * nb + y2] = (
                        a.table[x1][x2] * nb + b.table[y1][y2]
                    )
    return FiniteGroup(
        table, name=name or f"direct_product({a.name},{b.name})"
    )


_SHORT = re.compile(r"^(cyclic|dihedral|sym|symmetric|quaternion|klein)(\d+)$")


def _split_args(body: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(body[start:i])
            start = i + 1
    parts.append(body[start:])
    return parts


def builtin_group(spec: str) -> FiniteGroup:
    """Build a named group: cyclic(n), dihedral(n), symmetric(3),
    quaternion(8), direct_product(a,b), or the short forms cyclicN,
    dihedralN, sym3, quaternion8, klein4."""
    s = spec.replace(" ", "").lower()
    if not s:
        raise UnknownSpec("empty group spec")
    m = _SHORT.match(s)
    if m:
        kind, num = m.group(1), int(m.group(2))
        if kind == "cyclic":
            return cyclic_group(num)
        if kind == "dihedral":
            return dihedral_group(num)
        if kind in ("sym", "symmetric"):
            if num != 3:
                raise UnknownSpec("only symmetric(3) is built in")
            return symmetric_group_3()
        if kind == "quaternion":
            if num != 8:
                raise UnknownSpec("only quaternion(8) is built in")
            return quaternion_group()
        if kind == "klein":
            if num != 4:
                raise UnknownSpec("only klein4 is built in")
            g = direct_product(cyclic_group(2), cyclic_group(2), name="klein4")
            return g
    if s.endswith(")") and "(" in s:
        head, body = s.split("(", 1)
        body = body[:-1]
        if head == "cyclic":
            return cyclic_group(_parse_int(body))
        if head == "dihedral":
            return dihedral_group(_parse_int(body))
        if head == "symmetric":
            if _parse_int(body) != 3:
                raise UnknownSpec("only symmetric(3) is built in")
            return symmetric_group_3()
        if head == "quaternion":
            if _parse_int(body) != 8:
                raise UnknownSpec("only quaternion(8) is built in")
            return quaternion_group()
        if head == "direct_product":
            args = _split_args(body)
            if len(args) != 2:
                raise UnknownSpec("direct_product takes exactly two factors")
            return direct_product(builtin_group(args[0]), builtin_group(args[1]))
    raise UnknownSpec(f"unrecognized group spec {spec!r}")


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UnknownSpec(f"expected an integer parameter, got {text!r}") from None
