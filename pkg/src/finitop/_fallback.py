"""Pure-Python kernels; same contract as the compiled ``finitop._core``.

Rows encode a reflexive transitive relation: ``rows[x]`` is the bit mask
{y : x <= y}.  See ``finitop._kernel`` for backend selection.
"""

from __future__ import annotations

BACKEND = "pure"


def _rev_key(mask: int, n: int) -> int:
    out = 0
    for y in range(n):
        if (mask >> y) & 1:
            out |= 1 << (n - 1 - y)
    return out


def preorders(n: int) -> list[tuple[int, ...]]:
    """All reflexive transitive row tuples on n points, canonical order.

    Canonical order = the n*n matrix read row-major as a '0'/'1' string,
    ascending.  Backtracks row by row; the pairwise containment checks
    against already placed rows enforce transitivity exactly, so no leaf
    re-check is needed.
    """
    if not 1 <= n <= 8:
        raise ValueError("preorder enumeration kernel is bounded at 8 points")
    full = (1 << n) - 1
    cands = [
        sorted((m for m in range(1 << n) if (m >> x) & 1), key=lambda m: _rev_key(m, n))
        for x in range(n)
    ]
    out: list[tuple[int, ...]] = []
    rows = [0] * n

    def place(x: int) -> None:
        if x == n:
            out.append(tuple(rows))
            return
        for c in cands[x]:
            ok = True
            for a in range(x):
                ra = rows[a]
                if (ra >> x) & 1 and c & ~ra & full:
                    ok = False
                    break
                if (c >> a) & 1 and ra & ~c & full:
                    ok = False
                    break
            if ok:
                rows[x] = c
                place(x + 1)

    place(0)
    return out


def automorphisms(n: int, rows: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All permutations p with x <= y iff p(x) <= p(y), sorted."""
    if not 1 <= n <= 16:
        raise ValueError("automorphism kernel is bounded at 16 points")
    down = [sum(((rows[y] >> x) & 1) << y for y in range(n)) for x in range(n)]
    profile = [(rows[x].bit_count(), down[x].bit_count()) for x in range(n)]
    out: list[tuple[int, ...]] = []
    perm = [0] * n
    used = [False] * n

    def place(x: int) -> None:
        if x == n:
            out.append(tuple(perm))
            return
        for t in range(n):
            if used[t] or profile[t] != profile[x]:
                continue
            ok = True
            for a in range(x):
                if ((rows[x] >> a) & 1) != ((rows[t] >> perm[a]) & 1):
                    ok = False
                    break
                if ((rows[a] >> x) & 1) != ((rows[perm[a]] >> t) & 1):
                    ok = False
                    break
            if ok:
                perm[x] = t
                used[t] = True
                place(x + 1)
                used[t] = False

    place(0)
    return out


def star_condition(
    nd: int,
    dom_rows: tuple[int, ...],
    nc: int,
    cod_rows: tuple[int, ...],
    table: tuple[int, ...],
) -> bool:
    """Sweep every subset U of the domain and test:

        U open  <=>  U = f^-1(f(U)) and f(U) open.

    The openness of a mask m is up_closure(m) == m.
    """
    if nd > 16 or nc > 16:
        raise ValueError("subset sweep kernels are bounded at 16 points")
    point_img = [1 << table[x] for x in range(nd)]
    fiber = [0] * nc
    for x in range(nd):
        fiber[table[x]] |= 1 << x
    for u in range(1 << nd):
        img = 0
        pre = 0
        closure_d = 0
        m = u
        while m:
            low = m & -m
            x = low.bit_length() - 1
            img |= point_img[x]
            closure_d |= dom_rows[x]
            m ^= low
        u_open = closure_d | u == u
        mi = img
        closure_c = 0
        while mi:
            low = mi & -mi
            y = low.bit_length() - 1
            pre |= fiber[y]
            closure_c |= cod_rows[y]
            mi ^= low
        rhs = pre == u and closure_c | img == img
        if u_open != rhs:
            return False
    return True


def quotient_condition(
    nd: int,
    dom_rows: tuple[int, ...],
    nc: int,
    cod_rows: tuple[int, ...],
    table: tuple[int, ...],
) -> bool:
    """For every subset V of the codomain: f^-1(V) open implies V open."""
    if nd > 16 or nc > 16:
        raise ValueError("subset sweep kernels are bounded at 16 points")
    fiber = [0] * nc
    for x in range(nd):
        fiber[table[x]] |= 1 << x
    for v in range(1 << nc):
        pre = 0
        closure_c = 0
        mv = v
        while mv:
            low = mv & -mv
            y = low.bit_length() - 1
            pre |= fiber[y]
            closure_c |= cod_rows[y]
            mv ^= low
        closure_d = 0
        mp = pre
        while mp:
            low = mp & -mp
            closure_d |= dom_rows[low.bit_length() - 1]
            mp ^= low
        if closure_d | pre == pre and closure_c | v != v:
            return False
    return True
