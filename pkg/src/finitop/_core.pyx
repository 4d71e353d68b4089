# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; contract mirrors ``finitop._fallback`` exactly."""

BACKEND = "compiled"


cdef int _popcount(unsigned int v):
    cdef int c = 0
    while v:
        v &= v - 1
        c += 1
    return c


cdef int _bit_index(unsigned int low):
    cdef int i = 0
    while low > 1:
        low >>= 1
        i += 1
    return i


def preorders(int n):
    """All reflexive transitive row tuples on n points, canonical order."""
    if not 1 <= n <= 8:
        raise ValueError("preorder enumeration kernel is bounded at 8 points")
    cdef unsigned int full = (1 << n) - 1
    cdef int ncand = 1 << (n - 1)
    cdef unsigned int cands[8][128]
    cdef unsigned int rows[8]
    cdef int idx[8]
    cdef int x, y, i, level
    cdef unsigned int m, rev, c, ra
    cdef bint ok
    cdef list tmp
    for x in range(n):
        tmp = []
        for m in range(full + 1):
            if (m >> x) & 1:
                rev = 0
                for y in range(n):
                    if (m >> y) & 1:
                        rev |= 1 << (n - 1 - y)
                tmp.append((rev, m))
        tmp.sort()
        for i in range(ncand):
            cands[x][i] = <unsigned int> tmp[i][1]
    out = []
    level = 0
    idx[0] = 0
    while level >= 0:
        if idx[level] == ncand:
            level -= 1
            if level >= 0:
                idx[level] += 1
            continue
        c = cands[level][idx[level]]
        ok = True
        for i in range(level):
            ra = rows[i]
            if (ra >> level) & 1 and (c & ~ra & full):
                ok = False
                break
            if (c >> i) & 1 and (ra & ~c & full):
                ok = False
                break
        if ok:
            rows[level] = c
            if level == n - 1:
                out.append(tuple([rows[i] for i in range(n)]))
                idx[level] += 1
            else:
                level += 1
                idx[level] = 0
        else:
            idx[level] += 1
    return out


def automorphisms(int n, rows_in):
    """All permutations preserving the relation both ways, sorted."""
    if not 1 <= n <= 16:
        raise ValueError("automorphism kernel is bounded at 16 points")
    cdef unsigned int rows[16]
    cdef unsigned int down[16]
    cdef int up_size[16]
    cdef int down_size[16]
    cdef int perm[16]
    cdef int tries[16]
    cdef unsigned int used = 0
    cdef int i, x, y, t, a, level
    cdef unsigned int m
    cdef bint ok
    for i in range(n):
        rows[i] = rows_in[i]
    for x in range(n):
        m = 0
        for y in range(n):
            if (rows[y] >> x) & 1:
                m |= 1 << y
        down[x] = m
        up_size[x] = _popcount(rows[x])
    for x in range(n):
        down_size[x] = _popcount(down[x])
    out = []
    level = 0
    tries[0] = 0
    while level >= 0:
        t = tries[level]
        if t == n:
            level -= 1
            if level >= 0:
                used &= ~(<unsigned int> 1 << perm[level])
                tries[level] += 1
            continue
        ok = True
        if (used >> t) & 1:
            ok = False
        elif up_size[t] != up_size[level] or down_size[t] != down_size[level]:
            ok = False
        else:
            for a in range(level):
                if ((rows[level] >> a) & 1) != ((rows[t] >> perm[a]) & 1):
                    ok = False
                    break
                if ((rows[a] >> level) & 1) != ((rows[perm[a]] >> t) & 1):
                    ok = False
                    break
        if ok:
            perm[level] = t
            used |= <unsigned int> 1 << t
            if level == n - 1:
                out.append(tuple([perm[i] for i in range(n)]))
                used &= ~(<unsigned int> 1 << t)
                tries[level] += 1
            else:
                level += 1
                tries[level] = 0
        else:
            tries[level] += 1
    return out


def star_condition(int nd, dom_rows, int nc, cod_rows, table):
    """U open <=> U = f^-1(f(U)) and f(U) open, over all 2^nd subsets."""
    if nd > 16 or nc > 16:
        raise ValueError("subset sweep kernels are bounded at 16 points")
    cdef unsigned int drows[16]
    cdef unsigned int crows[16]
    cdef unsigned int pimg[16]
    cdef unsigned int fib[16]
    cdef int i, x, y
    cdef unsigned int u, img, pre, cls_d, cls_c, m, low
    cdef bint u_open, rhs
    for i in range(nd):
        drows[i] = dom_rows[i]
        pimg[i] = <unsigned int> 1 << (<int> table[i])
    for i in range(nc):
        crows[i] = cod_rows[i]
        fib[i] = 0
    for i in range(nd):
        fib[<int> table[i]] |= <unsigned int> 1 << i
    for u in range(<unsigned int> 1 << nd):
        img = 0
        cls_d = 0
        m = u
        while m:
            low = m & (0 - m)
            x = _bit_index(low)
            img |= pimg[x]
            cls_d |= drows[x]
            m ^= low
        u_open = (cls_d | u) == u
        pre = 0
        cls_c = 0
        m = img
        while m:
            low = m & (0 - m)
            y = _bit_index(low)
            pre |= fib[y]
            cls_c |= crows[y]
            m ^= low
        rhs = pre == u and (cls_c | img) == img
        if u_open != rhs:
            return False
    return True


def quotient_condition(int nd, dom_rows, int nc, cod_rows, table):
    """f^-1(V) open implies V open, over all 2^nc subsets."""
    if nd > 16 or nc > 16:
        raise ValueError("subset sweep kernels are bounded at 16 points")
    cdef unsigned int drows[16]
    cdef unsigned int crows[16]
    cdef unsigned int fib[16]
    cdef int i, y
    cdef unsigned int v, pre, cls_c, cls_d, m, low
    for i in range(nd):
        drows[i] = dom_rows[i]
    for i in range(nc):
        crows[i] = cod_rows[i]
        fib[i] = 0
    for i in range(nd):
        fib[<int> table[i]] |= <unsigned int> 1 << i
    for v in range(<unsigned int> 1 << nc):
        pre = 0
        cls_c = 0
        m = v
        while m:
            low = m & (0 - m)
            y = _bit_index(low)
            pre |= fib[y]
            cls_c |= crows[y]
            m ^= low
        cls_d = 0
        m = pre
        while m:
            low = m & (0 - m)
            cls_d |= drows[_bit_index(low)]
            m ^= low
        if (cls_d | pre) == pre and (cls_c | v) != v:
            return False
    return True
