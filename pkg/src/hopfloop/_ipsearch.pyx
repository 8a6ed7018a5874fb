# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel for exhaustive inverse-property loop enumeration.

Same algorithm and pruning as the pure-Python twin `_ipsearch_py`; see the
docstrings there.  `_backend` prefers this module when it is importable.
"""


cdef int MAXN = 12


cdef class _Search:
    cdef int n
    cdef int table[12][12]
    cdef int col_used[12]
    cdef int inv[12]
    cdef list results

    def __init__(self, int n):
        cdef int i, j
        self.n = n
        self.results = []
        for j in range(n):
            self.table[0][j] = j
            self.col_used[j] = 1 << j
            self.inv[j] = -1
        self.inv[0] = 0
        for i in range(1, n):
            self.table[i][0] = i
            for j in range(1, n):
                self.table[i][j] = -1

    cdef bint column_checks(self, int r):
        cdef int a, b, x, ja
        for a in range(1, r + 1):
            ja = self.inv[a]
            for b in range(1, r + 1):
                x = self.table[b][a]
                if x <= r and self.table[x][ja] != b:
                    return False
        return True

    cdef bint complete_row(self, int r):
        cdef int c, c0 = -1
        for c in range(self.n):
            if self.table[r][c] == 0:
                c0 = c
                break
        if c0 < r and self.inv[c0] != r:
            return False
        if c0 == r:
            for c in range(self.n):
                if self.table[r][self.table[r][c]] != c:
                    return False
        self.inv[r] = c0
        if not self.column_checks(r):
            self.inv[r] = -1
            return False
        return True

    cdef void fill_row(self, int r):
        cdef int a, c, v, placed, forced_from = 0
        cdef bint ok
        if r == self.n:
            self.results.append(tuple(
                tuple(self.table[a][c] for c in range(self.n))
                for a in range(self.n)))
            return
        for a in range(1, r):
            if self.inv[a] == r:
                forced_from = a
                break
        if forced_from:
            ok = True
            placed = 0
            for c in range(1, self.n):
                v = -1
                for a in range(self.n):
                    if self.table[forced_from][a] == c:
                        v = a
                        break
                if self.col_used[c] >> v & 1:
                    ok = False
                    break
                self.table[r][c] = v
                self.col_used[c] |= 1 << v
                placed = c
            if ok and self.complete_row(r):
                self.fill_row(r + 1)
                self.inv[r] = -1
            for c in range(1, placed + 1):
                v = self.table[r][c]
                self.table[r][c] = -1
                self.col_used[c] ^= 1 << v
            return
        self.fill_cell(r, 1, 1 << r)

    cdef void fill_cell(self, int r, int c, int row_used):
        cdef int v, used, jc
        if c == self.n:
            if self.complete_row(r):
                self.fill_row(r + 1)
                self.inv[r] = -1
            return
        used = row_used | self.col_used[c]
        jc = self.inv[c] if c < r else -1
        for v in range(self.n):
            if used >> v & 1:
                continue
            if v == 0 and c < r:
                continue
            if jc >= 0 and v < r and self.table[v][jc] != r:
                continue
            self.table[r][c] = v
            self.col_used[c] |= 1 << v
            self.fill_cell(r, c + 1, row_used | 1 << v)
            self.table[r][c] = -1
            self.col_used[c] ^= 1 << v


def enumerate_ip_tables(int n):
    """All reduced IP-loop tables of order n, as tuples of row tuples."""
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return [((0,),)]
    if n >= MAXN:
        raise ValueError(f"order {n} beyond compiled kernel bound")
    s = _Search(n)
    s.fill_row(1)
    return s.results


def canonical_form(table):
    """Lexicographically least relabeling fixing the identity element."""
    cdef int n = len(table)
    cdef int rows[12][12]
    cdef int sigma[12]
    cdef int sinv[12]
    cdef int best[12][12]
    cdef int cand[12][12]
    cdef int i, j, verdict, have_best = 0
    cdef int a, b
    for i in range(n):
        for j in range(n):
            rows[i][j] = table[i][j]
    import itertools
    for perm in itertools.permutations(range(1, n)):
        sigma[0] = 0
        for i in range(1, n):
            sigma[i] = perm[i - 1]
        for i in range(n):
            sinv[sigma[i]] = i
        verdict = 0
        for i in range(n):
            for j in range(n):
                cand[i][j] = sigma[rows[sinv[i]][sinv[j]]]
            if have_best and verdict == 0:
                for j in range(n):
                    a = cand[i][j]
                    b = best[i][j]
                    if a != b:
                        verdict = 1 if a > b else -1
                        break
            if verdict == 1:
                break
        if verdict == 1:
            continue
        if (not have_best) or verdict == -1:
            for i in range(n):
                for j in range(n):
                    best[i][j] = cand[i][j]
            have_best = 1
    return tuple(tuple(best[i][j] for j in range(n)) for i in range(n))
