"""Pure-Python kernel for exhaustive inverse-property loop enumeration.

Drop-in twin of the compiled `_ipsearch` extension; selected at import by
`_backend` when the extension is unavailable (or HOPFLOOP_PURE is set).

Tables are reduced: element 0 is the identity, row 0 and column 0 are the
identity permutation.  The backtracker fills rows top to bottom and prunes
with the inverse-property structure:

* ``a(a^-1 b) = b`` makes row ``a^-1`` the inverse permutation of row ``a``,
  so a row whose inverse element is already placed is forced outright;
* ``(ba)a^-1 = b`` is the column analogue, checked on every decidable
  triple after each completed row;
* inverses are two-sided, so a zero may only appear at or after the
  diagonal in a fresh row.
"""

from itertools import permutations


def enumerate_ip_tables(n):
    """All reduced IP-loop tables of order n, as tuples of row tuples."""
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return [((0,),)]
    table = [list(range(n))] + [[r] + [-1] * (n - 1) for r in range(1, n)]
    col_used = [1 << c for c in range(n)]  # bitmask of values in column c
    inv = [0] + [-1] * (n - 1)
    results = []

    def column_checks(r):
        # (b a) a^-1 = b on every triple decidable from rows 1..r
        for a in range(1, r + 1):
            ja = inv[a]
            for b in range(1, r + 1):
                x = table[b][a]
                if x <= r and table[x][ja] != b:
                    return False
        return True

    def complete_row(r):
        row = table[r]
        c0 = row.index(0)
        if c0 < r and inv[c0] != r:
            return False
        if c0 == r:
            for c in range(n):
                if row[row[c]] != c:
                    return False
        inv[r] = c0
        if not column_checks(r):
            inv[r] = -1
            return False
        return True

    def fill_row(r):
        if r == n:
            results.append(tuple(tuple(row) for row in table))
            return
        forced_from = 0
        for a in range(1, r):
            if inv[a] == r:
                forced_from = a
                break
        if forced_from:
            src = table[forced_from]
            row = table[r]
            placed = []
            ok = True
            for c in range(1, n):
                v = src.index(c)  # inverse permutation of src
                if col_used[c] >> v & 1:
                    ok = False
                    break
                row[c] = v
                col_used[c] |= 1 << v
                placed.append((c, v))
            if ok and complete_row(r):
                fill_row(r + 1)
                inv[r] = -1
            for c, v in placed:
                row[c] = -1
                col_used[c] ^= 1 << v
            return
        fill_cell(r, 1, 1 << r)  # value r already used at column 0

    def fill_cell(r, c, row_used):
        if c == n:
            if complete_row(r):
                fill_row(r + 1)
                inv[r] = -1
            return
        row = table[r]
        used = row_used | col_used[c]
        jc = inv[c] if c < r else -1
        for v in range(n):
            if used >> v & 1:
                continue
            if v == 0 and c < r:
                continue  # zero below the diagonal forces a row instead
            if jc >= 0 and v < r and table[v][jc] != r:
                continue  # (r c) c^-1 = r already violated
            row[c] = v
            col_used[c] |= 1 << v
            fill_cell(r, c + 1, row_used | 1 << v)
            row[c] = -1
            col_used[c] ^= 1 << v

    fill_row(1)
    return results


def canonical_form(table):
    """Lexicographically least relabeling fixing the identity element."""
    n = len(table)
    rows = [tuple(row) for row in table]
    best = None
    for perm in permutations(range(1, n)):
        sigma = (0,) + perm
        inv = [0] * n
        for old, new in enumerate(sigma):
            inv[new] = old
        cand = []
        verdict = 0  # -1 better than best, 0 tied so far
        for i in range(n):
            src = rows[inv[i]]
            row = tuple(sigma[src[inv[j]]] for j in range(n))
            if best is not None and verdict == 0:
                if row > best[i]:
                    verdict = 1
                    break
                if row < best[i]:
                    verdict = -1
            cand.append(row)
        if verdict == 1:
            continue
        if best is None or verdict == -1:
            best = tuple(cand)
    return best
