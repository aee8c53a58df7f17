# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Littlewood-Richardson tableau counter.

Same fill order and pruning as matroid_kl._lr_py; cells and letter counts
live in fixed C arrays.
"""

cdef enum:
    MAXCELL = 256

cdef long long _dfs(int pos, int ncell, int nletters,
                    int* right, int* above, int* fill, int* cnt, int* nu) nogil:
    cdef int a, rt, lo, hi, x, cx
    cdef long long total = 0
    if pos == ncell:
        return 1
    a = above[pos]
    lo = fill[a] + 1 if a >= 0 else 0
    rt = right[pos]
    hi = fill[rt] if rt >= 0 else nletters - 1
    x = lo
    while x <= hi:
        cx = cnt[x]
        if cx < nu[x] and (x == 0 or cx < cnt[x - 1]):
            cnt[x] = cx + 1
            fill[pos] = x
            total += _dfs(pos + 1, ncell, nletters, right, above, fill, cnt, nu)
            cnt[x] = cx
        x += 1
    return total


def count_lr(lam, mu, nu):
    """Number of LR tableaux of shape lam/mu and content nu."""
    cdef int right[MAXCELL]
    cdef int above[MAXCELL]
    cdef int fill[MAXCELL]
    cdef int cnt[MAXCELL]
    cdef int nuc[MAXCELL]
    cdef int r, c, start, prev_row_start, row_first, prev_first, prev_len, k
    cdef int ncell = 0
    cdef int nletters = len(nu)
    cdef int nrows = len(lam)
    cdef int lam_r, lam_prev
    cdef long long total

    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if len(mu) > nrows or len(nu) > nrows:
        return 0
    for k in range(len(mu)):
        if lam[k] < mu[k]:
            return 0
    for k in range(nletters):
        if lam[k] < nu[k]:
            return 0
    if nletters == 0:
        return 1
    if sum(lam) - sum(mu) > MAXCELL or lam[0] > MAXCELL:
        raise OverflowError("skew shape too large for the compiled kernel")
    for k in range(nletters):
        nuc[k] = nu[k]
        cnt[k] = 0

    # cells of row r occupy indices row_first .. row_first + len - 1,
    # stored right to left, so column c sits at row_first + (lam_r - 1 - c)
    prev_first = -1
    lam_prev = 0
    prev_row_start = 0
    for r in range(nrows):
        lam_r = lam[r]
        start = mu[r] if r < len(mu) else 0
        row_first = ncell
        for c in range(lam_r - 1, start - 1, -1):
            right[ncell] = ncell - 1 if c + 1 < lam_r else -1
            if r > 0 and prev_row_start <= c < lam_prev:
                above[ncell] = prev_first + (lam_prev - 1 - c)
            else:
                above[ncell] = -1
            fill[ncell] = 0
            ncell += 1
        prev_first = row_first
        lam_prev = lam_r
        prev_row_start = start
    with nogil:
        total = _dfs(0, ncell, nletters, right, above, fill, cnt, nuc)
    return total
