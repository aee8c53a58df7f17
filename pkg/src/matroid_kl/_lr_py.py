"""Pure-Python Littlewood-Richardson tableau counter (fallback kernel).

Cells of the skew shape lam/mu are filled in reverse reading order: rows
top to bottom, each row right to left. The reading word is therefore built
left to right as we go, so the lattice condition is a running check on the
letter counts.
"""


def _skew_cells(lam, mu):
    """Return (right, above) neighbour index arrays for lam/mu cells in fill order."""
    index = {}
    right = []
    above = []
    for r, row_len in enumerate(lam):
        start = mu[r] if r < len(mu) else 0
        for c in range(row_len - 1, start - 1, -1):
            index[r, c] = len(right)
            right.append(index.get((r, c + 1), -1))
            above.append(index.get((r - 1, c), -1))
    return right, above


def count_lr(lam, mu, nu):
    """Number of LR tableaux of shape lam/mu and content nu.

    Arguments are weakly decreasing tuples of positive ints. Returns 0 when
    the shapes are incompatible.
    """
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if len(mu) > len(lam) or any(a < b for a, b in zip(lam, mu)):
        return 0
    if len(nu) > len(lam) or any(a < b for a, b in zip(lam, nu)):
        return 0
    if not nu:
        return 1
    right, above = _skew_cells(lam, mu)
    ncell = len(right)
    nletters = len(nu)
    fill = [0] * ncell
    cnt = [0] * nletters

    def dfs(pos):
        if pos == ncell:
            return 1
        a = above[pos]
        lo = fill[a] + 1 if a >= 0 else 0
        rt = right[pos]
        hi = fill[rt] if rt >= 0 else nletters - 1
        total = 0
        for x in range(lo, hi + 1):
            cx = cnt[x]
            if cx >= nu[x]:
                continue
            if x and cx >= cnt[x - 1]:
                continue
            cnt[x] = cx + 1
            fill[pos] = x
            total += dfs(pos + 1)
            cnt[x] = cx
        return total

    return dfs(0)
