"""Pure-python search kernels over bitmask adjacency.

Fallback backend: same exploration order as the numba kernels, so values and
witnesses are identical bit for bit.  Masks are plain python integers.
"""

from __future__ import annotations

NAME = "python"


def _lsb_index(x: int) -> int:
    return (x & -x).bit_length() - 1


def _coverage_lower_bound(adj, und: int, must: int) -> int:
    # Future matched vertices must contain `must` and hit every edge inside
    # `und`; a greedy matching of the induced subgraph lower-bounds that
    # vertex cover, and each future matching edge covers two vertices.
    rem = und
    mg = 0
    vmg = 0
    while rem:
        a_bit = rem & -rem
        rem ^= a_bit
        nbm = adj[_lsb_index(a_bit)] & rem
        if nbm:
            b_bit = nbm & -nbm
            rem ^= b_bit
            mg += 1
            vmg |= a_bit | b_bit
    extra = bin(must & und & ~vmg).count("1")
    return (mg + extra + 1) // 2


def saturation_search(adj, n: int, best_seed: int):
    """Smallest maximal matching by branch and bound.

    Processes the lowest-index undecided vertex: try each available partner
    in ascending order, then the stay-unmatched branch, which forces every
    undecided neighbor to be matched eventually.  ``best_seed`` is a strict
    upper sentinel (one more than some known maximal matching size).

    Returns ``(size, edges, found)`` where ``edges`` is the inclusion-order
    witness of the first optimum explored.
    """
    adj = list(adj)
    full = (1 << n) - 1
    best_size = best_seed
    best_edges: tuple = ()
    found = False
    cur: list = []

    def dfs(covered: int, excluded: int, must: int, m: int) -> None:
        nonlocal best_size, best_edges, found
        und = full & ~covered & ~excluded
        if und == 0:
            if m < best_size:
                best_size = m
                best_edges = tuple(cur)
                found = True
            return
        if m + _coverage_lower_bound(adj, und, must) >= best_size:
            return
        v = _lsb_index(und)
        v_bit = 1 << v
        avail = adj[v] & und
        rem = avail
        while rem:
            w_bit = rem & -rem
            rem ^= w_bit
            cov2 = covered | v_bit | w_bit
            cur.append((v, _lsb_index(w_bit)))
            dfs(cov2, excluded, must & ~cov2, m + 1)
            cur.pop()
        if not must & v_bit:
            dfs(covered, excluded | v_bit, must | avail, m)

    dfs(0, 0, 0, 0)
    return best_size, best_edges, found


def max_matching_search(adj, n: int):
    """Maximum matching by branch and bound; returns ``(size, edges)``."""
    adj = list(adj)
    best_size = -1
    best_edges: tuple = ()
    cur: list = []

    def dfs(avail: int, m: int) -> None:
        nonlocal best_size, best_edges
        # vertices with no available partner can never be matched
        t = avail
        while t:
            v_bit = t & -t
            t ^= v_bit
            if adj[_lsb_index(v_bit)] & avail == 0:
                avail ^= v_bit
        if avail == 0:
            if m > best_size:
                best_size = m
                best_edges = tuple(cur)
            return
        # remaining matching is at most half the active vertices and at most
        # twice any maximal matching of the remainder
        rem = avail
        greedy = 0
        while rem:
            a_bit = rem & -rem
            rem ^= a_bit
            nbm = adj[_lsb_index(a_bit)] & rem
            if nbm:
                rem ^= nbm & -nbm
                greedy += 1
        ub = min(bin(avail).count("1") // 2, 2 * greedy)
        if m + ub <= best_size:
            return
        v = _lsb_index(avail)
        v_bit = 1 << v
        rem = adj[v] & avail
        while rem:
            w_bit = rem & -rem
            rem ^= w_bit
            cur.append((v, _lsb_index(w_bit)))
            dfs(avail & ~v_bit & ~w_bit, m + 1)
            cur.pop()
        dfs(avail ^ v_bit, m)

    dfs((1 << n) - 1, 0)
    return best_size, best_edges


def independence_search(adj, n: int) -> int:
    """Maximum independent set size by branch and bound."""
    adj = list(adj)
    best = 0

    def dfs(cand: int, size: int) -> None:
        nonlocal best
        # take degree-0 vertices outright and degree-1 vertices greedily
        while True:
            t = cand
            reduced = False
            while t:
                v_bit = t & -t
                t ^= v_bit
                dm = adj[_lsb_index(v_bit)] & cand
                if dm == 0:
                    size += 1
                    cand ^= v_bit
                elif dm & (dm - 1) == 0:
                    size += 1
                    cand = (cand ^ v_bit) & ~dm
                    reduced = True
                    break
            if not reduced:
                break
        if cand == 0:
            if size > best:
                best = size
            return
        if size + bin(cand).count("1") <= best:
            return
        # branch on a max-degree vertex (lowest index on ties)
        t = cand
        bv = -1
        bd = -1
        while t:
            v_bit = t & -t
            t ^= v_bit
            d = bin(adj[_lsb_index(v_bit)] & cand).count("1")
            if d > bd:
                bd = d
                bv = _lsb_index(v_bit)
        bv_bit = 1 << bv
        dfs(cand & ~(adj[bv] | bv_bit), size + 1)
        dfs(cand ^ bv_bit, size)

    dfs((1 << n) - 1, 0)
    return best
