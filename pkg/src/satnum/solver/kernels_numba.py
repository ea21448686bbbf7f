"""Numba-accelerated search kernels over uint64 bitmask adjacency.

Default backend.  Mirrors kernels_py exactly: lowest-index branching,
ascending partners first, stay-unmatched last, strict-improvement recording,
so values and witnesses match the pure-python path bit for bit.  Everything
stays uint64 internally; mixing in int64 would silently promote to float.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"

_U0 = np.uint64(0)
_U1 = np.uint64(1)
_S2 = np.uint64(2)
_S4 = np.uint64(4)
_S56 = np.uint64(56)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_ALL = np.uint64(0xFFFFFFFFFFFFFFFF)


@njit(cache=True, inline="always")
def _pc(x):
    x = x - ((x >> _U1) & _M1)
    x = (x & _M2) + ((x >> _S2) & _M2)
    x = (x + (x >> _S4)) & _M4
    return int((x * _H01) >> _S56)


@njit(cache=True, inline="always")
def _ctz(x):
    return _pc((x & (~x + _U1)) - _U1)


@njit(cache=True, inline="always")
def _full_mask(n):
    if n >= 64:
        return _ALL
    return (_U1 << np.uint64(n)) - _U1


@njit(cache=True, inline="always")
def _coverage_lb(adj, und, must):
    rem = und
    mg = 0
    vmg = _U0
    while rem != _U0:
        a_bit = rem & (~rem + _U1)
        rem ^= a_bit
        nbm = adj[_ctz(a_bit)] & rem
        if nbm != _U0:
            b_bit = nbm & (~nbm + _U1)
            rem ^= b_bit
            mg += 1
            vmg |= a_bit | b_bit
    extra = _pc(must & und & ~vmg)
    return (mg + extra + 1) // 2


@njit(cache=True, nogil=True)
def _saturation_kernel(adj, best_seed):
    n = adj.shape[0]
    full = _full_mask(n)
    depth = n + 2
    cov = np.zeros(depth, np.uint64)
    exc = np.zeros(depth, np.uint64)
    mst = np.zeros(depth, np.uint64)
    avail0 = np.zeros(depth, np.uint64)
    avail_rem = np.zeros(depth, np.uint64)
    vcur = np.zeros(depth, np.int64)
    msz = np.zeros(depth, np.int64)
    tried = np.zeros(depth, np.uint8)
    eu = np.zeros(n + 1, np.int64)
    ew = np.zeros(n + 1, np.int64)
    best_size = best_seed
    best_eu = np.zeros(n + 1, np.int64)
    best_ew = np.zeros(n + 1, np.int64)
    found = False

    sp = 0
    cov[0] = _U0
    exc[0] = _U0
    mst[0] = _U0
    msz[0] = 0
    entering = True
    while sp >= 0:
        if entering:
            entering = False
            und = full & ~cov[sp] & ~exc[sp]
            m = msz[sp]
            if und == _U0:
                if m < best_size:
                    best_size = m
                    found = True
                    for i in range(m):
                        best_eu[i] = eu[i]
                        best_ew[i] = ew[i]
                sp -= 1
                continue
            if m + _coverage_lb(adj, und, mst[sp]) >= best_size:
                sp -= 1
                continue
            v = _ctz(und)
            vcur[sp] = v
            avail0[sp] = adj[v] & und
            avail_rem[sp] = avail0[sp]
            tried[sp] = 0
            continue
        if avail_rem[sp] != _U0:
            w_bit = avail_rem[sp] & (~avail_rem[sp] + _U1)
            avail_rem[sp] ^= w_bit
            v = vcur[sp]
            cov2 = cov[sp] | (_U1 << np.uint64(v)) | w_bit
            eu[msz[sp]] = v
            ew[msz[sp]] = _ctz(w_bit)
            sp += 1
            cov[sp] = cov2
            exc[sp] = exc[sp - 1]
            mst[sp] = mst[sp - 1] & ~cov2
            msz[sp] = msz[sp - 1] + 1
            entering = True
            continue
        if tried[sp] == 0:
            tried[sp] = 1
            v_bit = _U1 << np.uint64(vcur[sp])
            if mst[sp] & v_bit == _U0:
                sp += 1
                cov[sp] = cov[sp - 1]
                exc[sp] = exc[sp - 1] | v_bit
                mst[sp] = mst[sp - 1] | avail0[sp - 1]
                msz[sp] = msz[sp - 1]
                entering = True
                continue
        sp -= 1

    out_u = best_eu[:best_size].copy() if found else best_eu[:0].copy()
    out_w = best_ew[:best_size].copy() if found else best_ew[:0].copy()
    return best_size, out_u, out_w, found


@njit(cache=True, nogil=True)
def _max_matching_kernel(adj):
    n = adj.shape[0]
    depth = n + 2
    avl = np.zeros(depth, np.uint64)
    avail_rem = np.zeros(depth, np.uint64)
    vcur = np.zeros(depth, np.int64)
    msz = np.zeros(depth, np.int64)
    tried = np.zeros(depth, np.uint8)
    eu = np.zeros(n // 2 + 1, np.int64)
    ew = np.zeros(n // 2 + 1, np.int64)
    best_size = -1
    best_eu = np.zeros(n // 2 + 1, np.int64)
    best_ew = np.zeros(n // 2 + 1, np.int64)

    sp = 0
    avl[0] = _full_mask(n)
    msz[0] = 0
    entering = True
    while sp >= 0:
        if entering:
            entering = False
            a = avl[sp]
            t = a
            while t != _U0:
                v_bit = t & (~t + _U1)
                t ^= v_bit
                if adj[_ctz(v_bit)] & a == _U0:
                    a ^= v_bit
            m = msz[sp]
            if a == _U0:
                if m > best_size:
                    best_size = m
                    for i in range(m):
                        best_eu[i] = eu[i]
                        best_ew[i] = ew[i]
                sp -= 1
                continue
            rem = a
            greedy = 0
            while rem != _U0:
                a_bit = rem & (~rem + _U1)
                rem ^= a_bit
                nbm = adj[_ctz(a_bit)] & rem
                if nbm != _U0:
                    rem ^= nbm & (~nbm + _U1)
                    greedy += 1
            ub = _pc(a) // 2
            if 2 * greedy < ub:
                ub = 2 * greedy
            if m + ub <= best_size:
                sp -= 1
                continue
            avl[sp] = a
            v = _ctz(a)
            vcur[sp] = v
            avail_rem[sp] = adj[v] & a
            tried[sp] = 0
            continue
        if avail_rem[sp] != _U0:
            w_bit = avail_rem[sp] & (~avail_rem[sp] + _U1)
            avail_rem[sp] ^= w_bit
            v = vcur[sp]
            eu[msz[sp]] = v
            ew[msz[sp]] = _ctz(w_bit)
            sp += 1
            avl[sp] = avl[sp - 1] & ~(_U1 << np.uint64(v)) & ~w_bit
            msz[sp] = msz[sp - 1] + 1
            entering = True
            continue
        if tried[sp] == 0:
            tried[sp] = 1
            sp += 1
            avl[sp] = avl[sp - 1] ^ (_U1 << np.uint64(vcur[sp - 1]))
            msz[sp] = msz[sp - 1]
            entering = True
            continue
        sp -= 1

    out_u = best_eu[:best_size].copy()
    out_w = best_ew[:best_size].copy()
    return best_size, out_u, out_w


@njit(cache=True, nogil=True)
def _independence_kernel(adj):
    n = adj.shape[0]
    depth = n + 2
    cnd = np.zeros(depth, np.uint64)
    szs = np.zeros(depth, np.int64)
    vb = np.zeros(depth, np.uint64)
    stage = np.zeros(depth, np.uint8)
    best = 0

    sp = 0
    cnd[0] = _full_mask(n)
    szs[0] = 0
    entering = True
    while sp >= 0:
        if entering:
            entering = False
            cand = cnd[sp]
            size = szs[sp]
            reducing = True
            while reducing:
                reducing = False
                t = cand
                while t != _U0:
                    v_bit = t & (~t + _U1)
                    t ^= v_bit
                    dm = adj[_ctz(v_bit)] & cand
                    if dm == _U0:
                        size += 1
                        cand ^= v_bit
                    elif dm & (dm - _U1) == _U0:
                        size += 1
                        cand = (cand ^ v_bit) & ~dm
                        reducing = True
                        break
            if cand == _U0:
                if size > best:
                    best = size
                sp -= 1
                continue
            if size + _pc(cand) <= best:
                sp -= 1
                continue
            t = cand
            bv_bit = _U0
            bd = -1
            while t != _U0:
                v_bit = t & (~t + _U1)
                t ^= v_bit
                d = _pc(adj[_ctz(v_bit)] & cand)
                if d > bd:
                    bd = d
                    bv_bit = v_bit
            cnd[sp] = cand
            szs[sp] = size
            vb[sp] = bv_bit
            stage[sp] = 0
            continue
        if stage[sp] == 0:
            stage[sp] = 1
            v_bit = vb[sp]
            sp += 1
            cnd[sp] = cnd[sp - 1] & ~(adj[_ctz(v_bit)] | v_bit)
            szs[sp] = szs[sp - 1] + 1
            entering = True
            continue
        if stage[sp] == 1:
            stage[sp] = 2
            sp += 1
            cnd[sp] = cnd[sp - 1] ^ vb[sp - 1]
            szs[sp] = szs[sp - 1]
            entering = True
            continue
        sp -= 1

    return best


# ---------------------------------------------------------------------------
# python-facing wrappers (tuple-of-int masks in, plain ints/tuples out)


def _as_uint64(adj) -> np.ndarray:
    return np.array(list(adj), dtype=np.uint64)


def saturation_search(adj, n: int, best_seed: int):
    size, eu, ew, found = _saturation_kernel(_as_uint64(adj), best_seed)
    edges = tuple((int(u), int(w)) for u, w in zip(eu, ew))
    return int(size), edges, bool(found)


def max_matching_search(adj, n: int):
    size, eu, ew = _max_matching_kernel(_as_uint64(adj))
    edges = tuple((int(u), int(w)) for u, w in zip(eu, ew))
    return int(size), edges


def independence_search(adj, n: int) -> int:
    return int(_independence_kernel(_as_uint64(adj)))
