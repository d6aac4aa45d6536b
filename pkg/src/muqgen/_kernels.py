"""Compiled inner loops.

All kernels take a rotation array ``sigma`` over darts ``0..2e-1`` where the
two darts of edge ``i`` are ``2i`` and ``2i + 1`` (so the edge involution is
``d ^ 1``).
"""
import numpy as np
from numba import njit


@njit(cache=True)
def orbit_ids(perm):
    """Label each point by its orbit, orbits numbered by their least point."""
    n = perm.shape[0]
    ids = np.full(n, -1, dtype=np.int64)
    k = 0
    for d in range(n):
        if ids[d] < 0:
            x = d
            while ids[x] < 0:
                ids[x] = k
                x = perm[x]
            k += 1
    return ids, k


@njit(cache=True)
def face_perm(sigma):
    n = sigma.shape[0]
    phi = np.empty(n, dtype=np.int64)
    for d in range(n):
        phi[d] = sigma[d ^ 1]
    return phi


@njit(cache=True)
def _best_code(sigma, starts, reflect, best, cur, lab, order):
    """Minimal breadth-first relabelling code over ``starts`` and senses.

    Writes the minimum into ``best`` and returns how many (start, sense)
    pairs reach it.
    """
    n = sigma.shape[0]
    inv = np.empty(n, dtype=np.int64)
    for d in range(n):
        inv[sigma[d]] = d
    have = False
    count = 0
    nsense = 2 if reflect else 1
    for sense in range(nsense):
        s = sigma if sense == 0 else inv
        for j in range(starts.shape[0]):
            d0 = starts[j]
            for i in range(n):
                lab[i] = -1
            lab[d0] = 0
            lab[d0 ^ 1] = 1
            order[0] = d0
            order[1] = d0 ^ 1
            nxt = 2
            # -1: already smaller than best, 0: tied so far, 1: larger
            cmp = 0 if have else -1
            for i in range(n):
                t = s[order[i]]
                if lab[t] < 0:
                    lab[t] = nxt
                    lab[t ^ 1] = nxt + 1
                    order[nxt] = t
                    order[nxt + 1] = t ^ 1
                    nxt += 2
                v = lab[t]
                if cmp == 0:
                    if v < best[i]:
                        cmp = -1
                    elif v > best[i]:
                        cmp = 1
                        break
                cur[i] = v
            if cmp == 1:
                continue
            if cmp == -1:
                for i in range(n):
                    best[i] = cur[i]
                count = 1
                have = True
            else:
                count += 1
    return count


@njit(cache=True)
def canonical(sigma, reflect):
    n = sigma.shape[0]
    best = np.empty(n, dtype=np.int64)
    if n == 0:
        return best, 1
    cur = np.empty(n, dtype=np.int64)
    lab = np.empty(n, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    starts = np.arange(n)
    count = _best_code(sigma, starts, reflect, best, cur, lab, order)
    return best, count


@njit(cache=True)
def canonical_from(sigma, starts, reflect):
    n = sigma.shape[0]
    best = np.empty(n, dtype=np.int64)
    cur = np.empty(n, dtype=np.int64)
    lab = np.empty(n, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    count = _best_code(sigma, starts, reflect, best, cur, lab, order)
    return best, count


@njit(cache=True)
def child_codes(sigma, reflect):
    """Canonical codes of every one-edge extension of a map with >= 1 edge.

    Extensions: a new edge between two corners of one face (the same corner
    twice gives a loop), or a pendant edge to a new vertex at any corner.
    Corner ``c`` is the angle from dart ``c`` counterclockwise to ``sigma[c]``.
    """
    n = sigma.shape[0]
    m = n + 2
    phi = face_perm(sigma)
    fid, nf = orbit_ids(phi)
    # corner c lies in the face of sigma[c]
    cf = np.empty(n, dtype=np.int64)
    for c in range(n):
        cf[c] = fid[sigma[c]]
    sizes = np.zeros(nf, dtype=np.int64)
    for c in range(n):
        sizes[cf[c]] += 1
    total = n
    for f in range(nf):
        total += sizes[f] * (sizes[f] + 1) // 2
    codes = np.empty((total, m), dtype=np.int64)
    child = np.empty(m, dtype=np.int64)
    best = np.empty(m, dtype=np.int64)
    cur = np.empty(m, dtype=np.int64)
    lab = np.empty(m, dtype=np.int64)
    order = np.empty(m, dtype=np.int64)
    starts = np.arange(m)
    x = n
    y = n + 1
    row = 0
    for a in range(n):
        for b in range(a, n):
            if cf[a] != cf[b]:
                continue
            for i in range(n):
                child[i] = sigma[i]
            if a == b:
                child[a] = x
                child[x] = y
                child[y] = sigma[a]
            else:
                child[a] = x
                child[x] = sigma[a]
                child[b] = y
                child[y] = sigma[b]
            _best_code(child, starts, reflect, best, cur, lab, order)
            for i in range(m):
                codes[row, i] = best[i]
            row += 1
    for a in range(n):
        for i in range(n):
            child[i] = sigma[i]
        child[a] = x
        child[x] = sigma[a]
        child[y] = y
        _best_code(child, starts, reflect, best, cur, lab, order)
        for i in range(m):
            codes[row, i] = best[i]
        row += 1
    return codes


@njit(cache=True)
def radial(sigma):
    """Vertex-face incidence map; dart ``2c`` sits at the vertex of corner ``c``."""
    n = sigma.shape[0]
    inv = np.empty(n, dtype=np.int64)
    for d in range(n):
        inv[sigma[d]] = d
    out = np.empty(2 * n, dtype=np.int64)
    for c in range(n):
        out[2 * c] = 2 * sigma[c]
        out[2 * c + 1] = 2 * inv[c ^ 1] + 1
    return out
