"""Pure-Python implementations of the hot loops.

Every function here has an identically named, identically behaving twin in
``_ckernels.pyx``.  ``largeness.kernels`` picks one at import time.
"""

from __future__ import annotations

import numpy as np

I64_MAX = (1 << 63) - 1


def fs_sums(gens):
    """Subset sums of ``gens`` indexed by bitmask (bit i <-> gens[i]).

    Returns an int64 array of length ``2**len(gens)`` with entry 0 equal to 0,
    or ``None`` if some sum does not fit in int64.
    """
    g = [int(x) for x in gens]
    n = 1 << len(g)
    out = [0] * n
    for mask in range(1, n):
        low = mask & -mask
        v = out[mask ^ low] + g[low.bit_length() - 1]
        if v > I64_MAX:
            return None
        out[mask] = v
    return np.array(out, dtype=np.int64)


def positive_differences(hi, lo):
    """Sorted distinct values ``h - l`` over ``h in hi, l in lo`` with ``h > l``."""
    diffs = {int(h) - int(l) for h in hi for l in lo if h > l}
    return np.array(sorted(diffs), dtype=np.int64)


def _find(nxt, v):
    root = v
    while nxt[root] != root:
        root = nxt[root]
    while nxt[v] != root:
        nxt[v], v = root, nxt[v]
    return root


def cr_scan(fam, hmasks, hsizes, occ, amask, nxt, c_max, b):
    """Least ``(c, h)`` (c-major, then h in the given order) such that every
    value ``c + hsizes[h]*b + sum_{t in hmasks[h]} fam[f, t]`` is free in
    ``occ`` and present in ``amask``.

    ``nxt`` (length ``len(occ) + 1``) is a skip structure: following it from
    ``v`` reaches the least usable position ``>= v``; its last slot is a
    sentinel.  The scan compresses paths in place.

    Returns ``(c, h)``, ``(-1, -1)`` when nothing fits, or ``(-2, -2)`` when a
    candidate value falls outside the arrays (caller must grow them).
    """
    nf, m = fam.shape
    rows = [[int(v) for v in fam[f]] for f in range(nf)]
    lim = len(occ)
    c_max = int(c_max)
    best_c, best_h = c_max + 1, -1
    for h, mask in enumerate(hmasks):
        mask = int(mask)
        offs = [sum(r[t] for t in range(m) if mask >> t & 1) for r in rows]
        shift = int(hsizes[h]) * int(b)
        base = shift + offs[0]
        c = 1
        while c <= c_max and c < best_c:
            v = base + c
            if v >= lim:
                return -2, -2
            u = int(_find(nxt, v))
            if u >= lim:
                return -2, -2
            c = u - base
            if c > c_max or c >= best_c:
                break
            for o in offs[1:]:
                w = shift + c + o
                if w >= lim:
                    return -2, -2
                if occ[w] or not amask[w]:
                    break
            else:
                best_c, best_h = c, h
                break
            c += 1
    if best_h < 0:
        return -1, -1
    return best_c, best_h


def _ex_op(l1, i1, l2, i2):
    if l1 < l2:
        return l2, i2
    if l2 < l1:
        return l1, i1
    return l1, i1 + i2


def ex_law_scan(levels, idxs, max_report):
    """Exhaustive commutativity / associativity / idempotent scan of the
    ordinal-levels operation over the sample ``zip(levels, idxs)``.

    Returns ``(comm_count, comm_examples, assoc_count, assoc_examples,
    idem_count, idem_examples)`` where examples are index tuples into the sample.
    """
    L = [int(v) for v in levels]
    I = [int(v) for v in idxs]
    n = len(L)
    comm_n = assoc_n = idem_n = 0
    comm_ex, assoc_ex, idem_ex = [], [], []
    for i in range(n):
        if _ex_op(L[i], I[i], L[i], I[i]) == (L[i], I[i]):
            idem_n += 1
            if len(idem_ex) < max_report:
                idem_ex.append((i,))
        for j in range(n):
            ij = _ex_op(L[i], I[i], L[j], I[j])
            if ij != _ex_op(L[j], I[j], L[i], I[i]):
                comm_n += 1
                if len(comm_ex) < max_report:
                    comm_ex.append((i, j))
            for k in range(n):
                left = _ex_op(ij[0], ij[1], L[k], I[k])
                jk = _ex_op(L[j], I[j], L[k], I[k])
                right = _ex_op(L[i], I[i], jk[0], jk[1])
                if left != right:
                    assoc_n += 1
                    if len(assoc_ex) < max_report:
                        assoc_ex.append((i, j, k))
    return comm_n, comm_ex, assoc_n, assoc_ex, idem_n, idem_ex
