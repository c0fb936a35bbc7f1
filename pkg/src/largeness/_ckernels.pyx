# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of ``largeness._pykernels``; same names, same results."""

import numpy as np

from libc.stdint cimport int64_t, uint8_t


cdef extern from *:
    int __builtin_ctzll(unsigned long long x) nogil
    bint __builtin_add_overflow(int64_t a, int64_t b, int64_t *res) nogil


def fs_sums(gens):
    cdef int64_t[::1] g = np.ascontiguousarray(gens, dtype=np.int64)
    cdef Py_ssize_t k = g.shape[0]
    cdef Py_ssize_t n = (<Py_ssize_t>1) << k
    out = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] s = out
    cdef Py_ssize_t mask, low
    cdef int64_t v
    cdef bint bad = 0
    with nogil:
        for mask in range(1, n):
            low = mask & (-mask)
            if __builtin_add_overflow(s[mask ^ low], g[__builtin_ctzll(low)], &v):
                bad = 1
                break
            s[mask] = v
    if bad:
        return None
    return out


def positive_differences(hi, lo):
    cdef int64_t[::1] h = np.ascontiguousarray(hi, dtype=np.int64)
    cdef int64_t[::1] l = np.ascontiguousarray(lo, dtype=np.int64)
    cdef Py_ssize_t nh = h.shape[0], nl = l.shape[0], i, j, cnt = 0
    buf = np.empty(nh * nl, dtype=np.int64)
    cdef int64_t[::1] b = buf
    with nogil:
        for i in range(nh):
            for j in range(nl):
                if h[i] > l[j]:
                    b[cnt] = h[i] - l[j]
                    cnt += 1
    return np.unique(buf[:cnt])


cdef inline int64_t _find(int64_t[::1] N, int64_t v) noexcept nogil:
    cdef int64_t root = v, step
    while N[root] != root:
        root = N[root]
    while N[v] != root:
        step = N[v]
        N[v] = root
        v = step
    return root


def cr_scan(fam, hmasks, hsizes, uint8_t[::1] occ, uint8_t[::1] amask, int64_t[::1] nxt,
            int64_t c_max, int64_t b):
    cdef int64_t[:, ::1] F = np.ascontiguousarray(fam, dtype=np.int64)
    cdef int64_t[::1] M = np.ascontiguousarray(hmasks, dtype=np.int64)
    cdef int64_t[::1] S = np.ascontiguousarray(hsizes, dtype=np.int64)
    cdef Py_ssize_t nf = F.shape[0], m = F.shape[1], nh = M.shape[0]
    offs_arr = np.zeros((nh, nf), dtype=np.int64)
    cdef int64_t[:, ::1] O = offs_arr
    cdef Py_ssize_t h, f, t
    cdef int64_t c, v, u, w, acc, shift, base
    cdef int64_t lim = occ.shape[0]
    cdef bint ok, grow = 0
    cdef int64_t best_c = c_max + 1, best_h = -1
    with nogil:
        for h in range(nh):
            for f in range(nf):
                acc = 0
                for t in range(m):
                    if (M[h] >> t) & 1:
                        acc += F[f, t]
                O[h, f] = acc
        for h in range(nh):
            shift = S[h] * b
            base = shift + O[h, 0]
            c = 1
            while c <= c_max and c < best_c:
                v = base + c
                if v >= lim:
                    grow = 1
                    break
                u = _find(nxt, v)
                if u >= lim:
                    grow = 1
                    break
                c = u - base
                if c > c_max or c >= best_c:
                    break
                ok = 1
                for f in range(1, nf):
                    w = shift + c + O[h, f]
                    if w >= lim:
                        grow = 1
                        break
                    if occ[w] or not amask[w]:
                        ok = 0
                        break
                if grow:
                    break
                if ok:
                    best_c = c
                    best_h = h
                    break
                c += 1
            if grow:
                break
    if grow:
        return -2, -2
    if best_h < 0:
        return -1, -1
    return best_c, best_h


cdef inline void _ex_op(int64_t l1, int64_t i1, int64_t l2, int64_t i2,
                        int64_t *lo, int64_t *io) noexcept nogil:
    if l1 < l2:
        lo[0] = l2
        io[0] = i2
    elif l2 < l1:
        lo[0] = l1
        io[0] = i1
    else:
        lo[0] = l1
        io[0] = i1 + i2


def ex_law_scan(levels, idxs, Py_ssize_t max_report):
    cdef int64_t[::1] L = np.ascontiguousarray(levels, dtype=np.int64)
    cdef int64_t[::1] I = np.ascontiguousarray(idxs, dtype=np.int64)
    cdef Py_ssize_t n = L.shape[0], i, j, k
    cdef int64_t a_l, a_i, b_l, b_i, x_l, x_i, y_l, y_i, jk_l, jk_i
    cdef long long comm_n = 0, assoc_n = 0, idem_n = 0
    comm_ex, assoc_ex, idem_ex = [], [], []
    for i in range(n):
        _ex_op(L[i], I[i], L[i], I[i], &a_l, &a_i)
        if a_l == L[i] and a_i == I[i]:
            idem_n += 1
            if len(idem_ex) < max_report:
                idem_ex.append((i,))
        for j in range(n):
            _ex_op(L[i], I[i], L[j], I[j], &a_l, &a_i)
            _ex_op(L[j], I[j], L[i], I[i], &b_l, &b_i)
            if a_l != b_l or a_i != b_i:
                comm_n += 1
                if len(comm_ex) < max_report:
                    comm_ex.append((i, j))
            for k in range(n):
                _ex_op(a_l, a_i, L[k], I[k], &x_l, &x_i)
                _ex_op(L[j], I[j], L[k], I[k], &jk_l, &jk_i)
                _ex_op(L[i], I[i], jk_l, jk_i, &y_l, &y_i)
                if x_l != y_l or x_i != y_i:
                    assoc_n += 1
                    if len(assoc_ex) < max_report:
                        assoc_ex.append((i, j, k))
    return comm_n, comm_ex, assoc_n, assoc_ex, idem_n, idem_ex
