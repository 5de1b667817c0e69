# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for residue labelling and isomorphism propagation."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def component_labels(const long long[:, ::1] table, colours):
    cdef Py_ssize_t n = table.shape[1]
    cdef long long[::1] cols = np.asarray(list(colours), dtype=np.int64)
    cdef Py_ssize_t ncol = cols.shape[0]
    cdef long long[::1] labels = np.full(n, -1, dtype=np.int64)
    cdef long long[::1] stack = np.empty(n, dtype=np.int64)
    cdef Py_ssize_t start, top, c
    cdef long long v, w, count = 0
    for start in range(n):
        if labels[start] >= 0:
            continue
        labels[start] = count
        stack[0] = start
        top = 1
        while top > 0:
            top -= 1
            v = stack[top]
            for c in range(ncol):
                w = table[cols[c], v]
                if labels[w] < 0:
                    labels[w] = count
                    stack[top] = w
                    top += 1
        count += 1
    return np.asarray(labels).tolist(), int(count)


cdef bint _propagate(const long long[:, ::1] a, const long long[:, ::1] b, const long long[::1] phi,
                     long long seed_a, long long seed_b,
                     long long[::1] f, unsigned char[::1] used, long long[::1] queue) nogil:
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t head = 0, tail = 1, i
    cdef int k
    cdef long long v, fv, w, fw, target
    for i in range(n):
        f[i] = -1
        used[i] = 0
    f[seed_a] = seed_b
    used[seed_b] = 1
    queue[0] = seed_a
    while head < tail:
        v = queue[head]
        head += 1
        fv = f[v]
        for k in range(4):
            w = a[k, v]
            target = b[phi[k], fv]
            fw = f[w]
            if fw < 0:
                if used[target]:
                    return False
                f[w] = target
                used[target] = 1
                queue[tail] = w
                tail += 1
            elif fw != target:
                return False
    return tail == n


def propagate(table_a, table_b, phi, long long seed_a, long long seed_b):
    cdef const long long[:, ::1] a = np.ascontiguousarray(table_a, dtype=np.int64)
    cdef const long long[:, ::1] b = np.ascontiguousarray(table_b, dtype=np.int64)
    cdef long long[::1] ph = np.asarray(list(phi), dtype=np.int64)
    cdef Py_ssize_t n = a.shape[1]
    f = np.empty(n, dtype=np.int64)
    cdef long long[::1] fv = f
    cdef unsigned char[::1] used = np.empty(n, dtype=np.uint8)
    cdef long long[::1] queue = np.empty(n, dtype=np.int64)
    if _propagate(a, b, ph, seed_a, seed_b, fv, used, queue):
        return f.tolist()
    return None


def search(table_a, table_b, phis, long long seed_a):
    """First (phi index, image of seed_a, f) in (phi, image) order, or None."""
    cdef const long long[:, ::1] a = np.ascontiguousarray(table_a, dtype=np.int64)
    cdef const long long[:, ::1] b = np.ascontiguousarray(table_b, dtype=np.int64)
    cdef long long[:, ::1] ph_all = np.asarray([list(p) for p in phis], dtype=np.int64).reshape(-1, 4)
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t nphi = ph_all.shape[0]
    f = np.empty(n, dtype=np.int64)
    cdef long long[::1] fv = f
    cdef unsigned char[::1] used = np.empty(n, dtype=np.uint8)
    cdef long long[::1] queue = np.empty(n, dtype=np.int64)
    cdef Py_ssize_t idx
    cdef long long target
    cdef bint hit = False
    with nogil:
        for idx in range(nphi):
            for target in range(n):
                if _propagate(a, b, ph_all[idx], seed_a, target, fv, used, queue):
                    hit = True
                    break
            if hit:
                break
    if hit:
        return int(idx), int(target), f.tolist()
    return None
