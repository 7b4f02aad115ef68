# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of _kernel_py.search_coloring.

Same search order, same pruning, same node accounting: results (status,
coloring, node count) are required to be identical to the pure kernel.
"""

from libc.stdlib cimport calloc, free

FOUND = 0
NONE = 1
BUDGET = 2


cdef int _dfs(int colored, int max_used, int n, int k, long budget,
              int* indptr, int* indices, int* req, int* deg,
              int* color, int* cnt, int* distinct, int* uncol,
              long* nodes):
    cdef int v = -1, best_d = -1, best_deg = -1
    cdef int i, u, c, gain, st, limit
    cdef bint ok

    nodes[0] += 1
    if budget and nodes[0] > budget:
        return 2
    if colored == n:
        return 0
    for i in range(n):
        if color[i] == 0:
            if distinct[i] > best_d or (distinct[i] == best_d and deg[i] > best_deg):
                best_d = distinct[i]
                best_deg = deg[i]
                v = i
    limit = max_used + 1 if max_used < k else k
    for c in range(1, limit + 1):
        if cnt[v * (k + 1) + c] > 0:
            continue
        ok = True
        for i in range(indptr[v], indptr[v + 1]):
            u = indices[i]
            gain = 1 if cnt[u * (k + 1) + c] == 0 else 0
            if distinct[u] + gain + uncol[u] - 1 < req[u]:
                ok = False
                break
        if not ok:
            continue
        color[v] = c
        for i in range(indptr[v], indptr[v + 1]):
            u = indices[i]
            uncol[u] -= 1
            if cnt[u * (k + 1) + c] == 0:
                distinct[u] += 1
            cnt[u * (k + 1) + c] += 1
        st = _dfs(colored + 1, c if c > max_used else max_used, n, k, budget,
                  indptr, indices, req, deg, color, cnt, distinct, uncol, nodes)
        if st == 0:
            return 0
        color[v] = 0
        for i in range(indptr[v], indptr[v + 1]):
            u = indices[i]
            uncol[u] += 1
            cnt[u * (k + 1) + c] -= 1
            if cnt[u * (k + 1) + c] == 0:
                distinct[u] -= 1
        if st == 2:
            return 2
    return 1


def search_coloring(neighbors, req, int k, long budget):
    cdef int n = len(neighbors)
    if n == 0:
        return FOUND, [], 0
    if k < 1:
        return NONE, None, 0
    cdef int v, maxreq = 0
    for v in range(n):
        if req[v] > maxreq:
            maxreq = req[v]
    if maxreq > k - 1:
        return NONE, None, 0

    cdef int m2 = 0
    for v in range(n):
        m2 += len(neighbors[v])

    cdef int* indptr = <int*> calloc(n + 1, sizeof(int))
    cdef int* indices = <int*> calloc(m2 if m2 > 0 else 1, sizeof(int))
    cdef int* creq = <int*> calloc(n, sizeof(int))
    cdef int* deg = <int*> calloc(n, sizeof(int))
    cdef int* color = <int*> calloc(n, sizeof(int))
    cdef int* cnt = <int*> calloc(n * (k + 1), sizeof(int))
    cdef int* distinct = <int*> calloc(n, sizeof(int))
    cdef int* uncol = <int*> calloc(n, sizeof(int))
    cdef long nodes = 0
    cdef int idx = 0, u, st

    try:
        for v in range(n):
            indptr[v] = idx
            for u in neighbors[v]:
                indices[idx] = u
                idx += 1
            deg[v] = len(neighbors[v])
            uncol[v] = deg[v]
            creq[v] = req[v]
        indptr[n] = idx
        st = _dfs(0, 0, n, k, budget, indptr, indices, creq, deg,
                  color, cnt, distinct, uncol, &nodes)
        if st == 0:
            return FOUND, [color[v] for v in range(n)], nodes
        return (NONE if st == 1 else BUDGET), None, nodes
    finally:
        free(indptr)
        free(indices)
        free(creq)
        free(deg)
        free(color)
        free(cnt)
        free(distinct)
        free(uncol)
