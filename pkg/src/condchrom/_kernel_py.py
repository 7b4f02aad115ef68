"""Pure-Python backtracking kernel for the conditional coloring decision
problem. Reference semantics: the compiled kernel (_kernel_cy) must produce
byte-identical results, including node counts.

Search: DSATUR-style dynamic vertex order (max saturation, then max degree,
then min id), colors tried ascending, and symmetry breaking by allowing at
most one brand-new color per step. C2 is pruned incrementally: a partial
assignment dies as soon as some vertex can no longer reach
min{d(v), r} distinct neighbor colors even if all its uncolored neighbors
receive fresh distinct colors.
"""

from __future__ import annotations

FOUND = 0
NONE = 1
BUDGET = 2


def search_coloring(neighbors, req, k, budget):
    """Find colors[0..n-1] in 1..k satisfying C1 and |c(N(v))| >= req[v].

    neighbors: sorted adjacency lists; req[v] <= d(v) is the per-vertex
    distinct-neighbor-color demand; budget: max search nodes (0 = unlimited).
    Returns (status, colors or None, nodes).
    """
    n = len(neighbors)
    if n == 0:
        return FOUND, [], 0
    deg = [len(neighbors[v]) for v in range(n)]
    if k < 1:
        return NONE, None, 0
    # A vertex's neighbors avoid its own color, so at most k-1 distinct
    # colors can ever appear around it.
    if req and max(req) > k - 1:
        return NONE, None, 0

    color = [0] * n
    cnt = [[0] * (k + 1) for _ in range(n)]
    distinct = [0] * n
    uncol = deg[:]
    nodes = 0

    def select() -> int:
        best_v = -1
        best_key = (-1, -1)
        for v in range(n):
            if color[v] == 0:
                key = (distinct[v], deg[v])
                if key > best_key:
                    best_key = key
                    best_v = v
        return best_v

    def dfs(colored: int, max_used: int) -> int:
        nonlocal nodes
        nodes += 1
        if budget and nodes > budget:
            return BUDGET
        if colored == n:
            return FOUND
        v = select()
        limit = max_used + 1 if max_used < k else k
        nb = neighbors[v]
        for c in range(1, limit + 1):
            if cnt[v][c] > 0:
                continue
            ok = True
            for u in nb:
                gain = 1 if cnt[u][c] == 0 else 0
                if distinct[u] + gain + uncol[u] - 1 < req[u]:
                    ok = False
                    break
            if not ok:
                continue
            color[v] = c
            for u in nb:
                uncol[u] -= 1
                if cnt[u][c] == 0:
                    distinct[u] += 1
                cnt[u][c] += 1
            st = dfs(colored + 1, max_used if c <= max_used else c)
            if st == FOUND:
                return FOUND
            color[v] = 0
            for u in nb:
                uncol[u] += 1
                cnt[u][c] -= 1
                if cnt[u][c] == 0:
                    distinct[u] -= 1
            if st == BUDGET:
                return BUDGET
        return NONE

    st = dfs(0, 0)
    if st == FOUND:
        return FOUND, color, nodes
    return st, None, nodes
