# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled branch-and-bound kernel for minimum induced path factors.

Mirrors ``_kernel_py.solve_min_ipf`` exactly: same branching order, same
bound, same budget handling.  Results (count, witness edges, node count)
must be bit-identical to the pure-Python kernel on every input.
"""

import time

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define IPF_POPCNT(x) __builtin_popcountll(x)
    #define IPF_CTZ(x) __builtin_ctzll(x)
    #else
    static int IPF_POPCNT(unsigned long long x)
    { int c = 0; while (x) { x &= x - 1; c++; } return c; }
    static int IPF_CTZ(unsigned long long x)
    { int c = 0; while (!(x & 1ULL)) { x >>= 1; c++; } return c; }
    #endif
    """
    int IPF_POPCNT(unsigned long long x) nogil
    int IPF_CTZ(unsigned long long x) nogil

ctypedef unsigned long long u64


cdef class _Solver:
    cdef u64 adj[64]
    cdef u64 full
    cdef int n, L, best_count, best_len
    cdef long long node_limit, nodes
    cdef bint truncated, has_deadline
    cdef double deadline
    cdef int eu[64]
    cdef int ev[64]
    cdef int beu[64]
    cdef int bev[64]

    cdef void solve(self, u64 covered, int count, int depth):
        cdef int u, v, w, i
        cdef u64 avail, base, lbits, wbit
        if covered == self.full:
            if count < self.best_count:
                self.best_count = count
                self.best_len = depth
                for i in range(depth):
                    self.beu[i] = self.eu[i]
                    self.bev[i] = self.ev[i]
            return
        if self.truncated:
            return
        u = IPF_POPCNT(self.full ^ covered)
        if count + (u + self.L - 1) // self.L >= self.best_count:
            return
        self.nodes += 1
        if self.node_limit and self.nodes > self.node_limit:
            self.truncated = True
            return
        if self.has_deadline and self.nodes % 4096 == 0 \
                and time.monotonic() > self.deadline:
            self.truncated = True
            return
        avail = self.full ^ covered
        v = IPF_CTZ(avail)
        base = 1ULL << v
        # left arm rooted at v; its first vertex caps the right arm's first
        # vertex so each path is enumerated once
        lbits = self.adj[v] & avail
        while lbits:
            wbit = lbits & (0 - lbits)
            lbits ^= wbit
            w = IPF_CTZ(wbit)
            if v < w:
                self.eu[depth] = v
                self.ev[depth] = w
            else:
                self.eu[depth] = w
                self.ev[depth] = v
            self.grow(covered, count, avail, v, base | wbit, w, w, False,
                      depth + 1)
        # no left arm: v is an endpoint (or trivial)
        self.grow_right(covered, count, avail, v, base, -1, depth)

    cdef void grow(self, u64 covered, int count, u64 avail, int v,
                   u64 pathmask, int tip, int lfirst, bint left_done,
                   int depth):
        cdef u64 cands = self.adj[tip] & avail & ~pathmask
        cdef u64 blocked = pathmask & ~(1ULL << tip)
        cdef u64 wbit
        cdef int w
        while cands:
            wbit = cands & (0 - cands)
            cands ^= wbit
            w = IPF_CTZ(wbit)
            if self.adj[w] & blocked:
                continue  # chord against the rest of the path
            if tip < w:
                self.eu[depth] = tip
                self.ev[depth] = w
            else:
                self.eu[depth] = w
                self.ev[depth] = tip
            self.grow(covered, count, avail, v, pathmask | wbit, w, lfirst,
                      left_done, depth + 1)
        if not left_done:
            self.grow_right(covered, count, avail, v, pathmask, lfirst, depth)
        else:
            self.solve(covered | pathmask, count + 1, depth)

    cdef void grow_right(self, u64 covered, int count, u64 avail, int v,
                         u64 pathmask, int lfirst, int depth):
        cdef u64 cands = self.adj[v] & avail & ~pathmask
        cdef u64 blocked = pathmask & ~(1ULL << v)
        cdef u64 wbit
        cdef int w
        while cands:
            wbit = cands & (0 - cands)
            cands ^= wbit
            w = IPF_CTZ(wbit)
            if lfirst >= 0 and w <= lfirst:
                continue  # reflection dedup: right arm starts above left
            if self.adj[w] & blocked:
                continue
            if v < w:
                self.eu[depth] = v
                self.ev[depth] = w
            else:
                self.eu[depth] = w
                self.ev[depth] = v
            self.grow(covered, count, avail, v, pathmask | wbit, w, lfirst,
                      True, depth + 1)
        if lfirst < 0:
            # empty right arm: close here only when the left arm is also
            # empty, otherwise the reversed orientation covers this path
            self.solve(covered | pathmask, count + 1, depth)


def solve_min_ipf(int n, adj, int L, long long node_limit=0,
                  double time_limit=0.0):
    """Return (best_count, best_edges, nodes, truncated)."""
    if n > 62:
        raise ValueError("kernel supports at most 62 vertices")
    cdef _Solver s = _Solver()
    cdef int i
    s.n = n
    s.full = ((1ULL << n) - 1) if n else 0
    for i in range(n):
        s.adj[i] = adj[i]
    s.L = L
    s.node_limit = node_limit
    s.nodes = 0
    s.truncated = False
    s.best_count = n
    s.best_len = 0
    s.has_deadline = time_limit > 0.0
    s.deadline = (time.monotonic() + time_limit) if time_limit else 0.0
    s.solve(0, 0, 0)
    edges = [(s.beu[i], s.bev[i]) for i in range(s.best_len)]
    return s.best_count, edges, s.nodes, s.truncated
