# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled coloring-search kernel: the Cython twin of ksgeom._solver_py.

The search logic mirrors the pure module statement for statement (same
propagation order, same branch order), so counts, node counts, witnesses
and exhaustion flags are bit-identical between backends. Change both files
together.
"""

from libc.stdlib cimport calloc, free, malloc

MODE_COUNT = 0
MODE_FIRST_WITNESS = 1
MODE_PROVE_NONE = 2


cdef class _Search:
    cdef int n
    cdef int n_tri
    cdef int* tri            # flattened triads, 3 * n_tri
    cdef int* tri_off        # CSR offsets into tri_adj, len n+1
    cdef int* tri_adj        # triad ids adjacent to each ray
    cdef int* pr_off         # CSR offsets into pr_adj, len n+1
    cdef int* pr_adj         # pair partners of each ray
    cdef signed char* vals
    cdef int* trail
    cdef int trail_len
    cdef int* queue
    cdef int q_len

    def __cinit__(self, int n, list triads, list pairs):
        cdef int n_tri = len(triads)
        cdef int n_pair = len(pairs)
        cdef int i, a, b, c, r
        self.n = n
        self.n_tri = n_tri
        self.tri = <int*> malloc(3 * n_tri * sizeof(int) if n_tri else sizeof(int))
        self.tri_off = <int*> calloc(n + 2, sizeof(int))
        self.pr_off = <int*> calloc(n + 2, sizeof(int))
        self.vals = <signed char*> malloc(n * sizeof(signed char) if n else 1)
        self.trail = <int*> malloc(n * sizeof(int) if n else sizeof(int))
        self.queue = <int*> malloc(n * sizeof(int) if n else sizeof(int))
        self.trail_len = 0
        self.q_len = 0
        if (self.tri == NULL or self.tri_off == NULL or self.pr_off == NULL
                or self.vals == NULL or self.trail == NULL or self.queue == NULL):
            raise MemoryError()

        for i in range(n):
            self.vals[i] = -1

        # Count memberships, then fill CSR in input order (matches the pure
        # backend's per-ray list append order).
        for i in range(n_tri):
            a, b, c = triads[i]
            self.tri[3 * i] = a
            self.tri[3 * i + 1] = b
            self.tri[3 * i + 2] = c
            self.tri_off[a + 1] += 1
            self.tri_off[b + 1] += 1
            self.tri_off[c + 1] += 1
        for i in range(n):
            self.tri_off[i + 1] += self.tri_off[i]
        self.tri_adj = <int*> malloc(3 * n_tri * sizeof(int) if n_tri else sizeof(int))
        if self.tri_adj == NULL:
            raise MemoryError()
        cdef int* cursor = <int*> calloc(n + 1, sizeof(int))
        if cursor == NULL:
            raise MemoryError()
        for i in range(n_tri):
            for r in (self.tri[3 * i], self.tri[3 * i + 1], self.tri[3 * i + 2]):
                self.tri_adj[self.tri_off[r] + cursor[r]] = i
                cursor[r] += 1

        for i in range(n_pair):
            a, b = pairs[i]
            self.pr_off[a + 1] += 1
            self.pr_off[b + 1] += 1
        for i in range(n):
            self.pr_off[i + 1] += self.pr_off[i]
        self.pr_adj = <int*> malloc(2 * n_pair * sizeof(int) if n_pair else sizeof(int))
        if self.pr_adj == NULL:
            free(cursor)
            raise MemoryError()
        for i in range(n):
            cursor[i] = 0
        for i in range(n_pair):
            a, b = pairs[i]
            self.pr_adj[self.pr_off[a] + cursor[a]] = b
            cursor[a] += 1
            self.pr_adj[self.pr_off[b] + cursor[b]] = a
            cursor[b] += 1
        free(cursor)

    def __dealloc__(self):
        free(self.tri)
        free(self.tri_off)
        free(self.tri_adj)
        free(self.pr_off)
        free(self.pr_adj)
        free(self.vals)
        free(self.trail)
        free(self.queue)

    cdef bint assign(self, int ray, int value):
        cdef signed char v = self.vals[ray]
        if v != -1:
            return v == value
        self.vals[ray] = <signed char> value
        self.trail[self.trail_len] = ray
        self.trail_len += 1
        self.queue[self.q_len] = ray
        self.q_len += 1
        return True

    cdef bint propagate(self):
        cdef int ray, value, t_idx, other, j, k
        cdef int a, b, c
        cdef signed char za, zb, zc
        cdef int zeros
        while self.q_len:
            self.q_len -= 1
            ray = self.queue[self.q_len]
            value = self.vals[ray]
            if value == 1:
                for j in range(self.pr_off[ray], self.pr_off[ray + 1]):
                    if not self.assign(self.pr_adj[j], 0):
                        return False
                for j in range(self.tri_off[ray], self.tri_off[ray + 1]):
                    t_idx = self.tri_adj[j]
                    for k in range(3):
                        other = self.tri[3 * t_idx + k]
                        if other != ray and not self.assign(other, 0):
                            return False
            else:
                for j in range(self.tri_off[ray], self.tri_off[ray + 1]):
                    t_idx = self.tri_adj[j]
                    a = self.tri[3 * t_idx]
                    b = self.tri[3 * t_idx + 1]
                    c = self.tri[3 * t_idx + 2]
                    za = self.vals[a]
                    zb = self.vals[b]
                    zc = self.vals[c]
                    zeros = (za == 0) + (zb == 0) + (zc == 0)
                    if zeros == 3:
                        return False
                    if zeros == 2:
                        if za == -1:
                            if not self.assign(a, 1):
                                return False
                        elif zb == -1:
                            if not self.assign(b, 1):
                                return False
                        elif zc == -1:
                            if not self.assign(c, 1):
                                return False
        return True

    cdef int find_unassigned(self, int start):
        cdef int i
        for i in range(start, self.n):
            if self.vals[i] == -1:
                return i
        return -1

    cdef void unwind(self, int mark):
        while self.trail_len > mark:
            self.trail_len -= 1
            self.vals[self.trail[self.trail_len]] = -1


def solve_kernel(int n, list triads, list pairs, int mode):
    """Identical contract to ksgeom._solver_py.solve_kernel."""
    cdef _Search s = _Search(n, triads, pairs)
    cdef long long count = 0
    cdef long long nodes = 0
    cdef list witness = None
    cdef int depth, ray, pending, mark, value, nxt, ray0, i

    cdef int* st_ray = <int*> malloc((n + 1) * sizeof(int))
    cdef int* st_pending = <int*> malloc((n + 1) * sizeof(int))
    cdef int* st_mark = <int*> malloc((n + 1) * sizeof(int))
    if st_ray == NULL or st_pending == NULL or st_mark == NULL:
        free(st_ray)
        free(st_pending)
        free(st_mark)
        raise MemoryError()

    try:
        ray0 = s.find_unassigned(0)
        if ray0 == -1:
            count += 1
            witness = [s.vals[i] for i in range(n)]
            return count, nodes, witness, True

        depth = 0
        st_ray[0] = ray0
        st_pending[0] = 2
        st_mark[0] = s.trail_len
        while depth >= 0:
            ray = st_ray[depth]
            pending = st_pending[depth]
            mark = st_mark[depth]
            if pending == 0:
                s.unwind(mark)
                depth -= 1
                continue
            value = 1 if pending == 2 else 0
            st_pending[depth] = pending - 1
            s.unwind(mark)
            nodes += 1
            s.q_len = 0
            if not s.assign(ray, value) or not s.propagate():
                continue
            nxt = s.find_unassigned(ray + 1)
            if nxt == -1:
                count += 1
                if witness is None:
                    witness = [s.vals[i] for i in range(n)]
                if mode != MODE_COUNT:
                    break
                continue
            depth += 1
            st_ray[depth] = nxt
            st_pending[depth] = 2
            st_mark[depth] = s.trail_len
    finally:
        free(st_ray)
        free(st_pending)
        free(st_mark)

    cdef bint exhausted
    if mode != MODE_COUNT and witness is not None:
        exhausted = False
    else:
        exhausted = True
    return count, nodes, witness, exhausted
