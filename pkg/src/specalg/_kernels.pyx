# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled twin of ``specalg._kernels_py`` for automata with at most 64 states."""

from libc.stdint cimport uint64_t
from libcpp.vector cimport vector
from libcpp.unordered_set cimport unordered_set
from libcpp.unordered_map cimport unordered_map
from libcpp.utility cimport pair

ctypedef pair[int, uint64_t] item_t


cdef inline int _ctz(uint64_t m) noexcept nogil:
    return __builtin_ctzll(m)

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline uint64_t _post(const vector[uint64_t]& succ, int k, uint64_t subset, int x) noexcept nogil:
    cdef uint64_t out = 0
    cdef int s
    while subset:
        s = _ctz(subset)
        subset &= subset - 1
        out |= succ[s * k + x]
    return out


cdef vector[uint64_t] _vec(object seq):
    cdef vector[uint64_t] v
    v.reserve(len(seq))
    for m in seq:
        v.push_back(<uint64_t>m)
    return v


cdef int _included(int n_a, int k, const vector[uint64_t]& sa, uint64_t ia, uint64_t aa,
                   const vector[uint64_t]& sb_, uint64_t ib, uint64_t ab, long cap) noexcept nogil:
    cdef vector[unordered_set[uint64_t]] seen = vector[unordered_set[uint64_t]](n_a)
    cdef unordered_set[uint64_t] subsets
    cdef vector[item_t] stack
    cdef item_t cur
    cdef int a, a2, x
    cdef uint64_t sb, nxt, targets
    subsets.insert(ib)
    while ia:
        a = _ctz(ia)
        ia &= ia - 1
        seen[a].insert(ib)
        stack.push_back(item_t(a, ib))
    while not stack.empty():
        cur = stack.back()
        stack.pop_back()
        a = cur.first
        sb = cur.second
        if ((aa >> a) & 1) and not (sb & ab):
            return 0
        for x in range(k):
            targets = sa[a * k + x]
            if not targets:
                continue
            nxt = _post(sb_, k, sb, x)
            if subsets.insert(nxt).second:
                if <long>subsets.size() > cap:
                    return -1
            while targets:
                a2 = _ctz(targets)
                targets &= targets - 1
                if seen[a2].insert(nxt).second:
                    stack.push_back(item_t(a2, nxt))
    return 1


def nfa_included(int n_a, int n_b, int k, succ_a, uint64_t init_a, uint64_t acc_a, succ_b,
                 uint64_t init_b, uint64_t acc_b, long cap):
    cdef vector[uint64_t] sa = _vec(succ_a)
    cdef vector[uint64_t] sb_ = _vec(succ_b)
    cdef int r
    with nogil:
        r = _included(n_a, k, sa, init_a, acc_a, sb_, init_b, acc_b, cap)
    return r


cdef bint _subset_construction(int k, const vector[uint64_t]& s, vector[uint64_t]& subsets,
                               vector[int]& table, long cap) noexcept nogil:
    cdef unordered_map[uint64_t, int] index
    cdef size_t i = 0
    cdef int x, j
    cdef uint64_t cur, nxt
    index[subsets[0]] = 0
    while i < subsets.size():
        cur = subsets[i]
        for x in range(k):
            nxt = _post(s, k, cur, x)
            if index.count(nxt):
                j = index[nxt]
            else:
                if <long>subsets.size() >= cap:
                    return False
                j = <int>subsets.size()
                index[nxt] = j
                subsets.push_back(nxt)
            table.push_back(j)
        i += 1
    return True


def determinize(int n, int k, succ, uint64_t init, long cap):
    cdef vector[uint64_t] s = _vec(succ)
    cdef vector[uint64_t] subsets
    cdef vector[int] table
    cdef bint ok
    cdef size_t i
    subsets.push_back(init)
    with nogil:
        ok = _subset_construction(k, s, subsets, table, cap)
    if not ok:
        return None
    return [subsets[i] for i in range(subsets.size())], list(table)


cdef bint _pair_ok(int s, int t, int k, const vector[uint64_t]& fa, const vector[uint64_t]& ba,
                   const vector[uint64_t]& fb, const vector[uint64_t]& bb,
                   const vector[uint64_t]& rel) noexcept nogil:
    cdef int x, s2, t2
    cdef uint64_t m, tgt, bit, src
    cdef bint found
    for x in range(k):
        tgt = fb[t * k + x]
        m = fa[s * k + x]
        while m:
            s2 = _ctz(m)
            m &= m - 1
            if not (rel[s2] & tgt):
                return False
        src = ba[s * k + x]
        m = bb[t * k + x]
        while m:
            t2 = _ctz(m)
            m &= m - 1
            bit = (<uint64_t>1) << t2
            found = False
            tgt = src
            while tgt:
                s2 = _ctz(tgt)
                tgt &= tgt - 1
                if rel[s2] & bit:
                    found = True
                    break
            if not found:
                return False
    return True


def simulation(int n_a, int n_b, int k, fwd_a, bwd_a, fwd_b, bwd_b):
    cdef vector[uint64_t] fa = _vec(fwd_a), ba = _vec(bwd_a)
    cdef vector[uint64_t] fb = _vec(fwd_b), bb = _vec(bwd_b)
    cdef uint64_t full = (~(<uint64_t>0)) if n_b == 64 else (((<uint64_t>1) << n_b) - 1)
    cdef vector[uint64_t] rel = vector[uint64_t](n_a, full)
    cdef bint changed = True
    cdef int s, t
    cdef uint64_t row, m
    with nogil:
        while changed:
            changed = False
            for s in range(n_a):
                row = rel[s]
                m = row
                while m:
                    t = _ctz(m)
                    m &= m - 1
                    if not _pair_ok(s, t, k, fa, ba, fb, bb, rel):
                        row &= ~((<uint64_t>1) << t)
                if row != rel[s]:
                    rel[s] = row
                    changed = True
    return [rel[s] for s in range(n_a)]


def attractor(int n, int k, succ, uint64_t ctrl, uint64_t seed):
    cdef vector[uint64_t] sc = _vec(succ)
    cdef uint64_t bad = seed, c = ctrl, m
    cdef bint changed = True
    cdef int s, x
    with nogil:
        while changed:
            changed = False
            for s in range(n):
                if (bad >> s) & 1:
                    continue
                m = c
                while m:
                    x = _ctz(m)
                    m &= m - 1
                    if sc[s * k + x] & bad:
                        bad |= (<uint64_t>1) << s
                        changed = True
                        break
    return bad


def det_product(int n_b, int k, delta_a, req_a, init_a, delta_b, req_b, init_b, bint both):
    cdef vector[int] da = delta_a, db = delta_b
    cdef vector[int] ra = req_a, rb = req_b
    cdef unordered_map[long, int] index
    cdef vector[int] pa_list, qb_list, delta, req, clash
    cdef size_t i = 0
    cdef int p, q, x, pa, qb, j
    cdef long key
    cdef bint bad
    cdef int r1, r2
    for p in init_a:
        for q in init_b:
            key = <long>p * n_b + q
            if not index.count(key):
                index[key] = <int>pa_list.size()
                pa_list.push_back(p)
                qb_list.push_back(q)
    with nogil:
        while i < pa_list.size():
            p = pa_list[i]
            q = qb_list[i]
            bad = False
            for x in range(k):
                pa = da[p * k + x]
                qb = db[q * k + x]
                r1 = 1 if ra[p * k + x] != 0 else 0
                r2 = 1 if rb[q * k + x] != 0 else 0
                if pa < 0 or qb < 0:
                    if r1 or r2:
                        bad = True
                    delta.push_back(-1)
                    req.push_back(0)
                    continue
                key = <long>pa * n_b + qb
                if index.count(key):
                    j = index[key]
                else:
                    j = <int>pa_list.size()
                    index[key] = j
                    pa_list.push_back(pa)
                    qb_list.push_back(qb)
                delta.push_back(j)
                if both:
                    req.push_back(<int>(r1 & r2))
                else:
                    req.push_back(<int>(r1 | r2))
            if bad:
                clash.push_back(<int>i)
            i += 1
    return ([(pa_list[i], qb_list[i]) for i in range(pa_list.size())],
            list(delta), list(req), list(clash))
