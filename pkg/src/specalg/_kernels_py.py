"""Pure-Python automata kernels.

Every automaton reaches these functions already encoded: states and actions
are small integers, and successor sets are bitmasks stored in flat lists
indexed ``state * k + action``.  ``specalg._kernels`` is a compiled twin with
identical signatures; ``specalg.kernels`` picks one at import time.
"""


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def post(succ, k, subset, x):
    out = 0
    for s in _bits(subset):
        out |= succ[s * k + x]
    return out


def nfa_included(n_a, n_b, k, succ_a, init_a, acc_a, succ_b, init_b, acc_b, cap):
    """Return 1 if L(A) is a subset of L(B), 0 if not, -1 on blow-up.

    Explores pairs (state of A, subset of B) on the fly; B is determinized
    lazily and the count of distinct B-subsets is bounded by ``cap``.
    """
    seen = set()
    subsets = {init_b}
    stack = []
    for a in _bits(init_a):
        seen.add((a, init_b))
        stack.append((a, init_b))
    while stack:
        a, sb = stack.pop()
        if (acc_a >> a) & 1 and not sb & acc_b:
            return 0
        base = a * k
        for x in range(k):
            targets = succ_a[base + x]
            if not targets:
                continue
            nxt = post(succ_b, k, sb, x)
            if nxt not in subsets:
                subsets.add(nxt)
                if len(subsets) > cap:
                    return -1
            for a2 in _bits(targets):
                key = (a2, nxt)
                if key not in seen:
                    seen.add(key)
                    stack.append(key)
    return 1


def determinize(n, k, succ, init, cap):
    """Complete subset construction.

    Returns ``(subsets, table)`` with ``table[i * k + x]`` the index of the
    successor of subset ``i`` on action ``x``; ``None`` if more than ``cap``
    subsets are reachable.
    """
    index = {init: 0}
    subsets = [init]
    table = []
    i = 0
    while i < len(subsets):
        cur = subsets[i]
        for x in range(k):
            nxt = post(succ, k, cur, x)
            j = index.get(nxt)
            if j is None:
                if len(subsets) >= cap:
                    return None
                j = len(subsets)
                index[nxt] = j
                subsets.append(nxt)
            table.append(j)
        i += 1
    return subsets, table


def simulation(n_a, n_b, k, fwd_a, bwd_a, fwd_b, bwd_b):
    """Greatest relation R between A-states and B-states such that for (s, t) in R
    and every action x:

    * each forward successor of s on x is related to some forward successor of t;
    * each backward successor of t on x is related to some backward successor of s.

    Returns a list of bitmasks: bit t of ``rel[s]`` is set iff (s, t) is in R.
    """
    full = (1 << n_b) - 1
    rel = [full] * n_a
    changed = True
    while changed:
        changed = False
        for s in range(n_a):
            row = rel[s]
            for t in _bits(row):
                if not _pair_ok(s, t, k, fwd_a, bwd_a, fwd_b, bwd_b, rel):
                    row &= ~(1 << t)
            if row != rel[s]:
                rel[s] = row
                changed = True
    return rel


def _pair_ok(s, t, k, fwd_a, bwd_a, fwd_b, bwd_b, rel):
    sb = s * k
    tb = t * k
    for x in range(k):
        fb = fwd_b[tb + x]
        for s2 in _bits(fwd_a[sb + x]):
            if not rel[s2] & fb:
                return False
        ba = bwd_a[sb + x]
        for t2 in _bits(bwd_b[tb + x]):
            bit = 1 << t2
            if not any(rel[s2] & bit for s2 in _bits(ba)):
                return False
    return True


def attractor(n, k, succ, ctrl, seed):
    """Least superset of ``seed`` closed under: a state joins if it has an edge
    labelled by an action in ``ctrl`` (a bitmask over actions) into the set."""
    bad = seed
    changed = True
    while changed:
        changed = False
        for s in range(n):
            if (bad >> s) & 1:
                continue
            base = s * k
            for x in _bits(ctrl):
                if succ[base + x] & bad:
                    bad |= 1 << s
                    changed = True
                    break
    return bad


def det_product(n_b, k, delta_a, req_a, init_a, delta_b, req_b, init_b, both):
    """Reachable synchronous product of two deterministic modal systems.

    ``delta_x[s * k + a]`` is the successor index or -1; ``req_x`` flags a
    must-transition on that slot.  A synchronized edge is required when
    both sides require it (``both`` true) or when either does.  Returns
    ``(pairs, delta, req, clash)``: product states as (a, b) index pairs in
    discovery order (initial pairs first), product tables in the same
    layout, and the indices of pairs where one side requires an action the
    other does not allow.
    """
    index = {}
    pairs = []
    for p in init_a:
        for q in init_b:
            key = p * n_b + q
            if key not in index:
                index[key] = len(pairs)
                pairs.append((p, q))
    delta, req, clash = [], [], []
    i = 0
    while i < len(pairs):
        p, q = pairs[i]
        bad = False
        for x in range(k):
            pa = delta_a[p * k + x]
            qb = delta_b[q * k + x]
            ra = req_a[p * k + x]
            rb = req_b[q * k + x]
            if pa < 0 or qb < 0:
                if ra or rb:
                    bad = True
                delta.append(-1)
                req.append(0)
                continue
            key = pa * n_b + qb
            j = index.get(key)
            if j is None:
                j = index[key] = len(pairs)
                pairs.append((pa, qb))
            delta.append(j)
            req.append(1 if ((ra and rb) if both else (ra or rb)) else 0)
        if bad:
            clash.append(i)
        i += 1
    return pairs, delta, req, clash
