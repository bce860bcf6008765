"""Bitset enumeration kernels.

Graphs enter as ``int64`` neighbor masks (bit ``w`` of ``masks[v]`` set when
``vw`` is an edge), so every kernel handles at most 62 vertices.  All kernels
run compiled under numba, or as plain Python when ``ADMISSIBLE_NO_JIT=1``.

Budget handling: a kernel counts extended partial paths and returns a negative
status once the budget is spent, instead of silently truncating.
"""

import numpy as np

from ._jit import njit

BUDGET_EXCEEDED = -1

# theorem scan modes
MODE_THM21 = 0
MODE_THM12 = 1


@njit
def lowest_bit(m):
    b = 0
    while not (m >> b) & 1:
        b += 1
    return b


@njit
def popcount(m):
    c = 0
    while m:
        m &= m - 1
        c += 1
    return c


@njit
def reach_mask(masks, start, allowed):
    """Vertices reachable from ``start`` using only ``allowed`` vertices."""
    seen = np.int64(1) << start
    frontier = seen
    while frontier:
        nxt = np.int64(0)
        f = frontier
        while f:
            v = lowest_bit(f)
            f &= f - 1
            nxt |= masks[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


@njit
def paths_from(masks, n, src, stop, budget, lenmask, witness):
    """All simple paths leaving ``src``.

    ``lenmask[v]`` gets bit ``L`` when some path of length ``L`` ends at
    ``v``; the first such path is copied to ``witness[v, L, :L+1]``.  Paths
    are not extended through ``stop`` (pass ``-1`` for no stop vertex).
    Returns the number of partial paths explored, or ``BUDGET_EXCEEDED``.
    """
    path = np.empty(n, dtype=np.int64)
    cand = np.empty(n, dtype=np.int64)
    path[0] = src
    visited = np.int64(1) << src
    cand[0] = masks[src] & ~visited
    lenmask[src] |= 1
    witness[src, 0, 0] = src
    depth = 0
    steps = 0
    while depth >= 0:
        c = cand[depth]
        if c == 0:
            visited &= ~(np.int64(1) << path[depth])
            depth -= 1
            continue
        w = lowest_bit(c)
        cand[depth] = c & (c - 1)
        depth += 1
        path[depth] = w
        visited |= np.int64(1) << w
        steps += 1
        if steps > budget:
            return BUDGET_EXCEEDED
        if not (lenmask[w] >> depth) & 1:
            lenmask[w] |= np.int64(1) << depth
            for i in range(depth + 1):
                witness[w, depth, i] = path[i]
        if w == stop:
            cand[depth] = 0
        else:
            cand[depth] = masks[w] & ~visited
    return steps


@njit
def cycles_all(masks, n, budget, lenmask_out, witness, want_witness):
    """Simple cycles, each rooted at its smallest vertex.

    Sets bit ``L`` of ``lenmask_out[0]`` for every cycle length ``L`` and,
    when ``want_witness``, stores one cycle per length in ``witness[L, :L]``.
    """
    path = np.empty(n, dtype=np.int64)
    cand = np.empty(n, dtype=np.int64)
    steps = 0
    for s in range(n):
        higher = ~((np.int64(1) << (s + 1)) - 1)
        path[0] = s
        visited = np.int64(1) << s
        cand[0] = masks[s] & higher
        depth = 0
        while depth >= 0:
            c = cand[depth]
            if c == 0:
                visited &= ~(np.int64(1) << path[depth])
                depth -= 1
                continue
            w = lowest_bit(c)
            cand[depth] = c & (c - 1)
            depth += 1
            path[depth] = w
            visited |= np.int64(1) << w
            steps += 1
            if steps > budget:
                return BUDGET_EXCEEDED
            if depth >= 2 and (masks[w] >> s) & 1:
                L = depth + 1
                if not (lenmask_out[0] >> L) & 1:
                    lenmask_out[0] |= np.int64(1) << L
                    if want_witness:
                        for i in range(L):
                            witness[L, i] = path[i]
            cand[depth] = masks[w] & higher & ~visited
    return steps


@njit
def select_run(lenmask, k, first_min):
    """Greedy admissible run: smallest start, gap 1 before gap 2.

    Returns ``(start, gap)`` or ``(-1, 0)`` when no k-term run exists.
    """
    for start in range(first_min, 63):
        if not (lenmask >> start) & 1:
            continue
        for gap in (1, 2):
            last = start + gap * (k - 1)
            if last > 62:
                continue
            ok = True
            for i in range(k):
                if not (lenmask >> (start + gap * i)) & 1:
                    ok = False
                    break
            if ok:
                return start, gap
    return -1, 0


@njit
def max_run(lenmask, first_min):
    best = 0
    for gap in (1, 2):
        for start in range(first_min, 63):
            L = start
            cnt = 0
            while L <= 62 and (lenmask >> L) & 1:
                cnt += 1
                L += gap
            if cnt > best:
                best = cnt
    return best


@njit
def valid_path(masks, seq, length, x, y):
    """Independent re-check of one witness path."""
    if seq[0] != x or seq[length] != y:
        return False
    seen = np.int64(0)
    for i in range(length + 1):
        b = np.int64(1) << seq[i]
        if seen & b:
            return False
        seen |= b
        if i > 0 and not (masks[seq[i - 1]] >> seq[i]) & 1:
            return False
    return True


@njit
def valid_cycle(masks, seq, length):
    if length < 3:
        return False
    seen = np.int64(0)
    for i in range(length):
        b = np.int64(1) << seq[i]
        if seen & b:
            return False
        seen |= b
        nxt = seq[(i + 1) % length]
        if not (masks[seq[i]] >> nxt) & 1:
            return False
    return True


@njit
def decode_mask(code, n, pi, pj, masks):
    for v in range(n):
        masks[v] = 0
    e = 0
    c = code
    while c:
        if c & 1:
            masks[pi[e]] |= np.int64(1) << pj[e]
            masks[pj[e]] |= np.int64(1) << pi[e]
        c >>= 1
        e += 1


@njit
def removal_components(masks, n, ncomp, first_comp):
    """For every ``v``: component count of ``G - v`` and the component of its lowest vertex."""
    full = (np.int64(1) << n) - 1
    for v in range(n):
        allowed = full & ~(np.int64(1) << v)
        rest = allowed
        cnt = 0
        first = np.int64(0)
        while rest:
            s = lowest_bit(rest)
            comp = reach_mask(masks, s, allowed)
            if cnt == 0:
                first = comp
            cnt += 1
            rest &= ~comp
        ncomp[v] = cnt
        first_comp[v] = first


@njit
def rooted_two_connected(n, connected, ncomp, first_comp, x, y):
    """``G + xy`` is 2-connected, from the precomputed removal data."""
    if n < 3 or not connected:
        return False
    for v in range(n):
        c = ncomp[v]
        if c <= 1:
            continue
        if v == x or v == y or c > 2:
            return False
        inx = (first_comp[v] >> x) & 1
        iny = (first_comp[v] >> y) & 1
        if inx == iny:
            return False
    return True


@njit
def is_bipartite(masks, n):
    color = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        if color[s] >= 0:
            continue
        color[s] = 0
        head = 0
        tail = 1
        queue[0] = s
        while head < tail:
            v = queue[head]
            head += 1
            m = masks[v]
            while m:
                w = lowest_bit(m)
                m &= m - 1
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue[tail] = w
                    tail += 1
                elif color[w] == color[v]:
                    return False
    return True


@njit
def covers_residues(lenmask, k, even_only):
    """Cycle lengths hit every residue mod k (of even integers when ``even_only``)."""
    hit = np.zeros(k, dtype=np.bool_)
    for L in range(63):
        if (lenmask >> L) & 1:
            hit[L % k] = True
    for r in range(k):
        if even_only and k % 2 == 0 and r % 2 == 1:
            continue
        if not hit[r]:
            return False
    return True


@njit
def scan_theorem_paths(n, lo, hi, ks, mode, budget, max_fail, tallies, failures):
    """Exhaustive rooted-path campaign over graph codes ``lo..hi-1``.

    ``tallies[j]`` holds ``(total, satisfied, verified, failed)`` for
    ``k = ks[j]``.  Mode ``MODE_THM21`` ranges over ``(x, y, z)`` with z
    absent or any vertex; ``MODE_THM12`` over ``(x, y)`` with z absent and
    ``G`` itself 2-connected.  A failure row is ``(code, x, y, z, k)`` with
    ``z = -1`` for absent.  Returns the number of failure rows written, or
    ``BUDGET_EXCEEDED``.
    """
    npairs = n * (n - 1) // 2
    pi = np.empty(max(npairs, 1), dtype=np.int64)
    pj = np.empty(max(npairs, 1), dtype=np.int64)
    e = 0
    for j in range(1, n):
        for i in range(j):
            pi[e] = i
            pj[e] = j
            e += 1
    nk = ks.shape[0]
    masks = np.zeros(n, dtype=np.int64)
    ncomp = np.zeros(n, dtype=np.int64)
    first_comp = np.zeros(n, dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    lenmask = np.zeros((n, n), dtype=np.int64)
    witness = np.zeros((n, n, n, n), dtype=np.int64)
    done = np.zeros(n, dtype=np.bool_)
    sat_count = np.zeros(nk, dtype=np.int64)
    zplaces = n + 1 if mode == MODE_THM21 else 1
    nfail = 0
    full = (np.int64(1) << n) - 1
    for code in range(lo, hi):
        decode_mask(code, n, pi, pj, masks)
        for j in range(nk):
            tallies[j, 0] += n * (n - 1) * zplaces
        if n < 3:
            continue
        connected = reach_mask(masks, 0, full) == full
        if not connected:
            continue
        for v in range(n):
            deg[v] = popcount(masks[v])
        removal_components(masks, n, ncomp, first_comp)
        if mode == MODE_THM12:
            biconn = True
            for v in range(n):
                if ncomp[v] != 1:
                    biconn = False
            if not biconn:
                continue
        for v in range(n):
            done[v] = False
        for x in range(n):
            for y in range(n):
                if x == y or not rooted_two_connected(n, connected, ncomp, first_comp, x, y):
                    continue
                for j in range(nk):
                    sat_count[j] = 0
                # z index -1 means absent
                for zi in range(zplaces):
                    z = zi - 1
                    dmin = 1 << 30
                    for v in range(n):
                        if v != x and v != y and v != z and deg[v] < dmin:
                            dmin = deg[v]
                    if dmin == 1 << 30:
                        continue
                    for j in range(nk):
                        if dmin >= ks[j] + 1:
                            sat_count[j] += 1
                for j in range(nk):
                    if sat_count[j] == 0:
                        continue
                    k = ks[j]
                    tallies[j, 1] += sat_count[j]
                    if not done[x]:
                        for v in range(n):
                            lenmask[x, v] = 0
                        st = paths_from(masks, n, x, -1, budget, lenmask[x], witness[x])
                        if st < 0:
                            return BUDGET_EXCEEDED
                        done[x] = True
                    start, gap = select_run(lenmask[x, y], k, 2)
                    ok = start > 0
                    if ok:
                        for i in range(k):
                            L = start + gap * i
                            if not valid_path(masks, witness[x, y, L], L, x, y):
                                ok = False
                                break
                    if ok:
                        tallies[j, 2] += sat_count[j]
                    else:
                        tallies[j, 3] += sat_count[j]
                        if nfail < max_fail:
                            failures[nfail, 0] = code
                            failures[nfail, 1] = x
                            failures[nfail, 2] = y
                            failures[nfail, 3] = -1
                            failures[nfail, 4] = k
                            nfail += 1
    return nfail


@njit
def scan_theorem_cycles(n, lo, hi, ks, budget, max_fail, tallies, failures):
    """Exhaustive k-admissible-cycle campaign (at most two low-degree vertices)."""
    npairs = n * (n - 1) // 2
    pi = np.empty(max(npairs, 1), dtype=np.int64)
    pj = np.empty(max(npairs, 1), dtype=np.int64)
    e = 0
    for j in range(1, n):
        for i in range(j):
            pi[e] = i
            pj[e] = j
            e += 1
    nk = ks.shape[0]
    masks = np.zeros(n, dtype=np.int64)
    lm = np.zeros(1, dtype=np.int64)
    witness = np.zeros((n + 1, n), dtype=np.int64)
    full = (np.int64(1) << n) - 1
    nfail = 0
    for code in range(lo, hi):
        decode_mask(code, n, pi, pj, masks)
        for j in range(nk):
            tallies[j, 0] += 1
        if n < 3 or reach_mask(masks, 0, full) != full:
            continue
        computed = False
        for j in range(nk):
            k = ks[j]
            low = 0
            for v in range(n):
                if popcount(masks[v]) < k + 1:
                    low += 1
            if low > 2:
                continue
            tallies[j, 1] += 1
            if not computed:
                lm[0] = 0
                if cycles_all(masks, n, budget, lm, witness, True) < 0:
                    return BUDGET_EXCEEDED
                computed = True
            start, gap = select_run(lm[0], k, 3)
            ok = start > 0
            if ok:
                for i in range(k):
                    L = start + gap * i
                    if not valid_cycle(masks, witness[L], L):
                        ok = False
                        break
            if ok:
                tallies[j, 2] += 1
            else:
                tallies[j, 3] += 1
                if nfail < max_fail:
                    failures[nfail, 0] = code
                    failures[nfail, 1] = -1
                    failures[nfail, 2] = -1
                    failures[nfail, 3] = -1
                    failures[nfail, 4] = k
                    nfail += 1
    return nfail


@njit
def scan_conjectures(n, lo, hi, ks, parity_all, budget, max_fail, tallies, failures):
    """Residue coverage of cycle lengths for graphs of minimum degree >= k+1.

    ``parity_all = False``: every graph qualifies, even residues are required.
    ``parity_all = True``: only 2-connected non-bipartite graphs, all residues.
    """
    npairs = n * (n - 1) // 2
    pi = np.empty(max(npairs, 1), dtype=np.int64)
    pj = np.empty(max(npairs, 1), dtype=np.int64)
    e = 0
    for j in range(1, n):
        for i in range(j):
            pi[e] = i
            pj[e] = j
            e += 1
    nk = ks.shape[0]
    masks = np.zeros(n, dtype=np.int64)
    ncomp = np.zeros(n, dtype=np.int64)
    first_comp = np.zeros(n, dtype=np.int64)
    lm = np.zeros(1, dtype=np.int64)
    witness = np.zeros((1, 1), dtype=np.int64)
    full = (np.int64(1) << n) - 1
    nfail = 0
    for code in range(lo, hi):
        decode_mask(code, n, pi, pj, masks)
        for j in range(nk):
            tallies[j, 0] += 1
        if n == 0:
            continue
        mindeg = n
        for v in range(n):
            d = popcount(masks[v])
            if d < mindeg:
                mindeg = d
        qualifies = False
        for j in range(nk):
            if mindeg >= ks[j] + 1:
                qualifies = True
        if not qualifies:
            continue
        if parity_all:
            if n < 3 or reach_mask(masks, 0, full) != full:
                continue
            removal_components(masks, n, ncomp, first_comp)
            biconn = True
            for v in range(n):
                if ncomp[v] != 1:
                    biconn = False
            if not biconn or is_bipartite(masks, n):
                continue
        lm[0] = 0
        if cycles_all(masks, n, budget, lm, witness, False) < 0:
            return BUDGET_EXCEEDED
        for j in range(nk):
            k = ks[j]
            if mindeg < k + 1:
                continue
            tallies[j, 1] += 1
            if covers_residues(lm[0], k, not parity_all):
                tallies[j, 2] += 1
            else:
                tallies[j, 3] += 1
                if nfail < max_fail:
                    failures[nfail, 0] = code
                    failures[nfail, 1] = -1
                    failures[nfail, 2] = -1
                    failures[nfail, 3] = -1
                    failures[nfail, 4] = k
                    nfail += 1
    return nfail
