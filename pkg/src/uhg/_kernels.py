"""Bitmask DFS kernels for hamiltonian cycle/path counting, n <= 62.

Plain Python functions over numpy arrays, jitted with numba when available
(same code object either way, so results cannot diverge between the fast and
fallback paths).  Two flavours per problem:

  * pruned: forced-degree and connectivity pruning, used by production
    verification and the seed search;
  * naive: adjacency-and-visited only, used by the independent search oracle
    so that a pruning bug cannot hide in both routes.

All kernels return (count, exhausted, steps): `count` saturates at `cap`,
`exhausted` is 1 iff the space was fully explored, `steps` counts node
expansions (compared against `budget`).
"""

from __future__ import annotations

import numpy as np

_M1 = 0x5555555555555555
_M2 = 0x3333333333333333
_M4 = 0x0F0F0F0F0F0F0F0F
_H01 = 0x0101010101010101


def _popcount(x):
    x = x - ((x >> 1) & _M1)
    x = (x & _M2) + ((x >> 2) & _M2)
    x = (x + (x >> 4)) & _M4
    return (x * _H01) >> 56


def _reach(adj, start_bit, allowed):
    """Set of vertices reachable from start_bit inside `allowed` (bit BFS)."""
    seen = start_bit & allowed
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            v = _popcount(low - 1)
            nxt |= adj[v]
            m ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def _path_feasible(adj, n, visited, cur, t_bit):
    """Sound pruning for s-t path extension from `cur` over ~visited."""
    free = ~visited & ((1 << n) - 1)
    if free == 0:
        return True
    cur_bit = 1 << cur
    # every remaining vertex still needs two usable edges (one for t)
    m = free
    while m:
        low = m & -m
        v = _popcount(low - 1)
        a = adj[v] & (free | cur_bit)
        if low == t_bit:
            if a == 0:
                return False
        else:
            if _popcount(a) < 2:
                return False
        m ^= low
    # all remaining vertices reachable from cur without leaving them
    if _reach(adj, cur_bit, free | cur_bit) & free != free:
        return False
    return True


def _cycle_feasible(adj, n, visited, cur):
    """Sound pruning for cycle extension (start fixed at vertex 0)."""
    free = ~visited & ((1 << n) - 1)
    if free == 0:
        return (adj[cur] & 1) != 0
    cur_bit = 1 << cur
    usable = free | cur_bit | 1
    m = free
    while m:
        low = m & -m
        v = _popcount(low - 1)
        if _popcount(adj[v] & usable) < 2:
            return False
        m ^= low
    if adj[0] & free == 0:
        return False
    if _reach(adj, cur_bit, free | cur_bit) & free != free:
        return False
    return True


def _count_paths(adj, n, s, t, cap, budget, wit, pruned):
    """Count hamiltonian s-t paths; wit rows receive the first witnesses."""
    if n == 1 or s == t:
        return 0, 1, 0
    full = (1 << n) - 1
    t_bit = 1 << t
    maxwit = wit.shape[0]
    path = np.empty(n, dtype=np.int8)
    avail = np.zeros(n, dtype=np.int64)
    path[0] = s
    visited = 1 << s
    if n == 2:
        c = 1 if (adj[s] & t_bit) != 0 else 0
        if c and maxwit > 0:
            wit[0, 0] = s
            wit[0, 1] = t
        return c, 1, 1
    avail[0] = adj[s] & ~visited & ~t_bit
    depth = 0
    count = 0
    steps = 1
    while depth >= 0:
        m = avail[depth]
        if m == 0:
            visited &= ~(1 << path[depth])
            depth -= 1
            continue
        low = m & -m
        avail[depth] = m ^ low
        v = _popcount(low - 1)
        steps += 1
        if steps > budget:
            return count, 0, steps
        visited |= low
        depth += 1
        path[depth] = v
        if visited | t_bit == full:
            if adj[v] & t_bit:
                if count < maxwit:
                    for i in range(depth + 1):
                        wit[count, i] = path[i]
                    wit[count, depth + 1] = t
                count += 1
                if count >= cap:
                    return count, 0, steps
            visited ^= low
            depth -= 1
            continue
        if pruned and not _path_feasible(adj, n, visited, v, t_bit):
            visited ^= low
            depth -= 1
            continue
        avail[depth] = adj[v] & ~visited & ~t_bit
    return count, 1, steps


def _count_cycles(adj, n, cap, budget, wit, pruned):
    """Count hamiltonian cycles (each once; start 0, direction canonical)."""
    if n < 3:
        return 0, 1, 0
    full = (1 << n) - 1
    maxwit = wit.shape[0]
    path = np.empty(n, dtype=np.int8)
    avail = np.zeros(n, dtype=np.int64)
    path[0] = 0
    visited = 1
    avail[0] = adj[0] & ~1
    depth = 0
    count = 0
    steps = 1
    while depth >= 0:
        m = avail[depth]
        if m == 0:
            visited &= ~(1 << path[depth])
            depth -= 1
            continue
        low = m & -m
        avail[depth] = m ^ low
        v = _popcount(low - 1)
        steps += 1
        if steps > budget:
            return count, 0, steps
        visited |= low
        depth += 1
        path[depth] = v
        if visited == full:
            # close the cycle; count each once via second < last
            if (adj[v] & 1) and path[1] < v:
                if count < maxwit:
                    for i in range(depth + 1):
                        wit[count, i] = path[i]
                count += 1
                if count >= cap:
                    return count, 0, steps
            visited ^= low
            depth -= 1
            continue
        if pruned and not _cycle_feasible(adj, n, visited, v):
            visited ^= low
            depth -= 1
            continue
        avail[depth] = adj[v] & ~visited & ~1
    return count, 1, steps


def _seed_search(n, adj, cnt, cubic0, quartic0, start_u, budget, prune, out, wit):
    """Iterative DFS over spine-chord additions for the seed search.

    Vertices gain their chords in spine order: vertex 0 ends with chord
    degree 2, vertex n-1 with 1, interior vertices with 1 (cubic) or 2
    (quartic) against the remaining quotas.  With `prune`, branches whose
    partial graph already has a second hamiltonian 0-(n-1) path are cut
    (sound: adding edges never removes paths); without it the enumeration is
    blind and the unique-path filter runs at the leaves.

    adj/cnt arrive with a work-unit prefix installed; vertices below start_u
    are final and already counted against the quotas.  Leaves are written to
    `out` as flattened chord pairs.  Returns (nleaves, nodes, status) with
    status 0 complete / 1 budget exhausted / 2 out buffer full.
    """
    maxch = out.shape[1] // 2
    chords = np.empty((maxch + 1, 2), dtype=np.int64)
    nch = 0
    for u in range(n):
        m = adj[u] >> (u + 2)
        w = u + 2
        while m:
            if m & 1:
                chords[nch, 0] = u
                chords[nch, 1] = w
                nch += 1
            m >>= 1
            w += 1
    # per-frame iterator state, indexed by spine vertex
    fti = np.zeros(n + 1, dtype=np.int64)      # totals tried so far (0, 1, 2=done)
    fquota = np.zeros(n + 1, dtype=np.int64)   # which quota this frame holds (0/1/2)
    fw1 = np.zeros(n + 1, dtype=np.int64)
    fw2 = np.zeros(n + 1, dtype=np.int64)
    fplaced = np.zeros(n + 1, dtype=np.int64)
    fu = np.zeros(n + 1, dtype=np.int64)
    cubic_left = cubic0
    quartic_left = quartic0
    nout = 0
    nodes = 0
    status = 0

    depth = 0
    fu[0] = start_u
    fti[0] = 0
    fquota[0] = 0
    fplaced[0] = 0
    fw1[0] = -1
    fw2[0] = -2

    while depth >= 0:
        u = fu[depth]
        if u == n - 1:
            if cnt[n - 1] == 1 and cubic_left == 0 and quartic_left == 0:
                ok = True
                if not prune:
                    c, ex, st = _count_paths(adj, n, 0, n - 1, 2, 1 << 60, wit, False)
                    ok = ex == 1 and c == 1
                if ok:
                    if nout >= out.shape[0]:
                        status = 2
                        break
                    for i in range(nch):
                        out[nout, 2 * i] = chords[i, 0]
                        out[nout, 2 * i + 1] = chords[i, 1]
                    for i in range(nch, maxch):
                        out[nout, 2 * i] = -1
                        out[nout, 2 * i + 1] = -1
                    nout += 1
            depth -= 1
            continue
        # returning into this frame: unplace its current combo first
        for _ in range(fplaced[depth]):
            nch -= 1
            a = chords[nch, 0]
            b = chords[nch, 1]
            adj[a] &= ~(1 << b)
            adj[b] &= ~(1 << a)
            cnt[a] -= 1
            cnt[b] -= 1
        fplaced[depth] = 0
        descend = False
        while True:
            ti = fti[depth]
            if u == 0:
                total = 2 if ti == 0 else -1
            else:
                total = ti + 1 if ti < 2 else -1
            if total < 0:
                if fquota[depth] == 1:
                    cubic_left += 1
                elif fquota[depth] == 2:
                    quartic_left += 1
                fquota[depth] = 0
                depth -= 1
                break
            if u > 0 and fquota[depth] == 0:
                # entering this total: take the quota and reset the iterator
                if total == 1:
                    if cubic_left <= 0:
                        fti[depth] = ti + 1
                        continue
                    cubic_left -= 1
                    fquota[depth] = 1
                else:
                    if quartic_left <= 0:
                        fti[depth] = ti + 1
                        continue
                    quartic_left -= 1
                    fquota[depth] = 2
                fw1[depth] = -1
                fw2[depth] = -2
            extra = total - cnt[u]
            if extra < 0:
                if fquota[depth] == 1:
                    cubic_left += 1
                elif fquota[depth] == 2:
                    quartic_left += 1
                fquota[depth] = 0
                fti[depth] = ti + 1
                continue
            found = False
            if extra == 0:
                # exactly one (empty) combo for this total
                if fw2[depth] != -3:
                    fw2[depth] = -3
                    found = True
                else:
                    if fquota[depth] == 1:
                        cubic_left += 1
                    elif fquota[depth] == 2:
                        quartic_left += 1
                    fquota[depth] = 0
                    fti[depth] = ti + 1
                    continue
            elif extra == 1:
                w = fw1[depth]
                w = u + 1 if w < 0 else w
                while True:
                    w += 1
                    if w >= n:
                        break
                    capw = 1 if w == n - 1 else 2
                    if cnt[w] < capw:
                        found = True
                        break
                if found:
                    fw1[depth] = w
                    chords[nch, 0] = u
                    chords[nch, 1] = w
                    nch += 1
                    adj[u] |= 1 << w
                    adj[w] |= 1 << u
                    cnt[u] += 1
                    cnt[w] += 1
                    fplaced[depth] = 1
            else:
                w1 = fw1[depth]
                w2 = fw2[depth]
                if w2 < 0:
                    w1 = u + 2
                    w2 = u + 2
                    # w1 must be valid before pairing; advance to first valid
                    while w1 < n - 1:
                        capw = 1 if w1 == n - 1 else 2
                        if cnt[w1] < capw:
                            break
                        w1 += 1
                    w2 = w1
                while w1 < n - 1:
                    w2 += 1
                    if w2 >= n:
                        # advance w1 to its next valid value
                        w1 += 1
                        while w1 < n - 1 and cnt[w1] >= 2:
                            w1 += 1
                        w2 = w1
                        continue
                    capw2 = 1 if w2 == n - 1 else 2
                    if cnt[w2] < capw2:
                        found = True
                        break
                if found:
                    fw1[depth] = w1
                    fw2[depth] = w2
                    chords[nch, 0] = u
                    chords[nch, 1] = w1
                    nch += 1
                    chords[nch, 0] = u
                    chords[nch, 1] = w2
                    nch += 1
                    adj[u] |= 1 << w1
                    adj[w1] |= 1 << u
                    adj[u] |= 1 << w2
                    adj[w2] |= 1 << u
                    cnt[u] += 2
                    cnt[w1] += 1
                    cnt[w2] += 1
                    fplaced[depth] = 2
            if not found:
                if fquota[depth] == 1:
                    cubic_left += 1
                elif fquota[depth] == 2:
                    quartic_left += 1
                fquota[depth] = 0
                fti[depth] = ti + 1
                continue
            nodes += 1
            if nodes > budget:
                status = 1
                depth = -1
                break
            ok = True
            if prune and fplaced[depth] > 0:
                c, ex, st = _count_paths(adj, n, 0, n - 1, 2, 1 << 60, wit, True)
                ok = c < 2
            if ok:
                depth += 1
                fu[depth] = u + 1
                fti[depth] = 0
                fquota[depth] = 0
                fplaced[depth] = 0
                fw1[depth] = -1
                fw2[depth] = -2
                descend = True
                break
            for _ in range(fplaced[depth]):
                nch -= 1
                a = chords[nch, 0]
                b = chords[nch, 1]
                adj[a] &= ~(1 << b)
                adj[b] &= ~(1 << a)
                cnt[a] -= 1
                cnt[b] -= 1
            fplaced[depth] = 0
        if status == 1 or status == 2:
            break
    return nout, nodes, status


def _ring_chord_search(n, adj, cnt, cap, budget, out, wit):
    """Enumerate chord sets over the ring 0..n-1 where vertex v ends with
    exactly cap[v] chords, pruning once a second hamiltonian cycle appears
    (sound: chords only add cycles).  Leaves land in `out` as flattened
    chord pairs; returns (nleaves, nodes, status 0/1/2) like _seed_search.
    """
    maxch = 0
    for v in range(n):
        maxch += cap[v]
    maxch //= 2
    chords = np.empty((maxch + 1, 2), dtype=np.int64)
    nch = 0
    fu = np.zeros(maxch + 2, dtype=np.int64)
    fw = np.zeros(maxch + 2, dtype=np.int64)
    fplaced = np.zeros(maxch + 2, dtype=np.int64)
    nout = 0
    nodes = 0
    status = 0
    depth = 0
    u0 = -1
    for v in range(n):
        if cnt[v] < cap[v]:
            u0 = v
            break
    if u0 == -1:
        c, ex, st = _count_cycles(adj, n, 2, 1 << 60, wit, True)
        if ex == 1 and c == 1:
            return 1, 1, 0
        return 0, 1, 0
    fu[0] = u0
    fw[0] = u0
    fplaced[0] = 0
    while depth >= 0:
        u = fu[depth]
        w = fw[depth]
        if fplaced[depth] == 1:
            nch -= 1
            adj[u] &= ~(1 << w)
            adj[w] &= ~(1 << u)
            cnt[u] -= 1
            cnt[w] -= 1
            fplaced[depth] = 0
        found = False
        while True:
            w += 1
            if w >= n:
                break
            if cnt[w] >= cap[w]:
                continue
            if w == u + 1 or (u == 0 and w == n - 1):
                continue  # ring edge
            if adj[u] >> w & 1:
                continue
            found = True
            break
        if not found:
            depth -= 1
            continue
        fw[depth] = w
        fplaced[depth] = 1
        adj[u] |= 1 << w
        adj[w] |= 1 << u
        cnt[u] += 1
        cnt[w] += 1
        chords[nch, 0] = u
        chords[nch, 1] = w
        nch += 1
        nodes += 1
        if nodes > budget:
            status = 1
            break
        c, ex, st = _count_cycles(adj, n, 2, 1 << 60, wit, True)
        if c >= 2:
            continue  # frame top will unplace and advance
        nxt = -1
        for v in range(u, n):
            if cnt[v] < cap[v]:
                nxt = v
                break
        if nxt == -1:
            if nout >= out.shape[0]:
                status = 2
                break
            for i in range(nch):
                out[nout, 2 * i] = chords[i, 0]
                out[nout, 2 * i + 1] = chords[i, 1]
            nout += 1
            continue
        depth += 1
        fu[depth] = nxt
        # second chord of the same vertex: keep partners increasing
        fw[depth] = w if nxt == u else nxt
        fplaced[depth] = 0
    return nout, nodes, status


def _ring_quota_search(n, adj, cnt, cubic0, quartic0, budget, prune, force_first, out, wit):
    """Ring analogue of _seed_search: every vertex ends with chord-degree 1
    (cubic quota) or 2 (quartic quota); branches that already contain a
    second hamiltonian cycle are pruned when `prune` is set, and blind
    enumeration filters at the leaves otherwise.  Output layout and return
    convention match _seed_search.
    """
    maxch = out.shape[1] // 2
    chords = np.empty((maxch + 1, 2), dtype=np.int64)
    nch = 0
    fti = np.zeros(n + 1, dtype=np.int64)
    fquota = np.zeros(n + 1, dtype=np.int64)
    fw1 = np.zeros(n + 1, dtype=np.int64)
    fw2 = np.zeros(n + 1, dtype=np.int64)
    fplaced = np.zeros(n + 1, dtype=np.int64)
    fu = np.zeros(n + 1, dtype=np.int64)
    cubic_left = cubic0
    quartic_left = quartic0
    nout = 0
    nodes = 0
    status = 0

    depth = 0
    fu[0] = 0
    fti[0] = 0
    fquota[0] = 0
    fplaced[0] = 0
    fw1[0] = -1
    fw2[0] = -2

    while depth >= 0:
        u = fu[depth]
        if u == n:
            if cubic_left == 0 and quartic_left == 0:
                ok = True
                if not prune:
                    c, ex, st = _count_cycles(adj, n, 2, 1 << 60, wit, False)
                    ok = ex == 1 and c == 1
                if ok:
                    if nout >= out.shape[0]:
                        status = 2
                        break
                    for i in range(nch):
                        out[nout, 2 * i] = chords[i, 0]
                        out[nout, 2 * i + 1] = chords[i, 1]
                    for i in range(nch, maxch):
                        out[nout, 2 * i] = -1
                        out[nout, 2 * i + 1] = -1
                    nout += 1
            depth -= 1
            continue
        for _ in range(fplaced[depth]):
            nch -= 1
            a = chords[nch, 0]
            b = chords[nch, 1]
            adj[a] &= ~(1 << b)
            adj[b] &= ~(1 << a)
            cnt[a] -= 1
            cnt[b] -= 1
        fplaced[depth] = 0
        while True:
            ti = fti[depth]
            total = ti + 1 if ti < 2 else -1
            if u == 0 and force_first > 0:
                total = force_first if ti == 0 else -1
            if total < 0:
                if fquota[depth] == 1:
                    cubic_left += 1
                elif fquota[depth] == 2:
                    quartic_left += 1
                fquota[depth] = 0
                depth -= 1
                break
            if fquota[depth] == 0:
                if total == 1:
                    if cubic_left <= 0:
                        fti[depth] = ti + 1
                        continue
                    cubic_left -= 1
                    fquota[depth] = 1
                else:
                    if quartic_left <= 0:
                        fti[depth] = ti + 1
                        continue
                    quartic_left -= 1
                    fquota[depth] = 2
                fw1[depth] = -1
                fw2[depth] = -2
            extra = total - cnt[u]
            if extra < 0:
                if fquota[depth] == 1:
                    cubic_left += 1
                elif fquota[depth] == 2:
                    quartic_left += 1
                fquota[depth] = 0
                fti[depth] = ti + 1
                continue
            found = False
            if extra == 0:
                if fw2[depth] != -3:
                    fw2[depth] = -3
                    found = True
                else:
                    if fquota[depth] == 1:
                        cubic_left += 1
                    elif fquota[depth] == 2:
                        quartic_left += 1
                    fquota[depth] = 0
                    fti[depth] = ti + 1
                    continue
            elif extra == 1:
                w = fw1[depth]
                w = u + 1 if w < 0 else w
                while True:
                    w += 1
                    if w >= n:
                        break
                    if cnt[w] >= 2 or w == u + 1 or (u == 0 and w == n - 1):
                        continue
                    if adj[u] >> w & 1:
                        continue
                    found = True
                    break
                if found:
                    fw1[depth] = w
                    chords[nch, 0] = u
                    chords[nch, 1] = w
                    nch += 1
                    adj[u] |= 1 << w
                    adj[w] |= 1 << u
                    cnt[u] += 1
                    cnt[w] += 1
                    fplaced[depth] = 1
            else:
                w1 = fw1[depth]
                w2 = fw2[depth]
                if w2 < 0:
                    w1 = u + 2
                    while w1 < n - 1:
                        if cnt[w1] < 2 and not (adj[u] >> w1 & 1) and not (u == 0 and w1 == n - 1):
                            break
                        w1 += 1
                    w2 = w1
                while w1 < n - 1:
                    w2 += 1
                    if w2 >= n:
                        w1 += 1
                        while w1 < n - 1:
                            if cnt[w1] < 2 and not (adj[u] >> w1 & 1) and not (u == 0 and w1 == n - 1):
                                break
                            w1 += 1
                        w2 = w1
                        continue
                    if cnt[w2] >= 2 or w2 == u + 1 or (u == 0 and w2 == n - 1):
                        continue
                    if adj[u] >> w2 & 1:
                        continue
                    found = True
                    break
                if found:
                    fw1[depth] = w1
                    fw2[depth] = w2
                    chords[nch, 0] = u
                    chords[nch, 1] = w1
                    nch += 1
                    chords[nch, 0] = u
                    chords[nch, 1] = w2
                    nch += 1
                    adj[u] |= 1 << w1
                    adj[w1] |= 1 << u
                    adj[u] |= 1 << w2
                    adj[w2] |= 1 << u
                    cnt[u] += 2
                    cnt[w1] += 1
                    cnt[w2] += 1
                    fplaced[depth] = 2
            if not found:
                if fquota[depth] == 1:
                    cubic_left += 1
                elif fquota[depth] == 2:
                    quartic_left += 1
                fquota[depth] = 0
                fti[depth] = ti + 1
                continue
            nodes += 1
            if nodes > budget:
                status = 1
                depth = -1
                break
            ok = True
            if prune and fplaced[depth] > 0:
                c, ex, st = _count_cycles(adj, n, 2, 1 << 60, wit, True)
                ok = c < 2
            if ok:
                depth += 1
                fu[depth] = u + 1
                fti[depth] = 0
                fquota[depth] = 0
                fplaced[depth] = 0
                fw1[depth] = -1
                fw2[depth] = -2
                break
            for _ in range(fplaced[depth]):
                nch -= 1
                a = chords[nch, 0]
                b = chords[nch, 1]
                adj[a] &= ~(1 << b)
                adj[b] &= ~(1 << a)
                cnt[a] -= 1
                cnt[b] -= 1
            fplaced[depth] = 0
        if status == 1 or status == 2:
            break
    return nout, nodes, status


def _maybe_jit():
    global _popcount, _reach, _path_feasible, _cycle_feasible
    global _count_paths, _count_cycles, _seed_search, _ring_chord_search
    global _ring_quota_search
    try:
        from numba import njit
    except ImportError:
        return False
    opts = dict(cache=True, nogil=True)
    _popcount = njit(**opts)(_popcount)
    _reach = njit(**opts)(_reach)
    _path_feasible = njit(**opts)(_path_feasible)
    _cycle_feasible = njit(**opts)(_cycle_feasible)
    _count_paths = njit(**opts)(_count_paths)
    _count_cycles = njit(**opts)(_count_cycles)
    _seed_search = njit(**opts)(_seed_search)
    _ring_chord_search = njit(**opts)(_ring_chord_search)
    _ring_quota_search = njit(**opts)(_ring_quota_search)
    return True


JITTED = _maybe_jit()


def count_paths_small(adj_masks, n, s, t, cap, budget, want_witnesses=0, pruned=True):
    adj = np.asarray(adj_masks, dtype=np.int64)
    wit = np.empty((want_witnesses, n), dtype=np.int8)
    count, exhausted, steps = _count_paths(adj, n, s, t, cap, budget, wit, pruned)
    seqs = [tuple(int(x) for x in wit[i]) for i in range(min(count, want_witnesses))]
    return int(count), bool(exhausted), int(steps), seqs


def count_cycles_small(adj_masks, n, cap, budget, want_witnesses=0, pruned=True):
    adj = np.asarray(adj_masks, dtype=np.int64)
    wit = np.empty((want_witnesses, n), dtype=np.int8)
    count, exhausted, steps = _count_cycles(adj, n, cap, budget, wit, pruned)
    seqs = [tuple(int(x) for x in wit[i]) for i in range(min(count, want_witnesses))]
    return int(count), bool(exhausted), int(steps), seqs
