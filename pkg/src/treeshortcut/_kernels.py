"""Numba kernels: tree sweeps, the linear-time threshold search, batch evaluators.

All vertex/index arrays are 1-based with a padding slot at index 0 so the code
matches the library's external 1-based indexing. Cost payloads are passed as a
(code, const, matrix, coords) bundle; unused payloads are 1x1 dummies.

Arithmetic discipline: every candidate value is assembled as (exact sum of
path/weight terms) + (at most one oracle cost added last), so on integer-weight
instances all comparisons are exact and value equality with the exhaustive
reference implementations is bitwise.
"""

import math

import numpy as np
from numba import njit

COST_CONST = 0
COST_MATRIX = 1
COST_COORDS = 2
COST_PREFIX = 3  # shortcut cost equals the path distance |prefix[i]-prefix[j]|


@njit(cache=True, inline="always")
def _cost(code, const, mat, coords, prefix, i, j):
    if code == COST_CONST:
        return const
    if code == COST_MATRIX:
        return mat[i, j]
    if code == COST_COORDS:
        s = 0.0
        for t in range(coords.shape[1]):
            d = coords[i, t] - coords[j, t]
            s += d * d
        return math.sqrt(s)
    return abs(prefix[i] - prefix[j])


@njit(cache=True, inline="always")
def _within(value, lam, strict):
    if strict:
        return value < lam
    return value <= lam


@njit(cache=True)
def tree_sweep(n, adj_start, adj_to, adj_w, root):
    """Distances and parents from ``root`` along unique tree paths."""
    dist = np.full(n + 1, -1.0)
    parent = np.zeros(n + 1, np.int64)
    stack = np.empty(n, np.int64)
    top = 0
    stack[top] = root
    top += 1
    dist[root] = 0.0
    while top > 0:
        top -= 1
        u = stack[top]
        for e in range(adj_start[u], adj_start[u + 1]):
            v = adj_to[e]
            if dist[v] < 0.0:
                dist[v] = dist[u] + adj_w[e]
                parent[v] = u
                stack[top] = v
                top += 1
    return dist, parent


@njit(cache=True)
def assign_hanging(n, adj_start, adj_to, adj_w, path):
    """Partition vertices into the components hanging off each path vertex.

    Removing the path's edges splits the tree into one component per path
    vertex. Returns (ok, component index per vertex, distance to the
    component's path vertex, eccentricity of the path vertex inside its
    component); ok is False when consecutive path entries are not adjacent.
    """
    npath = path.shape[0] - 1
    comp = np.zeros(n + 1, np.int64)
    to_anchor = np.zeros(n + 1, np.float64)
    hang = np.zeros(npath + 1, np.float64)
    on_path = np.zeros(n + 1, np.int64)
    for k in range(1, npath + 1):
        on_path[path[k]] = k
    for k in range(1, npath):
        hit = False
        u = path[k]
        for e in range(adj_start[u], adj_start[u + 1]):
            if adj_to[e] == path[k + 1]:
                hit = True
                break
        if not hit:
            return False, comp, to_anchor, hang
    stack = np.empty(n, np.int64)
    for k in range(1, npath + 1):
        root = path[k]
        comp[root] = k
        top = 0
        stack[top] = root
        top += 1
        while top > 0:
            top -= 1
            u = stack[top]
            for e in range(adj_start[u], adj_start[u + 1]):
                v = adj_to[e]
                # edges between two path vertices are exactly the path edges
                if on_path[u] > 0 and on_path[v] > 0:
                    continue
                if comp[v] == 0 and v != root:
                    comp[v] = k
                    to_anchor[v] = to_anchor[u] + adj_w[e]
                    if to_anchor[v] > hang[k]:
                        hang[k] = to_anchor[v]
                    stack[top] = v
                    top += 1
    return True, comp, to_anchor, hang


@njit(cache=True)
def relax_sweep(prefix, weights):
    """Largest weight reachable after paying the distance to it, per index."""
    n = prefix.shape[0] - 1
    out = np.empty(n + 1, np.float64)
    out[0] = 0.0
    # right-to-left: best over j >= i
    tmp = np.empty(n + 1, np.float64)
    tmp[n] = weights[n]
    for i in range(n - 1, 0, -1):
        cand = tmp[i + 1] - (prefix[i + 1] - prefix[i])
        tmp[i] = weights[i] if weights[i] > cand else cand
    # left-to-right: fold in j <= i
    out[1] = tmp[1]
    for i in range(2, n + 1):
        cand = out[i - 1] - (prefix[i] - prefix[i - 1])
        out[i] = tmp[i] if tmp[i] > cand else cand
    return out


@njit(cache=True)
def decide(prefix, rel, code, const, mat, coords, lam, strict,
           reach, mu, sigma, theta, rho, first_ok, moves):
    """One threshold probe: find (i, j) whose augmented weighted diameter is
    within ``lam`` (strictly below it when ``strict``), or report none.

    Returns (found, i, j, tail, slack_min); the index sequences are written
    into the caller-provided workspace arrays. All sequences are produced by
    monotone pointer sweeps, so a probe costs O(N) regardless of the number
    of candidate pairs.
    """
    n = prefix.shape[0] - 1
    for t in range(6):
        moves[t] = 0
    dpn = prefix[n]

    if _within(dpn, lam, strict):
        # a shortcut never lengthens distances: any pair qualifies
        return True, 1, 2, n, np.inf

    # farthest partner within budget, per left index (non-decreasing)
    reach[n] = n
    for i in range(n - 1, 0, -1):
        ri = reach[i + 1]
        while ri > i and not _within(
            rel[i] + (prefix[ri] - prefix[i]) + rel[ri], lam, strict
        ):
            ri -= 1
            moves[0] += 1
        reach[i] = ri

    # first index whose weighted distance to the right end fits the budget
    tail = 1
    while tail < n and not _within(
        rel[tail] + (prefix[n] - prefix[tail]), lam, strict
    ):
        tail += 1
        moves[1] += 1

    r1 = reach[1]
    em1 = tail - 1  # >= 1 because dpn exceeds the budget

    # mu: first partner making the end-to-end term fit (non-decreasing)
    m = 1
    for i in range(1, n):
        if m < i + 1:
            m = i + 1
        while m <= n and not _within(
            (prefix[i] + (prefix[n] - prefix[m]))
            + _cost(code, const, mat, coords, prefix, i, m),
            lam,
            strict,
        ):
            m += 1
            moves[2] += 1
        mu[i] = m

    # sigma: last partner keeping the left-end proxy within budget,
    # floored at r1 (partners <= r1 are always safe once mu admits them)
    s = n
    for i in range(1, n):
        while s > i and s > r1 and not _within(
            (prefix[i] + (prefix[s] - prefix[r1 + 1]) + rel[r1 + 1])
            + _cost(code, const, mat, coords, prefix, i, s),
            lam,
            strict,
        ):
            s -= 1
            moves[3] += 1
        sigma[i] = s

    # theta: first left index keeping the right-end proxy within budget;
    # n+2 marks "none" so the sequence stays non-increasing in j
    t = 1
    for j in range(n, 1, -1):
        while t < j and not _within(
            ((prefix[n] - prefix[j]) + abs(prefix[t] - prefix[em1]) + rel[em1])
            + _cost(code, const, mat, coords, prefix, t, j),
            lam,
            strict,
        ):
            t += 1
            moves[4] += 1
        theta[j] = t if t < j else n + 2

    # first_ok[v]: smallest j with theta[j] <= v
    j0 = n + 1
    for v in range(1, n + 1):
        while j0 - 1 >= 2 and theta[j0 - 1] <= v:
            j0 -= 1
            moves[5] += 1
        first_ok[v] = j0 if j0 <= n else n + 2

    # tightest remaining slack over budget-exceeding adjacent reaches
    slack_min = np.inf
    for i in range(1, n):
        if reach[i] < n:
            rr = reach[i] + 1
            d = ((lam - rel[i]) + (prefix[rr] - prefix[i])) - rel[rr]
            if d < slack_min:
                slack_min = d

    found = False
    bi = 0
    bj = 0
    for i in range(1, n):
        q = mu[i]
        if first_ok[i] > q:
            q = first_ok[i]
        if q > n or q > sigma[i]:
            rho[i] = 0
            continue
        rho[i] = q
        if not found:
            xv = (prefix[q] - prefix[i]) + _cost(
                code, const, mat, coords, prefix, i, q
            )
            if _within(xv, slack_min, strict):
                found = True
                bi = i
                bj = q
    return found, bi, bj, tail, slack_min


@njit(cache=True)
def pair_values(prefix, rel, ii, jj):
    """Weighted direct distance rel[i] + d(i,j) + rel[j] for index pairs."""
    out = np.empty(ii.shape[0], np.float64)
    for t in range(ii.shape[0]):
        i = ii[t]
        j = jj[t]
        out[t] = rel[i] + (prefix[j] - prefix[i]) + rel[j]
    return out


@njit(cache=True)
def screen_values(prefix, rel, code, const, mat, coords, tail, ii, jj):
    """Partner screening value: max of the end-to-end term and the right-end
    proxy, for index pairs. Non-increasing in the partner index."""
    n = prefix.shape[0] - 1
    em1 = tail - 1
    out = np.empty(ii.shape[0], np.float64)
    for t in range(ii.shape[0]):
        i = ii[t]
        j = jj[t]
        c = _cost(code, const, mat, coords, prefix, i, j)
        u = (prefix[i] + (prefix[n] - prefix[j])) + c
        e = ((prefix[n] - prefix[j]) + abs(prefix[i] - prefix[em1]) + rel[em1]) + c
        out[t] = u if u > e else e
    return out


@njit(cache=True)
def cost_values(prefix, code, const, mat, coords, ii, jj):
    out = np.empty(ii.shape[0], np.float64)
    for t in range(ii.shape[0]):
        out[t] = _cost(code, const, mat, coords, prefix, ii[t], jj[t])
    return out


@njit(cache=True)
def end_terms(prefix, rel, code, const, mat, coords, ii, jj):
    """Batch evaluation of the three non-cycle diameter components.

    Returns (ends, left, right) where ends is capped by the path length and
    left/right are located by binary search over the crossover position where
    the direct route stops dominating the shortcut route.
    """
    n = prefix.shape[0] - 1
    dpn = prefix[n]
    m = ii.shape[0]
    ends = np.empty(m, np.float64)
    left = np.empty(m, np.float64)
    right = np.empty(m, np.float64)
    for t in range(m):
        i = ii[t]
        j = jj[t]
        c = _cost(code, const, mat, coords, prefix, i, j)

        u = (prefix[i] + (prefix[n] - prefix[j])) + c
        ends[t] = u if u < dpn else dpn

        # left: last h in [i, j] still closer via the direct route
        lo = i
        hi = j
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if prefix[mid] <= (prefix[i] + (prefix[j] - prefix[mid])) + c:
                lo = mid
            else:
                hi = mid - 1
        s = prefix[lo] + rel[lo]
        if lo < j:
            s2 = (prefix[i] + (prefix[j] - prefix[lo + 1]) + rel[lo + 1]) + c
            if s2 > s:
                s = s2
        left[t] = s

        # right: first k in [i, j] already closer to the end via direct route
        lo = i
        hi = j
        while lo < hi:
            mid = (lo + hi) // 2
            if (prefix[n] - prefix[mid]) <= (
                (prefix[n] - prefix[j]) + (prefix[mid] - prefix[i])
            ) + c:
                hi = mid
            else:
                lo = mid + 1
        e = (prefix[n] - prefix[lo]) + rel[lo]
        if lo > i:
            e2 = ((prefix[n] - prefix[j]) + (prefix[lo - 1] - prefix[i]) + rel[lo - 1]) + c
            if e2 > e:
                e = e2
        right[t] = e
    return ends, left, right


@njit(cache=True)
def diameter_linear(prefix, rel, code, const, mat, coords, i, j):
    """Exact augmented weighted diameter for one shortcut in O(N)."""
    n = prefix.shape[0] - 1
    c = _cost(code, const, mat, coords, prefix, i, j)
    dpn = prefix[n]

    u = (prefix[i] + (prefix[n] - prefix[j])) + c
    best = u if u < dpn else dpn

    # weight terms join the exact part and the cost is added last, so every
    # candidate value is rounded exactly once
    for h in range(i, j):  # left end to cycle vertices
        via = (prefix[i] + (prefix[j] - prefix[h]) + rel[h]) + c
        direct = prefix[h] + rel[h]
        v = direct if direct < via else via
        if v > best:
            best = v
    for k in range(i + 1, j + 1):  # cycle vertices to right end
        via = ((prefix[n] - prefix[j]) + (prefix[k] - prefix[i]) + rel[k]) + c
        direct = (prefix[n] - prefix[k]) + rel[k]
        v = direct if direct < via else via
        if v > best:
            best = v

    # within-cycle pairs: split per k at the last partner where the direct
    # route still dominates; both boundary terms dominate their ranges
    if j > i + 2:
        hk = i + 1
        for k in range(i + 1, j - 1):
            if hk < k:
                hk = k
            while hk + 1 < j and (prefix[hk + 1] - prefix[k]) <= (
                (prefix[k] - prefix[i]) + (prefix[j] - prefix[hk + 1])
            ) + c:
                hk += 1
            if hk > k:
                v = (prefix[hk] - prefix[k]) + rel[k] + rel[hk]
                if v > best:
                    best = v
            if hk + 1 < j:
                v = ((prefix[k] - prefix[i]) + (prefix[j] - prefix[hk + 1]) + rel[k] + rel[hk + 1]) + c
                if v > best:
                    best = v
    return best
