"""Independent reference implementations used to cross-check the package.

Everything here works on plain Python sets and adjacency dicts, with no
shared code paths with the bitmask implementation under test.
"""

from itertools import combinations, permutations
import random


def adj_of(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def closed_nbhd(adj, s):
    out = set(s)
    for v in s:
        out |= adj[v]
    return out


def _force(adj, monitored):
    added = set()
    for v in monitored:
        outside = adj[v] - monitored
        if len(outside) == 1:
            added |= outside
    return added


def pd_chain(n, edges, s):
    """Power-domination chain as a list of frozensets."""
    adj = adj_of(n, edges)
    cur = closed_nbhd(adj, set(s))
    steps = [frozenset(cur)]
    while True:
        added = _force(adj, cur)
        if not added:
            return steps
        cur |= added
        steps.append(frozenset(cur))


def zf_chain(n, edges, s):
    adj = adj_of(n, edges)
    cur = set(s)
    steps = [frozenset(cur)]
    while True:
        added = _force(adj, cur)
        if not added:
            return steps
        cur |= added
        steps.append(frozenset(cur))


def is_pds(n, edges, s):
    return len(pd_chain(n, edges, s)[-1]) == n


def is_zfs(n, edges, s):
    return len(zf_chain(n, edges, s)[-1]) == n


def brute_gamma_p(n, edges):
    for k in range(n + 1):
        for s in combinations(range(n), k):
            if is_pds(n, edges, s):
                return k
    raise AssertionError("full vertex set is always a PDS")


def brute_gamma_bar(n, edges):
    best = -1
    for k in range(n + 1):
        for s in combinations(range(n), k):
            if not is_pds(n, edges, s):
                best = max(best, k)
    return best


def brute_zero_forcing(n, edges):
    for k in range(n + 1):
        for s in combinations(range(n), k):
            if is_zfs(n, edges, s):
                return k
    raise AssertionError("full vertex set always forces")


def brute_failed_zero_forcing(n, edges):
    best = -1
    for k in range(n + 1):
        for s in combinations(range(n), k):
            if not is_zfs(n, edges, s):
                best = max(best, k)
    return best


def brute_domination(n, edges):
    adj = adj_of(n, edges)
    for k in range(n + 1):
        for s in combinations(range(n), k):
            if len(closed_nbhd(adj, set(s))) == n:
                return k
    raise AssertionError("full vertex set always dominates")


def brute_alpha(n, edges):
    edge_set = {frozenset(e) for e in edges}
    for k in range(n, -1, -1):
        for s in combinations(range(n), k):
            if all(frozenset(p) not in edge_set for p in combinations(s, 2)):
                return k
    return 0


def brute_connectivity(n, edges):
    """Exhaustive vertex connectivity for connected non-complete graphs."""
    if len(edges) == n * (n - 1) // 2:
        return n - 1
    adj = adj_of(n, edges)
    for size in range(1, n - 1):
        for removed in combinations(range(n), size):
            alive = set(range(n)) - set(removed)
            if alive and not _connected_on(adj, alive):
                return size
    raise AssertionError("unreachable for non-complete graphs")


def _connected_on(adj, alive):
    start = next(iter(alive))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in adj[v] & alive:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == alive


def is_connected(n, edges):
    return n <= 1 or _connected_on(adj_of(n, edges), set(range(n)))


def brute_cut_vertices(n, edges):
    adj = adj_of(n, edges)

    def comp_count(alive):
        count = 0
        left = set(alive)
        while left:
            seed = next(iter(left))
            seen = {seed}
            stack = [seed]
            while stack:
                v = stack.pop()
                for u in adj[v] & left:
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            left -= seen
            count += 1
        return count

    base = comp_count(set(range(n)))
    return {v for v in range(n) if comp_count(set(range(n)) - {v}) > base}


def isomorphic(n, edges1, edges2):
    """Brute-force isomorphism test, only for tiny graphs."""
    e1 = {frozenset(e) for e in edges1}
    e2 = {frozenset(e) for e in edges2}
    if len(e1) != len(e2):
        return False
    for perm in permutations(range(n)):
        if {frozenset((perm[u], perm[v])) for u, v in e1} == e2:
            return True
    return False


def random_graph(rng: random.Random, n: int, p: float = 0.5):
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return n, edges


def random_connected_graph(rng: random.Random, n: int, p: float = 0.4):
    """Random spanning tree plus extra edges, so connectivity is guaranteed."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        other = rng.choice(order[:i])
        edges.add((min(order[i], other), max(order[i], other)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return n, sorted(edges)
