"""Definitional oracles, written independently of the library's fast paths.

Everything here works on plain edge lists and literal loops.
"""

from itertools import combinations


def share_endpoint(e, f):
    return e != f and bool(set(e) & set(f))


def all_subsets(eps):
    """Nonempty index tuples in (size, lex) order."""
    return [c for k in range(1, eps + 1) for c in combinations(range(eps), k)]


def to_mask(subset):
    return sum(1 << k for k in subset)


def gamma_adjacent(edges, s, t):
    return any(share_endpoint(edges[a], edges[b]) for a in s for b in t)


def gamma_degrees(edges):
    """mask -> degree by the double loop over edge pairs."""
    subs = all_subsets(len(edges))
    return {
        to_mask(s): sum(1 for t in subs if t != s and gamma_adjacent(edges, s, t))
        for s in subs
    }


def set_graph_degrees(n):
    subs = all_subsets(n)
    return {to_mask(s): sum(1 for t in subs if t != s and set(s) & set(t)) for s in subs}


def lex_index(subset, eps):
    """(s, i) by listing every s-subset in lex order."""
    s = len(subset)
    listing = list(combinations(range(eps), s))
    return s, listing.index(tuple(sorted(subset))) + 1


def dominates(edges, x):
    return all(k in x or any(share_endpoint(edges[k], edges[j]) for j in x) for k in range(len(edges)))


def edge_set_connected(edges, x):
    x = list(x)
    parent = {}

    def find(a):
        while parent.setdefault(a, a) != a:
            a = parent[a]
        return a

    for k in x:
        u, v = edges[k]
        parent[find(u)] = find(v)
    roots = {find(v) for k in x for v in edges[k]}
    return len(roots) == 1


def ced_sets(edges):
    return [s for s in all_subsets(len(edges)) if dominates(edges, s) and edge_set_connected(edges, s)]


def hamiltonian_cycles(n, edges):
    """Distinct Hamiltonian cycles as frozensets of edges, by permutations."""
    if n < 3:
        return set()
    from itertools import permutations

    es = {frozenset(e) for e in edges}
    found = set()
    for perm in permutations(range(1, n)):
        cyc = (0,) + perm
        cyc_edges = frozenset(frozenset((cyc[k], cyc[(k + 1) % n])) for k in range(n))
        if cyc_edges <= es:
            found.add(cyc_edges)
    return found
