"""Canonical labeling by permutation search (internal; not a public API).

The canonical form of a graph is the lexicographically minimal column-major
upper-triangle bit string over all vertex orderings -- the same bit order
graph6 uses, so the canonical form is exactly the graph with the smallest
graph6 body. Placing vertices one at a time appends one column (the new
vertex's adjacency to the already-placed prefix), so partial orders can be
compared against the incumbent and pruned. Interchangeable vertices (twins)
are explored once per node.
"""

from __future__ import annotations


def _refined_colors(n: int, adj: tuple[int, ...], rounds: int = 3) -> list[int]:
    """Iterated neighborhood refinement; used only to order candidates."""
    colors = [adj[v].bit_count() for v in range(n)]
    for _ in range(rounds):
        sigs = []
        for v in range(n):
            nb = sorted(colors[u] for u in range(n) if adj[v] >> u & 1)
            sigs.append((colors[v], tuple(nb)))
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return colors


def _twins(adj, u: int, v: int) -> bool:
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def canonical_order(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    """Vertex ordering whose column-major adjacency bit string is minimal."""
    if n == 1:
        return (0,)
    colors = _refined_colors(n, adj)

    def greedy(vals: list[int], left: list[int]):
        cols, order = [], []
        vals = vals[:]
        left = left[:]
        while left:
            v = min(left, key=lambda u: (vals[u], colors[u], u))
            cols.append(vals[v])
            order.append(v)
            left.remove(v)
            for u in left:
                vals[u] = vals[u] << 1 | (adj[v] >> u & 1)
        return cols, order

    best_cols, best_order = greedy([0] * n, list(range(n)))
    placed: list[int] = []

    def search(depth: int, vals: list[int], left: list[int]):
        nonlocal best_cols, best_order
        if not left:
            best_order = placed[:]
            return
        cands = sorted(left, key=lambda u: (vals[u], colors[u], u))
        tried: list[int] = []
        for v in cands:
            val = vals[v]
            if val > best_cols[depth]:
                break
            if any(vals[u] == val and _twins(adj, u, v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in left if u != v]
            nvals = vals[:]
            for u in rest:
                nvals[u] = nvals[u] << 1 | (adj[v] >> u & 1)
            if val < best_cols[depth]:
                tail_cols, tail_order = greedy(nvals, rest)
                best_cols = best_cols[:depth] + [val] + tail_cols
                best_order = placed + [v] + tail_order
            # prefix ties the incumbent here; descend
            placed.append(v)
            search(depth + 1, nvals, rest)
            placed.pop()

    search(0, [0] * n, list(range(n)))
    return tuple(best_order)


def relabel(n: int, adj: tuple[int, ...], order: tuple[int, ...]) -> tuple[int, ...]:
    """Adjacency masks after sending order[i] to index i."""
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = [0] * n
    for i, v in enumerate(order):
        row = 0
        m = adj[v]
        while m:
            b = m & -m
            row |= 1 << pos[b.bit_length() - 1]
            m ^= b
        out[i] = row
    return tuple(out)


def canonical_form(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    """Adjacency masks of the canonical representative of adj's class."""
    return relabel(n, adj, canonical_order(n, adj))


def column_key(n: int, adj: tuple[int, ...]) -> int:
    """Column-major upper-triangle bits packed into one int (graph6 bit order)."""
    key = 0
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            key = key << 1 | (col >> i & 1)
    return key
