"""Pure-Python bitset kernels.

Graphs are given as adjacency masks: adj[v] is an integer whose bit w is set
when v and w are adjacent (no self loops).  Vertices are 0-based.

zonoforge._kernel (the compiled extension) mirrors this module bit for bit:
same pivot rule, same visit order, same node accounting.  Either backend can
stand in for the other and both produce identical output streams.
"""
from typing import Optional, Sequence


def enumerate_maximal_cliques(adj: Sequence[int], nv: int) -> list[int]:
    """All maximal cliques as vertex masks, in deterministic visit order.

    Pivoted Bron-Kerbosch: the pivot is the vertex of P | X with the most
    neighbours inside P (lowest index on ties), and the candidates P \\ N(pivot)
    are visited in ascending vertex order.
    """
    out: list[int] = []

    def visit(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        pux = p | x
        best_u = -1
        best = -1
        m = pux
        while m:
            low = m & -m
            u = low.bit_length() - 1
            c = (p & adj[u]).bit_count()
            if c > best:
                best = c
                best_u = u
            m ^= low
        cand = p & ~adj[best_u]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            visit(r | low, p & adj[v], x & adj[v])
            p ^= low
            x |= low
            cand ^= low

    visit(0, (1 << nv) - 1, 0)
    return out


def find_clique_of_size(
    adj: Sequence[int], nv: int, seed: int, target: int
) -> tuple[Optional[int], int, int]:
    """First clique of exactly `target` vertices containing `seed`, or None.

    The search is exhaustive: a None answer certifies that no such clique
    exists.  Candidates are visited in ascending vertex order and a branch is
    cut when the remaining candidate pool cannot reach the target size.
    Returns (clique_mask_or_None, nodes_visited, max_depth).
    """
    m = seed
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if seed & ~(adj[v] | low):
            return None, 1, 0
        m ^= low

    p0 = (1 << nv) - 1 & ~seed
    m = seed
    while m:
        low = m & -m
        p0 &= adj[low.bit_length() - 1]
        m ^= low

    nodes = 0
    max_depth = 0
    found: Optional[int] = None

    def descend(r: int, size: int, p: int, depth: int) -> bool:
        nonlocal nodes, max_depth, found
        nodes += 1
        if depth > max_depth:
            max_depth = depth
        if size == target:
            found = r
            return True
        if size + p.bit_count() < target:
            return False
        m = p
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if descend(r | low, size + 1, m & adj[v], depth + 1):
                return True
        return False

    descend(seed, seed.bit_count(), p0, 0)
    return found, nodes, max_depth
