"""Broken circuits, breaks of spanning subtrees, and the minimum-attachment
bijection.

Edges inherit the vertex order lexicographically.  A broken circuit of a
spanning subgraph H inside G is a circuit of G with its smallest edge
removed, all of whose remaining edges lie in H; H is broken circuit free
(BCF) when it contains none.  For a spanning subtree T, an outside edge is
a *break* when it is the smallest edge of the circuit it closes, and the
breaks of T are in bijection with the broken circuits inside T.

``min_attachment_tree`` picks, below every vertex of an increasing
supported tree, the smallest attachment edge present in G.  The resulting
subtree is BCF, and collapsing it with ``skeleton`` returns the original
tree, which makes the map a bijection between increasing supported trees
and BCF spanning subtrees.
"""

from __future__ import annotations

import itertools

from .graphs import Graph, check_limit
from .skeleton import skeleton
from .trees import RootedTree


def _check_spanning_subtree(t: Graph, g: Graph) -> None:
    if t.vertices != g.vertices or not t.edges <= g.edges:
        raise ValueError("expected a spanning subgraph of the host graph")
    if len(t.edges) != len(t.vertices) - 1 or not t.is_connected():
        raise ValueError("expected a spanning tree")


def _path_edges(h: Graph, start: int, goal: int) -> tuple:
    """Edges of the unique path between two vertices of a forest."""
    adj = h.adjacency()
    prev = {start: None}
    stack = [start]
    while stack:
        v = stack.pop()
        if v == goal:
            break
        for w in adj[v]:
            if w not in prev:
                prev[w] = v
                stack.append(w)
    if goal not in prev:
        raise ValueError(f"no path between {start} and {goal}")
    out = []
    v = goal
    while prev[v] is not None:
        p = prev[v]
        out.append((p, v) if p < v else (v, p))
        v = p
    return tuple(out)


def circuit_closed_by(t: Graph, e) -> frozenset:
    """Edge set of the unique circuit in a spanning tree plus one extra edge.

    The extra edge is included in the result.
    """
    u, v = e
    ee = (u, v) if u < v else (v, u)
    if ee in t.edges:
        raise ValueError(f"edge {ee} already belongs to the tree")
    if u not in t.vertices or v not in t.vertices:
        raise ValueError(f"edge {ee} leaves the vertex set")
    return frozenset(_path_edges(t, ee[0], ee[1])) | {ee}


def breaks_by_circuits(t: Graph, g: Graph) -> frozenset:
    """Edges of g outside the spanning subtree t that are the smallest edge
    of the circuit they close."""
    _check_spanning_subtree(t, g)
    out = set()
    for e in sorted(g.edges - t.edges):
        if min(circuit_closed_by(t, e)) == e:
            out.add(e)
    return frozenset(out)


def breaks_by_skeleton(t: Graph, g: Graph) -> frozenset:
    """The same break set computed through the collapsed tree.

    Collapse t; below each vertex exactly one attachment edge of t survives,
    and every strictly smaller attachment edge available in g is a break.
    Always equals breaks_by_circuits.
    """
    _check_spanning_subtree(t, g)
    collapsed = skeleton(t)
    out = set()
    for v in sorted(collapsed.parent):
        attach = collapsed.attachment_edges(v)
        (kept,) = attach & t.edges
        out.update(e for e in attach & g.edges if e < kept)
    return frozenset(out)


def is_broken_circuit_free(h: Graph, g: Graph) -> bool:
    """True iff the spanning subgraph h contains no broken circuit of g.

    Checked without enumerating subsets: h must be a forest, and no edge of
    g outside h whose endpoints h already connects may be smaller than every
    edge on the h-path between them (such an edge would close a circuit in
    which it is minimal, and the path would be a broken circuit inside h).
    A subgraph containing a circuit always fails.
    """
    if h.vertices != g.vertices or not h.edges <= g.edges:
        raise ValueError("expected a spanning subgraph of the host graph")
    comp = h.components()
    if len(h.edges) != len(h.vertices) - len(comp):
        return False
    block_of = {}
    for i, b in enumerate(comp.blocks):
        for v in b:
            block_of[v] = i
    for e in g.edges - h.edges:
        u, v = e
        if block_of[u] != block_of[v]:
            continue
        if all(e < pe for pe in _path_edges(h, u, v)):
            return False
    return True


def min_attachment_tree(tree: RootedTree, g: Graph, strict: bool = False):
    """The spanning subtree of g picking the smallest available attachment
    edge below every vertex of an increasing supported tree.

    The result is broken circuit free and collapses back to the input tree.
    For an unsupported tree this returns None, or raises with strict=True.
    """
    if g.vertices != tree.vertices:
        raise ValueError("tree and graph have different vertex sets")
    if not tree.is_increasing():
        raise ValueError("tree must be increasing")
    chosen = []
    for v in sorted(tree.parent):
        available = tree.attachment_edges(v) & g.edges
        if not available:
            if strict:
                raise ValueError("tree is not supported by the graph")
            return None
        chosen.append(min(available))
    return g.spanning(chosen)


def spanning_subtrees(g: Graph):
    """All spanning subtrees of g, lexicographic on sorted edge lists."""
    want = len(g.vertices) - 1
    for combo in itertools.combinations(sorted(g.edges), want):
        t = g.spanning(combo)
        if t.is_connected():
            yield t


def _subsets_lex(seq):
    yield ()
    for i in range(len(seq)):
        for tail in _subsets_lex(seq[i + 1:]):
            yield (seq[i],) + tail


def bcf_subforests(g: Graph, q: int | None = None, max_n: int | None = None):
    """Stream the broken-circuit-free spanning subforests of g.

    Order is lexicographic on sorted edge lists; q filters by component
    count (q=1 gives the BCF spanning subtrees of a connected graph).
    """
    check_limit(len(g.vertices), max_n)
    for subset in _subsets_lex(g.sorted_edges()):
        h = g.spanning(subset)
        if q is not None and len(h.components()) != q:
            continue
        if is_broken_circuit_free(h, g):
            yield h
