"""Collapsing a connected graph to its increasing skeleton tree.

``skeleton`` sends every connected graph on an ordered vertex set to an
increasing tree: root at the minimum vertex, split the remaining vertices
into connected components, attach each component at its minimum vertex, and
repeat inside every component.  The skeleton is always supported by the
graph but need not be one of its subgraphs.

The preimage (fiber) of a tree R among the connected spanning subgraphs of
G has product structure: a subgraph collapses to R exactly when it is the
union of one nonempty subset of each per-vertex attachment set
``attachment_edges(v) & G.edges``.  That makes fibers enumerable and their
sizes a product of (2^size - 1) factors, which is what the invariant
formulas elsewhere in this package exploit.
"""

from __future__ import annotations

import itertools

from .graphs import Graph, NotConnectedError, SetPartition
from .trees import RootedTree


def depth_first_partition(g: Graph, root: int) -> SetPartition:
    """Connected-component partition of g with the root vertex removed."""
    if root not in g.vertices:
        raise ValueError(f"unknown root {root}")
    if not g.is_connected():
        raise NotConnectedError("depth-first partition requires a connected graph")
    return g.restrict(g.vertices - {root}).components()


def skeleton(g: Graph) -> RootedTree:
    """Collapse a connected graph to an increasing tree.

    Uses an explicit work stack of vertex subsets rather than recursion, so
    deep path-like graphs near the size bound cannot hit recursion limits.
    """
    if not g.vertices:
        raise ValueError("need at least one vertex")
    if not g.is_connected():
        raise NotConnectedError("only connected graphs have a skeleton tree")
    parent: dict[int, int] = {}
    stack = [g.vertices]
    while stack:
        subset = stack.pop()
        r = min(subset)
        rest = subset - {r}
        if not rest:
            continue
        for block in g.restrict(rest).components().blocks:
            parent[min(block)] = r
            if len(block) > 1:
                stack.append(frozenset(block))
    return RootedTree(min(g.vertices), parent)


def fiber_edge_sets(g: Graph, tree: RootedTree) -> dict[int, frozenset]:
    """Per-vertex attachment edges actually present in g, keyed by vertex.

    The keys run over the non-root vertices in ascending order.
    """
    if g.vertices != tree.vertices:
        raise ValueError("tree and graph have different vertex sets")
    if not tree.is_increasing():
        raise ValueError("tree must be increasing")
    return {v: tree.attachment_edges(v) & g.edges for v in sorted(tree.parent)}


def fiber_size(g: Graph, tree: RootedTree, strict: bool = False) -> int:
    """Number of connected spanning subgraphs of g collapsing to the tree.

    Equals the product over non-root vertices of (2^choices - 1), which is 0
    whenever some vertex has no attachment edge in g (the tree is not
    supported).  With strict=True that case raises instead.
    """
    sizes = [len(es) for es in fiber_edge_sets(g, tree).values()]
    if strict and not all(sizes):
        raise ValueError("tree is not supported by the graph")
    out = 1
    for c in sizes:
        out *= (1 << c) - 1
    return out


def enumerate_fiber(g: Graph, tree: RootedTree, strict: bool = False):
    """Stream every connected spanning subgraph of g that collapses to tree.

    Each member is built by choosing one nonempty subset of each vertex's
    available attachment edges.  Per vertex the nonempty subsets run in
    binary-counter order over the lexicographically sorted edges; choices
    combine in vertex order with the largest vertex advancing fastest.  An
    unsupported tree yields an empty stream (or raises with strict=True).
    """
    available = fiber_edge_sets(g, tree)
    pools = []
    for v in sorted(available):
        edges_sorted = sorted(available[v])
        if not edges_sorted:
            if strict:
                raise ValueError("tree is not supported by the graph")
            return iter(())
        k = len(edges_sorted)
        pools.append([
            tuple(edges_sorted[i] for i in range(k) if mask >> i & 1)
            for mask in range(1, 1 << k)
        ])

    def members():
        for combo in itertools.product(*pools):
            yield g.spanning(itertools.chain.from_iterable(combo))

    return members()


def splits_match(g: Graph, tree: RootedTree) -> bool:
    """Check that the tree records exactly g's recursive min-rooted splits.

    For every vertex v: g restricted to v's subtree must be connected and,
    with v removed, must fall apart into the same components as the subtree
    does.  For an increasing tree on a connected graph this holds exactly
    when skeleton(g) equals the tree; an unsupported tree always fails.
    """
    if g.vertices != tree.vertices:
        raise ValueError("tree and graph have different vertex sets")
    tree_graph = tree.as_graph()
    for v in sorted(tree.vertices):
        des = tree.descendants(v)
        if not g.restrict(des).is_connected():
            return False
        rest = des - {v}
        if not rest:
            continue
        if g.restrict(rest).components() != tree_graph.restrict(rest).components():
            return False
    return True


def attachments_cover(g: Graph, tree: RootedTree) -> bool:
    """True iff every attachment set meets g and together they exhaust g.

    This is the product-structure characterization of skeleton(g) == tree:
    the per-vertex available attachment sets must all be nonempty and their
    union must be the whole edge set of g.
    """
    available = fiber_edge_sets(g, tree)
    union: frozenset = frozenset()
    for es in available.values():
        if not es:
            return False
        union |= es
    return union == g.edges
