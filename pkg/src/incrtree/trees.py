"""Rooted trees and forests on ordered vertex sets.

A rooted tree is a parent map plus a root.  A tree is increasing when every
vertex precedes all of its descendants; over integer vertices that is the
same as every non-root vertex having a smaller parent, so increasing trees
on m vertices are exactly the (m-1)! parent maps that always point downward.

The central relation here: below each non-root vertex v sits the set of
*attachment edges*, all possible edges from v's parent into v's subtree.  A
tree is supported by a graph G when every attachment set meets G; supported
trees exist only for connected G, and a supported tree need not be a
subgraph of G.
"""

from __future__ import annotations

import itertools

from .graphs import Graph, SetPartition, check_limit, edge, link, set_partitions_of


class RootedTree:
    """Immutable rooted tree stored as a parent map.

    ``parent`` maps every non-root vertex to its parent; the vertex set is
    the root together with the map's keys.
    """

    __slots__ = ("root", "parent", "_children", "_vertices", "_key")

    def __init__(self, root: int, parent=()):
        parent = dict(parent)
        if root in parent:
            raise ValueError("the root cannot have a parent")
        vertices = frozenset(parent) | {root}
        children: dict[int, list[int]] = {v: [] for v in vertices}
        for v, p in parent.items():
            if p not in vertices:
                raise ValueError(f"parent {p} of {v} is not a vertex")
            children[p].append(v)
        # every vertex must reach the root, i.e. the parent map has no cycle
        reaches = {root}
        for v in parent:
            trail = []
            w = v
            while w not in reaches:
                if w in trail:
                    raise ValueError("parent map contains a cycle")
                trail.append(w)
                w = parent[w]
            reaches.update(trail)
        for v in children:
            children[v].sort()
        self.root = root
        self.parent = parent
        self._children = children
        self._vertices = vertices
        self._key = (root, tuple(sorted(parent.items())))

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    def children_of(self, v: int) -> tuple[int, ...]:
        try:
            return tuple(self._children[v])
        except KeyError:
            raise ValueError(f"unknown vertex {v}")

    def descendants(self, v: int) -> frozenset[int]:
        """The set of descendants of v, including v itself."""
        if v not in self._vertices:
            raise ValueError(f"unknown vertex {v}")
        out = []
        stack = [v]
        while stack:
            w = stack.pop()
            out.append(w)
            stack.extend(self._children[w])
        return frozenset(out)

    def parent_of(self, v: int) -> int:
        if v == self.root:
            raise ValueError("the root has no parent")
        try:
            return self.parent[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v}")

    def join(self, v: int, w: int) -> int:
        """The deepest common ancestor of v and w."""
        if v not in self._vertices or w not in self._vertices:
            raise ValueError("unknown vertex")
        ancestors = {v}
        x = v
        while x != self.root:
            x = self.parent[x]
            ancestors.add(x)
        while w not in ancestors:
            w = self.parent[w]
        return w

    def is_increasing(self) -> bool:
        """True iff every vertex precedes all of its descendants.

        For a tree this is the same as every non-root vertex having a
        smaller parent, which is what gets checked.
        """
        return all(p < v for v, p in self.parent.items())

    def attachment_edges(self, v: int) -> frozenset[tuple[int, int]]:
        """All possible edges joining v's parent to a descendant of v."""
        return link(self.parent_of(v), self.descendants(v))

    def is_supported_by(self, g: Graph) -> bool:
        """True iff every non-root vertex has an attachment edge present in g."""
        if g.vertices != self._vertices:
            raise ValueError("tree and graph have different vertex sets")
        return all(self.attachment_edges(v) & g.edges for v in self.parent)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(edge(v, p) for v, p in self.parent.items())

    def as_graph(self) -> Graph:
        return Graph(self._vertices, self.edges)

    def to_json_obj(self) -> dict:
        return {
            "root": self.root,
            "parent": {str(v): self.parent[v] for v in sorted(self.parent)},
        }

    def __eq__(self, other):
        if not isinstance(other, RootedTree):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"RootedTree({self.root}, {dict(sorted(self.parent.items()))})"


class RootedForest:
    """Disjoint rooted trees, kept in canonical order by minimum vertex."""

    __slots__ = ("components",)

    def __init__(self, components):
        comps = sorted(components, key=lambda t: min(t.vertices))
        seen: set[int] = set()
        for t in comps:
            if seen & t.vertices:
                raise ValueError("component vertex sets overlap")
            seen |= t.vertices
        self.components = tuple(comps)

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(v for t in self.components for v in t.vertices)

    def partition(self) -> SetPartition:
        return SetPartition(t.vertices for t in self.components)

    def shape(self) -> tuple[int, ...]:
        return self.partition().shape()

    def component_count(self) -> int:
        return len(self.components)

    def is_increasing(self) -> bool:
        return all(t.is_increasing() for t in self.components)

    def is_supported_by(self, g: Graph) -> bool:
        """True iff every component is supported by g restricted to it."""
        if g.vertices != self.ground:
            raise ValueError("forest and graph have different vertex sets")
        return all(t.is_supported_by(g.restrict(t.vertices)) for t in self.components)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(e for t in self.components for e in t.edges)

    def as_graph(self) -> Graph:
        return Graph(self.ground, self.edges)

    def to_json_obj(self) -> list:
        return [t.to_json_obj() for t in self.components]

    def __eq__(self, other):
        if not isinstance(other, RootedForest):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"RootedForest({list(self.components)})"


def increasing_trees(vertices, max_n: int | None = None):
    """Stream every increasing tree on the given vertices exactly once.

    Each non-minimum vertex chooses a parent among the smaller vertices;
    choice vectors run lexicographically (indexed by vertex ascending, the
    choice for the largest vertex advancing fastest), giving (m-1)! trees.
    """
    vs = sorted(set(vertices))
    if not vs:
        raise ValueError("need at least one vertex")
    check_limit(len(vs), max_n)
    if len(vs) == 1:
        yield RootedTree(vs[0])
        return
    for picks in itertools.product(*(vs[:i] for i in range(1, len(vs)))):
        yield RootedTree(vs[0], dict(zip(vs[1:], picks)))


def count_supported_trees(g: Graph) -> int:
    """Number of increasing trees on g's vertex set supported by g.

    Runs over all (m-1)! parent vectors with bit masks, so it is the fast
    path behind the forest-counting invariants; it agrees with filtering
    increasing_trees by is_supported_by.
    """
    vs = sorted(g.vertices)
    m = len(vs)
    if m == 0:
        return 0
    if m == 1:
        return 1
    pos = {v: i for i, v in enumerate(vs)}
    adj = [0] * m
    for u, v in g.edges:
        adj[pos[u]] |= 1 << pos[v]
        adj[pos[v]] |= 1 << pos[u]
    total = 0
    for picks in itertools.product(*(range(i) for i in range(1, m))):
        # subtree masks accumulate bottom-up; children always have larger index
        sub = [1 << i for i in range(m)]
        for i in range(m - 1, 0, -1):
            p = picks[i - 1]
            d = sub[i]
            if not adj[p] & d:
                break
            sub[p] |= d
        else:
            total += 1
    return total


def supported_increasing_forests(g: Graph, q: int | None = None,
                                 max_n: int | None = None):
    """Stream the increasing forests whose components are supported by g.

    A forest qualifies when, for every component, the restriction of g to
    that component's vertex set supports the component tree.  With q given,
    only forests with exactly q components are yielded.  Order: canonical
    order of the underlying partition, then per-block tree enumeration
    order, the last block advancing fastest.
    """
    check_limit(len(g.vertices), max_n)
    for part in sorted(set_partitions_of(g.vertices)):
        if q is not None and len(part) != q:
            continue
        per_block = []
        for b in part.blocks:
            gb = g.restrict(b)
            trees = [t for t in increasing_trees(b) if t.is_supported_by(gb)]
            if not trees:
                break
            per_block.append(trees)
        else:
            for combo in itertools.product(*per_block):
                yield RootedForest(combo)
