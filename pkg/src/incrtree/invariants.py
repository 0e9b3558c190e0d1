"""Graph invariants organized by increasing supported trees and forests.

Three families, each with a brute-force route (the defining sum over edge
subsets) and a structured route (sums over increasing supported trees or
forests), kept deliberately independent so they can cross-check each other:

* the connected-subgraph polynomial: one term t^edges per connected
  spanning subgraph,
* the chromatic polynomial, via the signed spanning-subgraph expansion,
  via deletion-contraction, and via forest counts,
* power-sum coefficient maps of the chromatic symmetric function, keyed by
  integer partition (shape form) or by set partition of the vertex set
  (refined form).

All arithmetic is exact; coefficients are plain Python integers.
"""

from __future__ import annotations

import itertools

from .graphs import (Graph, NotConnectedError, SetPartition, check_limit,
                     edge, set_partitions_of)
from .trees import count_supported_trees, increasing_trees


class IntPoly:
    """Exact-integer polynomial in one variable, lowest degree first.

    Canonical form never has trailing zero coefficients, so equality of
    coefficient tuples is equality of polynomials.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls()

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def x_power(cls, k: int, coeff: int = 1) -> "IntPoly":
        return cls((0,) * k + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = IntPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, value: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * value + c
        return out

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"


# ---------------------------------------------------------------------------
# shared low-level subset scan


def _positions(g: Graph):
    vs = sorted(g.vertices)
    pos = {v: i for i, v in enumerate(vs)}
    es = [(pos[u], pos[v]) for u, v in sorted(g.edges)]
    return vs, es


def _scan_components(n: int, es, visit):
    """Run visit(mask, roots) over every edge subset with union-find roots.

    roots[i] is the representative of vertex position i for the subset mask;
    visit gets called once per mask in ascending order.
    """
    m = len(es)
    for mask in range(1 << m):
        parent = list(range(n))
        mm = mask
        while mm:
            low = mm & -mm
            mm ^= low
            a, b = es[low.bit_length() - 1]
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            if a != b:
                parent[a] = b
        roots = [0] * n
        for i in range(n):
            r = i
            while parent[r] != r:
                r = parent[r]
            roots[i] = r
        visit(mask, roots)


# ---------------------------------------------------------------------------
# connected-subgraph polynomial


def connected_subgraph_poly(g: Graph, max_n: int | None = None) -> IntPoly:
    """Edge-count generating polynomial of the connected spanning subgraphs.

    Exhaustive defining sum: one t^k term per connected spanning subgraph
    with k edges.  Cost grows as 2^edges.
    """
    if not g.is_connected():
        raise NotConnectedError("the connected-subgraph polynomial needs a connected graph")
    check_limit(len(g.vertices), max_n)
    vs, es = _positions(g)
    n = len(vs)
    counts = [0] * (len(es) + 1)

    def visit(mask, roots):
        if len(set(roots)) == 1:
            counts[mask.bit_count()] += 1

    _scan_components(n, es, visit)
    return IntPoly(counts)


def connected_subgraph_poly_from_trees(g: Graph, max_n: int | None = None) -> IntPoly:
    """Same polynomial assembled from increasing supported trees.

    Each supported tree contributes the product over its non-root vertices
    of (1+t)^choices - 1, where choices counts the attachment edges present
    in g; the products telescope exactly over the fibers of ``skeleton``.
    """
    if not g.is_connected():
        raise NotConnectedError("the connected-subgraph polynomial needs a connected graph")
    one = IntPoly.one()
    one_plus_t = IntPoly((1, 1))
    total = IntPoly.zero()
    for tree in increasing_trees(g.vertices, max_n):
        term = one
        for v in sorted(tree.parent):
            c = len(tree.attachment_edges(v) & g.edges)
            if c == 0:
                term = None
                break
            term = term * (one_plus_t ** c - one)
        if term is not None:
            total = total + term
    return total


# ---------------------------------------------------------------------------
# chromatic polynomial


def chromatic_poly_by_subsets(g: Graph, max_n: int | None = None) -> IntPoly:
    """Chromatic polynomial via the signed spanning-subgraph expansion.

    Every edge subset contributes (-1)^edges x^components.  Works for
    disconnected graphs; cost grows as 2^edges.
    """
    check_limit(len(g.vertices), max_n)
    vs, es = _positions(g)
    n = len(vs)
    coeffs = [0] * (n + 1)

    def visit(mask, roots):
        c = len(set(roots))
        coeffs[c] += -1 if mask.bit_count() & 1 else 1

    _scan_components(n, es, visit)
    return IntPoly(coeffs)


def chromatic_poly_by_deletion_contraction(g: Graph) -> IntPoly:
    """Chromatic polynomial via deletion and contraction.

    Contracts onto the smaller endpoint and discards parallel edges; the
    second, structurally unrelated oracle route next to the subset
    expansion.
    """

    def chi(vertices: frozenset, edges: frozenset) -> IntPoly:
        if not edges:
            return IntPoly.x_power(len(vertices))
        u, v = min(edges)
        deleted = edges - {(u, v)}
        contracted = set()
        for a, b in deleted:
            if a == v:
                a = u
            if b == v:
                b = u
            contracted.add(edge(a, b))
        return chi(vertices, deleted) - chi(vertices - {v}, frozenset(contracted))

    return chi(g.vertices, g.edges)


def chromatic_poly_from_forests(g: Graph) -> IntPoly:
    """Chromatic polynomial from increasing supported forest counts.

    The coefficient of x^q is (-1)^(n-q) times the number of increasing
    supported forests with q components.
    """
    n = len(g.vertices)
    coeffs = [0] * (n + 1)
    for q, count in supported_forest_counts(g).items():
        coeffs[q] = count if (n - q) % 2 == 0 else -count
    return IntPoly(coeffs)


def supported_forest_counts(g: Graph) -> dict[int, int]:
    """Map q -> number of increasing supported forests with q components.

    Splits off the block containing the minimum vertex and recurses over
    the rest; per-block tree counts are memoized by vertex subset, so the
    whole table costs about 3^n block choices.
    """
    tree_count: dict[frozenset, int] = {}

    def trees_on(block: frozenset) -> int:
        if block not in tree_count:
            tree_count[block] = count_supported_trees(g.restrict(block))
        return tree_count[block]

    split_memo: dict[frozenset, dict[int, int]] = {}

    def split(subset: frozenset) -> dict[int, int]:
        if not subset:
            return {0: 1}
        if subset in split_memo:
            return split_memo[subset]
        lead = min(subset)
        rest = sorted(subset - {lead})
        out: dict[int, int] = {}
        for k in range(len(rest) + 1):
            for extra in itertools.combinations(rest, k):
                block = frozenset((lead,) + extra)
                ways = trees_on(block)
                if not ways:
                    continue
                for q, c in split(subset - block).items():
                    out[q + 1] = out.get(q + 1, 0) + ways * c
        split_memo[subset] = out
        return out

    return split(frozenset(g.vertices))


# ---------------------------------------------------------------------------
# chromatic symmetric function, power-sum coefficients


def csf_y_from_forests(g: Graph) -> dict[SetPartition, int]:
    """Refined power-sum coefficients keyed by set partition of the vertices.

    The coefficient at a partition pi is (-1)^(n - blocks) times the number
    of increasing supported forests splitting the vertex set exactly as pi;
    zero coefficients are omitted.
    """
    n = len(g.vertices)
    tree_count: dict[frozenset, int] = {}

    def trees_on(block) -> int:
        key = frozenset(block)
        if key not in tree_count:
            tree_count[key] = count_supported_trees(g.restrict(key))
        return tree_count[key]

    out: dict[SetPartition, int] = {}
    for part in set_partitions_of(g.vertices):
        ways = 1
        for b in part.blocks:
            ways *= trees_on(b)
            if not ways:
                break
        if ways:
            out[part] = ways if (n - len(part)) % 2 == 0 else -ways
    return out


def csf_y_by_subsets(g: Graph, max_n: int | None = None) -> dict[SetPartition, int]:
    """Oracle route: signed sum over all edge subsets grouped by component
    partition.  Cost grows as 2^edges."""
    check_limit(len(g.vertices), max_n)
    vs, es = _positions(g)
    n = len(vs)
    acc: dict[tuple, int] = {}

    def visit(mask, roots):
        blocks: dict[int, list[int]] = {}
        for i in range(n):
            blocks.setdefault(roots[i], []).append(vs[i])
        key = tuple(tuple(b) for b in blocks.values())
        acc[key] = acc.get(key, 0) + (-1 if mask.bit_count() & 1 else 1)

    _scan_components(n, es, visit)
    return {SetPartition(key): c for key, c in sorted(acc.items()) if c}


def csf_x_from_forests(g: Graph) -> dict[tuple[int, ...], int]:
    """Power-sum coefficients keyed by block-size partition.

    The coefficient at a shape lambda is (-1)^(n - parts) times the number
    of increasing supported forests whose component sizes are lambda.
    """
    out: dict[tuple[int, ...], int] = {}
    for part, coeff in csf_y_from_forests(g).items():
        shape = part.shape()
        out[shape] = out.get(shape, 0) + coeff
    return {shape: c for shape, c in out.items() if c}


def collapse_by_shape(terms: dict[SetPartition, int]) -> dict[tuple[int, ...], int]:
    """Collapse set-partition-keyed coefficients onto their shapes."""
    out: dict[tuple[int, ...], int] = {}
    for part, coeff in terms.items():
        shape = part.shape()
        out[shape] = out.get(shape, 0) + coeff
    return {shape: c for shape, c in out.items() if c}


def csf_x_by_subsets(g: Graph, max_n: int | None = None) -> dict[tuple[int, ...], int]:
    return collapse_by_shape(csf_y_by_subsets(g, max_n))
