"""Structure trees of nested separation families.

A family is a finite set of separations closed under complementation
such that every pair (A, B) satisfies at least one of A<=B, A<=B*,
A*<=B, A*<=B*.  Elements are compared by subgraph containment; two
distinct elements with identical subgraphs (which happens when a cut
vertex leaves exactly two components, so a minimal element coincides
with the complement of its twin) are ordered by an explicit rank so
that the order stays a strict partial order reversed by complementation.

Two elements are equivalent, A ~ B, when A < B* with nothing of the
family strictly between (and A ~ A).  The tree has the equivalence
classes as vertices and one edge per complement pair; the directed edge
of A runs from class(A*) to class(A), so A <= B exactly when the edge
of A lies on the directed path toward the edge of B.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import MalformedInput, NotNested
from .graph import Graph
from .separation import Separation, separation_complement


class NestedFamily:
    """Separation family with an explicit complement pairing and ranks."""

    def __init__(self, host, elements, comp, rank=None):
        self.host = host
        self.elements = tuple(elements)
        self.comp = tuple(comp)
        self.rank = tuple(rank) if rank is not None else (0,) * len(self.elements)
        self._validate()

    def __len__(self):
        return len(self.elements)

    def _validate(self):
        n = len(self.elements)
        if not (len(self.comp) == len(self.rank) == n):
            raise MalformedInput("family arrays disagree in length")
        for i in range(n):
            j = self.comp[i]
            if j == i or not (0 <= j < n) or self.comp[j] != i:
                raise MalformedInput("complement map is not a fixed-point-free "
                                     "involution", witness=i)
            want = separation_complement(self.elements[i])
            if self.elements[j].key != want.key:
                raise NotNested("paired element is not the complement",
                                witness={"element": i, "partner": j})
        for i in range(n):
            for j in range(i + 1, n):
                if not (self.leq(i, j) or self.leq(i, self.comp[j])
                        or self.leq(self.comp[i], j)
                        or self.leq(self.comp[i], self.comp[j])):
                    raise NotNested(
                        "pair fails the nesting condition",
                        witness={"a": list(self.elements[i].key),
                                 "b": list(self.elements[j].key)})

    def strict(self, i, j):
        if i == j:
            return False
        a, b = self.elements[i], self.elements[j]
        if a.subgraph_eq(b):
            return j != self.comp[i] and self.rank[i] < self.rank[j]
        return a.subgraph_leq(b)

    def leq(self, i, j):
        return i == j or self.strict(i, j)

    def sim(self, i, j):
        """A ~ B: A < B* with no family element strictly between."""
        if i == j:
            return True
        jc = self.comp[j]
        if not self.strict(i, jc):
            return False
        return not any(self.strict(i, k) and self.strict(k, jc)
                       for k in range(len(self.elements)))


@dataclass(frozen=True)
class StructureTree:
    family: NestedFamily
    classes: tuple          # frozensets of element indices
    pairs: tuple            # (i, comp[i]) with i < comp[i]
    class_of: tuple = field(init=False, repr=False, compare=False, hash=False,
                            default=None)
    _adj: dict = field(init=False, repr=False, compare=False, hash=False,
                       default=None)

    def __post_init__(self):
        lookup = [None] * len(self.family.elements)
        for ci, cls in enumerate(self.classes):
            for i in cls:
                lookup[i] = ci
        adj = {ci: [] for ci in range(len(self.classes))}
        for i, j in self.pairs:
            adj[lookup[i]].append(lookup[j])
            adj[lookup[j]].append(lookup[i])
        object.__setattr__(self, "class_of", tuple(lookup))
        object.__setattr__(self, "_adj", {c: tuple(sorted(n)) for c, n in adj.items()})

    @property
    def vertex_count(self):
        return len(self.classes)

    @property
    def edge_count(self):
        return len(self.pairs)

    def directed_edge(self, i):
        """Directed edge of element i: class(A*) -> class(A)."""
        return (self.class_of[self.family.comp[i]], self.class_of[i])

    def neighbors(self, ci):
        return self._adj[ci]

    def path(self, a, b):
        """Vertex path between two tree vertices."""
        prev = {a: None}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                break
            for y in self._adj[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        if b not in prev:
            return None
        out = [b]
        while out[-1] != a:
            out.append(prev[out[-1]])
        return tuple(reversed(out))

    def region(self, ci):
        """Intersection of the complements of the class members.

        For a cut-point class this is the cut vertex alone; for a block
        class it is the block.  The empty class yields the whole host.
        """
        fam = self.family
        members = sorted(self.classes[ci])
        va = set(fam.host.vertex_set)
        ea = set(fam.host.edge_set)
        for i in members:
            comp = fam.elements[fam.comp[i]]
            va &= comp.va
            ea &= comp.ea
        return Graph(tuple(sorted(va)), tuple(sorted(ea)))


def _sim_classes(family):
    n = len(family.elements)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if family.sim(i, j)]
    for i, j in pairs:
        parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    classes = sorted((frozenset(g) for g in groups.values()), key=min)
    for cls in classes:
        for i in cls:
            for j in cls:
                if not family.sim(i, j):
                    raise NotNested("equivalence closure is inconsistent",
                                    witness={"a": i, "b": j})
    return tuple(classes)


def build_structure_tree(family):
    """Build the tree of ~-classes; the edge of A joins class(A) to class(A*)."""
    if not family.elements:
        return StructureTree(family, (frozenset(),), ())
    classes = _sim_classes(family)
    lookup = {}
    for ci, cls in enumerate(classes):
        for i in cls:
            lookup[i] = ci
    pairs = tuple(sorted((i, family.comp[i]) for i in range(len(family.elements))
                         if i < family.comp[i]))
    tree = StructureTree(family, classes, pairs)
    if tree.edge_count != tree.vertex_count - 1:
        raise NotNested("class graph is not a tree",
                        witness={"vertices": tree.vertex_count,
                                 "edges": tree.edge_count})
    for ci in range(tree.vertex_count):
        if tree.path(0, ci) is None:
            raise NotNested("class graph is disconnected", witness=ci)
    return tree


def _coherent(tree, i, j):
    """Edge of i lies on the directed path toward the edge of j."""
    if i == j:
        return True
    fam = tree.family
    if j == fam.comp[i]:
        return False
    ti, hi = tree.directed_edge(i)
    tj, hj = tree.directed_edge(j)
    path = tree.path(ti, hj)
    return path is not None and len(path) >= 2 and path[1] == hi and path[-2] == tj


def verify_tree_correspondence(tree):
    """Recompute the correspondence and report any violation.

    Checks tree shape, the element/directed-edge bijection, and that the
    family order agrees with coherent directed paths in the tree.
    """
    fam = tree.family
    violations = []
    n = len(fam.elements)
    if n == 0:
        if tree.vertex_count != 1 or tree.edge_count != 0:
            violations.append("empty family must give a single-vertex tree")
        return {"ok": not violations, "violations": violations}
    if tree.edge_count * 2 != n:
        violations.append("directed edges do not biject with elements")
    if tree.edge_count != tree.vertex_count - 1:
        violations.append("edge count is not vertex count minus one")
    seen = set()
    for i, j in tree.pairs:
        if fam.comp[i] != j:
            violations.append("pair (%d,%d) is not a complement pair" % (i, j))
        seen.update((i, j))
    if seen != set(range(n)):
        violations.append("some element is missing from the edge pairing")
    try:
        classes = _sim_classes(fam)
    except NotNested as exc:
        violations.append("equivalence classes inconsistent: %s" % exc)
        classes = None
    if classes is not None and classes != tree.classes:
        violations.append("stored classes differ from recomputed ~-classes")
    for ci in range(tree.vertex_count):
        if tree.path(0, ci) is None:
            violations.append("tree is disconnected at class %d" % ci)
            break
    for i in range(n):
        for j in range(n):
            want = fam.leq(i, j)
            got = _coherent(tree, i, j)
            if want != got:
                violations.append(
                    "order/path mismatch for elements %d,%d (leq=%s path=%s)"
                    % (i, j, want, got))
    return {"ok": not violations, "violations": violations}


def family_from_sides(host, sides):
    """Family from representative sides: adds complements, dedupes by fields.

    Suitable when all sides are distinct as subgraphs (hinge families);
    use explicit element/rank lists for the tagged cut-vertex families.
    """
    by_key = {}
    for s in sides:
        for t in (s, separation_complement(s)):
            by_key.setdefault(t.key, t)
    elements = sorted(by_key.values(), key=lambda s: s.key)
    index = {s.key: i for i, s in enumerate(elements)}
    comp = tuple(index[separation_complement(s).key] for s in elements)
    return NestedFamily(host, elements, comp)
