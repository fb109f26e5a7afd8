"""Automorphism groups, orbits, quotient graphs, and tree actions.

Groups are materialized as explicit permutation lists, which is fine at
desk scale (the search bound keeps hosts small).  Permutations are dicts
vertex -> vertex over the host's vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAnAutomorphism, TooLarge
from .graph import Graph, edge_key
from .separation import make_separation

DEFAULT_AUT_BOUND = 12


def is_automorphism(g, perm):
    if sorted(perm) != list(g.vertices) or sorted(perm.values()) != list(g.vertices):
        return False
    return all(g.has_edge(perm[u], perm[v]) for u, v in g.edges)


def apply_to_edge(perm, e):
    return edge_key(perm[e[0]], perm[e[1]])


def apply_to_separation(a, perm):
    """Image of a separation under a host automorphism (same host)."""
    return make_separation(a.host,
                           {perm[v] for v in a.va},
                           {apply_to_edge(perm, e) for e in a.ea},
                           {perm[b] for b in a.boundary})


def compose(p, q):
    """p after q."""
    return {v: p[q[v]] for v in q}


def invert(p):
    return {w: v for v, w in p.items()}


def perm_key(g, perm):
    return tuple(perm[v] for v in g.vertices)


@dataclass(frozen=True)
class AutGroup:
    host: Graph
    generators: tuple  # small generating set, identity omitted
    elements: tuple    # every automorphism, identity first
    order: int

    def orbit_of_vertex(self, v):
        return frozenset(p[v] for p in self.elements)

    def orbit_of_edge(self, e):
        return frozenset(apply_to_edge(p, e) for p in self.elements)

    def stabilizer_of_vertex(self, v):
        return tuple(p for p in self.elements if p[v] == v)

    def is_free(self):
        """True iff no non-identity element fixes a vertex."""
        ident = {v: v for v in self.host.vertices}
        for p in self.elements:
            if p == ident:
                continue
            if any(p[v] == v for v in self.host.vertices):
                return False
        return True


def automorphism_group(g, max_vertices=DEFAULT_AUT_BOUND):
    """All adjacency-preserving vertex permutations, by backtracking.

    The search maps vertices one at a time, pruning candidates by degree
    and by adjacency to the already-mapped prefix.  Hosts above the
    vertex bound are refused rather than risking an exponential blowup.
    """
    n = len(g.vertices)
    if n > max_vertices:
        raise TooLarge("automorphism search bound exceeded",
                       witness={"vertices": n, "bound": max_vertices})
    vs = list(g.vertices)
    deg = {v: g.degree(v) for v in vs}
    found = []

    def extend(i, partial):
        if i == n:
            found.append(dict(partial))
            return
        v = vs[i]
        used = set(partial.values())
        for w in vs:
            if w in used or deg[w] != deg[v]:
                continue
            ok = True
            for j in range(i):
                u = vs[j]
                if g.has_edge(u, v) != g.has_edge(partial[u], w):
                    ok = False
                    break
            if ok:
                partial[v] = w
                extend(i + 1, partial)
                del partial[v]

    extend(0, {})
    found.sort(key=lambda p: perm_key(g, p))
    ident = {v: v for v in vs}
    assert found and found[0] == ident
    gens = _generating_subset(g, found)
    return AutGroup(g, tuple(gens), tuple(found), len(found))


def _generating_subset(g, elements):
    """Greedy small generating set reproducing every element."""
    ident = {v: v for v in g.vertices}
    have = {perm_key(g, ident)}
    gens = []
    for p in elements:
        if perm_key(g, p) in have:
            continue
        gens.append(p)
        frontier = [ident]
        have = {perm_key(g, ident)}
        while frontier:
            q = frontier.pop()
            for r in gens:
                s = compose(r, q)
                k = perm_key(g, s)
                if k not in have:
                    have.add(k)
                    frontier.append(s)
        if len(have) == len(elements):
            break
    return gens


def orbit_of_separation(a, elements):
    """Field-distinct images of a under a list of automorphisms, sorted."""
    seen = {}
    for p in elements:
        img = apply_to_separation(a, p)
        seen.setdefault(img.sort_key(), img)
    return [seen[k] for k in sorted(seen)]


@dataclass(frozen=True)
class QuotientGraph:
    host: Graph
    vertex_orbits: tuple  # sorted tuples of host vertices
    edge_orbits: tuple    # sorted tuples of host edges
    edges: tuple          # (orbit index, orbit index, multiplicity), i <= j

    @property
    def vertex_count(self):
        return len(self.vertex_orbits)


def quotient_graph(g, group):
    """G\\X: vertex orbits joined by edge orbits, loops and multiplicities
    kept explicit since quotients need not be simple."""
    vorbs = sorted({tuple(sorted(group.orbit_of_vertex(v))) for v in g.vertices})
    vindex = {}
    for i, orb in enumerate(vorbs):
        for v in orb:
            vindex[v] = i
    eorbs = sorted({tuple(sorted(group.orbit_of_edge(e))) for e in g.edges})
    counts = {}
    for orb in eorbs:
        u, v = orb[0]
        key = tuple(sorted((vindex[u], vindex[v])))
        counts[key] = counts.get(key, 0) + 1
    edges = tuple((i, j, m) for (i, j), m in sorted(counts.items()))
    return QuotientGraph(g, tuple(vorbs), tuple(eorbs), edges)


def tree_action_check(tree, group):
    """Check that the group permutes the family, induces tree
    automorphisms, and that vertex stabilizers fix their torsos.

    Returns {"ok": bool, "violations": [...]}; never raises.
    """
    fam = tree.family
    violations = []
    index = {}
    for i, a in enumerate(fam.elements):
        index[(a.sort_key(), fam.rank[i])] = i
    for gi, perm in enumerate(group.generators):
        image = {}
        for i, a in enumerate(fam.elements):
            img = apply_to_separation(a, perm)
            j = index.get((img.sort_key(), fam.rank[i]))
            if j is None:
                violations.append({
                    "kind": "missing-image",
                    "generator": gi,
                    "element": i,
                    "image": {"va": sorted(img.va), "ea": sorted(img.ea)},
                })
                continue
            image[i] = j
        if len(image) < len(fam.elements):
            continue
        for i in range(len(fam.elements)):
            if image[fam.comp[i]] != fam.comp[image[i]]:
                violations.append({"kind": "complement-not-respected",
                                   "generator": gi, "element": i})
        cmap = {}
        ok = True
        for ci, cls in enumerate(tree.classes):
            imgs = {tree.class_of[image[i]] for i in cls}
            if len(imgs) > 1:
                violations.append({"kind": "class-split",
                                   "generator": gi, "class": ci})
                ok = False
                continue
            if imgs:
                cmap[ci] = imgs.pop()
        if ok and cmap:
            before = {tuple(sorted((tree.class_of[i], tree.class_of[j])))
                      for i, j in tree.pairs}
            after = {tuple(sorted((cmap[a], cmap[b]))) for a, b in before
                     if a in cmap and b in cmap}
            if before != after:
                violations.append({"kind": "not-a-tree-automorphism",
                                   "generator": gi})
    for ci in range(len(tree.classes)):
        reg = tree.region(ci)
        for p in group.elements:
            if not tree.classes[ci]:
                continue
            stays = all(
                index.get((apply_to_separation(fam.elements[i], p).sort_key(),
                           fam.rank[i])) in tree.classes[ci]
                for i in tree.classes[ci])
            if stays:
                mapped_vs = {p[v] for v in reg.vertices}
                mapped_es = {apply_to_edge(p, e) for e in reg.edges}
                if mapped_vs != set(reg.vertices) or mapped_es != set(reg.edges):
                    violations.append({"kind": "stabilizer-moves-torso",
                                       "class": ci})
                    break
    return {"ok": not violations, "violations": violations}


def check_orbit_stabilizer(g, group):
    """Assert |orbit(v)| * |stab(v)| = |G| for every vertex."""
    for v in g.vertices:
        if len(group.orbit_of_vertex(v)) * len(group.stabilizer_of_vertex(v)) \
                != group.order:
            raise NotAnAutomorphism("orbit-stabilizer identity fails",
                                    witness=v)
    return True
