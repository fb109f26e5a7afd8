"""Planarity with certificates, rotation systems, faces, and the
face-preservation test for graph automorphisms.

Planarity itself is delegated to networkx (left-right algorithm), which
yields either a clockwise rotation system or a Kuratowski subgraph; face
tracing, Euler checking, and everything downstream is done here so the
certificates stay independently checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import networkx as nx

from .errors import MalformedInput, NotAnAutomorphism, NotConnected, PreconditionViolated
from .graph import Graph, edge_key, is_connected, is_three_connected_by_cutsets
from .symmetry import is_automorphism


@dataclass(frozen=True)
class RotationSystem:
    host: Graph
    rotation: dict  # vertex -> cyclic tuple of incident edges

    def __post_init__(self):
        for v in self.host.vertices:
            around = self.rotation.get(v, ())
            if sorted(around) != sorted(self.host.incident_edges(v)):
                raise MalformedInput(
                    "rotation at a vertex must permute its incident edges",
                    witness=v)

    def next_dart(self, u, v):
        """Dart following (u, v) on the face to its left: turn sharp
        left at v, i.e. take the successor of uv in v's rotation."""
        around = self.rotation[v]
        i = around.index(edge_key(u, v))
        e = around[(i + 1) % len(around)]
        w = e[0] if e[1] == v else e[1]
        return (v, w)


def rotation_from_neighbors(g, neighbor_order):
    """RotationSystem from a vertex -> ordered neighbor list map."""
    rot = {v: tuple(edge_key(v, w) for w in neighbor_order.get(v, ()))
           for v in g.vertices}
    return RotationSystem(g, rot)


def canonical_face(walk):
    """Cyclic sequence minimal under rotation and reversal."""
    n = len(walk)
    if n == 0:
        return ()
    best = None
    for seq in (tuple(walk), tuple(reversed(walk))):
        for i in range(n):
            cand = seq[i:] + seq[:i]
            if best is None or cand < best:
                best = cand
    return best


def facial_walks(r):
    """Closed walks partitioning the darts, traced by the sharp-left rule.

    Each walk is the vertex sequence (one entry per dart).  An edgeless
    host gets the single empty outer face so Euler counts stay honest.
    """
    g = r.host
    if not g.edges:
        return (((),) if len(g.vertices) else ())
    remaining = set()
    for u, v in g.edges:
        remaining.add((u, v))
        remaining.add((v, u))
    walks = []
    while remaining:
        start = min(remaining)
        dart = start
        walk = []
        while True:
            remaining.remove(dart)
            walk.append(dart[0])
            dart = r.next_dart(*dart)
            if dart == start:
                break
        walks.append(tuple(walk))
    total = sum(len(w) for w in walks)
    assert total == 2 * len(g.edges), "faces must partition the darts"
    return tuple(walks)


def euler_genus(r):
    """Genus of the surface the rotation system describes; 0 is planar."""
    f = len(facial_walks(r))
    v = len(r.host.vertices)
    e = len(r.host.edges)
    two_minus_two_g = v - e + f
    assert (2 - two_minus_two_g) % 2 == 0
    return (2 - two_minus_two_g) // 2


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: RotationSystem | None
    faces: tuple | None      # canonicalized facial walks
    witness: Graph | None    # Kuratowski subdivision when nonplanar

    @property
    def face_count(self):
        return len(self.faces) if self.faces is not None else None


def _to_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def planarity_test(g):
    """Embed g in the sphere or refute with a Kuratowski subdivision.

    Embeddings come with their faces and are Euler-checked; witnesses
    are returned as host subgraphs so callers can verify them on their
    own terms.
    """
    if not is_connected(g):
        raise NotConnected("planarity certificates assume a connected host")
    ok, cert = nx.check_planarity(_to_networkx(g), counterexample=True)
    if not ok:
        ws = Graph(tuple(sorted(cert.nodes())),
                   tuple(sorted(edge_key(u, v) for u, v in cert.edges())))
        assert ws.edge_set <= g.edge_set
        return PlanarityResult(False, None, None, ws)
    data = cert.get_data()  # vertex -> neighbors in clockwise order
    rot = rotation_from_neighbors(g, data)
    walks = facial_walks(rot)
    faces = tuple(sorted(canonical_face(w) for w in walks))
    assert len(g.vertices) - len(g.edges) + len(faces) == 2, \
        "sphere embeddings satisfy Euler's formula"
    return PlanarityResult(True, rot, faces, None)


def apply_to_face(perm, face):
    return canonical_face(tuple(perm[v] for v in face))


def facial_preservation_check(r, sigma):
    """True iff sigma maps every facial walk of r to a facial walk of r
    (as cyclic sequences up to rotation and reversal)."""
    if not is_automorphism(r.host, sigma):
        raise NotAnAutomorphism("sigma does not preserve the host",
                                witness=sigma)
    faces = {canonical_face(w) for w in facial_walks(r)}
    return all(apply_to_face(sigma, f) in faces for f in faces)


def face_size_multiset(g):
    res = planarity_test(g)
    if not res.planar:
        raise PreconditionViolated("host is not planar")
    return tuple(sorted(len(f) for f in res.faces))


def face_multiset_uniqueness_check(g):
    """Check that every vertex relabeling embeds with the same face-size
    multiset (the sphere embedding of a 3-connected planar graph is
    essentially unique).

    Relabelings sharing an edge set reuse one embedding, so the work is
    |V|! / |Aut(g)| planarity calls rather than |V|!.
    """
    if not (is_three_connected_by_cutsets(g) and len(g.vertices) <= 10):
        raise PreconditionViolated(
            "uniqueness check needs a 3-connected host with at most 10 vertices")
    base = face_size_multiset(g)
    vs = g.vertices
    seen = {}
    relabelings = 0
    for perm in permutations(vs):
        mapping = dict(zip(vs, perm))
        edges = tuple(sorted(edge_key(mapping[u], mapping[v])
                             for u, v in g.edges))
        relabelings += 1
        if edges in seen:
            continue
        seen[edges] = face_size_multiset(Graph(vs, edges))
    distinct = set(seen.values())
    assert distinct == {base}, "face multiset must not depend on labels"
    return {
        "face_multiset": base,
        "relabelings": relabelings,
        "distinct_edge_sets": len(seen),
        "ok": True,
    }
