"""Group presentations in surface form, coset enumeration, and Cayley
graphs.

A presentation carries generators a_i, b_i (handle pairs), e_j (cone
generators with exponents m_j >= 2), f_k (boundary generators), optional
extra relators w_t^{n_t}, and the surface relator
[a1,b1]...[ap,bp] e1...er f1...fs.  Enumeration is a relator-tracing
coset enumeration over the trivial subgroup with coincidence merging;
the finished table is standardized by breadth-first renumbering so that
equal presentations always yield the identical table.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import BadExponent, MalformedInput, Overflow
from .graph import Graph, edge_key

DEFAULT_COSET_LIMIT = 10_000

# A word is a tuple of letters (generator name, +1 or -1).


def invert_word(w):
    return tuple((s, -p) for s, p in reversed(w))


def _reduced(w):
    for (s1, p1), (s2, p2) in zip(w, w[1:]):
        if s1 == s2 and p1 == -p2:
            return False
    return True


@dataclass(frozen=True)
class Presentation:
    generators: tuple            # symbol names, in declaration order
    power_relators: tuple        # (symbol, exponent >= 2)
    extra_relators: tuple        # (word, exponent >= 1)
    surface_relator: tuple       # word (may be empty)

    def __post_init__(self):
        names = set(self.generators)
        if len(names) != len(self.generators):
            raise MalformedInput("repeated generator name",
                                 witness=self.generators)
        for s, m in self.power_relators:
            if s not in names:
                raise MalformedInput("relator uses undeclared generator",
                                     witness=s)
            if m < 2:
                raise BadExponent("power relator exponent must be at least 2",
                                  witness={"generator": s, "exponent": m})
        for w, n in self.extra_relators:
            if n < 1:
                raise BadExponent("relator exponent must be positive",
                                  witness={"word": w, "exponent": n})
            if not w:
                raise MalformedInput("empty relator word")
            if not _reduced(w):
                raise MalformedInput("relator word is not reduced", witness=w)
            for s, p in w:
                if s not in names or p not in (1, -1):
                    raise MalformedInput("bad letter in relator",
                                         witness=(s, p))
        for s, p in self.surface_relator:
            if s not in names or p not in (1, -1):
                raise MalformedInput("bad letter in surface relator",
                                     witness=(s, p))

    def relator_words(self):
        """All defining relators, expanded to plain words."""
        out = []
        for s, m in self.power_relators:
            out.append(((s, 1),) * m)
        for w, n in self.extra_relators:
            out.append(tuple(w) * n)
        if self.surface_relator:
            out.append(tuple(self.surface_relator))
        return tuple(out)


def surface_presentation(p, m, s, extras=()):
    """Presentation with p handle pairs, cone exponents m, s boundary
    generators, and user-supplied extra relators (word, exponent)."""
    if p < 0 or s < 0:
        raise MalformedInput("counts must be non-negative", witness=(p, s))
    gens = []
    for i in range(1, p + 1):
        gens += ["a%d" % i, "b%d" % i]
    cone = ["e%d" % (j + 1) for j in range(len(m))]
    bound = ["f%d" % k for k in range(1, s + 1)]
    gens += cone + bound
    powers = tuple((cone[j], mj) for j, mj in enumerate(m))
    word = []
    for i in range(1, p + 1):
        a, b = "a%d" % i, "b%d" % i
        word += [(a, 1), (b, 1), (a, -1), (b, -1)]
    word += [(c, 1) for c in cone]
    word += [(f, 1) for f in bound]
    extra = []
    for w, n in extras:
        if isinstance(w, str):
            w = _parse_word(w)
        extra.append((tuple(w), n))
    return Presentation(tuple(gens), powers, tuple(extra), tuple(word))


_ATOM = re.compile(r"^(?:\(([^()]+)\)|([A-Za-z]\w*))(?:\^(-?\d+))?$")


def _parse_word(text):
    letters = []
    for piece in text.split("*"):
        piece = piece.strip()
        mm = re.fullmatch(r"([A-Za-z]\w*)(?:\^(-?\d+))?", piece)
        if not mm:
            raise MalformedInput("cannot parse word", witness=text)
        name, exp = mm.group(1), int(mm.group(2) or 1)
        if exp == 0:
            raise MalformedInput("zero exponent in word", witness=piece)
        sign = 1 if exp > 0 else -1
        letters += [(name, sign)] * abs(exp)
    return tuple(letters)


def _parse_relator(tok):
    """One relator token: name, name^n, or (word)^n -> (word, exponent)."""
    mm = _ATOM.match(tok.strip())
    if not mm:
        raise MalformedInput("cannot parse relator", witness=tok)
    inner, name, exp = mm.groups()
    n = int(exp) if exp is not None else 1
    word = _parse_word(inner) if inner is not None else ((name, 1),)
    if n < 0:
        word, n = invert_word(word), -n
    return word, n


def parse_presentation(text):
    """Parse the presentation exchange format.

    Either `gens: a b` / `rels: a^2, b^3, (a*b)^3` sections (newline or
    ';' separated), or the shorthand `surface(p, [m...], s)`, which may
    be followed by a rels section adding extra relators.
    """
    gens = None
    rels = []
    base = None
    parts = []
    for raw in text.replace(";", "\n").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            parts.append(line)
    for line in parts:
        if line.startswith("surface(") and line.endswith(")"):
            if base is not None or gens is not None:
                raise MalformedInput("conflicting presentation sections",
                                     witness=line)
            body = line[len("surface("):-1]
            mm = re.fullmatch(
                r"\s*(\d+)\s*,\s*\[([\d\s,]*)\]\s*,\s*(\d+)\s*", body)
            if not mm:
                raise MalformedInput("cannot parse surface shorthand",
                                     witness=line)
            p = int(mm.group(1))
            ms = tuple(int(x) for x in mm.group(2).split(",") if x.strip())
            s = int(mm.group(3))
            base = (p, ms, s)
        elif line.startswith("gens:"):
            if gens is not None or base is not None:
                raise MalformedInput("conflicting presentation sections",
                                     witness=line)
            gens = tuple(line[len("gens:"):].split())
            if not gens:
                raise MalformedInput("no generators declared")
        elif line.startswith("rels:"):
            body = line[len("rels:"):].strip()
            if body:
                rels += [_parse_relator(t) for t in body.split(",")]
        else:
            raise MalformedInput("unrecognized presentation line",
                                 witness=line)
    if base is not None:
        return surface_presentation(base[0], base[1], base[2], extras=rels)
    if gens is None:
        raise MalformedInput("presentation needs gens: or surface(...)")
    # plain form: power relators are recognized for the invariant check,
    # everything else is an extra relator
    powers = []
    extras = []
    for word, n in rels:
        if len(word) == 1 and word[0][1] == 1 and n >= 2:
            powers.append((word[0][0], n))
        else:
            extras.append((word, n))
    return Presentation(tuple(gens), tuple(powers), tuple(extras), ())


@dataclass(frozen=True)
class GroupTable:
    order: int
    generators: tuple
    identity: int
    mult: dict    # (element, generator name) -> element, right action

    def __post_init__(self):
        inv = {}
        for s in self.generators:
            images = [self.mult[(g, s)] for g in range(self.order)]
            assert sorted(images) == list(range(self.order)), \
                "generator must act as a permutation"
            for g, h in enumerate(images):
                inv[(h, s)] = g
        object.__setattr__(self, "_inv", inv)

    def act_letter(self, g, letter):
        s, p = letter
        return self.mult[(g, s)] if p == 1 else self._inv[(g, s)]

    def act_word(self, g, word):
        for letter in word:
            g = self.act_letter(g, letter)
        return g

    def element_words(self):
        """Shortest right-multiplication word from the identity to each
        element, breadth-first in generator order (deterministic)."""
        words = {self.identity: ()}
        frontier = [self.identity]
        letters = [(s, 1) for s in self.generators]
        letters += [(s, -1) for s in self.generators]
        while frontier:
            nxt = []
            for g in frontier:
                for letter in letters:
                    h = self.act_letter(g, letter)
                    if h not in words:
                        words[h] = words[g] + (letter,)
                        nxt.append(h)
            frontier = nxt
        assert len(words) == self.order, "generators must generate"
        return words


def coset_enumerate(pr, limit=DEFAULT_COSET_LIMIT):
    """Enumerate the group of pr over the trivial subgroup.

    Completes with a GroupTable when the group is finite with order at
    most `limit`; raises Overflow otherwise.  Overflow never proves the
    group infinite, it only reports the search bound.  The working table
    may transiently hold more cosets than the final order, so the hard
    definition cap is 2*limit + 32.
    """
    if limit < 1:
        raise MalformedInput("limit must be positive", witness=limit)
    gens = pr.generators
    nsym = 2 * len(gens)
    code = {}
    for i, s in enumerate(gens):
        code[(s, 1)] = 2 * i
        code[(s, -1)] = 2 * i + 1
    relators = [tuple(code[l] for l in w) for w in pr.relator_words()]

    cap = 2 * limit + 32
    table = [[None] * nsym]
    parent = [0]

    def find(a):
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    def entry(a, s):
        v = table[a][s]
        if v is None:
            return None
        r = find(v)
        table[a][s] = r
        return r

    pending = []

    def set_entry(a, s, b):
        table[a][s] = b
        back = entry(b, s ^ 1)
        if back is None:
            table[b][s ^ 1] = a
        elif back != a:
            pending.append((back, a))

    def define(a, s):
        if len(table) >= cap:
            raise Overflow("coset limit exceeded",
                           witness={"limit": limit, "defined": len(table)})
        b = len(table)
        table.append([None] * nsym)
        parent.append(b)
        set_entry(a, s, b)
        return b

    def merge_queue():
        while pending:
            a, b = pending.pop()
            a, b = find(a), find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            parent[b] = a
            row = table[b]
            table[b] = [None] * nsym
            for s in range(nsym):
                v = row[s]
                if v is None:
                    continue
                v = find(v)
                u = entry(a, s)
                if u is None:
                    set_entry(a, s, v if v != b else a)
                elif u != (a if v == b else v):
                    pending.append((u, a if v == b else v))

    alpha = 0
    while alpha < len(table):
        if find(alpha) != alpha:
            alpha += 1
            continue
        for w in relators:
            a = find(alpha)
            if a != alpha:
                break
            cur = a
            for s in w[:-1]:
                nxt = entry(cur, s)
                if nxt is None:
                    nxt = define(cur, s)
                cur = nxt
            cur, a = find(cur), find(alpha)
            t = entry(cur, w[-1])
            if t is None:
                set_entry(cur, w[-1], a)
            elif t != a:
                pending.append((t, a))
            merge_queue()
        if find(alpha) == alpha:
            for s in range(nsym):
                if entry(alpha, s) is None:
                    define(alpha, s)
            merge_queue()
        alpha += 1

    live = [a for a in range(len(table)) if find(a) == a]
    if len(live) > limit:
        raise Overflow("group order exceeds limit",
                       witness={"limit": limit, "order": len(live)})

    # breadth-first standardization from the identity coset
    start = find(0)
    label = {start: 0}
    order_of = [start]
    for a in order_of:
        for s in range(nsym):
            b = entry(a, s)
            assert b is not None, "finished table must be complete"
            if b not in label:
                label[b] = len(order_of)
                order_of.append(b)
    assert len(order_of) == len(live), "table must be connected"

    mult = {}
    for a in order_of:
        for i, s in enumerate(gens):
            mult[(label[a], s)] = label[entry(a, 2 * i)]
    tbl = GroupTable(len(live), gens, 0, mult)
    for w in pr.relator_words():
        for g in range(tbl.order):
            assert tbl.act_word(g, w) == g, \
                "relators must trace to the identity everywhere"
    return tbl


def cayley_graph(tbl, pr):
    """Cayley graph of the table on the presentation's generators.

    One undirected edge {g, g.x} per generator x; an involution thus
    contributes a single edge, and generators acting identically
    collapse (the graph is simple).  Generators equal to the identity
    would be loops and are skipped.
    """
    edges = set()
    for g in range(tbl.order):
        for s in tbl.generators:
            h = tbl.mult[(g, s)]
            if h != g:
                edges.add(edge_key(g, h))
    return Graph(tuple(range(tbl.order)), tuple(sorted(edges)))


def regular_action(tbl):
    """The action of the group on itself by left multiplication.

    Left translations commute with the right multiplications defining
    the Cayley edges, so each is a graph automorphism; the action is
    free and transitive (checked by callers on the graph side).
    """
    words = tbl.element_words()
    perms = []
    for h in range(tbl.order):
        perm = {g: tbl.act_word(h, words[g]) for g in range(tbl.order)}
        assert perm[tbl.identity] == h
        perms.append(perm)
    return tuple(perms)


def check_regular_action(tbl, graph):
    """Assert the left-regular action is simply transitive by graph
    automorphisms; returns the action."""
    from .symmetry import is_automorphism
    perms = regular_action(tbl)
    for h, perm in enumerate(perms):
        assert is_automorphism(graph, perm)
        fixed = [g for g in range(tbl.order) if perm[g] == g]
        if h == tbl.identity:
            assert len(fixed) == tbl.order
        else:
            assert not fixed, "non-identity translation must be free"
    assert {perm[tbl.identity] for perm in perms} == set(range(tbl.order)), \
        "action must be transitive"
    return perms
