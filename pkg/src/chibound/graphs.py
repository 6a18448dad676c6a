"""Immutable graph and digraph types plus the structural operators built on them.

Vertices are dense 0-based integers. Subdivision vertices are appended after
the original vertices in a fixed order (edges sorted, then position along the
path) so that certificates and serializations are stable across runs.
"""

from __future__ import annotations

from .errors import ParameterError, SizeCapError, ValidationError

ORIENTATION_EDGE_CAP = 20


def _normalize_edge(u, v):
    return (u, v) if u < v else (v, u)


class Graph:
    """Finite simple undirected graph. Immutable after construction."""

    __slots__ = ("n", "edges", "adj", "adj_bits")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValidationError(f"vertex count must be non-negative, got {n}")
        seen = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValidationError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge {e!r} has an endpoint outside 0..{n - 1}")
            e = _normalize_edge(u, v)
            if e in seen:
                raise ValidationError(f"duplicate edge {e!r}")
            seen.add(e)
        adj = [set() for _ in range(n)]
        for u, v in seen:
            adj[u].add(v)
            adj[v].add(u)
        bits = [0] * n
        for u, v in seen:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(seen))
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in adj))
        object.__setattr__(self, "adj_bits", tuple(bits))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self):
        return len(self.edges)

    def has_edge(self, u, v):
        return _normalize_edge(u, v) in self.edges

    def degree(self, v):
        return len(self.adj[v])

    def neighbors(self, v):
        return self.adj[v]

    def sorted_edges(self):
        return sorted(self.edges)

    def vertices(self):
        return range(self.n)

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Digraph:
    """Loopless directed graph; an oriented graph additionally has no 2-cycles."""

    __slots__ = ("n", "arcs", "out_adj", "in_adj", "out_bits", "in_bits")

    def __init__(self, n, arcs=()):
        if n < 0:
            raise ValidationError(f"vertex count must be non-negative, got {n}")
        seen = set()
        for a in arcs:
            u, v = a
            if u == v:
                raise ValidationError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"arc {a!r} has an endpoint outside 0..{n - 1}")
            a = (u, v)
            if a in seen:
                raise ValidationError(f"duplicate arc {a!r}")
            seen.add(a)
        out_adj = [set() for _ in range(n)]
        in_adj = [set() for _ in range(n)]
        out_bits = [0] * n
        in_bits = [0] * n
        for u, v in seen:
            out_adj[u].add(v)
            in_adj[v].add(u)
            out_bits[u] |= 1 << v
            in_bits[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", frozenset(seen))
        object.__setattr__(self, "out_adj", tuple(frozenset(s) for s in out_adj))
        object.__setattr__(self, "in_adj", tuple(frozenset(s) for s in in_adj))
        object.__setattr__(self, "out_bits", tuple(out_bits))
        object.__setattr__(self, "in_bits", tuple(in_bits))

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    @property
    def m(self):
        return len(self.arcs)

    def has_arc(self, u, v):
        return (u, v) in self.arcs

    @property
    def is_oriented(self):
        return all((v, u) not in self.arcs for u, v in self.arcs)

    def underlying_graph(self):
        return Graph(self.n, {_normalize_edge(u, v) for u, v in self.arcs})

    def sorted_arcs(self):
        return sorted(self.arcs)

    def __eq__(self, other):
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, m={self.m})"


def induced_subgraph(g, vertices):
    """Induced subgraph on `vertices` plus the new->old index mapping."""
    verts = sorted(set(vertices))
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return Graph(len(verts), edges), verts


def disjoint_union(graphs):
    """Disjoint union; vertex blocks follow the input order."""
    n = 0
    edges = []
    for g in graphs:
        edges.extend((u + n, v + n) for u, v in g.sorted_edges())
        n += g.n
    return Graph(n, edges)


def subdivide(g, profile):
    """Subdivide each edge e by profile[e] vertices.

    The profile must cover exactly the edge set of g. Original vertices keep
    their indices; internal vertices of each subdivided edge are numbered
    consecutively, edges processed in sorted order, positions running from the
    smaller endpoint to the larger one.
    """
    prof = {_normalize_edge(*e): k for e, k in profile.items()}
    if set(prof) != g.edges:
        missing = g.edges - set(prof)
        extra = set(prof) - g.edges
        raise ParameterError(
            f"profile must cover the edge set exactly: missing {sorted(missing)}, "
            f"extraneous {sorted(extra)}"
        )
    if any(k < 0 for k in prof.values()):
        raise ParameterError("subdivision counts must be non-negative")
    edges = []
    next_id = g.n
    for u, v in g.sorted_edges():
        k = prof[(u, v)]
        chain = [u] + list(range(next_id, next_id + k)) + [v]
        next_id += k
        edges.extend(zip(chain, chain[1:]))
    return Graph(next_id, edges)


def subdivide_exact(g, p):
    """The p-subdivision: every edge replaced by a path with p internal vertices."""
    if p < 0:
        raise ParameterError("subdivision depth must be non-negative")
    return subdivide(g, {e: p for e in g.edges})


def subdivision_internal_vertices(g, p):
    """Map each edge of g to the internal-vertex chain it gets in subdivide_exact(g, p).

    Chains are listed from the smaller endpoint toward the larger one, matching
    subdivide_exact's numbering.
    """
    chains = {}
    next_id = g.n
    for u, v in g.sorted_edges():
        chains[(u, v)] = tuple(range(next_id, next_id + p))
        next_id += p
    return chains


def blow_up(g, k):
    """Lexicographic product g[K_k]: vertex v becomes a clique of k copies."""
    if k < 1:
        raise ParameterError("blow-up factor must be at least 1")
    edges = []
    for v in range(g.n):
        for i in range(k):
            for j in range(i + 1, k):
                edges.append((v * k + i, v * k + j))
    for u, v in g.sorted_edges():
        for i in range(k):
            for j in range(k):
                edges.append((u * k + i, v * k + j))
    return Graph(g.n * k, edges)


def power(g, d):
    """Graph power: join vertices at graph distance at most d."""
    if d < 1:
        raise ParameterError("power exponent must be at least 1")
    edges = set()
    for s in range(g.n):
        dist = {s: 0}
        frontier = [s]
        depth = 0
        while frontier and depth < d:
            depth += 1
            nxt = []
            for x in frontier:
                for y in g.adj[x]:
                    if y not in dist:
                        dist[y] = depth
                        nxt.append(y)
            frontier = nxt
        for t in dist:
            if t != s:
                edges.add(_normalize_edge(s, t))
    return Graph(g.n, edges)


def orientations(g):
    """Yield all 2^m orientations of g; refuses above ORIENTATION_EDGE_CAP edges."""
    if g.m > ORIENTATION_EDGE_CAP:
        raise SizeCapError(
            f"orientation enumeration is capped at {ORIENTATION_EDGE_CAP} edges, "
            f"got {g.m}"
        )
    edges = g.sorted_edges()
    for mask in range(1 << len(edges)):
        arcs = [
            (v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(edges)
        ]
        yield Digraph(g.n, arcs)


def acyclic_orientation(g, order):
    """Orient every edge from earlier to later in `order` (a vertex permutation)."""
    if sorted(order) != list(range(g.n)):
        raise ParameterError("order must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    arcs = [
        (u, v) if pos[u] < pos[v] else (v, u) for u, v in g.sorted_edges()
    ]
    return Digraph(g.n, arcs)


def connected_components(g):
    """Vertex lists of the connected components, each sorted, smallest vertex first."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g):
    return g.n <= 1 or len(connected_components(g)) == 1


def girth(g):
    """Length of a shortest cycle, or None for a forest (BFS from every vertex)."""
    best = None
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for y in g.adj[x]:
                    if y == parent[x]:
                        continue
                    if y in dist:
                        cycle_len = dist[x] + dist[y] + 1
                        if best is None or cycle_len < best:
                            best = cycle_len
                    else:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        nxt.append(y)
            frontier = nxt
            # BFS layers beyond best/2 cannot improve the bound from this root
            if best is not None and frontier and dist[frontier[0]] > best // 2:
                break
    return best
