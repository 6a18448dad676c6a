"""Shallow topological minors: embeddings, omega/chi over TM_r, and exact
induced subdivisions (ITM_r^e).

A TM_r embedding maps pattern vertices to distinct branch vertices and pattern
edges to internally disjoint paths with at most r internal vertices. The
induced variant demands exactly r internal vertices per path and that the
embedded subdivision appear with no extra edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .corpus import all_graphs, connected_graphs
from .errors import SizeCapError
from .graphs import Graph, induced_subgraph, subdivide_exact
from .invariants import clique_number
from .coloring import chromatic_number_value, _exists_coloring

HOST_CAP = 40
PATTERN_CAP = 8
ITM_HOST_CAP = 24


@dataclass(eq=False)
class TopoMinorEmbedding:
    """Branch map plus the internally disjoint path system realizing a pattern."""

    pattern: Graph
    branch_map: tuple
    paths: dict  # sorted pattern edge -> host vertex path, endpoints included

    def to_jsonable(self):
        return {
            "branch_map": list(self.branch_map),
            "paths": {f"{u},{v}": list(p) for (u, v), p in sorted(self.paths.items())},
        }


def validate_topo_embedding(g, emb, r, exact=False, induced=False):
    """Re-check an embedding: injectivity, endpoints, lengths, disjointness,
    and (for the induced variant) the absence of extra edges."""
    h = emb.pattern
    branch = emb.branch_map
    if len(branch) != h.n or len(set(branch)) != h.n:
        return False, "branch map is not injective"
    if any(not 0 <= b < g.n for b in branch):
        return False, "branch vertex outside host"
    if set(emb.paths) != h.edges:
        return False, "paths do not cover the pattern edge set"
    interiors = []
    for (u, v), p in sorted(emb.paths.items()):
        if p[0] != branch[u] or p[-1] != branch[v]:
            return False, f"path for ({u}, {v}) joins the wrong branch vertices"
        inner = list(p[1:-1])
        if exact and len(inner) != r:
            return False, f"path for ({u}, {v}) has {len(inner)} internal vertices, not {r}"
        if not exact and len(inner) > r:
            return False, f"path for ({u}, {v}) exceeds {r} internal vertices"
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                return False, f"({a}, {b}) along path ({u}, {v}) is not a host edge"
        if len(set(p)) != len(p):
            return False, f"path for ({u}, {v}) repeats a vertex"
        interiors.append(set(inner))
    branch_set = set(branch)
    seen = set()
    for inner in interiors:
        if inner & branch_set:
            return False, "path interior touches a branch vertex"
        if inner & seen:
            return False, "paths share an interior vertex"
        seen |= inner
    if induced:
        used = sorted(branch_set | seen)
        sub, verts = induced_subgraph(g, used)
        path_edges = set()
        for p in emb.paths.values():
            for a, b in zip(p, p[1:]):
                path_edges.add((min(a, b), max(a, b)))
        host_edges = {
            (min(verts[a], verts[b]), max(verts[a], verts[b])) for a, b in sub.edges
        }
        if host_edges != path_edges:
            return False, "embedded subdivision is not induced (extra host edges)"
    return True, None


def _paths_up_to(g, source, target, max_edges, blocked):
    """All simple source->target paths with <= max_edges edges avoiding `blocked`
    interiors, shortest first, deterministic order."""
    results = []

    def walk(pathv, used):
        last = pathv[-1]
        if last == target:
            results.append(tuple(pathv))
            return
        if len(pathv) > max_edges:
            return
        for nxt in sorted(g.adj[last]):
            if nxt == target:
                walk(pathv + [nxt], used)
            elif nxt not in used and nxt not in blocked and len(pathv) < max_edges:
                walk(pathv + [nxt], used | {nxt})

    walk([source], {source})
    results.sort(key=lambda p: (len(p), p))
    return results


def _bfs_distances(g, source):
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for x in frontier:
            for y in g.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    return dist


def find_topo_embedding(pattern, g, r, host_cap=HOST_CAP):
    """An embedding witnessing pattern in TM_r(g), or None (complete search)."""
    if g.n > host_cap:
        raise SizeCapError(f"topological-minor host capped at {host_cap} vertices")
    h = pattern
    if h.n > g.n:
        return None
    hdeg = [h.degree(v) for v in range(h.n)]
    order = sorted(range(h.n), key=lambda v: (-hdeg[v], v))
    candidates = {
        v: [x for x in range(g.n) if g.degree(x) >= hdeg[v]] for v in order
    }
    if any(not candidates[v] for v in order):
        return None
    edges = h.sorted_edges()
    dist = [_bfs_distances(g, s) for s in range(g.n)]
    # a complete pattern is vertex-transitive: fix ascending branch images
    symmetric = all(d == h.n - 1 for d in hdeg)

    branch = {}
    interior_budget = g.n - h.n

    def place(idx, interior_demand):
        # interior_demand: sum over placed pattern edges of (host distance - 1),
        # a lower bound on the interior vertices the disjoint paths must use
        if idx == len(order):
            if r == 1:
                return _route_depth1(g, h, branch)
            return route(0, frozenset(branch.values()), {})
        v = order[idx]
        floor = max(branch.values(), default=-1) if symmetric else -1
        for x in candidates[v]:
            if x <= floor or x in branch.values():
                continue
            demand = interior_demand
            ok = True
            for w in h.adj[v]:
                if w in branch:
                    d = dist[x][branch[w]]
                    if d < 0 or d > r + 1:
                        ok = False
                        break
                    demand += d - 1
            if not ok or demand > interior_budget:
                continue
            branch[v] = x
            result = place(idx + 1, demand)
            if result is not None:
                return result
            del branch[v]
        return None

    def route(eidx, used, paths):
        if eidx == len(edges):
            return dict(paths)
        u, v = edges[eidx]
        su, sv = branch[u], branch[v]
        blocked = (set(branch.values()) | set(used)) - {su, sv}
        for p in _paths_up_to(g, su, sv, r + 1, blocked):
            inner = set(p[1:-1])
            if inner & used:
                continue
            paths[(u, v)] = p
            result = route(eidx + 1, used | inner, paths)
            if result is not None:
                return result
            del paths[(u, v)]
        return None

    found = place(0, 0)
    if found is None:
        return None
    return TopoMinorEmbedding(
        pattern=h,
        branch_map=tuple(branch[v] for v in range(h.n)),
        paths=found,
    )


def _route_depth1(g, h, branch):
    """Exact routing for depth 1: host-adjacent pairs take the direct edge
    (never worse: it consumes no interior vertex), every other pattern edge
    needs its own middle vertex, which is a bipartite matching problem."""
    branch_set = set(branch.values())
    paths = {}
    need = []
    for u, v in h.sorted_edges():
        su, sv = branch[u], branch[v]
        if g.has_edge(su, sv):
            paths[(u, v)] = (su, sv)
        else:
            cands = sorted((g.adj[su] & g.adj[sv]) - branch_set)
            if not cands:
                return None
            need.append(((u, v), cands))
    need.sort(key=lambda t: (len(t[1]), t[0]))
    middle_of = {}
    edge_owner = {}

    def augment(idx, visited):
        for w in need[idx][1]:
            if w in visited:
                continue
            visited.add(w)
            if w not in edge_owner or augment(edge_owner[w], visited):
                edge_owner[w] = idx
                middle_of[idx] = w
                return True
        return False

    for idx in range(len(need)):
        if not augment(idx, set()):
            return None
    for idx, (edge, _cands) in enumerate(need):
        u, v = edge
        paths[edge] = (branch[u], middle_of[idx], branch[v])
    return paths


def find_subdivided_clique(g, k, r, host_cap=HOST_CAP, k_cap=PATTERN_CAP):
    """Embedding of some (<= r)-subdivision of K_k in g, or None."""
    if k > k_cap:
        raise SizeCapError(f"clique pattern capped at {k_cap} vertices, got {k}")
    pattern = Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])
    return find_topo_embedding(pattern, g, r, host_cap=host_cap)


def omega_TM(g, r, host_cap=HOST_CAP, k_cap=PATTERN_CAP):
    """Largest k with a (<= r)-subdivided K_k subgraph embedding in g."""
    best = 0
    k = 1
    while k <= min(g.n, k_cap):
        if sum(1 for v in range(g.n) if g.degree(v) >= k - 1) < k:
            break
        if find_subdivided_clique(g, k, r, host_cap=host_cap, k_cap=k_cap) is None:
            break
        best = k
        k += 1
    return best


def is_induced_exact_subdivision(h, r, g, host_cap=HOST_CAP):
    """Embedding witnessing that the exact r-subdivision of h is an induced
    subgraph of g, or None (backtracking induced-subgraph isomorphism)."""
    if g.n > host_cap:
        raise SizeCapError(f"induced-subdivision host capped at {host_cap} vertices")
    sub = subdivide_exact(h, r)
    if sub.n > g.n:
        return None
    # map the subdivision into g; order pattern vertices to stay connected
    sdeg = [sub.degree(v) for v in range(sub.n)]
    order = []
    placed = set()
    pending = sorted(range(sub.n), key=lambda v: (-sdeg[v], v))
    while pending:
        nxt = None
        for v in pending:
            if any(u in placed for u in sub.adj[v]):
                nxt = v
                break
        if nxt is None:
            nxt = pending[0]
        order.append(nxt)
        placed.add(nxt)
        pending.remove(nxt)
    mapping = {}
    used = set()

    def extend(idx):
        if idx == sub.n:
            return True
        v = order[idx]
        for x in range(g.n):
            if x in used or g.degree(x) < sdeg[v]:
                continue
            ok = True
            for u in sub.adj[v]:
                if u in mapping and not g.has_edge(mapping[u], x):
                    ok = False
                    break
            if ok:
                for u, y in mapping.items():
                    if not sub.has_edge(u, v) and g.has_edge(y, x):
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = x
            used.add(x)
            if extend(idx + 1):
                return True
            del mapping[v]
            used.remove(x)
        return False

    if not extend(0):
        return None
    branch = tuple(mapping[v] for v in range(h.n))
    chains = _subdivision_chains(h, r)
    paths = {
        e: tuple(mapping[x] for x in chain) for e, chain in chains.items()
    }
    return TopoMinorEmbedding(pattern=h, branch_map=branch, paths=paths)


def _subdivision_chains(h, r):
    from .graphs import subdivision_internal_vertices

    inner = subdivision_internal_vertices(h, r)
    return {
        (u, v): (u,) + inner[(u, v)] + (v,) for u, v in h.sorted_edges()
    }


@dataclass(frozen=True)
class ITMEnumeration:
    patterns: tuple
    max_average_degree: Fraction
    max_clique: int
    max_chromatic: int


def enumerate_ITM_exact(g, r, max_pattern_size, host_cap=ITM_HOST_CAP):
    """All patterns (up to isomorphism, up to the size cap) whose exact
    r-subdivision is induced in g, with the density statistics over them."""
    if g.n > host_cap:
        raise SizeCapError(f"ITM enumeration host capped at {host_cap} vertices")
    if max_pattern_size > PATTERN_CAP:
        raise SizeCapError(f"pattern size capped at {PATTERN_CAP}")
    found = []
    for size in range(1, max_pattern_size + 1):
        for h in all_graphs(size):
            if is_induced_exact_subdivision(h, r, g) is not None:
                found.append(h)
    max_ad = Fraction(0)
    max_om = 0
    max_chi = 0
    for h in found:
        if h.n:
            max_ad = max(max_ad, Fraction(2 * h.m, h.n))
        max_om = max(max_om, clique_number(h).value)
        max_chi = max(max_chi, chromatic_number_value(h))
    return ITMEnumeration(tuple(found), max_ad, max_om, max_chi)


_critical_cache = {}


CRITICAL_CATALOGUE_CAP = 8


def critical_patterns(chi, max_size):
    """Connected edge-critical graphs with chromatic number chi, up to max_size
    vertices. Any graph of chromatic number chi contains one as a subgraph, so
    these are the only patterns a chi-level TM query must try.

    Levels 1..3 have closed forms (a vertex, an edge, the odd cycles); level 4
    and up filters the corpus, which caps their size at 8 vertices.
    """
    key = (chi, max_size)
    if key in _critical_cache:
        return _critical_cache[key]
    if chi == 1:
        out = [Graph(1)] if max_size >= 1 else []
    elif chi == 2:
        out = [Graph(2, [(0, 1)])] if max_size >= 2 else []
    elif chi == 3:
        from .generators import cycle

        out = [cycle(k) for k in range(3, max_size + 1, 2)]
    else:
        if max_size > CRITICAL_CATALOGUE_CAP:
            raise SizeCapError(
                f"critical-pattern catalogue capped at {CRITICAL_CATALOGUE_CAP} "
                f"vertices for chromatic number {chi}"
            )
        out = []
        for size in range(chi, max_size + 1):
            for h in connected_graphs(size):
                if min(h.degree(v) for v in range(h.n)) < chi - 1:
                    continue
                if chromatic_number_value(h) != chi:
                    continue
                if all(
                    _exists_coloring(Graph(h.n, h.edges - {e}), chi - 1, "proper")
                    is not None
                    for e in h.sorted_edges()
                ):
                    out.append(h)
    _critical_cache[key] = out
    return out


@dataclass(frozen=True)
class ChiTMResult:
    value: int
    exact: bool  # False when the pattern-size cap may hide denser patterns
    cap: int


def chi_TM(g, r, max_pattern_size, host_cap=HOST_CAP):
    """max chi(H) over patterns H in TM_r(g) with |H| <= max_pattern_size.

    Climbs chromatic levels: level c+1 is reachable iff some edge-critical
    (c+1)-chromatic pattern embeds, because TM membership is closed under
    pattern subgraphs. Exact when the size cap covers the host; otherwise an
    honest lower bound, flagged in the result.
    """
    cap = min(max_pattern_size, g.n)
    if g.n == 0:
        return ChiTMResult(0, True, cap)
    host_chi = chromatic_number_value(g)
    value = 1
    if cap >= g.n:
        value = max(value, host_chi)
    while True:
        nxt = value + 1
        # a pattern of chromatic number nxt needs nxt branch vertices of degree >= nxt-1
        if sum(1 for v in range(g.n) if g.degree(v) >= nxt - 1) < nxt:
            break
        # reaching chromatic level nxt needs at least nxt - host_chi subdivided
        # edges, each eating a distinct interior vertex, which bounds |H|
        size_bound = min(cap, g.n - max(0, nxt - host_chi))
        if nxt > 3 and size_bound > CRITICAL_CATALOGUE_CAP:
            raise SizeCapError(
                f"chi_TM at level {nxt} would need patterns up to {size_bound} "
                f"vertices; the catalogue stops at {CRITICAL_CATALOGUE_CAP}"
            )
        hit = False
        for h in critical_patterns(nxt, size_bound):
            if find_topo_embedding(h, g, r, host_cap=host_cap) is not None:
                hit = True
                break
        if not hit:
            break
        value = nxt
    return ChiTMResult(value, max_pattern_size >= g.n, cap)
