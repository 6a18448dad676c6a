"""Exact coloring solvers and their certificate checkers.

chromatic_number, star_chromatic_number, and chi_p run iterative deepening
over the number of colors with a shared backtracking engine: saturation-first
vertex selection, ascending colors, and first-use symmetry breaking, so
witnesses are deterministic. Validators re-check certificates by brute
enumeration of the defining property and share none of the search pruning.

Definitions in force:
- star coloring: proper and every 4-vertex path sees at least 3 colors;
- depth-p coloring (chi_p): every union of at most p color classes induces a
  subgraph of tree-depth at most the number of classes taken.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ParameterError, SizeCapError, ValidationError
from .graphs import induced_subgraph, subdivide_exact, subdivision_internal_vertices
from .invariants import InvariantResult, clique_number
from .treedepth import TreedepthSolver

CHROMATIC_CAP = 32
STAR_CAP = 14
CHI_P_CAP = {2: 14}
CHI_P_CAP_DEFAULT = 12


@dataclass(frozen=True)
class Coloring:
    """Vertex coloring plus the guarantee kind it certifies."""

    assignment: tuple
    num_colors: int
    kind: str  # "proper" | "star" | "chi_p"
    p: int | None = None

    def color_classes(self):
        classes = [[] for _ in range(self.num_colors)]
        for v, c in enumerate(self.assignment):
            classes[c].append(v)
        return classes

    def to_jsonable(self):
        return {
            "assignment": list(self.assignment),
            "num_colors": self.num_colors,
            "kind": self.kind,
            "p": self.p,
        }


def _normalize(assignment):
    """Renumber colors by first occurrence so colors are 0..k-1, all used."""
    remap = {}
    out = []
    for c in assignment:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return tuple(out), len(remap)


def make_coloring(assignment, kind, p=None):
    norm, k = _normalize(tuple(assignment))
    return Coloring(norm, k, kind, p)


def _check_structure(g, coloring):
    if len(coloring.assignment) != g.n:
        raise ValidationError("assignment must cover every vertex")
    used = set(coloring.assignment)
    if g.n and used != set(range(coloring.num_colors)):
        raise ValidationError("colors must be 0..num_colors-1 with every color used")


def _first_monochromatic_edge(g, colors):
    for u, v in g.sorted_edges():
        if colors[u] == colors[v]:
            return (u, v)
    return None


def _first_bicolored_p4(g, colors):
    # middle edge (b, c); ends a, d; bicolored means colors alternate abab
    for b, c in g.sorted_edges():
        for a in sorted(g.adj[b]):
            if a == c or colors[a] != colors[c]:
                continue
            for d in sorted(g.adj[c]):
                if d in (a, b) or colors[d] != colors[b]:
                    continue
                return (a, b, c, d)
    return None


def validate_coloring(g, coloring):
    """Check a coloring against its declared kind.

    Returns (True, None) or (False, witness); the witness names the violating
    edge, 4-vertex path, or color subset.
    """
    _check_structure(g, coloring)
    colors = coloring.assignment
    edge = _first_monochromatic_edge(g, colors)
    if edge is not None:
        return False, ("monochromatic_edge", edge)
    if coloring.kind == "proper" or (coloring.kind == "chi_p" and coloring.p == 1):
        return True, None
    if coloring.kind == "star":
        p4 = _first_bicolored_p4(g, colors)
        if p4 is not None:
            return False, ("bicolored_path", p4)
        return True, None
    if coloring.kind == "chi_p":
        p = coloring.p
        if p is None or p < 1:
            raise ValidationError("chi_p coloring needs its parameter p")
        solver = TreedepthSolver(g)
        masks = [0] * coloring.num_colors
        for v, c in enumerate(colors):
            masks[c] |= 1 << v
        used = range(coloring.num_colors)
        for size in range(2, min(p, coloring.num_colors) + 1):
            for subset in combinations(used, size):
                mask = 0
                for c in subset:
                    mask |= masks[c]
                if not solver.td_at_most(mask, size):
                    return False, ("subset_treedepth", subset)
        return True, None
    raise ValidationError(f"unknown coloring kind {coloring.kind!r}")


def _star_ok(nbrs, a, v, c):
    """Would coloring v with c create a bicolored 4-vertex path (among colored)?"""
    # path v-x-y-d: bicolored when col(y) == c and col(d) == col(x)
    for x in nbrs[v]:
        cx = a[x]
        if cx < 0:
            continue
        for y in nbrs[x]:
            if y == v or a[y] != c:
                continue
            for d in nbrs[y]:
                if d == v or d == x:
                    continue
                if a[d] == cx:
                    return False
        # path x-v-y-d: bicolored when col(x) == col(y) and col(d) == c
        for y in nbrs[v]:
            if y == x or a[y] != cx:
                continue
            for d in nbrs[y]:
                if d == v or d == x:
                    continue
                if a[d] == c:
                    return False
    return True


class _ColoringSearch:
    """Backtracking k-coloring search for one connected graph.

    mode "proper" checks edges only; "star" additionally rejects bicolored
    4-vertex paths; "chip" adds tree-depth checks on every color subset of
    size 3..p that includes the color just placed (pairs are exactly the star
    condition, so the path check covers them).
    """

    def __init__(self, g, k, mode, p=0):
        self.g = g
        self.n = g.n
        self.k = k
        self.mode = mode
        self.p = p
        self.adj = g.adj_bits
        self.nbrs = [sorted(g.adj[v]) for v in range(g.n)]
        self.assignment = [-1] * g.n
        self.sat_counts = [[0] * k for _ in range(g.n)]
        self.sat_mask = [0] * g.n
        if mode == "chip":
            self.td = TreedepthSolver(g)
            self.color_masks = [0] * k
            self.class_sizes = [0] * k

    def run(self):
        if self.n == 0:
            return ()
        if self._extend(0, 0):
            return tuple(self.assignment)
        return None

    def _select(self):
        best = -1
        best_key = None
        for v in range(self.n):
            if self.assignment[v] >= 0:
                continue
            key = (self.sat_mask[v].bit_count(), len(self.nbrs[v]), -v)
            if best_key is None or key > best_key:
                best_key = key
                best = v
        return best

    def _extend(self, colored, max_used):
        if colored == self.n:
            return True
        v = self._select()
        limit = min(max_used + 1, self.k)
        for c in range(limit):
            if self.sat_mask[v] >> c & 1:
                continue
            if not self._place_ok(v, c):
                continue
            self._assign(v, c)
            if self._extend(colored + 1, max(max_used, c + 1)):
                return True
            self._unassign(v, c)
        return False

    def _place_ok(self, v, c):
        if self.mode == "proper":
            return True
        if not _star_ok(self.nbrs, self.assignment, v, c):
            return False
        if self.mode == "chip" and self.p >= 3:
            used = [i for i in range(self.k) if self.class_sizes[i] > 0 and i != c]
            new_mask = self.color_masks[c] | 1 << v
            top = min(self.p, len(used) + 1)
            for size in range(3, top + 1):
                for others in combinations(used, size - 1):
                    mask = new_mask
                    for i in others:
                        mask |= self.color_masks[i]
                    if not self.td.td_at_most(mask, size):
                        return False
        return True

    def _assign(self, v, c):
        self.assignment[v] = c
        for u in self.nbrs[v]:
            if self.assignment[u] < 0:
                counts = self.sat_counts[u]
                counts[c] += 1
                if counts[c] == 1:
                    self.sat_mask[u] |= 1 << c
        if self.mode == "chip":
            self.color_masks[c] |= 1 << v
            self.class_sizes[c] += 1

    def _unassign(self, v, c):
        self.assignment[v] = -1
        for u in self.nbrs[v]:
            if self.assignment[u] < 0:
                counts = self.sat_counts[u]
                counts[c] -= 1
                if counts[c] == 0:
                    self.sat_mask[u] &= ~(1 << c)
        if self.mode == "chip":
            self.color_masks[c] &= ~(1 << v)
            self.class_sizes[c] -= 1


def _exists_coloring(g, k, mode, p=0):
    if k <= 0:
        return None if g.n else ()
    return _ColoringSearch(g, k, mode, p).run()


def greedy_proper_coloring(g):
    """Deterministic DSATUR greedy; an upper bound only, never an exact answer."""
    assignment = [-1] * g.n
    sat = [set() for _ in range(g.n)]
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if assignment[u] < 0),
            key=lambda u: (len(sat[u]), g.degree(u), -u),
        )
        c = 0
        while c in sat[v]:
            c += 1
        assignment[v] = c
        for u in g.adj[v]:
            if assignment[u] < 0:
                sat[u].add(c)
    return make_coloring(assignment, "proper")


_chi_value_memo = {}


def _components_with_maps(g):
    from .graphs import connected_components

    for comp in connected_components(g):
        yield induced_subgraph(g, comp)


def _solve_min_colors(g, mode, p, lower, upper):
    """Smallest k in [lower, upper] admitting a mode-coloring; upper must work."""
    for k in range(max(lower, 1), upper):
        found = _exists_coloring(g, k, mode, p)
        if found is not None:
            return k, found
    found = _exists_coloring(g, upper, mode, p)
    if found is None:
        raise AssertionError("upper bound for coloring search was not valid")
    return upper, found


def chromatic_number_value(g):
    """Exact chromatic number without certificates (memoized; hot-path helper)."""
    cached = _chi_value_memo.get(g)
    if cached is not None:
        return cached
    value = 0
    for sub, _ in _components_with_maps(g):
        lb = clique_number(sub).value
        ub = greedy_proper_coloring(sub).num_colors
        k, _found = _solve_min_colors(sub, "proper", 0, lb, ub)
        value = max(value, k)
    _chi_value_memo[g] = value
    return value


def _critical_subgraph(g, chi):
    """Vertex set inducing a chi-critical subgraph, by greedy deletion."""
    verts = list(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in list(verts):
            rest = [u for u in verts if u != v]
            sub, _ = induced_subgraph(g, rest)
            if _chromatic_at_least(sub, chi):
                verts = rest
                changed = True
    return tuple(verts)


def _chromatic_at_least(g, chi):
    for sub, _ in _components_with_maps(g):
        if _exists_coloring(sub, chi - 1, "proper") is None:
            return True
    return False


def chromatic_number(g, cap=CHROMATIC_CAP):
    """Exact chromatic number, a proper-coloring certificate, and a lower-bound
    witness (max clique, or a chi-critical vertex set when the clique is not tight)."""
    if g.n > cap:
        raise SizeCapError(f"chromatic solver capped at {cap} vertices, got {g.n}")
    assignment = [0] * g.n
    value = 0
    for sub, verts in _components_with_maps(g):
        lb = clique_number(sub).value
        ub = greedy_proper_coloring(sub).num_colors
        k, found = _solve_min_colors(sub, "proper", 0, lb, ub)
        value = max(value, k)
        for i, v in enumerate(verts):
            assignment[v] = found[i]
    coloring = make_coloring(assignment, "proper") if g.n else Coloring((), 0, "proper")
    omega = clique_number(g)
    if omega.value == value:
        witness = ("clique", omega.certificate)
    else:
        witness = ("critical_subgraph", _critical_subgraph(g, value))
    _chi_value_memo[g] = value
    return InvariantResult(
        "chromatic_number", value, certificate=coloring, lower_bound=witness
    )


def greedy_star_coloring(g):
    """Greedy star coloring (degree-descending order); an upper bound only."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    nbrs = [sorted(g.adj[v]) for v in range(g.n)]
    assignment = [-1] * g.n
    for v in order:
        c = 0
        while any(assignment[u] == c for u in nbrs[v]) or not _star_ok(
            nbrs, assignment, v, c
        ):
            c += 1
        assignment[v] = c
    return make_coloring(assignment, "star")


def star_chromatic_number(g, cap=STAR_CAP):
    """Exact star chromatic number (chi_2) with a star-coloring certificate."""
    if g.n > cap:
        raise SizeCapError(f"star solver capped at {cap} vertices, got {g.n}")
    assignment = [0] * g.n
    value = 0
    for sub, verts in _components_with_maps(g):
        lb = chromatic_number_value(sub)
        ub = greedy_star_coloring(sub).num_colors
        k, found = _solve_min_colors(sub, "star", 0, lb, ub)
        value = max(value, k)
        for i, v in enumerate(verts):
            assignment[v] = found[i]
    coloring = make_coloring(assignment, "star") if g.n else Coloring((), 0, "star")
    return InvariantResult("star_chromatic_number", value, certificate=coloring)


def _depth_coloring_of(g):
    from .treedepth import depth_coloring

    solver = TreedepthSolver(g)
    full = (1 << g.n) - 1
    parent_map = solver.forest(full)
    from .treedepth import EliminationForest

    forest = EliminationForest(tuple(parent_map.get(v, -1) for v in range(g.n)))
    return depth_coloring(g, forest)


def chi_p(g, p, cap=None):
    """Exact depth-p chromatic number chi_p with a certified coloring.

    chi_1 is the chromatic number; chi_2 the star chromatic number. For k <= p
    a k-coloring exists exactly when the tree-depth is at most k, which the
    solver exploits before falling back to the subset-checked search.
    """
    if p < 1:
        raise ParameterError("chi_p needs p >= 1")
    if p == 1:
        res = chromatic_number(g)
        cert = res.certificate
        return InvariantResult(
            "chi_p",
            res.value,
            certificate=Coloring(cert.assignment, cert.num_colors, "chi_p", 1),
            lower_bound=res.lower_bound,
        )
    if cap is None:
        cap = CHI_P_CAP.get(p, CHI_P_CAP_DEFAULT)
    if g.n > cap:
        raise SizeCapError(f"chi_p solver capped at {cap} vertices, got {g.n}")
    assignment = [0] * g.n
    value = 0
    for sub, verts in _components_with_maps(g):
        k, found = _chi_p_component(sub, p)
        value = max(value, k)
        for i, v in enumerate(verts):
            assignment[v] = found[i]
    coloring = (
        make_coloring(assignment, "chi_p", p) if g.n else Coloring((), 0, "chi_p", p)
    )
    return InvariantResult("chi_p", value, certificate=coloring)


def _chi_p_component(g, p):
    solver = TreedepthSolver(g)
    full = (1 << g.n) - 1
    k = max(1, chromatic_number_value(g))
    while True:
        if k <= p:
            if solver.td_at_most(full, k):
                depth = _depth_coloring_of(g)
                return len(set(depth)), tuple(depth)
        else:
            found = _exists_coloring(g, k, "chip", p)
            if found is not None:
                return k, found
        k += 1


def uniform_subdivision_coloring(g, p):
    """A (p+1)-color depth-p coloring of the exact p-subdivision of g.

    Branch vertices all get color 0; the internal vertices of every subdivided
    edge get colors 1..p in path order. Any union of j <= p classes falls
    apart into spiders with legs shorter than j and path segments of at most j
    vertices, so its tree-depth stays at most j. Joining two branch vertices
    would need all p internal colors plus color 0, which exceeds p classes.
    """
    if p < 1:
        raise ParameterError("uniform subdivision coloring needs p >= 1")
    sub = subdivide_exact(g, p)
    assignment = [0] * sub.n
    for chain in subdivision_internal_vertices(g, p).values():
        for i, v in enumerate(chain):
            assignment[v] = i + 1
    return make_coloring(assignment, "chi_p", p)


def subdivision_chi_p_coloring(g, p, base):
    """Depth-(p+1) coloring of the exact p-subdivision from a proper base coloring.

    Keeps the base colors on branch vertices and gives the p internal vertices
    of each subdivided edge p distinct colors different from both endpoint
    colors, drawing from a palette of max(base colors, p+2).
    """
    if p < 0:
        raise ParameterError("subdivision depth must be non-negative")
    ok, witness = validate_coloring(
        g, Coloring(base.assignment, base.num_colors, "proper")
    )
    if not ok:
        raise ValidationError(f"base coloring is not proper: {witness}")
    if p == 0:
        return Coloring(base.assignment, base.num_colors, "chi_p", 1)
    sub = subdivide_exact(g, p)
    palette = max(base.num_colors, p + 2)
    assignment = [0] * sub.n
    for v in range(g.n):
        assignment[v] = base.assignment[v]
    chains = subdivision_internal_vertices(g, p)
    for (u, v), chain in chains.items():
        banned = {base.assignment[u], base.assignment[v]}
        avail = [c for c in range(palette) if c not in banned]
        for i, w in enumerate(chain):
            assignment[w] = avail[i]
    return make_coloring(assignment, "chi_p", p + 1)


def product_chi_p_coloring(g, p, base, sub_colorings):
    """Combine a proper base coloring with per-color-subset depth-p colorings.

    For every p-subset I of base colors, sub_colorings[frozenset(I)] must map
    each vertex whose base color lies in I to its color in a valid depth-p
    coloring of that induced subgraph. The combined color of v is the pair
    (base color, tuple of its subset colors), which is a depth-p coloring of g
    using at most chi * a^binom(chi-1, p-1) colors, a being the largest subset
    palette.
    """
    if p < 1:
        raise ParameterError("product coloring needs p >= 1")
    ok, witness = validate_coloring(
        g, Coloring(base.assignment, base.num_colors, "proper")
    )
    if not ok:
        raise ValidationError(f"base coloring is not proper: {witness}")
    chi = base.num_colors
    size = min(p, chi)
    needed = [frozenset(c) for c in combinations(range(chi), size)]
    gamma = {}
    for subset in needed:
        if subset not in sub_colorings:
            raise ValidationError(f"missing sub-coloring for color subset {sorted(subset)}")
        mapping = dict(sub_colorings[subset])
        members = [v for v in range(g.n) if base.assignment[v] in subset]
        if set(mapping) != set(members):
            raise ValidationError(
                f"sub-coloring for {sorted(subset)} must cover exactly its vertices"
            )
        sub, verts = induced_subgraph(g, members)
        local = make_coloring([mapping[v] for v in verts], "chi_p", p)
        ok, witness = validate_coloring(sub, local)
        if not ok:
            raise ValidationError(
                f"sub-coloring for {sorted(subset)} is not a valid depth-{p} "
                f"coloring: {witness}"
            )
        gamma[subset] = mapping
    if size < p:
        # fewer base colors than p: the single full subset already colors g
        full = frozenset(range(chi))
        combined = [(base.assignment[v], gamma[full][v]) for v in range(g.n)]
    else:
        others = {
            c: [J for J in combinations(range(chi), p - 1) if c not in J]
            for c in range(chi)
        }
        combined = []
        for v in range(g.n):
            c = base.assignment[v]
            key = tuple(
                gamma[frozenset(J) | {c}][v] for J in others[c]
            )
            combined.append((c, key))
    return make_coloring(combined, "chi_p", p)
