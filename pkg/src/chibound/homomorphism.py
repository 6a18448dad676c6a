"""Digraph homomorphisms, transitive tournaments, directed-walk powers,
restricted-dual verification, and the degeneracy-dispatch coloring pipeline.

The homomorphism engine is a CSP backtracker: source vertices in descending
total-degree order, forward checking of candidate lists, deterministic
tie-breaking, so witnesses are reproducible. Undirected coloring questions go
through the symmetric-digraph embedding (one arc each way per edge).
"""

from __future__ import annotations

from dataclasses import dataclass

from .codec import digraph_to_digraph6
from .errors import BudgetError, ParameterError, SizeCapError, WalkLoopError
from .graphs import Digraph, induced_subgraph
from .invariants import clique_number, degeneracy

HOM_CAP = 12


@dataclass(frozen=True)
class HomMapping:
    """Arc-preserving vertex mapping from a source to a target digraph."""

    mapping: tuple

    def to_jsonable(self):
        return list(self.mapping)


def symmetric_digraph(g):
    """Each undirected edge as a pair of opposite arcs."""
    arcs = []
    for u, v in g.sorted_edges():
        arcs.append((u, v))
        arcs.append((v, u))
    return Digraph(g.n, arcs)


def _as_digraph(obj):
    return obj if isinstance(obj, Digraph) else symmetric_digraph(obj)


def validate_homomorphism(f, g, hom):
    m = hom.mapping
    if len(m) != f.n or any(not 0 <= x < g.n for x in m):
        return False, "mapping is not a function into the target"
    for u, v in f.sorted_arcs():
        if not g.has_arc(m[u], m[v]):
            return False, f"arc ({u}, {v}) maps to non-arc ({m[u]}, {m[v]})"
    return True, None


def homomorphism(f, g, cap=HOM_CAP, budget=None):
    """A homomorphism f -> g, or None after a complete search.

    `budget` caps the number of search nodes; exhausting it raises BudgetError
    rather than ever returning a wrong answer.
    """
    if f.n > cap or g.n > cap:
        raise SizeCapError(f"homomorphism search capped at {cap} vertices per side")
    if f.n == 0:
        return HomMapping(())
    if g.n == 0:
        return None
    order = sorted(
        range(f.n),
        key=lambda v: (-(len(f.out_adj[v]) + len(f.in_adj[v])), v),
    )
    full = (1 << g.n) - 1
    domains = [full] * f.n
    assignment = [-1] * f.n
    nodes = 0

    def assign(idx, domains):
        nonlocal nodes
        if idx == f.n:
            return True
        v = order[idx]
        dom = domains[v]
        while dom:
            x = (dom & -dom).bit_length() - 1
            dom &= dom - 1
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetError(f"homomorphism search exceeded {budget} nodes")
            new_domains = list(domains)
            new_domains[v] = 1 << x
            ok = True
            for w in f.out_adj[v]:
                if assignment[w] < 0:
                    new_domains[w] &= g.out_bits[x]
                    if not new_domains[w]:
                        ok = False
                        break
                elif not g.has_arc(x, assignment[w]):
                    ok = False
                    break
            if ok:
                for w in f.in_adj[v]:
                    if assignment[w] < 0:
                        new_domains[w] &= g.in_bits[x]
                        if not new_domains[w]:
                            ok = False
                            break
                    elif not g.has_arc(assignment[w], x):
                        ok = False
                        break
            if ok:
                assignment[v] = x
                if assign(idx + 1, new_domains):
                    return True
                assignment[v] = -1
        return False

    if assign(0, domains):
        return HomMapping(tuple(assignment))
    return None


def hom_exists(f, g, cap=HOM_CAP, budget=None):
    return homomorphism(f, g, cap=cap, budget=budget) is not None


def transitive_tournament(k):
    """T_k: vertices 0..k-1 with an arc (i, j) whenever i < j."""
    if k < 1:
        raise ParameterError("tournament order must be at least 1")
    return Digraph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def directed_path(k):
    """Directed path on k vertices (k-1 arcs)."""
    if k < 1:
        raise ParameterError("path order must be at least 1")
    return Digraph(k, [(i, i + 1) for i in range(k - 1)])


def directed_cycle(k):
    if k < 2:
        raise ParameterError("directed cycle needs at least 2 vertices")
    return Digraph(k, [(i, (i + 1) % k) for i in range(k)])


def longest_directed_path_order(d):
    """Vertex count of the longest directed path, or None if d has a directed cycle."""
    color = [0] * d.n
    topo = []

    def visit(v):
        color[v] = 1
        for w in sorted(d.out_adj[v]):
            if color[w] == 1:
                return False
            if color[w] == 0 and not visit(w):
                return False
        color[v] = 2
        topo.append(v)
        return True

    for v in range(d.n):
        if color[v] == 0 and not visit(v):
            return None
    best = [1] * d.n
    for v in topo:  # reverse topological order: children first
        for w in d.out_adj[v]:
            best[v] = max(best[v], best[w] + 1)
    return max(best, default=0)


def walk_power(d, length):
    """Digraph joining u -> v when a directed walk of exactly `length` arcs runs
    from u to v. A closed walk of that length raises WalkLoopError carrying the
    offending vertex and one such walk."""
    if length < 1:
        raise ParameterError("walk length must be positive")
    rows = list(d.out_bits)
    reach = rows
    for _ in range(length - 1):
        nxt = [0] * d.n
        for u in range(d.n):
            m = reach[u]
            acc = 0
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                acc |= rows[w]
            nxt[u] = acc
        reach = nxt
    for v in range(d.n):
        if reach[v] >> v & 1:
            raise WalkLoopError(v, _reconstruct_walk(d, v, v, length))
    arcs = []
    for u in range(d.n):
        m = reach[u]
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            arcs.append((u, v))
    return Digraph(d.n, arcs)


def _reconstruct_walk(d, source, target, length):
    # reachable[s] = vertices with a walk of s arcs into target
    reachable = [0] * (length + 1)
    reachable[0] = 1 << target
    for s in range(1, length + 1):
        mask = 0
        for v in range(d.n):
            if d.out_bits[v] & reachable[s - 1]:
                mask |= 1 << v
        reachable[s] = mask
    walk = [source]
    current = source
    for s in range(length, 0, -1):
        options = d.out_bits[current] & reachable[s - 1]
        nxt = (options & -options).bit_length() - 1
        walk.append(nxt)
        current = nxt
    return walk


@dataclass(frozen=True)
class DualityReport:
    """Outcome of checking F -/-> G <=> G -> D over a sample set."""

    premise_ok: bool  # F -/-> D
    samples: tuple = ()
    verdict: bool = False
    violation: dict | None = None

    def to_jsonable(self):
        return {
            "premise_ok": self.premise_ok,
            "verdict": self.verdict,
            "violation": self.violation,
            "samples": [dict(s) for s in self.samples],
        }


def verify_restricted_dual(f, d, samples, cap=HOM_CAP):
    """Check that d is a restricted dual of f over the given sample digraphs.

    The premise f -/-> d is checked first; then each sample must satisfy
    exactly one side of the equivalence. The first violation short-circuits.
    """
    if hom_exists(f, d, cap=cap):
        return DualityReport(premise_ok=False, verdict=False,
                             violation={"reason": "F maps to D"})
    records = []
    for idx, sample in enumerate(samples):
        f_to_g = hom_exists(f, sample, cap=cap)
        g_to_d = hom_exists(sample, d, cap=cap)
        ok = (not f_to_g) == g_to_d
        record = {
            "index": idx,
            "sample": digraph_to_digraph6(sample),
            "f_to_g": f_to_g,
            "g_to_d": g_to_d,
            "ok": ok,
        }
        records.append(record)
        if not ok:
            return DualityReport(
                premise_ok=True,
                samples=tuple(records),
                verdict=False,
                violation=record,
            )
    return DualityReport(premise_ok=True, samples=tuple(records), verdict=True)


def search_restricted_dual(f, samples, max_size=3, cap=HOM_CAP):
    """Exhaustive search for a restricted dual of f over the sample class.

    Tries every loopless digraph on 1..max_size vertices in a fixed order and
    returns the first one verify_restricted_dual accepts, or None. Exponential
    in max_size**2 (2^(n(n-1)) candidates per order); intended for max_size <= 4.
    The primary contract of this module is verification of supplied candidates,
    not synthesis.
    """
    if max_size > 5:
        raise SizeCapError("dual synthesis is capped at 5 target vertices")
    for n in range(1, max_size + 1):
        slots = [(u, v) for u in range(n) for v in range(n) if u != v]
        for mask in range(1 << len(slots)):
            d = Digraph(n, [a for i, a in enumerate(slots) if mask >> i & 1])
            report = verify_restricted_dual(f, d, samples, cap=cap)
            if report.verdict:
                return d
    return None


@dataclass(frozen=True)
class HColoringOutcome:
    """Either a homomorphism into the template or a small non-colorable witness."""

    kind: str  # "mapping" | "witness"
    mapping: HomMapping | None = None
    witness: tuple = ()

    def to_jsonable(self):
        return {
            "kind": self.kind,
            "mapping": None if self.mapping is None else self.mapping.to_jsonable(),
            "witness": list(self.witness),
        }


def _core_above(g, threshold):
    """Vertices surviving repeated deletion of degree <= threshold."""
    alive = set(range(g.n))
    deg = {v: g.degree(v) for v in alive}
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if deg[v] <= threshold:
                alive.remove(v)
                for u in g.adj[v]:
                    if u in alive:
                        deg[u] -= 1
                changed = True
    return sorted(alive)


def h_coloring_with_witness(
    g, h, clique_threshold, degeneracy_threshold, hom_budget=None
):
    """Degeneracy-dispatch template coloring.

    Dense inputs (degeneracy above the threshold) are peeled to their core and
    give up a clique witness X with G[X] not mapping to the template; sparse
    inputs run the bounded homomorphism search. Both outcomes re-validate
    before being returned, so a threshold configuration that cannot justify
    its witness raises ParameterError instead of returning a wrong answer.
    """
    template = _as_digraph(h)
    value, _order = degeneracy(g)
    if value > degeneracy_threshold:
        core = _core_above(g, degeneracy_threshold)
        sub, verts = induced_subgraph(g, core)
        cq = clique_number(sub)
        if cq.value < clique_threshold:
            raise ParameterError(
                f"dense core has clique number {cq.value} < threshold "
                f"{clique_threshold}; thresholds do not fit this template"
            )
        witness = tuple(sorted(verts[v] for v in cq.certificate[:clique_threshold]))
        wsub, _ = induced_subgraph(g, witness)
        if hom_exists(symmetric_digraph(wsub), template, budget=hom_budget):
            raise ParameterError(
                "clique witness maps into the template; thresholds unsound"
            )
        return HColoringOutcome(kind="witness", witness=witness)
    mapping = homomorphism(symmetric_digraph(g), template, budget=hom_budget)
    if mapping is not None:
        ok, reason = validate_homomorphism(symmetric_digraph(g), template, mapping)
        if not ok:
            raise AssertionError(f"solver returned an invalid mapping: {reason}")
        return HColoringOutcome(kind="mapping", mapping=mapping)
    # no mapping at all: shrink to a minimal non-colorable vertex set
    verts = list(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in list(verts):
            rest = [u for u in verts if u != v]
            sub, _ = induced_subgraph(g, rest)
            if not hom_exists(symmetric_digraph(sub), template, budget=hom_budget):
                verts = rest
                changed = True
    return HColoringOutcome(kind="witness", witness=tuple(verts))
