"""Seeds, seed mutation via the exchange relation, and exchange-graph search.

Every cluster variable is stored as a Laurent polynomial in the initial
cluster's variables (its Laurent certificate).  Seed mutation assembles the
exchange binomial from the certificates and performs exact division by the
certificate of the mutated variable; a failed division would falsify the
Laurent phenomenon and is raised loudly as LaurentViolation.

Exchange-graph nodes are clusters: unordered sets of mutable cluster
variables, deduplicated by canonical serialization of their certificates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .laurent import (
    LaurentPoly,
    NotDivisible,
    exact_divide,
    render,
)
from .quiver import MutationError, Quiver

DEFAULT_BUDGET = 10_000


class LaurentViolation(ArithmeticError):
    """Exact division failed during mutation: a non-Laurent cluster variable."""


class IncompleteError(ValueError):
    """Census requested on a budget-exceeded exchange graph."""


@dataclass(frozen=True)
class Seed:
    """A quiver plus one Laurent certificate per vertex.

    Mutable entries are the current cluster variables; frozen entries are the
    fixed frozen generators and are never altered by mutation.
    """

    quiver: Quiver
    certs: tuple[LaurentPoly, ...]

    def __post_init__(self):
        if len(self.certs) != self.quiver.n_vertices:
            raise ValueError("one certificate per vertex required")

    @property
    def varset(self) -> tuple[str, ...]:
        return self.certs[0].vars

    def cluster_key(self) -> frozenset[str]:
        """Canonical identity of the unordered mutable cluster."""
        return frozenset(render(c) for c in self.certs[: self.quiver.n_mut])


def initial_seed(q: Quiver) -> Seed:
    """Seed whose variable at each vertex is its own generator (label-named)."""
    vs = q.labels
    certs = tuple(LaurentPoly.var(vs, v) for v in vs)
    return Seed(q, certs)


def mutate_seed(s: Seed, k: int) -> Seed:
    """Exchange relation at mutable vertex k:

        x_k' = (prod_{b[i][k] > 0} x_i^{b[i][k]} + prod_{b[i][k] < 0} x_i^{-b[i][k]}) / x_k

    computed on Laurent certificates with exact division.  Empty products are
    1, so a vertex with no arrows mutates as x -> 2/x.
    """
    q = s.quiver
    if not q.is_mutable(k):
        raise MutationError(f"vertex {k} is frozen or out of range")
    vs = s.varset
    pos = LaurentPoly.const(vs, 1)
    neg = LaurentPoly.const(vs, 1)
    for i in range(q.n_vertices):
        e = q.b[i][k]
        if e > 0:
            pos = pos * s.certs[i] ** e
        elif e < 0:
            neg = neg * s.certs[i] ** (-e)
    try:
        new_var = exact_divide(pos + neg, s.certs[k])
    except NotDivisible as exc:
        raise LaurentViolation(
            f"mutation at vertex {k} produced a non-Laurent variable"
        ) from exc
    certs = list(s.certs)
    certs[k] = new_var
    return Seed(q.mutate(k), tuple(certs))


def specialize(s: Seed) -> Seed:
    """Map every frozen variable to 1 and drop the frozen vertices."""
    q = s.quiver
    frozen_names = {q.labels[i]: 1 for i in range(q.n_mut, q.n_vertices)}
    certs = tuple(c.subs_const(frozen_names) for c in s.certs[: q.n_mut])
    return Seed(q.principal_part(), certs)


@dataclass(frozen=True)
class ExchangeGraph:
    """BFS closure of a seed under mutation, nodes deduplicated by cluster."""

    seeds: tuple[Seed, ...]  # one representative seed per node
    edges: tuple[tuple[int, int, int], ...]  # (node, node, mutated vertex)
    status: str  # "complete" | "budget_exceeded"

    @property
    def n_nodes(self) -> int:
        return len(self.seeds)

    def neighbor_counts(self) -> list[int]:
        deg = [0] * self.n_nodes
        seen = set()
        for a, b, _ in self.edges:
            if (a, b) in seen or (b, a) in seen:
                continue
            seen.add((a, b))
            deg[a] += 1
            deg[b] += 1
        return deg

    def adjacency_json(self) -> dict:
        adj: list[list[int]] = [[] for _ in range(self.n_nodes)]
        for a, b, _ in self.edges:
            if b not in adj[a]:
                adj[a].append(b)
            if a not in adj[b]:
                adj[b].append(a)
        return {
            "status": self.status,
            "nodes": self.n_nodes,
            "adjacency": [sorted(x) for x in adj],
        }


def exchange_graph(s: Seed, budget: int = DEFAULT_BUDGET) -> ExchangeGraph:
    """Enumerate all clusters reachable from s by mutation, up to budget nodes.

    Output is deterministic: BFS order from the initial seed with vertices
    tried in index order, independent of any parallel expansion strategy.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    node_of: dict[frozenset[str], int] = {s.cluster_key(): 0}
    seeds = [s]
    edges: list[tuple[int, int, int]] = []
    work: deque[int] = deque([0])
    status = "complete"
    while work:
        idx = work.popleft()
        seed = seeds[idx]
        for k in range(seed.quiver.n_mut):
            nxt = mutate_seed(seed, k)
            key = nxt.cluster_key()
            j = node_of.get(key)
            if j is None:
                if len(seeds) >= budget:
                    status = "budget_exceeded"
                    return ExchangeGraph(tuple(seeds), tuple(edges), status)
                j = len(seeds)
                node_of[key] = j
                seeds.append(nxt)
                work.append(j)
            if idx != j:
                edges.append((idx, j, k))
    return ExchangeGraph(tuple(seeds), tuple(edges), status)


@dataclass(frozen=True)
class Census:
    """Counts and the duplicate-free list of all enumerated cluster variables."""

    cluster_count: int
    variable_count: int
    variables: tuple[LaurentPoly, ...]

    def to_json_dict(self) -> dict:
        from .laurent import to_json_dict

        return {
            "clusters": self.cluster_count,
            "variables": self.variable_count,
            "variable_list": [to_json_dict(v) for v in self.variables],
        }


def census(g: ExchangeGraph) -> Census:
    """Cluster/variable counts over a complete exchange graph.

    Certificates are canonical (graded-lex serialized), so string identity of
    renders coincides with exact equality of the Laurent polynomials.
    """
    if g.status != "complete":
        raise IncompleteError("census requires a complete exchange graph")
    by_render: dict[str, LaurentPoly] = {}
    for seed in g.seeds:
        for c in seed.certs[: seed.quiver.n_mut]:
            by_render.setdefault(render(c), c)
    variables = tuple(by_render[k] for k in sorted(by_render))
    return Census(g.n_nodes, len(variables), variables)


def check_laurent_positive(g: ExchangeGraph) -> bool:
    """True iff every enumerated variable has positive integer coefficients."""
    for seed in g.seeds:
        for c in seed.certs[: seed.quiver.n_mut]:
            for coef in c.terms.values():
                if coef.denominator != 1 or coef.numerator <= 0:
                    return False
    return True
