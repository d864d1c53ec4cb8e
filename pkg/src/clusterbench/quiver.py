"""Quivers with frozen vertices, matrix mutation, and Dynkin/level builders.

A quiver is encoded by its signed exchange matrix b of shape
(n_mut + n_frozen) x n_mut, where b[i][k] = #(arrows i -> k) - #(arrows k -> i).
The mutable block (top n_mut rows) is skew-symmetric with zero diagonal, so
loops and 2-cycles are unrepresentable by construction.  Arrows between two
frozen vertices never enter mutation; for level quivers they are kept in a
side list purely for display and arrow counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator


class MutationError(ValueError):
    """Mutation requested at a frozen or out-of-range vertex."""


class LevelError(ValueError):
    """Level parameter below 1."""


@dataclass(frozen=True)
class DynkinType:
    """A simply laced (ADE) Dynkin type."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family == "A":
            ok = self.rank >= 1
        elif self.family == "D":
            ok = self.rank >= 4
        elif self.family == "E":
            ok = self.rank in (6, 7, 8)
        else:
            ok = False
        if not ok:
            raise TypeError(f"not a valid ADE type: {self.family}{self.rank}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def dynkin_edges(t: DynkinType) -> list[tuple[int, int]]:
    """Edges of the Dynkin diagram, Bourbaki numbering, 1-based nodes."""
    n = t.rank
    if t.family == "A":
        return [(i, i + 1) for i in range(1, n)]
    if t.family == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    # E6/E7/E8: path 1-3-4-...-n with node 2 hanging off node 4.
    edges = [(1, 3)] + [(i, i + 1) for i in range(3, n)] + [(2, 4)]
    return edges


@dataclass(frozen=True)
class Quiver:
    """Immutable quiver value; mutation returns a fresh instance.

    frozen_arrows lists (src, dst, mult) arrows between frozen vertices.  They
    are construction-time metadata for level quivers (display and arrow
    counting only) and are carried unchanged through mutation.
    """

    n_mut: int
    n_frozen: int
    labels: tuple[str, ...]
    b: tuple[tuple[int, ...], ...]
    frozen_arrows: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        n = self.n_mut + self.n_frozen
        if len(self.labels) != n or len(self.b) != n:
            raise ValueError("labels/matrix size mismatch")
        for row in self.b:
            if len(row) != self.n_mut:
                raise ValueError("b must have n_mut columns")
        for i in range(self.n_mut):
            if self.b[i][i] != 0:
                raise ValueError("loops are not allowed")
            for j in range(self.n_mut):
                if self.b[i][j] != -self.b[j][i]:
                    raise ValueError("mutable block must be skew-symmetric")

    @property
    def n_vertices(self) -> int:
        return self.n_mut + self.n_frozen

    def is_mutable(self, k: int) -> bool:
        return 0 <= k < self.n_mut

    def arrows(self, include_frozen_pairs: bool = True) -> list[tuple[int, int, int]]:
        """Arrow list (src, dst, multiplicity) decoded from the matrix."""
        out = []
        for i in range(self.n_mut):
            for k in range(i + 1, self.n_mut):
                m = self.b[i][k]
                if m > 0:
                    out.append((i, k, m))
                elif m < 0:
                    out.append((k, i, -m))
        for i in range(self.n_mut, self.n_vertices):
            for k in range(self.n_mut):
                m = self.b[i][k]
                if m > 0:
                    out.append((i, k, m))
                elif m < 0:
                    out.append((k, i, -m))
        if include_frozen_pairs:
            out.extend(self.frozen_arrows)
        return sorted(out)

    def arrow_count(self) -> int:
        return sum(m for _, _, m in self.arrows())

    def mutate(self, k: int) -> "Quiver":
        """Matrix mutation at mutable vertex k (involutive)."""
        if not self.is_mutable(k):
            raise MutationError(f"vertex {k} is frozen or out of range")
        b = self.b
        new = []
        for i in range(self.n_vertices):
            row = []
            for j in range(self.n_mut):
                if i == k or j == k:
                    row.append(-b[i][j])
                else:
                    bik, bkj = b[i][k], b[k][j]
                    sign = (bik > 0) - (bik < 0)
                    row.append(b[i][j] + sign * max(0, bik * bkj))
            new.append(tuple(row))
        return Quiver(self.n_mut, self.n_frozen, self.labels, tuple(new),
                      self.frozen_arrows)

    def opposite(self) -> "Quiver":
        neg = tuple(tuple(-x for x in row) for row in self.b)
        fr = tuple((d, s, m) for s, d, m in self.frozen_arrows)
        return Quiver(self.n_mut, self.n_frozen, self.labels, neg, fr)

    def principal_part(self) -> "Quiver":
        """Drop frozen vertices, keeping the mutable block."""
        b = tuple(self.b[i] for i in range(self.n_mut))
        return Quiver(self.n_mut, 0, self.labels[: self.n_mut], b)

    def to_json_dict(self) -> dict:
        d = {
            "n_mut": self.n_mut,
            "n_frozen": self.n_frozen,
            "labels": list(self.labels),
            "b": [list(row) for row in self.b],
        }
        if self.frozen_arrows:
            d["frozen_arrows"] = [list(a) for a in self.frozen_arrows]
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "Quiver":
        return cls(
            d["n_mut"],
            d["n_frozen"],
            tuple(d["labels"]),
            tuple(tuple(row) for row in d["b"]),
            tuple(tuple(a) for a in d.get("frozen_arrows", [])),
        )

    def render_arrows(self) -> str:
        lines = []
        for s, d, m in self.arrows():
            suffix = f" x{m}" if m != 1 else ""
            lines.append(f"{self.labels[s]} -> {self.labels[d]}{suffix}")
        return "\n".join(lines)


def _bipartition(n: int, edges: list[tuple[int, int]]) -> list[int]:
    """Two-color the tree on nodes 1..n, node 1 black (color 0)."""
    adj: dict[int, list[int]] = {i: [] for i in range(1, n + 1)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    color = [-1] * (n + 1)
    color[1] = 0
    stack = [1]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if color[w] == -1:
                color[w] = 1 - color[v]
                stack.append(w)
    return color


def dynkin_quiver(t: DynkinType) -> Quiver:
    """Bipartitely oriented Dynkin quiver: every vertex is a source or a sink.

    Node 1 anchors the two-coloring and is a sink (for A4 this gives arrows
    2->1, 2->3, 4->3, the orientation used for each row of the level
    quiver).  Vertex i carries label x{i}.
    """
    n = t.rank
    edges = dynkin_edges(t)
    color = _bipartition(n, edges)
    b = [[0] * n for _ in range(n)]
    for a, c in edges:
        src, dst = (a, c) if color[a] == 1 else (c, a)
        b[src - 1][dst - 1] = 1
        b[dst - 1][src - 1] = -1
    labels = tuple(f"x{i}" for i in range(1, n + 1))
    return Quiver(n, 0, labels, tuple(tuple(row) for row in b))


def build_hl_quiver(t: DynkinType, l: int) -> Quiver:
    """The level-l quiver on vertices (i, k), i in the Dynkin diagram,
    1 <= k <= l+1, with the level-(l+1) row frozen.

    Arrow families, with Q0 the bipartitely oriented Dynkin quiver:
      1. (i,k) -> (j,k) for each arrow i -> j of Q0 and all 1 <= k <= l+1;
      2. (j,k) -> (i,k+1) for each arrow i -> j of Q0 and 1 <= k <= l;
      3. (i,k+1) -> (i,k) for all i and 1 <= k <= l.
    Family-1 arrows at level l+1 join two frozen vertices; they are stored in
    frozen_arrows and never enter the exchange matrix.
    """
    if l < 1:
        raise LevelError(f"level must be >= 1, got {l}")
    n = t.rank
    q0 = dynkin_quiver(t)
    q0_arrows = [(s + 1, d + 1) for s, d, _ in q0.arrows()]

    # mutable vertices: (i, k) for k = 1..l, index (k-1)*n + (i-1);
    # frozen vertices: (i, l+1), index n*l + (i-1).
    def vid(i: int, k: int) -> int:
        return (k - 1) * n + (i - 1) if k <= l else n * l + (i - 1)

    n_mut, n_frozen = n * l, n
    total = n_mut + n_frozen
    labels = [""] * total
    for i in range(1, n + 1):
        for k in range(1, l + 1):
            labels[vid(i, k)] = f"V_{i}_{k}"
        labels[vid(i, l + 1)] = f"W_{i}_{l + 1}"

    b = [[0] * n_mut for _ in range(total)]
    frozen_pairs: dict[tuple[int, int], int] = {}

    def add_arrow(src: int, dst: int) -> None:
        if src >= n_mut and dst >= n_mut:
            frozen_pairs[(src, dst)] = frozen_pairs.get((src, dst), 0) + 1
            return
        if dst < n_mut:
            b[src][dst] += 1
        if src < n_mut:
            b[dst][src] -= 1

    for i, j in q0_arrows:
        for k in range(1, l + 2):
            add_arrow(vid(i, k), vid(j, k))  # family 1
        for k in range(1, l + 1):
            add_arrow(vid(j, k), vid(i, k + 1))  # family 2
    for i in range(1, n + 1):
        for k in range(1, l + 1):
            add_arrow(vid(i, k + 1), vid(i, k))  # family 3

    fr = tuple(sorted((s, d, m) for (s, d), m in frozen_pairs.items()))
    return Quiver(n_mut, n_frozen, tuple(labels), tuple(tuple(r) for r in b), fr)


def _signature(q: Quiver, v: int) -> tuple:
    """Mutation-class-free fingerprint of a vertex for isomorphism pruning."""
    mutable = v < q.n_mut
    out = tuple(sorted(q.b[v]))
    inc = tuple(sorted(q.b[i][v] for i in range(q.n_vertices))) if mutable else ()
    return (mutable, out, inc)


def isomorphisms(
    q1: Quiver, q2: Quiver, frozen_setwise: bool = True
) -> list[tuple[int, ...]]:
    """All vertex bijections sigma with b2[sigma(i)][sigma(k)] == b1[i][k].

    Mutable vertices map to mutable and frozen to frozen; when frozen_setwise
    is False every frozen vertex must be fixed pointwise.  Backtracking with
    degree-signature pruning; returns an empty list when none exist.
    """
    if q1.n_mut != q2.n_mut or q1.n_frozen != q2.n_frozen:
        return []
    n_mut, n = q1.n_mut, q1.n_vertices
    sig1 = [_signature(q1, v) for v in range(n)]
    sig2 = [_signature(q2, v) for v in range(n)]
    results: list[tuple[int, ...]] = []
    assign = [-1] * n
    used = [False] * n

    def ok(v: int, w: int) -> bool:
        # check consistency against all previously assigned vertices
        for u in range(n):
            su = assign[u]
            if su == -1:
                continue
            if v < n_mut and q2.b[su][assign[v]] != q1.b[u][v]:
                return False
            if u < n_mut and q2.b[assign[v]][su] != q1.b[v][u]:
                return False
        return True

    def extend(v: int) -> None:
        if v == n:
            results.append(tuple(assign))
            return
        if v < n_mut:
            candidates: Iterator[int] = range(n_mut)
        elif frozen_setwise:
            candidates = range(n_mut, n)
        else:
            candidates = [v]
        for w in candidates:
            if used[w] or sig1[v] != sig2[w]:
                continue
            assign[v] = w
            if ok(v, w):
                used[w] = True
                extend(v + 1)
                used[w] = False
            assign[v] = -1

    extend(0)
    return results


def isomorphisms_brute(
    q1: Quiver, q2: Quiver, frozen_setwise: bool = True
) -> list[tuple[int, ...]]:
    """Exhaustive oracle over all class-preserving bijections (small quivers)."""
    if q1.n_mut != q2.n_mut or q1.n_frozen != q2.n_frozen:
        return []
    n_mut, n = q1.n_mut, q1.n_vertices
    frozen_ids = list(range(n_mut, n))
    results = []
    frozen_choices = (
        list(permutations(frozen_ids)) if frozen_setwise else [tuple(frozen_ids)]
    )
    for pm in permutations(range(n_mut)):
        for pf in frozen_choices:
            sigma = pm + pf
            if all(
                q2.b[sigma[i]][sigma[k]] == q1.b[i][k]
                for i in range(n)
                for k in range(n_mut)
            ):
                results.append(sigma)
    return results
