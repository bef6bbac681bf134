"""Factor graphs, Laplacians, and Cartesian product graphs.

Vertices are 0-based in memory.  The JSON file format and the
``flat_index``/``unflatten_index`` helpers use the 1-based convention
(i1, i2) -> (i1 - 1) * N2 + i2, which matches the row-major (i2-fastest)
memory layout used everywhere else: ``flat0 = flat1 - 1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import FormatError, InvalidGraphError, InvalidParameterError

GRAPH_KINDS = ("path", "cycle", "random-ring", "community", "sensor", "custom")

_CONNECT_RETRIES = 64


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected weighted graph with a symmetric, zero-diagonal adjacency."""

    n: int
    edges: tuple[tuple[int, int, float], ...]  # 1-based (i, j, w), i < j
    adjacency: np.ndarray
    kind: str
    seed: int | None = None


@dataclass(frozen=True, eq=False)
class LaplacianSystem:
    """Combinatorial Laplacian L = diag(degree) - adjacency."""

    L: np.ndarray
    degree: np.ndarray


@dataclass(frozen=True, eq=False)
class ProductGraph:
    """Cartesian product of two factor graphs.

    The product vertex (i1, i2) sits at row-major position i1 * n2 + i2
    (0-based), so the adjacency and Laplacian are the literal Kronecker
    sums of the factor matrices.
    """

    factor1: Graph
    factor2: Graph
    adjacency: np.ndarray

    @property
    def n1(self) -> int:
        return self.factor1.n

    @property
    def n2(self) -> int:
        return self.factor2.n

    @property
    def n(self) -> int:
        return self.factor1.n * self.factor2.n


def _edges_from_adjacency(adj: np.ndarray) -> tuple[tuple[int, int, float], ...]:
    ii, jj = np.nonzero(np.triu(adj, 1))
    return tuple((int(i) + 1, int(j) + 1, float(adj[i, j])) for i, j in zip(ii, jj))


def _is_connected(adj: np.ndarray) -> bool:
    n = adj.shape[0]
    seen = np.zeros(n, dtype=bool)
    stack = [0]
    seen[0] = True
    while stack:
        v = stack.pop()
        for u in np.nonzero(adj[v] > 0)[0]:
            if not seen[u]:
                seen[u] = True
                stack.append(int(u))
    return bool(seen.all())


def _graph(adj: np.ndarray, kind: str, seed: int | None) -> Graph:
    adj = np.ascontiguousarray(adj, dtype=float)
    return Graph(n=adj.shape[0], edges=_edges_from_adjacency(adj), adjacency=adj,
                 kind=kind, seed=seed)


def _path_adjacency(n: int) -> np.ndarray:
    adj = np.zeros((n, n))
    idx = np.arange(n - 1)
    adj[idx, idx + 1] = adj[idx + 1, idx] = 1.0
    return adj


def _cycle_adjacency(n: int) -> np.ndarray:
    adj = _path_adjacency(n)
    adj[0, n - 1] = adj[n - 1, 0] = 1.0
    return adj


def _random_ring_adjacency(n: int, chords: int, rng: np.random.Generator) -> np.ndarray:
    adj = _cycle_adjacency(n)
    added = 0
    while added < chords:
        i, j = (int(v) for v in rng.integers(0, n, size=2))
        if i != j and adj[i, j] == 0.0:
            adj[i, j] = adj[j, i] = 1.0
            added += 1
    return adj


def _community_adjacency(n: int, blocks: int, p_in: float, p_out: float,
                         rng: np.random.Generator) -> np.ndarray:
    labels = np.sort(np.arange(n) % blocks)
    same = labels[:, None] == labels[None, :]
    prob = np.where(same, p_in, p_out)
    draw = rng.random((n, n))
    upper = np.triu(draw < prob, 1)
    return (upper | upper.T).astype(float)


def _sensor_adjacency(n: int, radius: float, rng: np.random.Generator) -> np.ndarray:
    pts = rng.random((n, 2))
    d2 = ((pts[:, None, :] - pts[None, :, :]) ** 2).sum(-1)
    sigma = radius / 2.0
    adj = np.exp(-d2 / (2.0 * sigma**2))
    adj[d2 > radius**2] = 0.0
    np.fill_diagonal(adj, 0.0)
    return adj


def build_graph(kind: str, n: int = 0, seed: int | None = None, *,
                chords: int | None = None, blocks: int = 3,
                p_in: float = 0.3, p_out: float = 0.05,
                radius: float | None = None,
                edges: list[tuple[int, int, float]] | None = None) -> Graph:
    """Build a factor graph of the given kind.

    Random kinds (random-ring, community, sensor) require an explicit seed
    and redraw up to a bounded retry count until connected.
    """
    if kind not in GRAPH_KINDS:
        raise InvalidParameterError(f"unknown graph kind {kind!r}")
    if kind == "custom":
        if edges is None:
            raise InvalidParameterError("custom kind requires an explicit edge list")
        return _custom_graph(n, edges, seed)
    if n < 2:
        raise InvalidParameterError(f"graph size must be >= 2, got {n}")

    if kind == "path":
        return _graph(_path_adjacency(n), kind, seed)
    if kind == "cycle":
        if n < 3:
            raise InvalidParameterError("cycle needs n >= 3 (n = 2 would duplicate an edge)")
        return _graph(_cycle_adjacency(n), kind, seed)

    if seed is None:
        raise InvalidParameterError(f"kind {kind!r} is random and requires a seed")
    if not 0.0 < p_in <= 1.0 or not 0.0 < p_out <= 1.0:
        raise InvalidParameterError("edge probabilities must lie in (0, 1]")
    rng = np.random.default_rng(seed)

    if kind == "random-ring":
        if n < 3:
            raise InvalidParameterError("random-ring needs n >= 3")
        k = max(1, n // 8) if chords is None else chords
        if k < 0 or k > n * (n - 1) // 2 - n:
            raise InvalidParameterError(f"chord count {k} out of range")
        return _graph(_random_ring_adjacency(n, k, rng), kind, seed)

    for _ in range(_CONNECT_RETRIES):
        if kind == "community":
            adj = _community_adjacency(n, blocks, p_in, p_out, rng)
        else:  # sensor
            r = radius if radius is not None else float(np.sqrt(4.0 * np.log(n) / n))
            adj = _sensor_adjacency(n, r, rng)
        if _is_connected(adj):
            return _graph(adj, kind, seed)
    raise InvalidParameterError(
        f"could not draw a connected {kind} graph in {_CONNECT_RETRIES} attempts; "
        "increase density parameters")


def _custom_graph(n: int, edges, seed) -> Graph:
    if n < 2:
        raise InvalidParameterError(f"graph size must be >= 2, got {n}")
    adj = np.zeros((n, n))
    for (i, j, w) in edges:
        if not (1 <= i <= n and 1 <= j <= n):
            raise InvalidGraphError(f"edge ({i}, {j}) out of range for n = {n}")
        if i == j:
            raise InvalidGraphError(f"self edge at vertex {i}")
        if w <= 0:
            raise InvalidGraphError(f"nonpositive weight {w} on edge ({i}, {j})")
        if adj[i - 1, j - 1] != 0.0:
            raise InvalidGraphError(f"duplicate edge ({i}, {j})")
        adj[i - 1, j - 1] = adj[j - 1, i - 1] = float(w)
    return _graph(adj, "custom", seed)


def laplacian(g: Graph | ProductGraph) -> LaplacianSystem:
    """Combinatorial Laplacian of a graph (or product graph)."""
    adj = g.adjacency
    if not np.array_equal(adj, adj.T):
        raise InvalidGraphError("adjacency is not symmetric")
    degree = adj.sum(axis=1)
    return LaplacianSystem(L=np.diag(degree) - adj, degree=degree)


def cartesian_product(g1: Graph, g2: Graph) -> ProductGraph:
    """Cartesian product graph; adjacency is the Kronecker sum W1 (+) W2."""
    adj = (np.kron(g1.adjacency, np.eye(g2.n))
           + np.kron(np.eye(g1.n), g2.adjacency))
    return ProductGraph(factor1=g1, factor2=g2, adjacency=adj)


def flat_index(i1: int, i2: int, n2: int, n1: int | None = None) -> int:
    """1-based product vertex index of the pair (i1, i2)."""
    from .errors import IndexRangeError

    if i2 < 1 or i2 > n2 or i1 < 1 or (n1 is not None and i1 > n1):
        raise IndexRangeError(f"pair ({i1}, {i2}) out of range for n2 = {n2}")
    return (i1 - 1) * n2 + i2


def unflatten_index(flat: int, n2: int) -> tuple[int, int]:
    """Inverse of :func:`flat_index` (both 1-based)."""
    from .errors import IndexRangeError

    if flat < 1:
        raise IndexRangeError(f"flat index {flat} out of range")
    return (flat - 1) // n2 + 1, (flat - 1) % n2 + 1


# ---------------------------------------------------------------------------
# JSON file format: {"n": int, "kind": str, "seed": int|null,
#                    "edges": [[i, j, w], ...]} with 1-based indices.

def graph_to_json(g: Graph) -> str:
    doc = {"n": g.n, "kind": g.kind, "seed": g.seed,
           "edges": [[i, j, w] for (i, j, w) in g.edges]}
    return json.dumps(doc, separators=(",", ":")) + "\n"


def graph_from_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
        n = int(doc["n"])
        kind = str(doc["kind"])
        seed = doc.get("seed")
        edges = [(int(i), int(j), float(w)) for (i, j, w) in doc["edges"]]
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise FormatError(f"malformed graph JSON: {exc}") from exc
    try:
        g = _custom_graph(n, edges, None if seed is None else int(seed))
    except InvalidGraphError as exc:
        raise FormatError(str(exc)) from exc
    return Graph(n=g.n, edges=g.edges, adjacency=g.adjacency, kind=kind,
                 seed=None if seed is None else int(seed))


def save_graph(path: str | Path, g: Graph) -> None:
    Path(path).write_text(graph_to_json(g))


def load_graph(path: str | Path) -> Graph:
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(str(p))
    return graph_from_json(p.read_text())
