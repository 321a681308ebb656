"""Graphs, standard families, induced matchings, and circular block/gap profiles.

Vertices are labeled 1..n throughout. Simple-graph edges are 2-element
tuples; hypergraph edges may be larger, but the edge set must always be an
antichain (no edge contained in another). Cycle edges follow the shared
indexing convention

    e_1 = {1,2}, e_2 = {2,3}, ..., e_{n-1} = {n-1,n}, e_n = {1,n},

and every module that talks about subsets of E(C_n) uses 1-based indices
into that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .config import Budgets, current_budgets
from .errors import InvalidParameterError, SizeLimitError, UnsupportedInputError


@dataclass(frozen=True)
class Graph:
    """An immutable (hyper)graph on vertices 1..n with a fixed edge order.

    Edge indices (1-based positions in ``edges``) are part of the public
    contract: constructors define the order, e.g. ``make_cycle`` stores the
    cycle order above.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameterError(f"vertex count must be positive, got {self.n}")
        normalized = tuple(tuple(sorted(e)) for e in self.edges)
        object.__setattr__(self, "edges", normalized)
        seen: set[tuple[int, ...]] = set()
        for e in normalized:
            if len(e) < 2:
                raise InvalidParameterError(f"edge {e} has fewer than 2 vertices")
            if len(set(e)) != len(e):
                raise InvalidParameterError(f"edge {e} repeats a vertex")
            if e[0] < 1 or e[-1] > self.n:
                raise InvalidParameterError(f"edge {e} leaves the vertex range 1..{self.n}")
            if e in seen:
                raise InvalidParameterError(f"duplicate edge {e}")
            seen.add(e)
        # antichain: no edge may contain another
        sets = [set(e) for e in normalized]
        for i, a in enumerate(sets):
            for j, b in enumerate(sets):
                if i != j and a < b:
                    raise InvalidParameterError(
                        f"edge {normalized[i]} is contained in edge {normalized[j]}"
                    )

    @property
    def is_simple(self) -> bool:
        return all(len(e) == 2 for e in self.edges)

    def edge_subset(self, indices: Iterable[int]) -> tuple[tuple[int, ...], ...]:
        """Edges at the given 1-based indices, in index order."""
        idx = sorted(set(indices))
        if not idx or idx[0] < 1 or idx[-1] > len(self.edges):
            raise InvalidParameterError(
                f"edge indices must lie in 1..{len(self.edges)}, got {idx}"
            )
        return tuple(self.edges[i - 1] for i in idx)


def make_cycle(n: int) -> Graph:
    """The cycle on vertices 1..n with the shared edge order."""
    if n < 3:
        raise InvalidParameterError(f"a cycle needs at least 3 vertices, got {n}")
    edges = [(i, i + 1) for i in range(1, n)]
    edges.append((1, n))
    return Graph(n, tuple(edges))


def make_path(n: int) -> Graph:
    """The path on vertices 1..n (edgeless when n = 1)."""
    if n < 1:
        raise InvalidParameterError(f"a path needs at least 1 vertex, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def is_forest(g: Graph) -> bool:
    """True iff the simple graph ``g`` is acyclic."""
    if not g.is_simple:
        raise UnsupportedInputError("forest detection is defined for simple graphs only")
    parent = list(range(g.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def nu_path_closed_form(n: int) -> int:
    """Induced matching number of the path on n vertices: ceil((n-1)/3).

    Equivalently floor((n+1)/3); exhaustive search confirms this on every
    path up to 15 vertices.
    """
    if n < 1:
        raise InvalidParameterError(f"a path needs at least 1 vertex, got {n}")
    return (n + 1) // 3


def induced_matching_number(g: Graph, *, budgets: Budgets | None = None) -> int:
    """Exact induced matching number of a simple graph.

    Branch-and-bound on the highest-degree vertex with memoization on the
    remaining-edge mask; exact for every graph within the vertex budget.
    """
    b = budgets or current_budgets()
    if not g.is_simple:
        raise UnsupportedInputError("induced matchings are defined for simple graphs only")
    if g.n > b.nu_vertices:
        raise SizeLimitError(
            f"ν enumeration bound is {b.nu_vertices} vertices, got {g.n}"
        )
    m = len(g.edges)
    if m == 0:
        return 0

    vmask = [(1 << (u - 1)) | (1 << (v - 1)) for u, v in g.edges]
    adj = [0] * (g.n + 1)
    for u, v in g.edges:
        adj[u] |= 1 << (v - 1)
        adj[v] |= 1 << (u - 1)
    # edge j conflicts with edge i iff it touches i's endpoints or their neighbors
    reach = [vmask[i] | adj[u] | adj[v] for i, (u, v) in enumerate(g.edges)]
    conflict = [0] * m
    for i in range(m):
        for j in range(m):
            if i != j and vmask[j] & reach[i]:
                conflict[i] |= 1 << j
    incident = [0] * (g.n + 1)
    for i, (u, v) in enumerate(g.edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i

    memo: dict[int, int] = {}

    def best(avail: int) -> int:
        if avail == 0:
            return 0
        cached = memo.get(avail)
        if cached is not None:
            return cached
        pivot, pivot_deg = 0, -1
        for v in range(1, g.n + 1):
            d = (incident[v] & avail).bit_count()
            if d > pivot_deg:
                pivot, pivot_deg = v, d
        at_pivot = incident[pivot] & avail
        value = best(avail & ~at_pivot)  # pivot vertex stays unmatched
        rest = at_pivot
        while rest:
            e = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            value = max(value, 1 + best(avail & ~(conflict[e] | (1 << e))))
        memo[avail] = value
        return value

    return best((1 << m) - 1)


class _SubsetMarker:
    def __init__(self, name: str):
        self._name = name

    def __repr__(self):
        return self._name


#: Returned by block_gap_decomposition for the full edge set of C_n.
FULL_SUBGRAPH = _SubsetMarker("FULL_SUBGRAPH")
#: Returned by block_gap_decomposition for the empty edge set.
EMPTY_SUBGRAPH = _SubsetMarker("EMPTY_SUBGRAPH")


@dataclass(frozen=True)
class CyclicBlockProfile:
    """Circular run decomposition of a proper nonempty subset of E(C_n).

    ``blocks[i]`` is the number of consecutive present edges in the i-th
    block, ``gaps[i]`` the number of absent edges between block i and the
    next one (circularly). ``anchor`` is the first vertex of the first edge
    of the first block in the original labeling, so the edge subset can be
    reconstructed exactly.
    """

    n: int
    blocks: tuple[int, ...]
    gaps: tuple[int, ...]
    anchor: int

    def __post_init__(self):
        if self.n < 3:
            raise InvalidParameterError(f"ambient cycle needs n >= 3, got {self.n}")
        r = len(self.blocks)
        if r < 1 or len(self.gaps) != r:
            raise InvalidParameterError("blocks and gaps must be nonempty and parallel")
        if any(b < 1 for b in self.blocks) or any(g < 1 for g in self.gaps):
            raise InvalidParameterError("all block and gap sizes must be >= 1")
        if sum(self.blocks) + sum(self.gaps) != self.n:
            raise InvalidParameterError(
                f"block sizes {self.blocks} and gap sizes {self.gaps} do not tile C_{self.n}"
            )
        if not 1 <= self.anchor <= self.n:
            raise InvalidParameterError(f"anchor must lie in 1..{self.n}")

    @property
    def r(self) -> int:
        return len(self.blocks)

    def edge_subset(self) -> tuple[int, ...]:
        """The 1-based cycle-edge indices this profile was derived from."""
        out = []
        pos = self.anchor - 1  # 0-based edge position
        for b, g in zip(self.blocks, self.gaps):
            for _ in range(b):
                out.append(pos % self.n + 1)
                pos += 1
            pos += g
        return tuple(sorted(out))


def block_gap_decomposition(n: int, edge_subset: Iterable[int]):
    """Decompose a subset of E(C_n) into maximal circular runs.

    Returns ``FULL_SUBGRAPH`` for the whole edge set, ``EMPTY_SUBGRAPH`` for
    the empty set, and a ``CyclicBlockProfile`` otherwise. Runs are read
    clockwise starting from the block whose starting edge index is smallest.
    """
    if n < 3:
        raise InvalidParameterError(f"ambient cycle needs n >= 3, got {n}")
    idx = sorted(set(edge_subset))
    if idx and (idx[0] < 1 or idx[-1] > n):
        raise InvalidParameterError(f"edge indices must lie in 1..{n}, got {idx}")
    if not idx:
        return EMPTY_SUBGRAPH
    if len(idx) == n:
        return FULL_SUBGRAPH

    present = [False] * n
    for i in idx:
        present[i - 1] = True
    start = next(
        p for p in range(n) if present[p] and not present[(p - 1) % n]
    )
    blocks, gaps = [], []
    pos, consumed = start, 0
    while consumed < n:
        b = 0
        while present[pos % n]:
            b += 1
            pos += 1
        g = 0
        while consumed + b + g < n and not present[pos % n]:
            g += 1
            pos += 1
        blocks.append(b)
        gaps.append(g)
        consumed += b + g
    return CyclicBlockProfile(n=n, blocks=tuple(blocks), gaps=tuple(gaps), anchor=start + 1)


@dataclass(frozen=True)
class CycleLayout:
    """A walk around a graph that is a cycle, mapping it onto canonical C_n.

    ``vertex_order[p]`` is the original vertex at canonical position p+1;
    ``edge_order[p]`` is the original 1-based edge index at canonical edge
    position p+1. For graphs built by ``make_cycle`` both are identities.
    """

    vertex_order: tuple[int, ...]
    edge_order: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.vertex_order)

    @property
    def is_identity(self) -> bool:
        n = self.n
        return self.vertex_order == tuple(range(1, n + 1)) and self.edge_order == tuple(
            range(1, n + 1)
        )

    def positions_of_edges(self, edge_indices: Iterable[int]) -> tuple[int, ...]:
        """Canonical edge positions (1-based) of the given original indices."""
        inverse = {orig: p + 1 for p, orig in enumerate(self.edge_order)}
        return tuple(sorted(inverse[i] for i in edge_indices))

    def edges_of_positions(self, positions: Iterable[int]) -> tuple[int, ...]:
        """Original 1-based edge indices of the given canonical positions."""
        return tuple(sorted(self.edge_order[p - 1] for p in positions))

    def vector_to_original(self, by_position: tuple[int, ...]) -> tuple[int, ...]:
        """Reindex a canonical-position vector by original vertex labels."""
        out = [0] * self.n
        for p, value in enumerate(by_position):
            out[self.vertex_order[p] - 1] = value
        return tuple(out)


def cycle_layout(g: Graph) -> CycleLayout | None:
    """Detect whether ``g`` is a single cycle; return its canonical walk.

    The walk starts at vertex 1 and proceeds toward its smaller-labeled
    neighbor, which makes the layout the identity for ``make_cycle`` output.
    Returns None when ``g`` is not a cycle.
    """
    if not g.is_simple or g.n < 3 or len(g.edges) != g.n:
        return None
    neighbors: dict[int, list[int]] = {v: [] for v in range(1, g.n + 1)}
    edge_index: dict[frozenset, int] = {}
    for i, (u, v) in enumerate(g.edges, start=1):
        neighbors[u].append(v)
        neighbors[v].append(u)
        edge_index[frozenset((u, v))] = i
    if any(len(nb) != 2 for nb in neighbors.values()):
        return None
    walk = [1]
    prev, cur = None, 1
    nxt = min(neighbors[1])
    while nxt != 1:
        walk.append(nxt)
        prev, cur = cur, nxt
        a, b = neighbors[cur]
        nxt = b if a == prev else a
    if len(walk) != g.n:
        return None  # disconnected union of cycles
    edge_order = tuple(
        edge_index[frozenset((walk[p], walk[(p + 1) % g.n]))] for p in range(g.n)
    )
    return CycleLayout(vertex_order=tuple(walk), edge_order=edge_order)


def parse_graph_text(text: str) -> Graph:
    """Parse the repo-wide graph text format.

    Line 1 is ``n m``; the next m lines hold one edge each as space-separated
    1-based vertex labels. Lines starting with ``#`` and blank lines are
    ignored.
    """
    rows = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append(stripped)
    if not rows:
        raise InvalidParameterError("graph text is empty")
    head = rows[0].split()
    if len(head) != 2:
        raise InvalidParameterError(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise InvalidParameterError(f"header must be 'n m', got {rows[0]!r}") from exc
    if len(rows) - 1 != m:
        raise InvalidParameterError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        try:
            edges.append(tuple(int(tok) for tok in row.split()))
        except ValueError as exc:
            raise InvalidParameterError(f"bad edge line {row!r}") from exc
    return Graph(n, tuple(edges))


def format_graph_text(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"{g.n} {len(g.edges)}")
    lines.extend(" ".join(str(v) for v in e) for e in g.edges)
    return "\n".join(lines) + "\n"


def graph_from_designator(designator: str) -> tuple[Graph, str]:
    """Resolve ``cycle:N`` / ``path:N`` designators or a graph-file path."""
    if designator.startswith("cycle:"):
        try:
            n = int(designator.split(":", 1)[1])
        except ValueError as exc:
            raise InvalidParameterError(f"bad designator {designator!r}") from exc
        return make_cycle(n), designator
    if designator.startswith("path:"):
        try:
            n = int(designator.split(":", 1)[1])
        except ValueError as exc:
            raise InvalidParameterError(f"bad designator {designator!r}") from exc
        return make_path(n), designator
    path = Path(designator)
    if not path.is_file():
        raise InvalidParameterError(
            f"{designator!r} is neither cycle:N, path:N, nor an existing graph file"
        )
    return parse_graph_text(path.read_text()), designator
