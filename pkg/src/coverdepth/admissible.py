"""Admissible subgraphs: decision, enumeration, certificates, and reductions.

A nonempty subset H of the edges is t-admissible when some exponent vector
keeps every H-edge sum below t and every other edge sum at least t; these
are exactly the subgraphs that arise as colon radicals of the t-th symbolic
cover power. Two engines decide the property:

* the exponent-box engine scans {0..t}^n and classifies edges by their sums
  (works for any hypergraph, budgeted);
* the certificate engine, for proper subgraphs of a cycle, solves the
  two-value endpoint system attached to the block/gap profile: writing u_i,
  v_i in {0..t-1} for the entry/exit values of block i, feasibility means
  u_i + v_i < t whenever the block is a single edge and v_i + u_{i+1} >= t
  whenever the following gap is a single edge (indices circular).

Both enumerations shard deterministically, so results are independent of
the parallelism degree.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterable

from . import _kernels
from .config import Budgets, current_budgets
from .errors import InfeasibleParameterError, InvalidParameterError, SizeLimitError
from .graphs import (
    EMPTY_SUBGRAPH,
    FULL_SUBGRAPH,
    CyclicBlockProfile,
    Graph,
    block_gap_decomposition,
    cycle_layout,
)


@dataclass(frozen=True)
class Certificate:
    """Block endpoint values (u_i, v_i) in {0..t-1} certifying admissibility."""

    t: int
    u: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        if self.t < 1:
            raise InvalidParameterError(f"threshold must be >= 1, got {self.t}")
        u = tuple(int(x) for x in self.u)
        v = tuple(int(x) for x in self.v)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        if len(u) != len(v) or not u:
            raise InvalidParameterError("u and v must be nonempty and parallel")
        if any(not 0 <= x <= self.t - 1 for x in u + v):
            raise InvalidParameterError("certificate values must lie in 0..t-1")

    @property
    def r(self) -> int:
        return len(self.u)

    def to_json_dict(self) -> dict:
        return {"t": self.t, "u": list(self.u), "v": list(self.v)}


def validate_certificate(profile: CyclicBlockProfile, cert: Certificate) -> bool:
    """Check the endpoint constraints of ``cert`` against ``profile``."""
    if cert.r != profile.r:
        return False
    t = cert.t
    for i in range(profile.r):
        if profile.blocks[i] == 1 and cert.u[i] + cert.v[i] >= t:
            return False
        if profile.gaps[i] == 1 and cert.v[i] + cert.u[(i + 1) % profile.r] < t:
            return False
    return True


def certificate_solve(profile: CyclicBlockProfile, t: int) -> Certificate | None:
    """Find endpoint values for ``profile``, or None when none exist.

    For each trial u_1, propagate around the cycle picking v_i maximal and
    u_{i+1} minimal; both choices are extremal, so a trial closes the loop
    iff some certificate with that u_1 exists.
    """
    if t < 1:
        raise InvalidParameterError(f"threshold must be >= 1, got {t}")
    r = profile.r
    for u1 in range(t):
        u_vals, v_vals = [], []
        u = u1
        ok = True
        for i in range(r):
            u_vals.append(u)
            v = (t - 1 - u) if profile.blocks[i] == 1 else (t - 1)
            v_vals.append(v)
            if profile.gaps[i] == 1:
                u = max(0, t - v)
                if u > t - 1:
                    ok = False
                    break
            else:
                u = 0
        if ok and u <= u1:
            cert = Certificate(t=t, u=tuple(u_vals), v=tuple(v_vals))
            assert validate_certificate(profile, cert)
            return cert
    return None


def certificate_expand(profile: CyclicBlockProfile, cert: Certificate) -> tuple[int, ...]:
    """Turn a certificate into a witness exponent vector.

    Block entry/exit vertices get u_i/v_i, block interiors 0, gap interiors
    t; the result classifies every cycle edge exactly as the profile does.
    """
    if not validate_certificate(profile, cert):
        raise InvalidParameterError("certificate does not satisfy the profile's constraints")
    n, t = profile.n, cert.t
    a = [0] * n
    pos = profile.anchor - 1  # 0-based position of the first block's first vertex
    for i in range(profile.r):
        b, g = profile.blocks[i], profile.gaps[i]
        a[pos % n] = cert.u[i]
        a[(pos + b) % n] = cert.v[i]
        for k in range(1, g):
            a[(pos + b + k) % n] = t
        pos += b + g
    return tuple(a)


def alternating_chain_certificate(k: int, t: int) -> Certificate:
    """Certificate for a chain of k+1 edges separated by single gaps.

    Entry values climb 0..k while exit values descend from t-1, which forces
    k <= t-1; larger k is provably infeasible for such a chain.
    """
    if t < 1:
        raise InvalidParameterError(f"threshold must be >= 1, got {t}")
    if k < 0:
        raise InvalidParameterError(f"chain parameter must be >= 0, got {k}")
    if k > t - 1:
        raise InfeasibleParameterError(
            f"a chain of {k + 1} alternating edges admits no certificate at t={t}"
        )
    return Certificate(
        t=t,
        u=tuple(range(k + 1)),
        v=tuple(t - 1 - i for i in range(k + 1)),
    )


@dataclass(frozen=True)
class AdmissibleFamily:
    """All admissible edge subsets of a graph at a fixed threshold.

    Members are 1-based edge-index tuples ordered by (size, bitmask); the
    full edge set is always a member and the empty set never is.
    """

    graph: Graph
    designator: str
    t: int
    members: tuple[tuple[int, ...], ...]
    witnesses: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        full = tuple(range(1, len(self.graph.edges) + 1))
        if any(not m for m in self.members):
            raise InvalidParameterError("the empty subset is never admissible")
        if full not in self.members:
            raise InvalidParameterError("the full edge set must always be a member")
        if self.witnesses is not None and len(self.witnesses) != len(self.members):
            raise InvalidParameterError("witnesses must parallel members")

    def __len__(self) -> int:
        return len(self.members)

    def member_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.members)

    def to_json_dict(self) -> dict:
        data = {
            "graph": self.designator,
            "t": self.t,
            "members": [list(m) for m in self.members],
        }
        if self.witnesses is not None:
            data["witnesses"] = [list(w) for w in self.witnesses]
        return data


def _mask_to_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _indices_to_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def _sorted_members(masks: Iterable[int]) -> list[int]:
    return sorted(masks, key=lambda m: (m.bit_count(), m))


def cycle_admissible_masks(
    n: int, t: int, *, parallelism: int = 1, budgets: Budgets | None = None
) -> list[int]:
    """All admissible edge masks of C_n (full mask included), ascending."""
    b = budgets or current_budgets()
    if n < 3:
        raise InvalidParameterError(f"cycles need n >= 3, got {n}")
    if t < 1:
        raise InvalidParameterError(f"threshold must be >= 1, got {t}")
    if n > b.subset_vertices:
        raise SizeLimitError(
            f"subset scan guard is {b.subset_vertices} vertices, got {n}"
        )
    full = (1 << n) - 1
    if parallelism <= 1:
        masks = _kernels.cycle_admissible_masks(n, t, 1, full)
    else:
        chunk = max(1, (full - 1) // parallelism + 1)
        spans = [
            (lo, min(lo + chunk, full)) for lo in range(1, full, chunk)
        ]
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            parts = list(
                pool.map(lambda s: _kernels.cycle_admissible_masks(n, t, s[0], s[1]), spans)
            )
        masks = [m for part in parts for m in part]
    masks.append(full)
    return masks


def box_low_masks(
    g: Graph, t: int, *, parallelism: int = 1, budgets: Budgets | None = None
) -> list[int]:
    """Distinct nonzero low-edge masks of ``g`` over the box {0..t}^n, sorted."""
    b = budgets or current_budgets()
    if t < 1:
        raise InvalidParameterError(f"threshold must be >= 1, got {t}")
    if not g.edges:
        raise InvalidParameterError("admissibility needs at least one edge")
    size = (t + 1) ** g.n
    if size > b.box_evaluations:
        raise SizeLimitError(
            f"exponent box has {size} points, budget is {b.box_evaluations}"
        )
    vmasks = [_indices_to_mask(e) for e in g.edges]
    if parallelism <= 1:
        return _kernels.box_admissible_masks(vmasks, g.n, t, -1)
    with ThreadPoolExecutor(max_workers=parallelism) as pool:
        parts = list(
            pool.map(
                lambda c: _kernels.box_admissible_masks(vmasks, g.n, t, c),
                range(t + 1),
            )
        )
    merged: set[int] = set()
    for part in parts:
        merged.update(part)
    return sorted(merged)


def _family_from_masks(g, designator, t, masks) -> AdmissibleFamily:
    members = tuple(_mask_to_indices(m) for m in _sorted_members(masks))
    return AdmissibleFamily(graph=g, designator=designator, t=t, members=members)


def enumerate_admissible_bruteforce(
    g: Graph,
    t: int,
    *,
    designator: str | None = None,
    parallelism: int = 1,
    budgets: Budgets | None = None,
) -> AdmissibleFamily:
    """Admissible family via the exponent-box scan; works for any hypergraph."""
    masks = box_low_masks(g, t, parallelism=parallelism, budgets=budgets)
    return _family_from_masks(g, designator or f"graph:{g.n}", t, masks)


def enumerate_admissible_cycle(
    n: int, t: int, *, parallelism: int = 1, budgets: Budgets | None = None
) -> AdmissibleFamily:
    """Admissible family of C_n via the certificate engine over all subsets."""
    from .graphs import make_cycle

    masks = cycle_admissible_masks(n, t, parallelism=parallelism, budgets=budgets)
    return _family_from_masks(make_cycle(n), f"cycle:{n}", t, masks)


def is_admissible(
    g: Graph, t: int, edges: Iterable[int], *, budgets: Budgets | None = None
):
    """Witness exponent vector for the subset, or None when inadmissible.

    The full edge set always gets the zero vector. Proper subsets of a cycle
    go through the certificate engine; anything else is a budgeted search of
    {0..t}^n (coordinates above t never change the classification, so the
    box is exhaustive).
    """
    if t < 1:
        raise InvalidParameterError(f"threshold must be >= 1, got {t}")
    subset = tuple(sorted(set(edges)))
    m = len(g.edges)
    if not subset:
        raise InvalidParameterError("the empty subset is never admissible; pass edges")
    if subset[0] < 1 or subset[-1] > m:
        raise InvalidParameterError(f"edge indices must lie in 1..{m}, got {subset}")
    if len(subset) == m:
        return (0,) * g.n

    layout = cycle_layout(g)
    if layout is not None:
        positions = layout.positions_of_edges(subset)
        profile = block_gap_decomposition(g.n, positions)
        assert profile not in (FULL_SUBGRAPH, EMPTY_SUBGRAPH)
        cert = certificate_solve(profile, t)
        if cert is None:
            return None
        return layout.vector_to_original(certificate_expand(profile, cert))

    b = budgets or current_budgets()
    size = (t + 1) ** g.n
    if size > b.box_evaluations:
        raise SizeLimitError(
            f"exponent box has {size} points, budget is {b.box_evaluations}"
        )
    vmasks = [_indices_to_mask(e) for e in g.edges]
    return _kernels.box_find_witness(vmasks, g.n, t, _indices_to_mask(subset))


def witness_classifies(g: Graph, t: int, edges: Iterable[int], a) -> bool:
    """Definitional check: a's edge sums are < t exactly on the subset."""
    subset = set(edges)
    for i, e in enumerate(g.edges, start=1):
        total = sum(a[v - 1] for v in e)
        if (total < t) != (i in subset):
            return False
    return True


def reduce_block_ge4(blocks, i: int) -> tuple[int, ...]:
    """Split block i (1-based, size >= 4) into sizes 1 and size-3."""
    b = tuple(int(x) for x in blocks)
    if not 1 <= i <= len(b):
        raise InvalidParameterError(f"index must lie in 1..{len(b)}, got {i}")
    if b[i - 1] < 4:
        raise InvalidParameterError(f"block {i} has size {b[i - 1]}, need >= 4")
    return b[: i - 1] + (1, b[i - 1] - 3) + b[i:]


def reduce_block_2or3(blocks, i: int) -> tuple[int, ...]:
    """Shrink block i (1-based, size 2 or 3) to a single edge."""
    b = tuple(int(x) for x in blocks)
    if not 1 <= i <= len(b):
        raise InvalidParameterError(f"index must lie in 1..{len(b)}, got {i}")
    if not 2 <= b[i - 1] <= 3:
        raise InvalidParameterError(f"block {i} has size {b[i - 1]}, need 2 or 3")
    return b[: i - 1] + (1,) + b[i:]


def is_realizable(n: int, t: int, blocks) -> bool:
    """Whether some admissible subgraph of C_n has exactly these block sizes.

    Only gap sizes 1 vs >= 2 matter to the endpoint constraints, so gap
    compositions are searched as binary patterns with a totals check.
    """
    if n < 3:
        raise InvalidParameterError(f"cycles need n >= 3, got {n}")
    if t < 1:
        raise InvalidParameterError(f"threshold must be >= 1, got {t}")
    b = tuple(int(x) for x in blocks)
    if not b or any(x < 1 for x in b):
        raise InvalidParameterError(f"block sizes must be positive, got {b}")
    total, r = sum(b), len(b)
    if total == n:
        return r == 1  # the full edge set, always admissible
    if total + r > n:
        return False
    rest = n - total
    for pattern in product((1, 2), repeat=r):
        wide = pattern.count(2)
        if wide == 0:
            if rest != r:
                continue
            gaps = [1] * r
        else:
            minimum = (r - wide) + 2 * wide
            if rest < minimum:
                continue
            gaps = list(pattern)
            gaps[pattern.index(2)] += rest - minimum
        profile = CyclicBlockProfile(n=n, blocks=b, gaps=tuple(gaps), anchor=1)
        if certificate_solve(profile, t) is not None:
            return True
    return False


def build_ones_configuration(n: int, t: int) -> tuple[tuple[int, ...], Certificate]:
    """An admissible subset of C_n with floor(tn/(2t+1)) single-edge blocks.

    Writes the block count m as tq + r with 1 <= r <= t and lays out q
    alternating chains of t edges plus one of r, consecutive chains
    separated by two absent edges; m <= tn/(2t+1) guarantees the layout
    closes with a final gap of at least two edges.
    """
    if n < 3:
        raise InvalidParameterError(f"cycles need n >= 3, got {n}")
    if t < 1:
        raise InvalidParameterError(f"threshold must be >= 1, got {t}")
    m = (t * n) // (2 * t + 1)
    q, rem = divmod(m - 1, t)
    rem += 1
    chains = [t] * q + [rem]
    edges: list[int] = []
    u_vals: list[int] = []
    v_vals: list[int] = []
    cursor = 1
    for length in chains:
        chain_cert = alternating_chain_certificate(length - 1, t)
        edges.extend(cursor + 2 * j for j in range(length))
        u_vals.extend(chain_cert.u)
        v_vals.extend(chain_cert.v)
        cursor += (2 * length - 1) + 2
    last_edge = edges[-1]
    assert n - last_edge >= 2, "chain layout must close with a gap of >= 2 edges"
    cert = Certificate(t=t, u=tuple(u_vals), v=tuple(v_vals))
    profile = block_gap_decomposition(n, edges)
    assert isinstance(profile, CyclicBlockProfile)
    assert validate_certificate(profile, cert)
    return tuple(edges), cert
