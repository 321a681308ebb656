"""Regularity formulas and the depth engine for symbolic cover powers.

For a cycle or forest G on n vertices, the depth of S/(t-th symbolic cover
power) equals n minus the largest edge-ideal regularity over the admissible
subgraphs: reg I(C_n) = 1 + floor((n+1)/3) for the full cycle, and
1 + (induced matching number) for every forest, hence for every proper
subgraph of a cycle. The closed form for cycles at t >= 2 is
n - 1 - floor(tn/(2t+1)); it provably fails at t = 1, so requesting it
there is an error rather than a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .admissible import (
    Certificate,
    box_low_masks,
    certificate_solve,
    cycle_admissible_masks,
    validate_certificate,
    witness_classifies,
    _mask_to_indices,
    _sorted_members,
)
from .config import Budgets, current_budgets
from .errors import (
    InvalidParameterError,
    OutOfHypothesisError,
    UnsupportedInputError,
)
from .graphs import (
    CyclicBlockProfile,
    Graph,
    block_gap_decomposition,
    cycle_layout,
    induced_matching_number,
    is_forest,
)

ENGINES = ("certificate", "bruteforce", "closed-form", "polarization-oracle")


def reg_cycle(n: int) -> int:
    """Edge-ideal regularity of the n-cycle: 1 + floor((n+1)/3)."""
    if n < 3:
        raise InvalidParameterError(f"cycles need n >= 3, got {n}")
    return 1 + (n + 1) // 3


def reg_forest(g: Graph, *, budgets: Budgets | None = None) -> int:
    """Edge-ideal regularity of a forest with >= 1 edge: 1 + induced matching number."""
    if not g.edges:
        raise InvalidParameterError("regularity of an edgeless graph's edge ideal is undefined here")
    if not is_forest(g):
        raise InvalidParameterError("this formula applies to forests only")
    return 1 + induced_matching_number(g, budgets=budgets)


def closed_form_depth_cycle(n: int, t: int) -> int:
    """n - 1 - floor(tn/(2t+1)); valid for t >= 2 only.

    At t = 1 the formula genuinely disagrees with the engine (e.g. n = 5),
    so it is rejected instead of returned.
    """
    if n < 3:
        raise InvalidParameterError(f"cycles need n >= 3, got {n}")
    if t < 2:
        raise OutOfHypothesisError(
            f"the closed form requires t >= 2 (got t={t}); use the engine for t = 1"
        )
    return n - 1 - (t * n) // (2 * t + 1)


def ordinary_power_depth_cycle(n: int, t: int) -> int:
    """Depth for ordinary powers of the cycle cover ideal, t >= 2.

    Zero for odd n; for even n, ordinary and symbolic powers coincide, so
    the symbolic closed form applies.
    """
    if n < 3:
        raise InvalidParameterError(f"cycles need n >= 3, got {n}")
    if t < 2:
        raise OutOfHypothesisError(f"the ordinary-power statement requires t >= 2 (got t={t})")
    if n % 2 == 1:
        return 0
    return closed_form_depth_cycle(n, t)


def check_floor_inequality(n: int, t: int) -> bool:
    """floor((n+1)/3) <= floor(tn/(2t+1)), evaluated exactly."""
    if n < 3:
        raise InvalidParameterError(f"need n >= 3, got {n}")
    if t < 2:
        raise InvalidParameterError(f"need t >= 2, got {t}")
    return (n + 1) // 3 <= (t * n) // (2 * t + 1)


@dataclass(frozen=True)
class DepthReport:
    """Depth result with the regularity maximum and an attaining witness."""

    graph: str
    t: int
    depth: int
    max_reg: int
    witness_edges: tuple[int, ...] | None
    witness_certificate: Certificate | None
    engine: str

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph,
            "t": self.t,
            "depth": self.depth,
            "max_reg": self.max_reg,
            "witness_edges": list(self.witness_edges) if self.witness_edges is not None else None,
            "witness_certificate": (
                self.witness_certificate.to_json_dict()
                if self.witness_certificate is not None
                else None
            ),
            "engine": self.engine,
        }


def _rotations(mask: int, n: int) -> int:
    """Canonical (minimal) rotation of an n-bit circular mask."""
    full = (1 << n) - 1
    best = mask
    cur = mask
    for _ in range(n - 1):
        cur = ((cur >> 1) | (cur << (n - 1))) & full
        if cur < best:
            best = cur
    return best


class _CycleNuScorer:
    """Induced matching numbers of cycle-edge subsets, memoized by rotation class."""

    def __init__(self, n: int, budgets: Budgets | None):
        self.n = n
        self.budgets = budgets
        self.cache: dict[int, int] = {}
        from .graphs import make_cycle

        self.cycle = make_cycle(n)

    def nu(self, mask: int) -> int:
        key = _rotations(mask, self.n)
        value = self.cache.get(key)
        if value is None:
            edges = tuple(self.cycle.edges[i - 1] for i in _mask_to_indices(key))
            value = induced_matching_number(Graph(self.n, edges), budgets=self.budgets)
            self.cache[key] = value
        return value


def _score_cycle_masks(n, t, masks, budgets):
    """Max regularity over admissible masks with the first attaining witness.

    Masks are scanned in (size, bitmask) order; proper subsets score
    1 + induced matching number, the full set scores reg I(C_n).
    """
    full = (1 << n) - 1
    scorer = _CycleNuScorer(n, budgets)
    best_reg, best_mask = -1, None
    for mask in _sorted_members(masks):
        reg = reg_cycle(n) if mask == full else 1 + scorer.nu(mask)
        if reg > best_reg:
            best_reg, best_mask = reg, mask
    return best_reg, best_mask


def max_admissible_nu_cycle(
    n: int, t: int, *, parallelism: int = 1, budgets: Budgets | None = None
) -> int:
    """Largest induced matching number over proper admissible subsets of C_n."""
    value, _ = max_admissible_nu_cycle_with_witness(
        n, t, parallelism=parallelism, budgets=budgets
    )
    return value


def max_admissible_nu_cycle_with_witness(
    n: int, t: int, *, parallelism: int = 1, budgets: Budgets | None = None
):
    """As max_admissible_nu_cycle, also returning the first attaining edge subset."""
    full = (1 << n) - 1
    masks = [m for m in cycle_admissible_masks(n, t, parallelism=parallelism, budgets=budgets) if m != full]
    if not masks:
        raise InvalidParameterError(f"C_{n} has no proper admissible subsets at t={t}")
    scorer = _CycleNuScorer(n, budgets)
    best, best_mask = -1, None
    for mask in _sorted_members(masks):
        value = scorer.nu(mask)
        if value > best:
            best, best_mask = value, mask
    return best, _mask_to_indices(best_mask)


def _cycle_depth_report(g, layout, t, engine, designator, parallelism, budgets):
    n = g.n
    full = (1 << n) - 1
    if engine == "certificate":
        masks = cycle_admissible_masks(n, t, parallelism=parallelism, budgets=budgets)
    else:
        low = box_low_masks(g, t, parallelism=parallelism, budgets=budgets)
        # translate original edge indices to canonical cycle positions
        masks = [
            sum(1 << (p - 1) for p in layout.positions_of_edges(_mask_to_indices(m)))
            for m in low
        ]
    max_reg, best_mask = _score_cycle_masks(n, t, masks, budgets)
    if best_mask == full:
        witness_edges = tuple(range(1, n + 1))
        cert = None
    else:
        positions = _mask_to_indices(best_mask)
        witness_edges = layout.edges_of_positions(positions)
        profile = block_gap_decomposition(n, positions)
        assert isinstance(profile, CyclicBlockProfile)
        cert = certificate_solve(profile, t)
        assert cert is not None and validate_certificate(profile, cert)
    return DepthReport(
        graph=designator,
        t=t,
        depth=n - max_reg,
        max_reg=max_reg,
        witness_edges=witness_edges,
        witness_certificate=cert,
        engine=engine,
    )


def _forest_depth_report(g, t, designator, parallelism, budgets):
    n = g.n
    masks = box_low_masks(g, t, parallelism=parallelism, budgets=budgets)
    best_reg, best_mask = -1, None
    for mask in _sorted_members(masks):
        edges = tuple(g.edges[i - 1] for i in _mask_to_indices(mask))
        reg = 1 + induced_matching_number(Graph(n, edges), budgets=budgets)
        if reg > best_reg:
            best_reg, best_mask = reg, mask
    witness_edges = _mask_to_indices(best_mask)
    from .admissible import is_admissible

    vec = is_admissible(g, t, witness_edges, budgets=budgets)
    assert vec is not None and witness_classifies(g, t, witness_edges, vec)
    return DepthReport(
        graph=designator,
        t=t,
        depth=n - best_reg,
        max_reg=best_reg,
        witness_edges=witness_edges,
        witness_certificate=None,
        engine="bruteforce",
    )


def depth_symbolic(
    g: Graph,
    t: int,
    engine: str = "auto",
    *,
    designator: str | None = None,
    parallelism: int = 1,
    budgets: Budgets | None = None,
) -> DepthReport:
    """Depth of S/(t-th symbolic cover power) for a cycle or forest.

    Engines: "certificate" (cycles), "bruteforce" (cycles and forests),
    "closed-form" (cycles, t >= 2), "polarization-oracle" (anything tiny
    enough for the homology oracle), or "auto" to pick the natural one.
    """
    if t < 1:
        raise InvalidParameterError(f"threshold must be >= 1, got {t}")
    if not g.edges:
        raise InvalidParameterError("depth of the symbolic cover power needs >= 1 edge")
    name = designator or f"graph:{g.n}"
    if engine not in ENGINES + ("auto",):
        raise InvalidParameterError(f"unknown engine {engine!r}; pick from {ENGINES}")

    if engine == "polarization-oracle":
        from .homology import depth_via_polarization
        from .ideals import expand_generators, symbolic_cover_power

        ideal = expand_generators(symbolic_cover_power(g, t), budgets=budgets)
        depth = depth_via_polarization(ideal, budgets=budgets)
        return DepthReport(
            graph=name,
            t=t,
            depth=depth,
            max_reg=g.n - depth,
            witness_edges=None,
            witness_certificate=None,
            engine="polarization-oracle",
        )

    if not g.is_simple:
        raise UnsupportedInputError(
            "only cycles and forests are supported here; "
            "the polarization-oracle engine handles tiny hypergraphs"
        )
    layout = cycle_layout(g)
    if layout is not None:
        if engine == "closed-form":
            depth = closed_form_depth_cycle(g.n, t)
            return DepthReport(
                graph=name,
                t=t,
                depth=depth,
                max_reg=g.n - depth,
                witness_edges=None,
                witness_certificate=None,
                engine="closed-form",
            )
        chosen = "certificate" if engine == "auto" else engine
        return _cycle_depth_report(g, layout, t, chosen, name, parallelism, budgets)
    if is_forest(g):
        if engine in ("certificate", "closed-form"):
            raise InvalidParameterError(f"the {engine} engine applies to cycles only")
        return _forest_depth_report(g, t, name, parallelism, budgets)
    raise UnsupportedInputError(
        "depth engines cover cycles and forests; "
        "try the polarization-oracle engine for other tiny instances"
    )
