"""Exact arithmetic for monomial ideals.

Monomials are exponent tuples over variables x_1..x_n. ``MonomialIdeal``
keeps a minimal generating set in lexicographic order, so equality is
structural and serialized output is byte-stable. ``SymbolicCoverIdeal``
represents an intersection of powered edge primes without expanding it;
``expand_generators`` realizes the intersection explicitly at desk scale via
pairwise generator lcms, and ``colon_radical_subgraph`` is the fast path
that reads the radical of a colon straight off the edge sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .config import Budgets, current_budgets
from .errors import InvalidParameterError, SizeLimitError
from .graphs import Graph

Exponents = tuple[int, ...]


class _Membership:
    def __repr__(self):
        return "IN_IDEAL"


#: Returned by colon_radical_subgraph when the monomial lies in the ideal
#: (the colon is then the unit ideal and no subgraph arises).
IN_IDEAL = _Membership()


def _check_exponents(nvars: int, a) -> Exponents:
    vec = tuple(int(x) for x in a)
    if len(vec) != nvars:
        raise InvalidParameterError(f"expected {nvars} exponents, got {len(vec)}")
    if any(x < 0 for x in vec):
        raise InvalidParameterError(f"exponents must be nonnegative, got {vec}")
    return vec


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimalize(gens) -> tuple[Exponents, ...]:
    """Drop generators divisible by another; sort lexicographically."""
    unique = sorted(set(gens))
    keep = []
    for i, g in enumerate(unique):
        if any(j != i and _divides(h, g) for j, h in enumerate(unique)):
            continue
        keep.append(g)
    return tuple(keep)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal held by its (unique) minimal monomial generators."""

    nvars: int
    gens: tuple[Exponents, ...]

    def __post_init__(self):
        if self.nvars < 1:
            raise InvalidParameterError("ambient variable count must be positive")
        vecs = tuple(_check_exponents(self.nvars, g) for g in self.gens)
        object.__setattr__(self, "gens", _minimalize(vecs))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_squarefree(self) -> bool:
        return all(x <= 1 for g in self.gens for x in g)

    def to_json_dict(self) -> dict:
        return {"n": self.nvars, "generators": [list(g) for g in self.gens]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "MonomialIdeal":
        return cls(data["n"], tuple(tuple(g) for g in data["generators"]))


@dataclass(frozen=True)
class SymbolicCoverIdeal:
    """An intersection of powered edge primes, one component per edge.

    All components carry the same power t, so the object represents the t-th
    symbolic power of the cover ideal of the (hyper)graph with those edges.
    """

    nvars: int
    power: int
    supports: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.power < 1:
            raise InvalidParameterError(f"power must be >= 1, got {self.power}")
        # reuse Graph validation for range/duplicate/antichain conditions
        Graph(self.nvars, self.supports)
        object.__setattr__(self, "supports", tuple(tuple(sorted(s)) for s in self.supports))

    @property
    def components(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        return tuple((s, self.power) for s in self.supports)


def symbolic_cover_power(g: Graph, t: int) -> SymbolicCoverIdeal:
    """The t-th symbolic power of the cover ideal of ``g``."""
    if t < 1:
        raise InvalidParameterError(f"power must be >= 1, got {t}")
    if not g.edges:
        raise InvalidParameterError("cover ideals need at least one edge")
    return SymbolicCoverIdeal(nvars=g.n, power=t, supports=g.edges)


def colon_radical_subgraph(g: Graph, t: int, a) -> tuple[int, ...]:
    """Edge indices with exponent sum below t; the membership marker if none.

    The returned subset H satisfies: the radical of (t-th symbolic cover
    power : x^a) is the cover ideal of H. An empty H means x^a already lies
    in the symbolic power, so the colon is the unit ideal.
    """
    if t < 1:
        raise InvalidParameterError(f"power must be >= 1, got {t}")
    vec = _check_exponents(g.n, a)
    low = tuple(
        i for i, e in enumerate(g.edges, start=1) if sum(vec[v - 1] for v in e) < t
    )
    return low if low else IN_IDEAL


def prime_power_generators(nvars: int, support: tuple[int, ...], t: int) -> tuple[Exponents, ...]:
    """Minimal generators of (x_i | i in support)^t: degree-t monomials in those variables."""
    gens = []
    for combo in combinations_with_replacement(sorted(support), t):
        vec = [0] * nvars
        for v in combo:
            vec[v - 1] += 1
        gens.append(tuple(vec))
    return tuple(gens)


def _intersect_gens(a, b, cap: int) -> tuple[Exponents, ...]:
    if len(a) * len(b) > cap:
        raise SizeLimitError(
            f"pairwise intersection would create {len(a) * len(b)} candidates (cap {cap})"
        )
    lcms = {tuple(max(x, y) for x, y in zip(g, h)) for g in a for h in b}
    return _minimalize(lcms)


def expand_generators(ideal: SymbolicCoverIdeal, *, budgets: Budgets | None = None) -> MonomialIdeal:
    """Minimal generating set of the powered-prime intersection.

    Iterated pairwise lcm with minimalization after each step; deterministic
    and exact, guarded by the expansion budgets.
    """
    b = budgets or current_budgets()
    if ideal.nvars > b.expand_vars:
        raise SizeLimitError(
            f"expansion guard is {b.expand_vars} variables, got {ideal.nvars}"
        )
    if ideal.power > b.expand_power:
        raise SizeLimitError(f"expansion guard is power {b.expand_power}, got {ideal.power}")
    gens = prime_power_generators(ideal.nvars, ideal.supports[0], ideal.power)
    for support in ideal.supports[1:]:
        gens = _intersect_gens(
            gens, prime_power_generators(ideal.nvars, support, ideal.power), b.expand_generators
        )
    return MonomialIdeal(ideal.nvars, gens)


def cover_ideal(nvars: int, supports) -> MonomialIdeal:
    """The intersection of the (unpowered) primes of the given edge supports."""
    sci = SymbolicCoverIdeal(nvars=nvars, power=1, supports=tuple(tuple(s) for s in supports))
    return expand_generators(sci)


def edge_ideal(g: Graph) -> MonomialIdeal:
    """The ideal generated by one squarefree monomial per edge."""
    if not g.edges:
        raise InvalidParameterError("edge ideals need at least one edge")
    gens = []
    for e in g.edges:
        vec = [0] * g.n
        for v in e:
            vec[v - 1] = 1
        gens.append(tuple(vec))
    return MonomialIdeal(g.n, tuple(gens))


def colon_by_monomial(ideal: MonomialIdeal, u) -> MonomialIdeal:
    """(I : x^u) via the standard identity g -> g / gcd(g, x^u)."""
    vec = _check_exponents(ideal.nvars, u)
    gens = tuple(
        tuple(max(x - y, 0) for x, y in zip(g, vec)) for g in ideal.gens
    )
    return MonomialIdeal(ideal.nvars, gens)


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    """Clamp all exponents to 1 and minimalize."""
    gens = tuple(tuple(min(x, 1) for x in g) for g in ideal.gens)
    return MonomialIdeal(ideal.nvars, gens)


def contains(ideal, u) -> bool:
    """Membership of x^u: divisibility by some generator, or per-component degree."""
    if isinstance(ideal, MonomialIdeal):
        vec = _check_exponents(ideal.nvars, u)
        return any(_divides(g, vec) for g in ideal.gens)
    if isinstance(ideal, SymbolicCoverIdeal):
        vec = _check_exponents(ideal.nvars, u)
        return all(
            sum(vec[v - 1] for v in s) >= ideal.power for s in ideal.supports
        )
    raise InvalidParameterError(f"unsupported ideal type {type(ideal).__name__}")


def polarize(ideal: MonomialIdeal):
    """Split exponents into squarefree copies.

    Each occurrence x_i^k becomes x_{i,1}...x_{i,k}. Every original variable
    keeps max(1, highest exponent) copies, so unused variables survive in the
    variable map and depth(S/I) = nvars - pd(polarized quotient) holds.

    Returns (squarefree ideal, new ambient size N, variable map), where the
    map lists (original variable, copy number) for each new variable 1..N.
    """
    if ideal.is_zero:
        raise InvalidParameterError("cannot polarize the zero ideal")
    copies = [1] * ideal.nvars
    for g in ideal.gens:
        for i, x in enumerate(g):
            copies[i] = max(copies[i], x)
    offsets = [0] * ideal.nvars
    total = 0
    for i, c in enumerate(copies):
        offsets[i] = total
        total += c
    varmap = tuple(
        (i + 1, k + 1) for i, c in enumerate(copies) for k in range(c)
    )
    new_gens = []
    for g in ideal.gens:
        vec = [0] * total
        for i, x in enumerate(g):
            for k in range(x):
                vec[offsets[i] + k] = 1
        new_gens.append(tuple(vec))
    return MonomialIdeal(total, tuple(new_gens)), total, varmap
