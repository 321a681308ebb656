"""Independent verification via exact simplicial homology over the rationals.

Squarefree monomial ideals correspond to simplicial complexes (faces are the
squarefree monomials outside the ideal). Ranks of reduced homology of vertex
restrictions give the graded Betti numbers of the quotient, hence its
projective dimension and regularity; polarization extends this to arbitrary
monomial ideals and yields a depth oracle that is completely independent of
the admissible-subgraph engines.

All ranks are computed over the rationals by fraction-free integer
elimination with Python's arbitrary-precision integers. Graded Betti numbers
of monomial ideals can depend on the field in general; at the sizes this
oracle accepts the computed invariants are field-independent, and the
rational choice is deliberate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .config import Budgets, current_budgets
from .errors import InvalidParameterError, SizeLimitError, UnsupportedInputError
from .graphs import Graph
from .ideals import MonomialIdeal, polarize


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its maximal faces (vertices 1-based, ambient size n).

    ``facets == ((),)`` is the complex whose only face is empty; it has one
    unit of reduced homology in dimension -1.
    """

    n: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameterError("ambient vertex count must be >= 0")
        norm = sorted({tuple(sorted(set(f))) for f in self.facets})
        for f in norm:
            if f and (f[0] < 1 or f[-1] > self.n):
                raise InvalidParameterError(f"facet {f} leaves the vertex range 1..{self.n}")
        sets = [set(f) for f in norm]
        maximal = tuple(
            f
            for i, f in enumerate(norm)
            if not any(j != i and sets[i] < sets[j] for j in range(len(norm)))
        )
        if not maximal:
            raise InvalidParameterError("a complex needs at least the empty face")
        object.__setattr__(self, "facets", maximal)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1


def independence_complex(g: Graph) -> SimplicialComplex:
    """Maximal independent vertex sets of a simple graph."""
    if not g.is_simple:
        raise UnsupportedInputError("independence complexes are defined for simple graphs")
    adj = [0] * (g.n + 1)
    for u, v in g.edges:
        adj[u] |= 1 << (v - 1)
        adj[v] |= 1 << (u - 1)
    independent = []
    for s in range(1 << g.n):
        if all(not (adj[v + 1] & s) for v in range(g.n) if (s >> v) & 1):
            independent.append(s)
    ind_set = set(independent)
    facets = []
    for s in independent:
        if any(
            not ((s >> v) & 1) and (s | (1 << v)) in ind_set for v in range(g.n)
        ):
            continue
        facets.append(tuple(v + 1 for v in range(g.n) if (s >> v) & 1))
    return SimplicialComplex(g.n, tuple(facets) or ((),))


def _rank_int_rows(rows: list[dict[int, int]]) -> int:
    """Exact rank over the rationals of an integer matrix given as sparse rows.

    Forward elimination with cross-multiplication keeps everything integral;
    pivots are the minimal column of each reduced row, so eliminating a
    pivot column only introduces larger columns and the loop terminates.
    Rows are gcd-normalized to keep entries small.
    """
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            c = min(r)
            p_row = pivots.get(c)
            if p_row is None:
                break
            p, x = p_row[c], r[c]
            g = gcd(p, x)
            a, b = p // g, x // g
            merged: dict[int, int] = {}
            for k in r.keys() | p_row.keys():
                val = a * r.get(k, 0) - b * p_row.get(k, 0)
                if val:
                    merged[k] = val
            r = merged
        if r:
            g = 0
            for v in r.values():
                g = gcd(g, v)
            if g > 1:
                r = {k: v // g for k, v in r.items()}
            pivots[min(r)] = r
            rank += 1
    return rank


def _boundary_rank(upper: list[tuple[int, ...]], lower_index: dict[tuple[int, ...], int]) -> int:
    """Rank of the boundary map from dimension-d faces to dimension-(d-1) faces."""
    rows = []
    for face in upper:
        row: dict[int, int] = {}
        sign = 1
        for j in range(len(face)):
            sub = face[:j] + face[j + 1 :]
            row[lower_index[sub]] = sign
            sign = -sign
        rows.append(row)
    return _rank_int_rows(rows)


def _ranks_from_faces(faces_by_dim: dict[int, list[tuple[int, ...]]]) -> list[int]:
    """Reduced homology ranks for dimensions -1..max, from sorted face lists."""
    if not faces_by_dim:
        return []
    top = max(faces_by_dim)
    counts = {d: len(faces_by_dim.get(d, [])) for d in range(-1, top + 1)}
    boundary_rank = {d: 0 for d in range(-1, top + 2)}
    for d in range(0, top + 1):
        upper = faces_by_dim.get(d, [])
        lower = faces_by_dim.get(d - 1, [])
        if not upper or not lower:
            continue
        lower_index = {f: i for i, f in enumerate(lower)}
        boundary_rank[d] = _boundary_rank(upper, lower_index)
    ranks = []
    for d in range(-1, top + 1):
        h = counts[d] - boundary_rank[d] - boundary_rank[d + 1]
        assert h >= 0, "boundary ranks exceeded the chain dimension"
        ranks.append(h)
    return ranks


def reduced_homology_ranks(
    c: SimplicialComplex, *, budgets: Budgets | None = None
) -> list[int]:
    """Reduced rational homology ranks, dimensions -1..dim(c).

    Faces are enumerated from the facets by downward closure and
    deduplicated via canonical sorting.
    """
    b = budgets or current_budgets()
    faces: set[tuple[int, ...]] = set()
    for facet in c.facets:
        k = len(facet)
        if (1 << k) > b.face_budget:
            raise SizeLimitError(f"facet of size {k} exceeds the face budget {b.face_budget}")
        for mask in range(1 << k):
            faces.add(tuple(facet[i] for i in range(k) if (mask >> i) & 1))
            if len(faces) > b.face_budget:
                raise SizeLimitError(f"face budget {b.face_budget} exceeded")
    faces_by_dim: dict[int, list[tuple[int, ...]]] = {}
    for f in faces:
        faces_by_dim.setdefault(len(f) - 1, []).append(f)
    for d in faces_by_dim:
        faces_by_dim[d].sort()
    ranks = _ranks_from_faces(faces_by_dim)
    face_euler = sum((-1) ** d * len(fs) for d, fs in faces_by_dim.items())
    homology_euler = sum((-1) ** (d - 1) * h for d, h in enumerate(ranks))
    assert face_euler == homology_euler, "alternating sums of faces and ranks disagree"
    return ranks


def _squarefree_supports(ideal: MonomialIdeal) -> list[int]:
    if ideal.is_zero:
        raise InvalidParameterError("the zero ideal has no meaningful resolution data here")
    if ideal.is_unit:
        raise InvalidParameterError("the unit ideal has a zero quotient; nothing to measure")
    if not ideal.is_squarefree:
        raise InvalidParameterError("this oracle needs a squarefree ideal; polarize first")
    masks = []
    for g in ideal.gens:
        mask = 0
        for i, x in enumerate(g):
            if x:
                mask |= 1 << i
        masks.append(mask)
    return masks


def reg_pd_hochster(
    ideal: MonomialIdeal, *, budgets: Budgets | None = None
) -> tuple[int, int]:
    """(regularity of the ideal, projective dimension of the quotient).

    Scans every vertex subset W of the ideal's complex: a nonzero reduced
    homology rank in dimension d contributes |W| - d - 1 to the projective
    dimension and d + 1 to the quotient regularity; the ideal's regularity
    is one more than the quotient's. Restrictions that are simplices or
    cones are skipped (their reduced homology vanishes).
    """
    b = budgets or current_budgets()
    n = ideal.nvars
    if n > b.hochster_vars:
        raise SizeLimitError(f"oracle guard is {b.hochster_vars} variables, got {n}")
    supports = _squarefree_supports(ideal)

    # nonface[S] := some generator support is contained in S
    size = 1 << n
    nonface = bytearray(size)
    for mask in supports:
        nonface[mask] = 1
    for v in range(n):
        bit = 1 << v
        for s in range(size):
            if s & bit and nonface[s ^ bit]:
                nonface[s] = 1

    faces_by_size: dict[int, list[int]] = {}
    total_faces = 0
    for s in range(size):
        if not nonface[s]:
            faces_by_size.setdefault(s.bit_count(), []).append(s)
            total_faces += 1
            if total_faces > b.face_budget:
                raise SizeLimitError(f"face budget {b.face_budget} exceeded")

    pd_quotient = 0  # the empty restriction always contributes (d, |W|) = (-1, 0)
    reg_quotient = 0
    for w in range(1, size):
        if not nonface[w]:
            continue  # restriction is a full simplex, contractible
        covered = 0
        for mask in supports:
            if mask & ~w == 0:
                covered |= mask
        if covered != w:
            continue  # some vertex is in no inside support: restriction is a cone
        restricted: dict[int, list[tuple[int, ...]]] = {-1: [()]}
        w_size = w.bit_count()
        for k in range(1, w_size + 1):
            level = [
                tuple(v + 1 for v in range(n) if (s >> v) & 1)
                for s in faces_by_size.get(k, [])
                if s & ~w == 0
            ]
            if level:
                restricted[k - 1] = sorted(level)
        ranks = _ranks_from_faces(restricted)
        for d, h in enumerate(ranks, start=-1):
            if h:
                pd_quotient = max(pd_quotient, w_size - d - 1)
                reg_quotient = max(reg_quotient, d + 1)
    return reg_quotient + 1, pd_quotient


def reg_ideal_hochster(ideal: MonomialIdeal, *, budgets: Budgets | None = None) -> int:
    return reg_pd_hochster(ideal, budgets=budgets)[0]


def depth_via_polarization(ideal: MonomialIdeal, *, budgets: Budgets | None = None) -> int:
    """Depth of S/I for any monomial ideal, via its polarization.

    Polarization preserves the Betti table, so the projective dimension of
    the polarized quotient equals that of S/I, and depth(S/I) is the ambient
    variable count minus that projective dimension.
    """
    squarefree, _, _ = polarize(ideal)
    _, pd_quotient = reg_pd_hochster(squarefree, budgets=budgets)
    return ideal.nvars - pd_quotient
