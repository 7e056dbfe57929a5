"""Coordinates for cochain spaces and exact cohomology dimensions.

Flattening order is fixed: the x1 block, then x2, then x3; inside each
block the strictly increasing index tuples run lexicographically and the
target coordinate runs fastest.  All dimension counts are exact rank
computations, so reports carry no tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .algebra import SkewMap, Triple
from .complexes import Cochain, SignConvention, big_delta, delta_morphism
from .linalg import Matrix, Vector, nullspace, rank, solve_affine, vec_neg, vec_unit


def block_dims(p: int, dim_u: int, dim_v: int) -> tuple[int, int, int]:
    """Coordinate counts of the three blocks of the degree-p cochain space."""
    d1 = comb(dim_u, p + 1) * dim_u
    d2 = comb(dim_v, p + 1) * dim_v
    d3 = comb(dim_u, p) * dim_v if p >= 1 else 0
    return d1, d2, d3


def cochain_dim(p: int, dim_u: int, dim_v: int) -> int:
    return sum(block_dims(p, dim_u, dim_v))


def _skew_coords(sm: SkewMap) -> list:
    out = []
    for key in combinations(range(sm.source_dim), sm.arity):
        out.extend(sm.value(key))
    return out


def _skew_from_coords(arity: int, source_dim: int, target_dim: int, coords, offset: int):
    coeffs = {}
    for key in combinations(range(source_dim), arity):
        coeffs[key] = coords[offset:offset + target_dim]
        offset += target_dim
    return SkewMap(arity, source_dim, target_dim, coeffs), offset


def flatten(c: Cochain) -> Vector:
    coords = _skew_coords(c.x1) + _skew_coords(c.x2)
    if c.x3 is not None:
        coords += _skew_coords(c.x3)
    return tuple(coords)


def unflatten(p: int, dim_u: int, dim_v: int, coords) -> Cochain:
    coords = tuple(coords)
    if len(coords) != cochain_dim(p, dim_u, dim_v):
        raise ValueError("coordinate vector has length %d, expected %d"
                         % (len(coords), cochain_dim(p, dim_u, dim_v)))
    x1, offset = _skew_from_coords(p + 1, dim_u, dim_u, coords, 0)
    x2, offset = _skew_from_coords(p + 1, dim_v, dim_v, coords, offset)
    if p == 0:
        return Cochain(p, x1, x2, None)
    x3, _ = _skew_from_coords(p, dim_u, dim_v, coords, offset)
    return Cochain(p, x1, x2, x3)


def delta_matrix(t: Triple, p: int, conv: SignConvention = SignConvention.PAPER) -> Matrix:
    """Matrix of the combined coboundary in the flatten bases.

    Shape: cochain_dim(p+1) rows by cochain_dim(p) columns, so that
    matrix · flatten(c) == flatten(big_delta(t, c, conv)).
    """
    m, n = t.dim_u, t.dim_v
    cols_count = cochain_dim(p, m, n)
    rows_count = cochain_dim(p + 1, m, n)
    columns = []
    for j in range(cols_count):
        basis_cochain = unflatten(p, m, n, vec_unit(cols_count, j))
        columns.append(flatten(big_delta(t, basis_cochain, conv)))
    return Matrix.from_columns(columns, rows=rows_count)


@dataclass(frozen=True)
class CohomologyReport:
    """Exact dimension data of one degree of the combined complex."""

    degree: int
    convention: SignConvention
    dim_cochains: int
    dim_cocycles: int
    dim_coboundaries: int
    dim_cohomology: int
    cocycle_basis: tuple[Cochain, ...]


def cohomology(t: Triple, p: int,
               conv: SignConvention = SignConvention.PAPER) -> CohomologyReport:
    """Cocycle, coboundary and quotient dimensions at degree p.

    Coboundaries at degree 0 are zero (there are no degree -1 cochains).
    The cocycle basis comes from the kernel of the degree-p matrix in
    deterministic free-column order.
    """
    if p < 0:
        raise ValueError("degree must be >= 0")
    m, n = t.dim_u, t.dim_v
    kernel = nullspace(delta_matrix(t, p, conv))
    z = len(kernel)
    b = rank(delta_matrix(t, p - 1, conv)) if p >= 1 else 0
    return CohomologyReport(
        degree=p,
        convention=conv,
        dim_cochains=cochain_dim(p, m, n),
        dim_cocycles=z,
        dim_coboundaries=b,
        dim_cohomology=z - b,
        cocycle_basis=tuple(unflatten(p, m, n, v) for v in kernel),
    )


def is_cocycle(t: Triple, c: Cochain,
               conv: SignConvention = SignConvention.PAPER) -> bool:
    return big_delta(t, c, conv).is_zero()


def is_coboundary(t: Triple, c: Cochain,
                  conv: SignConvention = SignConvention.PAPER) -> Cochain | None:
    """A degree-(p-1) witness w with big_delta(w) == c, or None.

    Degree-0 cochains have no candidate witnesses at all (the space of
    degree -1 cochains is zero), so the answer there is always None.
    """
    if c.degree == 0:
        return None
    p = c.degree
    m, n = c.dim_u, c.dim_v
    sol = solve_affine(delta_matrix(t, p - 1, conv), flatten(c))
    if sol is None:
        return None
    return unflatten(p - 1, m, n, sol[0])


# ---------------------------------------------------------------------------
# The single-leg complex with both algebras frozen.
#
# Here degree-p cochains are plain alternating maps U^p -> V, and the
# bottom degree is the natural one: 0-cochains are constants v in V with
# (d v)(x) = -theta(phi(x), v).  (The combined complex instead sets its
# degree-0 mixed corner to zero; the two bookkeepings only differ there.)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassicalReport:
    """Dimension data of the fixed-algebras morphism complex."""

    degree: int
    dim_cochains: int
    dim_cocycles: int
    dim_coboundaries: int
    dim_cohomology: int


def _leg_dim(p: int, m: int, n: int) -> int:
    return n if p == 0 else comb(m, p) * n


def classical_delta_matrix(t: Triple, p: int) -> Matrix:
    """Matrix of the single-leg coboundary at degree p in flatten bases."""
    m, n = t.dim_u, t.dim_v
    rows_count = _leg_dim(p + 1, m, n)
    columns = []
    if p == 0:
        for v in range(n):
            const = vec_unit(n, v)
            image = SkewMap.from_function(
                1, m, n,
                lambda key: vec_neg(t.theta.bracket_vec(t.phi.col(key[0]), const)))
            columns.append(_skew_coords(image))
    else:
        for key0 in combinations(range(m), p):
            for v in range(n):
                basis = SkewMap(p, m, n, {key0: vec_unit(n, v)})
                columns.append(_skew_coords(delta_morphism(t, basis)))
    return Matrix.from_columns(columns, rows=rows_count)


def classical_cohomology(t: Triple, p: int) -> ClassicalReport:
    """Exact dimensions of the fixed-algebras complex at degree p."""
    if p < 0:
        raise ValueError("degree must be >= 0")
    m, n = t.dim_u, t.dim_v
    z = len(nullspace(classical_delta_matrix(t, p)))
    b = rank(classical_delta_matrix(t, p - 1)) if p >= 1 else 0
    return ClassicalReport(
        degree=p,
        dim_cochains=_leg_dim(p, m, n),
        dim_cocycles=z,
        dim_coboundaries=b,
        dim_cohomology=z - b,
    )
