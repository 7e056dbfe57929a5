"""Lie algebras by structure constants, linear maps, alternating maps.

A Lie bracket on U is stored as structure constants c[i][j] (a target
vector) for i < j only; the other half is derived by antisymmetry, so
an inconsistent pair can never be represented.  Alternating p-linear
maps keep one coefficient vector per strictly increasing index tuple,
which makes equality a plain dictionary comparison.

Arity-0 alternating maps are structurally zero and carry no
coefficients: the degree-0 corner of the combined cochain complex is
the zero space, and nothing else in the package needs constants.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from typing import Callable, Iterable, Mapping, Sequence

from .errors import VerificationError
from .linalg import (
    Matrix,
    Vector,
    frac,
    inverse,
    vec_add,
    vec_is_zero,
    vec_neg,
    vec_scale,
    vec_sub,
    vec_unit,
    vec_zero,
    vector,
)


def _sort_sign(indices: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Sorted copy of ``indices`` and the parity sign of the sort, 0 on repeats."""
    n = len(indices)
    inversions = 0
    for i in range(n):
        for j in range(i + 1, n):
            if indices[i] == indices[j]:
                return tuple(indices), 0
            if indices[i] > indices[j]:
                inversions += 1
    return tuple(sorted(indices)), (-1 if inversions % 2 else 1)


class SkewMap:
    """Alternating p-linear map between based rational spaces.

    ``coeffs`` maps strictly increasing p-tuples of source indices to
    target vectors; zero vectors are dropped, so two maps are equal iff
    their dictionaries are.  Maps of arity 0, and of arity exceeding the
    source dimension, are identically zero and store nothing.
    """

    __slots__ = ("arity", "source_dim", "target_dim", "coeffs")

    def __init__(self, arity: int, source_dim: int, target_dim: int,
                 coeffs: Mapping[tuple[int, ...], Iterable] | None = None):
        if arity < 0 or source_dim < 0 or target_dim < 0:
            raise ValueError("negative arity or dimension")
        self.arity = arity
        self.source_dim = source_dim
        self.target_dim = target_dim
        clean: dict[tuple[int, ...], Vector] = {}
        for key, value in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != arity:
                raise ValueError("key %r has length != arity %d" % (key, arity))
            if any(key[i] >= key[i + 1] for i in range(len(key) - 1)):
                raise ValueError("key %r is not strictly increasing" % (key,))
            if key and (key[0] < 0 or key[-1] >= source_dim):
                raise ValueError("key %r out of range for dim %d" % (key, source_dim))
            vec = vector(value)
            if len(vec) != target_dim:
                raise ValueError("value for %r has length %d != target dim %d"
                                 % (key, len(vec), target_dim))
            if not vec_is_zero(vec):
                clean[key] = vec
        if (arity == 0 or arity > source_dim) and clean:
            raise ValueError("arity-%d map on a %d-dim space must be zero"
                             % (arity, source_dim))
        self.coeffs = clean

    @classmethod
    def zero(cls, arity: int, source_dim: int, target_dim: int) -> "SkewMap":
        return cls(arity, source_dim, target_dim)

    @classmethod
    def from_function(cls, arity: int, source_dim: int, target_dim: int,
                      fn: Callable[[tuple[int, ...]], Iterable]) -> "SkewMap":
        """Tabulate ``fn`` on every strictly increasing index tuple."""
        if arity == 0 or arity > source_dim:
            return cls(arity, source_dim, target_dim)
        coeffs = {key: fn(key) for key in combinations(range(source_dim), arity)}
        return cls(arity, source_dim, target_dim, coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def value(self, key: tuple[int, ...]) -> Vector:
        """Coefficient vector at a strictly increasing tuple (zero if absent)."""
        return self.coeffs.get(key, vec_zero(self.target_dim))

    def eval_indices(self, indices: Sequence[int]) -> Vector:
        """Evaluate on basis vectors in any order; repeats give zero."""
        if len(indices) != self.arity:
            raise ValueError("expected %d arguments, got %d" % (self.arity, len(indices)))
        key, sign = _sort_sign(indices)
        if sign == 0:
            return vec_zero(self.target_dim)
        val = self.value(key)
        return val if sign > 0 else vec_neg(val)

    def eval_first_vector(self, vec: Vector, rest: Sequence[int]) -> Vector:
        """Evaluate with an arbitrary first argument, basis vectors after."""
        out = vec_zero(self.target_dim)
        rest = tuple(rest)
        for k, c in enumerate(vec):
            if c:
                out = vec_add(out, vec_scale(c, self.eval_indices((k,) + rest)))
        return out

    def eval_vectors(self, vectors: Sequence[Vector]) -> Vector:
        """Full multilinear alternating evaluation on arbitrary vectors."""
        if len(vectors) != self.arity:
            raise ValueError("expected %d arguments, got %d" % (self.arity, len(vectors)))
        out = vec_zero(self.target_dim)
        p = self.arity
        for key, val in self.coeffs.items():
            # det of the p x p minor picking coordinate key[a] of argument b
            det = Fraction(0)
            for perm in permutations(range(p)):
                inv = sum(1 for i in range(p) for j in range(i + 1, p) if perm[i] > perm[j])
                term = Fraction(-1 if inv % 2 else 1)
                for a in range(p):
                    term *= vectors[perm[a]][key[a]]
                    if term == 0:
                        break
                det += term
            if det:
                out = vec_add(out, vec_scale(det, val))
        return out

    def postcompose(self, lmap: "LinearMap") -> "SkewMap":
        """lmap ∘ self: apply a linear map to every coefficient vector."""
        if lmap.source_dim != self.target_dim:
            raise ValueError("cannot compose: map expects dim %d, skew map lands in dim %d"
                             % (lmap.source_dim, self.target_dim))
        return SkewMap(self.arity, self.source_dim, lmap.target_dim,
                       {k: lmap.apply(v) for k, v in self.coeffs.items()})

    def as_linear(self) -> "LinearMap":
        if self.arity != 1:
            raise ValueError("only arity-1 maps are linear maps")
        return LinearMap.from_columns(self.source_dim, self.target_dim,
                                      [self.value((j,)) for j in range(self.source_dim)])

    def __add__(self, other: "SkewMap") -> "SkewMap":
        self._compatible(other)
        coeffs = dict(self.coeffs)
        for k, v in other.coeffs.items():
            coeffs[k] = vec_add(coeffs.get(k, vec_zero(self.target_dim)), v)
        return SkewMap(self.arity, self.source_dim, self.target_dim, coeffs)

    def __sub__(self, other: "SkewMap") -> "SkewMap":
        return self + (-other)

    def __neg__(self) -> "SkewMap":
        return self.scaled(-1)

    def scaled(self, c) -> "SkewMap":
        c = frac(c)
        return SkewMap(self.arity, self.source_dim, self.target_dim,
                       {k: vec_scale(c, v) for k, v in self.coeffs.items()})

    def __rmul__(self, c) -> "SkewMap":
        return self.scaled(c)

    def _compatible(self, other: "SkewMap"):
        if (self.arity, self.source_dim, self.target_dim) != \
                (other.arity, other.source_dim, other.target_dim):
            raise ValueError("incompatible skew maps")

    def __eq__(self, other):
        return (
            isinstance(other, SkewMap)
            and self.arity == other.arity
            and self.source_dim == other.source_dim
            and self.target_dim == other.target_dim
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.arity, self.source_dim, self.target_dim,
                     frozenset(self.coeffs.items())))

    def __repr__(self):
        return "SkewMap(arity=%d, %d->%d, %d terms)" % (
            self.arity, self.source_dim, self.target_dim, len(self.coeffs))


class LinearMap:
    """Linear map stored as a (target_dim x source_dim) matrix of columns."""

    __slots__ = ("source_dim", "target_dim", "matrix")

    def __init__(self, source_dim: int, target_dim: int, matrix: Matrix):
        if (matrix.rows, matrix.cols) != (target_dim, source_dim):
            raise ValueError("matrix shape %dx%d, expected %dx%d"
                             % (matrix.rows, matrix.cols, target_dim, source_dim))
        self.source_dim = source_dim
        self.target_dim = target_dim
        self.matrix = matrix

    @classmethod
    def from_columns(cls, source_dim: int, target_dim: int,
                     columns: Sequence[Sequence]) -> "LinearMap":
        return cls(source_dim, target_dim,
                   Matrix.from_columns(columns, rows=target_dim))

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(n, n, Matrix.identity(n))

    @classmethod
    def zero(cls, source_dim: int, target_dim: int) -> "LinearMap":
        return cls(source_dim, target_dim, Matrix.zero(target_dim, source_dim))

    def col(self, j: int) -> Vector:
        """Image of the j-th source basis vector."""
        return self.matrix.col(j)

    def apply(self, v: Sequence) -> Vector:
        return self.matrix.mul_vec(v)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self ∘ other."""
        if self.source_dim != other.target_dim:
            raise ValueError("cannot compose %d->%d after %d->%d"
                             % (self.source_dim, self.target_dim,
                                other.source_dim, other.target_dim))
        return LinearMap(other.source_dim, self.target_dim,
                         self.matrix.matmul(other.matrix))

    def inverse(self) -> "LinearMap":
        if self.source_dim != self.target_dim:
            raise ValueError("inverse of a non-square map")
        return LinearMap(self.source_dim, self.target_dim, inverse(self.matrix))

    def is_invertible(self) -> bool:
        if self.source_dim != self.target_dim:
            return False
        try:
            inverse(self.matrix)
        except ValueError:
            return False
        return True

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.source_dim, self.target_dim, self.matrix.add(other.matrix))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.source_dim, self.target_dim, self.matrix.sub(other.matrix))

    def __neg__(self) -> "LinearMap":
        return self.scaled(-1)

    def scaled(self, c) -> "LinearMap":
        return LinearMap(self.source_dim, self.target_dim, self.matrix.scaled(c))

    def as_skew(self) -> SkewMap:
        return SkewMap(1, self.source_dim, self.target_dim,
                       {(j,): self.col(j) for j in range(self.source_dim)})

    def __eq__(self, other):
        return (
            isinstance(other, LinearMap)
            and self.source_dim == other.source_dim
            and self.target_dim == other.target_dim
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.source_dim, self.target_dim, self.matrix))

    def __repr__(self):
        return "LinearMap(%d->%d)" % (self.source_dim, self.target_dim)


class LieAlgebra:
    """Finite-dimensional bracket given by structure constants.

    ``brackets[(i, j)]`` with i < j is the target vector of [e_i, e_j];
    [e_j, e_i] is derived as its negative and never stored.  By default
    the constructor rejects brackets that violate the Jacobi identity;
    pass ``check=False`` to build raw candidates (the defect operations
    accept those too).
    """

    __slots__ = ("dim", "brackets")

    def __init__(self, dim: int, brackets: Mapping[tuple[int, int], Iterable] | None = None,
                 check: bool = True):
        if dim < 0:
            raise ValueError("negative dimension")
        self.dim = dim
        clean: dict[tuple[int, int], Vector] = {}
        for (i, j), value in (brackets or {}).items():
            if not (0 <= i < j < dim):
                raise ValueError("bracket key (%d, %d) must satisfy 0 <= i < j < dim" % (i, j))
            vec = vector(value)
            if len(vec) != dim:
                raise ValueError("bracket value for (%d, %d) has length %d != dim %d"
                                 % (i, j, len(vec), dim))
            if not vec_is_zero(vec):
                clean[(i, j)] = vec
        self.brackets = clean
        if check:
            defect = jacobi_defect(self)
            if not defect.is_zero():
                raise VerificationError("bracket violates the Jacobi identity", defect=defect)

    def bracket_basis(self, i: int, j: int) -> Vector:
        """[e_i, e_j] for arbitrary index order."""
        if i == j:
            return vec_zero(self.dim)
        if i < j:
            return self.brackets.get((i, j), vec_zero(self.dim))
        return vec_neg(self.brackets.get((j, i), vec_zero(self.dim)))

    def bracket_vec(self, x: Vector, y: Vector) -> Vector:
        """[x, y] for arbitrary vectors; iterates stored constants only."""
        out = vec_zero(self.dim)
        for (i, j), c in self.brackets.items():
            t = x[i] * y[j] - x[j] * y[i]
            if t:
                out = vec_add(out, vec_scale(t, c))
        return out

    def bracket_vec_basis(self, x: Vector, k: int) -> Vector:
        """[x, e_k]."""
        out = vec_zero(self.dim)
        for i, c in enumerate(x):
            if c:
                out = vec_add(out, vec_scale(c, self.bracket_basis(i, k)))
        return out

    def as_skew(self) -> SkewMap:
        return SkewMap(2, self.dim, self.dim, self.brackets)

    def is_abelian(self) -> bool:
        return not self.brackets

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self.dim == other.dim \
            and self.brackets == other.brackets

    def __hash__(self):
        return hash((self.dim, frozenset(self.brackets.items())))

    def __repr__(self):
        return "LieAlgebra(dim=%d, %d brackets)" % (self.dim, len(self.brackets))


class Triple:
    """A point (rho, theta, phi) of the morphism bundle.

    ``phi`` maps the rho-space into the theta-space.  The constructor
    verifies the morphism identity phi([a,b]) = [phi(a), phi(b)] unless
    ``check=False``; dimension compatibility is enforced always.
    """

    __slots__ = ("rho", "theta", "phi")

    def __init__(self, rho: LieAlgebra, theta: LieAlgebra, phi: LinearMap,
                 check: bool = True):
        if phi.source_dim != rho.dim or phi.target_dim != theta.dim:
            raise ValueError("phi is %d->%d but the algebras have dims %d and %d"
                             % (phi.source_dim, phi.target_dim, rho.dim, theta.dim))
        self.rho = rho
        self.theta = theta
        self.phi = phi
        if check:
            defect = morphism_defect(self)
            if not defect.is_zero():
                raise VerificationError("phi is not a morphism of brackets", defect=defect)

    @property
    def dim_u(self) -> int:
        return self.rho.dim

    @property
    def dim_v(self) -> int:
        return self.theta.dim

    def __eq__(self, other):
        return isinstance(other, Triple) and self.rho == other.rho \
            and self.theta == other.theta and self.phi == other.phi

    def __hash__(self):
        return hash((self.rho, self.theta, self.phi))

    def __repr__(self):
        return "Triple(dim_u=%d, dim_v=%d)" % (self.dim_u, self.dim_v)


def jacobi_defect(rho: LieAlgebra) -> SkewMap:
    """Cyclic sum [[a,b],c] + [[b,c],a] + [[c,a],b] as an arity-3 map.

    Zero exactly when ``rho`` is a Lie bracket.
    """
    def fn(key):
        a, b, c = key
        out = vec_zero(rho.dim)
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            out = vec_add(out, rho.bracket_vec_basis(rho.bracket_basis(x, y), z))
        return out

    return SkewMap.from_function(3, rho.dim, rho.dim, fn)


def morphism_defect(t: Triple) -> SkewMap:
    """(a, b) -> phi([a,b]) - [phi(a), phi(b)]; zero iff the triple is in the bundle."""
    def fn(key):
        a, b = key
        return vec_sub(t.phi.apply(t.rho.bracket_basis(a, b)),
                       t.theta.bracket_vec(t.phi.col(a), t.phi.col(b)))

    return SkewMap.from_function(2, t.dim_u, t.dim_v, fn)


def act_algebra(g: LinearMap, rho: LieAlgebra) -> LieAlgebra:
    """Pull the bracket back along an invertible g: (a,b) -> g⁻¹[g a, g b].

    The result satisfies Jacobi whenever the input does, so it is built
    unchecked; property tests pin that equivariance.
    """
    if g.source_dim != rho.dim or g.target_dim != rho.dim:
        raise ValueError("g must be an endomorphism of the algebra's space")
    ginv = g.inverse()
    new = {
        key: ginv.apply(rho.bracket_vec(g.col(key[0]), g.col(key[1])))
        for key in combinations(range(rho.dim), 2)
    }
    return LieAlgebra(rho.dim, new, check=False)


def act_triple(g: LinearMap, h: LinearMap, t: Triple) -> Triple:
    """(g, h) acting on the bundle: (g·rho, h·theta, h⁻¹ ∘ phi ∘ g).

    Acting twice composes as a right action:
    act(g2, h2, act(g1, h1, t)) == act(g1∘g2, h1∘h2, t).
    """
    new_rho = act_algebra(g, t.rho)
    new_theta = act_algebra(h, t.theta)
    new_phi = h.inverse().compose(t.phi).compose(g)
    return Triple(new_rho, new_theta, new_phi, check=False)


def diamond(lam: SkewMap, phi: LinearMap) -> SkewMap:
    """Pullback along phi: (x_1, ..., x_p) -> lam(phi(x_1), ..., phi(x_p))."""
    if lam.source_dim != phi.target_dim:
        raise ValueError("lam eats dim %d but phi lands in dim %d"
                         % (lam.source_dim, phi.target_dim))
    def fn(key):
        return lam.eval_vectors([phi.col(i) for i in key])

    return SkewMap.from_function(lam.arity, phi.source_dim, lam.target_dim, fn)
