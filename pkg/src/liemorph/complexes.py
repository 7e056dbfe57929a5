"""Coboundary operators, the graded bracket and the quadratic defect.

The single-leg coboundary on alternating maps psi: U^p -> V attached to a
bundle point (rho, theta, phi) is

    (d psi)(x_1, ..., x_{p+1}) =
        sum_s (-1)^s  theta(phi(x_s), psi(..., x_s dropped, ...))
      + sum_{s<t} (-1)^{s+t-1} psi(rho(x_s, x_t), ..., x_s, x_t dropped, ...)

with 1-based s, t.  Note the global sign: this is the negative of the
textbook Chevalley-Eilenberg differential, which changes nothing about
kernels, images or d∘d = 0 but does flip individual values; all golden
values in the tests are stated against this choice.  Setting theta = rho
and phi = id gives the coboundary of the algebra itself, and at arity 2
that operator literally equals the cyclic-sum cocycle expression
sum_cyc [x1(a,b), c] + x1([a,b], c] (same signs, not just up to sign).

The combined operator on degree-p cochains (X1, X2, X3) is

    Delta(X1, X2, X3) = (d X1, d X2, d X3 + s_p (phi ∘ X1 - X2 ⋄ phi))

where the mixed-term sign s_p is a convention choice: "paper" uses
(-1)^p, "geometric" uses (-1)^{p+1}.  The two choices are conjugate
under flipping the sign of the third component, so they produce equal
cohomology dimensions in every degree; "geometric" is the one under
which first-order coefficients of deformations are cocycles.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from itertools import combinations

from .algebra import LieAlgebra, LinearMap, SkewMap, Triple, diamond
from .linalg import vec_add, vec_is_zero, vec_scale, vec_sub, vec_zero


class SignConvention(Enum):
    """Sign of the mixed term in the combined coboundary operator."""

    PAPER = "paper"
    GEOMETRIC = "geometric"

    def mixed_sign(self, degree: int) -> int:
        if self is SignConvention.PAPER:
            return -1 if degree % 2 else 1
        return 1 if degree % 2 else -1

    @classmethod
    def from_string(cls, s: str) -> "SignConvention":
        for member in cls:
            if member.value == s:
                return member
        raise ValueError("unknown convention %r (paper, geometric)" % s)


class Cochain:
    """Degree-p element (x1, x2, x3) of the combined complex.

    x1 has arity p+1 on the source space U, x2 arity p+1 on the target
    space V, x3 arity p from U to V.  At degree 0 the third component is
    the zero space, represented as ``x3 = None``.
    """

    __slots__ = ("degree", "x1", "x2", "x3")

    def __init__(self, degree: int, x1: SkewMap, x2: SkewMap, x3: SkewMap | None):
        if degree < 0:
            raise ValueError("negative degree")
        m, n = x1.source_dim, x2.source_dim
        if x1.target_dim != m or x2.target_dim != n:
            raise ValueError("x1 and x2 must be endomorphism-valued")
        if x1.arity != degree + 1 or x2.arity != degree + 1:
            raise ValueError("x1, x2 must have arity degree+1")
        if degree == 0:
            if x3 is not None and not x3.is_zero():
                raise ValueError("degree-0 cochains have no third component")
            x3 = None
        else:
            if x3 is None:
                raise ValueError("degree >= 1 cochains need a third component")
            if x3.arity != degree or x3.source_dim != m or x3.target_dim != n:
                raise ValueError("x3 must be an arity-%d map %d->%d" % (degree, m, n))
        self.degree = degree
        self.x1 = x1
        self.x2 = x2
        self.x3 = x3

    @classmethod
    def zero(cls, degree: int, dim_u: int, dim_v: int) -> "Cochain":
        x3 = None if degree == 0 else SkewMap.zero(degree, dim_u, dim_v)
        return cls(degree, SkewMap.zero(degree + 1, dim_u, dim_u),
                   SkewMap.zero(degree + 1, dim_v, dim_v), x3)

    @property
    def dim_u(self) -> int:
        return self.x1.source_dim

    @property
    def dim_v(self) -> int:
        return self.x2.source_dim

    def third_or_zero(self) -> SkewMap:
        return self.x3 if self.x3 is not None else SkewMap.zero(0, self.dim_u, self.dim_v)

    def is_zero(self) -> bool:
        return self.x1.is_zero() and self.x2.is_zero() \
            and (self.x3 is None or self.x3.is_zero())

    def __add__(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        x3 = None if self.degree == 0 else self.x3 + other.x3
        return Cochain(self.degree, self.x1 + other.x1, self.x2 + other.x2, x3)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + other.scaled(-1)

    def scaled(self, c) -> "Cochain":
        x3 = None if self.degree == 0 else self.x3.scaled(c)
        return Cochain(self.degree, self.x1.scaled(c), self.x2.scaled(c), x3)

    def __rmul__(self, c) -> "Cochain":
        return self.scaled(c)

    def __neg__(self) -> "Cochain":
        return self.scaled(-1)

    def _compatible(self, other: "Cochain"):
        if (self.degree, self.dim_u, self.dim_v) != (other.degree, other.dim_u, other.dim_v):
            raise ValueError("incompatible cochains")

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.degree == other.degree
            and self.x1 == other.x1
            and self.x2 == other.x2
            and self.x3 == other.x3
        )

    def __hash__(self):
        return hash((self.degree, self.x1, self.x2, self.x3))

    def __repr__(self):
        return "Cochain(degree=%d, dims=%d,%d)" % (self.degree, self.dim_u, self.dim_v)


def _coboundary(rho: LieAlgebra, theta: LieAlgebra, phi: LinearMap,
                psi: SkewMap) -> SkewMap:
    if psi.source_dim != rho.dim or psi.target_dim != theta.dim:
        raise ValueError("skew map dims %d->%d do not match the algebras %d, %d"
                         % (psi.source_dim, psi.target_dim, rho.dim, theta.dim))
    if phi.source_dim != rho.dim or phi.target_dim != theta.dim:
        raise ValueError("phi dims do not match the algebras")

    def fn(idx):
        out = vec_zero(theta.dim)
        # first sum: 1-based s gives sign (-1)^s
        for s0, i_s in enumerate(idx):
            rest = idx[:s0] + idx[s0 + 1:]
            val = psi.value(rest)
            if not vec_is_zero(val):
                term = theta.bracket_vec(phi.col(i_s), val)
                out = vec_sub(out, term) if s0 % 2 == 0 else vec_add(out, term)
        # second sum: 1-based (s, t) gives sign (-1)^{s+t-1}
        for s0 in range(len(idx)):
            for t0 in range(s0 + 1, len(idx)):
                br = rho.bracket_basis(idx[s0], idx[t0])
                if vec_is_zero(br):
                    continue
                rest = idx[:s0] + idx[s0 + 1:t0] + idx[t0 + 1:]
                term = psi.eval_first_vector(br, rest)
                sign = -1 if (s0 + t0 + 1) % 2 else 1
                out = vec_add(out, vec_scale(sign, term))
        return out

    return SkewMap.from_function(psi.arity + 1, rho.dim, theta.dim, fn)


def delta_morphism(t: Triple, psi: SkewMap) -> SkewMap:
    """Coboundary of an arity-p map U -> V attached to the bundle point t."""
    return _coboundary(t.rho, t.theta, t.phi, psi)


def delta_algebra(rho: LieAlgebra, x: SkewMap) -> SkewMap:
    """Coboundary on the algebra's own alternating maps (theta = rho, phi = id)."""
    return _coboundary(rho, rho, LinearMap.identity(rho.dim), x)


def big_delta(t: Triple, c: Cochain,
              conv: SignConvention = SignConvention.PAPER) -> Cochain:
    """The combined coboundary, raising degree by one."""
    if c.dim_u != t.dim_u or c.dim_v != t.dim_v:
        raise ValueError("cochain dims %d,%d do not match the triple %d,%d"
                         % (c.dim_u, c.dim_v, t.dim_u, t.dim_v))
    d1 = delta_algebra(t.rho, c.x1)
    d2 = delta_algebra(t.theta, c.x2)
    d3 = delta_morphism(t, c.third_or_zero())
    mixed = c.x1.postcompose(t.phi) - diamond(c.x2, t.phi)
    third = d3 + mixed.scaled(conv.mixed_sign(c.degree))
    return Cochain(c.degree + 1, d1, d2, third)


def flip_third(c: Cochain) -> Cochain:
    """The involution (x1, x2, x3) -> (x1, x2, -x3).

    Conjugating the paper-convention operator by this map yields the
    geometric-convention operator, which is why the two conventions have
    equal cohomology dimensions degree by degree.
    """
    x3 = None if c.x3 is None else -c.x3
    return Cochain(c.degree, c.x1, c.x2, x3)


def nr_bracket(theta: LieAlgebra, a: SkewMap, b: SkewMap) -> SkewMap:
    """Graded bracket of maps into the algebra (theta.dim-valued).

    Defined by the shuffle sum

        [[a, b]](x_1..x_{p+q}) =
            sum_{(p,q)-shuffles s} sign(s) theta(a(x_{s(1..p)}), b(x_{s(p+1..p+q)}))

    On decomposables w⊗v, pi⊗w this reduces to (w ∧ pi) ⊗ [v, w].  With
    the arity grading it satisfies [[a, b]] = -(-1)^{pq} [[b, a]].
    """
    if a.source_dim != b.source_dim:
        raise ValueError("operands live on different source spaces")
    if a.target_dim != theta.dim or b.target_dim != theta.dim:
        raise ValueError("operands must land in the bracket's space")
    p, q = a.arity, b.arity

    def fn(idx):
        out = vec_zero(theta.dim)
        for pos in combinations(range(p + q), p):
            left = a.value(tuple(idx[i] for i in pos))
            if vec_is_zero(left):
                continue
            rest = tuple(idx[i] for i in range(p + q) if i not in pos)
            right = b.value(rest)
            if vec_is_zero(right):
                continue
            # parity of moving the selected slots to the front
            sign = -1 if sum(pp - j for j, pp in enumerate(pos)) % 2 else 1
            out = vec_add(out, vec_scale(sign, theta.bracket_vec(left, right)))
        return out

    return SkewMap.from_function(p + q, a.source_dim, theta.dim, fn)


def mc_defect(t: Triple, psi: SkewMap) -> SkewMap:
    """Quadratic defect d(psi) - 1/2 [[psi, psi]] of a fibre direction.

    Satisfies exactly, for every arity-1 psi,

        morphism_defect(rho, theta, phi + psi)
            = morphism_defect(t) + mc_defect(t, psi),

    so on a bundle point it vanishes iff phi + psi is again a morphism.
    (The quadratic term enters with -1/2; expanding the morphism identity
    directly gives d(psi) = +1/2 [[psi, psi]] for the displayed d.)
    """
    if psi.arity != 1:
        raise ValueError("fibre directions have arity 1")
    return delta_morphism(t, psi) - nr_bracket(t.theta, psi, psi).scaled(Fraction(1, 2))
