"""Named example algebras and bundle points used as fixtures everywhere.

Every constructor returns a verified instance (Jacobi and morphism
identities checked at construction).  ``catalog`` is the string-driven
front door used by the CLI; it understands nested specs such as
``direct_sum(abelian(2), sl2)``.
"""

from __future__ import annotations

import re

from fractions import Fraction

from .algebra import LieAlgebra, LinearMap, Triple, act_triple
from .linalg import Matrix


def abelian(dim: int) -> LieAlgebra:
    """Zero bracket in the given dimension."""
    if dim < 1:
        raise ValueError("abelian algebra needs dim >= 1")
    return LieAlgebra(dim, {})


def heisenberg3() -> LieAlgebra:
    """Basis (x, y, z) with [x, y] = z and z central."""
    return LieAlgebra(3, {(0, 1): (0, 0, 1)})


def sl2() -> LieAlgebra:
    """Basis (h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    return LieAlgebra(3, {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)})


def aff1() -> LieAlgebra:
    """Affine line: basis (a, b) with [a, b] = b."""
    return LieAlgebra(2, {(0, 1): (0, 1)})


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    """Block-diagonal bracket on the concatenated basis."""
    dim = a.dim + b.dim
    brackets = {}
    for (i, j), c in a.brackets.items():
        brackets[(i, j)] = tuple(c) + (Fraction(0),) * b.dim
    for (i, j), c in b.brackets.items():
        brackets[(i + a.dim, j + a.dim)] = (Fraction(0),) * a.dim + tuple(c)
    return LieAlgebra(dim, brackets)


def identity_triple(alg: LieAlgebra) -> Triple:
    return Triple(alg, alg, LinearMap.identity(alg.dim))


def zero_triple(source: LieAlgebra, target: LieAlgebra) -> Triple:
    """The zero map is a morphism between any two algebras."""
    return Triple(source, target, LinearMap.zero(source.dim, target.dim))


def aff1_quotient_triple() -> Triple:
    """aff1 -> abelian(1) killing the derived algebra: a -> 1, b -> 0."""
    phi = LinearMap(2, 1, Matrix([[1, 0]]))
    return Triple(aff1(), abelian(1), phi)


def twisted_triple(t: Triple, g: LinearMap, h: LinearMap) -> Triple:
    """GL twist of a catalog point, re-verified at construction."""
    moved = act_triple(g, h, t)
    return Triple(moved.rho, moved.theta, moved.phi)


def _shear_u() -> LinearMap:
    # unimodular twists keep structure constants small
    return LinearMap(3, 3, Matrix([[1, 1, 0], [0, 1, 0], [1, 0, 1]]))


def _shear_v() -> LinearMap:
    return LinearMap(3, 3, Matrix([[1, 0, 1], [0, 1, 1], [0, 0, 1]]))


def standard_triples() -> list[tuple[str, Triple]]:
    """The named bundle points the test and acceptance suites sweep over."""
    g2 = LinearMap(2, 2, Matrix([[1, 1], [0, 1]]))
    h1 = LinearMap(1, 1, Matrix([[1]]))
    return [
        ("abelian2-id", identity_triple(abelian(2))),
        ("sl2-id", identity_triple(sl2())),
        ("aff1-id", identity_triple(aff1())),
        ("heisenberg3-id", identity_triple(heisenberg3())),
        ("abelian1+aff1-id", identity_triple(direct_sum(abelian(1), aff1()))),
        ("aff1-quotient", aff1_quotient_triple()),
        ("abelian2-to-sl2-zero", zero_triple(abelian(2), sl2())),
        ("sl2-id-twisted", twisted_triple(identity_triple(sl2()), _shear_u(), _shear_v())),
        ("aff1-quotient-twisted", twisted_triple(aff1_quotient_triple(), g2, h1)),
    ]


_SPEC_RE = re.compile(r"^\s*([a-zA-Z_][a-zA-Z0-9_]*)\s*(?:\((.*)\))?\s*$")


def _split_args(body: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced parentheses in %r" % body)
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur or parts:
        parts.append("".join(cur))
    if depth != 0:
        raise ValueError("unbalanced parentheses in %r" % body)
    return parts


def parse_algebra_spec(spec: str) -> LieAlgebra:
    """Build an algebra from a spec string like ``direct_sum(abelian(2), sl2)``."""
    m = _SPEC_RE.match(spec)
    if not m:
        raise ValueError("cannot parse algebra spec %r" % spec)
    name, body = m.group(1), m.group(2)
    args = _split_args(body) if body is not None and body.strip() else []
    if name == "abelian":
        if len(args) != 1:
            raise ValueError("abelian takes one dimension argument")
        return abelian(int(args[0]))
    if name == "heisenberg3":
        _no_args(name, args)
        return heisenberg3()
    if name == "sl2":
        _no_args(name, args)
        return sl2()
    if name == "aff1":
        _no_args(name, args)
        return aff1()
    if name == "direct_sum":
        if len(args) != 2:
            raise ValueError("direct_sum takes two algebra specs")
        return direct_sum(parse_algebra_spec(args[0]), parse_algebra_spec(args[1]))
    raise ValueError("unknown algebra %r (try abelian(n), heisenberg3, sl2, aff1,"
                     " direct_sum(a, b))" % name)


def _no_args(name, args):
    if args:
        raise ValueError("%s takes no arguments" % name)


def catalog(spec: str, as_triple: str | None = None,
            target: str | None = None) -> LieAlgebra | Triple:
    """Resolve a named fixture.

    With ``as_triple=None`` returns the algebra for ``spec``.  Otherwise
    returns a bundle point: ``identity`` on the algebra itself, ``zero``
    into the ``target`` spec, or the ``quotient`` aff1 -> abelian(1).
    """
    if as_triple is None:
        return parse_algebra_spec(spec)
    if as_triple == "identity":
        return identity_triple(parse_algebra_spec(spec))
    if as_triple == "zero":
        if target is None:
            raise ValueError("zero-morphism triple needs a target algebra spec")
        return zero_triple(parse_algebra_spec(spec), parse_algebra_spec(target))
    if as_triple == "quotient":
        if spec.strip() != "aff1":
            raise ValueError("the quotient triple is defined on aff1")
        return aff1_quotient_triple()
    raise ValueError("unknown triple kind %r (identity, zero, quotient)" % as_triple)
