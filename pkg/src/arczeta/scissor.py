"""Virtual Poincare polynomials of sets built from signature quadrics.

beta is the unique additive and multiplicative invariant of real algebraic
sets that restricts to Z/2 Betti numbers on compact nonsingular ones.  On
the atoms used here it takes the classical values

    beta(R^k) = u^k        beta(R^*) = u - 1       beta(point) = 1
    beta(S^n) = 1 + u^n    beta(P^k(R)) = 1 + u + ... + u^k

and it extends over Product (multiplicativity), DisjointUnion, and
Difference of an ambient set by a closed algebraic subset (additivity).
Additivity does NOT hold for arbitrary semialgebraic pieces, which is why
Difference is the only subtraction offered and why every decomposition
below is a genuinely algebraic product, never an interval bundle.

Quadric atoms.  Write q(x, y) = x_1^2 + ... + x_s^2 - y_1^2 - ... - y_t^2
on R^(s+t).  The atom QuadricAffine(c, s, t) is the solution set {q = c}
for c in {-1, 0, +1}; QuadricProjective(m, M) is the projectivization of
the cone {q = 0} inside P^(m+M-1)(R).

Two independent routes to beta of the affine quadrics are implemented.

* Closed forms (beta_cone, beta_level, beta_projective_quadric), entered
  directly as explicit formulas.

* A decomposition engine (quadric_reduce + beta_eval).  For s, t >= 1
  substitute p = x_1 + y_1, w = x_1 - y_1, so the equation becomes
  p*w + q'(rest) = c.  Cut along the closed subset {p = 0}:

      {p != 0}: w = (c - q')/p is a regular function there, so the piece
                is biregular to R^* x R^(s+t-2);
      {p = 0}:  w is free and the equation drops to q' = c, giving
                {q' = c} x R.

  Hence beta(c; s, t) = (u-1) u^(s+t-2) + u * beta(c; s-1, t-1), with base
  cases at s = 0 or t = 0: spheres for the level sets, a point for the
  cone (the real solution set of q = 0 with one sign class empty is the
  origin), and the empty set for an unreachable level.

Everything here is a pure function over immutable expressions; the memo
table on quadric atoms only ever stores values that any writer would
recompute identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .algebra import ONE, U, ZERO, LaurentPolynomial, geometric_sum
from .errors import EmptyProjectiveQuadric, MalformedExpression, NotReducible

__all__ = [
    "AffineSpace",
    "PuncturedLine",
    "Point",
    "Sphere",
    "ProjectiveSpace",
    "QuadricAffine",
    "QuadricProjective",
    "Product",
    "DisjointUnion",
    "Difference",
    "SetExpression",
    "EMPTY",
    "beta_cone",
    "beta_projective_quadric",
    "beta_level",
    "quadric_reduce",
    "quadric_base_case",
    "beta_eval",
    "cone_relation_check",
    "euler_characteristic",
    "expression_to_json",
    "expression_from_json",
]


# ---------------------------------------------------------------------------
# Set expressions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AffineSpace:
    k: int


@dataclass(frozen=True)
class PuncturedLine:
    """The real line minus a point, R^*."""


@dataclass(frozen=True)
class Point:
    pass


@dataclass(frozen=True)
class Sphere:
    dim: int


@dataclass(frozen=True)
class ProjectiveSpace:
    k: int


@dataclass(frozen=True)
class QuadricAffine:
    """{x_1^2+...+x_s^2 - y_1^2-...-y_t^2 = c} in R^(s+t), c in {-1, 0, +1}.

    (0, 0, 0) is the single point of R^0.
    """

    c: int
    s: int
    t: int


@dataclass(frozen=True)
class QuadricProjective:
    """The same equation read in P^(m+M-1)(R); needs m, M >= 1 to be nonempty."""

    m: int
    M: int


@dataclass(frozen=True)
class Product:
    children: tuple

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))


@dataclass(frozen=True)
class DisjointUnion:
    children: tuple

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))


@dataclass(frozen=True)
class Difference:
    """ambient minus a closed algebraic subset of it (additivity hypothesis)."""

    ambient: "SetExpression"
    closed_subset: "SetExpression"


SetExpression = Union[
    AffineSpace,
    PuncturedLine,
    Point,
    Sphere,
    ProjectiveSpace,
    QuadricAffine,
    QuadricProjective,
    Product,
    DisjointUnion,
    Difference,
]

EMPTY = DisjointUnion(())


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


def beta_cone(plus: int, minus: int) -> LaurentPolynomial:
    """beta of the affine cone {q = 0} with signature (plus, minus).

    For min >= 1 this is u^(plus+minus-1) - u^(max-1) + u^(min).  When one
    sign class is empty the real solution set is the origin alone, so the
    value is 1 (which is also what the formula gives at min = 0).
    """
    _check_counts(plus, minus)
    lo, hi = sorted((plus, minus))
    if lo == 0:
        return ONE
    return (
        LaurentPolynomial.monomial(plus + minus - 1)
        - LaurentPolynomial.monomial(hi - 1)
        + LaurentPolynomial.monomial(lo)
    )


def beta_projective_quadric(plus: int, minus: int) -> LaurentPolynomial:
    """beta of the projectivized cone in P^(plus+minus-1)(R).

    Equals (1 + u^(max-1)) * (1 + u + ... + u^(min-1)); the equation has no
    real projective solutions when either sign class is empty.
    """
    _check_counts(plus, minus)
    lo, hi = sorted((plus, minus))
    if lo == 0:
        raise EmptyProjectiveQuadric(
            f"projective quadric with signature ({plus}, {minus}) has no real points"
        )
    return (ONE + LaurentPolynomial.monomial(hi - 1)) * geometric_sum(lo)


def beta_level(plus: int, minus: int, level: int) -> LaurentPolynomial:
    """beta of the level hypersurface {q = level}, level in {+1, -1}.

    Level +1: empty for plus = 0; the sphere S^(plus-1) for minus = 0; and
    otherwise u^(minus-1) * (u^plus - 1) for plus <= minus or
    u^minus * (u^(plus-1) + 1) for plus > minus.  Level -1 is the same set
    with the two sign classes exchanged.
    """
    _check_counts(plus, minus)
    if level == -1:
        return beta_level(minus, plus, 1)
    if level != 1:
        raise ValueError(f"level must be +1 or -1, got {level!r}")
    if plus == 0:
        return ZERO
    if minus == 0:
        return ONE + LaurentPolynomial.monomial(plus - 1)
    if plus <= minus:
        return LaurentPolynomial.monomial(minus - 1) * (
            LaurentPolynomial.monomial(plus) - ONE
        )
    return LaurentPolynomial.monomial(minus) * (
        LaurentPolynomial.monomial(plus - 1) + ONE
    )


def _check_counts(plus, minus):
    if not isinstance(plus, int) or not isinstance(minus, int) or plus < 0 or minus < 0:
        raise ValueError(f"signature counts must be nonnegative ints: ({plus!r}, {minus!r})")


# ---------------------------------------------------------------------------
# Decomposition engine
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def quadric_reduce(c: int, plus: int, minus: int) -> SetExpression:
    """Rewrite {q = c} by splitting off one hyperbolic pair.

    Needs plus >= 1 and minus >= 1; the result is
    DisjointUnion(R^* x R^(plus+minus-2), {q' = c} x R) with q' of
    signature (plus-1, minus-1), and strictly decreases plus + minus.
    """
    _check_quadric(c, plus, minus)
    if plus < 1 or minus < 1:
        raise NotReducible(
            f"quadric (c={c}, s={plus}, t={minus}) is a base case"
        )
    return DisjointUnion(
        (
            Product((PuncturedLine(), AffineSpace(plus + minus - 2))),
            Product((QuadricAffine(c, plus - 1, minus - 1), AffineSpace(1))),
        )
    )


def quadric_base_case(c: int, plus: int, minus: int) -> SetExpression:
    """The base-case set for a quadric atom with plus = 0 or minus = 0."""
    _check_quadric(c, plus, minus)
    if plus >= 1 and minus >= 1:
        raise ValueError("not a base case; use quadric_reduce")
    if c == 0:
        # one sign class empty: the equation forces every coordinate to 0
        return Point()
    if c == 1:
        if plus == 0:
            return EMPTY
        return Sphere(plus - 1)
    if minus == 0:
        return EMPTY
    return Sphere(minus - 1)


def _check_quadric(c, plus, minus):
    if c not in (-1, 0, 1):
        raise MalformedExpression(f"quadric level must be -1, 0 or +1, got {c!r}")
    if (
        not isinstance(plus, int)
        or not isinstance(minus, int)
        or plus < 0
        or minus < 0
    ):
        raise MalformedExpression(
            f"quadric signature must be nonnegative ints: ({plus!r}, {minus!r})"
        )


@lru_cache(maxsize=None)
def _beta_quadric(c: int, plus: int, minus: int) -> LaurentPolynomial:
    if plus >= 1 and minus >= 1:
        return beta_eval(quadric_reduce(c, plus, minus))
    return beta_eval(quadric_base_case(c, plus, minus))


def beta_eval(expression: SetExpression) -> LaurentPolynomial:
    """Evaluate beta on a set expression by additivity and multiplicativity."""
    if isinstance(expression, AffineSpace):
        if not isinstance(expression.k, int) or expression.k < 0:
            raise MalformedExpression(f"affine space needs k >= 0, got {expression.k!r}")
        return LaurentPolynomial.monomial(expression.k)
    if isinstance(expression, PuncturedLine):
        return U - ONE
    if isinstance(expression, Point):
        return ONE
    if isinstance(expression, Sphere):
        if not isinstance(expression.dim, int) or expression.dim < 0:
            raise MalformedExpression(f"sphere needs dim >= 0, got {expression.dim!r}")
        return ONE + LaurentPolynomial.monomial(expression.dim)
    if isinstance(expression, ProjectiveSpace):
        if not isinstance(expression.k, int) or expression.k < 0:
            raise MalformedExpression(
                f"projective space needs k >= 0, got {expression.k!r}"
            )
        return geometric_sum(expression.k + 1)
    if isinstance(expression, QuadricAffine):
        _check_quadric(expression.c, expression.s, expression.t)
        return _beta_quadric(expression.c, expression.s, expression.t)
    if isinstance(expression, QuadricProjective):
        if (
            not isinstance(expression.m, int)
            or not isinstance(expression.M, int)
            or expression.m < 1
            or expression.M < 1
        ):
            raise MalformedExpression(
                f"projective quadric needs m, M >= 1, got ({expression.m!r}, {expression.M!r})"
            )
        return beta_projective_quadric(expression.m, expression.M)
    if isinstance(expression, Product):
        value = ONE
        for child in expression.children:
            value = value * beta_eval(child)
        return value
    if isinstance(expression, DisjointUnion):
        value = ZERO
        for child in expression.children:
            value = value + beta_eval(child)
        return value
    if isinstance(expression, Difference):
        return beta_eval(expression.ambient) - beta_eval(expression.closed_subset)
    raise MalformedExpression(f"not a set expression: {expression!r}")


def cone_relation_check(m: int, M: int) -> bool:
    """Whether beta of the cone is 1 + (u-1) * beta of its projectivization.

    The cone minus the origin fibers over the projective quadric with fiber
    R^*, piecewise algebraically trivially, which is what this identity
    expresses.
    """
    return beta_cone(m, M) == ONE + (U - ONE) * beta_projective_quadric(m, M)


def euler_characteristic(expression: SetExpression) -> int:
    """The specialization u = -1 of beta, as an integer."""
    value = beta_eval(expression).evaluate(-1)
    return int(value)


# ---------------------------------------------------------------------------
# JSON encoding of set expressions
# ---------------------------------------------------------------------------


def expression_to_json(expression: SetExpression) -> dict:
    if isinstance(expression, AffineSpace):
        return {"atom": "affine_space", "k": expression.k}
    if isinstance(expression, PuncturedLine):
        return {"atom": "punctured_line"}
    if isinstance(expression, Point):
        return {"atom": "point"}
    if isinstance(expression, Sphere):
        return {"atom": "sphere", "dim": expression.dim}
    if isinstance(expression, ProjectiveSpace):
        return {"atom": "projective_space", "k": expression.k}
    if isinstance(expression, QuadricAffine):
        return {
            "atom": "quadric_affine",
            "c": expression.c,
            "s": expression.s,
            "t": expression.t,
        }
    if isinstance(expression, QuadricProjective):
        return {"atom": "quadric_projective", "m": expression.m, "M": expression.M}
    if isinstance(expression, Product):
        return {
            "op": "product",
            "children": [expression_to_json(child) for child in expression.children],
        }
    if isinstance(expression, DisjointUnion):
        return {
            "op": "disjoint_union",
            "children": [expression_to_json(child) for child in expression.children],
        }
    if isinstance(expression, Difference):
        return {
            "op": "difference",
            "children": [
                expression_to_json(expression.ambient),
                expression_to_json(expression.closed_subset),
            ],
        }
    raise MalformedExpression(f"not a set expression: {expression!r}")


def _require_int(obj: dict, key: str) -> int:
    value = obj.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise MalformedExpression(f"field {key!r} must be an integer, got {value!r}")
    return value


def expression_from_json(data) -> SetExpression:
    if not isinstance(data, dict):
        raise MalformedExpression(f"expected a JSON object, got {data!r}")
    if "atom" in data:
        atom = data["atom"]
        if atom == "affine_space":
            return AffineSpace(_require_int(data, "k"))
        if atom == "punctured_line":
            return PuncturedLine()
        if atom == "point":
            return Point()
        if atom == "sphere":
            return Sphere(_require_int(data, "dim"))
        if atom == "projective_space":
            return ProjectiveSpace(_require_int(data, "k"))
        if atom == "quadric_affine":
            node = QuadricAffine(
                _require_int(data, "c"), _require_int(data, "s"), _require_int(data, "t")
            )
            _check_quadric(node.c, node.s, node.t)
            return node
        if atom == "quadric_projective":
            m, big = _require_int(data, "m"), _require_int(data, "M")
            if m < 1 or big < 1:
                raise MalformedExpression(
                    f"projective quadric needs m, M >= 1, got ({m}, {big})"
                )
            return QuadricProjective(m, big)
        raise MalformedExpression(f"unknown atom {atom!r}")
    if "op" in data:
        op = data["op"]
        children = data.get("children")
        if not isinstance(children, list):
            raise MalformedExpression("operator node needs a 'children' list")
        parsed = [expression_from_json(child) for child in children]
        if op == "product":
            return Product(tuple(parsed))
        if op == "disjoint_union":
            return DisjointUnion(tuple(parsed))
        if op == "difference":
            if len(parsed) != 2:
                raise MalformedExpression(
                    "difference takes exactly [ambient, closed_subset]"
                )
            return Difference(parsed[0], parsed[1])
        raise MalformedExpression(f"unknown operator {op!r}")
    raise MalformedExpression("expression node needs an 'atom' or 'op' tag")
