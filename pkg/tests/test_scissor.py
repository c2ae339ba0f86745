import random

import pytest

from arczeta import (
    EMPTY,
    AffineSpace,
    Difference,
    DisjointUnion,
    LaurentPolynomial,
    Point,
    Product,
    ProjectiveSpace,
    PuncturedLine,
    QuadricAffine,
    QuadricProjective,
    Sphere,
    beta_cone,
    beta_eval,
    beta_level,
    beta_projective_quadric,
    cone_relation_check,
    euler_characteristic,
    expression_from_json,
    expression_to_json,
    geometric_sum,
    quadric_base_case,
    quadric_reduce,
)
from arczeta.errors import (
    EmptyProjectiveQuadric,
    MalformedExpression,
    NotReducible,
)

U = LaurentPolynomial.monomial(1)
ONE = LaurentPolynomial.one()


def mono(exp, coeff=1):
    return LaurentPolynomial.monomial(exp, coeff)


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------


def test_cone_values():
    assert beta_cone(2, 2) == mono(3) + mono(2) - U
    assert beta_cone(1, 1) == mono(1, 2) - 1
    assert beta_cone(3, 3) == mono(5) + mono(3) - mono(2)
    assert beta_cone(0, 3) == ONE
    assert beta_cone(3, 0) == ONE
    assert beta_cone(0, 0) == ONE
    assert beta_cone(2, 3) == beta_cone(3, 2) == mono(4)


def test_cone_toric_decomposition():
    # the cone of signature (2, 2) is the toric hypersurface XY = UV, a
    # disjoint union of torus orbits: (R*)^3, four (R*)^2, four R*, a point
    torus = U - 1
    assert beta_cone(2, 2) == torus**3 + 4 * torus**2 + 4 * torus + ONE


def test_cone_over_sphere_values():
    for M in range(1, 13):
        assert beta_cone(1, M) == ONE + (U - 1) * (ONE + mono(M - 1))
        assert beta_cone(1, M) == mono(M) - mono(M - 1) + U


def test_projective_quadric_values():
    assert beta_projective_quadric(2, 2) == (ONE + U) * (ONE + U)
    assert beta_projective_quadric(1, 1) == LaurentPolynomial.constant(2)
    assert beta_projective_quadric(1, 2) == ONE + U
    assert beta_projective_quadric(2, 1) == ONE + U
    for m in range(1, 13):
        for M in range(m, 13):
            assert beta_projective_quadric(m, M) == (ONE + mono(M - 1)) * geometric_sum(m)
            assert beta_projective_quadric(m, M) == beta_projective_quadric(M, m)


def test_projective_quadric_empty():
    with pytest.raises(EmptyProjectiveQuadric):
        beta_projective_quadric(0, 3)
    with pytest.raises(EmptyProjectiveQuadric):
        beta_projective_quadric(2, 0)


def test_level_set_values():
    assert beta_level(1, 1, 1) == U - 1
    assert beta_level(2, 1, 1) == mono(2) + U
    assert beta_level(0, 2, 1) == LaurentPolynomial.zero()
    assert beta_level(1, 0, 1) == LaurentPolynomial.constant(2)
    assert beta_level(2, 0, 1) == ONE + U
    assert beta_level(3, 0, 1) == ONE + mono(2)  # the sphere S^2
    assert beta_level(2, 2, -1) == mono(3) - U
    assert beta_level(1, 2, -1) == mono(2) + U
    assert beta_level(2, 0, -1) == LaurentPolynomial.zero()
    assert beta_level(0, 3, -1) == ONE + mono(2)


def test_level_set_symmetry():
    for s in range(13):
        for t in range(13):
            assert beta_level(s, t, -1) == beta_level(t, s, 1)


# ---------------------------------------------------------------------------
# decomposition engine
# ---------------------------------------------------------------------------


def test_quadric_reduce_shapes():
    assert quadric_reduce(1, 2, 1) == DisjointUnion(
        (
            Product((PuncturedLine(), AffineSpace(1))),
            Product((QuadricAffine(1, 1, 0), AffineSpace(1))),
        )
    )
    assert quadric_reduce(0, 1, 1) == DisjointUnion(
        (
            Product((PuncturedLine(), AffineSpace(0))),
            Product((QuadricAffine(0, 0, 0), AffineSpace(1))),
        )
    )
    with pytest.raises(NotReducible):
        quadric_reduce(1, 2, 0)
    with pytest.raises(NotReducible):
        quadric_reduce(0, 0, 4)


def test_quadric_reduce_preserves_beta():
    for c in (-1, 0, 1):
        for s in range(1, 9):
            for t in range(1, 9):
                rewritten = quadric_reduce(c, s, t)
                assert beta_eval(rewritten) == beta_eval(QuadricAffine(c, s, t))


def test_quadric_base_cases():
    assert quadric_base_case(0, 3, 0) == Point()
    assert quadric_base_case(0, 0, 0) == Point()
    assert quadric_base_case(1, 3, 0) == Sphere(2)
    assert quadric_base_case(1, 0, 3) == EMPTY
    assert quadric_base_case(-1, 3, 0) == EMPTY
    assert quadric_base_case(-1, 0, 3) == Sphere(2)
    with pytest.raises(ValueError):
        quadric_base_case(0, 1, 1)


def test_beta_eval_atoms():
    assert beta_eval(AffineSpace(0)) == ONE
    assert beta_eval(AffineSpace(2)) == mono(2)
    assert beta_eval(PuncturedLine()) == U - 1
    assert beta_eval(Point()) == ONE
    assert beta_eval(Sphere(0)) == LaurentPolynomial.constant(2)
    assert beta_eval(Sphere(1)) == ONE + U
    assert beta_eval(ProjectiveSpace(0)) == ONE
    assert beta_eval(ProjectiveSpace(2)) == ONE + U + mono(2)
    assert beta_eval(QuadricProjective(2, 2)) == beta_projective_quadric(2, 2)
    assert beta_eval(EMPTY) == LaurentPolynomial.zero()
    assert beta_eval(Product(())) == ONE


def test_beta_eval_composites():
    assert beta_eval(Product((AffineSpace(2), QuadricAffine(1, 1, 1)))) == mono(3) - mono(2)
    assert beta_eval(DisjointUnion((AffineSpace(1), Point()))) == U + 1
    assert beta_eval(QuadricAffine(0, 2, 3)) == mono(4)
    assert beta_eval(Difference(AffineSpace(1), Point())) == U - 1


def test_engine_matches_closed_forms_on_grid():
    # the central dual-route identity of the module
    for c in (-1, 0, 1):
        for s in range(13):
            for t in range(13):
                closed = beta_cone(s, t) if c == 0 else beta_level(s, t, c)
                assert beta_eval(QuadricAffine(c, s, t)) == closed, (c, s, t)


def test_cone_relation():
    assert cone_relation_check(2, 2)
    assert cone_relation_check(1, 3)
    assert cone_relation_check(1, 1)
    for m in range(1, 13):
        for M in range(1, 13):
            assert cone_relation_check(m, M)


def test_projective_difference_identity():
    for s in range(1, 13):
        for t in range(1, 13):
            if s <= t:
                expected = beta_projective_quadric(s, t + 1) - beta_projective_quadric(s, t)
            else:
                expected = beta_projective_quadric(t + 1, s) - beta_projective_quadric(t, s)
            assert beta_level(s, t, 1) == expected


def test_degree_matches_dimension():
    for c in (-1, 0, 1):
        for s in range(13):
            for t in range(13):
                if c == 0:
                    relevant = min(s, t) >= 1
                elif c == 1:
                    relevant = s >= 1 and s + t >= 2
                else:
                    relevant = t >= 1 and s + t >= 2
                if relevant:
                    assert beta_eval(QuadricAffine(c, s, t)).degree() == s + t - 1


def test_euler_characteristic():
    assert euler_characteristic(Sphere(1)) == 0
    assert euler_characteristic(QuadricAffine(0, 2, 2)) == 1
    assert euler_characteristic(ProjectiveSpace(2)) == 1


def test_malformed_expressions():
    with pytest.raises(MalformedExpression):
        beta_eval(AffineSpace(-1))
    with pytest.raises(MalformedExpression):
        beta_eval(QuadricAffine(2, 1, 1))
    with pytest.raises(MalformedExpression):
        beta_eval(QuadricProjective(0, 2))
    with pytest.raises(MalformedExpression):
        beta_eval("not an expression")
    with pytest.raises(MalformedExpression):
        expression_from_json({"atom": "mystery"})
    with pytest.raises(MalformedExpression):
        expression_from_json({"op": "difference", "children": []})


# ---------------------------------------------------------------------------
# structural invariance and JSON
# ---------------------------------------------------------------------------


def _random_expression(rng, depth):
    if depth == 0 or rng.random() < 0.4:
        return rng.choice(
            [
                AffineSpace(rng.randint(0, 3)),
                PuncturedLine(),
                Point(),
                Sphere(rng.randint(0, 3)),
                ProjectiveSpace(rng.randint(0, 3)),
                QuadricAffine(rng.choice([-1, 0, 1]), rng.randint(0, 3), rng.randint(0, 3)),
                QuadricProjective(rng.randint(1, 3), rng.randint(1, 3)),
            ]
        )
    roll = rng.random()
    if roll < 0.45:
        return Product(tuple(_random_expression(rng, depth - 1) for _ in range(rng.randint(0, 3))))
    if roll < 0.9:
        return DisjointUnion(
            tuple(_random_expression(rng, depth - 1) for _ in range(rng.randint(0, 3)))
        )
    return Difference(_random_expression(rng, depth - 1), _random_expression(rng, depth - 1))


def _shuffled(rng, expression):
    if isinstance(expression, (Product, DisjointUnion)):
        children = [_shuffled(rng, child) for child in expression.children]
        rng.shuffle(children)
        return type(expression)(tuple(children))
    if isinstance(expression, Difference):
        return Difference(
            _shuffled(rng, expression.ambient), _shuffled(rng, expression.closed_subset)
        )
    return expression


def _reassociated(rng, expression):
    if isinstance(expression, (Product, DisjointUnion)):
        children = tuple(_reassociated(rng, child) for child in expression.children)
        if len(children) >= 3:
            cut = rng.randint(2, len(children) - 1)
            inner = type(expression)(children[:cut])
            return type(expression)((inner,) + children[cut:])
        return type(expression)(children)
    if isinstance(expression, Difference):
        return Difference(
            _reassociated(rng, expression.ambient),
            _reassociated(rng, expression.closed_subset),
        )
    return expression


def test_beta_eval_invariant_under_reshaping():
    rng = random.Random(31415)
    for _ in range(120):
        expression = _random_expression(rng, 3)
        value = beta_eval(expression)
        assert beta_eval(_shuffled(rng, expression)) == value
        assert beta_eval(_reassociated(rng, expression)) == value


def test_expression_json_round_trip():
    rng = random.Random(27182)
    for _ in range(120):
        expression = _random_expression(rng, 3)
        data = expression_to_json(expression)
        assert expression_from_json(data) == expression
    assert expression_from_json(
        {"atom": "quadric_affine", "c": 1, "s": 2, "t": 1}
    ) == QuadricAffine(1, 2, 1)
