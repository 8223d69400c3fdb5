import json
import random

import pytest

from simulroots.poly import (
    MonicPolynomial,
    RootVector,
    evaluate,
    evaluate_derivative,
    polynomial_from_json,
    polynomial_to_json,
)

from oracles import central_difference, eval_expanded


def test_eval_direct_substitution():
    f = MonicPolynomial((-1, 0))  # x^2 - 1
    assert evaluate(f, 2) == 3
    assert evaluate(f, 1) == 0


def test_eval_complex_coefficients_matches_expanded_sum():
    coeffs = (-5 + 0j, 2 + 1j, 0j)  # x^3 + (2+i)x - 5
    f = MonicPolynomial(coeffs)
    x = 1 + 1j
    expected = eval_expanded(coeffs, x)
    assert evaluate(f, x) == pytest.approx(expected, rel=1e-14)
    assert expected == pytest.approx(-6 + 5j)


def test_derivative_simple_cases():
    f = MonicPolynomial((-1, 0))
    assert evaluate_derivative(f, 2) == 4
    cubic = MonicPolynomial((0, 0, 0))  # x^3
    assert evaluate_derivative(cubic, 0) == 0


def test_derivative_matches_central_difference_random_quintic():
    rng = random.Random(42)
    coeffs = tuple(complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(5))
    f = MonicPolynomial(coeffs)
    x = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
    approx = central_difference(lambda t: evaluate(f, t), x)
    exact = evaluate_derivative(f, x)
    assert abs(exact - approx) <= 1e-6 * max(1.0, abs(exact))


def test_derivative_central_difference_sweep():
    rng = random.Random(7)
    for _ in range(100):
        degree = rng.randint(2, 6)
        coeffs = tuple(
            complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(degree)
        )
        f = MonicPolynomial(coeffs)
        x = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        approx = central_difference(lambda t: evaluate(f, t), x)
        exact = evaluate_derivative(f, x)
        assert abs(exact - approx) <= 1e-5 * max(1.0, abs(exact))


def test_coefficient_form_agrees_with_product_form():
    for roots in ([1, 2, 3], [1, 2, 3, 4], [0.5, -0.5, 1.5, 2.5]):
        f = MonicPolynomial.from_roots(roots)
        rng = random.Random(3)
        for _ in range(20):
            x = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
            product = 1.0 + 0.0j
            for r in roots:
                product *= x - r
            assert evaluate(f, x) == pytest.approx(product, rel=1e-9, abs=1e-12)


def test_from_roots_integer_exactness():
    f = MonicPolynomial.from_roots([1, 2, 3])
    assert f.coefficients == (complex(-6), complex(11), complex(-6))
    wilkinson = MonicPolynomial.from_roots(range(1, 9))
    assert wilkinson.coefficients[0] == complex(40320)
    assert wilkinson.coefficients[7] == complex(-36)


def test_degree_below_two_rejected():
    with pytest.raises(ValueError):
        MonicPolynomial((1.0,))


def test_root_vector_residuals():
    f = MonicPolynomial.from_roots([1, 2, 3])
    assert RootVector((1, 2, 3)).max_residual(f) == 0
    assert RootVector((1.1, 2, 3)).max_residual(f) > 0.01


def test_json_round_trip():
    f = MonicPolynomial((-5 + 0j, 2 + 1j, 0j))
    obj = polynomial_to_json(f)
    assert obj["degree"] == 3
    again = polynomial_from_json(json.loads(json.dumps(obj)))
    assert again == f


@pytest.mark.parametrize(
    "obj",
    [
        [],
        {"degree": 3, "coeffs": [[1, 0]]},
        {"degree": 2},
        {"degree": 2, "coeffs": [[1, 0], [0]]},
        {"degree": 2, "coeffs": "nope"},
    ],
)
def test_json_malformed_rejected(obj):
    with pytest.raises(ValueError):
        polynomial_from_json(obj)


def test_coefficient_scale_is_cauchy_bound():
    f = MonicPolynomial((-6, 11, -6))
    assert f.coefficient_scale() == 12.0
