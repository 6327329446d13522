import math

import pytest
from hypothesis import given, settings, strategies as st

from fairspiral.errors import InvalidInterval, NonConvergence, NonFiniteEvaluation
from fairspiral.quadrature import _WG, _WGK, gk15, integrate


def test_rule_weights_sum_to_interval_length():
    assert 2 * sum(_WGK[:7]) + _WGK[7] == pytest.approx(2.0, abs=1e-15)
    assert 2 * sum(_WG[:3]) + _WG[3] == pytest.approx(2.0, abs=1e-15)


def test_polynomial_exact():
    r = integrate(lambda x: x * x, 0.0, 1.0)
    assert abs(r.value - 1 / 3) < 1e-14
    assert r.subintervals_used == 1
    # K15 integrates degree 22 exactly on a single panel
    value, _ = gk15(lambda x: x ** 22, -1.0, 1.0)
    assert value == pytest.approx(2 / 23, abs=1e-15)


def test_sine():
    assert abs(integrate(math.sin, 0.0, math.pi).value - 2.0) < 1e-12


def test_endpoint_singularity():
    r = integrate(lambda x: x ** -0.5, 0.0, 1.0, abs_tol=1e-8, rel_tol=0.0)
    assert abs(r.value - 2.0) < 1e-8
    assert r.converged and r.error_estimate <= 1e-8
    assert r.subintervals_used > 1


def test_degenerate_interval():
    r = integrate(lambda x: 1 / x, 2.0, 2.0)
    assert r.value == 0.0 and r.error_estimate == 0.0


def test_reversed_interval():
    with pytest.raises(InvalidInterval):
        integrate(math.cos, 1.0, 0.0)


def test_nonfinite_node():
    with pytest.raises(NonFiniteEvaluation):
        integrate(lambda x: 1.0 / (x - 0.5), 0.0, 1.0)


def test_subdivision_cap():
    with pytest.raises(NonConvergence) as info:
        integrate(lambda x: math.sin(1 / x), 1e-6, 1.0, abs_tol=1e-14, rel_tol=0.0, max_subintervals=20)
    assert info.value.partial.subintervals_used == 20


def test_complex_integrand():
    r = integrate(lambda t: complex(math.cos(t), math.sin(t)), 0.0, math.pi / 2)
    assert r.value == pytest.approx(1 + 1j, abs=1e-13)


@settings(max_examples=40, deadline=None)
@given(st.floats(-2, 2), st.floats(0.01, 3), st.floats(0.01, 3),
       st.floats(-3, 3), st.floats(0.1, 4))
def test_additivity(a, w1, w2, amp, freq):
    def f(x):
        return amp * math.cos(freq * x) + x * x

    b, c = a + w1, a + w1 + w2
    whole = integrate(f, a, c)
    left, right = integrate(f, a, b), integrate(f, b, c)
    slack = 2 * (whole.error_estimate + left.error_estimate + right.error_estimate) + 1e-14
    assert abs(whole.value - (left.value + right.value)) <= slack


@settings(max_examples=30, deadline=None)
@given(st.floats(-5, 5), st.floats(-5, 5))
def test_linearity(alpha, beta):
    f, g = math.exp, lambda x: math.sqrt(1 + x * x)
    lhs = integrate(lambda x: alpha * f(x) + beta * g(x), 0.0, 2.0)
    rf, rg = integrate(f, 0.0, 2.0), integrate(g, 0.0, 2.0)
    tol = lhs.error_estimate + abs(alpha) * rf.error_estimate + abs(beta) * rg.error_estimate + 1e-13
    assert abs(lhs.value - (alpha * rf.value + beta * rg.value)) <= tol
