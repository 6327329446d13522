"""Independent oracle values frozen into the test-suite.

Run by hand (``python tests/oracles/compute_oracles.py``); nothing here imports
the package. Each value is computed by brute force and, where cheap, cross
checked with mpmath.
"""
import math

import mpmath


def simpson(f, lo, hi, n=200_000):
    if n % 2:
        n += 1
    h = (hi - lo) / n
    acc = f(lo) + f(hi)
    for i in range(1, n):
        acc += (4 if i % 2 else 2) * f(lo + i * h)
    return acc * h / 3


def sum_inverse_factorial_squares(terms=60):
    mpmath.mp.dps = 50
    return sum(1 / mpmath.factorial(n) ** 2 for n in range(terms))


def fresnel_unit():
    # clothoid kappa(s) = s, theta = s^2 / 2, integrated to s = 1
    x = simpson(lambda u: math.cos(u * u / 2), 0.0, 1.0)
    y = simpson(lambda u: math.sin(u * u / 2), 0.0, 1.0)
    mpmath.mp.dps = 30
    xm = mpmath.quad(lambda u: mpmath.cos(u * u / 2), [0, 1])
    ym = mpmath.quad(lambda u: mpmath.sin(u * u / 2), [0, 1])
    assert abs(x - xm) < 1e-13 and abs(y - ym) < 1e-13
    return x, y


def hyp2f1_euler(a, b, c, z):
    # Euler integral; t = 1 - u^2 removes the (1-t)^(c-b-1) endpoint singularity
    # for c - b = 1/2.
    assert abs(c - b - 0.5) < 1e-15 and b == 1.0
    pref = math.gamma(c) / (math.gamma(b) * math.gamma(c - b))
    return pref * simpson(lambda u: 2.0 * (1 - z * (1 - u * u)) ** (-a), 0.0, 1.0)


if __name__ == "__main__":
    print("sum 1/(n!)^2       =", mpmath.nstr(sum_inverse_factorial_squares(), 25))
    print("fresnel(1)         = %r" % (fresnel_unit(),))
    print("2F1(.2,1,1.5,-3)   = %r" % hyp2f1_euler(0.2, 1.0, 1.5, -3.0))
    mpmath.mp.dps = 30
    print("  mpmath cross     =", mpmath.hyp2f1(0.2, 1.0, 1.5, -3.0))
    print("ln 2               = %r" % math.log(2))
