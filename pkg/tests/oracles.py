"""Independent reference implementations used only by the tests.

Everything here is deliberately written from the defining formulas, in a
different style (term-by-term sums, mpmath high precision) from the library
code it checks, so agreement is evidence rather than tautology.
"""

import mpmath

DIGITS = 50


def eval_expanded(coeffs, x):
    """Sum c_k x**k + x**n term by term (no Horner)."""
    n = len(coeffs)
    return sum(c * x**k for k, c in enumerate(coeffs)) + x**n


def central_difference(func, x, h=1e-6):
    return (func(x + h) - func(x - h)) / (2 * h)


def _mp_poly(coeffs):
    cs = [mpmath.mpc(c) for c in coeffs]

    def f(x):
        return sum(c * x**k for k, c in enumerate(cs)) + x ** len(cs)

    return f


def mp_weierstrass(coeffs, z):
    """Corrections from the product formula at 50-digit precision."""
    with mpmath.workdps(DIGITS):
        f = _mp_poly(coeffs)
        zs = [mpmath.mpc(p) for p in z]
        out = []
        for i, zi in enumerate(zs):
            prod = mpmath.mpc(1)
            for j, zj in enumerate(zs):
                if j != i:
                    prod *= zi - zj
            out.append(complex(f(zi) / prod))
        return out


def mp_step_weierstrass(coeffs, z):
    with mpmath.workdps(DIGITS):
        f = _mp_poly(coeffs)
        zs = [mpmath.mpc(p) for p in z]
        out = []
        for i, zi in enumerate(zs):
            prod = mpmath.mpc(1)
            for j, zj in enumerate(zs):
                if j != i:
                    prod *= zi - zj
            out.append(complex(zi - f(zi) / prod))
        return out


def mp_step_ehrlich_derivative(coeffs, z):
    """Derivative-form step computed symbolically via mpmath.diff."""
    with mpmath.workdps(DIGITS):
        f = _mp_poly(coeffs)
        zs = [mpmath.mpc(p) for p in z]
        out = []
        for i, zi in enumerate(zs):
            fi = f(zi)
            dfi = mpmath.diff(f, zi)
            s = sum(1 / (zi - zj) for j, zj in enumerate(zs) if j != i)
            out.append(complex(zi - fi / (dfi - fi * s)))
        return out


def mp_step_nourein(coeffs, z):
    with mpmath.workdps(DIGITS):
        f = _mp_poly(coeffs)
        zs = [mpmath.mpc(p) for p in z]
        w = []
        for i, zi in enumerate(zs):
            prod = mpmath.mpc(1)
            for j, zj in enumerate(zs):
                if j != i:
                    prod *= zi - zj
            w.append(f(zi) / prod)
        out = []
        for i, zi in enumerate(zs):
            denom = mpmath.mpc(1)
            for j, zj in enumerate(zs):
                if j != i:
                    denom += w[j] / (zi - zj - w[i])
            out.append(complex(zi - w[i] / denom))
        return out


def mp_gauge_ehrlich(x, n, inv_p):
    """The Ehrlich gauge from its printed formula at 50-digit precision."""
    with mpmath.workdps(DIGITS):
        inv_q = 1 - inv_p
        a = mpmath.mpf(n - 1) ** inv_q
        b = mpmath.mpf(2) ** inv_q
        x = mpmath.mpf(x)
        value = (
            a * x**2 / ((1 - (a + 1) * x) * (1 - (a + b) * x))
            * (1 + a * x / ((n - 1) * (1 - (a + b) * x))) ** (n - 1)
        )
        return float(value)


def mp_gauge_nourein(x, n, inv_p):
    with mpmath.workdps(DIGITS):
        inv_q = 1 - inv_p
        a = mpmath.mpf(n - 1) ** inv_q
        b = mpmath.mpf(2) ** inv_q
        m = a + b + 1
        x = mpmath.mpf(x)
        q1 = 1 - m * x + b * x**2
        q2 = 1 - (a + 2) * x + x**2
        value = (
            a**2 * x**3 / (q1 * q2)
            * (1 + a * (x - x**2) / ((n - 1) * q1)) ** (n - 1)
        )
        return float(value)


def mp_gauge_localization(x, n, inv_p):
    with mpmath.workdps(DIGITS):
        inv_q = 1 - inv_p
        a = mpmath.mpf(n - 1) ** inv_q
        b = mpmath.mpf(2) ** inv_q
        a_dual = mpmath.mpf(n - 1) ** inv_p
        x = mpmath.mpf(x)
        value = (
            a * x / ((1 - x) * (1 - b * x))
            * (1 + x / (a_dual * (1 - b * x))) ** (n - 1)
        )
        return float(value)


def mp_l1_root(which):
    """Threshold equation roots via mpmath's general solver (not bisection)."""
    with mpmath.workdps(DIGITS):
        if which == "ehrlich":
            g = lambda x: (x / (1 - 2 * x)) ** 2 * mpmath.exp(x / (1 - 2 * x)) - 1
            seed = mpmath.mpf("0.29")
        else:
            g = lambda x: x**3 / (1 - 3 * x + x**2) ** 2 * mpmath.exp(
                (x - x**2) / (1 - 3 * x + x**2)
            ) - 1
            seed = mpmath.mpf("0.28")
        return float(mpmath.findroot(g, seed))
