"""Scratch: finish the corpus point hunt — cubic-unity Nourein point + default points for all instances."""
import cmath
import math
import random
import simulroots as sr
from simulroots.trace import RunConfig, run_iteration

ninf = sr.NormParameter.of(math.inf)
rng = random.Random(11)
ALL = (sr.Method.WEIERSTRASS, sr.Method.EHRLICH, sr.Method.EHRLICH_DERIVATIVE, sr.Method.NOUREIN)
WINDOWS = {"weierstrass": (1.7, 2.3), "ehrlich": (2.7, 3.3),
           "ehrlich-derivative": (2.7, 3.3), "nourein": (3.7, 4.3)}


def scan_nourein(f, roots_hint, e_target, tries=250, label=""):
    best = None
    n = f.degree
    for t in range(tries):
        dirs = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n)]
        dirs = [d / abs(d) for d in dirs]
        lo, hi = 1e-4, 1.2
        for _ in range(42):
            s = 0.5 * (lo + hi)
            z0 = tuple(r + s * d for r, d in zip(roots_hint, dirs))
            try:
                e0 = sr.quality_measure(f, z0, ninf)
            except Exception:
                hi = s
                continue
            (lo, hi) = (s, hi) if e0 < e_target else (lo, s)
        z0 = tuple(r + lo * d for r, d in zip(roots_hint, dirs))
        cert = sr.certify_nourein(f, z0, ninf)
        if not cert.strict:
            continue
        tr = run_iteration(f, z0, RunConfig(method=sr.Method.NOUREIN, p=math.inf, oracle=True, tol=1e-14, max_iters=30))
        errs = [r.true_error for r in tr.rows]
        est = tr.empirical_order
        plat = est.plateau if est else None
        if plat is None or not (3.8 <= plat <= 4.2):
            continue
        e2 = errs[2] if len(errs) > 2 else 0.0
        if best is None or e2 > best[0]:
            best = (e2, z0, plat)
    if best:
        print(f"{label}: e2={best[0]:.3e} ({best[0]/1e-13:.0f}x floor) plateau={best[2]:.3f}")
        print(f"   z0={best[1]}")
    else:
        print(f"{label}: none found")
    return best


def full_check(f, z0, label):
    """all-method certs + plateaus from one point"""
    e0 = sr.quality_measure(f, z0, ninf)
    out = f"{label:30s} E0={e0:.4f} "
    for m in ALL:
        cert = sr.certify(m, f, z0, ninf)
        if not cert.strict:
            out += f"{m.value[:3]}:NOT-STRICT "
            continue
        tr = run_iteration(f, z0, RunConfig(method=m, p=math.inf, oracle=True, tol=1e-13, max_iters=60))
        plat = tr.empirical_order.plateau if tr.empirical_order else None
        lo, hi = WINDOWS[m.value]
        flag = "OK" if (plat is not None and lo <= plat <= hi) else "BAD"
        out += f"{m.value[:3]}:{'None' if plat is None else f'{plat:.2f}'}/{flag} "
    print(out)


# cubic-unity: x^3 - 1
w3 = cmath.exp(2j * cmath.pi / 3)
f_unity = sr.MonicPolynomial((-1, 0, 0))
scan_nourein(f_unity, [1, w3, w3.conjugate()], 0.170, label="x^3-1 E->0.170")

# quartic-cross x^4+16 confirm found point for W/E at smaller E
f_cross = sr.MonicPolynomial((16, 0, 0, 0))
cross_roots = [2, 2j, -2, -2j]
we_point = tuple(r + 0.28 * d for r, d in zip(cross_roots, [cmath.exp(0.7j), cmath.exp(2.1j), cmath.exp(4.0j), cmath.exp(5.5j)]))
full_check(f_cross, we_point, "x^4+16 W/E point")

# default points for the bigger instances: small proportional perturbations
print()
f5 = sr.MonicPolynomial.from_roots([-2, -1, 0, 1, 2])
z5 = (-2.06, -0.93, 0.05, 0.94, 2.07)
full_check(f5, z5, "n5 sym default")

f6 = sr.MonicPolynomial((-64, 0, 0, 0, 0, 0))
r6 = [2 * cmath.exp(2j * cmath.pi * k / 6) for k in range(6)]
z6 = tuple(r * 1.04 * cmath.exp(0.015j) for r in r6)
full_check(f6, z6, "x^6-64 default")

f8 = sr.MonicPolynomial.from_roots([1, 2, 3, 4, 5, 6, 7, 8])
z8 = tuple(k + 0.02 * (1 if k % 2 else -1) + 0.012j * (1 if k in (2, 3, 6) else -1) for k in range(1, 9))
full_check(f8, z8, "wilkinson8 default")

f12 = sr.MonicPolynomial((-1,) + (0,) * 11)
r12 = [cmath.exp(2j * cmath.pi * k / 12) for k in range(12)]
z12 = tuple(r * (1.008 * cmath.exp(0.006j)) for r in r12)
full_check(f12, z12, "x^12-1 default")

# chebyshev quartic
import numpy as np
cheb_roots = [math.cos(math.pi * (2 * k - 1) / 8) for k in (1, 2, 3, 4)]
f_cheb = sr.MonicPolynomial((0.125, 0, -1, 0))
print("cheb roots:", cheb_roots, "check f at roots:", [abs(f_cheb(r)) for r in cheb_roots])
z_cheb = tuple(r + s for r, s in zip(cheb_roots, (0.02, -0.015, 0.018, -0.02)))
full_check(f_cheb, z_cheb, "chebyshev4 default")

# clustered + double-root: should FAIL certification
f_cl = sr.MonicPolynomial.from_roots([1, 1.001, 3])
print("clustered coeffs:", [c.real for c in f_cl.coefficients])
for z in [(1.05, 0.96, 3.05), (1.2, 0.8, 2.9)]:
    c = sr.certify_localization(f_cl, z, ninf)
    print("clustered cert satisfied (want False):", c.satisfied, "E0=", c.quality)

f_dbl = sr.MonicPolynomial((1, -2))
print("double-root verdict (want False):", sr.certifies_simple_zeros(f_dbl, (1.3, 0.7), ninf))
