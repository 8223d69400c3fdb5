"""Scratch: hunt n=3/n=4 configurations where Nourein order is measurable from certified starts."""
import math
import itertools
import simulroots as sr
from simulroots.trace import RunConfig, run_iteration

ninf = sr.NormParameter.of(math.inf)


def try_point(roots, z0, label=""):
    f = sr.MonicPolynomial.from_roots(roots)
    e0 = sr.quality_measure(f, z0, ninf)
    certs = {m: sr.certify(m, f, z0, ninf) for m in (sr.Method.WEIERSTRASS, sr.Method.EHRLICH, sr.Method.NOUREIN)}
    if not all(c.strict for c in certs.values()):
        return None
    tr = run_iteration(f, z0, RunConfig(method=sr.Method.NOUREIN, p=math.inf, oracle=True, tol=1e-14, max_iters=40))
    errs = [r.true_error for r in tr.rows]
    est = tr.empirical_order
    plat = est.plateau if est else None
    ok = plat is not None and 3.7 <= plat <= 4.3
    print(f"{label:42s} E0={e0:.4f} phiN={certs[sr.Method.NOUREIN].contraction:.3f} "
          f"phiW={certs[sr.Method.WEIERSTRASS].contraction:.3f} plateau={plat if plat is None else round(plat,3)} ok={ok} "
          f"errs={['%.2e' % e for e in errs[:5]]}")
    return ok


# n=3: scan perturbation scale on {1,2,3} with a fixed direction pattern
dirs = [1+0.3j, -0.8-0.5j, 0.6-0.9j]
dirs = [d/abs(d) for d in dirs]
for s in (0.14, 0.15, 0.16, 0.165, 0.17):
    z0 = tuple(r + s*d for r, d in zip((1, 2, 3), dirs))
    try_point([1, 2, 3], z0, f"n3 {{1,2,3}} s={s}")

# n=3 triangle roots (complex, equilateral, separation 2)
import cmath
tri = [2*cmath.exp(2j*cmath.pi*k/3) for k in range(3)]
for s in (0.25, 0.28, 0.30, 0.32):
    z0 = tuple(r + s*d for r, d in zip(tri, dirs))
    try_point(tri, z0, f"n3 triangle s={s}")

# n=3 with uneven spacing: tight pair drives a big quartic constant
for roots in ([1, 2, 4.5], [1, 1.8, 5], [0, 1.5, 6]):
    f = sr.MonicPolynomial.from_roots(roots)
    d, _ = sr.separations(roots)
    for s in (0.12, 0.14, 0.16):
        z0 = tuple(r + s*di*u for r, di, u in zip(roots, d, dirs))
        try_point(roots, z0, f"n3 {roots} s={s}")

# n=4 attempts: {1,2,3,4} proportional-to-d perturbations
dirs4 = [1+0.4j, -0.7-0.6j, 0.5-0.9j, -1+0.2j]
dirs4 = [d/abs(d) for d in dirs4]
for s in (0.11, 0.12, 0.125, 0.13):
    z0 = tuple(r + s*d for r, d in zip((1, 2, 3, 4), dirs4))
    try_point([1, 2, 3, 4], z0, f"n4 {{1,2,3,4}} s={s}")

# n=4 square roots config
sq = [2+2j, -2+2j, -2-2j, 2-2j]
for s in (0.35, 0.4, 0.45, 0.5):
    z0 = tuple(r + s*d for r, d in zip(sq, dirs4))
    try_point(sq, z0, f"n4 square s={s}")
