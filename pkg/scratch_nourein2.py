"""Scratch: direction search maximizing Nourein's third above-floor error at n=3,4."""
import math
import random
import simulroots as sr
from simulroots.trace import RunConfig, run_iteration

ninf = sr.NormParameter.of(math.inf)
rng = random.Random(7)


def nourein_e2(roots, z0):
    f = sr.MonicPolynomial.from_roots(roots)
    cert = sr.certify_nourein(f, z0, ninf)
    if not cert.strict:
        return None, None, cert
    tr = run_iteration(f, z0, RunConfig(method=sr.Method.NOUREIN, p=math.inf, oracle=True, tol=1e-14, max_iters=30))
    errs = [r.true_error for r in tr.rows]
    est = tr.empirical_order
    return errs, (est.plateau if est else None), cert


def scan(roots, e_target, tries=200, label=""):
    best = None
    n = len(roots)
    f = sr.MonicPolynomial.from_roots(roots)
    for t in range(tries):
        dirs = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n)]
        dirs = [d / abs(d) for d in dirs]
        # scale the pattern so E0 hits the target
        lo, hi = 1e-4, 1.0
        for _ in range(40):
            s = 0.5 * (lo + hi)
            z0 = tuple(r + s * d for r, d in zip(roots, dirs))
            try:
                e0 = sr.quality_measure(f, z0, ninf)
            except Exception:
                hi = s
                continue
            if e0 < e_target:
                lo = s
            else:
                hi = s
        z0 = tuple(r + lo * d for r, d in zip(roots, dirs))
        errs, plat, cert = nourein_e2(roots, z0)
        if errs is None or len(errs) < 3:
            continue
        e2 = errs[2] if len(errs) > 2 else 0.0
        if plat is not None and 3.7 <= plat <= 4.3:
            margin = e2 / 1e-13
            if best is None or margin > best[0]:
                best = (margin, z0, plat, errs[:4])
    if best:
        m, z0, plat, errs = best
        print(f"{label}: margin={m:.1f}x plateau={plat:.3f}")
        print(f"   z0 = {z0}")
        print(f"   errs = {['%.3e' % e for e in errs]}")
    else:
        print(f"{label}: nothing found")
    return best


scan([1, 2, 3], 0.168, label="n3 {1,2,3} E->0.168")
scan([1, 2, 3], 0.171, label="n3 {1,2,3} E->0.171")
scan([1, 2, 3, 4], 0.132, label="n4 {1,2,3,4} E->0.132")
scan([2, 2j, -2, -2j], 0.132, label="n4 square E->0.132")
