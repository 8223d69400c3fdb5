"""Scratch: tune initial points, verify certificates/orders/bounds, emit corpus JSON."""
import json
import math
import cmath
import simulroots as sr
from simulroots.trace import RunConfig, run_iteration

ninf = sr.NormParameter.of(math.inf)
ALL = (sr.Method.WEIERSTRASS, sr.Method.EHRLICH, sr.Method.EHRLICH_DERIVATIVE, sr.Method.NOUREIN)


def check_point(f, z0, label, order_suite=False):
    e0 = sr.quality_measure(f, z0, ninf)
    certs = {m: sr.certify(m, f, z0, ninf) for m in (sr.Method.WEIERSTRASS, sr.Method.EHRLICH, sr.Method.NOUREIN)}
    strict_all = all(c.strict for c in certs.values())
    print(f"  [{label}] E0={e0:.4f} strict_all={strict_all} "
          + " ".join(f"{m.value[:3]}={c.contraction if c.contraction is None else round(c.contraction,3)}" for m, c in certs.items()))
    results = {}
    if order_suite:
        for m in ALL:
            tr = run_iteration(f, z0, RunConfig(method=m, p=math.inf, oracle=True, tol=1e-13, max_iters=60))
            plateau = tr.empirical_order.plateau if tr.empirical_order else None
            results[m] = plateau
            window = {"weierstrass": (1.7, 2.3), "ehrlich": (2.7, 3.3),
                      "ehrlich-derivative": (2.7, 3.3), "nourein": (3.7, 4.3)}[m.value]
            ok = plateau is not None and window[0] <= plateau <= window[1]
            print(f"      {m.value:18s} plateau={'None' if plateau is None else f'{plateau:.3f}'} in-window={ok} status={tr.status}")
    return strict_all, results


def bounds_check(f, z0, label):
    # Ehrlich + Nourein bound validity above noise floor
    for m in (sr.Method.EHRLICH, sr.Method.NOUREIN):
        tr = run_iteration(f, z0, RunConfig(method=m, p=math.inf, oracle=True, tol=1e-12, max_iters=60))
        scale = max(abs(c) for c in tr.rows[-1].z)
        floor = 1e-13 * max(1.0, scale)
        viol = []
        for rep in tr.bound_reports():
            if rep.true_error is None or rep.true_error <= floor:
                continue
            if rep.a_posteriori is not None and not rep.a_posteriori >= rep.true_error:
                viol.append(("post", rep.k, rep.a_posteriori, rep.true_error))
            if rep.a_priori is not None and not rep.a_priori >= rep.true_error:
                viol.append(("pri", rep.k, rep.a_priori, rep.true_error))
        print(f"      bounds {m.value:8s} [{label}] violations={viol}")


def localize_check(f, z0, label):
    cert = sr.certify_localization(f, z0, ninf)
    if not cert.satisfied:
        print(f"      localize [{label}]: cert not satisfied, skip")
        return
    disks = sr.inclusion_disks(f, z0, ninf)
    ref = sr.reference_roots(f)
    from simulroots.localize import pairwise_disjoint, match_roots_to_disks
    ok, gap = pairwise_disjoint(disks)
    match = match_roots_to_disks(disks, ref.as_complex)
    print(f"      localize [{label}]: disjoint={ok} gap={gap:.3e} match={match}")


print("== quadratic-real ==")
f = sr.MonicPolynomial((-1, 0))
check_point(f, (1.2, -0.8), "default", order_suite=True)
check_point(f, (1.31, -0.71), "order", order_suite=True)
bounds_check(f, (1.2, -0.8), "default")
localize_check(f, (1.05, -0.95), "near")

print("== quadratic-imag  x^2+1 ==")
f = sr.MonicPolynomial((1, 0))
for z0 in [(0.25 + 1.2j, 0.05 - 0.85j), (0.2 + 1.25j, -0.15 - 0.8j)]:
    check_point(f, z0, str(z0), order_suite=True)
    bounds_check(f, z0, str(z0))

print("== cubic-integers {1,2,3} ==")
f = sr.MonicPolynomial.from_roots([1, 2, 3])
for z0 in [(1.1, 1.87, 3.14), (1.12, 1.88, 3.13), (1.08, 1.9, 3.11)]:
    check_point(f, z0, str(z0), order_suite=True)
    bounds_check(f, z0, str(z0))

print("== cubic-unity x^3-1 ==")
f = sr.MonicPolynomial((-1, 0, 0))
w = -0.5 + 0.8660254037844386j
for s in (0.12, 0.15, 0.18):
    z0 = (1 + s, w + s * 1j, w.conjugate() - s * (0.5 + 0.5j))
    check_point(f, z0, f"s={s}", order_suite=True)

print("== quartic-integers {1,2,3,4} ==")
f = sr.MonicPolynomial.from_roots([1, 2, 3, 4])
check_point(f, tuple(r + 0.02 for r in (1, 2, 3, 4)), "default+0.02")
localize_check(f, tuple(r + 0.02 for r in (1, 2, 3, 4)), "default")
for z0 in [(1.12, 1.9, 3.08, 3.9), (1.1, 1.89, 3.11, 3.88), (1.13, 1.88, 2.91, 4.11)]:
    check_point(f, z0, str(z0), order_suite=True)
    bounds_check(f, z0, str(z0))
