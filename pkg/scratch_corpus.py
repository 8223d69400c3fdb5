"""Scratch: explore corpus candidates — certificates and order plateaus."""
import math
import simulroots as sr
from simulroots.trace import RunConfig, run_iteration

ninf = sr.NormParameter.of(math.inf)


def probe(name, roots, z0, p="inf"):
    f = sr.MonicPolynomial.from_roots(roots)
    norm = sr.NormParameter.of(p)
    e0 = sr.quality_measure(f, z0, norm)
    certs = {
        m: sr.certify(m, f, z0, norm)
        for m in (sr.Method.WEIERSTRASS, sr.Method.EHRLICH, sr.Method.NOUREIN)
    }
    line = f"{name:28s} E0={e0:.4f} "
    for m, c in certs.items():
        line += f"{m.value[:3]}:{'S' if c.strict else ('s' if c.satisfied else '-')}"
        if c.contraction is not None:
            line += f"(phi={c.contraction:.3g}) "
        else:
            line += " "
    print(line)
    for m in (sr.Method.WEIERSTRASS, sr.Method.EHRLICH, sr.Method.EHRLICH_DERIVATIVE, sr.Method.NOUREIN):
        cfg = RunConfig(method=m, p=norm.p, oracle=True, tol=1e-14, max_iters=60)
        tr = run_iteration(f, z0, cfg)
        errs = [r.true_error for r in tr.rows]
        above = [e for e in errs if e and e > 1e-13]
        try:
            est = tr.empirical_order
            plateau = est.plateau if est else None
            ratios = [f"{r:.2f}" for _, r in est.ratios] if est else []
        except Exception as e:
            plateau, ratios = None, [str(e)]
        print(f"    {m.value:18s} status={tr.status:16s} iters={len(tr.rows):3d} "
              f"above_floor={len(above)} plateau={plateau if plateau is None else f'{plateau:.3f}'} ratios={ratios} "
              f"errs={['%.1e' % e for e in errs[:7]]}")


# candidates for order measurement (small n, moderate E0)
probe("n2 x^2-1", [1, -1], (1.31, -0.71))
probe("n2 x^2-1 wider", [1, -1], (1.4, -0.6))
probe("n3 {1,2,3}", [1, 2, 3], (1.22, 1.82, 3.24))
probe("n3 cube roots unity", [1, -0.5+0.8660254037844386j, -0.5-0.8660254037844386j],
      (1.15, -0.62+0.95j, -0.4-0.8j))
probe("n4 {1,2,3,4}", [1, 2, 3, 4], (1.15, 1.85, 3.2, 3.85))
probe("n5 {-2,-1,0,1,2}", [-2, -1, 0, 1, 2], (-2.12, -0.88, 0.14, 0.86, 2.13))
probe("n6 scaled unity", [2, 1+1.7320508075688772j, -1+1.7320508075688772j, -2,
                          -1-1.7320508075688772j, 1-1.7320508075688772j],
      (2.25, 1.1+1.9j, -1.15+1.6j, -2.2, -0.85-1.75j, 1.2-1.55j))
