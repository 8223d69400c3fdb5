"""Scratch: assemble the final corpus, verify everything, write JSON files."""
import cmath
import json
import math
import random
import simulroots as sr
from simulroots.trace import RunConfig, run_iteration

ninf = sr.NormParameter.of(math.inf)
rng = random.Random(3)

WINDOWS = {"weierstrass": (1.7, 2.3), "ehrlich": (2.7, 3.3),
           "ehrlich-derivative": (2.7, 3.3), "nourein": (3.7, 4.3)}


def cj(z):
    return [z.real, z.imag]


def plateau_for(f, z0, method, tol=1e-13):
    tr = run_iteration(f, z0, RunConfig(method=method, p=math.inf, oracle=True, tol=tol, max_iters=60))
    return (tr.empirical_order.plateau if tr.empirical_order else None), tr


def scan_point(f, roots, e_target, need, tries=150, seed=1):
    """need: list of (method, lo, hi) plateau requirements; all certs strict for methods."""
    r = random.Random(seed)
    for t in range(tries):
        dirs = [complex(r.uniform(-1, 1), r.uniform(-1, 1)) for _ in range(f.degree)]
        dirs = [d / abs(d) for d in dirs]
        lo_s, hi_s = 1e-4, 1.2
        for _ in range(42):
            s = 0.5 * (lo_s + hi_s)
            z0 = tuple(rt + s * d for rt, d in zip(roots, dirs))
            try:
                e0 = sr.quality_measure(f, z0, ninf)
            except Exception:
                hi_s = s
                continue
            (lo_s, hi_s) = (s, hi_s) if e0 < e_target else (lo_s, s)
        z0 = tuple(rt + lo_s * d for rt, d in zip(roots, dirs))
        good = True
        for method, plo, phi in need:
            if not sr.certify(method, f, z0, ninf).strict:
                good = False
                break
            plat, tr = plateau_for(f, z0, method)
            if plat is None or not (plo <= plat <= phi):
                good = False
                break
        if good:
            return z0
    return None


instances = []

# ---- 1. quadratic-real -------------------------------------------------
f = sr.MonicPolynomial((-1, 0))
instances.append({
    "name": "quadratic-real",
    "notes": "x^2 - 1; order suite; 'uncertified' has E = 0.75",
    "polynomial": {"degree": 2, "coeffs": [cj(-1+0j), cj(0j)]},
    "roots": [cj(1+0j), cj(-1+0j)],
    "initial_points": {
        "default": [cj(1.2+0j), cj(-0.8+0j)],
        "order": [cj(1.31+0j), cj(-0.71+0j)],
        "order-nourein": [cj(1.31+0j), cj(-0.71+0j)],
        "near": [cj(1.05+0j), cj(-0.95+0j)],
        "uncertified": [cj(2+0j), cj(0j)],
    },
})

# ---- 2. quadratic-imag -------------------------------------------------
instances.append({
    "name": "quadratic-imag",
    "notes": "x^2 + 1; the quadratic-real geometry rotated by i; order suite",
    "polynomial": {"degree": 2, "coeffs": [cj(1+0j), cj(0j)]},
    "roots": [cj(1j), cj(-1j)],
    "initial_points": {
        "default": [cj(1.2j), cj(-0.8j)],
        "order": [cj(1.31j), cj(-0.71j)],
        "order-nourein": [cj(1.31j), cj(-0.71j)],
    },
})

# ---- 3. cubic-integers -------------------------------------------------
f3 = sr.MonicPolynomial.from_roots([1, 2, 3])
print("cubic coeffs:", [c.real for c in f3.coefficients])
z3_nou = (0.9697720274964248-0.19488359607494707j,
          2.025187454886955-0.19559892243337546j,
          3.1808297753326653-0.0787015799963242j)
instances.append({
    "name": "cubic-integers",
    "notes": "(x-1)(x-2)(x-3); order suite",
    "polynomial": {"degree": 3, "coeffs": [cj(-6+0j), cj(11+0j), cj(-6+0j)]},
    "roots": [cj(1+0j), cj(2+0j), cj(3+0j)],
    "initial_points": {
        "default": [cj(1.08+0j), cj(1.9+0j), cj(3.11+0j)],
        "order": [cj(1.08+0j), cj(1.9+0j), cj(3.11+0j)],
        "order-nourein": [cj(z) for z in z3_nou],
        "weierstrass-oracle": [cj(1.1+0j), cj(1.9+0j), cj(3.2+0j)],
    },
})

# ---- 4. cubic-unity ----------------------------------------------------
w3 = cmath.exp(2j * cmath.pi / 3)
z4_nou = (1.3446360137518991-0.37594798525290263j,
          -0.7535897765925781+1.3085218385703499j,
          -0.864755582016778-1.2224861098631274j)
instances.append({
    "name": "cubic-unity",
    "notes": "x^3 - 1; order suite",
    "polynomial": {"degree": 3, "coeffs": [cj(-1+0j), cj(0j), cj(0j)]},
    "roots": [cj(1+0j), cj(w3), cj(w3.conjugate())],
    "initial_points": {
        "default": [cj(1.15+0j), cj(-0.62+0.95j), cj(-0.4-0.8j)],
        "order": [cj(1.15+0j), cj(-0.62+0.95j), cj(-0.4-0.8j)],
        "order-nourein": [cj(z) for z in z4_nou],
    },
})

# ---- 5. quartic-cross x^4+16 -------------------------------------------
f5 = sr.MonicPolynomial((-16, 0, 0, 0))
cross = [2+0j, 2j, -2+0j, -2j]
z5_nou = (2.2111243275038635-0.4627383214946695j,
          0.28790021920157627+2.419301442434136j,
          -2.4299125944708915+0.2718002887396727j,
          -0.2778287280730044-2.426041586821051j)
z5_we = scan_point(f5, cross, 0.10,
                   [(sr.Method.WEIERSTRASS, 1.7, 2.3), (sr.Method.EHRLICH, 2.7, 3.3)],
                   seed=5)
print("quartic-cross W/E point:", z5_we)
instances.append({
    "name": "quartic-cross",
    "notes": "x^4 - 16, roots on the axes at modulus 2; order suite",
    "polynomial": {"degree": 4, "coeffs": [cj(-16+0j), cj(0j), cj(0j), cj(0j)]},
    "roots": [cj(z) for z in cross],
    "initial_points": {
        "default": [cj(z) for z in z5_we],
        "order": [cj(z) for z in z5_we],
        "order-nourein": [cj(z) for z in z5_nou],
    },
})

# ---- 6. quartic-integers ------------------------------------------------
f6 = sr.MonicPolynomial.from_roots([1, 2, 3, 4])
print("quartic coeffs:", [c.real for c in f6.coefficients])
instances.append({
    "name": "quartic-integers",
    "notes": "(x-1)(x-2)(x-3)(x-4); localization and bound checks",
    "polynomial": {"degree": 4, "coeffs": [cj(24+0j), cj(-50+0j), cj(35+0j), cj(-10+0j)]},
    "roots": [cj(1+0j), cj(2+0j), cj(3+0j), cj(4+0j)],
    "initial_points": {
        "default": [cj(1.02+0j), cj(2.02+0j), cj(3.02+0j), cj(4.02+0j)],
    },
})

# ---- 7. quartic-chebyshev ----------------------------------------------
cheb = [math.cos(math.pi * (2 * k - 1) / 8) for k in (1, 2, 3, 4)]
instances.append({
    "name": "quartic-chebyshev",
    "notes": "monic Chebyshev T4/8 = x^4 - x^2 + 1/8",
    "polynomial": {"degree": 4, "coeffs": [cj(0.125+0j), cj(0j), cj(-1+0j), cj(0j)]},
    "roots": [cj(complex(r)) for r in cheb],
    "initial_points": {
        "default": [cj(complex(r + s)) for r, s in zip(cheb, (0.02, -0.015, 0.018, -0.02))],
    },
})

# ---- 8. quintic-symmetric ----------------------------------------------
f8_ = sr.MonicPolynomial.from_roots([-2, -1, 0, 1, 2])
print("quintic coeffs:", [c.real for c in f8_.coefficients])
instances.append({
    "name": "quintic-symmetric",
    "notes": "x(x^2-1)(x^2-4)",
    "polynomial": {"degree": 5, "coeffs": [cj(0j), cj(4+0j), cj(0j), cj(-5+0j), cj(0j)]},
    "roots": [cj(complex(r)) for r in (-2, -1, 0, 1, 2)],
    "initial_points": {
        "default": [cj(-2.06+0j), cj(-0.93+0j), cj(0.05+0j), cj(0.94+0j), cj(2.07+0j)],
    },
})

# ---- 9. sextic-circle ---------------------------------------------------
r6 = [2 * cmath.exp(2j * cmath.pi * k / 6) for k in range(6)]
z6 = tuple(r * 1.04 * cmath.exp(0.015j) for r in r6)
instances.append({
    "name": "sextic-circle",
    "notes": "x^6 - 64, roots on the circle of radius 2",
    "polynomial": {"degree": 6, "coeffs": [cj(-64+0j)] + [cj(0j)] * 5},
    "roots": [cj(r) for r in r6],
    "initial_points": {"default": [cj(z) for z in z6]},
})

# ---- 10. octic-integers --------------------------------------------------
f10 = sr.MonicPolynomial.from_roots(range(1, 9))
z10 = tuple(k + 0.02 * (1 if k % 2 else -1) + 0.012j * (1 if k in (2, 3, 6) else -1)
            for k in range(1, 9))
instances.append({
    "name": "octic-integers",
    "notes": "(x-1)...(x-8); large coefficient scale stresses stopping rules",
    "polynomial": {"degree": 8, "coeffs": [cj(c) for c in f10.coefficients]},
    "roots": [cj(complex(k)) for k in range(1, 9)],
    "initial_points": {"default": [cj(z) for z in z10]},
})

# ---- 11. duodecic-unity --------------------------------------------------
r12 = [cmath.exp(2j * cmath.pi * k / 12) for k in range(12)]
z12 = tuple(r * (1.008 * cmath.exp(0.006j)) for r in r12)
instances.append({
    "name": "duodecic-unity",
    "notes": "x^12 - 1",
    "polynomial": {"degree": 12, "coeffs": [cj(-1+0j)] + [cj(0j)] * 11},
    "roots": [cj(r) for r in r12],
    "initial_points": {"default": [cj(z) for z in z12]},
})

# ---- 12-13. double roots --------------------------------------------------
instances.append({
    "name": "double-root-quadratic",
    "notes": "(x-1)^2; simplicity verdict must stay False",
    "polynomial": {"degree": 2, "coeffs": [cj(1+0j), cj(-2+0j)]},
    "roots": [cj(1+0j), cj(1+0j)],
    "initial_points": {"default": [cj(1.3+0j), cj(0.7+0j)]},
})
instances.append({
    "name": "double-root-quartic",
    "notes": "(x^2-1)^2; simplicity verdict must stay False",
    "polynomial": {"degree": 4, "coeffs": [cj(1+0j), cj(0j), cj(-2+0j), cj(0j)]},
    "roots": [cj(1+0j), cj(1+0j), cj(-1+0j), cj(-1+0j)],
    "initial_points": {"default": [cj(1.2+0j), cj(0.8+0j), cj(-0.8+0j), cj(-1.2+0j)]},
})

# ---- 14. clustered --------------------------------------------------------
fcl = sr.MonicPolynomial.from_roots([1, 1.001, 3])
instances.append({
    "name": "clustered-cubic",
    "notes": "roots {1, 1.001, 3}: near-double pair defeats certification",
    "polynomial": {"degree": 3, "coeffs": [cj(c) for c in fcl.coefficients]},
    "roots": [cj(1+0j), cj(1.001+0j), cj(3+0j)],
    "initial_points": {"default": [cj(1.05+0j), cj(0.96+0j), cj(3.05+0j)]},
})

# ---- 15. complex coefficients ---------------------------------------------
instances.append({
    "name": "complex-coefficients",
    "notes": "x^3 + (2+i)x - 5; no closed-form roots, oracle exercises",
    "polynomial": {"degree": 3, "coeffs": [cj(-5+0j), cj(2+1j), cj(0j)]},
    "roots": None,
    "initial_points": {"default": [cj(1.5+0j), cj(-1+1.5j), cj(-0.5-1.5j)]},
})


# ---- 16. octic-unity -------------------------------------------------------
import random as _random
_r17 = _random.Random(17)
f16 = sr.MonicPolynomial((-1,) + (0,) * 7)
r8 = [cmath.exp(2j * cmath.pi * k / 8) for k in range(8)]
_dirs8 = [complex(_r17.uniform(-1, 1), _r17.uniform(-1, 1)) for _ in range(8)]
_dirs8 = [d / abs(d) for d in _dirs8]
_lo, _hi = 1e-4, 0.5
for _ in range(40):
    _s = 0.5 * (_lo + _hi)
    _z = tuple(rt + _s * d for rt, d in zip(r8, _dirs8))
    _e0 = sr.quality_measure(f16, _z, ninf)
    (_lo, _hi) = (_s, _hi) if _e0 < 0.05 else (_lo, _s)
z16 = tuple(rt + _lo * d for rt, d in zip(r8, _dirs8))
instances.append({
    "name": "octic-unity",
    "notes": "x^8 - 1; well-conditioned octic for order measurement",
    "polynomial": {"degree": 8, "coeffs": [cj(-1+0j)] + [cj(0j)] * 7},
    "roots": [cj(r) for r in r8],
    "initial_points": {
        "default": [cj(z) for z in z16],
        "order": [cj(z) for z in z16],
    },
})

# ---------------------------------------------------------------- verify --
ORDER_SUITE = ["quadratic-real", "quadratic-imag", "cubic-integers", "cubic-unity", "quartic-cross"]

print("\n=== verification ===")
ok_all = True
for inst in instances:
    f = sr.MonicPolynomial(tuple(complex(a, b) for a, b in inst["polynomial"]["coeffs"]))
    points = {k: tuple(complex(a, b) for a, b in v) for k, v in inst["initial_points"].items()}
    name = inst["name"]
    if name in ORDER_SUITE or name == "octic-unity":
        methods = (sr.Method.WEIERSTRASS, sr.Method.EHRLICH, sr.Method.EHRLICH_DERIVATIVE, sr.Method.NOUREIN)
        if name == "octic-unity":
            methods = methods[:3]
        for method in methods:
            label = "order-nourein" if method is sr.Method.NOUREIN else "order"
            z0 = points[label]
            cert = sr.certify(method, f, z0, ninf)
            plat, tr = plateau_for(f, z0, method)
            lo, hi = WINDOWS[method.value]
            good = cert.strict and plat is not None and lo <= plat <= hi
            ok_all &= good
            print(f"  {name:18s} {method.value:18s} strict={cert.strict} plateau={plat if plat is None else round(plat,3)} {'OK' if good else '** BAD **'}")
            # bounds validity at every recorded k (absolute saturation slack)
            if method in (sr.Method.EHRLICH, sr.Method.NOUREIN):
                atol = 1e-13 * f.coefficient_scale()
                for rep in tr.bound_reports():
                    if rep.true_error is None:
                        continue
                    for b in (rep.a_posteriori, rep.a_priori):
                        if b is not None and not (b + atol >= rep.true_error):
                            print(f"      ** BOUND VIOLATION k={rep.k}")
                            ok_all = False
    if name.startswith("double-root") or name == "clustered-cubic":
        for label, z0 in points.items():
            sat = sr.certifies_simple_zeros(f, z0, ninf)
            ok_all &= not sat
            print(f"  {name:18s} verdict at {label} = {sat} (want False)")
        continue
    # localization at every certified point
    for label, z0 in points.items():
        cert = sr.certify_localization(f, z0, ninf)
        if not cert.satisfied:
            continue
        from simulroots.localize import pairwise_disjoint, match_roots_to_disks
        disks = sr.inclusion_disks(f, z0, ninf)
        ref = sr.reference_roots(f)
        disjoint, gap = pairwise_disjoint(disks)
        try:
            match_roots_to_disks(disks, ref.as_complex)
            matched = True
        except Exception as e:
            matched = False
            print("      match fail:", e)
        ok_all &= disjoint and matched
        print(f"  {name:18s} localize[{label}] disjoint={disjoint} matched={matched}")

print("\nALL OK" if ok_all else "\n*** FAILURES ***")

if ok_all:
    import pathlib
    outdir = pathlib.Path("src/simulroots/corpus")
    outdir.mkdir(parents=True, exist_ok=True)
    for i, inst in enumerate(instances):
        path = outdir / f"{i+1:02d}-{inst['name']}.json"
        path.write_text(json.dumps(inst, indent=2) + "\n")
    print(f"wrote {len(instances)} instances to {outdir}")
