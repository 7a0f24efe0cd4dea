"""Command-line entry point: verification suites, Hitchin-system solves,
fiber sampling, positivity certification, and classifiers.

Reports are JSON with sorted keys, printed to stdout or written with
--json; numeric output is rounded to 12 significant digits.  The process
exits 0 exactly when every verdict in the report passes.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import certify as ct
from . import hitchin as ht
from . import lie
from . import octonion as oc
from ._vecops import to_float, vcross, vnormalize, vq
from .flags import NullLine, duality_circle, in_thickening, photon_pair_orbit
from .pencils import (FrenetSplitting, beta_base_membership, ein_fiber_point,
                      pho_base_membership, pho_fiber_point,
                      standard_alpha_pencil, standard_beta_pencil)

__all__ = [
    "main",
    "run_certify",
    "run_classify",
    "run_sample_fiber",
    "run_solve",
    "run_verify_algebra",
]


def _sig(x: float) -> float:
    """Round to 12 significant digits for stable report output."""
    return float(f"{float(x):.12g}")


# ---------------------------------------------------------------------------
# verify-algebra: product tables by independent Cayley-Dickson doubling
# ---------------------------------------------------------------------------
def _qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def _qconj(p):
    return (p[0], -p[1], -p[2], -p[3])


def _cd_mul(x, y):
    """Split Cayley-Dickson doubling of the quaternions, multiplier +1:
    (a, b)(c, d) = (ac + conj(d) b, da + b conj(c))."""
    a, b = x
    c, d = y
    qa = _qmul(a, c)
    qb = _qmul(_qconj(d), b)
    ra = _qmul(d, a)
    rb = _qmul(b, _qconj(c))
    return (tuple(u + v for u, v in zip(qa, qb)),
            tuple(u + v for u, v in zip(ra, rb)))


def _cd_units():
    zero_s, one_s = oc.ExactScalar.zero(), oc.ExactScalar.one()
    zero = (zero_s,) * 4
    quat = [tuple(one_s if t == k else zero_s for t in range(4))
            for k in range(4)]
    units = [(quat[k], zero) for k in range(4)]
    ell = (zero, quat[0])
    units.append(ell)
    for k in range(1, 4):
        units.append(_cd_mul(ell, units[k]))
    return units


def _cd_to_coords(x, units):
    flat = list(x[0]) + list(x[1])
    coords = []
    for u in units:
        uf = list(u[0]) + list(u[1])
        slot = next(i for i, v in enumerate(uf) if not v.is_zero())
        # unit slots are +-1, whose inverse is itself
        coords.append(flat[slot] * uf[slot])
    return coords


def run_verify_algebra(exact: bool = False) -> dict:
    """Product-table reproduction by Cayley-Dickson doubling, the double
    cross-product identity on random samples, and the derivation-space
    dimension."""
    units = _cd_units()
    names = ["1", "i", "j", "k", "l", "li", "lj", "lk"]
    good1 = 0
    for r in range(1, 8):
        for c in range(1, 8):
            cd = oc.Oct(_cd_to_coords(_cd_mul(units[r], units[c]), units))
            if oc.mul(oc.Oct.unit(names[r]), oc.Oct.unit(names[c])) == cd:
                good1 += 1
    good2 = 0
    for r in range(7):
        for c in range(7):
            u = oc.ImOct.basis_vector("r", r)
            v = oc.ImOct.basis_vector("r", c)
            cd = _cd_mul(_im_to_cd(u, units), _im_to_cd(v, units))
            expected = oc.ImOct(_cd_to_coords(cd, units)[1:], "m")
            if oc.cross(u, v).convert("m") == expected:
                good2 += 1

    dcp = "pass"
    if exact:
        rng = np.random.default_rng(11)
        for _ in range(25):
            u = oc.ImOct([Fraction(int(a), int(b)) for a, b in
                          zip(rng.integers(-4, 5, 7),
                              rng.integers(1, 4, 7))], "m")
            v = oc.ImOct([Fraction(int(a), int(b)) for a, b in
                          zip(rng.integers(-4, 5, 7),
                              rng.integers(1, 4, 7))], "m")
            lhs = oc.cross(u, oc.cross(u, v))
            rhs = (v * (-oc.qnorm(u))) + (u * oc.qform(u, v))
            if not (lhs - rhs).is_zero():
                dcp = "fail"
                break
    else:
        rng = np.random.default_rng(11)
        for _ in range(500):
            u = rng.standard_normal(7)
            v = rng.standard_normal(7)
            lhs = vcross(u, vcross(u, v))
            rhs = -vq(u, u) * v + vq(u, v) * u
            if float(np.max(np.abs(lhs - rhs))) > 1e-9:
                dcp = "fail"
                break

    dim = lie.g2_dimension()
    report = {
        "table1": f"{good1}/49",
        "table2": f"{good2}/49",
        "dcp": dcp,
        "g2_dim": dim,
        "exact": bool(exact),
    }
    report["pass"] = (good1 == 49 and good2 == 49 and dcp == "pass"
                     and dim == 14)
    return report


def _im_to_cd(x: "oc.ImOct", units):
    zero = oc.ExactScalar.zero()
    cs = [zero] + list(x.convert("m").coords)
    acc = ((zero,) * 4, (zero,) * 4)
    for coef, unit in zip(cs, units):
        if coef.is_zero():
            continue
        acc = (tuple(a + coef * u for a, u in zip(acc[0], unit[0])),
               tuple(a + coef * u for a, u in zip(acc[1], unit[1])))
    return acc


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------
_CSV_HEAD = "# g2-forge grid v1"


def _read_stacked(path: str, blocks: int) -> List[np.ndarray]:
    """Stacked grid CSV: the single-field header followed by blocks * R
    data rows."""
    with open(path, "r", encoding="ascii") as fh:
        head = fh.readline().strip()
        parts = head.split()
        if not head.startswith(_CSV_HEAD) or len(parts) != 6:
            raise ValueError(f"{path}: not a grid CSV")
        rows, cols = int(parts[4]), int(parts[5])
        data = np.loadtxt(fh, delimiter=",", ndmin=2)
    if data.shape != (blocks * rows, cols):
        raise ValueError(f"{path}: expected {blocks} blocks of "
                         f"{rows}x{cols}, found shape {data.shape}")
    return [data[k * rows:(k + 1) * rows] for k in range(blocks)]


def _write_stacked(path: str, fields: Sequence[np.ndarray]) -> None:
    rows, cols = fields[0].shape
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{_CSV_HEAD} {rows} {cols}\n")
        for f in fields:
            for row in np.asarray(f, dtype=float):
                fh.write(",".join(format(x, ".17g") for x in row) + "\n")


def run_solve(preset: str, grid_n: int = 64, tol: float = 1e-10,
              max_iter: int = 200, data_path: Optional[str] = None,
              out_path: Optional[str] = None) -> dict:
    """Newton solve of the cyclic system for a preset or custom data."""
    if preset == "flat-constant":
        data = ht.flat_constant_data(grid_n)
        family = "beta"
    elif preset == "hitchin":
        data = ht.hitchin_constant_data(grid_n)
        family = "alpha"
    elif preset == "custom":
        if data_path is None:
            raise ValueError("--preset custom requires --data")
        a0, b0, d0, kap = _read_stacked(data_path, 4)
        data = ht.HitchinData(a0, b0, d0, kap)
        family = "alpha" if np.all(d0 == 0.0) else "beta"
    else:
        raise ValueError(f"unknown preset {preset!r}")

    result = ht.solve(data, tol=tol, max_iter=max_iter)
    norms = result.state.norms(data)
    mp = ht.check_max_principles(result.state, data, family)
    report = {
        "preset": preset,
        "grid": int(grid_n),
        "iterations": result.iterations,
        "final_residual": _sig(result.final_residual),
        "norms": {k: {"mean": _sig(np.mean(v)), "max": _sig(np.max(v))}
                  for k, v in norms.items()},
        "ratios": {k: _sig(v) for k, v in result.ratios.items()
                   if v is not None},
        "max_principles": {
            "family": family,
            "pass": mp["pass"],
            "ratios": {k: {"sup": _sig(e["sup"]), "bound": _sig(e["bound"]),
                           "pass": e["pass"]}
                       for k, e in mp["ratios"].items()
                       if e["sup"] is not None},
        },
        "pass": bool(mp["pass"]),
    }
    if out_path is not None:
        _write_stacked(out_path, [result.state.v1, result.state.v2])
        report["out"] = out_path
    return report


# ---------------------------------------------------------------------------
# certify
# ---------------------------------------------------------------------------
def run_certify(case: str, samples: Optional[int] = None,
                grid_n: int = 64) -> dict:
    """Positivity certificate for one of the five checks."""
    if case == "beta-immersion":
        cert = ct.beta_positivity_sweep(samples or 100000)
    elif case == "alpha-immersion":
        cert = ct.alpha_positivity_sweep(samples or 100000)
    elif case == "pho-polynomials":
        certs = {name: ct.certify_polynomial_positive(p, name)
                 for name, p in sorted(ct.pho_sturm_polynomials().items())}
        cert = {
            "name": "pho-polynomials",
            "verdict": ("positive"
                        if all(c["verdict"] == "positive"
                               for c in certs.values())
                        else "counterexample"),
            "certificates": certs,
        }
        for name, c in certs.items():
            cert[name] = c["verdict"]
    elif case == "hitchin-span":
        n = samples or 100
        min_minor = math.inf
        ok = True
        for a_t in np.linspace(0.0, ct.SPAN_BOUND, n):
            rep = ct.hitchin_span_report(float(a_t))
            min_minor = min(min_minor, min(rep["minors"]))
            ok = ok and rep["positive"]
        cert = {
            "name": "hitchin-span",
            "verdict": "positive" if ok else "counterexample",
            "min_value": _sig(min_minor),
            "samples": int(n),
            "eigenvalues": [_sig(v) for v in ct.span_top_eigenvalues()],
        }
    elif case == "pho-transversality":
        cert = ct.transversality_certificate(grid_n)
    else:
        raise ValueError(f"unknown case {case!r}")
    if "min_value" in cert:
        cert["min_value"] = _sig(cert["min_value"])
    cert["pass"] = cert["verdict"] == "positive"
    return cert


# ---------------------------------------------------------------------------
# sample-fiber
# ---------------------------------------------------------------------------
def _float_frenet() -> FrenetSplitting:
    fr = FrenetSplitting.model()
    return FrenetSplitting(to_float(fr.l_vec),
                           tuple(to_float(x) for x in fr.t_pair),
                           tuple(to_float(x) for x in fr.n_pair),
                           tuple(to_float(x) for x in fr.b_pair))


def run_sample_fiber(kind: str, resolution: int) -> dict:
    """Point cloud of one fiber of the Einstein-universe or photon-space
    fibration over the model point, with membership checks."""
    if resolution < 4:
        raise ValueError("resolution must be at least 4")
    fr = _float_frenet()
    n1, n2 = (vnormalize(x, 1) for x in fr.n_pair)
    b1, b2 = (vnormalize(x, -1) for x in fr.b_pair)
    ell = fr.l_vec
    points = []
    all_member = True
    if kind == "ein":
        pencil = standard_beta_pencil()
        phis = np.linspace(0.0, np.pi, resolution)
        psis = np.linspace(0.0, 2.0 * np.pi, resolution, endpoint=False)
        chis = np.linspace(0.0, 2.0 * np.pi, resolution, endpoint=False)
        for phi in phis:
            for psi in psis:
                for chi in chis:
                    u = (math.cos(phi) * ell
                         + math.sin(phi) * (math.cos(psi) * n1
                                            + math.sin(psi) * n2))
                    v = math.cos(chi) * b1 + math.sin(chi) * b2
                    line = ein_fiber_point(fr, u, v)
                    member = beta_base_membership(pencil, line)
                    all_member = all_member and member
                    points.append({
                        "rep": [_sig(x) for x in line.rep],
                        "null_residual": _sig(abs(vq(line.rep, line.rep))),
                        "member": member,
                    })
    elif kind == "pho":
        pencil = standard_alpha_pencil()
        psis = np.linspace(0.0, np.pi, resolution, endpoint=False)
        phis = np.linspace(0.0, np.pi, resolution, endpoint=False)
        chis = np.linspace(0.0, 2.0 * np.pi, resolution, endpoint=False)
        for psi in psis:
            u = math.cos(psi) * n1 + math.sin(psi) * n2
            uperp = -math.sin(psi) * n1 + math.cos(psi) * n2
            for phi in phis:
                w2 = math.cos(phi) * ell + math.sin(phi) * uperp
                for chi in chis:
                    y = math.cos(chi) * b1 + math.sin(chi) * b2
                    omega = pho_fiber_point(fr, (u, w2),
                                            lambda _u, yy=y: yy,
                                            pencil=pencil)
                    member = pho_base_membership(pencil, omega)
                    all_member = all_member and member
                    w1v, w2v = omega.basis
                    points.append({
                        "basis": [[_sig(x) for x in w1v],
                                  [_sig(x) for x in w2v]],
                        "cross_residual": _sig(float(np.max(np.abs(
                            vcross(w1v, w2v))))),
                        "member": member,
                    })
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return {
        "kind": kind,
        "resolution": int(resolution),
        "count": len(points),
        "points": points,
        "pass": all_member,
    }


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------
def _parse_complex(text: str) -> Tuple[complex, Optional[Tuple[Fraction, Fraction]]]:
    parts = text.split(",")
    if len(parts) > 2:
        raise ValueError(f"cannot parse complex value {text!r}")
    try:
        exact = tuple(Fraction(p.strip()) for p in parts)
        if len(exact) == 1:
            exact = (exact[0], Fraction(0))
        return complex(float(exact[0]), float(exact[1])), exact
    except ValueError:
        vals = [float(p) for p in parts]
        if len(vals) == 1:
            vals.append(0.0)
        return complex(*vals), None


def run_classify_family(a_text: str, b_text: str) -> dict:
    """Regularity of the two-parameter family element: the rational
    invariant I = 27(|a|^2 |b|^4 + |b|^6) / (|a|^2 + 3 |b|^2)^3, with
    alpha-regular iff I != 1 and beta-regular iff I != 0."""
    a, a_exact = _parse_complex(a_text)
    b, b_exact = _parse_complex(b_text)
    if a == 0 and b == 0:
        raise ValueError("the zero element has no regularity invariant")
    report: Dict[str, object] = {"a": a_text, "b": b_text}
    if a_exact is not None and b_exact is not None:
        na = a_exact[0] ** 2 + a_exact[1] ** 2
        nb = b_exact[0] ** 2 + b_exact[1] ** 2
        inv = 27 * (na * nb ** 2 + nb ** 3) / (na + 3 * nb) ** 3
        report["invariant"] = str(inv)
        report["alpha_regular"] = inv != 1
        report["beta_regular"] = inv != 0
    else:
        na, nb = abs(a) ** 2, abs(b) ** 2
        inv = 27.0 * (na * nb ** 2 + nb ** 3) / (na + 3.0 * nb) ** 3
        report["invariant"] = _sig(inv)
        report["alpha_regular"] = abs(inv - 1.0) > 1e-9
        report["beta_regular"] = abs(inv) > 1e-9
    report["pass"] = True
    return report


def _random_fiber_photon(rng: np.random.Generator, fr, pencil, n1, n2, b1, b2):
    psi, phi = float(rng.uniform(0, np.pi)), float(rng.uniform(0.1, np.pi - 0.1))
    chi = float(rng.uniform(0, 2 * np.pi))
    u = math.cos(psi) * n1 + math.sin(psi) * n2
    uperp = -math.sin(psi) * n1 + math.cos(psi) * n2
    w2 = math.cos(phi) * fr.l_vec + math.sin(phi) * uperp
    y = math.cos(chi) * b1 + math.sin(chi) * b2
    return pho_fiber_point(fr, (u, w2), lambda _u, yy=y: yy, pencil=pencil)


def run_classify_pairs(samples: int = 60, seed: int = 0) -> dict:
    """Relative-position statistics for random photon pairs: orbit index
    histogram and the thickening-vs-orthogonality consistency check
    (membership iff the pair spans at most 3 dimensions, orbit k <= 1)."""
    if samples < 1:
        raise ValueError("samples must be positive")
    rng = np.random.default_rng(seed)
    fr = _float_frenet()
    pencil = standard_alpha_pencil()
    n1, n2 = (vnormalize(x, 1) for x in fr.n_pair)
    b1, b2 = (vnormalize(x, -1) for x in fr.b_pair)
    hist: Dict[str, int] = {}
    consistent = 0
    for t in range(samples):
        om1 = _random_fiber_photon(rng, fr, pencil, n1, n2, b1, b2)
        if t % 3 == 0:
            om2 = om1
        elif t % 3 == 1:
            # a different photon through a null line of om1
            circle = duality_circle(NullLine(om1.basis[0]), 7)
            om2 = circle[int(rng.integers(len(circle)))]
        else:
            om2 = _random_fiber_photon(rng, fr, pencil, n1, n2, b1, b2)
        k, angle = photon_pair_orbit(om1, om2)
        hist[angle] = hist.get(angle, 0) + 1
        if in_thickening(om1, om2) == (k <= 1):
            consistent += 1
    return {
        "samples": int(samples),
        "orbits": hist,
        "consistent": consistent,
        "pass": consistent == samples,
    }


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------
def _positive_int(minimum: int):
    def parse(text: str) -> int:
        val = int(text)
        if val < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}")
        return val
    return parse


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g2-forge",
        description="verification, solves, sampling, and certification "
                    "for the split-octonion geometry toolkit")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify-algebra",
                       help="reproduce product tables and identity checks")
    p.add_argument("--exact", action="store_true",
                   help="run the identity suite in exact arithmetic")
    p.add_argument("--json", metavar="PATH", help="write the report here")

    p = sub.add_parser("solve", help="Newton solve of the cyclic system")
    p.add_argument("--preset", required=True,
                   choices=["flat-constant", "hitchin", "custom"])
    p.add_argument("--grid", type=_positive_int(8), default=64,
                   metavar="N", help="grid size (at least 8)")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=200)
    p.add_argument("--data", metavar="PATH",
                   help="custom preset: stacked CSV with blocks "
                        "alpha0sq, beta0sq, delta0sq, kappa")
    p.add_argument("--out", metavar="PATH",
                   help="write the solved gauge fields v1, v2 as a "
                        "stacked CSV")
    p.add_argument("--json", metavar="PATH")

    p = sub.add_parser("certify", help="positivity certificates")
    p.add_argument("--case", required=True,
                   choices=["beta-immersion", "alpha-immersion",
                            "pho-polynomials", "hitchin-span",
                            "pho-transversality"])
    p.add_argument("--samples", type=_positive_int(1), default=None)
    p.add_argument("--grid", type=_positive_int(64), default=64,
                   help="grid size for the transversality sweep")
    p.add_argument("--json", metavar="PATH")

    p = sub.add_parser("sample-fiber", help="export fiber point clouds")
    p.add_argument("--kind", required=True, choices=["ein", "pho"])
    p.add_argument("--resolution", type=_positive_int(4), required=True,
                   help="samples per angle (at least 4)")
    p.add_argument("--json", metavar="PATH")

    p = sub.add_parser("classify", help="orbit and regularity classifiers")
    p.add_argument("--kind", required=True, choices=["family", "pairs"])
    p.add_argument("--a", metavar="RE[,IM]",
                   help="family: first coefficient")
    p.add_argument("--b", metavar="RE[,IM]",
                   help="family: second coefficient")
    p.add_argument("--samples", type=_positive_int(1), default=60,
                   help="pairs: number of random pairs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", metavar="PATH")
    return parser


def _emit(report: dict, json_path: Optional[str]) -> int:
    text = json.dumps(report, sort_keys=True, indent=2)
    if json_path is not None:
        with open(json_path, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if report.get("pass", False) else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.verb == "verify-algebra":
            report = run_verify_algebra(exact=args.exact)
        elif args.verb == "solve":
            report = run_solve(args.preset, grid_n=args.grid, tol=args.tol,
                               max_iter=args.max_iter, data_path=args.data,
                               out_path=args.out)
        elif args.verb == "certify":
            report = run_certify(args.case, samples=args.samples,
                                 grid_n=args.grid)
        elif args.verb == "sample-fiber":
            report = run_sample_fiber(args.kind, args.resolution)
        else:
            if args.kind == "family":
                if args.a is None or args.b is None:
                    raise ValueError("--kind family requires --a and --b")
                report = run_classify_family(args.a, args.b)
            else:
                report = run_classify_pairs(args.samples, args.seed)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return _emit(report, args.json)


if __name__ == "__main__":
    sys.exit(main())
