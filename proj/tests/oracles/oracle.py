"""Independent high-precision reference values.

Everything here is built from the raw definitions (Boltzmann weights in the
product basis, explicit 4x4 matrices, rotation to the symmetric/antisymmetric
basis) with mpmath at 50 digits, sharing no code with the C++ library.

    python3 oracle.py              # print the frozen constants
    python3 oracle.py FIXTURE...   # check fixture CSV rows against the oracle
"""

import sys

import mpmath as mp

mp.mp.dps = 50


def thermal_diag(x):
    pe = 1 / (1 + mp.exp(x))
    pg = 1 - pe
    return [pg * pg, pg * pe, pg * pe, pe * pe]


def z_ratio(x):
    w = [mp.mpf(1), mp.exp(-x), mp.exp(-2 * x)]
    return (w[0] + w[1] + w[2]) / (w[0] + 2 * w[1] + w[2])


def steady_matrix(x, r):
    """Steady state in the product basis, assembled from projectors."""
    s = 1 / mp.sqrt(2)
    kets = {
        "0": mp.matrix([1, 0, 0, 0]),
        "+": mp.matrix([0, s, s, 0]),
        "-": mp.matrix([0, s, -s, 0]),
        "1": mp.matrix([0, 0, 0, 1]),
    }
    w = [mp.mpf(1), mp.exp(-x), mp.exp(-2 * x)]
    zp = sum(w)
    weights = {"0": r * w[0] / zp, "+": r * w[1] / zp, "1": r * w[2] / zp, "-": 1 - r}
    rho = mp.zeros(4, 4)
    for k, p in weights.items():
        rho += p * (kets[k] * kets[k].T)
    return rho


def energy(rho):
    return rho[1, 1] + rho[2, 2] + 2 * rho[3, 3]


def entropy(rho):
    evals = mp.eigsy(rho)[0]
    return -mp.fsum(v * mp.log(v) for v in evals if v > mp.mpf(10) ** -40)


def thermal_entropy(x):
    pe = 1 / (1 + mp.exp(x))
    return -2 * (pe * mp.log(pe) + (1 - pe) * mp.log(1 - pe))


def thermal_energy(x):
    return 2 / (1 + mp.exp(x))


def local_beta(x, r):
    rho = steady_matrix(x, r)
    excited = rho[2, 2] + rho[3, 3]
    ground = rho[0, 0] + rho[1, 1]
    return mp.log(ground / excited)


def coherence(x, r):
    rho = steady_matrix(x, r)
    return rho[1, 2] + rho[2, 1]


def entropy_r_curve(x, r):
    return entropy(steady_matrix(x, r)) if 0 < r < 1 else _edge_entropy(x, r)


def _edge_entropy(x, r):
    w = [mp.mpf(1), mp.exp(-x), mp.exp(-2 * x)]
    zp = sum(w)
    if r == 0:
        return mp.mpf(0)
    return -mp.fsum(v / zp * mp.log(v / zp) for v in w)


def r_critical(x):
    return mp.findroot(lambda r: mp.diff(lambda q: entropy_r_curve(x, q), r), 0.6)


def r_crossing(x):
    target = thermal_entropy(x)
    return mp.findroot(lambda r: entropy_r_curve(x, r) - target, (mp.mpf("1e-6"), r_critical(x)),
                       solver="anderson")


def constants():
    out = {}
    out["thermal_2"] = thermal_diag(2)
    out["z_plus_2"] = 1 + mp.exp(-2) + mp.exp(-4)
    out["z_2"] = z_ratio(2)
    rho = steady_matrix(2, 1)
    out["e_ss_2_1"] = energy(rho)
    out["e_th_2"] = thermal_energy(2)
    out["s_ss_2_1"] = entropy(rho)
    out["s_th_2"] = thermal_entropy(2)
    out["c_2_1"] = coherence(2, 1)
    out["e_ratio_10_1"] = energy(steady_matrix(10, 1)) / thermal_energy(10)
    out["e_ss_10_34"] = energy(steady_matrix(10, mp.mpf(3) / 4))
    out["e_th_10"] = thermal_energy(10)
    out["s_ratio_8_1"] = entropy(steady_matrix(8, 1)) / thermal_entropy(8)
    out["s_ss_12_34"] = entropy(steady_matrix(12, mp.mpf(3) / 4))
    out["s_th_12"] = thermal_entropy(12)
    peak_x = mp.findroot(
        lambda x: mp.diff(lambda y: energy(steady_matrix(y, 1)) / thermal_energy(y), x), -1.0)
    out["peak_x"] = peak_x
    out["peak_ratio"] = energy(steady_matrix(peak_x, 1)) / thermal_energy(peak_x)
    out["loc_2_1"] = local_beta(2, 1)
    out["loc_ratio_001"] = local_beta(mp.mpf("0.01"), 1) / mp.mpf("0.01")
    for x in (0.5, 1, 2, 3):
        out[f"r_cr_{x}"] = r_critical(mp.mpf(x))
        out[f"z_{x}"] = z_ratio(mp.mpf(x))
    out["r_star_2"] = r_crossing(mp.mpf(2))
    return out


def check_fixture(path, tol=1e-9):
    """Recompute every row of a sweep fixture and compare numerically."""
    lines = [ln.strip() for ln in open(path) if ln.strip()]
    params = dict(ln[2:].split("=", 1) for ln in lines if ln.startswith("# ") and "=" in ln
                  and not ln.startswith("# reference"))
    header, *rows = [ln for ln in lines if not ln.startswith("#")]
    cols = header.split(",")
    worst = 0
    for row in rows:
        v = dict(zip(cols, row.split(",")))
        if cols[0] == "omega_beta0":
            x, r = mp.mpf(params["omega_beta_bath"]), z_ratio(mp.mpf(v["omega_beta0"]))
        elif cols[0] == "omega_beta_bath":
            x = mp.mpf(v["omega_beta_bath"])
            r = mp.mpf(params["r"]) if "r" in params else z_ratio(mp.mpf(params["omega_beta0"]))
        else:
            x, r = mp.mpf(params["omega_beta_bath"]), mp.mpf(v["r_grid"])
        rho = steady_matrix(x, r)
        expected = {
            "r": r,
            "c": coherence(x, r),
            "E_ss": energy(rho),
            "E_th": thermal_energy(x),
            "S_ss": entropy(rho),
            "S_th": thermal_entropy(x),
        }
        for key, ref in expected.items():
            got = mp.mpf(v[key])
            worst = max(worst, abs(got - ref) / max(1, abs(ref)))
    if worst > tol:
        raise SystemExit(f"{path}: deviation {mp.nstr(worst, 3)} exceeds {tol}")
    print(f"{path}: {len(rows)} rows, max deviation {mp.nstr(worst, 3)}")


if __name__ == "__main__":
    if len(sys.argv) > 1:
        for p in sys.argv[1:]:
            check_fixture(p)
    else:
        for k, v in constants().items():
            vals = v if isinstance(v, list) else [v]
            print(k, " ".join(mp.nstr(a, 15) for a in vals))
