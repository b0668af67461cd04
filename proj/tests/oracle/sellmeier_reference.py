#!/usr/bin/env python3
"""Reference evaluation of the shipped Sellmeier data, independent of the C++
implementation. Regenerates the golden numbers pinned in
test_material_dispersion.cpp and test_qpm.cpp.

Run from the repository root:  python3 tests/oracle/sellmeier_reference.py
"""
import json
import math
import os

C = 2.99792458e8  # m/s
HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "..", "data", "materials")


def load(name):
    with open(os.path.join(DATA, name)) as f:
        return json.load(f)


def index(mat, lam_um):
    c = mat["coefficients"]
    l2 = lam_um * lam_um
    if mat["form"] == "rational_poles":
        n2 = c[0]
        for j in range(1, len(c) - 1, 2):
            n2 += c[j] / (l2 - c[j + 1])
    elif mat["form"] == "lambda2_terms":
        n2 = 1.0
        for j in range(0, len(c) - 1, 2):
            n2 += c[j] * l2 / (l2 - c[j + 1])
    else:
        raise ValueError(mat["form"])
    return math.sqrt(n2)


def kprime(mat, lam_um):
    om = 2 * math.pi * C / (lam_um * 1e-6)

    def k(om_):
        lam = 2 * math.pi * C / om_ * 1e6
        return index(mat, lam) * om_ / C

    h = 1e-6 * om
    d1 = (k(om + h) - k(om - h)) / (2 * h)
    d2 = (k(om + h / 2) - k(om - h / 2)) / h
    return (4 * d2 - d1) / 3


def solve_qpm(mat, lam_p_um, Lambda_um, lam_lo, lam_hi):
    om_p = 2 * math.pi * C / (lam_p_um * 1e-6)
    k_p = index(mat, lam_p_um) * om_p / C
    kg = 2 * math.pi / (Lambda_um * 1e-6)

    def d0(lam_s):
        om_s = 2 * math.pi * C / (lam_s * 1e-6)
        lam_i = 2 * math.pi * C / (om_p - om_s) * 1e6
        return index(mat, lam_s) * om_s / C - index(mat, lam_i) * (om_p - om_s) / C - k_p + kg

    a, b = lam_lo, lam_hi
    fa = d0(a)
    for _ in range(200):
        m = 0.5 * (a + b)
        fm = d0(m)
        if fa * fm <= 0:
            b = m
        else:
            a, fa = m, fm
    return 0.5 * (a + b)


if __name__ == "__main__":
    ktp = load("ktp_z.json")
    lnb = load("linbo3_e.json")
    print("n KTP_z(821 nm)    = %.9f" % index(ktp, 0.821))
    print("n KTP_z(1141 nm)   = %.9f" % index(ktp, 1.141))
    print("n KTP_z(2932 nm)   = %.9f" % index(ktp, 2.932))
    print("n LiNbO3_e(527.5)  = %.9f" % index(lnb, 0.5275))
    print("n LiNbO3_e(1055)   = %.9f" % index(lnb, 1.055))

    lam_s = solve_qpm(ktp, 0.821, 0.800, 1.07, 2.0)
    om_p = 2 * math.pi * C / 0.821e-6
    lam_i = 2 * math.pi * C / (om_p - 2 * math.pi * C / (lam_s * 1e-6)) * 1e6
    kp, ks, ki = kprime(ktp, 0.821), kprime(ktp, lam_s), kprime(ktp, lam_i)
    lc = 4e-3
    print("point A: lam_s = %.6f um, lam_i = %.6f um" % (lam_s, lam_i))
    print("  tau_gvm  = %.6f ps" % (0.5 * lc * (kp - ks) * 1e12))
    print("  tau_gvs' = %.6f ps" % (0.5 * lc * (kp + ki) * 1e12))
    print("  eta      = %.6f" % ((kp - ks) / (kp + ki)))
