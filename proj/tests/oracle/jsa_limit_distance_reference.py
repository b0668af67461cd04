#!/usr/bin/env python3
"""Independent numpy evaluation of the numbers frozen into the C++ tests:
the L2 distances between the limiting joint-amplitude forms and the exact
linear-phase-matching amplitude, the Schmidt numbers of the pump-duration
triplet, and the closed-form asymptote arithmetic. Independent of the C++
implementation (pure numpy, own quadrature and SVD).

Run from the repository root:  python3 tests/oracle/jsa_limit_distance_reference.py
Expected output (point A scales from sellmeier_reference.py):

  cw      tau_p=14 tgvs'  L2(limit, exact) ~ 0.058   (frozen bound 0.07)
  ultra   tau_p=0.03 ps   L2(limit, exact) ~ 0.0033  (frozen bound 0.01)
  interm  tau_p=1.1 ps    L2(limit, exact) ~ 0.139   (frozen bound 0.155)
  kappa(14 tgvs') ~ 25.74, kappa(0.04 tgvs') ~ 1.040, kappa(0.22 tgvm) ~ 3.98
"""
import numpy as np

# point A scales, from sellmeier_reference.py
TAU_GVM = 0.26942e-12
TAU_GVS_P = 25.2209e-12
TAU_GVS = TAU_GVS_P - TAU_GVM
ETA = TAU_GVM / TAU_GVS_P
G = 0.01


def sinc(x):
    return np.sinc(x / np.pi)


def axes(span_s, span_i, ns, ni):
    ws = (np.arange(ns) - ns // 2) * (2 * span_s / ns)
    wi = (np.arange(ni) - ni // 2) * (2 * span_i / ni)
    return ws, wi


def spans(tau_p, lobes):
    dop = 1.0 / tau_p
    o_gvs = 1.0 / TAU_GVS
    return (lobes * np.pi * o_gvs + 4 * dop / (1 - ETA),
            lobes * np.pi * o_gvs + 4 * dop * ETA / (1 - ETA))


def psi_exact(tau_p, ws, wi):
    s = ws[:, None] * TAU_GVM + wi[None, :] * TAU_GVS_P
    pump = tau_p * np.exp(-0.5 * (ws[:, None] + wi[None, :]) ** 2 * tau_p ** 2)
    return (G / np.sqrt(2 * np.pi)) * pump * sinc(s) * np.exp(1j * s)


def psi_cw(tau_p, ws, wi):
    pump = tau_p * np.exp(-0.5 * (ws[:, None] + wi[None, :]) ** 2 * tau_p ** 2)
    x = ws[:, None] / (1.0 / TAU_GVS) + 0 * wi[None, :]
    return (G / np.sqrt(2 * np.pi)) * pump * sinc(x) * np.exp(-1j * x)


def psi_ultra(tau_p, ws, wi):
    s = ws[:, None] * TAU_GVM + wi[None, :] * TAU_GVS_P
    pump = tau_p * np.exp(-0.5 * (ws[:, None] * (1 - ETA)) ** 2 * tau_p ** 2) + 0 * wi[None, :]
    return (G / np.sqrt(2 * np.pi)) * pump * sinc(s) * np.exp(1j * s)


def psi_interm(tau_p, ws, wi):
    fs = tau_p * np.exp(-0.5 * ws ** 2 * tau_p ** 2) * np.exp(1j * ws * TAU_GVM)
    fi = sinc(wi * TAU_GVS) * np.exp(1j * wi * TAU_GVS)
    return (G / np.sqrt(2 * np.pi)) * fs[:, None] * fi[None, :]


def rel_l2(a, b):
    return np.sqrt(np.sum(np.abs(a - b) ** 2) / np.sum(np.abs(b) ** 2))


def kappa(tau_p, n, lobes):
    ss, si = spans(tau_p, lobes)
    ws, wi = axes(ss, si, n, n)
    psi = psi_exact(tau_p, ws, wi)
    trap_s = np.full(n, 2 * ss / n); trap_s[0] = trap_s[-1] = ss / n
    trap_i = np.full(n, 2 * si / n); trap_i[0] = trap_i[-1] = si / n
    m = np.sqrt(trap_s)[:, None] * psi * np.sqrt(trap_i)[None, :]
    lam = np.linalg.svd(m, compute_uv=False) ** 2
    lam /= lam.sum()
    return 1.0 / np.sum(lam ** 2)


if __name__ == "__main__":
    for label, tau_p, n, lobes, limit in (
        ("cw 14 tgvs'", 14 * TAU_GVS_P, 1024, 6.0, psi_cw),
        ("ultra 0.03 ps", 0.03e-12, 1024, 4.0, psi_ultra),
        ("interm 1.1 ps", 1.1e-12, 512, 4.0, psi_interm),
    ):
        ss, si = spans(tau_p, lobes)
        ws, wi = axes(ss, si, n, n)
        print("%-14s L2(limit, exact) = %.4f"
              % (label, rel_l2(limit(tau_p, ws, wi), psi_exact(tau_p, ws, wi))))
    print("kappa(14 tgvs')   = %.4f" % kappa(14 * TAU_GVS_P, 512, 6.0))
    print("kappa(0.04 tgvs') = %.4f" % kappa(0.04 * TAU_GVS_P, 512, 4.0))
    print("kappa(0.22 tgvm)  = %.4f" % kappa(0.22 * TAU_GVM, 512, 4.0))
    print("asym cw at 14 tgvs' = %.4f (= 1.5 sqrt(pi/2) * 14)"
          % (1.5 * np.sqrt(np.pi / 2) * 14))
