#!/usr/bin/env python3
"""High-precision reference values for the closed-form quantities.

Evaluated with mpmath at 50 significant digits, independently of the C++
code path. The printed values are frozen into the unit tests.
"""
import mpmath as mp

mp.mp.dps = 50
C = mp.mpf("2.99792458e10")


def transform(eps, mu, beta):
    n = mp.sqrt(eps * mu)
    f = (n + beta) / (1 + n * beta)
    return mp.sqrt(eps / mu) * f, mp.sqrt(mu / eps) * f


def cross(a, b):
    return [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def matvec(m, v):
    return [dot(row, v) for row in m]


def transpose(m):
    return [[m[j][i] for j in range(3)] for i in range(3)]


def lorentz(E, B, beta):
    g = 1 / mp.sqrt(1 - beta * beta)
    z = [0, 0, 1]
    bz = [0, 0, beta]
    ep = [g * (E[i] + cross(bz, B)[i]) for i in range(3)]
    bp = [g * (B[i] - cross(bz, E)[i]) for i in range(3)]
    ep[2] = E[2]
    bp[2] = B[2]
    return ep, bp


def exact_density(eps, mu, chi, E, B, beta):
    _, mup = transform(eps, mu, beta)
    ep, bp = lorentz(E, B, beta)
    return dot(bp, matvec(transpose(chi), ep)) / mup


def main():
    eps, mu, beta = mp.mpf("2.25"), mp.mpf(1), mp.mpf("0.1")
    e1, m1 = transform(eps, mu, beta)
    print("transform(2.25,1,0.1): eps'=", mp.nstr(e1, 25), " mu'=", mp.nstr(m1, 25))
    print("index(1.5,0.1)=", mp.nstr((mp.mpf("1.5") + beta) / (1 + mp.mpf("1.5") * beta), 25))

    g = mp.mpf("1e-3")
    chi = [[0, g, 0], [-g, 0, 0], [0, 0, 0]]
    E, B = [1, 0, 0], [0, 1, 0]
    val = exact_density(eps, mu, chi, E, B, mp.mpf("0.01"))
    print("me_density_exact(antisym 1e-3, x, y, 0.01)=", mp.nstr(val, 25))

    # isolate_mu_term vs mu_correction at beta=1e-3 with B.chi^T E = 1
    b = mp.mpf("1e-3")
    _, mup = transform(eps, mu, b)
    n = mp.sqrt(eps * mu)
    iso = 1 / mup - 1 / mu
    corr = b / mu * (n - 1 / n)
    print("isolate(1e-3)=", mp.nstr(iso, 25), " mu_corr=", mp.nstr(corr, 25),
          " absdiff=", mp.nstr(abs(iso - corr), 10), " rel=", mp.nstr(abs(iso - corr) / abs(corr), 10))

    # medium velocity breakdown: eps=2.25, mu=1, rho0=1, chi_xy=-chi_yx=1e-4, E=x, B=y
    g = mp.mpf("1e-4")
    chi = [[0, g, 0], [-g, 0, 0], [0, 0, 0]]
    rho0 = mp.mpf(1)
    pref = 1 / (4 * mp.pi * mu * C)
    chiT = transpose(chi)
    am = [pref * (eps * mu - 1) * x for x in cross(E, B)]
    ce = [pref * x for x in cross(E, matvec(chiT, E))]
    cb = [-pref * x for x in cross(B, matvec(chi, B))]
    mismatch = -pref * (n - 1 / n) * dot(B, matvec(chiT, E))
    rhs = [(am[i] + ce[i] + cb[i]) / rho0 for i in range(3)]
    rhs[2] += mismatch / rho0
    print("velocity: am_z=", mp.nstr(am[2], 25))
    print("velocity: chi_E_z=", mp.nstr(ce[2], 25))
    print("velocity: chi_B_z=", mp.nstr(cb[2], 25))
    print("velocity: mismatch_z=", mp.nstr(mismatch, 25))
    print("velocity: v_z=", mp.nstr(rhs[2], 25))
    print("velocity: ratio=", mp.nstr(abs(mismatch) / abs(am[2] + ce[2] + cb[2]), 25))


if __name__ == "__main__":
    main()
