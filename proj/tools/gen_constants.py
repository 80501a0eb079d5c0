#!/usr/bin/env python3
"""Regenerates the constant tables embedded in src/constants.inc.

Lanczos coefficients (g = 7, 15 terms) are obtained by requiring the
partial-fraction form to reproduce Gamma exactly at z = 0, 1, ..., 14,
solved at 60-digit precision. Euler-Maclaurin coefficients are B_2k/(2k)!.
"""
import mpmath as mp

mp.mp.dps = 60
G = mp.mpf(7)
N = 15


def lanczos_coefficients():
    # Gamma(z+1) = sqrt(2pi) (z+g+1/2)^(z+1/2) e^-(z+g+1/2) [c0 + sum c_k/(z+k)]
    rows, rhs = [], []
    for z in range(N):
        z = mp.mpf(z)
        t = z + G + mp.mpf(1) / 2
        target = mp.gamma(z + 1) / (mp.sqrt(2 * mp.pi) * t ** (z + mp.mpf(1) / 2) * mp.exp(-t))
        rows.append([mp.mpf(1)] + [1 / (z + k) for k in range(1, N)])
        rhs.append(target)
    return mp.lu_solve(mp.matrix(rows), mp.matrix(rhs))


def check(c):
    worst = 0
    for x in [0.05 * i for i in range(1, 40)]:
        for y in [0, 0.5, 3, 10, 40]:
            z = mp.mpc(x + 0.5, y)
            zz = z - 1
            t = zz + G + mp.mpf(1) / 2
            a = c[0] + sum(c[k] / (zz + k) for k in range(1, N))
            approx = mp.sqrt(2 * mp.pi) * t ** (zz + mp.mpf(1) / 2) * mp.exp(-t) * a
            worst = max(worst, abs(approx / mp.gamma(z) - 1))
    return worst


def main():
    c = lanczos_coefficients()
    print("// Generated by tools/gen_constants.py; do not edit.")
    print("inline constexpr double kLanczosG = 7.0;")
    print("inline constexpr std::array<double, 15> kLanczosCoefficients = {")
    for v in c:
        print("    %s," % mp.nstr(v, 20, min_fixed=-30, max_fixed=30))
    print("};")
    print("// max relative error on the fit check grid: %s" % mp.nstr(check(c), 3))
    print("inline constexpr std::array<double, 40> kEulerMaclaurinCoefficients = {")
    for k in range(1, 41):
        print("    %s," % mp.nstr(mp.bernoulli(2 * k) / mp.factorial(2 * k), 20))
    print("};")


if __name__ == "__main__":
    main()
