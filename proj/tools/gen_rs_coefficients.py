#!/usr/bin/env python3
"""Generate Taylor coefficients of the Riemann-Siegel correction terms.

Psi(p) = cos(2*pi*(p^2 - p - 1/16)) / cos(2*pi*p) is expanded around p = 1/2
(u = p - 1/2) by exact power-series division at high precision; C0..C4 are
then assembled from derivatives of Psi. Output is a C++ header fragment.
"""
import sys
import mpmath as mp

mp.mp.dps = 120
ORDER = 90  # terms kept in Psi before differentiation


def cos_series(coef, shift, n):
    # cos(coef*u^2 + shift) as a power series in u up to u^(n-1)
    out = [mp.mpf(0)] * n
    # cos(a+b) = cos a cos b - sin a sin b with a = coef*u^2
    m = 0
    while 2 * m < n:
        c = (-1) ** m * coef ** (2 * m) / mp.factorial(2 * m)  # cos(a) term u^(4m)
        if 4 * m < n:
            out[4 * m] += c * mp.cos(shift)
        s = (-1) ** m * coef ** (2 * m + 1) / mp.factorial(2 * m + 1)  # sin(a) term u^(4m+2)
        if 4 * m + 2 < n:
            out[4 * m + 2] -= s * mp.sin(shift)
        m += 1
    return out


def psi_series(n):
    num = [-x for x in cos_series(2 * mp.pi, -5 * mp.pi / 8, n)]
    den = [mp.mpf(0)] * n
    for m in range(0, n, 2):
        den[m] = (-1) ** (m // 2) * (2 * mp.pi) ** m / mp.factorial(m)
    q = [mp.mpf(0)] * n
    for i in range(n):
        acc = num[i]
        for j in range(1, i + 1):
            acc -= den[j] * q[i - j]
        q[i] = acc / den[0]
    return q


def deriv(a, r):
    return [a[m] * mp.factorial(m) / mp.factorial(m - r) for m in range(r, len(a))]


def combo(terms, n):
    out = [mp.mpf(0)] * n
    for scale, series in terms:
        for i in range(min(n, len(series))):
            out[i] += scale * series[i]
    return out


def main():
    psi = psi_series(ORDER)
    pi = mp.pi
    keep = 56
    c = [
        combo([(1, psi)], keep),
        combo([(-1 / (96 * pi**2), deriv(psi, 3))], keep),
        combo([(1 / (64 * pi**2), deriv(psi, 2)), (1 / (18432 * pi**4), deriv(psi, 6))], keep),
        combo([(-1 / (64 * pi**2), deriv(psi, 1)), (-1 / (3840 * pi**4), deriv(psi, 5)),
               (-1 / (5308416 * pi**6), deriv(psi, 9))], keep),
        combo([(1 / (128 * pi**2), psi), (19 / (24576 * pi**4), deriv(psi, 4)),
               (11 / (5898240 * pi**6), deriv(psi, 8)), (1 / (2038431744 * pi**8), deriv(psi, 12))], keep),
    ]
    # trim trailing terms that cannot matter for |u| <= 1/2
    for k, series in enumerate(c):
        last = keep
        while last > 1 and abs(series[last - 1]) * mp.mpf(0.5) ** (last - 1) < mp.mpf(10) ** -24:
            last -= 1
        c[k] = series[:last]
    if len(sys.argv) > 1 and sys.argv[1] == "--check":
        return c
    print("// Generated by tools/gen_rs_coefficients.py. Do not edit.")
    for k, series in enumerate(c):
        print(f"inline constexpr std::array<double, {len(series)}> rs_c{k}_taylor{{")
        for v in series:
            print(f"    {mp.nstr(v, 20, min_fixed=1, max_fixed=0)},")
        print("};")
    return c


if __name__ == "__main__":
    main()
