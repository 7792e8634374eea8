#!/usr/bin/env python3
"""High-precision reference values frozen into the C++ unit tests.

Independent of the C++ code path: everything is recomputed here with mpmath
at 50 significant digits (direct summation, closed forms, bisection).
Run: python3 tests/oracles/freeze_values.py
"""
from math import isqrt

from mpmath import mp, mpf, log, sqrt, ceil, ln

mp.dps = 50
LOG2E = 1 / ln(2)


def log2(x):
    return log(x, 2)


def snr_single(a):
    return mpf(2) ** (2 * (3 + a / ln(2)))


def snr_multihop(a):
    return mpf(2) ** (2 * (3 + a / (2 * ln(2))))


def reuse(snr, a):
    return int(ceil(snr ** (mpf(1) / (2 * a)) + 1))


def ring_bound(n, snr, L, a):
    return sum(8 * i * snr * (mpf(L) * i - 1) ** (-a) for i in range(1, isqrt(n) + 1))


def cx(x):
    x = mpf(x)
    if x == 0:
        return mpf(0)
    r = sqrt(1 + 4 * x)
    return 2 * log2((1 + r) / 2) - LOG2E / (4 * x) * (r - 1) ** 2


def qmf_opt(r0, n0, snr):
    r0, n0, snr = mpf(r0), mpf(n0), mpf(snr)
    f = lambda s2: r0 - log2(1 + n0 / s2) - cx(snr / (n0 + s2))
    lo = n0 / (2 ** r0 - 1)
    hi = (n0 + snr) / (2 ** r0 - 1)
    for _ in range(300):
        mid = (lo + hi) / 2
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    s2 = (lo + hi) / 2
    return min(r0 - log2(1 + n0 / s2), cx(snr / (n0 + s2))), s2


def qf(r0, n0, snr):
    r0 = mpf(r0)
    return cx((2 ** r0 - 1) * snr / (2 ** r0 * n0 + snr))


def chain(a, q, scheme, length, rings=10**6):
    snr = snr_single(a)
    L = reuse(snr, a)
    pi = ring_bound(rings, snr, L, a)
    rates = [log2(1 + snr / (1 + pi))]
    while len(rates) < length:
        r0 = q * rates[-1]
        rates.append(qmf_opt(r0, pi + 1, snr)[0] if scheme == "qmf" else qf(r0, pi + 1, snr))
    return rates


def show(name, value):
    print(f"{name:48s} {mp.nstr(value, 17)}")


if __name__ == "__main__":
    show("optimal_snr_single_stage(3)", snr_single(3))
    show("optimal_snr_single_stage(7)", snr_single(7))
    show("optimal_snr_multihop(7)", snr_multihop(7))
    show("optimal_snr_multihop(4)", snr_multihop(4))
    print("reuse(alpha=3), reuse(alpha=7):", reuse(snr_single(3), 3), reuse(snr_single(7), 7))
    show("ring_bound(1e4, snr*(3), 7, 3)", ring_bound(10**4, snr_single(3), 7, 3))
    show("ring_bound(1e4, snr*(7), 5, 7)", ring_bound(10**4, snr_single(7), 5, 7))
    show("dominant(snr*(7), 5, 7)", 8 * snr_single(7) * 4 ** -7)
    show("ring_bound(1e6, snr*(7), 5, 7)", ring_bound(10**6, snr_single(7), 5, 7))
    show("c_of_x(1)", cx(1))
    show("c_of_x(2032)", cx(2032))
    show("c_of_x(100)", cx(100))
    show("qf(4,1,100)", qf(4, 1, 100))
    r, s2 = qmf_opt(4, 1, 100)
    show("qmf_opt(4,1,100) rate", r)
    show("qmf_opt(4,1,100) sigma2", s2)
    snr = snr_multihop(7)
    L = reuse(snr, 7)
    for n in (10**4, 10**5):
        pi = ring_bound(n, snr, L, 7)
        show(f"multihop_lower(7, {n})", log2(1 + snr / (1 + pi)) * sqrt(n) / (2 * L * L))
    snr4 = snr_multihop(4)
    L4 = reuse(snr4, 4)
    show("multihop_lower(4, 1e4)", log2(1 + snr4 / (1 + ring_bound(10**4, snr4, L4, 4))) * 100 / (2 * L4 * L4))
    for a, q, sch in ((7, 1, "qmf"), (7, 1, "qf"), (3, 2, "qmf"), (7, 2, "qmf")):
        print(f"chain alpha={a} q={q} {sch}:", [mp.nstr(x, 15) for x in chain(a, q, sch, 6)])
    snr7 = snr_single(7)
    pi7 = ring_bound(10**4, snr7, 5, 7)
    show("single_stage(7, 1e4) sum rate", log2(1 + snr7 / (1 + pi7)) * 100 / (2 * sqrt(2) * 5))
    show("approx_sum_rate(7, 1e4)", 7 * 100 / ((2 * sqrt(2) * ln(2)) * 2 ** (mpf(3) / 7 + 1 / ln(2))))
    show("t_opt_method2(1e7, 5)", -1 + (-1 + sqrt(1 + 2 * ln(mpf(10**7) / 5) * ln(3))) / ln(3))
