#!/usr/bin/env python3
"""Regenerates expected.json, the frozen reference values used by the unit
tests.  Everything here is computed independently of the C++ library:
sympy for number theory, mpmath for high-precision numerics, and a small
Fraction-based model of formal sums.

    python3 gen_expected.py > expected.json
"""

import cmath
import json
import math
from collections import defaultdict
from fractions import Fraction as F

import mpmath
import sympy
from sympy.ntheory import primitive_root
from sympy.ntheory.modular import crt

mpmath.mp.dps = 110


# Formal sums: dict Fraction in [0,1) -> int.

def legendre_symbol(a, p):
    # Euler's criterion.
    r = pow(a % p, (p - 1) // 2, p)
    return 0 if a % p == 0 else (1 if r == 1 else -1)


def frac(x):
    return x - (x.numerator // x.denominator)


def clean(s):
    return {k: v for k, v in s.items() if v}


def add(*xs):
    r = defaultdict(int)
    for x in xs:
        for k, v in x.items():
            r[k] += v
    return clean(r)


def neg(x):
    return {k: -v for k, v in x.items()}


def act(t, x):
    r = defaultdict(int)
    for k, v in x.items():
        assert math.gcd(t, k.denominator) == 1
        r[frac(k * t)] += v
    return clean(r)


def Y(p, x):
    r = defaultdict(int)
    for k, v in x.items():
        r[k] += v
        for i in range(p):
            r[frac((k + i) / p)] -= v
    return clean(r)


def canonical_lift(x):
    for k in x:
        assert k.denominator > 2
    return {k: v for k, v in x.items() if k < F(1, 2)}


def das_class(p, q):
    x = {F(0): 1} if p > 2 else {F(0): 1, F(1, 2): 1}
    H = canonical_lift
    return add(H(Y(p, H(Y(q, x)))), neg(H(Y(q, H(Y(p, x))))))


def terms(s):
    return sorted([[k.numerator, k.denominator, v] for k, v in s.items()], key=lambda t: (t[1], t[0]))


def primes_upto(n):
    return list(sympy.primerange(2, n + 1))


def sigma(r, n):
    if r == -1:
        return n - 1
    k, m = 0, n
    while m % r == 0:
        m //= r
        k += 1
    if k == 0:
        return 1
    pk = r ** k
    if r == 2:
        local = 1 if k == 2 else 5
    else:
        local = primitive_root(pk)
    return int(crt([pk, n // pk], [local, 1])[0])


def sin_monomial(s):
    v = mpmath.mpf(1)
    for a, m in s.items():
        if a == 0:
            continue
        v *= (2 * mpmath.sinpi(mpmath.mpf(a.numerator) / a.denominator)) ** m
    return v


def gamma_monomial(s):
    v = mpmath.mpf(1)
    c = mpmath.sqrt(2 * mpmath.pi)
    for a, m in s.items():
        if a == 0:
            continue
        v *= (c / mpmath.gamma(mpmath.mpf(a.numerator) / a.denominator)) ** m
    return v


def gamma_constant(p, q):
    if p == 2:
        return mpmath.power(2, -mpmath.mpf(q - 1) / 8) * mpmath.power(q, mpmath.mpf(1) / 8)
    return mpmath.power(p, -mpmath.mpf((q - 1) ** 2) / (16 * q)) * mpmath.power(q, mpmath.mpf((p - 1) ** 2) / (16 * p))


def valuation(r, s):
    total = F(0)
    for a, m in s.items():
        d, k = a.denominator, 0
        while d % r == 0:
            d //= r
            k += 1
        if d == 1 and k > 0:
            total += F(m, r ** (k - 1))
    return total


def wedge_from_floats(p, q):
    # Main Formula pipeline in floating point with the canonical lifting
    # operator, as an order-of-magnitude independent reference.
    n = 4 * p * q
    x = {F(0): 1} if p > 2 else {F(0): 1, F(1, 2): 1}
    H = canonical_lift
    a = das_class(p, q)
    ts = {r: sigma(r, n) for r in (-1, 2, p, q)}

    def one_minus(t, y):
        return add(y, neg(act(t, y)))

    def c_of(t):
        up = H(one_minus(t, H(Y(q, x))))
        uq = H(one_minus(t, H(Y(p, x))))
        b = add(Y(p, up), neg(Y(q, uq)))
        return add(H(one_minus(t, a)), neg(H(b)))

    def conj_sin(t, s):
        z = 1
        for k, m in s.items():
            if k == 0:
                continue
            z *= ((1j ** (t % 4)) * cmath.exp(-1j * math.pi * t * k) * (1 - cmath.exp(2j * math.pi * t * k))) ** m
        return 1 if z.real > 0 else -1

    cs = {r: c_of(t) for r, t in ts.items()}
    out = []
    rs = sorted(ts)
    for i in range(len(rs)):
        for j in range(i + 1, len(rs)):
            r, s = rs[i], rs[j]
            if conj_sin(ts[s], cs[r]) * conj_sin(ts[r], cs[s]) == -1:
                out.append([r, s])
    return out


def main():
    out = {}
    out["cyclotomic_polys"] = {
        str(n): [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, sympy.Symbol("x"))).all_coeffs())]
        for n in range(1, 201)
    }
    prime_powers = [m for m in range(3, 400) if len(sympy.factorint(m)) == 1 and m % 2 == 1]
    out["primitive_roots"] = {str(m): int(primitive_root(m)) for m in prime_powers}
    out["legendre"] = {str(p): [legendre_symbol(a % p, p) if a % p else 0 for a in range(0, p)] for p in primes_upto(60)[1:]}
    levels = [8, 12, 24, 40, 60, 84, 120, 168, 280, 572, 1748, 4 * 27 * 5, 16 * 9 * 7]
    out["sigma_generators"] = {
        str(n): {str(r): sigma(r, n) for r in [-1] + [int(f) for f in sympy.factorint(n)] + [97]} for n in levels
    }
    pairs = [(p, q) for q in primes_upto(13) for p in primes_upto(13) if p < q]
    out["das_classes"] = {f"{p},{q}": terms(das_class(p, q)) for p, q in pairs}
    out["sin_das"] = {f"{p},{q}": mpmath.nstr(sin_monomial(das_class(p, q)), 80) for p, q in pairs}
    out["gamma_das_ratio"] = {
        f"{p},{q}": mpmath.nstr(gamma_monomial(das_class(p, q)) / mpmath.sqrt(sin_monomial(das_class(p, q))), 80)
        for p, q in pairs
    }
    out["gamma_constants"] = {f"{p},{q}": mpmath.nstr(gamma_constant(p, q), 80) for p, q in pairs}
    out["gamma_values"] = {
        s: mpmath.nstr(mpmath.gamma(mpmath.mpf(F(s).numerator) / F(s).denominator), 90)
        for s in ["1", "1/2", "1/3", "2/3", "1/7", "5/4", "7/2", "1/1000", "999/1000", "25/3"]
    }
    out["sin_pi"] = {
        s: mpmath.nstr(mpmath.sinpi(mpmath.mpf(F(s).numerator) / F(s).denominator), 90)
        for s in ["1/7", "3/11", "5/12", "13/15", "1/1000"]
    }
    seo_pairs = [(3, 5), (3, 7), (5, 7), (7, 11), (11, 13), (13, 17), (17, 19), (5, 23), (29, 31)]
    out["valuations"] = {
        f"{p},{q}": {
            "v_p": str(valuation(p, das_class(p, q))),
            "v_q": str(valuation(q, das_class(p, q))),
            "legendre_q_p": legendre_symbol(q % p, p),
            "legendre_p_q": legendre_symbol(p % q, q),
        }
        for p, q in seo_pairs
    }
    out["main_formula_canonical"] = {f"{p},{q}": wedge_from_floats(p, q) for p, q in pairs}
    print(json.dumps(out, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
