"""Shared pure helpers for the test suite (no fixtures needed)."""

import itertools
from fractions import Fraction

from heckelift.combinatorics import partitions_of
from heckelift.exactring import LaurentQA


def frobenius_chi_table(n):
    """Symmetric group characters straight from the Frobenius formula.

    chi_lam(mu) is read off as the coefficient of x^(lam + delta) in the
    product of the Vandermonde alternant and the power sum p_mu, expanded
    monomial by monomial in n variables.  Shares nothing with the recursive
    implementation under test.
    """
    delta = tuple(range(n - 1, -1, -1))
    perms = []
    for sigma in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if sigma[i] > sigma[j]:
                    sign = -sign
        perms.append((sign, tuple(delta[sigma[i]] for i in range(n))))
    out = {}
    for mu in partitions_of(n):
        poly = {(0,) * n: 1}
        for part in mu:
            nxt = {}
            for mono, c in poly.items():
                for j in range(n):
                    key = tuple(e + part * (i == j) for i, e in enumerate(mono))
                    nxt[key] = nxt.get(key, 0) + c
            poly = nxt
        for lam in partitions_of(n):
            padded = tuple(lam) + (0,) * (n - len(lam))
            total = 0
            for sign, sd in perms:
                target = tuple(padded[i] + delta[i] - sd[i] for i in range(n))
                if min(target) >= 0:
                    total += sign * poly.get(target, 0)
            out[(lam, mu)] = total
    return out


def random_laurent(rng, terms=4, qspan=5, aspan=3, fractional=False):
    """Small random two variable Laurent polynomial with rational coefficients."""
    data = {}
    for _ in range(rng.randrange(1, terms + 1)):
        num = rng.randrange(-9, 10)
        den = rng.choice([1, 1, 2, 3])
        qe = rng.randrange(-qspan, qspan + 1)
        if fractional and rng.random() < 0.5:
            qe = Fraction(qe, rng.choice([2, 3]))
        ae = rng.randrange(-aspan, aspan + 1)
        data[(qe, ae)] = data.get((qe, ae), 0) + Fraction(num, den)
    return LaurentQA(data)
