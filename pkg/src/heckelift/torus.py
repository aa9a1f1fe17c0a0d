"""Framed torus knots, framed unknots, and their exact colored invariants.

The d-fold cabling of the (d, m) torus knot turns a power sum P_mu into
P_{d*mu} twisted by fractional framing m/d; evaluating in the plane gives the
invariant as a finite sum over partitions.  Every sum here is assembled over
one structured common denominator (a product of quantum brackets) with
integer-scaled numerators, then resolved by exact division, so no rational
function arithmetic ever happens term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import gcd, lcm

from .combinatorics import (
    Partition,
    WeightMismatch,
    as_partition,
    character_table,
    kappa,
    partitions_of,
    z_mu,
)
from .exactring import (
    LaurentQA,
    ResidualFractionalExponent,
    RingFraction,
    abracket,
    abracket_of_partition,
    bracket_of_partition,
    divide_out_abracket,
    exact_div,
    qbracket,
)
from .zbasis import ZAPoly, to_z2


@dataclass(frozen=True)
class TorusKnot:
    """The (d, m) torus knot with its natural framing d*m."""

    d: int
    m: int

    def __post_init__(self):
        if self.d < 1 or self.m < 1:
            raise ValueError("torus knot parameters must be >= 1")
        if gcd(self.d, self.m) != 1:
            raise ValueError(f"({self.d}, {self.m}) is a link, not a knot")

    @property
    def framing(self) -> int:
        return self.d * self.m


@dataclass(frozen=True)
class FramedUnknot:
    """An unknot with an arbitrary integer framing (0 and negatives allowed)."""

    framing: int


def cable_params(K) -> tuple[int, int]:
    """(cable width d, twist numerator m) for either knot type."""
    if isinstance(K, TorusKnot):
        return K.d, K.m
    if isinstance(K, FramedUnknot):
        return 1, K.framing
    raise TypeError(f"unsupported knot type {type(K).__name__}")


# -- structured common denominators ------------------------------------------


@cache
def _den_brackets(n: int) -> tuple[int, ...]:
    """Bracket orders whose product is divisible by {mu} for every mu |- n."""
    out = []
    for k in range(1, n + 1):
        out.extend([k] * (n // k))
    return tuple(out)


@cache
def _den_poly(n: int, scale: int = 1) -> LaurentQA:
    out = LaurentQA.one()
    for k in _den_brackets(n):
        out = out * qbracket(scale * k)
    return out


@cache
def _zlcm(n: int) -> int:
    return lcm(*(z_mu(mu) for mu in partitions_of(n))) if n else 1


@cache
def _cofactor(n: int, mu: Partition, scale: int = 1) -> LaurentQA:
    """_den_poly(n, scale) divided by {scale * mu}, built by prefix sharing."""
    if not mu:
        return _den_poly(n, scale)
    return exact_div(_cofactor(n, mu[:-1], scale), qbracket(scale * mu[-1]))


@cache
def _plane_row(n: int, nu: Partition, scale: int = 1) -> LaurentQA:
    """{nu}_a times the cofactor of {nu} in _den_poly(n), q-scaled."""
    return abracket_of_partition(nu) * _cofactor(n, nu, scale)


# -- the twisted power-sum expansion -----------------------------------------


def twist_power_sum(k: int, d: int, m: int) -> tuple[tuple[Partition, RingFraction], ...]:
    """Expansion of the m/d-twisted power sum P_{kd} over power sums P_mu.

    Coefficient of P_mu is a^{km} {km*mu} / (z_mu {km}); the zero twist is the
    identity on P_{kd}.
    """
    if k < 1 or d < 1:
        raise ValueError("cable parameters must be >= 1")
    out = []
    for mu in partitions_of(k * d):
        if m == 0:
            coeff = RingFraction(
                LaurentQA.one() if mu == (k * d,) else LaurentQA.zero()
            )
        else:
            num = bracket_of_partition(mu, k * m).shift(aexp=k * m) * Fraction(
                1, z_mu(mu)
            )
            coeff = RingFraction(num, qbracket(k * m))
        out.append((mu, coeff))
    return tuple(out)


@cache
def _bracket_sum(n: int, c: int) -> tuple[LaurentQA, int]:
    """sum over mu |- n of (L/z_mu) {mu}_a {c*mu} (D(n)/{mu}); returns (sum, L)."""
    L = _zlcm(n)
    acc = LaurentQA.zero()
    for mu in partitions_of(n):
        qpart = bracket_of_partition(mu, c) * _cofactor(n, mu)
        contrib = abracket_of_partition(mu) * qpart
        acc = acc + contrib * (L // z_mu(mu))
    return acc, L


@cache
def scaled_invariant(K, p: int = 1) -> LaurentQA:
    """The bracket-scaled power-sum invariant {p} * H(K * P_p).

    Resolves exactly to a Laurent polynomial for every p >= 1; a division
    failure here would be an implementation bug, not a conjecture failure.
    """
    if p < 1:
        raise ValueError("color must be >= 1")
    d, m = cable_params(K)
    if m == 0:
        return abracket(p)
    n, c = p * d, p * m
    acc, L = _bracket_sum(n, c)
    resolved = exact_div(acc * qbracket(p), _den_poly(n) * qbracket(c))
    return (resolved * Fraction(1, L)).shift(aexp=p * m)


@cache
def power_sum_invariant(K, mu: Partition) -> RingFraction:
    """H(K * P_mu) via the character expansion of the d-fold cable.

    Internally works in u = q^{1/d} with integer exponents; fractional
    q-exponents must cancel in the assembled total and a survivor raises
    ResidualFractionalExponent.
    """
    d, m = cable_params(K)
    mu = as_partition(mu)
    if not mu:
        return RingFraction(LaurentQA.one())
    weight = sum(mu)
    n = d * weight
    dmu = tuple(d * x for x in mu)
    table = character_table(n).values
    L = _zlcm(n)
    lams = partitions_of(n)
    acc: dict = {}
    for nu in partitions_of(n):
        phi: dict[int, int] = {}
        for lam in lams:
            v = table[(lam, dmu)] * table[(lam, nu)]
            if v:
                e = kappa(lam) * m
                s = phi.get(e, 0) + v
                if s == 0:
                    phi.pop(e, None)
                else:
                    phi[e] = s
        if not phi:
            continue
        scalar = L // z_mu(nu)
        row = _plane_row(n, nu, d).terms
        for (ue, ae), cr in row.items():
            base = cr * scalar
            for e, v in phi.items():
                key = (ue + e, ae)
                s = acc.get(key, 0) + base * v
                if s == 0:
                    acc.pop(key, None)
                else:
                    acc[key] = s
    num: dict = {}
    for (ue, ae), cv in acc.items():
        if ue % d:
            raise ResidualFractionalExponent(
                f"uncancelled q-exponent {Fraction(ue, d)} in the cable of {K}"
            )
        num[(ue // d, ae + weight * m)] = Fraction(cv, L)
    return RingFraction(LaurentQA(num), _den_poly(n))


@cache
def unknot_schur_value(lam: Partition) -> RingFraction:
    """The plane evaluation of the Schur-colored unknot, W_lam(U)."""
    lam = as_partition(lam)
    n = sum(lam)
    if n == 0:
        return RingFraction(LaurentQA.one())
    table = character_table(n).values
    L = _zlcm(n)
    acc = LaurentQA.zero()
    for nu in partitions_of(n):
        ch = table[(lam, nu)]
        if ch:
            acc = acc + _plane_row(n, nu) * (ch * (L // z_mu(nu)))
    return RingFraction(acc * Fraction(1, L), _den_poly(n))


def power_sum_plane_value(mu: Partition) -> RingFraction:
    """Plane evaluation of a power-sum color: prod_j {mu_j}_a / {mu_j}."""
    mu = as_partition(mu)
    return RingFraction(abracket_of_partition(mu), bracket_of_partition(mu))


def character_pairing(mu: Partition, nu: Partition) -> LaurentQA:
    """sum over lam of chi_lam(mu) chi_lam(nu) q^kappa(lam)."""
    mu, nu = as_partition(mu), as_partition(nu)
    if sum(mu) != sum(nu):
        raise WeightMismatch(f"|{mu}| != |{nu}|")
    table = character_table(sum(mu)).values
    out: dict = {}
    for lam in partitions_of(sum(mu)):
        v = table[(lam, mu)] * table[(lam, nu)]
        if v:
            key = (kappa(lam), 0)
            s = out.get(key, 0) + v
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
    return LaurentQA._raw(out)


def alexander(K) -> ZAPoly:
    """The Alexander polynomial as the a -> 1 limit of the unit color.

    alexander(K) = (q - q^-1) * lim_{a->1} H(K)/(a - a^-1), returned in the
    z^2 basis (single a^0 row, symmetric and integral).
    """
    zhat = scaled_invariant(K, 1)
    core = divide_out_abracket(zhat).substitute_a(1)
    return to_z2(core)
