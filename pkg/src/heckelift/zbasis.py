"""Conversion into the subring Q[z^2, a^{+-1}] with z = q - q^{-1}.

A Laurent polynomial lies in this subring iff every a-layer has only even
integer q-exponents and is palindromic under q <-> q^{-1}.  The conversion
uses the recursion for q^{2k} + q^{-2k} as a polynomial in w = z^2 + 2, so
no division ever happens on the way in.  Division by [p]^2 (monic of degree
p - 1 in z^2) is plain univariate long division per a-layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb

from .exactring import LaurentQA, qnum


class NotInSubring(ValueError):
    """The value is not a polynomial in z^2 and a^{+-1}."""


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _trim(row: tuple) -> tuple:
    i = len(row)
    while i > 0 and row[i - 1] == 0:
        i -= 1
    return tuple(_norm_coeff(c) for c in row[:i])


@dataclass(frozen=True)
class ZAPoly:
    """Polynomial in z^2 with Laurent monomials in a: rows[aexp][k] * z^(2k) * a^aexp."""

    rows: tuple[tuple[int, tuple], ...]

    @classmethod
    def from_rows(cls, rows: dict) -> "ZAPoly":
        cleaned = {}
        for ae, row in rows.items():
            t = _trim(tuple(row))
            if t:
                cleaned[int(ae)] = t
        return cls(rows=tuple(sorted(cleaned.items())))

    @classmethod
    def zero(cls) -> "ZAPoly":
        return cls(rows=())

    def row_map(self) -> dict[int, tuple]:
        return dict(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    @property
    def is_integral(self) -> bool:
        return all(
            Fraction(c).denominator == 1 for _, row in self.rows for c in row
        )

    def z2_degree(self) -> int:
        """Highest power of z^2 present; -1 for the zero polynomial."""
        if not self.rows:
            return -1
        return max(len(row) - 1 for _, row in self.rows)

    def to_laurent(self) -> LaurentQA:
        """Expand back into q and a."""
        out = LaurentQA.zero()
        for ae, row in self.rows:
            for k, c in enumerate(row):
                if c == 0:
                    continue
                out = out + _z2_power_laurent(k).shift(aexp=ae) * c
        return out

    def to_json_dict(self) -> dict:
        return {
            str(ae): [str(Fraction(c)) for c in row] for ae, row in self.rows
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ZAPoly":
        return cls.from_rows(
            {int(ae): tuple(Fraction(c) for c in row) for ae, row in data.items()}
        )


@cache
def _z2_power_laurent(k: int) -> LaurentQA:
    """(z^2)^k = (q - q^-1)^(2k) expanded in q."""
    return LaurentQA(
        {(2 * k - 2 * i, 0): (-1) ** i * comb(2 * k, i) for i in range(2 * k + 1)}
    )


@cache
def _cosh_basis(k: int) -> tuple:
    """q^(2k) + q^(-2k) written in powers of z^2.

    B_0 = 2, B_1 = z^2 + 2, B_k = (z^2 + 2) B_(k-1) - B_(k-2).
    """
    if k == 0:
        return (2,)
    if k == 1:
        return (2, 1)
    prev, cur = _cosh_basis(k - 2), _cosh_basis(k - 1)
    shifted = (0,) + cur
    doubled = tuple(2 * c for c in cur) + (0,)
    width = max(len(shifted), len(doubled), len(prev))

    def at(t, i):
        return t[i] if i < len(t) else 0

    return tuple(
        at(shifted, i) + at(doubled, i) - at(prev, i) for i in range(width)
    )


def to_z2(f: LaurentQA) -> ZAPoly:
    """Rewrite f as a polynomial in z^2 and a^{+-1}.

    Raises NotInSubring naming the violated symmetry: fractional or odd
    q-exponents, or a q <-> q^{-1} asymmetric a-layer.
    """
    rows = {}
    for ae in f.a_exponents():
        slice_ = f.a_slice(ae)
        for qe in slice_:
            if not isinstance(qe, int):
                raise NotInSubring(
                    f"fractional q-exponent {qe} on a-layer {ae}"
                )
            if qe % 2 != 0:
                raise NotInSubring(f"odd q-exponent {qe} on a-layer {ae}")
        for qe, c in slice_.items():
            if slice_.get(-qe, 0) != c:
                raise NotInSubring(
                    f"a-layer {ae} breaks q <-> q^-1 symmetry at q^{qe}"
                )
        top = max(qe for qe in slice_) if slice_ else 0
        width = top // 2 + 1
        acc = [0] * max(width, 1)
        const = slice_.get(0, 0)
        if const:
            acc[0] = const
        for qe, c in slice_.items():
            if qe <= 0:
                continue
            basis = _cosh_basis(qe // 2)
            for i, b in enumerate(basis):
                acc[i] += c * b
        rows[ae] = tuple(acc)
    return ZAPoly.from_rows(rows)


@cache
def qnum_sq_z2(p: int) -> tuple:
    """[p]^2 in the z^2 basis: monic of degree p - 1."""
    if p < 1:
        raise ValueError("p must be >= 1")
    sq = to_z2(qnum(p) * qnum(p))
    row = sq.row_map().get(0, ())
    assert len(row) == p and row[-1] == 1, "[p]^2 must be monic of degree p-1"
    return row


def divide_by_qnum_sq(f: ZAPoly, p: int) -> tuple["ZAPoly", bool, "ZAPoly"]:
    """Divide every a-layer by [p]^2 in the z^2 basis.

    Returns (quotient, exact, remainder); quotient * [p]^2 + remainder == f.
    """
    divisor = qnum_sq_z2(p)
    dn = len(divisor)
    q_rows = {}
    r_rows = {}
    for ae, row in f.rows:
        work = list(row)
        qrow = [0] * max(len(work) - dn + 1, 0)
        for i in range(len(work) - 1, dn - 2, -1):
            c = work[i]
            if c == 0:
                continue
            pos = i - dn + 1
            qrow[pos] = c
            for j in range(dn):
                work[pos + j] -= c * divisor[j]
        q_rows[ae] = tuple(qrow)
        r_rows[ae] = tuple(work[: dn - 1])
    quotient = ZAPoly.from_rows(q_rows)
    remainder = ZAPoly.from_rows(r_rows)
    return quotient, remainder.is_zero(), remainder


@dataclass(frozen=True)
class CongruenceFragment:
    """Outcome of the z^2-membership and [p]^2-divisibility checks."""

    z2_member: bool
    p2_divisible: bool
    quotient: ZAPoly | None
    remainder_witness: ZAPoly | None
    detail: str = ""


def congruence_verdict(f: LaurentQA, p: int) -> CongruenceFragment:
    """Check f in Z[z^2, a^{+-1}] and divisibility by [p]^2 there.

    Membership requires integer coefficients; divisibility requires an exact
    integral quotient.  The fragment carries the quotient on success and the
    remainder witness on failure.
    """
    try:
        zp = to_z2(f)
    except NotInSubring as err:
        return CongruenceFragment(
            z2_member=False,
            p2_divisible=False,
            quotient=None,
            remainder_witness=None,
            detail=str(err),
        )
    member = zp.is_integral
    quotient, exact, remainder = divide_by_qnum_sq(zp, p)
    divisible = exact and quotient.is_integral
    if member and not exact:
        detail = "remainder after [p]^2 division"
    elif member and exact and not quotient.is_integral:
        detail = "quotient not integral"
    elif not member:
        detail = "coefficients not integral"
    else:
        detail = ""
    return CongruenceFragment(
        z2_member=member,
        p2_divisible=divisible,
        quotient=quotient if exact else None,
        remainder_witness=None if exact else remainder,
        detail=detail,
    )


def double_root_residual(f: LaurentQA, p: int, a0: complex, s: int = 1) -> float:
    """Numeric double-root check at q0 = exp(i*pi*s/p).

    Values in (a - a^-1)[p]^2 * Z[z^2, a^{+-1}] vanish to second order in q
    at 2p-th roots of unity away from +-1; returns max(|f|, |df/dq|) there.
    Callers usually draw s coprime to 2p. The sum runs at a working
    precision sized to the coefficients, so the residual measures the
    polynomial itself rather than float rounding; large inputs still give
    absolute residuals far below any reasonable tolerance.
    """
    import mpmath

    scale = sum(abs(Fraction(c)) for c in f.terms.values()) or Fraction(1)
    span = max((abs(Fraction(qe)) for qe, _ in f.terms), default=Fraction(1))
    dps = 40 + len(str(int(scale) + 1)) + len(str(int(span) + 1))
    with mpmath.workdps(dps):
        a_base = mpmath.mpc(a0)
        val = mpmath.mpc(0)
        dval = mpmath.mpc(0)
        for (qe, ae), c in f.support():
            cf = Fraction(c)
            coeff = mpmath.mpf(cf.numerator) / cf.denominator
            apow = a_base**ae
            # q0^e = exp(i*pi*s*e/p), evaluated directly per exponent
            x = Fraction(s) * Fraction(qe) / p
            val += coeff * mpmath.expjpi(mpmath.mpf(x.numerator) / x.denominator) * apow
            if qe != 0:
                qf = Fraction(qe)
                dx = Fraction(s) * (qf - 1) / p
                dval += (
                    coeff
                    * (mpmath.mpf(qf.numerator) / qf.denominator)
                    * mpmath.expjpi(mpmath.mpf(dx.numerator) / dx.denominator)
                    * apow
                )
        return float(max(abs(val), abs(dval)))
