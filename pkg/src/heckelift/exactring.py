"""Exact Laurent arithmetic in q and a over the rationals.

LaurentQA is a sparse Laurent polynomial with Fraction (or int) coefficients,
integer a-exponents, and q-exponents that are integers or exact rationals
(rational exponents appear transiently in cabling sums before they cancel).
RingFraction is a LaurentQA numerator over a q-only denominator, resolved by
exact long division.  No floats anywhere except the numeric evaluation
helpers used by the double-root oracle.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import cache


class NonExactDivision(ArithmeticError):
    """Exact division failed; carries the offending remainder."""

    def __init__(self, message: str, remainder: "LaurentQA | None" = None):
        super().__init__(message)
        self.remainder = remainder


class NotDivisible(ArithmeticError):
    """Division by an a-bracket left a remainder; carries the witness."""

    def __init__(self, message: str, witness: "LaurentQA | None" = None):
        super().__init__(message)
        self.witness = witness


class ResidualFractionalExponent(ValueError):
    """A fractional q-exponent survived where cancellation was required."""


def _norm_qexp(e):
    """Canonical q-exponent: plain int when integral, Fraction otherwise."""
    if isinstance(e, int):
        return e
    f = Fraction(e)
    return int(f) if f.denominator == 1 else f


class LaurentQA:
    """Sparse exact Laurent polynomial in q and a."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for (qe, ae), c in terms.items():
                if c == 0:
                    continue
                key = (_norm_qexp(qe), int(ae))
                c0 = data.get(key)
                c = c if c0 is None else c0 + c
                if c == 0:
                    data.pop(key, None)
                else:
                    data[key] = c
        self.terms = data

    @classmethod
    def _raw(cls, data: dict) -> "LaurentQA":
        obj = cls.__new__(cls)
        obj.terms = data
        return obj

    @classmethod
    def zero(cls) -> "LaurentQA":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentQA":
        return cls._raw({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff, qexp=0, aexp=0) -> "LaurentQA":
        if coeff == 0:
            return cls.zero()
        return cls._raw({(_norm_qexp(qexp), int(aexp)): coeff})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, qexp=0, aexp=0):
        return self.terms.get((_norm_qexp(qexp), int(aexp)), 0)

    def support(self):
        """Terms in canonical order: a-exponent major, q-exponent minor."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def a_exponents(self) -> list[int]:
        return sorted({ae for _, ae in self.terms})

    def a_slice(self, aexp: int) -> dict:
        """q-exponent -> coefficient map of the a^aexp layer."""
        return {qe: c for (qe, ae), c in self.terms.items() if ae == aexp}

    def has_fractional_q(self) -> bool:
        return any(not isinstance(qe, int) for qe, _ in self.terms)

    def is_a_free(self) -> bool:
        return all(ae == 0 for _, ae in self.terms)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "LaurentQA":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        data = dict(self.terms)
        for key, c in other.terms.items():
            c0 = data.get(key)
            s = c if c0 is None else c0 + c
            if s == 0:
                data.pop(key, None)
            else:
                data[key] = s
        return LaurentQA._raw(data)

    __radd__ = __add__

    def __neg__(self) -> "LaurentQA":
        return LaurentQA._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentQA":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentQA":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentQA":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentQA.zero()
            return LaurentQA._raw({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, LaurentQA):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        data: dict = {}
        get = data.get
        for (qb, ab), cb in b.items():
            for (qa, aa), ca in a.items():
                key = (qa + qb, aa + ab)
                c0 = get(key)
                s = ca * cb if c0 is None else c0 + ca * cb
                if s == 0:
                    data.pop(key, None)
                else:
                    data[key] = s
        if any(not isinstance(qe, int) for qe, _ in data):
            data = {(_norm_qexp(qe), ae): c for (qe, ae), c in data.items()}
        return LaurentQA._raw(data)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentQA":
        if n < 0:
            raise ValueError("negative powers are not defined on LaurentQA")
        result = LaurentQA.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"LaurentQA({self.to_text()!r})"

    # -- substitutions -----------------------------------------------------

    def adams(self, d: int) -> "LaurentQA":
        """Exponent scaling q -> q^d, a -> a^d."""
        if d < 1:
            raise ValueError("adams degree must be >= 1")
        if d == 1:
            return self
        return LaurentQA(
            {(qe * d, ae * d): c for (qe, ae), c in self.terms.items()}
        )

    def substitute_a(self, a0=1) -> "LaurentQA":
        """Evaluate a = a0 exactly, leaving a Laurent polynomial in q."""
        data: dict = {}
        for (qe, ae), c in self.terms.items():
            if a0 == 1:
                v = c
            elif a0 == -1:
                v = c if ae % 2 == 0 else -c
            else:
                v = c * Fraction(a0) ** ae
            key = (qe, 0)
            s = data.get(key, 0) + v
            if s == 0:
                data.pop(key, None)
            else:
                data[key] = s
        return LaurentQA._raw(data)

    def a_derivative_at_1(self) -> "LaurentQA":
        """d/da at a = 1, exact, as a Laurent polynomial in q."""
        data: dict = {}
        for (qe, ae), c in self.terms.items():
            if ae == 0:
                continue
            key = (qe, 0)
            s = data.get(key, 0) + c * ae
            if s == 0:
                data.pop(key, None)
            else:
                data[key] = s
        return LaurentQA._raw(data)

    def shift(self, qexp=0, aexp=0) -> "LaurentQA":
        """Multiply by the monomial q^qexp * a^aexp."""
        qexp = _norm_qexp(qexp)
        return LaurentQA._raw(
            {(qe + qexp, ae + aexp): c for (qe, ae), c in self.terms.items()}
        )

    # -- numeric evaluation (oracle support only) ---------------------------

    def eval_numeric(self, q0: complex, a0: complex) -> complex:
        total = 0j
        for (qe, ae), c in self.terms.items():
            total += complex(c) * _cpow(q0, qe) * _cpow(a0, ae)
        return total

    def eval_dq(self, q0: complex, a0: complex) -> complex:
        """Numeric q-derivative at (q0, a0)."""
        total = 0j
        for (qe, ae), c in self.terms.items():
            if qe == 0:
                continue
            total += complex(c) * complex(Fraction(qe)) * _cpow(q0, qe - 1) * _cpow(a0, ae)
        return total

    # -- text serialization --------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for (qe, ae), c in self.support():
            factors = [str(Fraction(c))]
            if qe != 0:
                factors.append(f"q^{qe}")
            if ae != 0:
                factors.append(f"a^{ae}")
            chunks.append(" * ".join(factors))
        return " + ".join(chunks)

    @classmethod
    def from_text(cls, text: str) -> "LaurentQA":
        text = text.strip()
        if text == "0":
            return cls.zero()
        data: dict = {}
        for chunk in text.split(" + "):
            qe: int | Fraction = 0
            ae = 0
            coeff = None
            for factor in chunk.split(" * "):
                factor = factor.strip()
                if factor.startswith("q^"):
                    qe = _norm_qexp(Fraction(factor[2:]))
                elif factor.startswith("a^"):
                    ae = int(factor[2:])
                else:
                    coeff = Fraction(factor)
            if coeff is None:
                raise ValueError(f"term without coefficient: {chunk!r}")
            data[(qe, ae)] = data.get((qe, ae), 0) + coeff
        return cls(data)


def _coerce(x):
    if isinstance(x, LaurentQA):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentQA.monomial(x)
    return NotImplemented


def _cpow(base: complex, exp) -> complex:
    """base**exp on the principal branch, exact for integer exponents."""
    if isinstance(exp, int):
        return base**exp
    return cmath.exp(complex(Fraction(exp)) * cmath.log(base))


# -- standard elements -------------------------------------------------------


def qbracket(n: int) -> LaurentQA:
    """{n} = q^n - q^-n."""
    if n == 0:
        return LaurentQA.zero()
    return LaurentQA._raw({(n, 0): 1, (-n, 0): -1})


def abracket(n: int) -> LaurentQA:
    """{n}_a = a^n - a^-n."""
    if n == 0:
        return LaurentQA.zero()
    return LaurentQA._raw({(0, n): 1, (0, -n): -1})


def qnum(n: int) -> LaurentQA:
    """Balanced quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n).

    Built as the explicit term sum, never as a quotient of brackets.
    """
    return qnum_power(n, 1)


def qnum_power(n: int, k: int) -> LaurentQA:
    """[n] evaluated at q^k: the n-term sum of q^(k*(n-1-2j))."""
    if n < 0:
        return -qnum_power(-n, k)
    if n == 0 or k == 0:
        return LaurentQA.zero() if n == 0 else LaurentQA.monomial(n)
    data: dict = {}
    for j in range(n):
        e = k * (n - 1 - 2 * j)
        data[(e, 0)] = data.get((e, 0), 0) + 1
    return LaurentQA(data)


def bracket_of_partition(mu, scale: int = 1) -> LaurentQA:
    """{scale * mu} = prod_i (q^(scale*mu_i) - q^-(scale*mu_i))."""
    out = LaurentQA.one()
    for part in mu:
        out = out * qbracket(scale * part)
    return out


def abracket_of_partition(mu, scale: int = 1) -> LaurentQA:
    """{scale * mu}_a = prod_i (a^(scale*mu_i) - a^-(scale*mu_i))."""
    out = LaurentQA.one()
    for part in mu:
        out = out * abracket(scale * part)
    return out


@cache
def zsquared() -> LaurentQA:
    """z^2 = (q - q^-1)^2 = q^2 - 2 + q^-2."""
    return qbracket(1) * qbracket(1)


# -- exact division -----------------------------------------------------------


def exact_div(num: LaurentQA, den: LaurentQA) -> LaurentQA:
    """Divide num by a q-only denominator, exactly.

    Runs univariate Laurent long division on every a-layer of num; raises
    NonExactDivision (with the remainder attached) if any layer fails.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if not den.is_a_free():
        raise ValueError("denominator must not involve a")
    if den.has_fractional_q() or num.has_fractional_q():
        raise ResidualFractionalExponent(
            "exact division requires integer q-exponents"
        )
    den_slice = den.a_slice(0)
    dexps = sorted(den_slice)
    dlo, dhi = dexps[0], dexps[-1]
    dlist = [den_slice.get(e, 0) for e in range(dlo, dhi + 1)]
    out: dict = {}
    for ae in num.a_exponents():
        nslice = num.a_slice(ae)
        q, rem = _laurent_divmod(nslice, dlist, dlo)
        if rem:
            raise NonExactDivision(
                f"remainder of degree span {len(rem)} on a-layer {ae}",
                remainder=LaurentQA({(qe, ae): c for qe, c in rem.items()}),
            )
        for qe, c in q.items():
            out[(qe, ae)] = c
    return LaurentQA._raw(out)


def _laurent_divmod(nslice: dict, dlist: list, dlo: int):
    """One a-layer of long division.  Returns (quotient, remainder) dicts."""
    if not nslice:
        return {}, {}
    nlo = min(nslice)
    nhi = max(nslice)
    work = [nslice.get(e, 0) for e in range(nlo, nhi + 1)]
    dn = len(dlist)
    lead = dlist[-1]
    qlen = len(work) - dn + 1
    quotient: dict = {}
    for i in range(len(work) - 1, dn - 2, -1):
        c = work[i]
        if c == 0:
            continue
        if lead == 1:
            qc = c
        else:
            qc = Fraction(c) / lead
            if qc.denominator == 1:
                qc = int(qc)
        pos = i - dn + 1
        quotient[pos + nlo - dlo] = qc
        for j in range(dn):
            work[pos + j] -= qc * dlist[j]
    remainder = {
        e + nlo: work[e] for e in range(min(dn - 1, len(work))) if work[e] != 0
    }
    return quotient, remainder


def divide_out_abracket(f: LaurentQA, n: int = 1) -> LaurentQA:
    """Divide by (a^n - a^-n); raises NotDivisible with the witness remainder."""
    if n < 1:
        raise ValueError("a-bracket order must be >= 1")
    if f.is_zero():
        return f
    # f / (a^n - a^-n) = f * a^n / (a^2n - 1); divide as a polynomial in a
    # with q-polynomial coefficients (the divisor is monic in a).
    layers: dict[int, dict] = {}
    for (qe, ae), c in f.terms.items():
        layers.setdefault(ae + n, {})[qe] = c
    lo = min(layers)
    hi = max(layers)
    width = 2 * n
    quotient: dict[int, dict] = {}
    for j in range(hi, lo + width - 1, -1):
        cur = layers.get(j)
        if not cur:
            continue
        quotient[j - width] = cur
        below = layers.setdefault(j - width, {})
        for qe, c in cur.items():
            s = below.get(qe, 0) + c
            if s == 0:
                below.pop(qe, None)
            else:
                below[qe] = s
        del layers[j]
    residue = {
        (qe, ae): c
        for ae, slice_ in layers.items()
        for qe, c in slice_.items()
        if c != 0
    }
    if residue:
        witness = LaurentQA._raw({(qe, ae - n): c for (qe, ae), c in residue.items()})
        raise NotDivisible("not divisible by the a-bracket", witness=witness)
    # the working polynomial was f * a^n, so the quotient layers already
    # carry the true a-exponents of f / (a^n - a^-n)
    return LaurentQA._raw(
        {
            (qe, ae): c
            for ae, slice_ in quotient.items()
            for qe, c in slice_.items()
            if c != 0
        }
    )


# -- ring fractions -----------------------------------------------------------


class RingFraction:
    """A LaurentQA numerator over a nonzero q-only denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentQA, den: LaurentQA | int = 1):
        if isinstance(den, (int, Fraction)):
            den = LaurentQA.monomial(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not den.is_a_free():
            raise ValueError("denominator must be a polynomial in q only")
        self.num = num
        self.den = den

    @classmethod
    def from_laurent(cls, f: LaurentQA) -> "RingFraction":
        return cls(f, 1)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other) -> "RingFraction":
        other = _coerce_fraction(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RingFraction(self.num + other.num, self.den)
        return RingFraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RingFraction":
        return RingFraction(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce_fraction(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_fraction(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RingFraction":
        if isinstance(other, (int, Fraction)):
            return RingFraction(self.num * other, self.den)
        if isinstance(other, LaurentQA):
            return RingFraction(self.num * other, self.den)
        if isinstance(other, RingFraction):
            return RingFraction(self.num * other.num, self.den * other.den)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = _coerce_fraction(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RingFraction is not hashable")

    def __repr__(self) -> str:
        return f"RingFraction({self.num.to_text()!r}, {self.den.to_text()!r})"

    def resolve(self) -> LaurentQA:
        """Exact quotient as a Laurent polynomial; NonExactDivision if none."""
        return exact_div(self.num, self.den)

    def simplified(self) -> "RingFraction":
        """Collapse the denominator when the quotient happens to be exact."""
        try:
            return RingFraction(self.resolve(), 1)
        except (NonExactDivision, ResidualFractionalExponent):
            return self

    def eval_numeric(self, q0: complex, a0: complex) -> complex:
        return self.num.eval_numeric(q0, a0) / self.den.eval_numeric(q0, a0)


def _coerce_fraction(x):
    if isinstance(x, RingFraction):
        return x
    if isinstance(x, LaurentQA):
        return RingFraction(x, 1)
    if isinstance(x, (int, Fraction)):
        return RingFraction(LaurentQA.monomial(x), 1)
    return NotImplemented
