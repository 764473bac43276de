"""Exact scalar arithmetic in Q(N), optionally extended by square roots.

Coefficients of invariant-element expansions live in the field of rational
functions of the symbolic dimension N.  Normalizing transition operators
additionally needs square roots, so a second layer represents finite sums

    sum_i  m_i(N) * sqrt(r_i(N))

with rational-function multipliers m_i and pairwise distinct radicands r_i.
Radicands are kept canonical: integer-coefficient polynomials, squarefree
both as polynomials and in their integer content, with positive leading
coefficient, so equality of coefficients is a dictionary comparison.

Everything here is exact; no floats enter until a caller asks for one.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import (
    DivisionByZero,
    PoleAtN,
    RadicalComparisonUnsupported,
    UnsupportedRadicalDivision,
    ZeroRadicand,
)

# ---------------------------------------------------------------------------
# Dense univariate polynomials over Q: tuple of Fractions, lowest degree
# first, no trailing zeros.  () is the zero polynomial.
# ---------------------------------------------------------------------------

Poly = tuple[Fraction, ...]

_ZERO: Poly = ()
_ONE: Poly = (Fraction(1),)


def _trim(cs: list[Fraction]) -> Poly:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _p_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _p_neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _p_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return _ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def _p_scale(a: Poly, c: Fraction) -> Poly:
    if c == 0:
        return _ZERO
    return tuple(x * c for x in a)


def _p_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    rem = list(a)
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    while len(rem) >= len(b):
        c = rem[-1] * inv_lead
        d = len(rem) - len(b)
        quo[d] = c
        for i, cb in enumerate(b):
            rem[d + i] -= c * cb
        while rem and rem[-1] == 0:
            rem.pop()
        if not rem:
            break
    return _trim(quo), _trim(rem)


def _p_monic(a: Poly) -> Poly:
    if not a or a[-1] == 1:
        return a
    return _p_scale(a, 1 / a[-1])


@lru_cache(maxsize=65536)
def _p_gcd(a: Poly, b: Poly) -> Poly:
    # the same small numerator/denominator pairs recur constantly in
    # diagram compositions, so Euclid's results are worth caching
    while b:
        _, r = _p_divmod(a, b)
        a, b = b, _p_monic(r)
    return _p_monic(a)


def _p_deriv(a: Poly) -> Poly:
    return _trim([i * c for i, c in enumerate(a)][1:])


def _p_eval(a: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _p_from_ints(cs: Iterable[int]) -> Poly:
    return _trim([Fraction(c) for c in cs])


def _squarefree_split(a: Poly) -> tuple[Poly, Poly]:
    """Write a monic polynomial as s^2 * r with r monic squarefree.

    Returns (s, r).  Yun's algorithm, specialized to characteristic zero.
    """
    if len(a) <= 1:
        return _ONE, a
    g = _p_gcd(a, _p_deriv(a))
    if len(g) == 1:
        return _ONE, a
    square = _ONE
    rest = _ONE
    b, _ = _p_divmod(a, g)
    c, _ = _p_divmod(_p_deriv(a), g)
    d = _p_add(c, _p_neg(_p_deriv(b)))
    mult = 1
    while len(b) > 1:
        factor = _p_gcd(b, d)
        for _ in range(mult // 2):
            square = _p_mul(square, factor)
        if mult % 2:
            rest = _p_mul(rest, factor)
        b, _ = _p_divmod(b, factor)
        c, _ = _p_divmod(d, factor)
        d = _p_add(c, _p_neg(_p_deriv(b)))
        mult += 1
    return _p_monic(square), _p_monic(rest)


def _int_square_split(n: int) -> tuple[int, int]:
    """Write a positive integer as s^2 * r with r squarefree; return (s, r)."""
    s, r = 1, 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            s *= d ** (e // 2)
            if e % 2:
                r *= d
        d += 1 if d == 2 else 2
    return s, r * n


class RationalFunction:
    """A reduced fraction of polynomials in N with rational coefficients.

    Canonical form: gcd(num, den) = 1, den monic, zero is 0/1.  Equality and
    hashing therefore work structurally.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = _ONE, _reduced: bool = False):
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not _reduced:
            if not num:
                den = _ONE
            else:
                g = _p_gcd(num, den)
                if len(g) > 1:
                    num, _ = _p_divmod(num, g)
                    den, _ = _p_divmod(den, g)
                lead = den[-1]
                if lead != 1:
                    num = _p_scale(num, 1 / lead)
                    den = _p_scale(den, 1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_fraction(cls, value: int | Fraction) -> "RationalFunction":
        f = Fraction(value)
        if f == 0:
            return _RF_ZERO
        return cls((f,), _ONE, _reduced=True)

    @classmethod
    def variable(cls) -> "RationalFunction":
        """The rational function N itself."""
        return _RF_N

    @classmethod
    def from_coeff_lists(cls, num: Iterable[int | Fraction],
                         den: Iterable[int | Fraction] = (1,)) -> "RationalFunction":
        return cls(_trim([Fraction(c) for c in num]),
                   _trim([Fraction(c) for c in den]))

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num[0] / self.den[0] if self.num else Fraction(0)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        other = _as_rf(other)
        return _rf_add(self.num, self.den, other.num, other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(_p_neg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-_as_rf(other))

    def __rsub__(self, other):
        return _as_rf(other) + (-self)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        other = _as_rf(other)
        return _rf_mul(self.num, self.den, other.num, other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        other = _as_rf(other)
        if other.is_zero():
            raise DivisionByZero("division by zero rational function")
        return self * RationalFunction(other.den, other.num)

    def __rtruediv__(self, other):
        return _as_rf(other) / self

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return _RF_ONE / self ** (-k)
        out = _RF_ONE
        for _ in range(k):
            out = out * self
        return out

    # -- evaluation and display ---------------------------------------------

    def eval_at(self, n: int | Fraction) -> Fraction:
        x = Fraction(n)
        d = _p_eval(self.den, x)
        if d == 0:
            raise PoleAtN(f"denominator of {self} vanishes at N={n}")
        return _p_eval(self.num, x) / d

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.from_fraction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if len(self.den) == 1:
            return _poly_str(self.num)
        return f"({_poly_str(self.num)})/({_poly_str(self.den)})"

    def to_json(self) -> dict:
        return {"num": [str(c) for c in self.num],
                "den": [str(c) for c in self.den]}

    @classmethod
    def from_json(cls, data: Mapping) -> "RationalFunction":
        return cls(_trim([Fraction(c) for c in data["num"]]),
                   _trim([Fraction(c) for c in data["den"]]))


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunction.from_fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to RationalFunction")


_RF_ZERO = RationalFunction(_ZERO, _ONE, _reduced=True)
_RF_ONE = RationalFunction(_ONE, _ONE, _reduced=True)
_RF_N = RationalFunction((Fraction(0), Fraction(1)), _ONE, _reduced=True)


@lru_cache(maxsize=1 << 18)
def _rf_add(num1: Poly, den1: Poly, num2: Poly, den2: Poly) -> RationalFunction:
    # results are immutable, and the same coefficient pairs come up again
    # and again when composing diagram sums, so sharing them pays off
    num = _p_add(_p_mul(num1, den2), _p_mul(num2, den1))
    return RationalFunction(num, _p_mul(den1, den2))


@lru_cache(maxsize=1 << 18)
def _rf_mul(num1: Poly, den1: Poly, num2: Poly, den2: Poly) -> RationalFunction:
    # cross-reduce first: inputs are reduced, so the result stays reduced
    a, b = num1, den2
    g = _p_gcd(a, b)
    if len(g) > 1:
        a, _ = _p_divmod(a, g)
        b, _ = _p_divmod(b, g)
    c, d = num2, den1
    g = _p_gcd(c, d)
    if len(g) > 1:
        c, _ = _p_divmod(c, g)
        d, _ = _p_divmod(d, g)
    num = _p_mul(a, c)
    den = _p_mul(b, d)
    if not num:
        return _RF_ZERO
    lead = den[-1]
    if lead != 1:
        num = _p_scale(num, 1 / lead)
        den = _p_scale(den, 1 / lead)
    return RationalFunction(num, den, _reduced=True)


def _poly_str(p: Poly, var: str = "N") -> str:
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        if i == 0:
            term = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            term = f"{mag}{var}" + (f"^{i}" if i > 1 else "")
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Radical layer
# ---------------------------------------------------------------------------

# Canonical radicand key: integer-coefficient polynomial (low degree first)
# that is squarefree over Q, has squarefree positive integer content, and a
# positive leading coefficient.  The key (1,) marks the rational part.
RadicandKey = tuple[int, ...]

_UNIT_KEY: RadicandKey = (1,)


def _canonical_sqrt(p: Poly) -> tuple[RationalFunction, RadicandKey]:
    """Split sqrt(p) into multiplier * sqrt(key) with a canonical key.

    p is a nonzero polynomial over Q with positive leading coefficient.
    """
    lead = p[-1]
    if lead < 0:
        raise ZeroRadicand(f"negative leading coefficient in radicand {_poly_str(p)}")
    monic = _p_scale(p, 1 / lead)
    s_poly, r_poly = _squarefree_split(monic)
    # rational content: lead times the content needed to make r_poly integral
    den_lcm = 1
    for c in r_poly:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    r_int = [c * den_lcm for c in r_poly]
    num_gcd = 0
    for c in r_int:
        num_gcd = math.gcd(num_gcd, c.numerator)
    num_gcd = num_gcd or 1
    r_prim = tuple(int(c / num_gcd) for c in r_int)  # primitive integer poly
    # sqrt(p) = sqrt(lead) * s_poly * sqrt(r_poly); r_poly = (num_gcd/den_lcm) r_prim
    content = Fraction(lead) * num_gcd / den_lcm
    # sqrt(content) = sqrt(content.num * content.den) / content.den
    c_int = content.numerator * content.denominator
    sq, sf = _int_square_split(c_int)
    mult = RationalFunction(_p_scale(s_poly, Fraction(sq, content.denominator)))
    if sf == 1 and len(r_prim) == 1 and r_prim[0] == 1:
        return mult, _UNIT_KEY
    key = tuple(sf * c for c in r_prim)
    return mult, key


class RadicalCoefficient:
    """A finite sum of rational-function multiples of canonical square roots."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[RadicandKey, RationalFunction] | None = None):
        cleaned = {}
        if terms:
            for key, mult in terms.items():
                if not mult.is_zero():
                    cleaned[key] = mult
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("RadicalCoefficient is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rational(cls, value) -> "RadicalCoefficient":
        rf = _as_rf(value)
        return cls({_UNIT_KEY: rf}) if not rf.is_zero() else cls()

    @classmethod
    def zero(cls) -> "RadicalCoefficient":
        return cls()

    @classmethod
    def one(cls) -> "RadicalCoefficient":
        return cls.from_rational(1)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return all(k == _UNIT_KEY for k in self.terms)

    def rational_part(self) -> RationalFunction:
        """The whole coefficient as a RationalFunction; raises if irrational."""
        if not self.is_rational():
            raise RadicalComparisonUnsupported(
                f"{self} has irrational terms")
        return self.terms.get(_UNIT_KEY, _RF_ZERO)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "RadicalCoefficient":
        other = _as_radical(other)
        merged = dict(self.terms)
        for key, mult in other.terms.items():
            cur = merged.get(key)
            merged[key] = mult if cur is None else cur + mult
        return RadicalCoefficient(merged)

    __radd__ = __add__

    def __neg__(self) -> "RadicalCoefficient":
        return RadicalCoefficient({k: -m for k, m in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_radical(other))

    def __rsub__(self, other):
        return _as_radical(other) + (-self)

    def __mul__(self, other) -> "RadicalCoefficient":
        other = _as_radical(other)
        out: dict[RadicandKey, RationalFunction] = {}
        for k1, m1 in self.terms.items():
            for k2, m2 in other.terms.items():
                m = m1 * m2
                if k1 == k2:
                    key = _UNIT_KEY
                    if k1 != _UNIT_KEY:
                        m = m * RationalFunction(_p_from_ints(k1))
                elif k1 == _UNIT_KEY:
                    key = k2
                elif k2 == _UNIT_KEY:
                    key = k1
                else:
                    prod = _p_mul(_p_from_ints(k1), _p_from_ints(k2))
                    extra, key = _canonical_sqrt(prod)
                    m = m * extra
                cur = out.get(key)
                out[key] = m if cur is None else cur + m
        return RadicalCoefficient(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RadicalCoefficient":
        other = _as_radical(other)
        if other.is_zero():
            raise DivisionByZero("division by zero coefficient")
        if len(other.terms) > 1:
            raise UnsupportedRadicalDivision(
                f"cannot divide by multi-term radical {other}")
        (key, mult), = other.terms.items()
        if key == _UNIT_KEY:
            return RadicalCoefficient(
                {k: m / mult for k, m in self.terms.items()})
        # 1/(m sqrt(r)) = sqrt(r) / (m r)
        r = RationalFunction(_p_from_ints(key))
        return self * RadicalCoefficient({key: _RF_ONE / (mult * r)})

    def __rtruediv__(self, other):
        return _as_radical(other) / self

    # -- evaluation ---------------------------------------------------------

    def eval_at(self, n: int | Fraction) -> dict[int, Fraction]:
        """Exact value at N=n as {squarefree integer radicand: rational}.

        The key 1 holds the rational part; {} is zero.  A key d != 1
        contributes value * sqrt(d); negative d is kept formal.
        """
        out: dict[int, Fraction] = {}
        for key, mult in self.terms.items():
            m = mult.eval_at(n)
            if key != _UNIT_KEY:
                r = _p_eval(_p_from_ints(key), Fraction(n))
                if r == 0:
                    continue
                sign = 1 if r > 0 else -1
                r = abs(r)
                s_num, d_num = _int_square_split(r.numerator)
                s_den, d_den = _int_square_split(r.denominator)
                # sqrt(dn/dd) = sqrt(dn*dd)/dd
                m = m * Fraction(s_num, s_den * d_den)
                d = sign * d_num * d_den
            else:
                d = 1
            if m == 0:
                continue
            if d == 1:
                out[1] = out.get(1, Fraction(0)) + m
            else:
                out[d] = out.get(d, Fraction(0)) + m
        return {d: v for d, v in out.items() if v != 0}

    def eval_rational(self, n: int | Fraction) -> Fraction:
        """Exact rational value at N=n; raises if irrational there."""
        vals = self.eval_at(n)
        if set(vals) - {1}:
            raise RadicalComparisonUnsupported(
                f"{self} is irrational at N={n}")
        return vals.get(1, Fraction(0))

    def eval_float(self, n: int | Fraction) -> float:
        total = 0.0
        for d, v in self.eval_at(n).items():
            if d < 0:
                raise RadicalComparisonUnsupported(
                    f"negative radicand {d} at N={n}")
            total += float(v) * math.sqrt(d)
        return total

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, RationalFunction)):
            other = _as_radical(other)
        if not isinstance(other, RadicalCoefficient):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=lambda k: (len(k), k)):
            mult = self.terms[key]
            if key == _UNIT_KEY:
                parts.append(repr(mult))
            else:
                parts.append(f"({mult!r})*sqrt({_poly_str(_p_from_ints(key))})")
        return " + ".join(parts)

    def to_json(self) -> list:
        items = sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
        return [{"radicand": list(key), "multiplier": mult.to_json()}
                for key, mult in items]

    @classmethod
    def from_json(cls, data) -> "RadicalCoefficient":
        terms = {}
        for item in data:
            key = tuple(int(c) for c in item["radicand"])
            terms[key] = RationalFunction.from_json(item["multiplier"])
        return cls(terms)


def _as_radical(x) -> RadicalCoefficient:
    if isinstance(x, RadicalCoefficient):
        return x
    return RadicalCoefficient.from_rational(_as_rf(x))


def sqrt(value: RationalFunction | int | Fraction) -> RadicalCoefficient:
    """Canonical square root of a nonzero rational function.

    sqrt(p/q) is normalized to sqrt(p*q)/q before squarefree extraction,
    so the stored radicand is always a polynomial.
    """
    rf = _as_rf(value)
    if rf.is_zero():
        raise ZeroRadicand("square root of zero")
    poly = _p_mul(rf.num, rf.den)
    mult, key = _canonical_sqrt(poly)
    den = RationalFunction(rf.den)
    return RadicalCoefficient({key: mult / den})


# Convenience handles used throughout the package.
N = RationalFunction.variable()
ZERO = RadicalCoefficient.zero()
ONE = RadicalCoefficient.one()


def rf(num, den=(1,)) -> RationalFunction:
    """Shorthand: build a RationalFunction from integer coefficient lists."""
    return RationalFunction.from_coeff_lists(num, den)
