"""Exact scalars: rational functions in ``q`` and cyclotomic numbers.

Two coefficient fields are used throughout the library:

* :class:`RatScalar` -- elements of Q(q), stored as a reduced fraction of
  Laurent polynomials in canonical form, so that equality is structural.
* :class:`CycloScalar` -- elements of Q(zeta_2n), stored in the power basis
  modulo the 2n-th cyclotomic polynomial.

Polynomial arithmetic (products, gcds, extended Euclid) is delegated to
python-flint; everything above that layer lives here.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from flint import fmpq, fmpq_poly, fmpz, fmpz_poly

from .errors import DenominatorVanishes, DivisionByZero, ParseError

__all__ = [
    "LaurentPoly",
    "RatScalar",
    "CycloScalar",
    "GenericRing",
    "CycloRing",
    "GENERIC",
    "cyclo_ring",
    "q",
    "qint",
    "qfact",
    "specialize",
    "parse_laurent",
    "parse_rat",
    "parse_cyclo",
    "euler_phi",
]


def _frac(c) -> Fraction:
    if isinstance(c, fmpq):
        return Fraction(int(c.p), int(c.q))
    return Fraction(int(c))


def _to_fmpq(c) -> fmpq:
    c = Fraction(c)
    return fmpq(c.numerator, c.denominator)


def _poly_to_dict(poly, shift: int) -> dict[int, Fraction]:
    out = {}
    for i, c in enumerate(poly.coeffs()):
        if c != 0:
            out[i + shift] = _frac(c)
    return out


def _dict_to_poly(terms: dict[int, Fraction]) -> tuple[fmpq_poly, int]:
    if not terms:
        return fmpq_poly(0), 0
    lo = min(terms)
    hi = max(terms)
    coeffs = [0] * (hi - lo + 1)
    for e, c in terms.items():
        coeffs[e - lo] = _to_fmpq(c)
    return fmpq_poly(coeffs), lo


# ---------------------------------------------------------------------------
# Laurent polynomials (the public, dictionary-shaped view)
# ---------------------------------------------------------------------------


class LaurentPoly:
    """Finite Laurent polynomial with exact rational coefficients.

    ``terms`` maps an integer exponent to a nonzero :class:`~fractions.Fraction`.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[int(e)] = c
        self._terms = clean

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        return min(self._terms) if self._terms else 0

    def max_exp(self) -> int:
        return max(self._terms) if self._terms else 0

    def __add__(self, other):
        other = _as_laurent(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) - self

    def __mul__(self, other):
        other = _as_laurent(other)
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def render(self, var: str = "q") -> str:
        return _render_terms(self._terms, var)

    __str__ = render

    def __repr__(self):
        return f"LaurentPoly({self.render()!r})"


def _as_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly({0: Fraction(x)})


def _render_terms(terms: dict[int, Fraction], var: str) -> str:
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms):
        c = terms[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_TERM = r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*(\*)?\s*({var}(?:\^\s*(-?\d+))?)?\s*"


def parse_laurent(text: str, var: str = "q") -> LaurentPoly:
    """Parse ``"q^-2 + 1 + q^2"``-style text into a :class:`LaurentPoly`."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial")
    pat = re.compile(_TERM.format(var=re.escape(var)))
    pos = 0
    terms: dict[int, Fraction] = {}
    first = True
    while pos < len(s):
        m = pat.match(s, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"cannot parse {text!r} at offset {pos}")
        sign, coef, star, mono, exp = m.groups()
        if coef is None and mono is None:
            raise ParseError(f"dangling operator in {text!r}")
        if sign is None and not first:
            raise ParseError(f"missing operator in {text!r}")
        if star and (coef is None or mono is None):
            raise ParseError(f"misplaced '*' in {text!r}")
        c = Fraction(coef) if coef is not None else Fraction(1)
        if sign == "-":
            c = -c
        e = 0
        if mono is not None:
            e = int(exp) if exp is not None else 1
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
        first = False
    return LaurentPoly(terms)


def _split_fraction(text: str):
    s = text.strip()
    if not s.startswith("("):
        return s, None
    depth = 0
    for i, ch in enumerate(s):
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0:
            head, rest = s[1:i], s[i + 1 :].strip()
            break
    else:
        raise ParseError(f"unbalanced parentheses in {text!r}")
    if not rest:
        return head, None
    if not rest.startswith("/"):
        raise ParseError(f"expected '/' in {text!r}")
    den = rest[1:].strip()
    if den.startswith("(") and den.endswith(")"):
        den = den[1:-1]
    return head, den


def parse_rat(text: str) -> "RatScalar":
    """Inverse of ``str(RatScalar)``: accepts ``"num"`` or ``"(num)/(den)"``."""
    num, den = _split_fraction(text)
    n = parse_laurent(num, "q")
    d = parse_laurent(den, "q") if den is not None else LaurentPoly({0: 1})
    if d.is_zero():
        raise ParseError(f"zero denominator in {text!r}")
    return RatScalar.from_laurent(n, d)


def parse_cyclo(text: str, root: int) -> "CycloScalar":
    """Parse ``"c0 + c1*z + ..."`` as an element of Q(zeta_{2*root})."""
    poly = parse_laurent(text, "z")
    order = 2 * root
    out = CycloScalar.zero(order)
    z = CycloScalar.zeta(order)
    for e, c in poly.terms.items():
        out = out + z ** e * CycloScalar.from_rational(order, c)
    return out


# ---------------------------------------------------------------------------
# Rational functions in q
# ---------------------------------------------------------------------------

_QONE = fmpq_poly([1])
_ZONE = fmpz_poly([1])


class RatScalar:
    """Element of Q(q) in canonical form.

    The value is ``q**shift * num(q) / den(q)`` where ``num`` is a rational
    polynomial with nonzero constant term, ``den`` is a primitive integer
    polynomial with positive constant term, and ``gcd(num, den) == 1``.
    """

    __slots__ = ("_num", "_shift", "_den", "_hash")

    def __init__(self, value=0):
        if isinstance(value, RatScalar):
            self._num, self._shift, self._den = value._num, value._shift, value._den
        else:
            c = Fraction(value)
            self._num = fmpq_poly([_to_fmpq(c)]) if c else fmpq_poly(0)
            self._shift = 0
            self._den = _ZONE
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def _raw(cls, num, shift, den) -> "RatScalar":
        obj = object.__new__(cls)
        obj._num, obj._shift, obj._den, obj._hash = num, shift, den, None
        return obj

    @classmethod
    def _canon(cls, num: fmpq_poly, shift: int, den, reduce: bool = True) -> "RatScalar":
        if num.is_zero():
            return ZERO
        if den.degree() == 0:
            c = den[0]
            if c != 1:
                num = num / fmpq(c)
            den = _ZONE
        else:
            if reduce:
                dq = den if isinstance(den, fmpq_poly) else fmpq_poly(den)
                g = num.gcd(dq)
                if g.degree() > 0:
                    num = num // g
                    den = dq // g
            if isinstance(den, fmpq_poly):
                dd = den.denom()
                den = den.numer()
                if dd != 1:
                    num = num * dd
            if den.degree() == 0:
                num = num / fmpq(den[0])
                den = _ZONE
            else:
                c = den.content()
                if den[0] < 0:
                    c = -c
                if c != 1:
                    den = den // c
                    num = num / fmpq(c)
        if num[0] == 0:
            v = 1
            while num[v] == 0:
                v += 1
            num = num.right_shift(v)
            shift += v
        return cls._raw(num, shift, den)

    @classmethod
    def from_laurent(cls, num: LaurentPoly, den: LaurentPoly | None = None) -> "RatScalar":
        n, ns = _dict_to_poly(num.terms)
        if den is None:
            return cls._canon(n, ns, _ZONE)
        d, ds = _dict_to_poly(den.terms)
        if d.is_zero():
            raise DivisionByZero("zero denominator")
        return cls._canon(n, ns - ds, d)

    @classmethod
    def q_power(cls, k: int) -> "RatScalar":
        return cls._raw(fmpq_poly([1]), int(k), _ZONE)

    # -- accessors --------------------------------------------------------

    @property
    def num(self) -> LaurentPoly:
        return LaurentPoly(_poly_to_dict(self._num, self._shift))

    @property
    def den(self) -> LaurentPoly:
        return LaurentPoly(_poly_to_dict(fmpq_poly(self._den), 0))

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def __bool__(self):
        return not self._num.is_zero()

    def is_laurent(self) -> bool:
        return self._den.degree() == 0

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        if self._num.is_zero():
            return other
        if other._num.is_zero():
            return self
        s = min(self._shift, other._shift)
        na = self._num if self._shift == s else self._num.left_shift(self._shift - s)
        nb = other._num if other._shift == s else other._num.left_shift(other._shift - s)
        if self._den == other._den:
            if self._den.degree() == 0:
                return RatScalar._canon(na + nb, s, _ZONE, reduce=False)
            return RatScalar._canon(na + nb, s, self._den)
        return RatScalar._canon(na * other._den + nb * self._den, s, self._den * other._den)

    __radd__ = __add__

    def __neg__(self):
        if self._num.is_zero():
            return self
        return RatScalar._raw(-self._num, self._shift, self._den)

    def __sub__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        if self._num.is_zero() or other._num.is_zero():
            return ZERO
        den = self._den * other._den
        both_laurent = den.degree() == 0
        return RatScalar._canon(
            self._num * other._num, self._shift + other._shift, den, reduce=not both_laurent
        )

    __rmul__ = __mul__

    def inv(self) -> "RatScalar":
        if self._num.is_zero():
            raise DivisionByZero("inverse of zero")
        # q^-s * den / num; num already has nonzero constant term
        return RatScalar._canon(fmpq_poly(self._den), -self._shift, self._num, reduce=False)

    def __truediv__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k: int):
        k = int(k)
        if k < 0:
            return self.inv() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def bar(self) -> "RatScalar":
        """Image under the field involution ``q -> q^-1``."""
        if self._num.is_zero():
            return self
        n = fmpq_poly(list(reversed(self._num.coeffs())))
        d = fmpq_poly(list(reversed(fmpq_poly(self._den).coeffs())))
        shift = -self._shift - self._num.degree() + self._den.degree()
        return RatScalar._canon(n, shift, d, reduce=False)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return (
            self._shift == other._shift and self._num == other._num and self._den == other._den
        )

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._shift, str(self._num), str(self._den)))
        return self._hash

    # -- text -------------------------------------------------------------

    def __str__(self):
        num = _render_terms(_poly_to_dict(self._num, self._shift), "q")
        if self._den.degree() == 0:
            return num
        den = _render_terms(_poly_to_dict(fmpq_poly(self._den), 0), "q")
        return f"({num})/({den})"

    def __repr__(self):
        return f"RatScalar({str(self)!r})"


def _coerce_rat(x):
    if isinstance(x, RatScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return RatScalar(x)
    return NotImplemented


ZERO = RatScalar._raw(fmpq_poly(0), 0, _ZONE)
ONE = RatScalar._raw(fmpq_poly([1]), 0, _ZONE)
q = RatScalar.q_power(1)


@lru_cache(maxsize=None)
def qint(n: int) -> RatScalar:
    """Quantum integer ``[n] = (q^n - q^-n) / (q - q^-1)``."""
    n = int(n)
    if n == 0:
        return ZERO
    if n < 0:
        return -qint(-n)
    coeffs = [0] * (2 * n - 1)
    coeffs[::2] = [1] * n
    return RatScalar._raw(fmpq_poly(coeffs), 1 - n, _ZONE)


@lru_cache(maxsize=None)
def qfact(n: int) -> RatScalar:
    """Quantum factorial ``[n]! = [n][n-1]...[1]``, with ``[0]! = 1``."""
    if n < 0:
        raise ValueError(f"quantum factorial of negative integer {n}")
    if n == 0:
        return ONE
    return qfact(n - 1) * qint(n)


# ---------------------------------------------------------------------------
# Cyclotomic numbers
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _cyclotomic(order: int) -> fmpq_poly:
    return fmpq_poly(fmpz_poly.cyclotomic(order))


def euler_phi(m: int) -> int:
    return _cyclotomic(m).degree()


class CycloScalar:
    """Element of Q(zeta) with zeta a primitive ``order``-th root of unity."""

    __slots__ = ("_order", "_poly", "_hash")

    def __init__(self, order: int, coeffs=()):
        order = int(order)
        if order < 1:
            raise ValueError("order must be positive")
        poly = fmpq_poly([_to_fmpq(c) for c in coeffs]) if coeffs else fmpq_poly(0)
        self._order = order
        self._poly = poly % _cyclotomic(order)
        self._hash = None

    @classmethod
    def _raw(cls, order: int, poly: fmpq_poly) -> "CycloScalar":
        obj = object.__new__(cls)
        obj._order, obj._poly, obj._hash = order, poly, None
        return obj

    @classmethod
    def _reduce(cls, order: int, poly: fmpq_poly) -> "CycloScalar":
        mod = _cyclotomic(order)
        if poly.degree() >= mod.degree():
            poly = poly % mod
        return cls._raw(order, poly)

    @classmethod
    def zero(cls, order: int) -> "CycloScalar":
        return cls._raw(order, fmpq_poly(0))

    @classmethod
    def one(cls, order: int) -> "CycloScalar":
        return cls._reduce(order, fmpq_poly([1]))

    @classmethod
    def zeta(cls, order: int) -> "CycloScalar":
        return cls._reduce(order, fmpq_poly([0, 1]))

    @classmethod
    def from_rational(cls, order: int, c) -> "CycloScalar":
        return cls._reduce(order, fmpq_poly([_to_fmpq(c)]))

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Power-basis coordinates, padded to length ``euler_phi(order)``."""
        n = euler_phi(self._order)
        cs = [_frac(c) for c in self._poly.coeffs()]
        return tuple(cs + [Fraction(0)] * (n - len(cs)))

    def is_zero(self) -> bool:
        return self._poly.is_zero()

    def __bool__(self):
        return not self._poly.is_zero()

    def _coerce(self, other):
        if isinstance(other, CycloScalar):
            if other._order != self._order:
                raise TypeError("cyclotomic scalars of different orders")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloScalar.from_rational(self._order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloScalar._raw(self._order, self._poly + other._poly)

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar._raw(self._order, -self._poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloScalar._raw(self._order, self._poly - other._poly)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloScalar._reduce(self._order, self._poly * other._poly)

    __rmul__ = __mul__

    def inv(self) -> "CycloScalar":
        if self._poly.is_zero():
            raise DivisionByZero("inverse of zero")
        g, s, _ = self._poly.xgcd(_cyclotomic(self._order))
        # Phi is irreducible, so g is a nonzero constant
        return CycloScalar._reduce(self._order, s / g[0])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k: int):
        k = int(k)
        if k < 0:
            return self.inv() ** (-k)
        out = CycloScalar.one(self._order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def bar(self) -> "CycloScalar":
        """Complex conjugate, i.e. ``zeta -> zeta^-1``."""
        out = CycloScalar.zero(self._order)
        zinv = _zeta_power(self._order, -1)
        acc = CycloScalar.one(self._order)
        for c in self._poly.coeffs():
            if c != 0:
                out = out + acc * CycloScalar._raw(self._order, fmpq_poly([c]))
            acc = acc * zinv
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloScalar.from_rational(self._order, other)
        if not isinstance(other, CycloScalar):
            return NotImplemented
        return self._order == other._order and self._poly == other._poly

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._order, str(self._poly)))
        return self._hash

    def __str__(self):
        return _render_terms(_poly_to_dict(self._poly, 0), "z")

    def __repr__(self):
        return f"CycloScalar({self._order}, {str(self)!r})"


@lru_cache(maxsize=None)
def _zeta_power(order: int, k: int) -> CycloScalar:
    k %= order
    return CycloScalar._reduce(order, fmpq_poly([0] * k + [1]))


def specialize(x, n: int) -> CycloScalar:
    """Evaluate ``x`` at ``q = exp(pi i / n)`` inside Q(zeta_2n).

    Raises :class:`DenominatorVanishes` if ``x`` has a pole there.
    """
    n = int(n)
    if n < 2:
        raise ValueError("root parameter must be at least 2")
    order = 2 * n
    if isinstance(x, CycloScalar):
        if x.order != order:
            raise TypeError("cyclotomic scalar of a different order")
        return x
    if isinstance(x, (int, Fraction)):
        return CycloScalar.from_rational(order, x)
    mod = _cyclotomic(order)
    den = fmpq_poly(x._den) % mod
    if den.is_zero():
        raise DenominatorVanishes(f"denominator of {x} vanishes at q = exp(pi i/{n})")
    num = CycloScalar._reduce(order, x._num % mod) * _zeta_power(order, x._shift)
    if x._den.degree() == 0:
        return num
    return num * CycloScalar._raw(order, den).inv()


# ---------------------------------------------------------------------------
# Coefficient rings used by the diagram engine
# ---------------------------------------------------------------------------


class GenericRing:
    """Q(q): the default coefficient field."""

    name = "generic"
    root = None
    scalar_type = RatScalar

    def __init__(self):
        self.zero = ZERO
        self.one = ONE
        self.loop = qint(2)

    def coerce(self, x) -> RatScalar:
        if isinstance(x, RatScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return RatScalar(x)
        raise TypeError(f"cannot use {type(x).__name__} as a generic scalar")

    def bar(self, x):
        return x.bar()

    # The compose kernel works over a common denominator so the inner loop is
    # pure integer-polynomial arithmetic; ``finish`` reduces once per term.

    def lift(self, coeffs):
        smin = min(c._shift for c in coeffs)
        common = _ZONE
        parts = []
        for c in coeffs:
            nz = c._num.numer()
            k = c._num.denom()
            den = c._den * k if k != 1 else c._den
            parts.append((nz, c._shift, den))
            if den != common:
                g = common.gcd(den)
                common = common * (den // g) if g != 1 else common * den
        work = []
        for nz, s, den in parts:
            w = nz * (common // den) if den != common else nz
            if s != smin:
                w = w.left_shift(s - smin)
            work.append(w)
        return work, (smin, common)

    def loop_weights(self, top: int) -> list:
        """Lifted ``d**l`` for ``l <= top``, all carrying a common factor ``q**top``."""
        return [_one_plus_q2_pow(ell).left_shift(top - ell) for ell in range(top + 1)]

    def finish(self, w, top: int, ctx_a, ctx_b) -> RatScalar:
        if w.is_zero():
            return ZERO
        return RatScalar._canon(fmpq_poly(w), ctx_a[0] + ctx_b[0] - top, ctx_a[1] * ctx_b[1])

    ctx_one = (0, _ZONE)

    def ctx_mul(self, ctx_a, ctx_b, top: int = 0):
        return (ctx_a[0] + ctx_b[0] - top, ctx_a[1] * ctx_b[1])

    def trim(self, w):
        return w

    def __repr__(self):
        return "GenericRing()"


@lru_cache(maxsize=None)
def _one_plus_q2_pow(ell: int) -> fmpz_poly:
    return fmpz_poly([1, 0, 1]) ** ell


class CycloRing:
    """Q(zeta_2n): Temperley-Lieb evaluated at ``q = exp(pi i / n)``."""

    name = "cyclo"
    scalar_type = CycloScalar

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("root parameter must be at least 2")
        self.root = n
        self.order = 2 * n
        self.zero = CycloScalar.zero(self.order)
        self.one = CycloScalar.one(self.order)
        z = CycloScalar.zeta(self.order)
        self.loop = z + z.inv()

    def coerce(self, x) -> CycloScalar:
        if isinstance(x, CycloScalar):
            if x.order != self.order:
                raise TypeError("cyclotomic scalar of a different order")
            return x
        return specialize(x, self.root)

    def bar(self, x):
        return x.bar()

    def lift(self, coeffs):
        return [c._poly for c in coeffs], None

    def loop_weights(self, top: int) -> list:
        return [(self.loop ** ell)._poly for ell in range(top + 1)]

    def finish(self, w, top: int, ctx_a, ctx_b) -> CycloScalar:
        return CycloScalar._reduce(self.order, w % _cyclotomic(self.order))

    ctx_one = None

    def ctx_mul(self, ctx_a, ctx_b, top: int = 0):
        return None

    def trim(self, w):
        return w % _cyclotomic(self.order)

    def __eq__(self, other):
        return isinstance(other, CycloRing) and other.root == self.root

    def __hash__(self):
        return hash(("cyclo", self.root))

    def __repr__(self):
        return f"CycloRing({self.root})"


GENERIC = GenericRing()


@lru_cache(maxsize=None)
def cyclo_ring(n: int) -> CycloRing:
    return CycloRing(n)


def ring_for(root: int | None):
    """``None`` selects generic q; an integer selects q = exp(pi i / root)."""
    return GENERIC if root is None else cyclo_ring(root)
