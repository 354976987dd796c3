"""Exact coefficient arithmetic.

Coefficients are arbitrary-precision rationals (stdlib ``fractions.Fraction``,
re-exported as ``Rational``).  :class:`ExactPoly` is a sparse polynomial in the
three commuting indeterminates ``t``, ``q`` and ``alpha``; :class:`XPoly` is a
polynomial in the main variable ``x`` whose coefficients are ``ExactPoly``
values.  Every value is immutable and every operation is exact, with no floats
enter anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

Rational = Fraction

CoeffLike = Union[int, Fraction]
Key = tuple[int, int, int]  # exponents of (t, q, alpha)

_VAR_NAMES = ("t", "q", "alpha")
_VAR_INDEX = {"t": 0, "q": 1, "alpha": 2}


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a remainder where an exact quotient was required."""


def _norm_coeff(value) -> CoeffLike:
    """Validate a coefficient and collapse integral Fractions to int."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    raise TypeError(f"exact coefficient expected, got {type(value).__name__!s}")


def _grlex(key: Key) -> tuple[int, Key]:
    # graded-lex: total degree first, then lexicographic on (t, q, alpha)
    return (key[0] + key[1] + key[2], key)


class ExactPoly:
    """Sparse exact polynomial in t, q, alpha.

    Terms are stored as a map from exponent triples to nonzero rational
    coefficients.  Instances are immutable; arithmetic returns new objects.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Key, CoeffLike] | None = None):
        clean: dict[Key, CoeffLike] = {}
        if terms:
            for key, value in terms.items():
                if (
                    not isinstance(key, tuple)
                    or len(key) != 3
                    or any(not isinstance(e, int) or e < 0 for e in key)
                ):
                    raise ValueError(f"bad exponent triple: {key!r}")
                coeff = _norm_coeff(value)
                if coeff:
                    clean[key] = coeff
        self._terms = clean

    @classmethod
    def _from_raw(cls, terms: dict[Key, CoeffLike]) -> "ExactPoly":
        """Trusted constructor: keys already valid, zeros possibly present."""
        p = object.__new__(cls)
        p._terms = {k: v for k, v in terms.items() if v}
        return p

    @classmethod
    def zero(cls) -> "ExactPoly":
        return cls._from_raw({})

    @classmethod
    def one(cls) -> "ExactPoly":
        return cls._from_raw({(0, 0, 0): 1})

    @classmethod
    def constant(cls, value: CoeffLike) -> "ExactPoly":
        return cls._from_raw({(0, 0, 0): _norm_coeff(value)})

    @classmethod
    def monomial(cls, coeff: CoeffLike, t: int = 0, q: int = 0, alpha: int = 0) -> "ExactPoly":
        if min(t, q, alpha) < 0:
            raise ValueError("negative exponent")
        return cls._from_raw({(t, q, alpha): _norm_coeff(coeff)})

    @classmethod
    def variable(cls, name: str) -> "ExactPoly":
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}")
        key = [0, 0, 0]
        key[_VAR_INDEX[name]] = 1
        return cls._from_raw({tuple(key): 1})

    @classmethod
    def sum(cls, polys: Iterable["ExactPoly"]) -> "ExactPoly":
        acc: dict[Key, CoeffLike] = {}
        for p in polys:
            for key, coeff in p._terms.items():
                acc[key] = acc.get(key, 0) + coeff
        return cls._from_raw(acc)

    # -- inspection ---------------------------------------------------------

    def terms(self) -> Iterator[tuple[Key, CoeffLike]]:
        """Terms in descending graded-lex order."""
        for key in sorted(self._terms, key=_grlex, reverse=True):
            yield key, self._terms[key]

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        """Largest total degree among terms; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(k[0] + k[1] + k[2] for k in self._terms)

    def leading(self) -> tuple[Key, CoeffLike]:
        """Leading (key, coeff) under graded-lex; errors on zero."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        key = max(self._terms, key=_grlex)
        return key, self._terms[key]

    def coefficient(self, t: int = 0, q: int = 0, alpha: int = 0) -> CoeffLike:
        return self._terms.get((t, q, alpha), 0)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, 0) + coeff
        return ExactPoly._from_raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly._from_raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, 0) - coeff
        return ExactPoly._from_raw(acc)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        acc: dict[Key, CoeffLike] = {}
        for (t1, q1, a1), c1 in a.items():
            for (t2, q2, a2), c2 in b.items():
                key = (t1 + t2, q1 + q2, a1 + a2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return ExactPoly._from_raw(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ExactPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, divisor: "ExactPoly") -> "ExactPoly":
        """Exact quotient self / divisor under graded-lex long division.

        Raises InexactDivisionError when any step leaves a term the divisor's
        leading monomial cannot absorb, or when a nonzero remainder survives.
        """
        divisor = _coerce(divisor)
        if divisor is NotImplemented:
            raise TypeError("divisor must be an ExactPoly or exact scalar")
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        (lk, lc) = divisor.leading()
        rem = dict(self._terms)
        quo: dict[Key, CoeffLike] = {}
        while rem:
            rkey = max(rem, key=_grlex)
            rcoeff = rem[rkey]
            qkey = (rkey[0] - lk[0], rkey[1] - lk[1], rkey[2] - lk[2])
            if min(qkey) < 0:
                raise InexactDivisionError(
                    f"{self.to_text()} is not divisible by {divisor.to_text()}"
                )
            qcoeff = _norm_coeff(Fraction(rcoeff) / Fraction(lc))
            quo[qkey] = qcoeff
            for (dt, dq, da), dcoeff in divisor._terms.items():
                key = (qkey[0] + dt, qkey[1] + dq, qkey[2] + da)
                val = rem.get(key, 0) - qcoeff * dcoeff
                if val:
                    rem[key] = val
                else:
                    rem.pop(key, None)
        return ExactPoly._from_raw(quo)

    def substitute(self, bindings: Mapping[str, Union[CoeffLike, "ExactPoly"]]) -> "ExactPoly":
        """Replace any subset of t, q, alpha by exact scalars or polynomials."""
        subs: dict[int, ExactPoly] = {}
        for name, value in bindings.items():
            if name not in _VAR_INDEX:
                raise ValueError(f"unknown variable {name!r}")
            subs[_VAR_INDEX[name]] = value if isinstance(value, ExactPoly) else ExactPoly.constant(value)
        if not subs:
            return self
        total = ExactPoly.zero()
        pow_cache: dict[tuple[int, int], ExactPoly] = {}
        for key, coeff in self._terms.items():
            kept = tuple(0 if i in subs else key[i] for i in range(3))
            piece = ExactPoly._from_raw({kept: coeff})
            for i, repl in subs.items():
                e = key[i]
                if e == 0:
                    continue
                cached = pow_cache.get((i, e))
                if cached is None:
                    cached = repl ** e
                    pow_cache[(i, e)] = cached
                piece = piece * cached
            total = total + piece
        return total

    # -- text ----------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical rendering: descending graded-lex, '+'/'-' joined."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for key, coeff in self.terms():
            body = _term_body(key, coeff)
            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append((" + " if coeff > 0 else " - ") + body)
        return "".join(parts)

    # -- protocol -------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, ExactPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ExactPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if not self._terms:
            return hash(0)
        if len(self._terms) == 1 and (0, 0, 0) in self._terms:
            return hash(self._terms[(0, 0, 0)])
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"ExactPoly({self.to_text()!r})"


def _coerce(value):
    if isinstance(value, ExactPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return ExactPoly.constant(value)
    return NotImplemented


def _term_body(key: Key, coeff: CoeffLike) -> str:
    mag = coeff if coeff > 0 else -coeff
    factors = []
    if mag != 1:
        factors.append(str(mag))
    for name, e in zip(_VAR_NAMES, key):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    if not factors:
        return str(mag)
    return "*".join(factors)


T = ExactPoly.variable("t")
Q = ExactPoly.variable("q")
ALPHA = ExactPoly.variable("alpha")
ZERO = ExactPoly.zero()
ONE = ExactPoly.one()


def q_integer(n: int) -> ExactPoly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError("q-integer needs n >= 0")
    return ExactPoly._from_raw({(0, j, 0): 1 for j in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> ExactPoly:
    """[n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1."""
    if n < 0:
        raise ValueError("q-factorial needs n >= 0")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_integer(n)


class XPoly:
    """Polynomial in x with ExactPoly coefficients, dense by degree."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[ExactPoly | CoeffLike] = ()):
        cleaned = [c if isinstance(c, ExactPoly) else ExactPoly.constant(c) for c in coeffs]
        while cleaned and cleaned[-1].is_zero:
            cleaned.pop()
        self._coeffs = tuple(cleaned)

    @classmethod
    def zero(cls) -> "XPoly":
        return cls(())

    @classmethod
    def one(cls) -> "XPoly":
        return cls((ONE,))

    @classmethod
    def x(cls) -> "XPoly":
        return cls((ZERO, ONE))

    @property
    def coeffs(self) -> tuple[ExactPoly, ...]:
        return self._coeffs

    def degree(self) -> int:
        """Degree in x; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coefficient(self, d: int) -> ExactPoly:
        if 0 <= d < len(self._coeffs):
            return self._coeffs[d]
        return ZERO

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] = merged[i] + c
        return XPoly(merged)

    def __neg__(self):
        return XPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return XPoly.zero()
        out = [ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other._coeffs):
                if b.is_zero:
                    continue
                out[i + j] = out[i + j] + a * b
        return XPoly(out)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = XPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, factor: ExactPoly | CoeffLike) -> "XPoly":
        f = factor if isinstance(factor, ExactPoly) else ExactPoly.constant(factor)
        return XPoly(tuple(c * f for c in self._coeffs))

    def substitute(self, bindings) -> "XPoly":
        return XPoly(tuple(c.substitute(bindings) for c in self._coeffs))

    def to_text(self) -> str:
        if not self._coeffs:
            return "0"
        rendered: list[tuple[bool, str]] = []  # (negated, body)
        for d in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[d]
            if c.is_zero:
                continue
            xpart = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
            ctext = c.to_text()
            negated = ctext.startswith("-")
            if negated:
                c = -c
                ctext = c.to_text()
            single = len(c._terms) == 1
            if not xpart:
                body = ctext if single else f"({ctext})"
            elif ctext == "1":
                body = xpart
            elif single:
                body = f"{ctext}*{xpart}"
            else:
                body = f"({ctext})*{xpart}"
            rendered.append((negated, body))
        if not rendered:
            return "0"
        out = ("-" if rendered[0][0] else "") + rendered[0][1]
        for negated, body in rendered[1:]:
            out += (" - " if negated else " + ") + body
        return out

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"XPoly({self.to_text()!r})"
