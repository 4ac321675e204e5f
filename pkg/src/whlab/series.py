"""Noncommutative power series truncated at a total-degree cap.

A monomial is a tuple of letter indices; the empty tuple is the unit.
Series store a sparse coefficient map with no zero entries and nothing
above the cap.  The cap travels with the value: operations on series
with different caps or alphabets raise instead of silently truncating.
"""

from __future__ import annotations

from .errors import CapMismatch, CharacteristicError
from .fields import Field, same_field

Monomial = tuple          # tuple[int, ...]


def mono_key(m: Monomial):
    """Canonical (degree, lexicographic) sort key."""
    return (len(m), m)


class TruncatedSeries:
    __slots__ = ("field", "n_letters", "cap", "coeffs")

    def __init__(self, field: Field, n_letters: int, cap: int, coeffs=None):
        if cap < 0:
            raise ValueError("cap must be >= 0")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n_letters", n_letters)
        object.__setattr__(self, "cap", cap)
        clean = {}
        for m, c in (coeffs or {}).items():
            m = tuple(m)
            if len(m) > cap:
                continue
            if any(i < 0 or i >= n_letters for i in m):
                raise ValueError(f"letter index out of range in {m}")
            c = field.of(c)
            if not field.is_zero(c):
                clean[m] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, *_):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, field, n_letters, cap):
        return cls(field, n_letters, cap)

    @classmethod
    def one(cls, field, n_letters, cap):
        return cls(field, n_letters, cap, {(): 1})

    @classmethod
    def letter(cls, field, n_letters, cap, i):
        return cls(field, n_letters, cap, {(i,): 1})

    # -- helpers --------------------------------------------------------------

    def _compat(self, other: "TruncatedSeries"):
        same_field(self.field, other.field)
        if self.cap != other.cap or self.n_letters != other.n_letters:
            raise CapMismatch(
                f"cap/alphabet mismatch: (N={self.cap}, n={self.n_letters}) vs "
                f"(N={other.cap}, n={other.n_letters})")

    def constant_term(self):
        return self.coeffs.get((), self.field.zero)

    def coefficient(self, mono: Monomial):
        return self.coeffs.get(tuple(mono), self.field.zero)

    def valuation(self):
        """Lowest degree with a nonzero coefficient (None for the zero series)."""
        if not self.coeffs:
            return None
        return min(len(m) for m in self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries)
                and self.field == other.field
                and self.n_letters == other.n_letters
                and self.cap == other.cap
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.n_letters, self.cap, frozenset(self.coeffs.items())))

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        self._compat(other)
        f = self.field
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            v = f.add(out.get(m, f.zero), c)
            if f.is_zero(v):
                out.pop(m, None)
            else:
                out[m] = v
        return TruncatedSeries(f, self.n_letters, self.cap, out)

    def __neg__(self):
        f = self.field
        return TruncatedSeries(f, self.n_letters, self.cap,
                               {m: f.neg(c) for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        f = self.field
        c = f.of(c)
        return TruncatedSeries(f, self.n_letters, self.cap,
                               {m: f.mul(c, v) for m, v in self.coeffs.items()})

    def __mul__(self, other):
        return series_mul(self, other)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Concatenation product, degrees above the cap discarded."""
    a._compat(b)
    f = a.field
    out: dict = {}
    for m1, c1 in a.coeffs.items():
        d1 = len(m1)
        for m2, c2 in b.coeffs.items():
            if d1 + len(m2) > a.cap:
                continue
            m = m1 + m2
            v = f.add(out.get(m, f.zero), f.mul(c1, c2))
            if f.is_zero(v):
                out.pop(m, None)
            else:
                out[m] = v
    return TruncatedSeries(f, a.n_letters, a.cap, out)


def _check_char_for_denominators(field: Field, cap: int, what: str):
    # k! and k for k <= cap appear as denominators; in char p that forces
    # a division by p as soon as cap >= p.
    if field.char != 0 and cap >= field.char:
        raise CharacteristicError(
            f"{what} needs divisions by integers up to {cap}, "
            f"impossible in characteristic {field.char}")


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """exp(a) = sum a^n / n!; requires zero constant term."""
    f = a.field
    if not f.is_zero(a.constant_term()):
        raise ValueError("series_exp requires zero constant term")
    _check_char_for_denominators(f, a.cap, "exp")
    result = TruncatedSeries.one(f, a.n_letters, a.cap)
    term = TruncatedSeries.one(f, a.n_letters, a.cap)
    fact = 1
    for n in range(1, a.cap + 1):
        term = series_mul(term, a)
        if not term.coeffs:
            break
        fact *= n
        result = result + term.scale(f.div_int(f.one, fact))
    return result


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    """log(1+u) = sum (-1)^{n+1} u^n / n; requires constant term 1."""
    f = a.field
    if a.constant_term() != f.one:
        raise ValueError("series_log requires constant term 1")
    _check_char_for_denominators(f, a.cap, "log")
    u = a - TruncatedSeries.one(f, a.n_letters, a.cap)
    result = TruncatedSeries.zero(f, a.n_letters, a.cap)
    term = TruncatedSeries.one(f, a.n_letters, a.cap)
    for n in range(1, a.cap + 1):
        term = series_mul(term, u)
        if not term.coeffs:
            break
        c = f.div_int(f.one if n % 2 == 1 else f.of(-1), n)
        result = result + term.scale(c)
    return result


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with constant term 1."""
    f = a.field
    if a.constant_term() != f.one:
        raise ValueError("series_inverse requires constant term 1")
    u = TruncatedSeries.one(f, a.n_letters, a.cap) - a
    result = TruncatedSeries.one(f, a.n_letters, a.cap)
    term = TruncatedSeries.one(f, a.n_letters, a.cap)
    for _ in range(a.cap):
        term = series_mul(term, u)
        if not term.coeffs:
            break
        result = result + term
    return result


def render_series(a: TruncatedSeries, letter_names=None) -> str:
    """Canonical text: terms sorted by (degree, lex), e.g. `1 + X0 + 1/2*X0.X0`."""
    if not a.coeffs:
        return "0"
    names = letter_names or [f"X{i}" for i in range(a.n_letters)]
    f = a.field
    parts = []
    for m in sorted(a.coeffs, key=mono_key):
        c = a.coeffs[m]
        mono = ".".join(names[i] for i in m)
        negative = (c < 0) if f.char == 0 else False
        mag = -c if negative else c
        if not m:
            body = f.format(mag)
        elif mag == f.one:
            body = mono
        else:
            body = f"{f.format(mag)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(("- " if negative else "+ ") + body)
    return " ".join(parts)
