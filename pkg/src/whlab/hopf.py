"""The tensor Hopf algebra (shuffle × deconcatenation) and its duality
with truncated series, plus the Magnus embedding of free-group words.

Tensor elements live in the e-basis dual to the series X-basis; the
pairing is the plain dual-basis pairing and all convention bookkeeping
(exp in characteristic 0, 1+X in characteristic p) sits on the series
side inside `magnus_embed` and `series_coproduct`.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import CapMismatch
from .fields import Field, same_field
from .series import Monomial, TruncatedSeries, mono_key, series_exp, series_inverse, series_mul
from .words import GroupWord


class TensorElement:
    """Element of the tensor algebra on n letters (no truncation cap)."""

    __slots__ = ("field", "n_letters", "coeffs")

    def __init__(self, field: Field, n_letters: int, coeffs=None):
        clean = {}
        for m, c in (coeffs or {}).items():
            m = tuple(m)
            if any(i < 0 or i >= n_letters for i in m):
                raise ValueError(f"letter index out of range in {m}")
            c = field.of(c)
            if not field.is_zero(c):
                clean[m] = c
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n_letters", n_letters)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, *_):
        raise AttributeError("TensorElement is immutable")

    @classmethod
    def unit(cls, field, n_letters):
        return cls(field, n_letters, {(): 1})

    @classmethod
    def word(cls, field, n_letters, mono, c=1):
        return cls(field, n_letters, {tuple(mono): c})

    def _compat(self, other):
        same_field(self.field, other.field)
        if self.n_letters != other.n_letters:
            raise CapMismatch("alphabet mismatch")

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
        return TensorElement(f, self.n_letters, out)

    def __neg__(self):
        f = self.field
        return TensorElement(f, self.n_letters, {m: f.neg(c) for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        f = self.field
        c = f.of(c)
        return TensorElement(f, self.n_letters, {m: f.mul(c, v) for m, v in self.coeffs.items()})

    def __eq__(self, other):
        return (isinstance(other, TensorElement) and self.field == other.field
                and self.n_letters == other.n_letters and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.n_letters, frozenset(self.coeffs.items())))

    def max_degree(self):
        return max((len(m) for m in self.coeffs), default=0)

    def render(self, letter_names=None) -> str:
        if not self.coeffs:
            return "0"
        names = letter_names or [f"e{i}" for i in range(self.n_letters)]
        f = self.field
        parts = []
        for m in sorted(self.coeffs, key=mono_key):
            c = self.coeffs[m]
            mono = "".join(names[i] for i in m) if m else "1"
            negative = (c < 0) if f.char == 0 else False
            mag = -c if negative else c
            body = mono if (mag == f.one and m) else (f"{f.format(mag)}" if not m else f"{f.format(mag)}*{mono}")
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(("- " if negative else "+ ") + body)
        return " ".join(parts)


@lru_cache(maxsize=None)
def _shuffle_monomials(u: Monomial, v: Monomial) -> tuple:
    """Multiset of interleavings via ua∘vb = (u∘vb)a + (ua∘v)b; returns
    ((monomial, multiplicity), ...)."""
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out = {}
    for m, k in _shuffle_monomials(u[:-1], v):
        m2 = m + (u[-1],)
        out[m2] = out.get(m2, 0) + k
    for m, k in _shuffle_monomials(u, v[:-1]):
        m2 = m + (v[-1],)
        out[m2] = out.get(m2, 0) + k
    return tuple(sorted(out.items()))


def shuffle(a: TensorElement, b: TensorElement) -> TensorElement:
    """Bilinear extension of the interleaving product; commutative."""
    a._compat(b)
    f = a.field
    out = {}
    for m1, c1 in a.coeffs.items():
        for m2, c2 in b.coeffs.items():
            c = f.mul(c1, c2)
            for m, k in _shuffle_monomials(m1, m2):
                v = f.add(out.get(m, f.zero), f.mul(c, f.of(k)))
                if f.is_zero(v):
                    out.pop(m, None)
                else:
                    out[m] = v
    return TensorElement(f, a.n_letters, out)


def deconcatenate(a: TensorElement) -> dict:
    """Δ(e_I) = Σ_{JK=I} e_J ⊗ e_K, linearly extended.

    Returns a sparse map (left monomial, right monomial) -> coefficient.
    """
    f = a.field
    out = {}
    for m, c in a.coeffs.items():
        for i in range(len(m) + 1):
            key = (m[:i], m[i:])
            v = f.add(out.get(key, f.zero), c)
            if f.is_zero(v):
                out.pop(key, None)
            else:
                out[key] = v
    return out


def counit(a: TensorElement):
    return a.coeffs.get((), a.field.zero)


def antipode(a: TensorElement) -> TensorElement:
    """s(e_{i1..ik}) = (−1)^k e_{ik..i1}."""
    f = a.field
    out = {}
    for m, c in a.coeffs.items():
        m2 = tuple(reversed(m))
        v = c if len(m) % 2 == 0 else f.neg(c)
        out[m2] = f.add(out.get(m2, f.zero), v)
    return TensorElement(f, a.n_letters, out)


def coproduct_square(a: TensorElement):
    """(Δ⊗id)Δ and (id⊗Δ)Δ as sparse triple maps, for coassociativity checks."""
    f = a.field
    left, right = {}, {}
    for (u, v), c in deconcatenate(a).items():
        for i in range(len(u) + 1):
            key = (u[:i], u[i:], v)
            left[key] = f.add(left.get(key, f.zero), c)
        for i in range(len(v) + 1):
            key = (u, v[:i], v[i:])
            right[key] = f.add(right.get(key, f.zero), c)
    strip = lambda d: {k: x for k, x in d.items() if not f.is_zero(x)}
    return strip(left), strip(right)


def antipode_convolution(a: TensorElement) -> TensorElement:
    """m∘(s⊗id)∘Δ; equals ε(a)·1 by the antipode law."""
    f = a.field
    out = TensorElement(f, a.n_letters)
    for (u, v), c in deconcatenate(a).items():
        out = out + shuffle(antipode(TensorElement.word(f, a.n_letters, u)),
                            TensorElement.word(f, a.n_letters, v)).scale(c)
    return out


def primitive_defect(a: TensorElement) -> dict:
    """Δ(a) − a⊗ω − ω⊗a; empty iff a is primitive (and ε(a)=0)."""
    f = a.field
    d = deconcatenate(a)
    for m, c in a.coeffs.items():
        for key in ((m, ()), ((), m)):
            v = f.sub(d.get(key, f.zero), c)
            if f.is_zero(v):
                d.pop(key, None)
            else:
                d[key] = v
    return d


# -- the series side ----------------------------------------------------------


def magnus_embed(w: GroupWord, field: Field, n_letters: int, cap: int) -> TruncatedSeries:
    """Multiplicative embedding of a free-group word into truncated series.

    char 0:  x ↦ exp(X);  char p:  x ↦ 1+X, x⁻¹ ↦ Σ (−X)^n.
    """
    one = TruncatedSeries.one(field, n_letters, cap)
    result = one
    images = {}
    for g, e in w.letters:
        key = (g, e)
        if key not in images:
            X = TruncatedSeries.letter(field, n_letters, cap, g)
            if field.char == 0:
                images[key] = series_exp(X if e == 1 else -X)
            else:
                images[key] = (one + X) if e == 1 else series_inverse(one + X)
        result = series_mul(result, images[key])
    return result


def series_coproduct(fseries: TruncatedSeries, convention: str = "magnus") -> dict:
    """Coproduct on truncated series, extended as an algebra map.

    convention="magnus": the coproduct under which Magnus images of group
    words are group-like — primitive letters X⊗1 + 1⊗X in characteristic
    0 (group-likeness is carried by exp), plus the X⊗X term in
    characteristic p (so 1+X is group-like on the nose).

    convention="primitive": X⊗1 + 1⊗X in every characteristic; this is
    the unshuffle coproduct dual to the shuffle product.

    Returns a sparse map (left mono, right mono) -> coefficient with both
    sides capped at the series cap.
    """
    if convention not in ("magnus", "primitive"):
        raise ValueError(f"unknown coproduct convention {convention!r}")
    f = fseries.field
    cap = fseries.cap
    out = {}
    for m, c in fseries.coeffs.items():
        acc = {((), ()): f.one}
        for letter in m:
            parts = [((letter,), ()), ((), (letter,))]
            if convention == "magnus" and f.char != 0:
                parts.append(((letter,), (letter,)))
            nxt = {}
            for (l, r), v in acc.items():
                for dl, dr in parts:
                    nl, nr = l + dl, r + dr
                    if len(nl) > cap or len(nr) > cap:
                        continue
                    key = (nl, nr)
                    w = f.add(nxt.get(key, f.zero), v)
                    if f.is_zero(w):
                        nxt.pop(key, None)
                    else:
                        nxt[key] = w
            acc = nxt
        for key, v in acc.items():
            w = f.add(out.get(key, f.zero), f.mul(c, v))
            if f.is_zero(w):
                out.pop(key, None)
            else:
                out[key] = w
    return out


@lru_cache(maxsize=None)
def _infiltration_monomials(u: Monomial, v: Monomial) -> tuple:
    """ua ⋄ vb = (u⋄vb)a + (ua⋄v)b + [a=b](u⋄v)a — the overlapping shuffle."""
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out = {}
    for m, k in _infiltration_monomials(u[:-1], v):
        m2 = m + (u[-1],)
        out[m2] = out.get(m2, 0) + k
    for m, k in _infiltration_monomials(u, v[:-1]):
        m2 = m + (v[-1],)
        out[m2] = out.get(m2, 0) + k
    if u[-1] == v[-1]:
        for m, k in _infiltration_monomials(u[:-1], v[:-1]):
            m2 = m + (u[-1],)
            out[m2] = out.get(m2, 0) + k
    return tuple(sorted(out.items()))


def infiltration(a: TensorElement, b: TensorElement) -> TensorElement:
    """Pointwise product of regular functions in the 1+X convention.

    On the function algebra of a free pro-p group, (f·g)(w) = f(w)·g(w);
    on the e-basis this is the infiltration product, dual to the
    group-like series coproduct Δ(X) = X⊗1 + 1⊗X + X⊗X.
    """
    a._compat(b)
    f = a.field
    out = {}
    for m1, c1 in a.coeffs.items():
        for m2, c2 in b.coeffs.items():
            c = f.mul(c1, c2)
            for m, k in _infiltration_monomials(m1, m2):
                v = f.add(out.get(m, f.zero), f.mul(c, f.of(k)))
                if f.is_zero(v):
                    out.pop(m, None)
                else:
                    out[m] = v
    return TensorElement(f, a.n_letters, out)


def pairing(a: TensorElement, fser) -> object:
    """Dual-basis pairing ⟨e_I, X_J⟩ = δ_IJ, bilinear.

    The second argument is a TruncatedSeries, or a GroupWord which is
    first sent through `magnus_embed` at a cap covering a's degrees.
    """
    f = a.field
    if isinstance(fser, GroupWord):
        fser = magnus_embed(fser, f, a.n_letters, max(a.max_degree(), 1))
    same_field(f, fser.field)
    if fser.n_letters != a.n_letters:
        raise CapMismatch("alphabet mismatch")
    if a.max_degree() > fser.cap:
        raise CapMismatch("tensor element degree exceeds the series cap")
    acc = f.zero
    for m, c in a.coeffs.items():
        v = fser.coeffs.get(m)
        if v is not None:
            acc = f.add(acc, f.mul(c, v))
    return acc


def pairing_tensor2(pairs_a: dict, pairs_f: dict, field: Field):
    """⟨Σ a_u⊗a_v, Σ f_u⊗f_v⟩ for sparse pair maps, componentwise dual pairing."""
    acc = field.zero
    for key, c in pairs_a.items():
        v = pairs_f.get(key)
        if v is not None:
            acc = field.add(acc, field.mul(c, v))
    return acc
