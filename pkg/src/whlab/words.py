"""Free-group words, the integral group ring, and Fox derivatives.

Words are freely reduced tuples of (generator index, ±1).  The Fox
derivative follows the convention ∂x/∂x = 1, ∂x⁻¹/∂x = −x⁻¹,
∂(uv)/∂x = ∂u/∂x + u·∂v/∂x, so the fundamental identity reads
Σ_x (∂w/∂x)(x−1) = w−1 in the integral group ring.
"""

from __future__ import annotations


def free_reduce(letters):
    """Cancel adjacent x·x⁻¹ pairs; returns a reduced tuple of (gen, ±1)."""
    stack = []
    for g, e in letters:
        if e not in (1, -1):
            raise ValueError(f"exponent sign must be ±1, got {e}")
        if g < 0:
            raise ValueError(f"negative generator index {g}")
        if stack and stack[-1][0] == g and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


class GroupWord:
    __slots__ = ("letters",)

    def __init__(self, letters=()):
        object.__setattr__(self, "letters", free_reduce(letters))

    def __setattr__(self, *_):
        raise AttributeError("GroupWord is immutable")

    @classmethod
    def identity(cls):
        return cls(())

    @classmethod
    def gen(cls, i, e=1):
        return cls(((i, e),))

    def __mul__(self, other):
        return GroupWord(self.letters + other.letters)

    def inverse(self):
        return GroupWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n):
        if n == 0:
            return GroupWord.identity()
        base = self if n > 0 else self.inverse()
        out = GroupWord.identity()
        for _ in range(abs(n)):
            out = out * base
        return out

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, GroupWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def max_generator(self):
        return max((g for g, _ in self.letters), default=-1)

    def __repr__(self):
        return f"GroupWord({self.render()})"

    def render(self, names=None):
        if not self.letters:
            return "1"
        parts = []
        i = 0
        letters = self.letters
        while i < len(letters):
            g, e = letters[i]
            j = i
            exp = 0
            while j < len(letters) and letters[j] == (g, e):
                exp += e
                j += 1
            name = names[g] if names else f"g{g}"
            parts.append(name if exp == 1 else f"{name}^{exp}")
            i = j
        return "*".join(parts)


def word_mul(u: GroupWord, v: GroupWord) -> GroupWord:
    return u * v


def word_inv(u: GroupWord) -> GroupWord:
    return u.inverse()


def commutator(u: GroupWord, v: GroupWord) -> GroupWord:
    return u * v * u.inverse() * v.inverse()


class GroupRingElement:
    """Finite Z-linear (or field-linear) combination of free-group words."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for w, c in (coeffs or {}).items():
            if not isinstance(w, GroupWord):
                w = GroupWord(w)
            if c != 0:
                clean[w] = clean.get(w, 0) + c
                if clean[w] == 0:
                    del clean[w]
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, *_):
        raise AttributeError("GroupRingElement is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def of_word(cls, w: GroupWord, c=1):
        return cls({w: c})

    def __add__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            v = out.get(w, 0) + c
            if v == 0:
                out.pop(w, None)
            else:
                out[w] = v
        return GroupRingElement(out)

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupWord):
            other = GroupRingElement.of_word(other)
        out = {}
        for w1, c1 in self.coeffs.items():
            for w2, c2 in other.coeffs.items():
                w = w1 * w2
                v = out.get(w, 0) + c1 * c2
                if v == 0:
                    out.pop(w, None)
                else:
                    out[w] = v
        return GroupRingElement(out)

    def __rmul__(self, other):
        if isinstance(other, GroupWord):
            return GroupRingElement.of_word(other) * self
        if isinstance(other, int):
            return GroupRingElement({w: other * c for w, c in self.coeffs.items()})
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self):
        return not self.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = sorted(self.coeffs.items(), key=lambda t: (len(t[0]), t[0].letters))
        return " + ".join(f"{c}·{w.render()}" for w, c in terms)


def fox_derivative(w: GroupWord, x: int) -> GroupRingElement:
    """∂w/∂x in the integral group ring of the free group."""
    if x < 0:
        raise ValueError("unknown generator index")
    out = {}
    prefix = GroupWord.identity()
    for g, e in w.letters:
        if g == x:
            if e == 1:
                term, c = prefix, 1
            else:
                term, c = prefix * GroupWord.gen(g, -1), -1
            out[term] = out.get(term, 0) + c
        prefix = prefix * GroupWord.gen(g, e)
    return GroupRingElement(out)


def fox_fundamental_check(w: GroupWord, n_gens: int) -> bool:
    """Σ_x (∂w/∂x)(x−1) == w−1, exactly over Z."""
    total = GroupRingElement.zero()
    for x in range(n_gens):
        dx = fox_derivative(w, x)
        xm1 = GroupRingElement({GroupWord.gen(x): 1, GroupWord.identity(): -1})
        total = total + dx * xm1
    rhs = GroupRingElement({w: 1, GroupWord.identity(): -1})
    return total == rhs
