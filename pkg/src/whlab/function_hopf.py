"""The commutative Hopf algebra of functions on a finite group.

Basis {e_g}; product is pointwise, coproduct Δ(e_g) = Σ_{ab=g} e_a⊗e_b,
antipode e_g ↦ e_{g⁻¹}.  All five structure maps are emitted as dense
matrices and the Hopf axioms are verified on construction, not assumed.
"""

from __future__ import annotations

from .errors import GroupTableError
from .fields import Field, GF
from .groups import FiniteGroupTable
from .linalg import Matrix


class FunctionHopf:
    __slots__ = ("group", "field", "product", "coproduct", "antipode", "unit", "counit")

    def __init__(self, group: FiniteGroupTable, field: Field | None = None):
        n = group.order
        if field is None:
            p = group.p_of_order()
            field = GF(p) if p is not None else GF(2)
        f = field
        z, o = f.zero, f.one

        # product: k^{n²} -> k^n, e_a⊗e_b ↦ δ_ab e_a (pointwise multiplication)
        prod = [[z] * (n * n) for _ in range(n)]
        for a in range(n):
            prod[a][a * n + a] = o
        # coproduct: k^n -> k^{n²}, e_g ↦ Σ_{ab=g} e_a⊗e_b
        cop = [[z] * n for _ in range(n * n)]
        for a in range(n):
            for b in range(n):
                cop[a * n + b][group.table[a][b]] = o
        # antipode: e_g ↦ e_{g⁻¹}
        anti = [[z] * n for _ in range(n)]
        for g in range(n):
            anti[group.inverse[g]][g] = o
        # unit: 1 ↦ Σ e_g (the constant function 1); counit: e_g ↦ δ_{g,1}
        unit = [[o] for _ in range(n)]
        counit = [[o if g == group.identity else z for g in range(n)]]

        object.__setattr__(self, "group", group)
        object.__setattr__(self, "field", f)
        object.__setattr__(self, "product", Matrix(f, prod))
        object.__setattr__(self, "coproduct", Matrix(f, cop))
        object.__setattr__(self, "antipode", Matrix(f, anti))
        object.__setattr__(self, "unit", Matrix(f, unit))
        object.__setattr__(self, "counit", Matrix(f, counit))
        problems = self.axiom_violations()
        if problems:
            raise GroupTableError("Hopf axioms fail: " + "; ".join(problems))

    def __setattr__(self, *_):
        raise AttributeError("FunctionHopf is immutable")

    # -- axiom checks -----------------------------------------------------------

    def _tensor_with_identity(self, m: Matrix, left: bool, other_dim: int) -> Matrix:
        """id⊗m (left=True) or m⊗id (left=False) on tensor coordinates."""
        f = self.field
        rows = m.rows * other_dim
        cols = m.cols * other_dim
        data = [[f.zero] * cols for _ in range(rows)]
        for i in range(m.rows):
            for j in range(m.cols):
                v = m.data[i][j]
                if f.is_zero(v):
                    continue
                for k in range(other_dim):
                    if left:
                        data[k * m.rows + i][k * m.cols + j] = v
                    else:
                        data[i * other_dim + k][j * other_dim + k] = v
        return Matrix(f, data)

    def axiom_violations(self) -> list:
        n = self.group.order
        f = self.field
        out = []
        id_cop = self._tensor_with_identity(self.coproduct, True, n)    # id⊗Δ
        cop_id = self._tensor_with_identity(self.coproduct, False, n)   # Δ⊗id
        if id_cop @ self.coproduct != cop_id @ self.coproduct:
            out.append("coassociativity")
        # counit laws: (ε⊗id)Δ = id = (id⊗ε)Δ
        eps_id = self._tensor_with_identity(self.counit, False, n)
        id_eps = self._tensor_with_identity(self.counit, True, n)
        ident = Matrix.identity(f, n)
        if eps_id @ self.coproduct != ident or id_eps @ self.coproduct != ident:
            out.append("counit")
        # antipode convolution: m(s⊗id)Δ = unit∘counit = m(id⊗s)Δ
        s_id = self._tensor_with_identity(self.antipode, False, n)
        id_s = self._tensor_with_identity(self.antipode, True, n)
        eta_eps = self.unit @ self.counit
        if self.product @ s_id @ self.coproduct != eta_eps:
            out.append("antipode (left)")
        if self.product @ id_s @ self.coproduct != eta_eps:
            out.append("antipode (right)")
        # product is commutative and associative (pointwise product of functions)
        m_id = self._tensor_with_identity(self.product, False, n)
        id_m = self._tensor_with_identity(self.product, True, n)
        if self.product @ m_id != self.product @ id_m:
            out.append("associativity")
        return out


def function_hopf(group: FiniteGroupTable, field: Field | None = None) -> FunctionHopf:
    return FunctionHopf(group, field)
