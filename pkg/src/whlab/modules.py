"""Finite-dimensional modules over a finite group, with the fixed-point,
coinvariant and tensor-identity (untwisting) operations.

A GModule is a left action by matrices; the equivalent right-comodule
map over the function Hopf algebra is Δ_M(m) = Σ_g (g·m)⊗e_g, so fixed
points are both ker(stacked ρ(g)−I) and ker(Δ_M − id⊗1).
"""

from __future__ import annotations

from .errors import GroupTableError
from .fields import Field, GF
from .groups import FiniteGroupTable
from .linalg import Matrix, row_reduce


class GModule:
    __slots__ = ("group", "field", "dim", "action")

    def __init__(self, group: FiniteGroupTable, field: Field, action):
        action = tuple(action)
        if len(action) != group.order:
            raise GroupTableError("need one action matrix per group element")
        d = action[0].rows if action else 0
        for m in action:
            if m.rows != d or m.cols != d or m.field != field:
                raise GroupTableError("action matrices must be square over one field")
        if action and action[group.identity] != Matrix.identity(field, d):
            raise GroupTableError("identity must act as the identity matrix")
        for a in range(group.order):
            for b in range(group.order):
                if action[a] @ action[b] != action[group.table[a][b]]:
                    raise GroupTableError(f"action({a})·action({b}) ≠ action({a}·{b})")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "action", action)

    def __setattr__(self, *_):
        raise AttributeError("GModule is immutable")

    @classmethod
    def trivial(cls, group: FiniteGroupTable, field: Field, dim: int = 1) -> "GModule":
        ident = Matrix.identity(field, dim)
        return cls(group, field, [ident] * group.order)

    @classmethod
    def regular(cls, group: FiniteGroupTable, field: Field) -> "GModule":
        """Left regular module k[G]: g·e_h = e_{gh}."""
        n = group.order
        mats = []
        for g in range(n):
            data = [[field.zero] * n for _ in range(n)]
            for h in range(n):
                data[group.table[g][h]][h] = field.one
            mats.append(Matrix(field, data))
        return cls(group, field, mats)

    def dual(self) -> "GModule":
        """Contragredient module: g ↦ ρ(g⁻¹)ᵀ."""
        return GModule(self.group, self.field,
                       [self.action[self.group.inverse[g]].transpose()
                        for g in range(self.group.order)])

    def restrict(self, subgroup_elements, subgroup: FiniteGroupTable) -> "GModule":
        """Restriction along an embedding given by a list of ambient indices."""
        return GModule(subgroup, self.field, [self.action[g] for g in subgroup_elements])

    def comodule_matrix(self) -> Matrix:
        """Δ_M: M → M⊗O(G) as a (dim·|G|) × dim matrix, m ↦ Σ (g·m)⊗e_g."""
        f = self.field
        n, d = self.group.order, self.dim
        data = [[f.zero] * d for _ in range(d * n)]
        for g in range(n):
            mg = self.action[g]
            for i in range(d):
                for j in range(d):
                    data[i * n + g][j] = mg.data[i][j]
        return Matrix(f, data)


def fixed_points(m: GModule) -> list:
    """Basis of M^G = {v : g·v = v for all g}, via the stacked (ρ(g) − I)."""
    f = m.field
    if m.dim == 0:
        return []
    ident = Matrix.identity(f, m.dim)
    blocks = [m.action[g] - ident for g in m.group.elements() if g != m.group.identity]
    if not blocks:
        return [tuple(ident.data[i]) for i in range(m.dim)]
    stacked = blocks[0]
    for b in blocks[1:]:
        stacked = stacked.vstack(b)
    return list(row_reduce(stacked).kernel)


def coinvariants(m: GModule):
    """(dimension, projection matrix) of M_G = M / span{g·v − v}.

    The projection sends M onto coordinates of the quotient in a
    deterministic basis (non-pivot coordinates of the relation space).
    """
    f = m.field
    d = m.dim
    ident = Matrix.identity(f, d)
    rel_rows = []
    for g in m.group.elements():
        if g == m.group.identity:
            continue
        diff = m.action[g] - ident
        rel_rows.extend(tuple(col) for col in diff.transpose().data)  # columns (g·e_j − e_j)
    if not rel_rows:
        return d, ident
    red = row_reduce(Matrix(f, rel_rows))
    pivots = set(red.pivots)
    free = [c for c in range(d) if c not in pivots]
    # projection: v ↦ coefficients on free coordinates after reducing by relations
    proj = [[f.zero] * d for _ in range(len(free))]
    for r, fc in enumerate(free):
        proj[r][fc] = f.one
    for i, pc in enumerate(red.pivots):
        row = red.rref.data[i]
        for r, fc in enumerate(free):
            # e_{pc} ≡ −Σ_{fc} row[fc]·e_{fc} modulo the relation space
            proj[r][pc] = f.neg(row[fc])
    return len(free), Matrix(f, proj)


def untwist(m: GModule) -> Matrix:
    """The tensor-identity isomorphism N⊗O(G) → N_tr⊗O(G).

    In function coordinates u: G → N it is u ↦ (g ↦ ρ(g⁻¹)·u(g)); it
    conjugates the diagonal action (ρ ⊗ left-regular) into the action
    that is trivial on N.  Coordinates are indexed (i, g) ↦ i·|G| + g.
    """
    f = m.field
    n, d = m.group.order, m.dim
    size = d * n
    data = [[f.zero] * size for _ in range(size)]
    for g in range(n):
        rho = m.action[m.group.inverse[g]]
        for i in range(d):
            for j in range(d):
                v = rho.data[i][j]
                if not f.is_zero(v):
                    data[i * n + g][j * n + g] = v
    return Matrix(f, data)


def diagonal_action_on_functions(m: GModule, g: int) -> Matrix:
    """g acting on Maps(G, M) by (g·u)(x) = ρ(g)·u(g⁻¹x); coordinates (i, x)."""
    f = m.field
    n, d = m.group.order, m.dim
    size = d * n
    ginv = m.group.inverse[g]
    rho = m.action[g]
    data = [[f.zero] * size for _ in range(size)]
    for x in range(n):
        src = m.group.table[ginv][x]
        for i in range(d):
            for j in range(d):
                v = rho.data[i][j]
                if not f.is_zero(v):
                    data[i * n + x][j * n + src] = v
    return Matrix(f, data)


def trivial_on_module_action(m: GModule, g: int) -> Matrix:
    """g acting on Maps(G, M) with trivial action on values: (g·u)(x) = u(g⁻¹x)."""
    f = m.field
    n, d = m.group.order, m.dim
    size = d * n
    ginv = m.group.inverse[g]
    data = [[f.zero] * size for _ in range(size)]
    for x in range(n):
        src = m.group.table[ginv][x]
        for i in range(d):
            data[i * n + x][i * n + src] = f.one
    return Matrix(f, data)


def intertwiner_space_dim(m: GModule, target: GModule) -> int:
    """dim Hom_G(M, N): solve T·ρ_M(g) = ρ_N(g)·T for all g ≠ 1."""
    f = m.field
    if m.group is not target.group and m.group.table != target.group.table:
        raise GroupTableError("modules over different groups")
    dm, dn = m.dim, target.dim
    rows = []
    for g in m.group.elements():
        if g == m.group.identity:
            continue
        a, b = m.action[g], target.action[g]
        # unknowns T[i][j], i<dn, j<dm: Σ_j T[i][j] a[j][k] − Σ_l b[i][l] T[l][k] = 0
        for i in range(dn):
            for k in range(dm):
                row = [f.zero] * (dn * dm)
                for j in range(dm):
                    row[i * dm + j] = f.add(row[i * dm + j], a.data[j][k])
                for l in range(dn):
                    row[l * dm + k] = f.sub(row[l * dm + k], b.data[i][l])
                rows.append(tuple(row))
    if not rows:
        return dn * dm
    return dn * dm - row_reduce(Matrix(f, rows)).rank


def regular_function_module(group: FiniteGroupTable, field: Field) -> GModule:
    """O(G) = Maps(G,k) with the left-regular action (g·f)(x) = f(g⁻¹x)."""
    base = GModule.trivial(group, field, 1)
    mats = [trivial_on_module_action(base, g) for g in group.elements()]
    return GModule(group, field, mats)
