"""Cohomology of finite group schemes, computed two independent ways.

* `hochschild_cohomology`: the inhomogeneous cochain complex, with
  C^n(G,M) realized as functions Gⁿ → M (flat coordinates), boundary

      (∂f)(g₁,…,g_{n+1}) = g₁·f(g₂,…) + Σ (−1)^i f(…, g_i g_{i+1}, …)
                           + (−1)^{n+1} f(g₁,…,g_n).

* `minimal_resolution`: Betti numbers of the minimal free resolution of
  the trivial module over the local algebra F_p[G]; bₙ = dim Hⁿ(G, F_p).

The two agree on p-groups and serve as mutual oracles.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import BudgetExceeded
from .fields import GF, Field
from .groups import FiniteGroupTable
from .linalg import EchelonSpace, Matrix, row_reduce
from .modules import GModule, fixed_points

DEFAULT_BUDGET = 2_000_000


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    v = os.environ.get("WHLAB_BUDGET")
    return int(v) if v else default


@dataclass(frozen=True)
class CochainComplex:
    """Spaces C⁰..C^top with differentials dⁿ: Cⁿ → Cⁿ⁺¹; ∂∘∂ = 0 exactly."""
    dims: tuple
    differentials: tuple  # differentials[n]: dims[n] -> dims[n+1]

    def __post_init__(self):
        for n in range(len(self.differentials) - 1):
            prod = self.differentials[n + 1] @ self.differentials[n]
            if not prod.is_zero():
                raise ValueError(f"∂^{n + 1}∘∂^{n} ≠ 0")

    def cohomology_dims(self) -> list:
        """dim Hⁿ for every n whose outgoing differential is present."""
        ranks = [row_reduce(d).rank for d in self.differentials]
        out = []
        for n in range(len(self.differentials)):
            in_rank = ranks[n - 1] if n >= 1 else 0
            out.append(self.dims[n] - ranks[n] - in_rank)
        return out


def _cochain_dim(group: FiniteGroupTable, m: GModule, n: int) -> int:
    return (group.order ** n) * m.dim


def _tuples(group_order: int, n: int):
    if n == 0:
        yield ()
        return
    for rest in _tuples(group_order, n - 1):
        for g in range(group_order):
            yield (g,) + rest


def _flat_index(group_order: int, dim: int, gs: tuple, i: int) -> int:
    idx = 0
    for g in gs:
        idx = idx * group_order + g
    return idx * dim + i


def hochschild_boundary(group: FiniteGroupTable, m: GModule, n: int) -> Matrix:
    """∂ⁿ: Cⁿ(G,M) → Cⁿ⁺¹(G,M) in flat coordinates (g₁..gₙ, i)."""
    f = m.field
    norder, d = group.order, m.dim
    rows = _cochain_dim(group, m, n + 1)
    cols = _cochain_dim(group, m, n)
    data = [[f.zero] * cols for _ in range(rows)]

    def add(gs_out, i_out, gs_in, j_in, c):
        r = _flat_index(norder, d, gs_out, i_out)
        col = _flat_index(norder, d, gs_in, j_in)
        data[r][col] = f.add(data[r][col], c)

    minus_one = f.of(-1)
    for gs in _tuples(norder, n + 1):
        # face 0: g₁·f(g₂,…)
        rho = m.action[gs[0]]
        for i in range(d):
            for j in range(d):
                v = rho.data[i][j]
                if not f.is_zero(v):
                    add(gs, i, gs[1:], j, v)
        # middle faces: merge gᵢgᵢ₊₁
        sign = f.one
        for i in range(1, n + 1):
            sign = f.mul(sign, minus_one)
            merged = gs[:i - 1] + (group.table[gs[i - 1]][gs[i]],) + gs[i + 1:]
            for j in range(d):
                add(gs, j, merged, j, sign)
        # last face: drop g_{n+1}, sign (−1)^{n+1}
        last_sign = f.one if (n + 1) % 2 == 0 else minus_one
        for j in range(d):
            add(gs, j, gs[:n], j, last_sign)
    return Matrix(f, data)


def hochschild_complex(group: FiniteGroupTable, m: GModule, n_max: int,
                       budget: int | None = None) -> CochainComplex:
    budget = budget if budget is not None else budget_from_env()
    if _cochain_dim(group, m, n_max + 1) > budget:
        raise BudgetExceeded(
            f"|G|^{n_max + 1}·dim M = {_cochain_dim(group, m, n_max + 1)} exceeds budget {budget}")
    dims = tuple(_cochain_dim(group, m, n) for n in range(n_max + 2))
    diffs = tuple(hochschild_boundary(group, m, n) for n in range(n_max + 1))
    return CochainComplex(dims, diffs)


def _representatives(f: Field, kernel_vectors, image_vectors, ncols: int):
    """Echelon-normal cocycle representatives of kernel modulo image."""
    img = EchelonSpace(f, ncols)
    span = EchelonSpace(f, ncols)
    for v in image_vectors:
        img.add(v)
        span.add(v)
    reps = EchelonSpace(f, ncols)
    for v in kernel_vectors:
        if span.add(v):
            reps.add(img.reduce(v))
    return [tuple(r) for r in reps.rows]


def hochschild_cohomology(group: FiniteGroupTable, m: GModule, n_max: int,
                          budget: int | None = None, with_reps: bool = True) -> list:
    """[(n, dim Hⁿ, representative cocycles)] for n = 0..n_max."""
    cx = hochschild_complex(group, m, n_max, budget)
    out = []
    reductions = [row_reduce(d) for d in cx.differentials]
    for n in range(n_max + 1):
        kernel = reductions[n].kernel
        rank_im = reductions[n - 1].rank if n >= 1 else 0
        dim = len(kernel) - rank_im
        reps = []
        if with_reps:
            image_vecs = list(cx.differentials[n - 1].transpose().data) if n >= 1 else []
            reps = _representatives(m.field, kernel, image_vecs, cx.dims[n])
        out.append((n, dim, reps))
    return out


# -- minimal free resolution over F_p[G] ---------------------------------------


def _right_mult_by_group_elt(group: FiniteGroupTable, f: Field, g: int) -> Matrix:
    """Right multiplication e_h ↦ e_{hg} on k[G]."""
    n = group.order
    data = [[f.zero] * n for _ in range(n)]
    for h in range(n):
        data[group.table[h][g]][h] = f.one
    return Matrix(f, data)


def minimal_resolution(group: FiniteGroupTable, n_max: int, p: int | None = None,
                       budget: int | None = None) -> list:
    """Betti numbers (b₀..b_{n_max}) of the minimal F_p[G]-resolution of k.

    Syzygy generators are the lexicographically first echelon basis of
    the kernel modulo radical·kernel, so the construction (not only the
    Betti numbers) is deterministic.
    """
    p = group.require_p_group(p)
    f = GF(p)
    budget = budget if budget is not None else budget_from_env()
    n = group.order
    right_mult = [_right_mult_by_group_elt(group, f, g) for g in range(n)]

    # start: P₀ = A, augmentation kernel = span{e_g − e_1}
    betti = [1]
    current_gens = 1
    kernel = []
    for g in range(n):
        if g != group.identity:
            v = [f.zero] * n
            v[g] = f.one
            v[group.identity] = f.neg(f.one)
            kernel.append(tuple(v))
    kernel = _echelon(f, kernel, n)

    for _step in range(n_max):
        ambient = current_gens * n
        if ambient * n > budget:
            raise BudgetExceeded(f"resolution step needs {ambient * n} > budget {budget}")
        # radical·kernel = span{v·(g−1)} (right module; radical = augmentation ideal)
        rad = EchelonSpace(f, ambient)
        for v in kernel:
            for g in range(n):
                if g == group.identity:
                    continue
                moved = _apply_blockwise(f, right_mult[g], v, current_gens, n)
                rad.add(tuple(f.sub(a, b) for a, b in zip(moved, v)))
        # minimal generators: echelon basis of kernel not in radical·kernel
        gens = []
        probe = EchelonSpace(f, ambient)
        for r in rad.rows:
            probe.add(r)
        for v in kernel:
            if probe.add(v):
                gens.append(v)
        b = len(gens)
        betti.append(b)
        if b == 0:
            kernel = []
            current_gens = 0
            betti.extend([0] * (n_max - len(betti) + 1))
            break
        # next map A^b → A^{current_gens}: e_j⊗g ↦ gens[j]·g; its kernel
        cols = []
        for j in range(b):
            for g in range(n):
                cols.append(_apply_blockwise(f, right_mult[g], gens[j], current_gens, n))
        mat = Matrix(f, cols).transpose()
        kernel = list(row_reduce(mat).kernel)
        current_gens = b
    return betti[:n_max + 1]


def _echelon(f: Field, vectors, ncols):
    sp = EchelonSpace(f, ncols)
    for v in vectors:
        sp.add(v)
    return [tuple(r) for r in sp.rows]


def _apply_blockwise(f: Field, mat: Matrix, v, blocks: int, blocksize: int):
    out = []
    for b in range(blocks):
        chunk = v[b * blocksize:(b + 1) * blocksize]
        out.extend(mat.apply(chunk))
    return tuple(out)


# -- the chain complex of a presentation ----------------------------------------


@dataclass(frozen=True)
class PresentationChainComplex:
    """C₂ = A^Y → C₁ = A^X → C₀ = A over a truncated quotient algebra.

    d₁(e_x·a) = (1−x̄)·a written on coefficients as c ↦ Σ c_x·(1−x̄), and
    d₂ multiplies coefficients by the Fox Jacobian rows, a ↦ Σ a_y·J_{yx};
    the composite vanishes exactly by the Fox fundamental identity.
    Matrices act on flat coordinates (component major, algebra basis minor).
    """
    algebra: object
    d2: Matrix
    d1: Matrix
    homology: tuple               # (dim H₀, dim H₁, dim H₂) over k
    h2_by_degree: tuple           # leading-degree histogram of ker d₂

    def dims(self):
        a = self.algebra
        ny = len(a.presentation.relators)
        return (ny * a.dim, a.presentation.n_gens * a.dim, a.dim)


def presentation_chain_complex(p, cap: int | None = None, field=None,
                               budget: int = 5_000_000) -> PresentationChainComplex:
    from .asphericity import (_kernel_by_leading_degree, build_quotient_algebra,
                              fox_jacobian)
    from .words import GroupWord

    algebra = build_quotient_algebra(p, field, cap, budget)
    f = algebra.field
    dim = algebra.dim
    nx = p.n_gens
    ny = len(p.relators)

    one = algebra.one()
    d1_blocks = []
    for x in range(nx):
        xbar = algebra.project_word(GroupWord.gen(x))
        one_minus = tuple(f.sub(a, b) for a, b in zip(one, xbar))
        d1_blocks.append(algebra.right_mult_matrix(one_minus))
    d1_rows = []
    for i in range(dim):
        row = []
        for x in range(nx):
            row.extend(d1_blocks[x].data[i])
        d1_rows.append(tuple(row))
    d1 = Matrix(f, d1_rows)

    if ny:
        jac = fox_jacobian(p, algebra)
        mult = [[algebra.right_mult_matrix(jac[y][x]) for x in range(nx)] for y in range(ny)]
        d2_rows = []
        for x in range(nx):
            for i in range(dim):
                row = []
                for y in range(ny):
                    row.extend(mult[y][x].data[i])
                d2_rows.append(tuple(row))
        d2 = Matrix(f, d2_rows)
    else:
        d2 = Matrix.zero(f, nx * dim, 0)

    if not (d1 @ d2).is_zero():
        raise AssertionError("d1∘d2 ≠ 0: Fox identity violated")

    r1 = row_reduce(d1)
    r2 = row_reduce(d2)
    h0 = dim - r1.rank
    h1 = (nx * dim - r1.rank) - r2.rank
    h2 = ny * dim - r2.rank
    block_degrees = [algebra.basis_degree(i) for _ in range(max(ny, 1)) for i in range(dim)]
    hist, _vecs = _kernel_by_leading_degree(f, list(r2.kernel), block_degrees[:ny * dim]) \
        if ny else ({}, [])
    h2_hist = tuple(hist.get(d, 0) for d in range(algebra.cap + 1))
    return PresentationChainComplex(algebra, d2, d1, (h0, h1, h2), h2_hist)
