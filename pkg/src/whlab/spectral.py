"""Double complexes, their spectral sequences, and the
Lyndon–Hochschild–Serre double complex of a finite group extension.

Conventions.  Cells live at (p, q), p, q ≥ 0; d0 raises q (vertical),
d1 raises p (horizontal); rows and columns square to zero and
d0∘d1 + d1∘d0 = 0.  The total differential is d = d0 + d1 and pages are
taken for the column filtration F^p = ⊕_{i≥p}, so E1 = H(d0) and
E2 = H(H(d0), d1).

Pages are computed from the standard filtration subquotients

    E_r^{p,q} = A_r^{p,q} / (A_{r-1}^{p+1,q-1} + d·A_{r-1}^{p-r+1,q+r-2}),
    A_r^{p,q} = {x ∈ F^p Tot^{p+q} : dx ∈ F^{p+r}},

which is valid for every r; the paper-style zig-zag d2 is implemented
separately in `zigzag_d2` and kept as a mutual oracle.

A grid may be flagged as the quotient of a first-quadrant complex by
total degree > `truncation_degree`; cells with p+q < truncation_degree
then carry exactly the pages of the untruncated complex (the quotient
does not disturb degrees below the cut), and only those cells are
reported as reliable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GroupTableError
from .fields import Field
from .groups import FiniteGroupTable
from .linalg import EchelonSpace, Matrix, row_reduce, solve
from .modules import GModule


class DoubleComplex:
    __slots__ = ("field", "cells", "d0", "d1", "truncation_degree")

    def __init__(self, field: Field, cells: dict, d0: dict, d1: dict,
                 truncation_degree: int | None = None):
        cells = {k: int(v) for k, v in cells.items() if int(v) > 0}
        for (p, q) in cells:
            if p < 0 or q < 0:
                raise ValueError("cells must sit in the first quadrant")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "d0", dict(d0))
        object.__setattr__(self, "d1", dict(d1))
        object.__setattr__(self, "truncation_degree", truncation_degree)
        self._check_shapes()

    def __setattr__(self, *_):
        raise AttributeError("DoubleComplex is immutable")

    def _check_shapes(self):
        for (p, q), m in self.d0.items():
            if m.rows != self.dim(p, q + 1) or m.cols != self.dim(p, q):
                raise ValueError(f"d0 shape mismatch at ({p},{q})")
        for (p, q), m in self.d1.items():
            if m.rows != self.dim(p + 1, q) or m.cols != self.dim(p, q):
                raise ValueError(f"d1 shape mismatch at ({p},{q})")

    def dim(self, p, q) -> int:
        return self.cells.get((p, q), 0)

    def d0_at(self, p, q) -> Matrix | None:
        if self.dim(p, q) == 0 or self.dim(p, q + 1) == 0:
            return None
        return self.d0.get((p, q)) or Matrix.zero(self.field, self.dim(p, q + 1), self.dim(p, q))

    def d1_at(self, p, q) -> Matrix | None:
        if self.dim(p, q) == 0 or self.dim(p + 1, q) == 0:
            return None
        return self.d1.get((p, q)) or Matrix.zero(self.field, self.dim(p + 1, q), self.dim(p, q))

    @property
    def p_max(self):
        return max((p for p, _ in self.cells), default=0)

    @property
    def q_max(self):
        return max((q for _, q in self.cells), default=0)

    def reliable(self, p, q) -> bool:
        return self.truncation_degree is None or p + q < self.truncation_degree


def validate_double_complex(dc: DoubleComplex) -> list:
    """All three identities, exactly; returns violation reports (empty = ok)."""
    problems = []
    for (p, q) in sorted(dc.cells):
        a = dc.d0_at(p, q)
        b = dc.d0_at(p, q + 1)
        if a is not None and b is not None and not (b @ a).is_zero():
            problems.append(f"d0∘d0 ≠ 0 at ({p},{q})")
        a = dc.d1_at(p, q)
        b = dc.d1_at(p + 1, q)
        if a is not None and b is not None and not (b @ a).is_zero():
            problems.append(f"d1∘d1 ≠ 0 at ({p},{q})")
        # anticommutation out of (p,q) into (p+1,q+1)
        v = dc.d0_at(p + 1, q)
        h = dc.d1_at(p, q)
        h2 = dc.d1_at(p, q + 1)
        v2 = dc.d0_at(p, q)
        first = (v @ h) if (v is not None and h is not None) else None
        second = (h2 @ v2) if (h2 is not None and v2 is not None) else None
        if first is None and second is None:
            continue
        zero = Matrix.zero(dc.field, dc.dim(p + 1, q + 1), dc.dim(p, q))
        total = (first or zero) + (second or zero)
        if not total.is_zero():
            problems.append(f"d0∘d1 + d1∘d0 ≠ 0 at ({p},{q})")
    return problems


# -- the total complex ---------------------------------------------------------


class _Total:
    """Flattened anti-diagonals of a double complex with column offsets."""

    def __init__(self, dc: DoubleComplex):
        self.dc = dc
        self.field = dc.field
        self.n_max = max((p + q for p, q in dc.cells), default=-1)
        self.layout = {}   # n -> list of (p, q, offset, dim)
        self.dims = {}
        for n in range(self.n_max + 1):
            off = 0
            cells = []
            for p in range(n + 1):
                q = n - p
                d = dc.dim(p, q)
                if d:
                    cells.append((p, q, off, d))
                    off += d
            self.layout[n] = cells
            self.dims[n] = off

    def differential(self, n) -> Matrix:
        """d = d0 + d1 : Totⁿ → Totⁿ⁺¹."""
        f = self.field
        rows = self.dims.get(n + 1, 0)
        cols = self.dims.get(n, 0)
        data = [[f.zero] * cols for _ in range(rows)]
        tgt_off = {(p, q): off for p, q, off, _ in self.layout.get(n + 1, [])}
        for p, q, off, d in self.layout.get(n, []):
            for mat, tgt in ((self.dc.d0_at(p, q), (p, q + 1)),
                             (self.dc.d1_at(p, q), (p + 1, q))):
                if mat is None or tgt not in tgt_off:
                    continue
                to = tgt_off[tgt]
                for i in range(mat.rows):
                    row = mat.data[i]
                    for j in range(mat.cols):
                        v = row[j]
                        if not f.is_zero(v):
                            data[to + i][off + j] = f.add(data[to + i][off + j], v)
        return Matrix(f, data) if rows or cols else Matrix.zero(f, 0, 0)

    def column_of(self, n, flat_index) -> int:
        for p, q, off, d in self.layout[n]:
            if off <= flat_index < off + d:
                return p
        raise IndexError(flat_index)

    def filtration_mask(self, n, p_min) -> list:
        """Flat indices of Totⁿ with column ≥ p_min."""
        out = []
        for p, q, off, d in self.layout.get(n, []):
            if p >= p_min:
                out.extend(range(off, off + d))
        return out

    def cell_slice(self, n, p, q):
        for pp, qq, off, d in self.layout.get(n, []):
            if (pp, qq) == (p, q):
                return off, d
        return None, 0


def total_cohomology(dc: DoubleComplex) -> dict:
    """dim Hⁿ(Tot, d0+d1) for every anti-diagonal present."""
    tot = _Total(dc)
    diffs = {n: tot.differential(n) for n in range(tot.n_max + 1)}
    ranks = {n: row_reduce(d).rank if d.cols else 0 for n, d in diffs.items()}
    out = {}
    for n in range(tot.n_max + 1):
        out[n] = tot.dims[n] - ranks.get(n, 0) - ranks.get(n - 1, 0)
    return out


# -- spectral pages ------------------------------------------------------------


@dataclass
class PageCell:
    dim: int
    reliable: bool
    stable: bool
    representatives: tuple = ()   # vectors in Tot coordinates


@dataclass
class SpectralPages:
    field: Field
    pages: dict                   # r -> {(p,q): PageCell}
    differentials: dict           # r -> {(p,q): Matrix}  (E_r basis -> E_r basis)
    einf: dict                    # {(p,q): dim} for reliable cells reaching stability
    total: dict                   # n -> dim Hⁿ(Tot)
    r_max: int

    def dim(self, r, p, q) -> int:
        cell = self.pages.get(r, {}).get((p, q))
        return cell.dim if cell else 0


def _stable_page(p, q) -> int:
    """First r with no first-quadrant d_r in or out of (p,q)."""
    return max(q + 2, p + 1)


class _PageEngine:
    def __init__(self, dc: DoubleComplex):
        self.dc = dc
        self.tot = _Total(dc)
        self.field = dc.field
        self._diff_cache = {}
        self._a_cache = {}

    def _diff(self, n):
        if n not in self._diff_cache:
            self._diff_cache[n] = self.tot.differential(n)
        return self._diff_cache[n]

    def a_space(self, r, p, q):
        """Basis of A_r^{p,q} = {x ∈ F^p Totⁿ : dx ∈ F^{p+r}}, in Tot coords."""
        key = (r, p, q)
        if key in self._a_cache:
            return self._a_cache[key]
        n = p + q
        f = self.field
        src = self.tot.filtration_mask(n, p)
        if not src:
            self._a_cache[key] = []
            return []
        d = self._diff(n)
        bad_rows = [i for i in range(self.tot.dims.get(n + 1, 0))
                    if self.tot.column_of(n + 1, i) < p + r] if self.tot.dims.get(n + 1, 0) else []
        rows = [[d.data[i][j] for j in src] for i in bad_rows]
        if rows:
            ker = row_reduce(Matrix(f, rows)).kernel
        else:
            ker = [tuple(f.one if k == j else f.zero for k in range(len(src)))
                   for j in range(len(src))]
        full = []
        dim_n = self.tot.dims[n]
        for v in ker:
            w = [f.zero] * dim_n
            for idx, val in zip(src, v):
                w[idx] = val
            full.append(tuple(w))
        self._a_cache[key] = full
        return full

    def _image_of_d(self, r, p, q):
        """d(A_{r-1}^{p-r+1, q+r-2}) in Tot^{p+q} coordinates.

        The source column p−r+1 may be negative; F^{negative} is simply
        the whole total degree, which `a_space` handles via its mask.
        """
        n = p + q
        if n - 1 < 0:
            return []
        psrc = p - r + 1
        basis = self.a_space(r - 1, psrc, (n - 1) - psrc)
        if not basis:
            return []
        d = self._diff(n - 1)
        return [d.apply(v) for v in basis]

    def page_cell(self, r, p, q):
        """(dim, representatives, denominator space) for E_r^{p,q}, r ≥ 1."""
        f = self.field
        numer = self.a_space(r, p, q)
        n = p + q
        dim_n = self.tot.dims.get(n, 0)
        den = EchelonSpace(f, dim_n)
        for v in self.a_space(r - 1, p + 1, q - 1):
            den.add(v)
        for v in self._image_of_d(r, p, q):
            den.add(v)
        span = EchelonSpace(f, dim_n)
        for row in den.rows:
            span.add(row)
        reps = []
        for v in numer:
            if span.add(v):
                reps.append(v)
        return len(reps), reps, den

    def d_r_matrix(self, r, p, q, reps_src, target):
        """Matrix of d_r: E_r^{p,q} → E_r^{p+r,q−r+1} on chosen representatives."""
        f = self.field
        tdim, treps, tden = target
        if not reps_src or tdim == 0:
            return Matrix.zero(f, tdim, len(reps_src))
        d = self._diff(p + q)
        cols = []
        for v in reps_src:
            img = d.apply(v)
            cols.append(self._coords_in_page(img, treps, tden))
        return Matrix(f, cols).transpose()

    def _coords_in_page(self, vec, reps, den):
        """Express vec in the basis reps modulo den (must be expressible)."""
        f = self.field
        cols = [list(rv) for rv in reps] + [list(rv) for rv in den.rows]
        if not cols:
            return ()
        mat = Matrix(f, cols).transpose()
        sol = solve(mat, vec)
        if sol is None:
            raise ValueError("vector not in page span; window too small?")
        return tuple(sol[:len(reps)])


def spectral_pages(dc: DoubleComplex, r_max: int) -> SpectralPages:
    """Pages E_0..E_{r_max} with differentials, plus E_∞ on stable cells."""
    engine = _PageEngine(dc)
    f = dc.field
    pages = {0: {}}
    for (p, q), d in dc.cells.items():
        pages[0][(p, q)] = PageCell(d, dc.reliable(p, q), _stable_page(p, q) == 0)
    cell_keys = sorted(dc.cells)
    cache = {}

    def cell_data(r, p, q):
        key = (r, p, q)
        if key not in cache:
            cache[key] = engine.page_cell(r, p, q)
        return cache[key]

    differentials = {}
    for r in range(1, r_max + 1):
        page = {}
        dr = {}
        for (p, q) in cell_keys:
            dim, reps, den = cell_data(r, p, q)
            if dim or dc.dim(p, q):
                page[(p, q)] = PageCell(dim, dc.reliable(p, q),
                                        r >= _stable_page(p, q), tuple(reps))
        for (p, q) in cell_keys:
            src = page.get((p, q))
            if not src or src.dim == 0:
                continue
            tp, tq = p + r, q - r + 1
            if tq < 0 or (tp, tq) not in dc.cells:
                continue
            tgt = cell_data(r, tp, tq)
            dr[(p, q)] = engine.d_r_matrix(r, p, q, list(src.representatives), tgt)
        pages[r] = page
        differentials[r] = dr

    einf = {}
    for (p, q) in cell_keys:
        if not dc.reliable(p, q):
            continue
        r_stab = _stable_page(p, q)
        dim, _, _ = cell_data(max(r_stab, 1), p, q)
        einf[(p, q)] = dim

    return SpectralPages(f, pages, differentials, einf, total_cohomology(dc), r_max)


def zigzag_d2(dc: DoubleComplex, p: int, q: int):
    """d₂ on E₂^{p,q} by the explicit zig-zag: for a class [x] with
    d0 x = 0 pick y with d0 y = −d1 x; then d₂[x] = [d1 y].

    Returns (src_reps, images) where src_reps are E₂ representatives in
    cell (p,q) coordinates and images live in cell (p+2, q−1) coordinates.
    Used as an independent oracle against the subquotient d₂.
    """
    f = dc.field
    engine = _PageEngine(dc)
    dim, reps, _ = engine.page_cell(2, p, q)
    off, cell_dim = engine.tot.cell_slice(p + q, p, q)
    images = []
    srcs = []
    for rep in reps:
        x = tuple(rep[off:off + cell_dim])
        srcs.append(x)
        d1x = dc.d1_at(p, q)
        v = d1x.apply(x) if d1x is not None else tuple()
        y_cell = dc.dim(p + 1, q - 1)
        if q >= 1 and y_cell and v:
            d0y = dc.d0_at(p + 1, q - 1)
            rhs = tuple(f.neg(c) for c in v)
            y = solve(d0y, rhs) if d0y is not None else None
            if y is None:
                raise ValueError("zig-zag has no y; class not defined on E2")
        else:
            y = tuple(f.zero for _ in range(y_cell))
            if v and any(not f.is_zero(c) for c in v):
                raise ValueError("zig-zag broken: d1 x ≠ 0 with no y available")
        d1y = dc.d1_at(p + 1, q - 1)
        if d1y is not None and y:
            images.append(d1y.apply(y))
        else:
            images.append(tuple(f.zero for _ in range(dc.dim(p + 2, q - 1))))
    return srcs, images


# -- the Lyndon–Hochschild–Serre double complex --------------------------------


class LHSComplex:
    """Cells K^{p,q} = (M ⊗ O(G)^{⊗(q+1)})^H ⊗ O(G/H)^{⊗p} in function
    coordinates, with d0 = (−1)^p·(bar differential of the resolution) and
    d1 the Hochschild differential of G/H with coefficients in the fixed
    points.

    A fixed-point function F: G^{q+1} → M (H acting diagonally on M and by
    left translation on the first argument only) is stored by its values
    at (coset representative r, x₁..x_q); F(h·r, xs) = ρ(h)·F(r, xs).
    """

    def __init__(self, group: FiniteGroupTable, subgroup, module: GModule):
        sub = tuple(sorted(set(int(x) for x in subgroup)))
        if not group.is_subgroup(sub):
            raise GroupTableError("not a subgroup")
        quotient, coset_of, reps = group.quotient(sub)   # raises NotNormal
        if module.group.table != group.table:
            raise GroupTableError("module is not over the ambient group")
        self.group = group
        self.sub = sub
        self.module = module
        self.field = module.field
        self.quotient = quotient
        self.coset_of = coset_of
        self.reps = reps
        # decompose g = h·r for its right coset Hr: h = g·r⁻¹
        self._rep_of = {}
        self._h_part = {}
        rep_of_rc = {}
        for g in range(group.order):
            key = frozenset(group.table[h][g] for h in sub)
            if key not in rep_of_rc:
                rep_of_rc[key] = min(key)
            r = rep_of_rc[key]
            self._rep_of[g] = r
            self._h_part[g] = group.table[g][group.inverse[r]]
        self.rc_reps = sorted(set(self._rep_of.values()))
        self.rc_index = {r: i for i, r in enumerate(self.rc_reps)}

    # -- coordinates of K_q ----------------------------------------------------

    def k_dim(self, q: int) -> int:
        return len(self.rc_reps) * (self.group.order ** q) * self.module.dim

    def _k_index(self, r, xs, i, q) -> int:
        idx = self.rc_index[r]
        for x in xs:
            idx = idx * self.group.order + x
        return idx * self.module.dim + i

    def _k_points(self, q):
        from .cohomology import _tuples
        for r in self.rc_reps:
            for xs in _tuples(self.group.order, q):
                yield r, xs

    def evaluate(self, vec, x0, xs, q):
        """Value (as an M-vector) of the stored fixed-point function at (x0, xs)."""
        f = self.field
        r = self._rep_of[x0]
        h = self._h_part[x0]
        rho = self.module.action[h]
        base = self._k_index(r, xs, 0, q)
        chunk = vec[base:base + self.module.dim]
        return rho.apply(chunk)

    def dtilde0(self, q: int) -> Matrix:
        """Bar differential K_q → K_{q+1} (before the (−1)^p column sign)."""
        f = self.field
        d = self.module.dim
        rows = self.k_dim(q + 1)
        cols = self.k_dim(q)
        data = [[f.zero] * cols for _ in range(rows)]
        minus_one = f.of(-1)
        for r, xs in self._k_points(q + 1):
            pt = (r,) + xs             # (x0, x1..x_{q+1}) with x0 a representative
            row0 = self._k_index(r, xs, 0, q + 1)
            # faces 0..q merge adjacent arguments; face q+1 drops the last
            sign = f.one
            for i in range(q + 1):
                merged = pt[:i] + (self.group.table[pt[i]][pt[i + 1]],) + pt[i + 2:]
                x0, rest = merged[0], merged[1:]
                rr = self._rep_of[x0]
                rho = self.module.action[self._h_part[x0]]
                base = self._k_index(rr, rest, 0, q)
                for a in range(d):
                    for b in range(d):
                        v = rho.data[a][b]
                        if not f.is_zero(v):
                            data[row0 + a][base + b] = f.add(data[row0 + a][base + b],
                                                             f.mul(sign, v))
                sign = f.mul(sign, minus_one)
            # last face: drop x_{q+1}
            base = self._k_index(r, xs[:q], 0, q)
            for a in range(d):
                data[row0 + a][base + a] = f.add(data[row0 + a][base + a], sign)
        return Matrix(f, data)

    def quotient_action(self, q: int, gbar: int) -> Matrix:
        """ḡ acting on K_q: (ḡ·F)(x0, xs) = ρ(g)·F(g⁻¹x0, xs)."""
        f = self.field
        d = self.module.dim
        g = self.reps[gbar]
        ginv = self.group.inverse[g]
        rho = self.module.action[g]
        size = self.k_dim(q)
        data = [[f.zero] * size for _ in range(size)]
        for r, xs in self._k_points(q):
            src_x0 = self.group.table[ginv][r]
            rr = self._rep_of[src_x0]
            comp = self.module.action[self.group.table[g][self._h_part[src_x0]]]
            # ρ(g)·ρ(h') with g⁻¹r = h'·rr
            row0 = self._k_index(r, xs, 0, q)
            base = self._k_index(rr, xs, 0, q)
            for a in range(d):
                for b in range(d):
                    v = comp.data[a][b]
                    if not f.is_zero(v):
                        data[row0 + a][base + b] = v
        return Matrix(f, data)

    # -- assembled double complex ------------------------------------------------

    def cell_dim(self, p: int, q: int) -> int:
        return self.k_dim(q) * (self.quotient.order ** p)

    def d0_matrix(self, p: int, q: int) -> Matrix:
        f = self.field
        base = self.dtilde0(q)
        m = self.quotient.order ** p
        sign = f.one if p % 2 == 0 else f.of(-1)
        rows, cols = base.rows * m, base.cols * m
        data = [[f.zero] * cols for _ in range(rows)]
        for k in range(m):
            for i in range(base.rows):
                row = base.data[i]
                for j in range(base.cols):
                    v = row[j]
                    if not f.is_zero(v):
                        data[k * base.rows + i][k * base.cols + j] = f.mul(sign, v)
        return Matrix(f, data)

    def d1_matrix(self, p: int, q: int) -> Matrix:
        """Hochschild differential of G/H with coefficients K_q; coordinates
        (ḡ₁..ḡ_p) major, K_q minor."""
        from .cohomology import _tuples
        f = self.field
        kd = self.k_dim(q)
        Q = self.quotient.order
        rows = kd * (Q ** (p + 1))
        cols = kd * (Q ** p)
        data = [[f.zero] * cols for _ in range(rows)]
        minus_one = f.of(-1)
        actions = [self.quotient_action(q, gb) for gb in range(Q)]

        def block(gs):
            idx = 0
            for g in gs:
                idx = idx * Q + g
            return idx * kd

        for gs in _tuples(Q, p + 1):
            out0 = block(gs)
            act = actions[gs[0]]
            in0 = block(gs[1:])
            for i in range(kd):
                row = act.data[i]
                for j in range(kd):
                    v = row[j]
                    if not f.is_zero(v):
                        data[out0 + i][in0 + j] = f.add(data[out0 + i][in0 + j], v)
            sign = f.one
            for i in range(1, p + 1):
                sign = f.mul(sign, minus_one)
                merged = gs[:i - 1] + (self.quotient.table[gs[i - 1]][gs[i]],) + gs[i + 1:]
                in0 = block(merged)
                for j in range(kd):
                    data[out0 + j][in0 + j] = f.add(data[out0 + j][in0 + j], sign)
            last_sign = f.one if (p + 1) % 2 == 0 else minus_one
            in0 = block(gs[:p])
            for j in range(kd):
                data[out0 + j][in0 + j] = f.add(data[out0 + j][in0 + j], last_sign)
        return Matrix(f, data)


def lhs_double_complex(group: FiniteGroupTable, subgroup, module: GModule,
                       window=(2, 2)) -> DoubleComplex:
    """The LHS double complex on the staircase {p+q ≤ D}, D = p_max+q_max+1.

    Every requested cell (p ≤ p_max, q ≤ q_max) satisfies p+q < D, so its
    pages equal those of the full first-quadrant complex at every r.
    """
    builder = LHSComplex(group, subgroup, module)
    p_max, q_max = window
    depth = p_max + q_max + 1
    cells, d0, d1 = {}, {}, {}
    for n in range(depth + 1):
        for p in range(n + 1):
            q = n - p
            dim = builder.cell_dim(p, q)
            if dim:
                cells[(p, q)] = dim
    for (p, q) in cells:
        if (p, q + 1) in cells:
            d0[(p, q)] = builder.d0_matrix(p, q)
        if (p + 1, q) in cells:
            d1[(p, q)] = builder.d1_matrix(p, q)
    return DoubleComplex(builder.field, cells, d0, d1, truncation_degree=depth)


def h_of_subgroup_as_quotient_module(group: FiniteGroupTable, subgroup,
                                     module: GModule, q: int) -> GModule:
    """H^q(H, M) as a module over G/H via conjugation on cochains.

    Independent of the double complex machinery: inhomogeneous H-cochains,
    (ḡ·f)(h₁..h_q) = ρ(g)·f(g⁻¹h₁g, …, g⁻¹h_qg); used to cross-check E₂.
    """
    from .cohomology import _tuples, hochschild_boundary

    sub = tuple(sorted(set(int(x) for x in subgroup)))
    quotient, coset_of, reps = group.quotient(sub)
    f = module.field
    d = module.dim
    sub_table = [[sub.index(group.table[a][b]) for b in sub] for a in sub]
    h_group = FiniteGroupTable(sub_table, tuple(group.labels[s] for s in sub), name="H")
    h_module = GModule(h_group, f, [module.action[s] for s in sub])

    dq = hochschild_boundary(h_group, h_module, q)
    kernel = list(row_reduce(dq).kernel)
    image = []
    if q >= 1:
        dq1 = hochschild_boundary(h_group, h_module, q - 1)
        image = list(dq1.transpose().data)
    img_space = EchelonSpace(f, dq.cols)
    span = EchelonSpace(f, dq.cols)
    for v in image:
        img_space.add(v)
        span.add(v)
    reps_vecs = []
    for v in kernel:
        if span.add(v):
            reps_vecs.append(img_space.reduce(v))
    hdim = len(reps_vecs)

    hn = len(sub)

    def cochain_index(hs, i):
        idx = 0
        for h in hs:
            idx = idx * hn + h
        return idx * d + i

    def act(gbar, vec):
        g = reps[gbar]
        ginv = group.inverse[g]
        rho = module.action[g]
        out = [f.zero] * len(vec)
        for hs in _tuples(hn, q):
            conj = tuple(sub.index(group.table[group.table[ginv][sub[h]]][g]) for h in hs)
            src0 = cochain_index(conj, 0)
            chunk = vec[src0:src0 + d]
            val = rho.apply(chunk)
            dst0 = cochain_index(hs, 0)
            for i in range(d):
                out[dst0 + i] = val[i]
        return tuple(out)

    if hdim == 0:
        return GModule(quotient, f, [Matrix.zero(f, 0, 0) for _ in range(quotient.order)])

    basis_cols = [list(v) for v in reps_vecs] + [list(r) for r in img_space.rows]
    basis_mat = Matrix(f, basis_cols).transpose()
    mats = []
    for gbar in range(quotient.order):
        cols = []
        for v in reps_vecs:
            img = act(gbar, v)
            sol = solve(basis_mat, img)
            if sol is None:
                raise ValueError("conjugation action does not preserve cocycles")
            cols.append(sol[:hdim])
        mats.append(Matrix(f, cols).transpose())
    return GModule(quotient, f, mats)
