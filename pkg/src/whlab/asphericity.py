"""Truncated completed group algebras and the relation-module freeness
probe for asphericity.

For a presentation (X|R) over k, the algebra

    A = k⟨⟨X⟩⟩ / (two-sided ideal of {magnus(r) − 1} + all degree > N)

is the degree-N shadow of the completed group algebra of the presented
group.  The Fox Jacobian J_{yx} = π(∂r_y/∂x) defines the boundary map
A^Y → A^X of the presentation complex; coefficients multiply the rows
from the left, a·(row_y), so the map is left-A-linear and composes to
zero with c ↦ Σ c_x·(1 − x̄) by the Fox fundamental identity.

Verdicts are truncation-aware:
  * a zero kernel through the reliable degrees means only "no
    obstruction up to degree N", never a proof of asphericity;
  * kernel vectors whose leading degree d satisfies d + v ≤ N (v the
    minimal valuation among Jacobian entries) are genuine degree-d
    witnesses of a relation between the relator columns; deeper ones
    are truncation artifacts and are excluded from the verdict;
  * an image needing fewer than |Y| module generators (Nakayama count
    dim M/ÎM) flags the relator family as dependent, which breaks the
    basis condition a valid presentation must satisfy.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceeded
from .fields import Field
from .hopf import magnus_embed
from .linalg import Matrix, RowSpace, row_reduce
from .presentations import Presentation
from .series import TruncatedSeries, mono_key, render_series
from .words import GroupWord, fox_derivative


def _all_monomials(n_letters: int, cap: int):
    out = [()]
    for d in range(1, cap + 1):
        out.extend(itertools.product(range(n_letters), repeat=d))
    return [tuple(m) for m in out]


class QuotientAlgebra:
    """Finite-dimensional shadow of a completed group algebra.

    Elements are coordinate vectors over the monomial basis (the
    non-pivot monomials of the relator ideal in (degree, lex) order).
    """

    def __init__(self, presentation: Presentation, field: Field, cap: int,
                 budget: int = 5_000_000):
        n = presentation.n_gens
        monomials = _all_monomials(n, cap)
        if len(monomials) ** 2 > budget:
            raise BudgetExceeded(
                f"free algebra dimension {len(monomials)} too large for budget {budget}")
        self.presentation = presentation
        self.field = field
        self.cap = cap
        self.n_letters = n
        self.monomials = monomials
        self.mono_index = {m: i for i, m in enumerate(monomials)}
        self.ideal = self._saturate_ideal()
        pivots = set(self.ideal.pivots)
        self.basis = [m for i, m in enumerate(monomials) if i not in pivots]
        self.basis_index = {m: i for i, m in enumerate(self.basis)}
        self.dim = len(self.basis)
        self._letter_images = [self.project(magnus_embed(GroupWord.gen(i), field, n, cap))
                               for i in range(n)]
        self._right_mult_cache: dict = {}

    # -- ideal construction ------------------------------------------------------

    def _series_vector(self, s: TruncatedSeries):
        f = self.field
        v = [f.zero] * len(self.monomials)
        for m, c in s.coeffs.items():
            v[self.mono_index[m]] = c
        return v

    def _shift_vector(self, v, letter: int, left: bool):
        """Multiply a free-algebra vector by a letter on one side."""
        f = self.field
        out = [f.zero] * len(v)
        for i, c in enumerate(v):
            if f.is_zero(c):
                continue
            m = self.monomials[i]
            if len(m) + 1 > self.cap:
                continue
            m2 = ((letter,) + m) if left else (m + (letter,))
            out[self.mono_index[m2]] = f.add(out[self.mono_index[m2]], c)
        return out

    def _saturate_ideal(self) -> RowSpace:
        f = self.field
        space = RowSpace(f, len(self.monomials))
        one = TruncatedSeries.one(f, self.n_letters, self.cap)
        seeds = []
        for _, r in self.presentation.relators:
            s = magnus_embed(r, f, self.n_letters, self.cap) - one
            seeds.append(tuple(self._series_vector(s)))
        space.add_rows(seeds)
        # two-sided ideal = left closure of the right closure of the seeds
        for side in ("right", "left"):
            frontier = space.rows()
            while frontier:
                candidates = []
                f = self.field
                for v in frontier:
                    for letter in range(self.n_letters):
                        shifted = self._shift_vector(v, letter, left=(side == "left"))
                        if any(not f.is_zero(c) for c in shifted):
                            candidates.append(shifted)
                before = space.dim
                space.add_rows(candidates)
                if space.dim == before:
                    break
                frontier = candidates  # new directions only live in new products
        return space

    # -- elements ------------------------------------------------------------------

    def zero(self):
        return tuple(self.field.zero for _ in range(self.dim))

    def one(self):
        return self.project(TruncatedSeries.one(self.field, self.n_letters, self.cap))

    def project(self, s: TruncatedSeries):
        """Image of a free-algebra series in A, as basis coordinates."""
        f = self.field
        residue = self.ideal.reduce(self._series_vector(s))
        out = [f.zero] * self.dim
        for i, c in enumerate(residue):
            if not f.is_zero(c):
                out[self.basis_index[self.monomials[i]]] = c
        return tuple(out)

    def project_word(self, w: GroupWord):
        return self.project(magnus_embed(w, self.field, self.n_letters, self.cap))

    def project_group_ring(self, elt):
        """Image of an integral group-ring element (Fox derivative output)."""
        f = self.field
        acc = [f.zero] * self.dim
        for w, c in elt.coeffs.items():
            v = self.project_word(w)
            cf = f.of(c)
            acc = [f.add(a, f.mul(cf, b)) for a, b in zip(acc, v)]
        return tuple(acc)

    def element_to_series(self, vec) -> TruncatedSeries:
        return TruncatedSeries(self.field, self.n_letters, self.cap,
                               {m: c for m, c in zip(self.basis, vec)})

    def render_element(self, vec, letter_names=None) -> str:
        return render_series(self.element_to_series(vec), letter_names)

    def mul(self, u, v):
        """Product of two basis-coordinate vectors in A."""
        f = self.field
        acc = {}
        for i, a in enumerate(u):
            if f.is_zero(a):
                continue
            mi = self.basis[i]
            for j, b in enumerate(v):
                if f.is_zero(b):
                    continue
                mj = self.basis[j]
                if len(mi) + len(mj) > self.cap:
                    continue
                m = mi + mj
                acc[m] = f.add(acc.get(m, f.zero), f.mul(a, b))
        return self.project(TruncatedSeries(f, self.n_letters, self.cap, acc))

    def right_mult_matrix(self, vec) -> Matrix:
        """Matrix of a ↦ a·vec on basis coordinates."""
        key = tuple(vec)
        if key not in self._right_mult_cache:
            cols = [self.mul(self._basis_vec(i), vec) for i in range(self.dim)]
            self._right_mult_cache[key] = Matrix(self.field, cols).transpose()
        return self._right_mult_cache[key]

    def left_mult_matrix(self, vec) -> Matrix:
        cols = [self.mul(vec, self._basis_vec(i)) for i in range(self.dim)]
        return Matrix(self.field, cols).transpose()

    def _basis_vec(self, i):
        f = self.field
        v = [f.zero] * self.dim
        v[i] = f.one
        return tuple(v)

    def basis_degree(self, i) -> int:
        return len(self.basis[i])

    def valuation(self, vec):
        degs = [len(self.basis[i]) for i, c in enumerate(vec) if not self.field.is_zero(c)]
        return min(degs) if degs else None


def build_quotient_algebra(p: Presentation, field: Field | None = None,
                           cap: int | None = None, budget: int = 5_000_000) -> QuotientAlgebra:
    return QuotientAlgebra(p, field or p.field, cap if cap is not None else p.trunc, budget)


def fox_jacobian(p: Presentation, algebra: QuotientAlgebra):
    """|Y|×|X| matrix over A with entries π(∂r_y/∂x), as basis vectors."""
    if algebra.presentation.generators != p.generators:
        raise ValueError("presentation/algebra mismatch")
    rows = []
    for _, r in p.relators:
        rows.append([algebra.project_group_ring(fox_derivative(r, x))
                     for x in range(p.n_gens)])
    return rows


@dataclass(frozen=True)
class AsphericityReport:
    presentation: Presentation
    field: Field
    cap: int
    algebra_dim: int
    per_degree_kernel: tuple      # kernel dims by leading degree, 0..cap
    reliable_degree_cap: int      # degrees above this are truncation artifacts
    kernel_dim_reliable: int
    coinvariants_dim: int
    n_relators: int
    verdict: str                  # no-obstruction-to-degree-N | kernel-detected | relators-dependent
    witness: tuple | None         # kernel vector in A^Y coordinates, if detected

    def verdict_line(self) -> str:
        if self.verdict == "no-obstruction-to-degree-N":
            return f"no-obstruction-to-degree-{self.cap}"
        return self.verdict


def _kernel_by_leading_degree(field, kernel_vectors, block_degrees):
    """Histogram of kernel leading degrees via degree-ordered elimination.

    Coordinates are sorted by ascending degree; RREF rows with pivot in a
    degree-d coordinate span exactly the part of the kernel with leading
    degree d.
    """
    if not kernel_vectors:
        return {}, []
    order = sorted(range(len(block_degrees)), key=lambda i: (block_degrees[i], i))
    reordered = [tuple(v[i] for i in order) for v in kernel_vectors]
    red = row_reduce(Matrix(field, reordered))
    hist: dict = {}
    vectors = []
    for row, pc in zip(red.rref.data, red.pivots):
        d = block_degrees[order[pc]]
        hist[d] = hist.get(d, 0) + 1
        back = [field.zero] * len(block_degrees)
        for j, c in enumerate(row):
            back[order[j]] = c
        vectors.append((d, tuple(back)))
    return hist, vectors


def asphericity_probe(p: Presentation, field: Field | None = None,
                      cap: int | None = None, budget: int = 5_000_000) -> AsphericityReport:
    field = field or p.field
    cap = cap if cap is not None else p.trunc
    algebra = build_quotient_algebra(p, field, cap, budget)
    f = field
    ny = len(p.relators)
    nx = p.n_gens
    dim = algebra.dim

    if ny == 0:
        return AsphericityReport(p, f, cap, dim, tuple([0] * (cap + 1)), cap, 0, 0, 0,
                                 "no-obstruction-to-degree-N", None)

    jac = fox_jacobian(p, algebra)
    # the linear map A^Y → A^X, a ↦ (Σ_y a_y·J_{yx})_x
    mult = [[algebra.right_mult_matrix(jac[y][x]) for x in range(nx)] for y in range(ny)]
    rows = []
    for x in range(nx):
        for i in range(dim):
            row = []
            for y in range(ny):
                row.extend(mult[y][x].data[i])
            rows.append(tuple(row))
    big = Matrix(f, rows)
    kernel = list(row_reduce(big).kernel)

    block_degrees = [algebra.basis_degree(i) for _ in range(ny) for i in range(dim)]
    hist, vectors = _kernel_by_leading_degree(f, kernel, block_degrees)
    per_degree = tuple(hist.get(d, 0) for d in range(cap + 1))

    vals = [algebra.valuation(jac[y][x]) for y in range(ny) for x in range(nx)]
    vals = [v for v in vals if v is not None]
    v_min = min(vals) if vals else 0
    reliable_cap = cap - v_min
    kernel_reliable = sum(hist.get(d, 0) for d in range(0, max(reliable_cap, -1) + 1))
    witness = next((vec for d, vec in vectors if d <= reliable_cap), None)

    # Nakayama generator count of the image module M = Σ_y A·row_y
    nxdim = nx * dim
    gen_rows = []
    rad_rows = []
    for y in range(ny):
        for i in range(dim):
            vec = []
            for x in range(nx):
                vec.extend(mult[y][x].data[k][i] for k in range(dim))
            # vec = basis_i · row_y as an element of A^X (flat: x major, basis minor)
            if algebra.basis_degree(i) == 0:
                gen_rows.append(tuple(vec))
            else:
                rad_rows.append(tuple(vec))
    m_rank = row_reduce(Matrix(f, gen_rows + rad_rows)).rank if (gen_rows or rad_rows) else 0
    rad_rank = row_reduce(Matrix(f, rad_rows)).rank if rad_rows else 0
    coinv = m_rank - rad_rank

    if coinv < ny:
        verdict = "relators-dependent"
    elif kernel_reliable > 0:
        verdict = "kernel-detected"
    else:
        verdict = "no-obstruction-to-degree-N"
        witness = None
    return AsphericityReport(p, f, cap, dim, per_degree, reliable_cap,
                             kernel_reliable, coinv, ny, verdict, witness)


def subpresentation(p: Presentation, labels) -> Presentation:
    labels = tuple(labels)
    known = {lab for lab, _ in p.relators}
    for lab in labels:
        if lab not in known:
            raise KeyError(f"unknown relator label {lab!r}")
    keep = set(labels)
    return Presentation(p.generators,
                        tuple((lab, w) for lab, w in p.relators if lab in keep),
                        p.field, p.trunc)


@dataclass(frozen=True)
class TheoremInstanceTable:
    presentation: Presentation
    field: Field
    cap: int
    rows: tuple          # ((labels subset, AsphericityReport), ...)
    contradiction: bool  # parent no-obstruction while some child kernel-detected

    def parent_report(self) -> AsphericityReport:
        return self.rows[-1][1]


def theorem_instances(p: Presentation, field: Field | None = None,
                      cap: int | None = None, subsets=None,
                      budget: int = 5_000_000, max_relators: int = 10) -> TheoremInstanceTable:
    """Probe p and its subpresentations; flag parent/child contradictions.

    A parent with no obstruction whose subpresentation shows a reliable
    kernel would contradict the subpresentation theorem at truncation
    level, so it is surfaced loudly rather than averaged away.
    """
    field = field or p.field
    cap = cap if cap is not None else p.trunc
    labels = [lab for lab, _ in p.relators]
    if subsets is None:
        if len(labels) > max_relators:
            raise BudgetExceeded(f"2^{len(labels)} subpresentations exceed the budget; "
                                 "pass an explicit subset list")
        subsets = []
        for k in range(len(labels) + 1):
            subsets.extend(itertools.combinations(labels, k))
    rows = []
    for subset in subsets:
        sub = subpresentation(p, subset)
        rows.append((tuple(subset), asphericity_probe(sub, field, cap, budget)))
    by_labels = {r[0]: r[1] for r in rows}
    parent = by_labels.get(tuple(labels)) or rows[-1][1]
    contradiction = False
    if parent.verdict == "no-obstruction-to-degree-N":
        for subset, rep in rows:
            if len(subset) < len(labels) and rep.verdict == "kernel-detected":
                contradiction = True
    return TheoremInstanceTable(p, field, cap, tuple(rows), contradiction)
