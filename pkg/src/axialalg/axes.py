"""Idempotent and axis analysis: eigenspaces, fusion rules, decompositions.

The conventions used throughout:

* an *axis* is an idempotent whose left and right multiplication operators
  are both semisimple and commute, with 1-eigenspace of dimension one on each
  side, and with eigenvalues contained in {0, 1, lam} x {0, 1, delta};
* the *third eigenvalue* on a side is the one outside {0, 1}; when a side has
  no third eigenvalue it is reported as None ("absent"), and an axis lacking
  it on both sides is flagged type-degenerate;
* the *Jordan condition* asks that the joint eigenspaces for (lam, 0) and
  (0, delta) vanish, in which case the algebra splits as
  Fa + A_0(a) + A_{lam,delta}(a) and carries a Z_2-grading (the fusion rules).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import Algebra, Element
from .errors import DecompositionFailed, NotAnAxis, NotIdempotent


@dataclass(frozen=True)
class EigenSpace:
    value: object  # scalar
    basis: tuple


@dataclass(frozen=True)
class JointEigenSpace:
    pair: tuple  # (mu, eta) scalars
    basis: tuple


@dataclass
class AxisReport:
    """Full verdict on one candidate idempotent."""

    element: Element
    is_idempotent: bool = False
    lam: object = None  # third left eigenvalue, None = absent
    delta: object = None  # third right eigenvalue, None = absent
    eigen_ok: bool = False  # eigenvalues contained in {0,1,lam} x {0,1,delta}
    left_eigen: tuple = ()
    right_eigen: tuple = ()
    joint_eigen: tuple = ()
    min_poly_left: tuple = ()
    min_poly_right: tuple = ()
    lr_commute: bool = False
    semisimple: bool = False
    primitive_left: bool = False
    primitive_right: bool = False
    joint_complete: bool = False
    jordan_condition: bool = False
    fusion_ok: bool = False
    fusion_witnesses: tuple = ()
    commutative_type: bool = False
    type_degenerate: bool = False
    lr_quad_ok: bool = False  # L^2 - L == R^2 - R
    notes: tuple = ()

    @property
    def is_axis(self) -> bool:
        return (
            self.is_idempotent
            and self.lr_commute
            and self.semisimple
            and self.primitive_left
            and self.primitive_right
            and self.eigen_ok
        )

    @property
    def is_primitive_axis(self) -> bool:
        """Axis satisfying the Jordan condition and the fusion rules."""
        return self.is_axis and self.joint_complete and self.jordan_condition and self.fusion_ok

    def zero_part_basis(self):
        """Basis of the 0-part Fa + A_0(a)."""
        out = [self.element]
        out.extend(self.joint_space((0, 0)))
        return out

    def one_part_basis(self):
        """Basis of the 1-part A_{lam,delta}(a)."""
        if self.lam is None and self.delta is None:
            return []
        return list(self.joint_space((self.lam, self.delta)))

    def joint_space(self, pair):
        for js in self.joint_eigen:
            if _pair_matches(js.pair, pair):
                return list(js.basis)
        return []

    def type_label(self) -> str:
        if not self.is_axis:
            return "not-an-axis"
        if self.type_degenerate:
            return "degenerate"
        if self.commutative_type:
            return f"{self.lam}"
        return f"({self.lam},{self.delta})"


def _pair_matches(p, q):
    def same(x, y):
        if x is None or y is None:
            return x is None and y is None
        return x == y

    return same(p[0], q[0]) and same(p[1], q[1])


def axis_eigenvalues(a: Element):
    """Third eigenvalues (lam, delta) of an idempotent's L and R operators.

    Strips the factors t and (t-1) from each minimal polynomial.  Returns
    None if a remainder has degree > 1 (the idempotent is not of Jordan
    type over this field); a None entry inside the pair means that side has
    no eigenvalue outside {0, 1}.
    """
    if not a.is_idempotent():
        raise NotIdempotent(f"{a!r} is not idempotent")
    A = a.algebra
    out = []
    for M in (A.left_mult_matrix(a.coords), A.right_mult_matrix(a.coords)):
        m = linalg.minimal_polynomial(M, A.field)
        rem, _, _ = linalg.strip_known_roots(m, A.field)
        if len(rem) == 1:
            out.append(None)
        elif len(rem) == 2:
            out.append(-rem[0])
        else:
            return None
    return tuple(out)


def analyze_axis(a: Element) -> AxisReport:
    """Analyze one candidate idempotent; never raises on bad input."""
    A = a.algebra
    field = A.field
    n = A.dim
    rep = AxisReport(element=a)
    if a * a != a:
        rep.notes = ("not idempotent",)
        return rep
    rep.is_idempotent = True
    if a.is_zero():
        rep.notes = ("zero element",)
        return rep

    L = A.left_mult_matrix(a.coords)
    R = A.right_mult_matrix(a.coords)
    rep.lr_commute = linalg.mat_eq(linalg.mat_mul(L, R, field), linalg.mat_mul(R, L, field))
    LL = linalg.mat_sub(linalg.mat_mul(L, L, field), L)
    RR = linalg.mat_sub(linalg.mat_mul(R, R, field), R)
    rep.lr_quad_ok = linalg.mat_eq(LL, RR)

    mL = linalg.minimal_polynomial(L, field)
    mR = linalg.minimal_polynomial(R, field)
    rep.min_poly_left = tuple(mL)
    rep.min_poly_right = tuple(mR)
    squarefree = linalg.poly_is_squarefree(mL, field) and linalg.poly_is_squarefree(mR, field)

    sides = []
    eigen_ok = True
    for m in (mL, mR):
        rem, k0, k1 = linalg.strip_known_roots(m, field)
        if len(rem) == 1:
            sides.append((None, k0 > 0, k1 > 0))
        elif len(rem) == 2:
            third = -rem[0]
            sides.append((third, k0 > 0, k1 > 0))
        else:
            sides.append((None, k0 > 0, k1 > 0))
            eigen_ok = False
    rep.eigen_ok = eigen_ok
    (rep.lam, has0L, has1L) = sides[0]
    (rep.delta, has0R, has1R) = sides[1]

    def eigenspaces(M, third, has0, has1):
        vals = []
        if has1:
            vals.append(field.one)
        if has0:
            vals.append(field.zero)
        if third is not None:
            vals.append(third)
        spaces = []
        for mu in vals:
            shifted = [[M[i][j] - (mu if i == j else field.zero) for j in range(n)] for i in range(n)]
            ker = linalg.kernel(shifted, field)
            spaces.append(EigenSpace(mu, tuple(A.element(v) for v in ker)))
        return spaces

    rep.left_eigen = tuple(eigenspaces(L, rep.lam, has0L, has1L))
    rep.right_eigen = tuple(eigenspaces(R, rep.delta, has0R, has1R))

    dimsL = sum(len(s.basis) for s in rep.left_eigen)
    dimsR = sum(len(s.basis) for s in rep.right_eigen)
    rep.semisimple = squarefree and eigen_ok and dimsL == n and dimsR == n

    one_left = next((s for s in rep.left_eigen if s.value == 1), None)
    one_right = next((s for s in rep.right_eigen if s.value == 1), None)
    rep.primitive_left = one_left is not None and len(one_left.basis) == 1
    rep.primitive_right = one_right is not None and len(one_right.basis) == 1

    # Joint eigenspaces for the five pairs allowed by primitivity.
    def joint(mu, eta):
        rows = []
        for i in range(n):
            rows.append([L[i][j] - (mu if i == j else field.zero) for j in range(n)])
        for i in range(n):
            rows.append([R[i][j] - (eta if i == j else field.zero) for j in range(n)])
        return tuple(A.element(v) for v in linalg.kernel(rows, field))

    pairs = [(field.one, field.one), (field.zero, field.zero)]
    if rep.delta is not None:
        pairs.append((field.zero, rep.delta))
    if rep.lam is not None:
        pairs.append((rep.lam, field.zero))
    if rep.lam is not None or rep.delta is not None:
        pairs.append((rep.lam, rep.delta))
    joints = []
    for mu, eta in pairs:
        # A pair with an absent eigenvalue labels the zero space.
        basis = () if (mu is None or eta is None) else joint(mu, eta)
        joints.append(JointEigenSpace((mu, eta), basis))
    rep.joint_eigen = tuple(joints)

    lam0 = rep.joint_space((rep.lam, field.zero)) if rep.lam is not None else []
    zerod = rep.joint_space((field.zero, rep.delta)) if rep.delta is not None else []
    rep.jordan_condition = len(lam0) == 0 and len(zerod) == 0

    total = sum(len(js.basis) for js in rep.joint_eigen)
    rep.joint_complete = total == n

    rep.commutative_type = rep.lam == rep.delta if (rep.lam is not None) == (rep.delta is not None) else False
    rep.type_degenerate = rep.lam is None and rep.delta is None

    # Fusion rules: the 0-part and 1-part multiply like a Z_2-grading.
    zero_part = rep.zero_part_basis()
    one_part = rep.one_part_basis()
    span0 = linalg.span_basis([list(u.coords) for u in zero_part], field)
    span1 = linalg.span_basis([list(u.coords) for u in one_part], field)
    witnesses = []

    def check(u, v, target, rule):
        w = u * v
        if not w.is_zero() and not linalg.in_span(target, list(w.coords), field):
            witnesses.append((rule, u, v, w))

    for u in zero_part:
        for v in zero_part:
            check(u, v, span0, "0*0")
    for u in zero_part:
        for w in one_part:
            check(u, w, span1, "0*1")
            check(w, u, span1, "1*0")
    for w in one_part:
        for w2 in one_part:
            check(w, w2, span0, "1*1")
    rep.fusion_ok = not witnesses
    rep.fusion_witnesses = tuple(witnesses)
    return rep


@dataclass(frozen=True)
class ElementDecomposition:
    """y = alpha * a + zero_part + minus_part with respect to an axis a."""

    alpha: object
    zero_part: Element
    minus_part: Element

    def reassemble(self, axis: Element) -> Element:
        return axis.scale(self.alpha) + self.zero_part + self.minus_part


def decompose_wrt(y: Element, report: AxisReport) -> ElementDecomposition:
    """Exact decomposition of y as alpha*a + y_0 + y_{lam,delta}."""
    if not (report.is_axis and report.jordan_condition):
        raise NotAnAxis("decomposition requires a verified axis with the Jordan condition")
    A = y.algebra
    field = A.field
    a = report.element
    zero_basis = report.joint_space((field.zero, field.zero))
    one_basis = report.one_part_basis()
    cols_elems = [a] + zero_basis + one_basis
    M = [[e.coords[k] for e in cols_elems] for k in range(A.dim)]
    sol = linalg.solve(M, list(y.coords), field)
    if sol is None:
        raise DecompositionFailed(f"{y!r} is not in Fa + A_0 + A_lam,delta")
    alpha = sol[0]
    z = A.zero()
    for c, e in zip(sol[1 : 1 + len(zero_basis)], zero_basis):
        z = z + e.scale(c)
    w = A.zero()
    for c, e in zip(sol[1 + len(zero_basis) :], one_basis):
        w = w + e.scale(c)
    return ElementDecomposition(alpha, z, w)


def phi_projection(y: Element, report: AxisReport):
    """phi_a(y): the coefficient of the axis in the decomposition of y."""
    return decompose_wrt(y, report).alpha


def subalgebra_closure(generators) -> list:
    """Canonical basis of the subalgebra generated by the given elements.

    Iterates V <- V + V*V until the span stabilizes; terminates because the
    dimension is bounded by the ambient dimension.
    """
    gens = list(generators)
    if not gens:
        raise NotAnAxis("closure of an empty set is undefined")
    A = gens[0].algebra
    field = A.field
    rows = linalg.span_basis([list(g.coords) for g in gens], field)
    while True:
        grew = False
        current = list(rows)
        for u in current:
            for v in current:
                prod = A.multiply_coords(u, v)
                rows, g = linalg.extend_span(rows, prod, field)
                grew = grew or g
        if not grew:
            break
    return [A.element(r) for r in rows]


@dataclass(frozen=True)
class FlexReport:
    ok: bool
    pair_witnesses: tuple
    triple_witnesses: tuple


def check_flexible(A: Algebra) -> FlexReport:
    """(xy)x = x(yx) on basis pairs plus its linearization on basis triples.

    Over fields of characteristic != 2 the linearized identity on a basis is
    equivalent to flexibility of the whole algebra.
    """
    basis = A.basis()
    pair_bad = []
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            if (x * y) * x != x * (y * x):
                pair_bad.append((A.basis_names[i], A.basis_names[j]))
    triple_bad = []
    n = A.dim
    for i in range(n):
        for k in range(i, n):
            x1, x2 = basis[i], basis[k]
            for j in range(n):
                y = basis[j]
                lhs = (x1 * y) * x2 + (x2 * y) * x1
                rhs = x1 * (y * x2) + x2 * (y * x1)
                if lhs != rhs:
                    triple_bad.append((A.basis_names[i], A.basis_names[j], A.basis_names[k]))
    return FlexReport(not pair_bad and not triple_bad, tuple(pair_bad), tuple(triple_bad))


def annihilator(A: Algebra) -> list:
    """Basis of {y : A*y = y*A = 0}."""
    rows = []
    for i in range(A.dim):
        ei = [A.field.zero] * A.dim
        ei[i] = A.field.one
        rows.extend(A.left_mult_matrix(ei))
        rows.extend(A.right_mult_matrix(ei))
    return [A.element(v) for v in linalg.kernel(rows, A.field)]


def relative_annihilator(A: Algebra, subspace_rows) -> list:
    """Elements z of span(subspace) with u*z = z*u = 0 for all u in the span."""
    field = A.field
    rows = [list(r.coords) if isinstance(r, Element) else list(r) for r in subspace_rows]
    if not rows:
        return []
    d = len(rows)
    eqs = []
    for u in rows:
        prods_l = [A.multiply_coords(u, v) for v in rows]
        prods_r = [A.multiply_coords(v, u) for v in rows]
        for k in range(A.dim):
            eqs.append([prods_l[j][k] for j in range(d)])
            eqs.append([prods_r[j][k] for j in range(d)])
    out = []
    for combo in linalg.kernel(eqs, field):
        vec = [field.zero] * A.dim
        for c, r in zip(combo, rows):
            if c != 0:
                vec = [x + c * y for x, y in zip(vec, r)]
        out.append(A.element(vec))
    return out


def ideal_and_quotient(A: Algebra, generators):
    """Two-sided ideal generated by a set, with the quotient algebra.

    Returns (ideal_basis, quotient_algebra, project) where project maps
    elements of A onto the quotient.  The quotient basis consists of the
    ambient basis vectors at the non-pivot coordinates of the ideal's
    echelon basis, which makes the construction deterministic.
    """
    field = A.field
    gens = [list(g.coords) if isinstance(g, Element) else list(g) for g in generators]
    rows = linalg.span_basis(gens, field)
    while True:
        grew = False
        current = list(rows)
        for i in range(A.dim):
            ei = [field.zero] * A.dim
            ei[i] = field.one
            for v in current:
                for prod in (A.multiply_coords(ei, v), A.multiply_coords(v, ei)):
                    rows, g = linalg.extend_span(rows, prod, field)
                    grew = grew or g
        if not grew:
            break
    pivots = []
    for r in rows:
        pivots.append(next(i for i, x in enumerate(r) if x != 0))
    pivot_set = set(pivots)
    comp = [j for j in range(A.dim) if j not in pivot_set]

    def reduce(vec):
        w = list(vec)
        for row, p in zip(rows, pivots):
            if w[p] != 0:
                f = w[p]
                w = [x - f * y for x, y in zip(w, row)]
        return w

    def qcoords(vec):
        w = reduce(vec)
        return [w[j] for j in comp]

    names = [A.basis_names[j] for j in comp]
    table = []
    for i in comp:
        trow = []
        for j in comp:
            trow.append(qcoords(A.table[i][j]))
        table.append(trow)
    Q = Algebra(field, names, table)

    def project(u: Element) -> Element:
        return Q.element(qcoords(list(u.coords)))

    return [A.element(r) for r in rows], Q, project
