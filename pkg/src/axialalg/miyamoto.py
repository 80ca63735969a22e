"""Miyamoto involutions, orbit closures, and spanning checks.

The involution of an axis fixes Fa + A_0(a) and negates A_{lam,delta}(a).
Orbits of axis sets under these involutions can be infinite over Q (the
half-point families), so closures carry a depth budget and a size budget and
always say whether they were truncated.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import Algebra, Element
from .axes import AxisReport, EigenSpace, JointEigenSpace, analyze_axis
from .errors import NotAnAxis, NotAutomorphism

DEFAULT_MAX_DEPTH = 32
DEFAULT_MAX_AXES = 128


def is_automorphism(A: Algebra, matrix) -> bool:
    """Check that an invertible matrix preserves all basis products."""
    field = A.field
    if linalg.invert(matrix, field) is None:
        return False
    images = [linalg.mat_vec(matrix, [field.one if k == i else field.zero for k in range(A.dim)], field) for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = linalg.mat_vec(matrix, list(A.table[i][j]), field)
            rhs = A.multiply_coords(images[i], images[j])
            if lhs != rhs:
                return False
    return True


class Involution:
    """An order-2 algebra automorphism attached to an axis."""

    __slots__ = ("algebra", "matrix", "source_axis")

    def __init__(self, algebra: Algebra, matrix, source_axis: Element, verify: bool = True):
        self.algebra = algebra
        self.matrix = matrix
        self.source_axis = source_axis
        if verify:
            n = algebra.dim
            sq = linalg.mat_mul(matrix, matrix, algebra.field)
            if not linalg.mat_eq(sq, linalg.identity(n, algebra.field)):
                raise NotAnAxis("candidate involution does not square to the identity")
            if not is_automorphism(algebra, matrix):
                raise NotAutomorphism("candidate involution is not an algebra automorphism")

    def __call__(self, u: Element) -> Element:
        return self.algebra.element(linalg.mat_vec(self.matrix, list(u.coords), self.algebra.field))

    def apply_matrix(self, M):
        return linalg.mat_mul(self.matrix, M, self.algebra.field)

    def __eq__(self, other):
        return isinstance(other, Involution) and self.algebra == other.algebra and linalg.mat_eq(self.matrix, other.matrix)

    def __repr__(self):
        return f"tau[{self.source_axis!r}]"


def miyamoto(report: AxisReport, verify: bool = True) -> Involution:
    """The involution fixing Fa + A_0(a) and negating A_{lam,delta}(a)."""
    if not (report.is_axis and report.jordan_condition and report.joint_complete):
        raise NotAnAxis("Miyamoto involution requires an axis with the Jordan condition")
    A = report.element.algebra
    field = A.field
    n = A.dim
    a = report.element
    zero_basis = report.joint_space((field.zero, field.zero))
    one_basis = report.one_part_basis()
    cols = [list(a.coords)] + [list(u.coords) for u in zero_basis] + [list(w.coords) for w in one_basis]
    P = [[cols[j][i] for j in range(n)] for i in range(n)]
    Pinv = linalg.invert(P, field)
    if Pinv is None:
        raise NotAnAxis("eigenspaces do not span; cannot build the involution")
    signs = [field.one] * (1 + len(zero_basis)) + [-field.one] * len(one_basis)
    D = [[signs[i] if i == j else field.zero for j in range(n)] for i in range(n)]
    M = linalg.mat_mul(P, linalg.mat_mul(D, Pinv, field), field)
    return Involution(A, M, a, verify=verify)


def conjugate_involution(inv: Involution, rho) -> Involution:
    """Transport an involution along an automorphism: tau_{a^rho} = rho tau rho^-1.

    rho may be a matrix or an Involution.  The result is verified to equal
    the involution built directly from the transported axis.
    """
    A = inv.algebra
    field = A.field
    R = rho.matrix if isinstance(rho, Involution) else rho
    if not is_automorphism(A, R):
        raise NotAutomorphism("rho is not an automorphism")
    Rinv = linalg.invert(R, field)
    M = linalg.mat_mul(R, linalg.mat_mul(inv.matrix, Rinv, field), field)
    moved = A.element(linalg.mat_vec(R, list(inv.source_axis.coords), field))
    direct = miyamoto(analyze_axis(moved))
    if not linalg.mat_eq(M, direct.matrix):
        raise NotAutomorphism("conjugated involution disagrees with the transported axis")
    return Involution(A, M, moved, verify=False)


def transport_report(report: AxisReport, inv: Involution) -> AxisReport:
    """Image of an axis report under an automorphism, without re-analysis.

    Automorphisms carry eigenspaces to eigenspaces and preserve all the
    verdict flags, so the transported report can be assembled exactly.
    """
    moved = inv(report.element)

    def move_spaces(spaces):
        return tuple(EigenSpace(s.value, tuple(inv(u) for u in s.basis)) for s in spaces)

    joints = tuple(JointEigenSpace(js.pair, tuple(inv(u) for u in js.basis)) for js in report.joint_eigen)
    rep = AxisReport(
        element=moved,
        is_idempotent=report.is_idempotent,
        lam=report.lam,
        delta=report.delta,
        eigen_ok=report.eigen_ok,
        left_eigen=move_spaces(report.left_eigen),
        right_eigen=move_spaces(report.right_eigen),
        joint_eigen=joints,
        min_poly_left=report.min_poly_left,
        min_poly_right=report.min_poly_right,
        lr_commute=report.lr_commute,
        semisimple=report.semisimple,
        primitive_left=report.primitive_left,
        primitive_right=report.primitive_right,
        joint_complete=report.joint_complete,
        jordan_condition=report.jordan_condition,
        fusion_ok=report.fusion_ok,
        commutative_type=report.commutative_type,
        type_degenerate=report.type_degenerate,
        lr_quad_ok=report.lr_quad_ok,
    )
    return rep


@dataclass
class ClosureResult:
    """Orbit of a set of axes under its own Miyamoto involutions."""

    generators: list
    axes: list  # Elements, in discovery order
    reports: list  # parallel AxisReports
    involutions: list  # parallel Involutions
    span_basis: list  # Elements, canonical basis of span(axes)
    truncated: bool
    depth_reached: int

    @property
    def span_dim(self) -> int:
        return len(self.span_basis)

    def report_for(self, element: Element) -> AxisReport:
        key = element.coords
        for el, rep in zip(self.axes, self.reports):
            if el.coords == key:
                return rep
        raise KeyError("element is not in the closure")


def closure(
    X,
    max_depth: int = DEFAULT_MAX_DEPTH,
    max_axes: int = DEFAULT_MAX_AXES,
) -> ClosureResult:
    """Breadth-first orbit of X under the involutions of the current set.

    Every generator must pass the full axis checks.  New orbit elements are
    detected by their exact coordinate vectors.  The search stops when the
    set stabilizes; if the depth or size budget is hit first the result is
    flagged truncated (the orbit can genuinely be infinite over Q).
    """
    gens = list(X)
    if not gens:
        raise NotAnAxis("closure of an empty set")
    A = gens[0].algebra
    field = A.field

    elements: list[Element] = []
    reports: list[AxisReport] = []
    invs: list[Involution] = []
    seen = set()

    def add(el, rep):
        if el.coords in seen:
            return False
        seen.add(el.coords)
        elements.append(el)
        reports.append(rep)
        invs.append(miyamoto(rep, verify=False))
        return True

    for g in gens:
        rep = analyze_axis(g)
        if not rep.is_primitive_axis:
            raise NotAnAxis(f"{g!r} fails the axis checks: {rep.notes or rep.type_label()}")
        add(g, rep)

    span = linalg.span_basis([list(g.coords) for g in elements], field)
    truncated = False
    depth = 0
    frontier = list(range(len(elements)))
    while frontier and depth < max_depth:
        depth += 1
        new_idx = []
        old_count = len(elements)
        budget_hit = False
        # tau from every known axis applied to the frontier, and tau from the
        # frontier applied to everything older; all other pairs were already
        # visited in earlier rounds.
        for ti in range(old_count):
            targets = frontier if ti not in frontier else range(old_count)
            for yi in targets:
                if ti == yi:
                    continue
                moved = invs[ti](elements[yi])
                if moved.coords in seen:
                    continue
                if len(elements) >= max_axes:
                    budget_hit = True
                    break
                rep = transport_report(reports[yi], invs[ti])
                add(moved, rep)
                new_idx.append(len(elements) - 1)
                span, _ = linalg.extend_span(span, list(moved.coords), field)
            if budget_hit:
                break
        if budget_hit:
            truncated = True
            break
        if not new_idx:
            frontier = []
            break
        frontier = new_idx
    if frontier and depth >= max_depth:
        truncated = True
    return ClosureResult(
        generators=gens,
        axes=elements,
        reports=reports,
        involutions=invs,
        span_basis=[A.element(r) for r in span],
        truncated=truncated,
        depth_reached=depth,
    )


def spanning_check(X, algebra: Algebra | None = None, **kwargs) -> tuple[bool, ClosureResult]:
    """Does the closure of X span the ambient algebra?"""
    clo = closure(X, **kwargs)
    A = algebra or clo.generators[0].algebra
    return clo.span_dim == A.dim, clo
