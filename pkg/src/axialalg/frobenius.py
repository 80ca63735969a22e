"""Normalized Frobenius forms: axis selection, Gram matrix, radical.

The form is defined on a basis of axes by the mutual projections
(a, b) = phi_a(b) and extended bilinearly.  The axis set X' is chosen per
component of the axial decomposition:

* Case I   - noncommutative component: keep every axis;
* Case II  - commutative component of a single type: keep every axis;
* Case III - commutative component with both types lam and 1-lam present:
  keep the axes of one chosen type nu, forced to nu = 2 when the types are
  {-1, 2}; axes of the other type are excluded (and conjugates are added if
  needed to restore spanning).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import Algebra, Element
from .axes import AxisReport, analyze_axis
from .errors import AssociativityFailure, FormError, SymmetryFailure, TheoremViolation
from .graphs import DecompositionReport, axis_type
from .miyamoto import transport_report
from .models import make_B
from .twogen import brute_force_idempotents


@dataclass
class ComponentSelection:
    index: int
    case: str  # "I" | "II" | "III"
    chosen_nu: object  # scalar, Case III only
    axes: list
    reports: list
    excluded: list
    substitutions: list


@dataclass
class XPrimeSelection:
    decomposition: DecompositionReport
    components: list
    axes: list
    reports: list
    basis: list  # B: linearly independent axes spanning span(X')
    basis_reports: list
    truncated: bool
    notes: tuple = ()

    def all_closure_axes(self):
        return list(zip(self.decomposition.closure.axes, self.decomposition.closure.reports))


def choose_Xprime(
    decomp: DecompositionReport,
    max_rounds: int = 32,
    nu_overrides: dict | None = None,
) -> XPrimeSelection:
    """Select the axis set X' carrying the normalized form.

    nu_overrides maps component indices to the preferred type for Case III
    components; it is ignored where nu = 2 is forced (types {-1, 2}).
    """
    A = decomp.closure.generators[0].algebra
    field = A.field
    inv_by_key = {
        el.coords: inv for el, inv in zip(decomp.closure.axes, decomp.closure.involutions)
    }
    comps = []
    notes = []
    for comp in decomp.components:
        tdesc = comp.type_desc
        if tdesc.kind == "noncommutative":
            comps.append(
                ComponentSelection(comp.index, "I", None, list(comp.axes), list(comp.reports), [], [])
            )
            continue
        if tdesc.kind == "degenerate" or len(tdesc.values) == 1:
            comps.append(
                ComponentSelection(comp.index, "II", None, list(comp.axes), list(comp.reports), [], [])
            )
            continue
        # Case III: both commutative types lam, 1-lam present (lam != 1/2).
        vals = list(tdesc.values)
        minus_one, two = field.scalar(-1), field.scalar(2)
        if set(vals) == {minus_one, two}:
            nu = two
        elif nu_overrides is not None and comp.index in nu_overrides:
            nu = field.scalar(nu_overrides[comp.index])
            if nu not in vals:
                raise FormError(f"override type {nu} is not present in component {comp.index}")
        else:
            nu = axis_type(comp.reports[0])[1]
        kept, kept_reports, excluded, subs = [], [], [], []
        for x, r in zip(comp.axes, comp.reports):
            if axis_type(r) == ("comm", nu):
                kept.append(x)
                kept_reports.append(r)
            else:
                excluded.append(x)
        target_span = linalg.span_basis([list(v.coords) for v in comp.subalgebra_basis], field)
        span = linalg.span_basis([list(x.coords) for x in kept], field)
        rounds = 0
        while len(span) < len(target_span) and rounds < max_rounds:
            rounds += 1
            grew = False
            for y, ry in zip(comp.axes, comp.reports):
                if axis_type(ry) == ("comm", nu):
                    continue
                inv_y = inv_by_key.get(y.coords)
                if inv_y is None:
                    continue
                for z, rz in list(zip(kept, kept_reports)):
                    if (z * y).is_zero():
                        continue
                    moved = inv_y(z)
                    if any(moved.coords == k.coords for k in kept):
                        continue
                    kept.append(moved)
                    kept_reports.append(transport_report(rz, inv_y))
                    subs.append(f"added conjugate of {z!r} under the involution of excluded axis {y!r}")
                    span, g = linalg.extend_span(span, list(moved.coords), field)
                    grew = grew or g
            if not grew:
                break
        if len(span) < len(target_span):
            notes.append(f"component {comp.index}: selected type {nu} axes do not span (truncated closure?)")
        comps.append(ComponentSelection(comp.index, "III", nu, kept, kept_reports, excluded, subs))
    axes = [x for c in comps for x in c.axes]
    reports = [r for c in comps for r in c.reports]
    basis, basis_reports = [], []
    span = []
    for x, r in zip(axes, reports):
        span, grew = linalg.extend_span(span, list(x.coords), field)
        if grew:
            basis.append(x)
            basis_reports.append(r)
    return XPrimeSelection(
        decomposition=decomp,
        components=comps,
        axes=axes,
        reports=reports,
        basis=basis,
        basis_reports=basis_reports,
        truncated=decomp.truncated,
        notes=tuple(notes),
    )


def _phi_functional(report: AxisReport):
    """Row functional u -> phi_a(u), from the axis's eigenbasis."""
    A = report.element.algebra
    field = A.field
    a = report.element
    zero_basis = report.joint_space((field.zero, field.zero))
    one_basis = report.one_part_basis()
    cols = [a] + zero_basis + one_basis
    if len(cols) != A.dim:
        raise FormError("axis eigenspaces do not span the algebra")
    P = [[c.coords[k] for c in cols] for k in range(A.dim)]
    Pinv = linalg.invert(P, field)
    if Pinv is None:
        raise FormError("axis eigenbasis is singular")
    return Pinv[0]


@dataclass
class FrobeniusForm:
    selection: XPrimeSelection
    basis: list  # the axes of B
    gram: list  # Gram matrix in B coordinates
    gram_ambient: list  # Gram matrix in ambient coordinates
    radical_basis: list

    @property
    def algebra(self) -> Algebra:
        return self.basis[0].algebra

    def value(self, u: Element, v: Element):
        field = self.algebra.field
        out = field.zero
        Gv = linalg.mat_vec(self.gram_ambient, list(v.coords), field)
        for x, y in zip(u.coords, Gv):
            if x != 0 and y != 0:
                out = out + x * y
        return out

    def norm(self, u: Element):
        return self.value(u, u)

    def in_radical(self, u: Element) -> bool:
        rows = [list(r.coords) for r in self.radical_basis]
        if not rows:
            return u.is_zero()
        return linalg.in_span(linalg.span_basis(rows, self.algebra.field), list(u.coords), self.algebra.field)


def build_form(selection: XPrimeSelection) -> FrobeniusForm:
    """Build and fully verify the normalized form on the chosen axes."""
    basis = selection.basis
    if not basis:
        raise FormError("empty axis basis")
    A = basis[0].algebra
    field = A.field
    n = A.dim
    if len(basis) != n:
        raise FormError(
            f"X' spans only {len(basis)} of {n} dimensions; "
            "increase the closure budget or supply more axes"
        )
    functionals = [_phi_functional(r) for r in selection.basis_reports]
    gram = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            f = functionals[i]
            gram[i][j] = _dot(f, basis[j].coords, field)
    for i in range(n):
        for j in range(i + 1, n):
            if gram[i][j] != gram[j][i]:
                raise SymmetryFailure(
                    f"phi_{i}({j}) = {gram[i][j]} but phi_{j}({i}) = {gram[j][i]}"
                )
    P = [[basis[j].coords[k] for j in range(n)] for k in range(n)]
    Pinv = linalg.invert(P, field)
    gram_amb = linalg.mat_mul(linalg.transpose(Pinv), linalg.mat_mul(gram, Pinv, field), field)

    form = FrobeniusForm(selection, basis, gram, gram_amb, [])

    # Normalization and the projection identity on every selected axis.
    for x, r in zip(selection.axes, selection.reports):
        f = _phi_functional(r)
        for j in range(n):
            ej = A.basis_element(j)
            if form.value(x, ej) != _dot(f, ej.coords, field):
                raise FormError(f"(a,u) != phi_a(u) for axis {x!r}")
        if form.norm(x) != field.one:
            raise FormError(f"axis {x!r} has norm {form.norm(x)} != 1")

    # Associativity (x, yz) = (xy, z) on all basis triples.
    basis_els = A.basis()
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = form.value(basis_els[i], basis_els[j] * basis_els[k])
                rhs = form.value(basis_els[i] * basis_els[j], basis_els[k])
                if lhs != rhs:
                    raise AssociativityFailure(
                        f"(e{i}, e{j}e{k}) = {lhs} != {rhs} = (e{i}e{j}, e{k})"
                    )

    radical = [A.element(v) for v in linalg.kernel(gram_amb, field)]
    rad_rows = linalg.span_basis([list(r.coords) for r in radical], field)
    for r in radical:
        for e in basis_els:
            for prod in (r * e, e * r):
                if not prod.is_zero() and not linalg.in_span(rad_rows, list(prod.coords), field):
                    raise FormError("radical is not an ideal")
    form.radical_basis = radical
    return form


def _dot(row, coords, field):
    out = field.zero
    for x, y in zip(row, coords):
        if x != 0 and y != 0:
            out = out + x * y
    return out


def radical(form: FrobeniusForm) -> list:
    """Basis of the radical of the form (already verified to be an ideal)."""
    return list(form.radical_basis)


@dataclass
class A0Verdict:
    verdict: str  # "closed" | "exceptional_case"
    products_contained: bool
    norm: object
    in_radical: bool
    neighbor: Element | None = None


def check_A0_closed(a_report: AxisReport, form: FrobeniusForm) -> A0Verdict:
    """Is A_0(a)^2 contained in A_0(a)?

    The one admissible exception: a commutative axis of type -1 (with
    -1 != 1/2) having a type-2 neighbor; such an axis must have norm zero and
    lie in the radical.  Any other failure raises TheoremViolation.
    """
    A = a_report.element.algebra
    field = A.field
    a = a_report.element
    zero_basis = a_report.joint_space((field.zero, field.zero))
    span0 = linalg.span_basis([list(u.coords) for u in zero_basis], field)
    contained = True
    for u in zero_basis:
        for v in zero_basis:
            w = u * v
            if not w.is_zero() and not linalg.in_span(span0, list(w.coords), field):
                contained = False

    minus_one, two = field.scalar(-1), field.scalar(2)
    exceptional = False
    neighbor = None
    half = field.one / two
    if axis_type(a_report) == ("comm", minus_one) and minus_one != half:
        for x, r in form.selection.all_closure_axes():
            if x.coords == a.coords:
                continue
            if axis_type(r) == ("comm", two) and not (a * x).is_zero():
                exceptional = True
                neighbor = x
                break

    nrm = form.norm(a)
    in_rad = form.in_radical(a)
    if exceptional:
        if nrm != 0 or not in_rad:
            raise TheoremViolation(
                f"type -1 axis with a type-2 neighbor must be radical: norm={nrm}, in_radical={in_rad}"
            )
        return A0Verdict("exceptional_case", contained, nrm, in_rad, neighbor)
    if not contained:
        raise TheoremViolation(f"A_0(a)^2 escapes A_0(a) for non-exceptional axis {a!r}")
    return A0Verdict("closed", contained, nrm, in_rad, None)


def scan_A0_exceptional(primes) -> list:
    """Search small prime fields for a violation of A_0(a)^2 <= A_0(a) in the
    exceptional (type -1 with type-2 neighbor) situation.

    Returns the list of findings; an empty list means no counterexample was
    met.  Nothing is asserted: the question is open.
    """
    from .fields import Field

    findings = []
    for p in primes:
        if p == 3:  # 2 = -1 there, the configuration degenerates
            continue
        field = Field.prime(p)
        A = make_B(field, 2, field.scalar(3) / field.scalar(2))
        idems = brute_force_idempotents(A)
        reports = [analyze_axis(e) for e in idems]
        axes = [(e, r) for e, r in zip(idems, reports) if r.is_primitive_axis]
        for e, r in axes:
            if axis_type(r) != ("comm", field.scalar(-1)):
                continue
            has_two_neighbor = any(
                axis_type(r2) == ("comm", field.scalar(2)) and not (e * x2).is_zero()
                for x2, r2 in axes
                if x2.coords != e.coords
            )
            if not has_two_neighbor:
                continue
            zero_basis = r.joint_space((field.zero, field.zero))
            span0 = linalg.span_basis([list(u.coords) for u in zero_basis], field)
            for u in zero_basis:
                for v in zero_basis:
                    w = u * v
                    if not w.is_zero() and not linalg.in_span(span0, list(w.coords), field):
                        findings.append({"p": p, "axis": repr(e), "product": repr(w)})
    return findings
