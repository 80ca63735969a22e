"""The axial graph, its strong refinement, and the axial decomposition.

Vertices are primitive axes; two axes are joined when their product is
nonzero, and strongly joined when together they generate a 3-dimensional
subalgebra.  Connected components of a closed axis set generate subalgebras
that pairwise multiply to zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import Algebra, subalgebra
from .axes import (
    AxisReport,
    analyze_axis,
    ideal_and_quotient,
    relative_annihilator,
    subalgebra_closure,
)
from .errors import MixedComponent
from .miyamoto import ClosureResult, closure as miy_closure


class DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)

    def groups(self) -> list:
        by_root: dict[int, list[int]] = {}
        for i in range(len(self.parent)):
            by_root.setdefault(self.find(i), []).append(i)
        return [by_root[r] for r in sorted(by_root)]


# ---------------------------------------------------------------------------
# Axis types
# ---------------------------------------------------------------------------


def _sort_key(x):
    if hasattr(x, "value"):
        return (x.value, 1)
    return (x, 0)


def axis_type(report: AxisReport):
    """("comm", lam) / ("noncomm", (lam, delta)) / ("degenerate", None)."""
    if report.type_degenerate:
        return ("degenerate", None)
    if report.commutative_type:
        return ("comm", report.lam)
    return ("noncomm", (report.lam, report.delta))


def complementary_type(t):
    kind, val = t
    if kind == "degenerate":
        return t
    if kind == "comm":
        return ("comm", 1 - val)
    lam, delta = val
    return ("noncomm", (delta, lam))


@dataclass(frozen=True)
class TypeDescriptor:
    """Type class of a connected component: a type and its complement."""

    kind: str  # "commutative" | "noncommutative" | "degenerate"
    values: tuple  # the lam values (comm) or (lam, delta) pairs present

    def label(self) -> str:
        if self.kind == "degenerate":
            return "degenerate"
        if self.kind == "commutative":
            vals = ", ".join(str(v) for v in self.values)
        else:
            vals = ", ".join(f"({p[0]},{p[1]})" for p in self.values)
        return f"{self.kind} {{{vals}}}"


def uniformity_check(reports) -> TypeDescriptor:
    """Verify all axes in a component have one type or its complement."""
    types = [axis_type(r) for r in reports]
    concrete = [t for t in types if t[0] != "degenerate"]
    if not concrete:
        return TypeDescriptor("degenerate", ())
    base = concrete[0]
    comp = complementary_type(base)
    for t in concrete:
        if t != base and t != comp:
            raise MixedComponent(f"component mixes types {base} and {t}")
    if base[0] == "comm":
        vals = sorted({t[1] for t in concrete}, key=_sort_key)
        return TypeDescriptor("commutative", tuple(vals))
    vals = sorted({t[1] for t in concrete}, key=lambda p: (_sort_key(p[0]), _sort_key(p[1])))
    return TypeDescriptor("noncommutative", tuple(vals))


# ---------------------------------------------------------------------------
# Graphs
# ---------------------------------------------------------------------------


@dataclass
class AxialGraph:
    vertices: list  # Elements
    reports: list  # parallel AxisReports
    edges: list  # (i, j) with i < j and x_i x_j != 0
    strong_edges: list  # (i, j) with dim<<x_i, x_j>> == 3
    symmetric: bool  # product-vanishing relation came out symmetric

    def components(self) -> list:
        ds = DisjointSet(len(self.vertices))
        for i, j in self.edges:
            ds.union(i, j)
        return ds.groups()

    def strong_components(self) -> list:
        ds = DisjointSet(len(self.vertices))
        for i, j in self.strong_edges:
            ds.union(i, j)
        return ds.groups()

    def distance(self, i: int, j: int) -> int:
        """Graph distance between two vertices; -1 if disconnected."""
        if i == j:
            return 0
        adj: dict[int, list[int]] = {k: [] for k in range(len(self.vertices))}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        dist = {i: 0}
        queue = [i]
        while queue:
            u = queue.pop(0)
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    if w == j:
                        return dist[w]
                    queue.append(w)
        return -1

    def dot(self) -> str:
        """DOT text; solid edges are axial, bold edges are strong."""
        lines = ["graph axial {"]
        for idx, v in enumerate(self.vertices):
            label = repr(v).replace('"', "'")
            lines.append(f'  v{idx} [label="{label}"];')
        strong = set(self.strong_edges)
        for i, j in self.edges:
            style = ' [style=bold]' if (i, j) in strong else ""
            lines.append(f"  v{i} -- v{j}{style};")
        for i, j in self.strong_edges:
            if (i, j) not in set(self.edges):
                lines.append(f"  v{i} -- v{j} [style=bold];")
        lines.append("}")
        return "\n".join(lines)


def build_axial_graph(axes, reports=None) -> AxialGraph:
    """Both edge relations on a verified set of axes."""
    axes = list(axes)
    if reports is None:
        reports = [analyze_axis(x) for x in axes]
    edges = []
    symmetric = True
    n = len(axes)
    for i in range(n):
        for j in range(i + 1, n):
            ij = not (axes[i] * axes[j]).is_zero()
            ji = not (axes[j] * axes[i]).is_zero()
            if ij != ji:
                symmetric = False
            if ij or ji:
                edges.append((i, j))
    strong = []
    for i, j in edges:
        if len(subalgebra_closure([axes[i], axes[j]])) == 3:
            strong.append((i, j))
    return AxialGraph(axes, list(reports), edges, strong, symmetric)


def strong_component_span_check(X, algebra: Algebra) -> bool:
    """Do the strong components of a generating set together span the algebra?

    Verifies sum_j <<Y_j>> = A for the strong components Y_j of X; this is a
    verification on the supplied set, not a search for a maximal one.
    """
    axes = list(X)
    graph = build_axial_graph(axes)
    field = algebra.field
    span = []
    for comp in graph.strong_components():
        sub = subalgebra_closure([axes[i] for i in comp])
        for v in sub:
            span, _ = linalg.extend_span(span, list(v.coords), field)
    return len(span) == algebra.dim


# ---------------------------------------------------------------------------
# Axial decomposition
# ---------------------------------------------------------------------------


@dataclass
class ZIdealReport:
    """Span of the cross products between the two orientations of a
    noncommutative component."""

    basis: list
    is_ideal: bool
    square_zero: bool
    quotient_splits: bool


@dataclass
class ComponentReport:
    index: int
    axes: list
    reports: list
    subalgebra_basis: list
    type_desc: TypeDescriptor
    annihilator_basis: list
    z_ideal: ZIdealReport | None = None


@dataclass
class DecompositionReport:
    closure: ClosureResult
    graph: AxialGraph
    components: list
    pairwise_products_zero: bool
    intersections: list  # (i, j, basis, annihilating)
    spanning: bool

    @property
    def truncated(self) -> bool:
        return self.closure.truncated


def _z_ideal_report(A: Algebra, comp_axes, comp_reports, sub_basis) -> ZIdealReport | None:
    field = A.field
    base = axis_type(comp_reports[0])
    if base[0] != "noncomm":
        return None
    comp_t = complementary_type(base)
    side1 = [x for x, r in zip(comp_axes, comp_reports) if axis_type(r) == base]
    side2 = [x for x, r in zip(comp_axes, comp_reports) if axis_type(r) == comp_t]
    if not side1 or not side2:
        return None
    rows = []
    for x1 in side1:
        for x2 in side2:
            rows.append(list((x1 * x2).coords))
            rows.append(list((x2 * x1).coords))
    zbasis = linalg.span_basis(rows, field)
    z_elems = [A.element(r) for r in zbasis]
    is_ideal = True
    for v in zbasis:
        for u in sub_basis:
            for prod in (A.multiply_coords(list(u.coords), v), A.multiply_coords(v, list(u.coords))):
                if not linalg.in_span(zbasis, prod, field):
                    is_ideal = False
    square_zero = all(
        all(x == 0 for x in A.multiply_coords(v, w)) for v in zbasis for w in zbasis
    )
    # Quotient by Z splits as the product of the images of the two sides.
    B, _, restrict = subalgebra(A, sub_basis)
    z_in_b = [restrict(z) for z in z_elems]
    _, Q, project = ideal_and_quotient(B, z_in_b)
    p1 = linalg.span_basis(
        [list(project(restrict(v)).coords) for v in subalgebra_closure(side1)], field
    )
    p2 = linalg.span_basis(
        [list(project(restrict(v)).coords) for v in subalgebra_closure(side2)], field
    )
    cross_zero = all(
        all(x == 0 for x in Q.multiply_coords(u, v)) and all(x == 0 for x in Q.multiply_coords(v, u))
        for u in p1
        for v in p2
    )
    meet = linalg.intersect_spans(p1, p2, field)
    quotient_splits = cross_zero and not meet and len(p1) + len(p2) == Q.dim
    return ZIdealReport(z_elems, is_ideal, square_zero, quotient_splits)


def axial_decomposition(X, max_depth: int = 32, max_axes: int = 128) -> DecompositionReport:
    """Decompose <<X>> along the components of the (possibly truncated)
    closure of X in the axial graph."""
    gens = list(X)
    A = gens[0].algebra
    field = A.field
    clo = miy_closure(gens, max_depth=max_depth, max_axes=max_axes)
    graph = build_axial_graph(clo.axes, clo.reports)
    comps = []
    for k, idxs in enumerate(graph.components()):
        axes_k = [clo.axes[i] for i in idxs]
        reports_k = [clo.reports[i] for i in idxs]
        sub = subalgebra_closure(axes_k)
        tdesc = uniformity_check(reports_k)
        ann = relative_annihilator(A, sub)
        z = _z_ideal_report(A, axes_k, reports_k, sub)
        comps.append(ComponentReport(k, axes_k, reports_k, sub, tdesc, ann, z))
    pairwise_zero = True
    intersections = []
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            for u in comps[i].subalgebra_basis:
                for v in comps[j].subalgebra_basis:
                    if not (u * v).is_zero() or not (v * u).is_zero():
                        pairwise_zero = False
            meet = linalg.intersect_spans(
                [list(u.coords) for u in comps[i].subalgebra_basis],
                [list(v.coords) for v in comps[j].subalgebra_basis],
                field,
            )
            if meet:
                ambient_span = [list(u.coords) for u in clo.span_basis]
                annihilating = all(
                    all(x == 0 for x in A.multiply_coords(u, z)) and all(x == 0 for x in A.multiply_coords(z, u))
                    for z in meet
                    for u in ambient_span
                )
                intersections.append((i, j, [A.element(z) for z in meet], annihilating))
    spanning = clo.span_dim == A.dim
    return DecompositionReport(clo, graph, comps, pairwise_zero, intersections, spanning)
