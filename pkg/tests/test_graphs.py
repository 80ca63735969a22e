from fractions import Fraction

import pytest

from axialalg import linalg
from axialalg.algebra import direct_product, embed_left, embed_right
from axialalg.axes import analyze_axis, ideal_and_quotient
from axialalg.errors import MixedComponent
from axialalg.fields import Field
from axialalg.graphs import (
    axial_decomposition,
    axis_type,
    build_axial_graph,
    strong_component_span_check,
    uniformity_check,
)
from axialalg.models import make_B, make_exc3, make_U

Q = Field.rationals()
F7 = Field.prime(7)


def test_graph_two_components():
    P = direct_product(make_U(Q, 2, 3), make_U(Q, 2, 3))
    x1 = P.basis_element(0)
    x2 = P.basis_element(2)
    g = build_axial_graph([x1, x2])
    assert g.edges == [] and len(g.components()) == 2
    assert g.symmetric


def test_graph_strong_edge_exc3():
    A = make_exc3(Q, 3)
    a, b, _ = A.basis()
    g = build_axial_graph([a, b])
    assert g.edges == [(0, 1)]
    assert g.strong_edges == [(0, 1)]  # dim<<a,b>> = 3


def test_graph_weak_edge_U2():
    A = make_U(Q, 2, 3)
    g = build_axial_graph(A.basis())
    assert g.edges == [(0, 1)]
    assert g.strong_edges == []  # dim<<a,b>> = 2


def test_distance_bound_after_conjugation():
    # For axes with ab != 0, the distance between b and b^{tau_a} is <= 2
    # inside the closure graph.
    from axialalg.miyamoto import closure, miyamoto

    for A in (make_exc3(F7, 3), make_B(F7, 2, Fraction(3, 2)), make_U(F7, 3, 3)):
        a, b = A.basis_element(0), A.basis_element(1)
        clo = closure([a, b])
        g = build_axial_graph(clo.axes, clo.reports)
        tau_a = miyamoto(clo.report_for(a))
        moved = tau_a(b)
        idx = {x.coords: i for i, x in enumerate(clo.axes)}
        d = g.distance(idx[b.coords], idx[moved.coords])
        assert 0 <= d <= 2


def test_uniformity_classes():
    U = make_U(Q, 3, 3)
    t = uniformity_check([analyze_axis(e) for e in U.basis()])
    assert t.kind == "noncommutative"
    assert t.values == ((Q.scalar(3), Q.scalar(-2)),)

    E = make_exc3(Q, 3)
    t = uniformity_check([analyze_axis(E.basis_element(0)), analyze_axis(E.basis_element(1))])
    assert t.kind == "noncommutative" and len(t.values) == 2

    B = make_B(Q, 2, Fraction(3, 2))
    t = uniformity_check([analyze_axis(B.basis_element(0)), analyze_axis(B.basis_element(1))])
    assert t.kind == "commutative"
    assert t.values == (Q.scalar(-1), Q.scalar(2))

    singleton = uniformity_check([analyze_axis(U.basis_element(0))])
    assert singleton.values == ((Q.scalar(3), Q.scalar(-2)),)


def test_uniformity_rejects_mixed():
    r1 = analyze_axis(make_U(Q, 2, 3).basis_element(0))  # type (3, -2)
    r2 = analyze_axis(make_U(Q, 2, 5).basis_element(0))  # type (5, -4)
    with pytest.raises(MixedComponent):
        uniformity_check([r1, r2])


def test_axis_type_helper():
    r = analyze_axis(make_B(Q, 2, 1).basis_element(0))
    assert axis_type(r) == ("comm", Q.scalar(2))


def test_decomposition_product_of_models():
    P = direct_product(make_U(Q, 2, 3), make_B(Q, Fraction(1, 2), 2))
    gens = [P.basis_element(i) for i in (0, 1, 2, 3)]  # e1, e2, a, b
    dec = axial_decomposition(gens, max_axes=40)
    assert len(dec.components) == 2
    assert dec.pairwise_products_zero
    assert dec.spanning
    assert dec.intersections == []


def test_decomposition_exc3_z_ideal():
    A = make_exc3(Q, 3)
    dec = axial_decomposition([A.basis_element(0), A.basis_element(1)], max_axes=30)
    assert len(dec.components) == 1
    comp = dec.components[0]
    z = comp.z_ideal
    assert z is not None
    assert [e.coords for e in z.basis] == [A.basis_element(2).coords]  # Z = F y
    assert z.is_ideal and z.square_zero and z.quotient_splits
    assert comp.annihilator_basis == []  # no annihilating elements


def test_glued_algebra_intersection():
    # Two gamma = 0 blocks glued along sigma' - sigma'': the component
    # subalgebras of the quotient meet in a 1-dimensional annihilating ideal.
    B1 = make_B(Q, Fraction(1, 2), 1)
    B2 = make_B(Q, -1, Fraction(-1, 2))
    P = direct_product(B1, B2)
    s1 = embed_left(P, B1, B1.basis_element(2))
    s2 = embed_right(P, B2, B2.basis_element(2))
    ideal, Abar, project = ideal_and_quotient(P, [s1 - s2])
    assert len(ideal) == 1 and Abar.dim == 5
    gens = [
        project(embed_left(P, B1, B1.basis_element(0))),
        project(embed_left(P, B1, B1.basis_element(1))),
        project(embed_right(P, B2, B2.basis_element(0))),
        project(embed_right(P, B2, B2.basis_element(1))),
    ]
    for g in gens:
        assert analyze_axis(g).is_primitive_axis
    dec = axial_decomposition(gens, max_axes=40)
    assert len(dec.components) == 2
    assert dec.pairwise_products_zero
    assert len(dec.intersections) == 1
    i, j, basis, annihilating = dec.intersections[0]
    assert len(basis) == 1 and annihilating
    sbar = project(s1)
    assert linalg.span_basis([list(basis[0].coords)], Q) == linalg.span_basis([list(sbar.coords)], Q)


def test_U_product_reassembles_into_blocks():
    # A direct product of U-blocks decomposes back into its blocks.
    P = direct_product(make_U(F7, 2, 3), make_U(F7, 3, 3))
    gens = [P.basis_element(i) for i in range(5)]
    dec = axial_decomposition(gens)
    assert len(dec.components) == 2
    dims = sorted(len(c.subalgebra_basis) for c in dec.components)
    assert dims == [2, 3]
    assert dec.pairwise_products_zero and dec.spanning
    for c in dec.components:
        assert c.annihilator_basis == []


def test_strong_component_span_check():
    U = make_U(Q, 3, 3)
    assert strong_component_span_check(U.basis(), U)  # singleton components span
    E = make_exc3(Q, 3)
    assert strong_component_span_check([E.basis_element(0), E.basis_element(1)], E)
    P = direct_product(U, E)
    gens = [P.basis_element(i) for i in range(3)] + [P.basis_element(3), P.basis_element(4)]
    assert strong_component_span_check(gens, P)
    assert not strong_component_span_check([E.basis_element(0)], E)


def test_dot_export():
    A = make_exc3(Q, 3)
    g = build_axial_graph([A.basis_element(0), A.basis_element(1)])
    dot = g.dot()
    assert dot.startswith("graph axial {") and dot.endswith("}")
    assert 'v0 [label="a"];' in dot
    assert "v0 -- v1 [style=bold];" in dot
