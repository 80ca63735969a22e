"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
All arithmetic is exact, so every comparison below is equality, not a
tolerance check.
"""

import random
from fractions import Fraction

from axialalg import linalg
from axialalg.algebra import Algebra, direct_product, embed_left, embed_right
from axialalg.axes import analyze_axis, check_flexible, ideal_and_quotient
from axialalg.fields import Field
from axialalg.frobenius import build_form, check_A0_closed, choose_Xprime
from axialalg.graphs import axial_decomposition, axis_type
from axialalg.miyamoto import conjugate_involution, miyamoto, spanning_check
from axialalg.models import make_B, make_exc3, make_U, make_U_prime
from axialalg.twogen import (
    TwoGenCase,
    brute_force_idempotents,
    classify_2gen,
    enumerate_idempotents_2gen,
    verify_theorem_axes,
)

Q = Field.rationals()
F7 = Field.prime(7)

HALF = Fraction(1, 2)


def _basis_axes(A):
    out = []
    for i in range(A.dim):
        e = A.basis_element(i)
        if analyze_axis(e).is_primitive_axis:
            out.append(e)
    return out


def _b_models(field):
    """B(lam, phi) representatives with the expected generator types."""
    return [
        (make_B(field, HALF, 2), HALF, HALF),
        (make_B(field, HALF, 1), HALF, HALF),  # gamma = 0
        (make_B(field, -1, Fraction(-1, 2)), -1, -1),  # gamma = 0
        (make_B(field, 3, Fraction(3, 2)), 3, 3),  # same type
        (make_B(field, 2, Fraction(3, 2)), 2, -1),  # mixed types
    ]


def _two_generated_models(field):
    p = None if field.is_rational else field.p
    lam_nc = 2 if p == 5 else 3
    return {
        TwoGenCase.NONCOMM_U2: [make_U(field, 2, lam_nc)],
        TwoGenCase.NONCOMM_EXC3: [make_exc3(field, lam_nc)],
        TwoGenCase.COMM_DIM2: [make_U(field, 2, HALF), make_U_prime(field, 2)],
        TwoGenCase.COMM_DIM3_GAMMA0: [
            make_B(field, HALF, 1),
            make_B(field, -1, Fraction(-1, 2)),
        ],
        TwoGenCase.COMM_DIM3_GAMMA_NONZERO: [
            make_B(field, 2, 1),
            make_B(field, 2, Fraction(3, 2)),
            make_B(field, HALF, 2),
        ],
    }


def test_criterion_1_model_axis_suite():
    """Every paper-designated axis verifies with its designated type."""
    for field in (Q, F7):
        for n in (2, 3, 5):
            for lam in (Fraction(3), Fraction(-1), HALF):
                A = make_U(field, n, lam)
                want = field.scalar(lam)
                for e in A.basis():
                    rep = analyze_axis(e)
                    assert rep.is_primitive_axis
                    assert rep.lam == want and rep.delta == 1 - want
        UP = make_U_prime(field, 2)
        for e in UP.basis():
            rep = analyze_axis(e)
            assert rep.is_primitive_axis and rep.commutative_type
            assert rep.lam == field.scalar(-1)
        E = make_exc3(field, 3)
        ra, rb = analyze_axis(E.basis_element(0)), analyze_axis(E.basis_element(1))
        assert ra.is_primitive_axis and (ra.lam, ra.delta) == (field.scalar(3), field.scalar(-2))
        assert rb.is_primitive_axis and (rb.lam, rb.delta) == (field.scalar(-2), field.scalar(3))
        for A, t_a, t_b in _b_models(field):
            ra, rb = analyze_axis(A.basis_element(0)), analyze_axis(A.basis_element(1))
            assert ra.is_primitive_axis and ra.commutative_type and ra.lam == field.scalar(t_a)
            assert rb.is_primitive_axis and rb.commutative_type and rb.lam == field.scalar(t_b)
    print("[PASS] 1. model axis suite: U_n, U'_2, exceptional, B over Q and F_7, exact types")


def test_criterion_2_idempotent_oracle_equivalence():
    """Closed-form enumeration equals exhaustive search over F_5, F_7, F_11."""
    for p in (5, 7, 11):
        field = Field.prime(p)
        for case, algebras in _two_generated_models(field).items():
            for A in algebras:
                rep = classify_2gen(A.basis_element(0), A.basis_element(1))
                assert rep.case == case
                fam = enumerate_idempotents_2gen(rep)
                formula = {rep.embed(e).coords for e in fam.all_members()}
                brute = {e.coords for e in brute_force_idempotents(A)}
                assert formula == brute, (p, case)
        assert len(brute_force_idempotents(make_exc3(field, 2 if p == 5 else 3))) == 2 * p + 2
    assert len(brute_force_idempotents(make_B(F7, 2, Fraction(3, 2)))) == 8
    print("[PASS] 2. idempotent oracle equivalence over F_5/F_7/F_11; exc3 has 2p+2, B(2,3/2)/F_7 has 8")


def test_criterion_3_theorem_every_idempotent_is_axis():
    """All nontrivial idempotents of 2-generated models over F_7 are axes."""
    for algebras in _two_generated_models(F7).values():
        for A in algebras:
            assert verify_theorem_axes(A) == []
    print("[PASS] 3. every nontrivial idempotent of each 2-generated model over F_7 is a primitive axis")


def test_criterion_4_flexibility():
    """Models and random products are flexible; the frozen control is not."""
    pool = [
        lambda f: make_U(f, 2, 3),
        lambda f: make_U(f, 3, HALF),
        lambda f: make_exc3(f, 3),
        lambda f: make_B(f, 2, Fraction(3, 2)),
        lambda f: make_B(f, HALF, 2),
        lambda f: make_U_prime(f, 2),
    ]
    for build in pool:
        assert check_flexible(build(Q)).ok
    rng = random.Random(2024)
    for _ in range(4):
        k = rng.randint(2, 4)
        A = build_product = None
        for build in rng.sample(pool, k):
            B = build(F7)
            A = B if A is None else direct_product(A, B)
        assert check_flexible(A).ok
    # Negative control, found by the brute-force F_3 scan: a*b = a, rest 0.
    bad = Algebra(Field.prime(3), ["a", "b"], [[[0, 0], [1, 0]], [[0, 0], [0, 0]]])
    rep = check_flexible(bad)
    assert not rep.ok and rep.triple_witnesses
    print(f"[PASS] 4. flexibility on models and random products; control fails with witness {rep.triple_witnesses[0]}")


def test_criterion_5_noncommutative_structure():
    """Z is a square-zero ideal, the quotient splits, no annihilators."""

    def run(A, gens):
        dec = axial_decomposition(gens, max_axes=48)
        for comp in dec.components:
            assert comp.annihilator_basis == []
            if comp.z_ideal is not None:
                z = comp.z_ideal
                assert z.is_ideal and z.square_zero and z.quotient_splits
        return dec

    E = make_exc3(Q, 3)
    dec = run(E, [E.basis_element(0), E.basis_element(1)])
    (comp,) = dec.components
    assert [e.coords for e in comp.z_ideal.basis] == [E.basis_element(2).coords]

    P = direct_product(make_U(Q, 3, 3), make_exc3(Q, 3))
    gens = [P.basis_element(i) for i in (0, 1, 2, 3, 4)]
    dec = run(P, gens)
    assert sum(1 for c in dec.components if c.z_ideal is not None) == 1
    print("[PASS] 5. cross-product span Z is a square-zero ideal, A/Z splits, components have no annihilators")


def test_criterion_6_axial_decomposition():
    """Three blocks give three components; the glued algebra meets in a line."""
    P = direct_product(direct_product(make_U(Q, 2, 3), make_B(Q, HALF, 2)), make_exc3(Q, 3))
    gens = _basis_axes(P)
    dec = axial_decomposition(gens, max_axes=48)
    assert len(dec.components) == 3
    assert dec.pairwise_products_zero and dec.spanning

    B1 = make_B(Q, HALF, 1)
    B2 = make_B(Q, -1, Fraction(-1, 2))
    PP = direct_product(B1, B2)
    s1 = embed_left(PP, B1, B1.basis_element(2))
    s2 = embed_right(PP, B2, B2.basis_element(2))
    _, Abar, project = ideal_and_quotient(PP, [s1 - s2])
    gens = [
        project(embed_left(PP, B1, B1.basis_element(0))),
        project(embed_left(PP, B1, B1.basis_element(1))),
        project(embed_right(PP, B2, B2.basis_element(0))),
        project(embed_right(PP, B2, B2.basis_element(1))),
    ]
    dec = axial_decomposition(gens, max_axes=48)
    assert len(dec.components) == 2 and dec.pairwise_products_zero
    assert len(dec.intersections) == 1
    _, _, basis, annihilating = dec.intersections[0]
    assert len(basis) == 1 and annihilating
    print("[PASS] 6. product of 3 models -> 3 orthogonal components; glued algebra meets in a 1-dim annihilating ideal")


def test_criterion_7_miyamoto_laws():
    """Involutivity, automorphism, conjugation, and the orbit formula."""
    models = [make_U(Q, 3, 3), make_U_prime(Q, 2), make_exc3(Q, 3)] + [
        A for A, _, _ in _b_models(Q)
    ]
    for A in models:
        for e in _basis_axes(A):
            tau = miyamoto(analyze_axis(e))
            assert linalg.mat_eq(
                linalg.mat_mul(tau.matrix, tau.matrix, A.field), linalg.identity(A.dim, A.field)
            )
            for x in A.basis():
                for y in A.basis():
                    assert tau(x * y) == tau(x) * tau(y)
    E = make_exc3(Q, 3)
    a, b, y = E.basis()
    tau_a, tau_b = miyamoto(analyze_axis(a)), miyamoto(analyze_axis(b))
    conj = conjugate_involution(tau_a, tau_b)
    expected = linalg.mat_mul(tau_b.matrix, linalg.mat_mul(tau_a.matrix, tau_b.matrix, Q), Q)
    assert linalg.mat_eq(conj.matrix, expected)
    U = make_U(Q, 2, HALF)
    ua, ub = U.basis()
    Ta, Tb = miyamoto(analyze_axis(ua)), miyamoto(analyze_axis(ub))
    x = ua - ub
    cur = ua
    for k in range(1, 6):
        cur = Ta(Tb(cur))
        assert cur == ua + x.scale(2 * k)
    print("[PASS] 7. Miyamoto involutions: order 2, automorphic, conjugation law, orbit formula a + 2k x")


def test_criterion_8_frobenius_form():
    """The flagship product carries a fully verified normalized form."""
    P = direct_product(direct_product(make_U(Q, 3, 3), make_B(Q, HALF, 2)), make_exc3(Q, 3))
    gens = _basis_axes(P)
    dec = axial_decomposition(gens, max_axes=64)
    sel = choose_Xprime(dec)
    form = build_form(sel)  # verifies norms, symmetry, phi-identity, associativity
    basis = P.basis()
    for i in range(P.dim):
        for j in range(P.dim):
            for k in range(P.dim):
                assert form.value(basis[i], basis[j] * basis[k]) == form.value(
                    basis[i] * basis[j], basis[k]
                )
    for x in sel.axes:
        assert form.norm(x) == Q.one
    for rep in sel.reports:
        parts = [[rep.element], rep.joint_space((Q.zero, Q.zero)), rep.one_part_basis()]
        parts = [p for p in parts if p]
        for i in range(len(parts)):
            for j in range(len(parts)):
                if i != j:
                    for u in parts[i]:
                        for v in parts[j]:
                            assert form.value(u, v) == 0
    # Radical of the uniform noncommutative U_3 component: span of the
    # differences of its axes, dimension 2; exc3 contributes 1; B none.
    assert len(form.radical_basis) == 3
    u_comp = next(c for c in dec.components if len(c.subalgebra_basis) == 3 and c.type_desc.kind == "noncommutative" and len(c.type_desc.values) == 1)
    rad_rows = linalg.span_basis([list(r.coords) for r in form.radical_basis], Q)
    comp_rows = linalg.span_basis([list(v.coords) for v in u_comp.subalgebra_basis], Q)
    meet = linalg.intersect_spans(rad_rows, comp_rows, Q)
    assert len(meet) == 2
    for x in u_comp.axes[:3]:
        for y in u_comp.axes[:3]:
            if axis_type(dec.closure.report_for(x)) == axis_type(dec.closure.report_for(y)):
                assert form.in_radical(x - y)
    print("[PASS] 8. Frobenius form on U_3(3) x B(1/2,2) x exc3(3): associative, norms 1, orthogonal eigenspaces, radical as predicted")


def test_criterion_9_A0_closure_with_exception():
    """A_0(a)^2 stays in A_0(a) except for the documented -1/2-type pair."""
    models = [make_U(Q, 3, 3), make_U_prime(Q, 2), make_exc3(Q, 3)] + [
        A for A, _, _ in _b_models(Q)
    ]
    exceptional_seen = 0
    for A in models:
        gens = _basis_axes(A)
        dec = axial_decomposition(gens, max_axes=32)
        sel = choose_Xprime(dec)
        form = build_form(sel)
        for x, rep in zip(dec.closure.axes, dec.closure.reports):
            v = check_A0_closed(rep, form)
            if axis_type(rep) == ("comm", Q.scalar(-1)) and any(
                axis_type(r2) == ("comm", Q.scalar(2)) and not (x * x2).is_zero()
                for x2, r2 in zip(dec.closure.axes, dec.closure.reports)
                if x2.coords != x.coords
            ):
                assert v.verdict == "exceptional_case"
                assert v.norm == 0 and v.in_radical
                exceptional_seen += 1
            else:
                assert v.verdict == "closed"
    assert exceptional_seen > 0  # the B(2, 3/2) type -1 axes
    print(f"[PASS] 9. A_0 closure on all model axes; {exceptional_seen} exceptional type -1 axes have norm 0 and sit in the radical")


def test_criterion_10_sqrt_conjugacy_F13():
    """Conjugacy of the generators tracks squareness of alpha_b over F_13."""
    F13 = Field.prime(13)
    checked = {True: 0, False: 0}
    for phi in (3, 2):  # 3 = 4^2 is a residue mod 13, 2 is not
        A = make_B(F13, HALF, phi)
        rep = classify_2gen(A.basis_element(0), A.basis_element(1))
        assert rep.gamma != 0 and rep.lam == F13.scalar(HALF)
        has_root = F13.sqrt(rep.alpha_b) is not None
        fam = enumerate_idempotents_2gen(rep)
        hit = False
        for e in fam.all_members():
            if e.is_zero() or e == rep.unit:
                continue
            r = analyze_axis(e)
            if r.is_primitive_axis and miyamoto(r)(rep.a) == rep.b:
                hit = True
        assert hit == has_root
        checked[has_root] += 1
    assert checked[True] == 1 and checked[False] == 1
    print("[PASS] 10. over F_13: a ~ b under some tau_e exactly when alpha_b is a square (residue and non-residue cases)")


def test_criterion_11_closure_spanning():
    """Generator pairs span; infinite rational orbits truncate but still span."""
    for algebras in _two_generated_models(Q).values():
        for A in algebras:
            ok, clo = spanning_check(
                [A.basis_element(0), A.basis_element(1)], max_axes=48
            )
            assert ok
    # Infinite orbits over Q: the half-type line and the exceptional algebra.
    for A in (make_U(Q, 2, HALF), make_exc3(Q, 3), make_B(Q, HALF, 2)):
        ok, clo = spanning_check([A.basis_element(0), A.basis_element(1)], max_axes=48)
        assert ok and clo.truncated
    print("[PASS] 11. closures of generator pairs span; infinite rational orbits are flagged truncated with full span")
