"""The batch analysis pipeline behind `analyze`.

Takes an algebra, finds its basis axes, and runs every structural check the
library knows: axis verification, flexibility, closure spanning, axial
decomposition, the Frobenius form, and optionally the idempotent inventory.
The result is a JSON-friendly report plus a list of violations; the CLI maps
an empty list to exit code 0 and a nonempty one to exit code 1.
"""

from __future__ import annotations

from .algebra import Algebra
from .axes import analyze_axis, check_flexible
from .errors import AxialError, MixedComponent
from .frobenius import build_form, check_A0_closed, choose_Xprime
from .graphs import axial_decomposition
from .twogen import brute_force_idempotents, classify_2gen, enumerate_idempotents_2gen

BRUTE_FORCE_CAP = 10**6


def _el(e) -> str:
    return repr(e)


def analyze_algebra(
    A: Algebra,
    max_depth: int = 32,
    max_axes: int = 128,
    include_idempotents: bool = False,
    generators: list | None = None,
) -> dict:
    violations = []
    report: dict = {
        "algebra": {"dim": A.dim, "field": A.field.to_json(), "basis": list(A.basis_names)},
    }

    basis_info = []
    axes = []
    axis_reports = []
    for i, name in enumerate(A.basis_names):
        if generators is not None and name not in generators:
            continue
        e = A.basis_element(i)
        r = analyze_axis(e)
        info = {
            "name": name,
            "idempotent": r.is_idempotent,
            "axis": r.is_axis,
            "primitive_axis": r.is_primitive_axis,
            "type": r.type_label(),
        }
        if r.is_idempotent and not e.is_zero():
            info["fusion_ok"] = r.fusion_ok
            info["jordan_condition"] = r.jordan_condition
            info["lr_quad_identity"] = r.lr_quad_ok
            if r.is_axis and not r.is_primitive_axis:
                detail = f"basis axis {name} violates the grading"
                if r.fusion_witnesses:
                    rule, u, v, w = r.fusion_witnesses[0]
                    detail += f": {rule} product ({_el(u)})*({_el(v)}) = {_el(w)} escapes its part"
                elif not r.jordan_condition:
                    detail += ": nonzero (lam,0) or (0,delta) eigenspace"
                violations.append({"check": "fusion", "detail": detail})
            if r.is_axis and not r.lr_quad_ok:
                violations.append(
                    {"check": "lr_quad", "detail": f"L^2-L != R^2-R for axis {name}"}
                )
            if r.is_axis and not r.commutative_type and r.lam is not None and r.delta is not None:
                if r.delta != 1 - r.lam:
                    violations.append(
                        {
                            "check": "noncomm_type",
                            "detail": f"axis {name} has delta != 1 - lam: ({r.lam},{r.delta})",
                        }
                    )
        basis_info.append(info)
        if r.is_primitive_axis:
            axes.append(e)
            axis_reports.append(r)
    report["basis_elements"] = basis_info

    flex = check_flexible(A)
    report["flexible"] = {
        "ok": flex.ok,
        "pair_witnesses": [list(w) for w in flex.pair_witnesses],
        "triple_witnesses": [list(w) for w in flex.triple_witnesses],
    }
    if not flex.ok:
        w = (flex.pair_witnesses or flex.triple_witnesses)[0]
        violations.append({"check": "flexible", "detail": f"flexibility fails at {w}"})

    if axes:
        try:
            dec = axial_decomposition(axes, max_depth=max_depth, max_axes=max_axes)
            report["closure"] = {
                "spanning": dec.spanning,
                "truncated": dec.truncated,
                "axes_found": len(dec.closure.axes),
                "span_dim": dec.closure.span_dim,
                "depth_reached": dec.closure.depth_reached,
            }
            comps = []
            for c in dec.components:
                entry = {
                    "size": len(c.axes),
                    "type": c.type_desc.label(),
                    "subalgebra_dim": len(c.subalgebra_basis),
                    "annihilator_dim": len(c.annihilator_basis),
                }
                if c.z_ideal is not None:
                    entry["z_ideal"] = {
                        "dim": len(c.z_ideal.basis),
                        "is_ideal": c.z_ideal.is_ideal,
                        "square_zero": c.z_ideal.square_zero,
                        "quotient_splits": c.z_ideal.quotient_splits,
                    }
                    if not (c.z_ideal.is_ideal and c.z_ideal.square_zero):
                        violations.append(
                            {"check": "z_ideal", "detail": "cross-product span is not a square-zero ideal"}
                        )
                comps.append(entry)
            report["decomposition"] = {
                "components": comps,
                "pairwise_products_zero": dec.pairwise_products_zero,
                "intersections": [
                    {"components": [i, j], "dim": len(basis), "annihilating": ann}
                    for i, j, basis, ann in dec.intersections
                ],
            }
            if not dec.pairwise_products_zero:
                violations.append(
                    {"check": "decomposition", "detail": "distinct components have a nonzero product"}
                )
            for i, j, _, ann in dec.intersections:
                if not ann:
                    violations.append(
                        {
                            "check": "decomposition",
                            "detail": f"intersection of components {i} and {j} is not annihilating",
                        }
                    )
        except MixedComponent as exc:
            report["decomposition"] = {"error": str(exc)}
            violations.append({"check": "uniformity", "detail": str(exc)})
            dec = None

        if dec is not None and dec.spanning:
            try:
                sel = choose_Xprime(dec)
                form = build_form(sel)
                a0 = []
                for x, r in zip(dec.closure.axes, dec.closure.reports):
                    v = check_A0_closed(r, form)
                    a0.append({"axis": _el(x), "verdict": v.verdict})
                report["frobenius"] = {
                    "ok": True,
                    "basis": [_el(b) for b in form.basis],
                    "gram": [[str(x) for x in row] for row in form.gram],
                    "radical_dim": len(form.radical_basis),
                    "radical": [_el(r) for r in form.radical_basis],
                    "norms_one": True,
                    "a0_verdicts": a0,
                    "cases": [
                        {"component": c.index, "case": c.case, "nu": None if c.chosen_nu is None else str(c.chosen_nu)}
                        for c in sel.components
                    ],
                }
            except AxialError as exc:
                report["frobenius"] = {"ok": False, "error": str(exc)}
                violations.append({"check": "frobenius", "detail": str(exc)})
    else:
        report["closure"] = None
        report["decomposition"] = None
        report["frobenius"] = None

    if include_idempotents:
        report["idempotents"] = idempotent_report(A, axes)
        cmp = report["idempotents"].get("comparison")
        if cmp is not None and cmp != "equal":
            violations.append({"check": "idempotents", "detail": cmp})

    report["violations"] = violations
    report["verdict"] = "ok" if not violations else "violations"
    return report


def idempotent_report(A: Algebra, axes: list | None = None) -> dict:
    """Idempotent inventory with provenance (closed formula vs brute force)."""
    out: dict = {}
    if axes is None:
        axes = []
        for i in range(A.dim):
            e = A.basis_element(i)
            if analyze_axis(e).is_primitive_axis:
                axes.append(e)
    brute = None
    if not A.field.is_rational and A.field.p ** A.dim <= BRUTE_FORCE_CAP:
        brute = brute_force_idempotents(A)
        out["brute_force"] = {"count": len(brute), "members": [_el(e) for e in brute]}
    if len(axes) == 2:
        try:
            rep = classify_2gen(axes[0], axes[1], A)
            fam = enumerate_idempotents_2gen(rep)
            entry = {
                "case": rep.case.value,
                "explicit": [_el(rep.embed(e)) for e in fam.explicit],
                "families": [line.description for line in fam.lines]
                + [g.description for g in fam.gated],
            }
            if not A.field.is_rational:
                members = fam.all_members()
                entry["count"] = len(members)
                entry["members"] = [_el(rep.embed(e)) for e in members]
                if brute is not None and rep.algebra.dim == A.dim:
                    formula_keys = {rep.embed(e).coords for e in members}
                    brute_keys = {e.coords for e in brute}
                    out["comparison"] = (
                        "equal"
                        if formula_keys == brute_keys
                        else f"formula gives {len(formula_keys)}, brute force {len(brute_keys)}"
                    )
            else:
                entry["samples"] = [_el(rep.embed(e)) for e in fam.sample()]
            out["formula"] = entry
        except AxialError as exc:
            out["formula"] = {"error": str(exc)}
    if brute is None and "formula" not in out:
        out["note"] = "no enumeration available (infinite field and not 2-generated)"
    return out
