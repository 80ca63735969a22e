"""Exact construction and analysis of primitive axial algebras of Jordan type."""

__version__ = "0.1.0"

from .algebra import Algebra, Element, direct_product, subalgebra
from .axes import (
    AxisReport,
    ElementDecomposition,
    analyze_axis,
    annihilator,
    axis_eigenvalues,
    check_flexible,
    decompose_wrt,
    ideal_and_quotient,
    subalgebra_closure,
)
from .fields import Field, FpElement
from .frobenius import build_form, check_A0_closed, choose_Xprime, radical
from .graphs import axial_decomposition, build_axial_graph, uniformity_check
from .miyamoto import Involution, closure, conjugate_involution, miyamoto, spanning_check
from .models import make_B, make_exc3, make_FxF, make_model, make_U, make_U_prime
from .twogen import (
    TwoGenCase,
    brute_force_idempotents,
    classify_2gen,
    conjugate_axis,
    enumerate_idempotents_2gen,
    verify_theorem_axes,
)

__all__ = [
    "Algebra",
    "AxisReport",
    "Element",
    "ElementDecomposition",
    "Field",
    "FpElement",
    "Involution",
    "TwoGenCase",
    "analyze_axis",
    "annihilator",
    "axial_decomposition",
    "axis_eigenvalues",
    "brute_force_idempotents",
    "build_axial_graph",
    "build_form",
    "check_A0_closed",
    "check_flexible",
    "choose_Xprime",
    "classify_2gen",
    "closure",
    "conjugate_axis",
    "conjugate_involution",
    "decompose_wrt",
    "direct_product",
    "enumerate_idempotents_2gen",
    "ideal_and_quotient",
    "make_B",
    "make_FxF",
    "make_U",
    "make_U_prime",
    "make_exc3",
    "make_model",
    "miyamoto",
    "radical",
    "spanning_check",
    "subalgebra",
    "subalgebra_closure",
    "uniformity_check",
    "verify_theorem_axes",
]
