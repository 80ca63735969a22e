"""Classification and idempotent enumeration for 2-generated algebras.

Every algebra generated by two primitive axes falls into one of five cases:
noncommutative of dimension 2 or 3, commutative of dimension 2, or
commutative of dimension 3 with gamma zero or nonzero, where

    sigma = a*b - lam'*a - lam*b,
    gamma = alpha_b*(1 - lam) - lam' = beta_a*(1 - lam') - lam,

alpha_b and beta_a being the mutual projections of the generators.  The
idempotents of each case are known in closed form; a brute-force scan over
F_p certifies the formulas.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from enum import Enum

from . import linalg
from .algebra import Algebra, Element, subalgebra
from .axes import AxisReport, analyze_axis, decompose_wrt, subalgebra_closure
from .errors import CaseMismatch, NotAPaj, TheoremViolation, TooLarge
from .miyamoto import miyamoto

BRUTE_FORCE_LIMIT = 10**7


class TwoGenCase(Enum):
    NONCOMM_U2 = "NoncommU2"
    NONCOMM_EXC3 = "NoncommExc3"
    COMM_DIM2 = "CommDim2"
    COMM_DIM3_GAMMA0 = "CommDim3Gamma0"
    COMM_DIM3_GAMMA_NONZERO = "CommDim3GammaNonzero"


@dataclass
class TwoGenReport:
    """Everything classify_2gen learns about <<a, b>>.

    All elements live in the generated subalgebra, which is exposed as
    `algebra` together with `embed` back into the ambient algebra.
    """

    case: TwoGenCase
    algebra: Algebra
    embed: object
    a: Element
    b: Element
    a_report: AxisReport
    b_report: AxisReport
    lam: object
    lam_prime: object
    sigma: Element | None = None
    gamma: object = None
    alpha_b: object = None
    beta_a: object = None
    b_lambda: Element | None = None
    w_b: Element | None = None
    alpha_b_prime: object = None
    mu_b: object = None
    nu_b: object = None
    unit: Element | None = None
    regeneration: tuple | None = None  # (type-2 axis, its conjugate) when types are {-1, 2}
    notes: tuple = ()


def _third(report: AxisReport):
    # Degenerate axes have no third eigenvalue; for classification we only
    # meet them in U_1-like corners which the callers exclude.
    return report.lam


def classify_2gen(a: Element, b: Element, ambient: Algebra | None = None) -> TwoGenReport:
    """Classify the subalgebra generated by two primitive axes."""
    amb = ambient or a.algebra
    basis = subalgebra_closure([a, b])
    B, embed, restrict = subalgebra(amb, basis)
    a_s, b_s = restrict(a), restrict(b)
    ra, rb = analyze_axis(a_s), analyze_axis(b_s)
    if not ra.is_primitive_axis:
        raise NotAPaj(f"first generator fails the axis checks in <<a,b>>: {ra.type_label()}")
    if not rb.is_primitive_axis:
        raise NotAPaj(f"second generator fails the axis checks in <<a,b>>: {rb.type_label()}")
    field = B.field
    lam = _third(ra)
    lam_p = _third(rb)
    commutative = B.is_commutative()
    dim = B.dim

    rep = TwoGenReport(
        case=TwoGenCase.NONCOMM_U2,
        algebra=B,
        embed=embed,
        a=a_s,
        b=b_s,
        a_report=ra,
        b_report=rb,
        lam=lam,
        lam_prime=lam_p,
    )

    if not commutative:
        rep.case = TwoGenCase.NONCOMM_U2 if dim == 2 else TwoGenCase.NONCOMM_EXC3
        dec = decompose_wrt(b_s, ra)
        rep.alpha_b = dec.alpha
        rep.beta_a = decompose_wrt(a_s, rb).alpha
        rep.b_lambda = dec.minus_part
        if dim == 3:
            rep.unit = B.unit()
        return rep

    # Commutative cases carry the sigma/gamma bookkeeping.
    sigma = a_s * b_s - a_s.scale(lam_p) - b_s.scale(lam)
    rep.sigma = sigma
    dec_b = decompose_wrt(b_s, ra)
    dec_a = decompose_wrt(a_s, rb)
    rep.alpha_b = dec_b.alpha
    rep.beta_a = dec_a.alpha
    rep.b_lambda = dec_b.minus_part
    gamma1 = rep.alpha_b * (field.one - lam) - lam_p
    gamma2 = rep.beta_a * (field.one - lam_p) - lam
    if gamma1 != gamma2:
        raise TheoremViolation(
            f"gamma computed from the two projections disagrees: {gamma1} vs {gamma2}"
        )
    rep.gamma = gamma1

    if dim == 2:
        rep.case = TwoGenCase.COMM_DIM2
    elif rep.gamma == 0:
        rep.case = TwoGenCase.COMM_DIM3_GAMMA0
    else:
        rep.case = TwoGenCase.COMM_DIM3_GAMMA_NONZERO
        rep.unit = B.unit()
        one = rep.unit
        # w_b = alpha_b * a + alpha'_b * (1 - a); b_lambda = b - w_b.
        rep.w_b = b_s - rep.b_lambda
        resid = rep.w_b - a_s.scale(rep.alpha_b)
        target = one - a_s
        sol = linalg.solve(
            [[target.coords[k]] for k in range(B.dim)], list(resid.coords), field
        )
        if sol is None:
            raise TheoremViolation("w_b does not lie on the a, 1-a plane")
        rep.alpha_b_prime = sol[0]
        rep.mu_b = rep.alpha_b_prime - rep.alpha_b_prime * rep.alpha_b_prime
        rep.nu_b = rep.alpha_b - rep.alpha_b * rep.alpha_b

    two = field.scalar(2)
    if {lam, lam_p} == {field.scalar(-1), two} and lam != lam_p:
        g, other, g_rep, other_rep = (
            (a_s, b_s, ra, rb) if lam == two else (b_s, a_s, rb, ra)
        )
        tau = miyamoto(other_rep)
        rep.regeneration = (g, tau(g))
        rep.notes = rep.notes + ("type-2-regeneration",)
    return rep


# ---------------------------------------------------------------------------
# Idempotent families
# ---------------------------------------------------------------------------


@dataclass
class ParamLine:
    """One-parameter family mu -> base + f(mu)."""

    description: str
    evaluate: object  # callable mu -> Element

    def expand(self, field) -> list:
        return [self.evaluate(x) for x in field.elements()]


@dataclass
class SqrtGatedFamily:
    """The half-type family: e = alpha*a + (1-alpha)(1-a) +- rho * b_lambda
    with rho^2 * nu_b = alpha*(1 - alpha); members exist only where the
    square root does."""

    description: str
    evaluate: object  # callable alpha_e -> list[Element] (0, 1, or 2 members)

    def expand(self, field) -> list:
        out = []
        for x in field.elements():
            out.extend(self.evaluate(x))
        return out


@dataclass
class IdempotentFamily:
    case: TwoGenCase
    algebra: Algebra
    explicit: list
    lines: list = dc_field(default_factory=list)
    gated: list = dc_field(default_factory=list)
    provenance: str = "formula"

    def all_members(self) -> list:
        """Every idempotent, as an explicit deduplicated list (F_p only)."""
        field = self.algebra.field
        members = {e.coords: e for e in self.explicit}
        for line in self.lines:
            for e in line.expand(field):
                members[e.coords] = e
        for fam in self.gated:
            for e in fam.expand(field):
                members[e.coords] = e
        return [members[k] for k in sorted(members, key=_coords_key)]

    def sample(self, values=None) -> list:
        """Finite sample of the family (useful over Q): the explicit members
        plus the parameterized ones evaluated at a few parameter values."""
        field = self.algebra.field
        if values is None:
            values = [field.scalar(v) for v in (0, 1, 2, -1)] + [field.one / field.scalar(2)]
        members = {e.coords: e for e in self.explicit}
        for line in self.lines:
            for v in values:
                e = line.evaluate(v)
                members[e.coords] = e
        for fam in self.gated:
            for v in values:
                for e in fam.evaluate(v):
                    members[e.coords] = e
        return [members[k] for k in sorted(members, key=_coords_key)]


def _coords_key(coords):
    out = []
    for c in coords:
        if hasattr(c, "value"):
            out.append((c.value, 1))
        else:
            out.append((c, 0))
    return out


def enumerate_idempotents_2gen(report: TwoGenReport) -> IdempotentFamily:
    """Closed-form idempotent inventory of a 2-generated algebra."""
    B = report.algebra
    field = B.field
    a, b = report.a, report.b
    zero = B.zero()
    fam = IdempotentFamily(report.case, B, [zero])
    one = field.one
    two = field.scalar(2)
    half = one / two

    if report.case == TwoGenCase.NONCOMM_U2:
        z = report.b_lambda  # spans A_{lam,delta}(a); b - a up to scale
        fam.lines.append(ParamLine("a + t*(b - a)", lambda t, a=a, z=z: a + z.scale(t)))
    elif report.case == TwoGenCase.NONCOMM_EXC3:
        y = (a * b).scale(one / report.lam)
        fam.explicit.append(a + b - y)  # the unit
        fam.lines.append(ParamLine("a + t*y", lambda t, a=a, y=y: a + y.scale(t)))
        fam.lines.append(ParamLine("b + t*y", lambda t, b=b, y=y: b + y.scale(t)))
    elif report.case == TwoGenCase.COMM_DIM2:
        if report.lam == half:
            fam.lines.append(
                ParamLine("t*a + (1-t)*b", lambda t, a=a, b=b: a.scale(t) + b.scale(1 - t))
            )
        elif report.lam == -one:
            fam.explicit.extend([a, b, -a - b])
        else:
            raise CaseMismatch(f"2-dimensional commutative case needs lam in {{1/2, -1}}, got {report.lam}")
    elif report.case == TwoGenCase.COMM_DIM3_GAMMA0:
        s = report.sigma
        if report.lam == half:
            fam.lines.append(
                ParamLine(
                    "t*a + (1-t)*b + 2t(1-t)*sigma",
                    lambda t, a=a, b=b, s=s: a.scale(t) + b.scale(1 - t) + s.scale(two * t * (1 - t)),
                )
            )
        elif report.lam == -one:
            fam.explicit.extend([a, b, -a - b + s.scale(2)])
        else:
            raise CaseMismatch(f"gamma = 0 needs lam in {{1/2, -1}}, got {report.lam}")
    else:  # COMM_DIM3_GAMMA_NONZERO
        unit = report.unit
        fam.explicit.append(unit)
        if report.lam != half:
            tau_a = miyamoto(report.a_report)
            b_conj = tau_a(b)
            for e in (a, unit - a, b, unit - b, b_conj, unit - b_conj):
                if all(e.coords != x.coords for x in fam.explicit):
                    fam.explicit.append(e)
        else:
            alpha_b = report.alpha_b
            nu_b = report.nu_b
            b_lam = report.b_lambda

            if alpha_b == 0:
                fam.lines.append(
                    ParamLine("a + t*b_lambda", lambda t, a=a, z=b_lam: a + z.scale(t))
                )
                fam.lines.append(
                    ParamLine(
                        "(1-a) + t*b_lambda",
                        lambda t, u=unit - a, z=b_lam: u + z.scale(t),
                    )
                )
            else:

                def members_at(alpha_e, a=a, unit=unit, z=b_lam, nu_b=nu_b):
                    q = alpha_e * (1 - alpha_e) / nu_b
                    r = field.sqrt(q)
                    if r is None:
                        return []
                    base = a.scale(alpha_e) + (unit - a).scale(1 - alpha_e)
                    if r == 0:
                        return [base]
                    return [base + z.scale(r), base - z.scale(r)]

                fam.gated.append(
                    SqrtGatedFamily(
                        "alpha*a + (1-alpha)*(1-a) +- sqrt(alpha(1-alpha)/nu_b)*b_lambda",
                        members_at,
                    )
                )
    return fam


def brute_force_idempotents(A: Algebra) -> list:
    """Every e with e*e = e, by exhaustive scan over F_p coordinates."""
    field = A.field
    if field.is_rational:
        raise TooLarge("brute force enumeration needs a finite field")
    if field.p**A.dim > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"{field.p}^{A.dim} exceeds the scan budget")
    out = []
    for combo in itertools.product(range(field.p), repeat=A.dim):
        e = A.element(combo)
        if e * e == e:
            out.append(e)
    return out


def verify_theorem_axes(A: Algebra) -> list:
    """Check that every nontrivial idempotent is a primitive axis.

    Returns the list of counterexamples (idempotents distinct from 0 and the
    unit that fail the axis checks); the list must be empty for a genuine
    2-generated axial algebra.
    """
    unit = A.unit()
    bad = []
    for e in brute_force_idempotents(A):
        if e.is_zero():
            continue
        if unit is not None and e == unit:
            continue
        if not analyze_axis(e).is_primitive_axis:
            bad.append(e)
    return bad


def conjugate_axis(report: TwoGenReport, e: Element) -> Element:
    """Image of the first generator under the involution of the idempotent e,
    via the closed half-type formula (and cross-checked against the matrix).

    Only meaningful in the commutative gamma != 0, lam = 1/2 case.
    """
    B = report.algebra
    field = B.field
    half = field.one / field.scalar(2)
    if report.case != TwoGenCase.COMM_DIM3_GAMMA_NONZERO or report.lam != half:
        raise CaseMismatch("conjugate_axis applies to the lam = 1/2, gamma != 0 case")
    a, unit, b_lam = report.a, report.unit, report.b_lambda
    cols = [a, unit - a, b_lam]
    M = [[c.coords[k] for c in cols] for k in range(B.dim)]
    sol = linalg.solve(M, list(e.coords), field)
    if sol is None:
        raise CaseMismatch("e is not in the span of a, 1-a, b_lambda")
    alpha_e, beta_e, rho_e = sol
    if beta_e != field.one - alpha_e:
        raise CaseMismatch("e is not an idempotent of the half-type family")
    mu = field.scalar(2) * alpha_e - field.one
    alpha_c = mu * mu
    closed = a.scale(alpha_c) + (unit - a).scale(field.one - alpha_c) + b_lam.scale(
        field.scalar(2) * mu * rho_e
    )
    tau_e = miyamoto(analyze_axis(e))
    if tau_e(a) != closed:
        raise TheoremViolation("closed-form conjugate disagrees with the involution matrix")
    return closed
