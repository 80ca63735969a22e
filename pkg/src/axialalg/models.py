"""Constructors for the named model algebras.

Basis order is fixed (axes first, then the extra element) so the structure
constants are reproducible byte for byte in serialized files.
"""

from __future__ import annotations

from .algebra import Algebra, direct_product
from .errors import BadParameter
from .fields import Field


def make_U(field: Field, n: int, lam) -> Algebra:
    """The algebra on idempotents e_1..e_n with e_i e_j = delta*e_i + lam*e_j,
    delta = 1 - lam.  Every basis vector is a primitive axis of type
    (lam, 1-lam); commutative exactly when lam = 1/2."""
    lam = field.scalar(lam)
    if n < 1:
        raise BadParameter("n must be positive")
    if lam == 0 or lam == 1:
        raise BadParameter("lam must avoid 0 and 1")
    delta = field.one - lam
    z = field.zero
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            coords = [z] * n
            if i == j:
                coords[i] = field.one
            else:
                coords[i] = delta
                coords[j] = lam
            row.append(coords)
        table.append(row)
    names = [f"e{i + 1}" for i in range(n)]
    return Algebra(field, names, table)


def make_U_prime(field: Field, n: int) -> Algebra:
    """The algebra on idempotents with e_i e_j = -e_i - e_j for i != j.
    Needs -1 != 1/2, i.e. characteristic != 3; every basis vector is a
    primitive axis of type -1."""
    if n < 2:
        raise BadParameter("n must be at least 2")
    if field.scalar(-1) == field.scalar(1) / field.scalar(2):
        raise BadParameter("requires -1 != 1/2 (characteristic 3 excluded)")
    z = field.zero
    m1 = -field.one
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            coords = [z] * n
            if i == j:
                coords[i] = field.one
            else:
                coords[i] = m1
                coords[j] = m1
            row.append(coords)
        table.append(row)
    names = [f"e{i + 1}" for i in range(n)]
    return Algebra(field, names, table)


def make_exc3(field: Field, lam) -> Algebra:
    """The exceptional 3-dimensional noncommutative algebra on a, b, y:
    ab = ay = yb = lam*y, ba = ya = by = delta*y, y*y = 0, delta = 1 - lam.
    Requires lam outside {0, 1, 1/2}; a has type (lam, delta) and b has type
    (delta, lam), and a+b-y is the multiplicative unit."""
    lam = field.scalar(lam)
    if lam == 0 or lam == 1:
        raise BadParameter("lam must avoid 0 and 1")
    delta = field.one - lam
    if lam == delta:
        raise BadParameter("lam = 1/2 is excluded (lam must differ from delta)")
    z = field.zero
    one = field.one

    def v(a=z, b=z, y=z):
        return [a, b, y]

    table = [
        [v(a=one), v(y=lam), v(y=lam)],  # a*a, a*b, a*y
        [v(y=delta), v(b=one), v(y=delta)],  # b*a, b*b, b*y
        [v(y=delta), v(y=lam), v()],  # y*a, y*b, y*y
    ]
    return Algebra(field, ["a", "b", "y"], table)


def make_B(field: Field, lam, phi) -> Algebra:
    """Three-dimensional commutative algebra on axes a, b and sigma.

    a is a primitive axis of type lam and phi is the projection of a onto b,
    i.e. phi = phi_b(a).  The table is

        a*b = sigma + lam'*a + lam*b,   a*sigma = gamma*a,
        b*sigma = gamma*b,              sigma^2 = gamma*sigma,

    where lam' is the type of b.  The fusion rules pin the admissible
    parameters: for lam = 1/2 any phi works and both axes have type 1/2 with
    gamma = (1-lam)*phi - lam; for lam != 1/2 either phi = lam/2 (then b also
    has type lam, gamma = -lam*(lam+1)/2) or phi = (1+lam)/2 (then b has the
    complementary type 1-lam, gamma = lam*(lam-1)/2).
    """
    lam = field.scalar(lam)
    phi = field.scalar(phi)
    if lam == 0 or lam == 1:
        raise BadParameter("lam must avoid 0 and 1")
    half = field.one / field.scalar(2)
    two = field.scalar(2)
    if lam == half:
        lam_prime = lam
        gamma = (field.one - lam) * phi - lam
    elif phi == lam / two:
        lam_prime = lam
        gamma = -lam * (lam + field.one) / two
    elif phi == (field.one + lam) / two:
        lam_prime = field.one - lam
        gamma = lam * (lam - field.one) / two
    else:
        raise BadParameter(
            f"with lam={lam} the projection phi must be lam/2 = {lam / two} "
            f"(second axis of type lam) or (1+lam)/2 = {(field.one + lam) / two} "
            f"(second axis of type 1-lam); got {phi}"
        )
    z = field.zero
    one = field.one

    def v(a=z, b=z, s=z):
        return [a, b, s]

    ab = v(a=lam_prime, b=lam, s=one)
    table = [
        [v(a=one), ab, v(a=gamma)],
        [ab, v(b=one), v(b=gamma)],
        [v(a=gamma), v(b=gamma), v(s=gamma)],
    ]
    return Algebra(field, ["a", "b", "s"], table)


def make_FxF(field: Field) -> Algebra:
    """F x F: two orthogonal idempotents."""
    z = field.zero
    one = field.one
    table = [
        [[one, z], [z, z]],
        [[z, z], [z, one]],
    ]
    return Algebra(field, ["e1", "e2"], table)


def make_model(field: Field, kind: str, n: int | None = None, lam=None, phi=None) -> Algebra:
    """Dispatch used by the file format and the service."""
    kind_l = kind.lower()
    if kind_l == "u":
        if n is None or lam is None:
            raise BadParameter("U needs n and lam")
        return make_U(field, n, lam)
    if kind_l == "uprime":
        if n is None:
            raise BadParameter("Uprime needs n")
        return make_U_prime(field, n)
    if kind_l == "exc3":
        if lam is None:
            raise BadParameter("exc3 needs lam")
        return make_exc3(field, lam)
    if kind_l == "b":
        if lam is None or phi is None:
            raise BadParameter("B needs lam and phi")
        return make_B(field, lam, phi)
    if kind_l == "fxf":
        return make_FxF(field)
    raise BadParameter(f"unknown model kind {kind!r}")


MODEL_KINDS = ("U", "Uprime", "exc3", "B", "FxF")

__all__ = [
    "make_U",
    "make_U_prime",
    "make_exc3",
    "make_B",
    "make_FxF",
    "make_model",
    "MODEL_KINDS",
    "direct_product",
]
