"""Finite-dimensional algebras given by structure constants.

No commutativity or associativity is assumed anywhere: an Algebra is just a
basis together with the coordinate vector of every product of basis vectors.
Algebras and Elements are immutable after construction, so they are safe to
share freely.
"""

from __future__ import annotations

from . import linalg
from .errors import AlgebraMismatch, BadParameter
from .fields import Field


class Algebra:
    """Structure-constant algebra: table[i][j] = coords of basis_i * basis_j."""

    __slots__ = ("field", "dim", "basis_names", "table")

    def __init__(self, field: Field, basis_names, table):
        self.field = field
        names = tuple(str(n) for n in basis_names)
        if len(set(names)) != len(names):
            raise BadParameter("basis names must be distinct")
        self.basis_names = names
        n = len(names)
        self.dim = n
        if len(table) != n or any(len(row) != n for row in table):
            raise BadParameter("table must be dim x dim")
        canon = []
        for row in table:
            crow = []
            for entry in row:
                if len(entry) != n:
                    raise BadParameter("table entries must have length dim")
                crow.append(tuple(field.scalar(x) for x in entry))
            canon.append(tuple(crow))
        self.table = tuple(canon)

    # -- elements ----------------------------------------------------------

    def element(self, coords) -> "Element":
        coords = tuple(self.field.scalar(x) for x in coords)
        if len(coords) != self.dim:
            raise BadParameter(f"expected {self.dim} coordinates")
        return Element(self, coords)

    def basis_element(self, i: int) -> "Element":
        coords = [self.field.zero] * self.dim
        coords[i] = self.field.one
        return Element(self, tuple(coords))

    def basis(self):
        return [self.basis_element(i) for i in range(self.dim)]

    def zero(self) -> "Element":
        return Element(self, tuple([self.field.zero] * self.dim))

    def from_names(self, combo: dict) -> "Element":
        """Element from a {basis_name: coefficient} mapping."""
        coords = [self.field.zero] * self.dim
        for name, c in combo.items():
            coords[self.basis_names.index(name)] = self.field.scalar(c)
        return Element(self, tuple(coords))

    # -- multiplication ----------------------------------------------------

    def multiply_coords(self, u, v):
        z = self.field.zero
        out = [z] * self.dim
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                c = ui * vj
                for k, t in enumerate(self.table[i][j]):
                    if t != 0:
                        out[k] = out[k] + c * t
        return out

    def left_mult_matrix(self, coords):
        """Matrix of y -> a*y; column j holds the coords of a * basis_j."""
        cols = []
        for j in range(self.dim):
            ej = [self.field.zero] * self.dim
            ej[j] = self.field.one
            cols.append(self.multiply_coords(coords, ej))
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def right_mult_matrix(self, coords):
        """Matrix of y -> y*a."""
        cols = []
        for j in range(self.dim):
            ej = [self.field.zero] * self.dim
            ej[j] = self.field.one
            cols.append(self.multiply_coords(ej, coords))
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def is_commutative(self) -> bool:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.table[i][j] != self.table[j][i]:
                    return False
        return True

    def unit(self):
        """The multiplicative unit, or None.  Solves L_u = R_u = id exactly."""
        n = self.dim
        rows = []
        rhs = []
        for j in range(n):
            ej = [self.field.zero] * n
            ej[j] = self.field.one
            for k in range(n):
                rows.append([self.table[i][j][k] for i in range(n)])
                rhs.append(ej[k])
                rows.append([self.table[j][i][k] for i in range(n)])
                rhs.append(ej[k])
        sol = linalg.solve(rows, rhs, self.field)
        if sol is None:
            return None
        u = self.element(sol)
        for j in range(n):
            b = self.basis_element(j)
            if u * b != b or b * u != b:
                return None
        return u

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and self.basis_names == other.basis_names
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.field, self.basis_names))

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.field}, basis={list(self.basis_names)})"


class Element:
    """A vector in an Algebra, in coordinates over the algebra's basis."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords):
        self.algebra = algebra
        self.coords = tuple(coords)

    def _check(self, other: "Element"):
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise AlgebraMismatch("elements of different algebras")

    def __add__(self, other):
        self._check(other)
        return Element(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return Element(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Element(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return Element(self.algebra, tuple(self.algebra.multiply_coords(self.coords, other.coords)))
        c = self.algebra.field.scalar(other)
        return Element(self.algebra, tuple(c * a for a in self.coords))

    def __rmul__(self, other):
        # Scalars act the same from either side.
        c = self.algebra.field.scalar(other)
        return Element(self.algebra, tuple(c * a for a in self.coords))

    def scale(self, c):
        c = self.algebra.field.scalar(c)
        return Element(self.algebra, tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_idempotent(self) -> bool:
        return self * self == self

    def key(self):
        return self.coords

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        terms = []
        for c, name in zip(self.coords, self.algebra.basis_names):
            if c == 0:
                continue
            if c == 1:
                terms.append(name)
            elif c == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{c}*{name}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def direct_product(A: Algebra, B: Algebra) -> Algebra:
    """Block-diagonal product algebra; cross products are zero."""
    if A.field != B.field:
        raise AlgebraMismatch(f"fields differ: {A.field} vs {B.field}")
    clash = set(A.basis_names) & set(B.basis_names)
    if clash:
        names = [f"{n}.1" for n in A.basis_names] + [f"{n}.2" for n in B.basis_names]
    else:
        names = list(A.basis_names) + list(B.basis_names)
    n, m = A.dim, B.dim
    z = A.field.zero
    dim = n + m
    table = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                table[i][j][k] = A.table[i][j][k]
    for i in range(m):
        for j in range(m):
            for k in range(m):
                table[n + i][n + j][n + k] = B.table[i][j][k]
    return Algebra(A.field, names, table)


def embed_left(P: Algebra, A: Algebra, u: Element) -> Element:
    """Image of u (an element of A) in the left factor of P = A x B."""
    coords = list(u.coords) + [P.field.zero] * (P.dim - A.dim)
    return P.element(coords)


def embed_right(P: Algebra, B: Algebra, u: Element) -> Element:
    """Image of u (an element of B) in the right factor of P = A x B."""
    coords = [P.field.zero] * (P.dim - B.dim) + list(u.coords)
    return P.element(coords)


def subalgebra(A: Algebra, basis_vectors) -> tuple:
    """Present a multiplicatively closed subspace as an Algebra of its own.

    basis_vectors: list of Elements (or coordinate lists) that are linearly
    independent and whose span is closed under the product.  Returns
    (B, embed, restrict) where embed maps B-elements into A and restrict maps
    elements of A lying in the span back to B.
    """
    rows = [list(v.coords) if isinstance(v, Element) else list(v) for v in basis_vectors]
    field = A.field
    if linalg.rank(rows, field) != len(rows):
        raise BadParameter("subalgebra basis is linearly dependent")
    d = len(rows)
    cols = [[rows[i][k] for i in range(d)] for k in range(A.dim)]

    def coords_in(vec):
        return linalg.solve(cols, list(vec), field)

    names = []
    for i, row in enumerate(rows):
        hot = [k for k, x in enumerate(row) if x != 0]
        if len(hot) == 1 and row[hot[0]] == 1:
            names.append(A.basis_names[hot[0]])
        else:
            names.append(f"v{i}")
    if len(set(names)) != len(names):
        names = [f"v{i}" for i in range(d)]
    table = []
    for i in range(d):
        trow = []
        for j in range(d):
            prod = A.multiply_coords(rows[i], rows[j])
            c = coords_in(prod)
            if c is None:
                raise BadParameter("subspace is not multiplicatively closed")
            trow.append(c)
        table.append(trow)
    B = Algebra(field, names, table)

    def embed(u: Element) -> Element:
        vec = [field.zero] * A.dim
        for c, row in zip(u.coords, rows):
            if c != 0:
                vec = [x + c * y for x, y in zip(vec, row)]
        return A.element(vec)

    def restrict(u: Element) -> Element:
        c = coords_in(u.coords)
        if c is None:
            raise BadParameter("element lies outside the subalgebra")
        return B.element(c)

    return B, embed, restrict
