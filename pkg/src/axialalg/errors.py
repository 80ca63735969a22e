"""Exception types shared across the package."""


class AxialError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(AxialError):
    """Arithmetic attempted between scalars of different fields."""


class AlgebraMismatch(AxialError):
    """Operation attempted between elements of different algebras."""


class BadParameter(AxialError):
    """Invalid parameter for a constructor (bad prime, forbidden eigenvalue, ...)."""


class NotIdempotent(AxialError):
    """Operation requires an idempotent element."""


class NotAnAxis(AxialError):
    """Operation requires a verified primitive axis."""


class NotAutomorphism(AxialError):
    """A matrix claimed to be an algebra automorphism is not."""


class DecompositionFailed(AxialError):
    """Element does not lie in Fa + A_0(a) + A_{lam,delta}(a)."""


class NotAPaj(AxialError):
    """A generator of a supposedly axial algebra fails the axis checks."""


class MixedComponent(AxialError):
    """A connected component of the axial graph mixes incompatible axis types."""


class CaseMismatch(AxialError):
    """Two-generated operation invoked outside its classification case."""


class TooLarge(AxialError):
    """Brute-force enumeration would exceed the search budget."""


class TheoremViolation(AxialError):
    """A structural law that must hold for genuine inputs failed."""


class FormError(AxialError):
    """Frobenius form construction failed (bad axis selection or input)."""


class SymmetryFailure(FormError):
    """The candidate Gram matrix is not symmetric."""


class AssociativityFailure(FormError):
    """The candidate form does not associate with the product."""
