"""Exception types shared across the library."""


class SdlabError(Exception):
    """Base class for all library errors."""


class BoundExceededError(SdlabError):
    """An enumeration would exceed the configured size bound."""


class PreconditionError(SdlabError):
    """An operation was called on an object outside its stated domain."""


class InvalidAtomError(PreconditionError):
    """The supplied element is not an atom of the algebra."""


class InvalidHomError(PreconditionError):
    """A table does not describe a Boolean homomorphism."""


class NotMonoError(PreconditionError):
    """The homomorphism is not injective."""


class NotSubalgebraError(SdlabError):
    """A family of sets is not closed under the Boolean operations."""


class AxiomViolationError(SdlabError):
    """A structure failed its own axiom check; indicates a construction bug."""


class NotDenseError(PreconditionError):
    """The subset is not dense in the ambient space."""


class NotContinuousError(PreconditionError):
    """The point map is not continuous for the given topologies."""


class NotZAlgebraError(PreconditionError):
    """The pair (algebra, point set) fails the density condition."""


class InvalidMorphismError(PreconditionError):
    """A pair of components fails the defining compatibility square."""


class WrongSubcategoryError(PreconditionError):
    """The argument lies outside the subcategory a restriction functor needs."""


class NotAdmissibleError(PreconditionError):
    """The subalgebra is not a clopen open-base for the space."""


class ZeroPointError(PreconditionError):
    """The excluded all-zero point was used where a carrier point is required."""


class EmptyElementError(PreconditionError):
    """A witness was requested for the bottom element."""


class ParseError(SdlabError):
    """A serialized object could not be decoded."""
