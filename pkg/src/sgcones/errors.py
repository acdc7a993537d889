"""Exception types shared across the library."""


class SgconesError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(SgconesError):
    """Input data failed structural validation."""


class NotClosed(ValidationError):
    """A table entry falls outside the element range."""


class NotAssociative(ValidationError):
    """A multiplication table violates associativity."""

    def __init__(self, a, b, c, left, right):
        self.triple = (a, b, c)
        super().__init__(
            f"not associative at ({a}, {b}, {c}): ({a}*{b})*{c} = {left} "
            f"but {a}*({b}*{c}) = {right}"
        )


class BadLabels(ValidationError):
    """Element labels are malformed (wrong count, empty, or contain whitespace)."""


class BadSemilattice(ValidationError):
    """The base table of a semilattice-of-groups spec is not a semilattice."""


class NotAGroup(ValidationError):
    """A vertex table of a semilattice-of-groups spec is not a group."""


class BadHom(ValidationError):
    """A connecting map is malformed or is not a group homomorphism."""


class MissingHom(ValidationError):
    """A comparable vertex pair has no connecting map."""


class IncoherentHoms(ValidationError):
    """Connecting maps fail to compose transitively."""


class NotASemilattice(ValidationError):
    """The semilattice verification suite was invoked on a non-semilattice."""


class NotRegular(ValidationError):
    """A construction requiring a regular semigroup got a non-regular one."""


class BudgetExceeded(SgconesError):
    """A bounded search or enumeration ran out of budget."""


class SearchBudgetExceeded(BudgetExceeded):
    """An isomorphism or functor search exceeded its node budget."""


class EnumerationBudgetExceeded(BudgetExceeded):
    """Cone enumeration exceeded its per-apex assignment budget."""


class CategoryError(SgconesError):
    """Misuse of category operations."""


class NotInHom(CategoryError):
    """A triple (e, u, f) does not describe a morphism, u is outside eSf."""


class NotComposable(CategoryError):
    """Morphism composition attempted with mismatched endpoints."""


class NotIncluded(CategoryError):
    """Inclusion requested between objects not related by ideal inclusion."""


class NotInDomain(CategoryError):
    """A morphism was applied to an element outside its source ideal."""


class MixedApex(CategoryError):
    """Cone components disagree on their destination object."""


class NotAnIsomorphism(SgconesError):
    """A map expected to be a semigroup isomorphism is not one."""


class FunctorialityFailed(SgconesError):
    """A transported functor failed verification, which signals a bug upstream."""
