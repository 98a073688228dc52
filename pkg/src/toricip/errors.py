"""Domain errors raised by the library.

Every error carries a machine-readable ``kind`` string that the CLI maps to
exit code 1 and a JSON ``error.kind`` field.  Parse failures use ``ParseError``
(exit code 2).
"""


class DomainError(Exception):
    """Base class for errors in the mathematical domain (exit code 1)."""

    kind = "domain"

    def __init__(self, message=""):
        super().__init__(message or self.kind)


class RankDeficient(DomainError):
    kind = "rank_deficient"


class UnboundedFamily(DomainError):
    """The kernel of A meets the nonnegative orthant nontrivially."""

    kind = "unbounded_family"


class BadIndex(DomainError):
    kind = "bad_index"


class OutsideCone(DomainError):
    kind = "outside_cone"


class Infeasible(DomainError):
    kind = "infeasible"


class NotAFace(DomainError):
    kind = "not_a_face"


class NotOptimal(DomainError):
    kind = "not_optimal"


class NonMonomial(DomainError):
    """Initial ideal requested from a basis computed under a non-generic order."""

    kind = "non_monomial"


class FaceViolation(DomainError):
    """A standard pair landed on a set that is not a face of the triangulation."""

    kind = "face_violation"


class ChainViolation(DomainError):
    kind = "chain_violation"


class LengthViolation(DomainError):
    kind = "length_violation"


class NotPointed(DomainError):
    kind = "not_pointed"


class NotDeltaNormal(DomainError):
    kind = "not_delta_normal"


class NotRegular(DomainError):
    kind = "not_regular"


class Unbounded(DomainError):
    kind = "unbounded"


class Degenerate(DomainError):
    kind = "degenerate"


class BoundUnavailable(DomainError):
    kind = "bound_unavailable"


class ParseError(Exception):
    """Malformed input file or CLI argument (exit code 2)."""

    kind = "parse"
