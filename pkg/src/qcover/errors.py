"""Exception hierarchy for the qcover engine.

Every engine error derives from :class:`QcoverError` so callers (and the
CLI) can distinguish domain failures from programming errors.
"""


class QcoverError(Exception):
    """Base class for all qcover errors."""


# --- complex construction / selection ---------------------------------------

class EmptyFacetError(QcoverError):
    """A facet with no vertices was supplied."""


class DuplicateFacetError(QcoverError):
    """Two input facets have identical vertex sets."""


class AntichainViolationError(QcoverError):
    """One input facet is contained in another; facet lists must be antichains."""

    def __init__(self, smaller, larger):
        self.smaller = frozenset(smaller)
        self.larger = frozenset(larger)
        super().__init__(
            f"facet {sorted(self.smaller)} is contained in facet {sorted(self.larger)}"
        )


class UncoveredVertexError(QcoverError):
    """Some label in 1..n belongs to no facet."""


class TooManyVerticesError(QcoverError):
    """More vertices than the 64-label desk-scale cap."""


class UnknownFacetIdError(QcoverError):
    """A facet id that does not exist in the complex (or selected subcomplex)."""


class EmptySelectionError(QcoverError):
    """A facet-subset selection was empty."""


# --- quasi-forest structure ---------------------------------------------------

class NotAPermutationError(QcoverError):
    """A proposed leaf order is not a permutation of the facet ids."""


class InvalidLeafOrderError(QcoverError):
    """A proposed leaf order fails the prefix-leaf condition."""


class UnknownNodeError(QcoverError):
    """A facet id that is not a node of the given relation tree."""


# --- cycles -------------------------------------------------------------------

class LengthMismatchError(QcoverError):
    """Paired vertex/facet or vector/universe lengths disagree."""


class NotACycleError(QcoverError):
    """The given alternating sequence is not a cycle."""


class BudgetExceededError(QcoverError):
    """The cycle search exhausted its node budget before finishing."""


# --- covers -------------------------------------------------------------------

class NotAKCoverError(QcoverError):
    """The vector does not cover every facet to the declared order."""


class NotALeafError(QcoverError):
    """The named facet is not a leaf of the complex."""


class NoFreeVertexError(QcoverError):
    """A leaf without a private vertex; impossible for valid antichains."""


# --- gradedness ----------------------------------------------------------------

class NotQuasiTreeError(QcoverError):
    """Operation restricted to quasi-trees received something else."""


class NotSpecialOddCycleError(QcoverError):
    """The witness construction needs a special cycle of odd length >= 3."""


class VerificationFailedError(QcoverError):
    """A constructed witness failed its independent re-check; engine bug."""


# --- families / io --------------------------------------------------------------

class NTooSmallError(QcoverError):
    """The family requires a larger size parameter."""


class InputFormatError(QcoverError):
    """A complex file could not be parsed; message carries diagnostics."""
