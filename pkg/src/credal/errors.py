"""Exception hierarchy for the credal package."""


class CredalError(Exception):
    """Base class for all errors raised by this package."""


# --- frame construction ---------------------------------------------------

class FrameError(CredalError):
    pass


class EmptyFrameError(FrameError):
    pass


class EmptyLabelError(FrameError):
    pass


class DuplicateLabelError(FrameError):
    pass


class FrameTooLargeError(FrameError):
    pass


class UnknownLabelError(FrameError):
    pass


class FrameMismatchError(CredalError):
    """Two values built over different frames were combined."""


# --- mass functions -------------------------------------------------------

class MassError(CredalError):
    pass


class MassOutOfRangeError(MassError):
    pass


class MassSumNotOneError(MassError):
    """Masses do not sum to 1. Carries the signed deviation from 1."""

    def __init__(self, deviation: float):
        self.deviation = deviation
        super().__init__(f"masses sum to {1.0 + deviation!r}, deviation {deviation:+.3e}")


class NotAMassFunctionError(MassError):
    """A recomposed vector has a genuinely negative entry or a wrong total."""


class NotNormalError(MassError):
    """Operation requires a normal mass function (no mass on the empty set)."""


class NotSingletonError(MassError):
    """Operation requires a single-element subset."""


# --- discounting ----------------------------------------------------------

class ContextError(CredalError):
    pass


class EmptyContextError(ContextError):
    pass


class DuplicateContextError(ContextError):
    pass


class AlphaOutOfRangeError(ContextError):
    pass


class OverlappingContextSetsError(ContextError):
    """Grouped discounting requires pairwise disjoint context sets."""


class ZeroImplicabilityError(CredalError):
    """Disjunctive decomposition needs b(B) > 0 for every subset B.

    Carries the first offending subset (in ascending bitmask order).
    """

    def __init__(self, subset):
        self.subset = subset
        super().__init__(f"implicability is 0 on {subset}; decomposition undefined")


class InvalidWeightError(CredalError):
    """A disjunctive weight is negative or not finite."""


# --- temporal -------------------------------------------------------------

class TemporalError(CredalError):
    pass


class NonPositiveTimeError(TemporalError):
    pass


class NegativeTimeError(TemporalError):
    pass


class InvalidFractionError(TemporalError):
    pass


class NonPositiveRateError(TemporalError):
    pass


class NonPositiveKappaError(TemporalError):
    pass


class KappaOutOfRangeError(TemporalError):
    pass


class NotSingletonCoverError(TemporalError):
    """The retention vector must be defined on the K singletons of the frame."""


class InfeasibleAlphasError(TemporalError):
    """The discount-rate system has no solution in [0, 1]^K.

    Carries the full raw alpha vector so callers can report it.
    """

    def __init__(self, raw_alphas):
        self.raw_alphas = tuple(raw_alphas)
        pretty = ", ".join(f"{a:.4f}" for a in self.raw_alphas)
        super().__init__(f"discount rates [{pretty}] fall outside [0, 1]")


# --- documents ------------------------------------------------------------

class DocumentError(CredalError):
    """A document failed to parse or validate.

    `where` is a line/field diagnostic such as "masses[2].mass" or
    "line 3 column 7".
    """

    def __init__(self, message: str, where: str = "", source: str = ""):
        self.where = where
        self.source = source
        prefix = ": ".join(p for p in (source, where) if p)
        super().__init__(f"{prefix}: {message}" if prefix else message)
