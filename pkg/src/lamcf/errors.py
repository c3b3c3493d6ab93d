"""Exception hierarchy for the lamcf library.

Every error carries a machine-readable ``code`` that the CLI copies
verbatim into its JSON error objects.
"""


class LamcfError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "error"

    def __init__(self, detail: str = ""):
        super().__init__(detail or self.__class__.__name__)
        self.detail = detail


class NegativeInput(LamcfError):
    """A nonnegative (or strictly positive) value was required."""

    code = "negative_input"


class DepthExceeded(LamcfError):
    """More terms were requested than the fraction can supply."""

    code = "depth_exceeded"


class InvalidTerm(LamcfError):
    """Term sequence violates p0 >= 0, p_i >= 1 for i >= 1."""

    code = "invalid_term"


class PeriodNotFound(LamcfError):
    """Surd expansion did not close up within the term budget."""

    code = "period_not_found"

    def __init__(self, max_terms: int):
        super().__init__(f"no period within {max_terms} terms")
        self.max_terms = max_terms


class NotUnimodular(LamcfError):
    """Matrix determinant is not +1 or -1."""

    code = "not_unimodular"


class ImageNotPositive(LamcfError):
    """Moebius image left the positive reals."""

    code = "image_not_positive"


class NotDeterminantOne(LamcfError):
    """Operation needs determinant exactly +1."""

    code = "not_determinant_one"


class IdentityMatrix(LamcfError):
    """+/- identity fixes everything; the request is ill-posed."""

    code = "identity_matrix"


class NotHyperbolic(LamcfError):
    """Matrix has no axis because |trace| <= 2."""

    code = "not_hyperbolic"


class NotDecomposable(LamcfError):
    """Matrix is not a translation times positive-term generators."""

    code = "not_decomposable"


class PoleAt(LamcfError):
    """Moebius map has a pole at the requested point."""

    code = "pole"

    def __init__(self, z):
        super().__init__(f"pole at {z}")
        self.z = z


class FixedPointAtInfinity(LamcfError):
    """An axis endpoint sits at the point at infinity."""

    code = "fixed_point_at_infinity"


class InvalidLevel(LamcfError):
    """Level must be a positive integer."""

    code = "invalid_level"


class LevelTooLarge(LamcfError):
    """Level exceeds the brute-force work bound."""

    code = "level_too_large"


class UnsupportedIndex(LamcfError):
    """Closed-form trace expressions exist only for indices 0..3."""

    code = "unsupported_index"


class NoAdmissibleTerm(LamcfError):
    """Term search exhausted its bound without an admissible value."""

    code = "no_admissible_term"

    def __init__(self, search_bound: int, terms=()):
        super().__init__(f"no admissible term up to {search_bound}")
        self.search_bound = search_bound
        self.terms = tuple(terms)


class SumMismatch(LamcfError):
    """Singularity orders do not sum to 2g - 2."""

    code = "sum_mismatch"

    def __init__(self, actual, expected):
        super().__init__(f"orders sum to {actual}, need {expected}")
        self.actual = actual
        self.expected = expected


class PartTooSmall(LamcfError):
    """Every singularity order must be at least 1/2."""

    code = "part_too_small"


class GenusTooSmall(LamcfError):
    """Nonempty singularity data needs genus at least 2."""

    code = "genus_too_small"


class GenusOutOfRange(LamcfError):
    """Genus outside the supported enumeration range."""

    code = "genus_out_of_range"


class LevelMismatch(LamcfError):
    """Invariants live on different surfaces; comparison is undefined."""

    code = "level_mismatch"


class EmptyStream(LamcfError):
    """A construction stream with no steps carries no invariant."""

    code = "empty_stream"


class InvalidDeltaForLevel(LamcfError):
    """Singularity data is inconsistent with the genus of the level."""

    code = "invalid_delta_for_level"
