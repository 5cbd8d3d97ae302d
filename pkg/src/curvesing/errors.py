"""Exception hierarchy shared by every module.

Each analysis error carries a stable ``code`` string so the command line
can report machine-readable failures.
"""


class CurveSingError(Exception):
    """Base class for analysis errors."""

    code = "analysis_error"


class PolynomialSyntaxError(CurveSingError, ValueError):
    """Malformed polynomial or type expression text."""

    code = "syntax_error"

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


class ExtensionDepthExceeded(CurveSingError):
    """The computation needs more algebraic extensions than configured."""

    code = "extension_depth_exceeded"


class NonReducedInput(CurveSingError):
    """The germ has a repeated factor through the origin."""

    code = "non_reduced_input"


class CommonComponent(CurveSingError):
    """Two germs share a component through the origin."""

    code = "common_component"


class MaxDepthExceeded(CurveSingError):
    """The resolution did not finish within the configured number of stages."""

    code = "max_depth_exceeded"


class ModelConstructionFailed(CurveSingError):
    """A model germ could not be built for a type expression."""

    code = "model_construction_failed"


class NotApplicable(CurveSingError):
    """The requested formula does not apply to this input."""

    code = "not_applicable"
