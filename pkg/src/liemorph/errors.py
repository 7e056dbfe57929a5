"""Exception types shared across the package."""


class SchemaError(ValueError):
    """Malformed or ill-typed JSON input.

    The message always starts with a JSON path (``$.brackets[2].coeffs``)
    pointing at the offending field.
    """


class VerificationError(ValueError):
    """A mathematical membership check failed at construction time.

    Raised when a bracket violates the Jacobi identity or a triple's
    linear map is not a morphism.  ``defect`` holds the witnessing
    alternating map when one is available.
    """

    def __init__(self, message, defect=None):
        super().__init__(message)
        self.defect = defect
