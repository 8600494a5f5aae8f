class AppException(Exception):
    """Base class for every custom exception of the library."""

    def __init__(self, message="Application error", code=500):
        super().__init__(message)
        self.message = message
        self.code = code

    def __str__(self):
        return f"{self.code}: {self.message}"


class InvalidInputError(AppException):
    def __init__(self, message="Invalid input", code=400):
        super().__init__(message, code)


class InfiniteValuationError(AppException):
    """The valuation of the zero section is +infinity."""

    def __init__(self, message="Valuation of the zero form is infinite", code=400):
        super().__init__(message, code)


class TruncationExhaustedError(AppException):
    def __init__(self, message="Truncation exhausted", code=422, truncation=None):
        super().__init__(message, code)
        self.truncation = truncation


class LemmaViolationError(AppException):
    def __init__(self, message="Exact computation contradicts a proven statement", code=500):
        super().__init__(message, code)


class SchemaValidationError(AppException):
    def __init__(self, message="Payload does not match its schema", code=422):
        super().__init__(message, code)


class EmitterError(AppException):
    def __init__(self, message="Could not write report", code=500, path=None):
        if path is not None:
            message = f"{message} (path: {path})"
        super().__init__(message, code)
        self.path = path
