from nodal_kstab.exceptions.base import (
    AppException,
    EmitterError,
    InfiniteValuationError,
    InvalidInputError,
    LemmaViolationError,
    SchemaValidationError,
    TruncationExhaustedError,
)

__all__ = [
    "AppException",
    "EmitterError",
    "InfiniteValuationError",
    "InvalidInputError",
    "LemmaViolationError",
    "SchemaValidationError",
    "TruncationExhaustedError",
]
