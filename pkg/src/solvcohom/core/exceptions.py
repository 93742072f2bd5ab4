"""
Exception hierarchy for solvcohom. Every exception carries an ErrorCode
whose registry entry supplies its message, severity and exit status.
"""

from typing import Any, Optional

from .errors import (
    ErrorCategory,
    ErrorCode,
    ErrorSeverity,
    error_registry,
    get_error_definition,
)


class SolvcohomException(Exception):
    """Base exception for all solvcohom errors"""

    def __init__(
        self,
        error_code: ErrorCode,
        context: Optional[dict[str, Any]] = None,
        original_exception: Optional[Exception] = None,
    ):
        """
        Build the message for ``error_code`` from ``context``.

        Args:
            error_code: Registered code for this failure
            context: Template fields, also echoed in ``to_dict``
            original_exception: Lower-level cause, if any
        """
        self.error_code = error_code
        self.context = context or {}
        self.original_exception = original_exception

        self.error_def = get_error_definition(error_code)
        if not self.error_def:
            raise ValueError(f"unregistered error code {error_code}")

        self.formatted_message = error_registry.format_message(
            error_code, **self.context
        )

        super().__init__(self.formatted_message)

    @property
    def category(self) -> ErrorCategory:
        """Registry category of this error"""
        return self.error_def.category

    @property
    def severity(self) -> ErrorSeverity:
        """Registry severity of this error"""
        return self.error_def.severity

    @property
    def exit_code(self) -> int:
        """Process exit status the CLI reports for this error"""
        return self.error_def.exit_code

    @property
    def suggested_fix(self) -> Optional[str]:
        """Remedy hint, or None"""
        return self.error_def.suggested_fix

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready payload, logged by the CLI at debug level"""
        result = {
            "error": {
                "code": self.error_code.value,
                "category": self.category.value,
                "severity": self.severity.value,
                "title": self.error_def.title,
                "message": self.formatted_message,
                "suggested_fix": self.suggested_fix,
                "exit_code": self.exit_code,
            }
        }

        if self.context:
            result["error"]["context"] = {k: str(v) for k, v in self.context.items()}

        if self.original_exception:
            result["error"]["original_error"] = {
                "type": type(self.original_exception).__name__,
                "message": str(self.original_exception),
            }

        return result


class ParseException(SolvcohomException):
    """Exception for malformed textual input"""

    def __init__(
        self,
        error_code: ErrorCode,
        text: str = "",
        column: int = 1,
        **kwargs,
    ):
        """
        Initialize parse exception

        Args:
            error_code: Parse error code
            text: The offending input
            column: 1-based column of the first bad character
            **kwargs: Additional context parameters
        """
        context = kwargs.pop("context", {})
        context.setdefault("text", text)
        context.setdefault("column", column)
        context.setdefault("line", 1)
        super().__init__(error_code, context=context, **kwargs)

        self.text = text
        self.column = column


class ConfigurationException(SolvcohomException):
    """Exception for invalid configuration values"""

    def __init__(self, key: str, value: Any, reason: str, **kwargs):
        super().__init__(
            ErrorCode.CFG001,
            context={"key": key, "value": value, "reason": reason},
            **kwargs,
        )


class InvalidCaseException(SolvcohomException):
    """Exception for unknown families or inconsistent lattice parameters"""

    def __init__(
        self,
        family: str,
        reason: str = "",
        error_code: ErrorCode = ErrorCode.CAS002,
        **kwargs,
    ):
        context = kwargs.pop("context", {})
        context.setdefault("family", family)
        context.setdefault("reason", reason)
        super().__init__(error_code, context=context, **kwargs)
        self.family = family


class UndecidedCaseException(InvalidCaseException):
    """Rational data leaves some character conditions open"""

    def __init__(self, A: Any, n: int, nprime: int, reason: str, **kwargs):
        super().__init__(
            "g8",
            reason,
            error_code=ErrorCode.CAS003,
            context={"A": A, "n": n, "nprime": nprime},
            **kwargs,
        )


class DecompositionException(SolvcohomException):
    """The computed decomposition fails the cohomology cross-check"""

    def __init__(self, flavor: str, bidegree: Any, expected: int, counted: int):
        super().__init__(
            ErrorCode.DEC001,
            context={
                "flavor": flavor,
                "bidegree": bidegree,
                "expected": expected,
                "counted": counted,
            },
        )


class AlgebraException(SolvcohomException):
    """Base class for errors raised by algebraic operations"""

    pass


class DivisionByZeroException(AlgebraException, ZeroDivisionError):
    """Exception for inverting zero"""

    def __init__(self, value: Any = 0):
        super().__init__(ErrorCode.ALG001, context={"value": value})


class UndefinedProductException(AlgebraException):
    """A cup product entering a Massey product is not ∂∂̄-exact"""

    def __init__(self, product: str, bidegree: Any):
        super().__init__(
            ErrorCode.ALG002, context={"product": product, "bidegree": bidegree}
        )


class BidegreeMismatchException(AlgebraException):
    """Exception for vectors or matrices living in the wrong bidegree"""

    def __init__(self, expected: Any, actual: Any):
        super().__init__(
            ErrorCode.ALG003, context={"expected": expected, "actual": actual}
        )


class MalformedShapeException(AlgebraException):
    """Exception for cell sets that are neither squares nor zigzags"""

    def __init__(self, cells: Any):
        super().__init__(ErrorCode.ALG004, context={"cells": cells})


class NotClosedException(AlgebraException):
    """A Bott-Chern class representative is not closed"""

    def __init__(self, name: str, bidegree: Any):
        super().__init__(
            ErrorCode.ALG005, context={"name": name, "bidegree": bidegree}
        )


class InternalInconsistencyException(SolvcohomException):
    """Two independent computations disagree"""

    def __init__(self, detail: str):
        super().__init__(ErrorCode.INT001, context={"detail": detail})
