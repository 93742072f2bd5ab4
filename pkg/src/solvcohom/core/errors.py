"""
Error codes, categories and message templates shared by every solvcohom
module. Each code maps to one exit status on the command line.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

logger = logging.getLogger(__name__)


class ErrorCategory(str, Enum):
    """Which stage of a run raised the error."""

    PARSE = "parse"
    CONFIG = "config"
    CASE = "case"
    DECOMPOSITION = "decomposition"
    ALGEBRA = "algebra"
    INTERNAL = "internal"


class ErrorSeverity(str, Enum):
    """How far a reported result can be trusted."""

    CRITICAL = "critical"  # Result cannot be trusted
    ERROR = "error"  # Run aborted; input or config must change
    WARNING = "warning"  # Operation succeeded with caveats


class ErrorCode(str, Enum):
    """Centralized error codes for the cohomology engine"""

    # Parse Errors (PRS001-PRS099)
    PRS001 = "PRS001"  # Malformed scalar
    PRS002 = "PRS002"  # Malformed form monomial
    PRS003 = "PRS003"  # Malformed structure equations
    PRS004 = "PRS004"  # Malformed manifest or bicomplex file
    PRS005 = "PRS005"  # Index out of range

    # Configuration Errors (CFG001-CFG099)
    CFG001 = "CFG001"  # Bad configuration value

    # Case Errors (CAS001-CAS099)
    CAS001 = "CAS001"  # Unknown family
    CAS002 = "CAS002"  # Invalid case parameters
    CAS003 = "CAS003"  # Case cannot be decided from rational data

    # Decomposition Errors (DEC001-DEC099)
    DEC001 = "DEC001"  # Decomposition verification failed

    # Algebra Errors (ALG001-ALG099)
    ALG001 = "ALG001"  # Division by zero
    ALG002 = "ALG002"  # Massey product undefined
    ALG003 = "ALG003"  # Bidegree mismatch
    ALG004 = "ALG004"  # Malformed shape
    ALG005 = "ALG005"  # Class representative not closed

    # Internal Errors (INT001-INT099)
    INT001 = "INT001"  # Internal inconsistency


@dataclass(frozen=True)
class ErrorDefinition:
    """Metadata attached to one error code."""

    code: ErrorCode
    category: ErrorCategory
    severity: ErrorSeverity
    title: str
    message_template: str
    suggested_fix: Optional[str] = None
    exit_code: int = 1


class ErrorRegistry:
    """Lookup table from ErrorCode to its definition."""

    def __init__(self):
        """Populate the table."""
        self._errors: dict[ErrorCode, ErrorDefinition] = {}
        self._initialize_errors()

    def _initialize_errors(self):
        """Register one definition per ErrorCode member."""

        # Parse Errors
        self._register_error(
            ErrorDefinition(
                code=ErrorCode.PRS001,
                category=ErrorCategory.PARSE,
                severity=ErrorSeverity.ERROR,
                title="Malformed Scalar",
                message_template="Cannot parse scalar '{text}' at column {column}",
                suggested_fix="Write scalars as a/b+c/d*i, e.g. 2, i, -1/2*i",
                exit_code=2,
            )
        )

        self._register_error(
            ErrorDefinition(
                code=ErrorCode.PRS002,
                category=ErrorCategory.PARSE,
                severity=ErrorSeverity.ERROR,
                title="Malformed Monomial",
                message_template="Cannot parse monomial '{text}' at column {column}: {reason}",
                suggested_fix="Use the form T^{-2}dz_{131̄} or T^-2 dz_{1,3,1b}",
                exit_code=2,
            )
        )

        self._register_error(
            ErrorDefinition(
                code=ErrorCode.PRS003,
                category=ErrorCategory.PARSE,
                severity=ErrorSeverity.ERROR,
                title="Malformed Structure Equations",
                message_template="Cannot parse structure equations at column {column}: {reason}",
                suggested_fix="Use Salamon notation such as (e^{15},-e^{25},0,0,0,0)",
                exit_code=2,
            )
        )

        self._register_error(
            ErrorDefinition(
                code=ErrorCode.PRS004,
                category=ErrorCategory.PARSE,
                severity=ErrorSeverity.ERROR,
                title="Malformed Input File",
                message_template="Cannot read '{path}' (line {line}, column {column}): {reason}",
                suggested_fix="Check the file against the documented manifest or bicomplex format",
                exit_code=2,
            )
        )

        self._register_error(
            ErrorDefinition(
                code=ErrorCode.PRS005,
                category=ErrorCategory.PARSE,
                severity=ErrorSeverity.ERROR,
                title="Index Out Of Range",
                message_template="Index {index} is outside 1..{bound} in '{text}'",
                suggested_fix="Indices must lie between 1 and the dimension",
                exit_code=2,
            )
        )

        # Configuration Errors
        self._register_error(
            ErrorDefinition(
                code=ErrorCode.CFG001,
                category=ErrorCategory.CONFIG,
                severity=ErrorSeverity.ERROR,
                title="Bad Configuration Value",
                message_template="Configuration value {key}={value!r} is invalid: {reason}",
                suggested_fix="Fix the configuration file or environment variable",
                exit_code=2,
            )
        )

        # Case Errors
        self._register_error(
            ErrorDefinition(
                code=ErrorCode.CAS001,
                category=ErrorCategory.CASE,
                severity=ErrorSeverity.ERROR,
                title="Unknown Family",
                message_template="Unknown family '{family}'",
                suggested_fix="Choose one of g1, g2, g8",
                exit_code=3,
            )
        )

        self._register_error(
            ErrorDefinition(
                code=ErrorCode.CAS002,
                category=ErrorCategory.CASE,
                severity=ErrorSeverity.ERROR,
                title="Invalid Case Parameters",
                message_template="Invalid parameters for {family}: {reason}",
                suggested_fix="Check the case token or lattice parameters",
                exit_code=3,
            )
        )

        self._register_error(
            ErrorDefinition(
                code=ErrorCode.CAS003,
                category=ErrorCategory.CASE,
                severity=ErrorSeverity.ERROR,
                title="Undecided Case",
                message_template="Case of {family} with A={A}, n={n}, n'={nprime} needs Im(A) choice: {reason}",
                suggested_fix="Pass the case token directly, e.g. --case v",
                exit_code=3,
            )
        )

        # Decomposition Errors
        self._register_error(
            ErrorDefinition(
                code=ErrorCode.DEC001,
                category=ErrorCategory.DECOMPOSITION,
                severity=ErrorSeverity.CRITICAL,
                title="Decomposition Failure",
                message_template="Decomposition does not reproduce {flavor} cohomology at {bidegree}: expected {expected}, counted {counted}",
                exit_code=4,
            )
        )

        # Algebra Errors
        self._register_error(
            ErrorDefinition(
                code=ErrorCode.ALG001,
                category=ErrorCategory.ALGEBRA,
                severity=ErrorSeverity.ERROR,
                title="Division By Zero",
                message_template="Cannot invert {value}",
            )
        )

        self._register_error(
            ErrorDefinition(
                code=ErrorCode.ALG002,
                category=ErrorCategory.ALGEBRA,
                severity=ErrorSeverity.ERROR,
                title="Undefined Massey Product",
                message_template="Product {product} at {bidegree} is not ∂∂̄-exact",
                suggested_fix="Pick classes whose pairwise products vanish in Bott-Chern cohomology",
            )
        )

        self._register_error(
            ErrorDefinition(
                code=ErrorCode.ALG003,
                category=ErrorCategory.ALGEBRA,
                severity=ErrorSeverity.ERROR,
                title="Bidegree Mismatch",
                message_template="Expected bidegree {expected}, got {actual}",
            )
        )

        self._register_error(
            ErrorDefinition(
                code=ErrorCode.ALG004,
                category=ErrorCategory.ALGEBRA,
                severity=ErrorSeverity.ERROR,
                title="Malformed Shape",
                message_template="Cells {cells} do not form a square or a zigzag",
            )
        )

        self._register_error(
            ErrorDefinition(
                code=ErrorCode.ALG005,
                category=ErrorCategory.ALGEBRA,
                severity=ErrorSeverity.ERROR,
                title="Representative Not Closed",
                message_template="{name} at {bidegree} is not ∂- and ∂̄-closed",
                suggested_fix="Bott-Chern classes need representatives killed by both differentials",
            )
        )

        # Internal Errors
        self._register_error(
            ErrorDefinition(
                code=ErrorCode.INT001,
                category=ErrorCategory.INTERNAL,
                severity=ErrorSeverity.CRITICAL,
                title="Internal Inconsistency",
                message_template="Internal inconsistency: {detail}",
            )
        )

    def _register_error(self, error_def: ErrorDefinition):
        self._errors[error_def.code] = error_def

    def get_error(self, code: ErrorCode) -> Optional[ErrorDefinition]:
        """Definition for ``code``, or None."""
        return self._errors.get(code)

    def format_message(self, code: ErrorCode, **kwargs) -> str:
        """Fill the template for ``code``; missing fields leave it unfilled."""
        error_def = self.get_error(code)
        if not error_def:
            return f"unregistered code {code}"

        try:
            return error_def.message_template.format(**kwargs)
        except KeyError as e:
            logger.warning("template field %s missing for %s", e, code)
            return error_def.message_template

    def get_errors_by_category(self, category: ErrorCategory) -> list[ErrorDefinition]:
        """Definitions belonging to ``category``."""
        return [error for error in self._errors.values() if error.category == category]

    def get_all_codes(self) -> list[ErrorCode]:
        """Every registered code, in registration order."""
        return list(self._errors.keys())


# Module-wide registry
error_registry = ErrorRegistry()


def get_error_definition(code: ErrorCode) -> Optional[ErrorDefinition]:
    """Look up ``code`` in the module-wide registry."""
    return error_registry.get_error(code)


def format_error_message(code: ErrorCode, **kwargs) -> str:
    """Format ``code`` against the module-wide registry."""
    return error_registry.format_message(code, **kwargs)
