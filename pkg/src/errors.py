# -*- coding: utf-8 -*-
"""Error hierarchy. Each error maps to a stable code and CLI exit status."""

from typing import Any, Dict


class CMQMError(Exception):
    """Base class for all engine errors."""

    code = "internal_error"
    exit_code = 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": self.code,
            "message": str(self),
            "exit_code": self.exit_code,
        }


class ConfigInvalid(CMQMError):
    code = "config_invalid"
    exit_code = 2


class ResolutionExceeded(CMQMError):
    """A superposition needs more than 2^mu basis states."""

    code = "resolution_exceeded"
    exit_code = 3


class RangeExceeded(CMQMError):
    """An amplitude component lies outside the [-2, 2] headroom."""

    code = "range_exceeded"
    exit_code = 4


class TotalExtinction(CMQMError):
    """Every amplitude fell below the resolution threshold."""

    code = "total_extinction"
    exit_code = 5


class DimensionMismatch(CMQMError):
    code = "dimension_mismatch"
    exit_code = 6


class TagOverflow(CMQMError):
    """A squared polynomial value does not fit the energy-tag register."""

    code = "tag_overflow"
    exit_code = 7


class TapeBoundExceeded(CMQMError):
    code = "tape_bound_exceeded"
    exit_code = 8


class InvalidProgramIndex(CMQMError):
    code = "invalid_program_index"
    exit_code = 9


class NonUnitary(CMQMError):
    code = "non_unitary"
    exit_code = 10


ERROR_TYPES = (
    ConfigInvalid,
    ResolutionExceeded,
    RangeExceeded,
    TotalExtinction,
    DimensionMismatch,
    TagOverflow,
    TapeBoundExceeded,
    InvalidProgramIndex,
    NonUnitary,
)


def exit_code_table() -> Dict[str, int]:
    """Documented exit codes, keyed by error code."""
    table = {"ok": 0, CMQMError.code: CMQMError.exit_code}
    for err in ERROR_TYPES:
        table[err.code] = err.exit_code
    return table
