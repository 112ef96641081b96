"""Error types shared across the library, each mapped to a process exit code."""

from __future__ import annotations

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_PRECONDITION = 3
EXIT_RESOURCE = 4
EXIT_INVARIANT = 5


class GroupCurvError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = EXIT_PRECONDITION


class ConfigError(GroupCurvError):
    """Malformed configuration: unknown family, bad literal, invalid table."""

    exit_code = EXIT_CONFIG


class InvalidGeneratingSetError(ConfigError):
    """Generating set is empty, contains the identity, or is not symmetric."""


class PreconditionError(GroupCurvError):
    """An operation was called outside its documented domain."""

    exit_code = EXIT_PRECONDITION


class FamilyMismatchError(PreconditionError):
    """An element payload does not belong to the group it was used with."""


class OutOfBallError(PreconditionError):
    """A norm or curvature query escaped the enumerated radius."""


class UnreachableElementError(PreconditionError):
    """A target element was not reached; the generating set may not generate it."""


class ResourceLimitError(GroupCurvError):
    """An element-count or time budget was exhausted before completion."""

    exit_code = EXIT_RESOURCE


class InvariantError(GroupCurvError):
    """An exact internal identity failed; indicates corrupted data or a bug."""

    exit_code = EXIT_INVARIANT


class HomomorphismError(InvariantError):
    """Generator images do not extend to a homomorphism on the enumerated ball."""
