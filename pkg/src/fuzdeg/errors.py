"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class FuzdegError(Exception):
    """Base class for all errors raised by fuzdeg."""


class CapacityError(FuzdegError):
    """A configured size limit (order, classes, pairs, oracle maps) was exceeded."""


class SpecError(FuzdegError):
    """A group spec string or Cayley-table file could not be parsed."""


class GroupValidationError(FuzdegError):
    """A Cayley table violates one of the group axioms."""


class InvalidFuzzySubgroupError(FuzdegError):
    """A membership map is not a fuzzy subgroup."""


class InsufficientDepthError(FuzdegError):
    """The membership grid is too shallow to realize every chain of the lattice."""


class InternalConsistencyError(FuzdegError):
    """Two independent characterizations disagreed. Always a bug."""
