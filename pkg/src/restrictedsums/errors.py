"""Shared exception types.

Kept in one place so the CLI can map each class to a distinct exit code.
"""


class InputError(ValueError):
    """Malformed or out-of-contract input (bad literal, mixed domains, ...)."""


class ResourceCapExceeded(RuntimeError):
    """An enumeration would exceed the configured instance cap."""


class TheoremViolation(RuntimeError):
    """A verified statement failed on a concrete instance.

    Raising instead of returning makes these impossible to ignore; the sweep
    driver converts them into 'violated' report records.
    """
