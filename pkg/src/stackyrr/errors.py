"""Exception types shared by all modules.

The CLI maps these onto exit statuses: validation problems exit with 2,
resource-cap breaches with 3, and cross-check disagreements with 4.
"""


class ValidationError(ValueError):
    """Malformed or inconsistent input (bad table, bad JSON, bad label...)."""


class ResourceLimitError(RuntimeError):
    """A configured cap (conductor, group order, tuple count) was exceeded."""


class ConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagreed.

    This is never expected to fire; it exists so that a formula bug cannot
    silently produce a wrong number.
    """
