"""Exception types shared across the package.

The CLI maps these onto its exit codes: verification failures are the
"mathematically impossible" outcomes (exit 1), input problems exit 2,
and refusals to exceed a factorization or search budget exit 3.
"""


class InputError(ValueError):
    """Malformed or inconsistent input data."""


class FactorizationError(ValueError):
    """An integer could not be factored within the trial-division bound."""


class BudgetError(ValueError):
    """An exhaustive search would exceed the configured candidate budget."""


class VerificationError(AssertionError):
    """A theorem-backed consistency check failed; this signals a bug."""
