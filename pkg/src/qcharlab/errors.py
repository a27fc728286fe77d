"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: invalid input exits with 2,
a theorem violation (a structural prediction contradicted by brute force,
which always signals an implementation bug) exits with 3.
"""


class InvalidInput(ValueError):
    """An argument violates a documented precondition."""


class InvariantViolation(AssertionError):
    """An internal structural invariant failed; never expected on valid input."""


class TheoremViolation(InvariantViolation):
    """A closed-form prediction disagrees with the brute-force computation."""
