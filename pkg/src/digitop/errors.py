"""Error types shared across the package.

DomainError covers bad inputs: malformed labels or files, unknown
vertices, violated preconditions.  CapacityError covers inputs that are
structurally fine but exceed a configured work budget (vertex caps,
clique budgets, digitization budgets).  The command line maps them to
distinct exit codes.
"""


class DomainError(ValueError):
    """Input violates a precondition or format rule."""


class CapacityError(RuntimeError):
    """Input exceeds a configured size or work budget."""
