"""Shared exception types.

The CLI maps these onto exit codes: parse/domain problems are usage
errors (exit 2), capacity and budget problems are resource errors
(exit 3).  Budget errors are deliberately distinct from capacity
errors and from ordinary infeasibility so a timeout is never mistaken
for a mathematical result.
"""


class ParseError(ValueError):
    """Malformed input text (edge lists, graph6, certificates)."""


class CapacityError(RuntimeError):
    """Request exceeds a configured exact-computation bound."""


class BudgetError(RuntimeError):
    """A brute-force search budget (edges, time) was exceeded."""
