"""Shared exception types."""


class ParameterError(ValueError):
    """A parameter is outside the range a formula or constructor supports."""


class BuildBudgetError(ValueError):
    """A requested topology exceeds the instance-size budget."""
