import os


def default_budget() -> int:
    """Elementary-step budget; ``COVEXT_BUDGET`` overrides the built-in 10**6."""
    raw = os.environ.get("COVEXT_BUDGET")
    return int(raw) if raw else 10**6


class BudgetExceeded(RuntimeError):
    """A bounded search or lazy evaluation ran out of steps.

    Never silently turned into a negative answer.
    """


class Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        self.limit = default_budget() if limit is None else limit
        self.used = 0

    def spend(self, steps: int = 1):
        self.used += steps
        if self.used > self.limit:
            raise BudgetExceeded(f"budget of {self.limit} steps exhausted")


class WrongBuilder(ValueError):
    """A cycle-type spec was handed to the layout that cannot realise it."""


class InfeasibleSpec(ValueError):
    pass
