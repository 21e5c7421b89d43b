"""Exception types shared across the package."""


class BudgetExceeded(ValueError):
    """An exhaustive search would visit more than the allowed number of words."""

    def __init__(self, required: int, budget: int, what: str = "words"):
        self.required = required
        self.budget = budget
        super().__init__(
            f"refusing to enumerate {required} {what}: budget is {budget} "
            f"(raise it to at least {required} to proceed)"
        )


class NumericDegeneracy(ArithmeticError):
    pass


class NoDominantRoot(NumericDegeneracy):
    """1 + (z - q) f(z) has no sign change on [1.7, q); the pattern is too short."""


class DegenerateRQ(NumericDegeneracy):
    """The denominator in the R_Q formula vanishes or changes sign."""
