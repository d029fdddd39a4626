class PlannerError(ValueError):
    """Raised when a reduction step cannot be completed.

    Attributes:
        step (int | None): The step of the reduction (1 to 4), None outside the reduction.
        check (str): The failed precondition.
    """

    def __init__(self, message: str, check: str, step: int | None = None):
        super().__init__(message if step is None else f"Step {step}: {message}")
        self.step = step
        self.check = check
