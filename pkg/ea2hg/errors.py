class Ea2hgError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__()
        self.code = code
        self.message = message

    def __repr__(self) -> str:
        return super().__repr__() + self.message

    def __str__(self) -> str:
        return super().__str__() + self.message


class ValidationError(Ea2hgError):
    """Malformed input or a violated precondition."""

    def __init__(self, message: str) -> None:
        super().__init__(2, message)


class NotClosedError(ValidationError):
    """A subset that fails G*G ⊆ G where a closed subset is required."""


class GuardError(Ea2hgError):
    """A brute-force or enumeration size guard was exceeded."""

    def __init__(self, guard: str, value: int, limit: int) -> None:
        super().__init__(3, f"{guard}={value} exceeds guard {limit}")
        self.guard = guard
        self.value = value
        self.limit = limit


def check_guard(guard: str, value: int, limit: int) -> None:
    if value > limit:
        raise GuardError(guard, value, limit)
