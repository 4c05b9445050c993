from typing import Any, Optional


class WeingartenError(Exception):
    """Root of every error raised by the toolkit."""


class CapacityError(WeingartenError):
    def __init__(self, what: str, value: int, bound: int):
        self.what = what
        self.value = value
        self.bound = bound
        super().__init__(f"{what}={value} exceeds the configured bound {bound}")


class DegreeMismatchError(WeingartenError, ValueError):
    pass


class InvalidInputError(WeingartenError, ValueError):
    pass


class NotMultilinearError(InvalidInputError):
    pass


class NonCentralError(WeingartenError):
    """Raised when a group-algebra element is not constant on a conjugacy class.

    ``witness`` holds two conjugate permutations with different coefficients.
    """

    def __init__(self, witness: tuple[Any, Any], coefficients: Optional[tuple[Any, Any]] = None):
        self.witness = witness
        self.coefficients = coefficients
        first, second = witness
        detail = f"{first} and {second} are conjugate but carry different coefficients"
        if coefficients is not None:
            detail += f" ({coefficients[0]} != {coefficients[1]})"
        super().__init__(detail)


class SingularSystemError(WeingartenError):
    pass


class UnknownCheckError(WeingartenError, LookupError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"No acceptance check named {name!r}")


def check_capacity(what: str, value: int, bound: int) -> None:
    if value > bound:
        raise CapacityError(what, value, bound)
