"""Error types shared across the counting modules.

Exit-status mapping (used by the CLI and the HTTP service):
validation problems -> 2, capacity/overflow problems -> 3.
"""


class DomainError(ValueError):
    """Input outside an operation's domain (bad parameter, empty sublattice)."""


class CapacityError(RuntimeError):
    """Requested computation exceeds a configured memory or size ceiling."""


class WideOverflowError(CapacityError):
    """An exact accumulator left the supported 128-bit range; reported, never wrapped."""


UINT128_MAX = (1 << 128) - 1


def check_uint128(value: int, what: str) -> int:
    if value < 0 or value > UINT128_MAX:
        raise WideOverflowError(f"{what} exceeds 128-bit range: {value}")
    return value
