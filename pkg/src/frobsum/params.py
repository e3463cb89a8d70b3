"""Run parameters shared by the exact engines."""

from dataclasses import dataclass, field


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def default_truncation(n: int, p: int) -> int:
    """Default series truncation degree: max(4p(n-1), 40)."""
    return max(4 * p * (n - 1), 40)


@dataclass(frozen=True)
class Params:
    """Global configuration: n copies of the 2-dimensional representation,
    characteristic p, series truncation degree D.

    n >= 4 is required by the decomposition engine; n >= 1 is accepted so
    the character/series layers can be unit-tested in isolation.
    """

    n: int
    p: int
    D: int = field(default=-1)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.D < 0:
            object.__setattr__(self, "D", default_truncation(self.n, self.p))
