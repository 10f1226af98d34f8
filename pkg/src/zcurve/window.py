from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

T_MIN = 100.0
T_MAX = 1e12


@dataclass(frozen=True)
class Window:
    """A verification interval [T, T + H] on the critical line.

    Construction only checks T >= 100 and H > 0.  The hypothesis range
    T**mu <= H <= T**(1/4) under which the asymptotic statements are made is
    exposed through :meth:`in_hypothesis_range` and enforced by callers that
    ask for it (``strict=True``).
    """

    T: float
    H: float

    def __post_init__(self):
        T, H = float(self.T), float(self.H)
        if not (math.isfinite(T) and math.isfinite(H)):
            raise DomainError(f"window bounds must be finite, got T={T}, H={H}")
        if T < T_MIN:
            raise DomainError(f"window needs T >= {T_MIN:g}, got T={T}")
        if T + H > T_MAX:
            raise DomainError(f"window exceeds double-precision ceiling t <= {T_MAX:g}")
        if not H > 0:
            raise DomainError(f"window length must be positive, got H={H}")
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "H", H)

    @property
    def end(self) -> float:
        return self.T + self.H

    @property
    def P(self) -> float:
        """Main-sum scale sqrt(T / 2 pi)."""
        return math.sqrt(self.T / (2 * math.pi))

    def in_hypothesis_range(self, mu: float = 0.0) -> bool:
        return self.T**mu <= self.H <= self.T**0.25

    def require_hypothesis_range(self, mu: float = 0.0) -> None:
        if self.H > self.T**0.25:
            raise DomainError(
                f"H={self.H:g} exceeds T^(1/4)={self.T**0.25:g}; "
                "shorten the window or drop strict mode"
            )
        if self.H < self.T**mu:
            raise DomainError(f"H={self.H:g} is below T^mu={self.T**mu:g} (mu={mu:g})")

    def contains(self, t: float) -> bool:
        return self.T <= t <= self.end
