"""
Resource limits for searches.

Hom-posets can be exponentially large, so every homotopy decision runs under a
cap on visited maps, and every search under a wall-clock budget. Running out of
either turns the answer into INCONCLUSIVE; it never becomes a "no".
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Optional

from config import settings
from finite_spaces.errors import FiniteSpaceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Limits:
    """Caps on visited maps per decision and on seconds per run."""

    visited: int
    seconds: float

    @classmethod
    def from_settings(cls) -> "Limits":
        return cls(visited=settings.limit_visited, seconds=settings.limit_seconds)

    @classmethod
    def parse(cls, text: str, base: Optional["Limits"] = None) -> "Limits":
        """Parse ``visited=<N>,seconds=<T>``; missing keys keep the base values."""
        base = base or cls.from_settings()
        values = {"visited": base.visited, "seconds": base.seconds}
        for item in filter(None, (part.strip() for part in text.split(","))):
            key, sep, raw = item.partition("=")
            if not sep or key not in values:
                raise FiniteSpaceError(f"bad limits entry {item!r}; expected visited=<N>,seconds=<T>")
            try:
                values[key] = int(raw) if key == "visited" else float(raw)
            except ValueError:
                raise FiniteSpaceError(f"bad value in limits entry {item!r}") from None
        if values["visited"] < 1 or values["seconds"] <= 0:
            raise FiniteSpaceError("limits must be positive")
        return cls(visited=values["visited"], seconds=values["seconds"])

    def __str__(self) -> str:
        return f"visited={self.visited},seconds={self.seconds:g}"


@dataclass
class Budget:
    """
    Tracks the wall-clock budget of one run and what was spent.

    One Budget is shared by every decision of a search so that the deadline
    applies to the whole run.
    """

    limits: Limits
    started_at: float = field(default_factory=time.monotonic)
    decisions: int = 0
    visited: int = 0
    inconclusive: int = 0

    @classmethod
    def start(cls, limits: Optional[Limits] = None) -> "Budget":
        return cls(limits or Limits.from_settings())

    @property
    def deadline(self) -> float:
        return self.started_at + self.limits.seconds

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.started_at

    def expired(self) -> bool:
        return time.monotonic() >= self.deadline

    def record(self, visited: int, conclusive: bool) -> None:
        self.decisions += 1
        self.visited += visited
        if not conclusive:
            self.inconclusive += 1
            logger.debug(f"inconclusive decision after {visited} maps ({self.elapsed:.1f}s elapsed)")
