"""
runners/base.py — Abstract interface every work runner must implement.
"""
from abc import ABC, abstractmethod
from collections.abc import Callable, Sequence
from typing import TypeVar

T = TypeVar("T")
R = TypeVar("R")


class BaseRunner(ABC):
    """
    Abstract executor of independent work items.

    Subclasses must implement:
      - map: apply a picklable function to every item, results in item order
      - close: release worker processes
    """

    workers: int = 1

    @abstractmethod
    def map(self, fn: Callable[[T], R], items: Sequence[T]) -> list[R]:
        """Return [fn(item) for item in items], in the order of `items`."""
        ...

    @abstractmethod
    def close(self) -> None:
        ...

    def __enter__(self):
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()
