import logging
import statistics
import time
from collections import Counter

logger = logging.getLogger(__name__)


def count_and_sort(lst):
    counts = Counter(lst)
    return dict(sorted(counts.items(), key=lambda x: (-x[1], x[0])))


# get statistics from a list of numbers
def get_statistics(numbers):
    if len(numbers) == 0:
        return {}

    # if list is not all numbers
    if not all(isinstance(num, (int, float)) for num in numbers):
        logger.warning("list contains non-numeric values")
        return {}

    ordered = sorted(numbers)
    single = len(numbers) == 1
    return {
        "Mean": statistics.mean(numbers),
        "Median": numbers[0] if single else statistics.median(numbers),
        "Standard Deviation": 0 if single else statistics.stdev(numbers),
        "Range": ordered[-1] - ordered[0],
        "Minimum": ordered[0],
        "Maximum": ordered[-1],
        "Q1": numbers[0] if single else statistics.median(ordered[: len(numbers) // 2]),
        "Q3": numbers[0] if single else statistics.median(ordered[(len(numbers) + 1) // 2 :]),
        "Count": len(numbers),
        "Sum": sum(numbers),
    }


def timing_summary(seconds):
    """mean / median / min / max of a list of durations."""
    stats = get_statistics(seconds)
    if not stats:
        return {"mean": 0.0, "median": 0.0, "min": 0.0, "max": 0.0}
    return {"mean": stats["Mean"], "median": stats["Median"], "min": stats["Minimum"], "max": stats["Maximum"]}


class Stopwatch:
    """Context manager recording the wall time of its block in .seconds."""

    def __enter__(self):
        self.seconds = 0.0
        self._start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self._start
        return False
