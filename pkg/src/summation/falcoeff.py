"""
Table expressing powers in the binomial basis.

Row k holds a_{k,i} = i! * S(k, i) for i = 0..k, so that

    j^k = sum_i a_{k,i} * C(j, i)

for every integer j >= 0. The rows follow from the Stirling recurrence
S(k, i) = i*S(k-1, i) + S(k-1, i-1), which scaled by i! reads
a_{k,i} = i * (a_{k-1,i} + a_{k-1,i-1}).
"""
import threading
from math import factorial
from typing import List, Tuple


class FalcoeffTable:
    """
    Lazily extended, thread-safe table of scaled Stirling numbers.

    Rows are computed on demand and never change once written, so
    concurrent callers always observe the same row contents.
    """

    def __init__(self):
        self._rows: List[Tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._rows)

    def row(self, k: int) -> Tuple[int, ...]:
        """
        Row k of the table.

        Args:
            k: Power, k >= 0

        Returns:
            Tuple of k+1 integers (a_{k,0}, ..., a_{k,k})
        """
        if k < 0:
            raise ValueError(f"Row index must be >= 0, got {k}")
        if k >= len(self._rows):
            with self._lock:
                while len(self._rows) <= k:
                    prev = self._rows[-1]
                    size = len(prev)
                    nxt = tuple(
                        i * ((prev[i] if i < size else 0) + (prev[i - 1] if i > 0 else 0))
                        for i in range(size + 1)
                    )
                    self._rows.append(nxt)
        return self._rows[k]

    def stirling2(self, k: int, i: int) -> int:
        """Stirling number of the second kind S(k, i)."""
        if i < 0 or i > k:
            return 0
        return self.row(k)[i] // factorial(i)


falcoeff_table = FalcoeffTable()


def stirling2(k: int, i: int) -> int:
    return falcoeff_table.stirling2(k, i)
