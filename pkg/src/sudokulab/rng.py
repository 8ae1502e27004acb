"""Seedable, portable random source used by everything random here.

The stream algorithm is xorshift32 (Marsaglia 2003, "Xorshift RNGs"),
chosen because its state and intermediates fit comfortably in 64-bit
signed integers, so the jitted kernels, the interpreted fallback, and
any reimplementation in another language produce identical streams.

Stream contract, for cross-implementation reproducibility:

* state init: fold a 64-bit unsigned seed to ``(seed ^ (seed >> 32)) &
  0xFFFFFFFF``; a zero result is replaced by 0x9E3779B9.
* draw below n: advance once, take ``state % n``.
* shuffle: Fisher-Yates swapping indices from high to low, drawing
  ``j = below(i + 1)`` for i = n-1 .. 1.
"""

from __future__ import annotations

from . import backend

MAX_SEED = 2**64 - 1

_NONZERO_FALLBACK = 0x9E3779B9


def fold_seed(seed: int) -> int:
    """Fold a 64-bit unsigned seed into a nonzero 32-bit xorshift state."""
    if not (0 <= seed <= MAX_SEED):
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    state = (seed ^ (seed >> 32)) & 0xFFFFFFFF
    return state if state != 0 else _NONZERO_FALLBACK


class Xorshift32:
    """Stateful convenience wrapper around the kernel-level stream."""

    def __init__(self, seed: int = 0):
        self.state = fold_seed(seed)

    def next_u32(self) -> int:
        self.state = int(backend.kernels.xs32_next(self.state))
        return self.state

    def below(self, n: int) -> int:
        """Uniform-ish draw in [0, n); one stream advance."""
        if n < 1:
            raise ValueError("n must be >= 1")
        self.state, value = backend.kernels.xs32_below(self.state, n)
        self.state = int(self.state)
        return int(value)

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle consuming len(items)-1 draws."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
