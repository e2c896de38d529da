"""Deterministic 64-bit PRNG with a fixed cross-implementation contract.

SplitMix64 with the standard constants:
    state += 0x9E3779B97F4A7C15
    z = state; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31

Sampling helpers reduce by plain modulo, so sequences are bit-identical
for any implementation following the same recipe.
"""

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK64

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n):
        """Uniform-ish value in [0, n) by modulo reduction (part of the contract)."""
        return self.next_u64() % n

    def int_in(self, lo, hi):
        """Value in the closed interval [lo, hi]."""
        return lo + self.below(hi - lo + 1)
