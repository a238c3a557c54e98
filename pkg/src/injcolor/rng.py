"""Deterministic seed derivation and keyed coin flips."""

_MASK64 = (1 << 64) - 1


def mix64(x: int) -> int:
    """SplitMix64 finalizer; a bijective scrambler on 64-bit words."""
    x &= _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def derive_seed(seed: int, *salts: int) -> int:
    """Stable sub-seed for the given salt sequence."""
    x = mix64(seed ^ 0x9E3779B97F4A7C15)
    for s in salts:
        x = mix64(x + 0x9E3779B97F4A7C15 * (s + 1))
    return x


def pair_bit(seed: int, u: int, v: int) -> int:
    """Deterministic coin flip keyed by (seed, u, v); returns 0 or 1."""
    return mix64(derive_seed(seed, u) ^ mix64(v + 0x2545F4914F6CDD1D)) & 1
