"""Deterministic counter-based random numbers (splitmix64).

The generator is pinned down by its integer recurrence so that a given seed
produces the same stream on every platform, independent of any library RNG.
Output k (k = 1, 2, ...) of the stream with seed s is

    out_k = mix64((s + k * GOLDEN) mod 2**64)

with GOLDEN = 0x9E3779B97F4A7C15 and the splitmix64 finalizer

    z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27;  z *= 0x94D049BB133111EB
    z ^= z >> 31

(all arithmetic mod 2**64).  Uniform doubles keep the top 53 bits:
u = (out >> 11) * 2**-53, hence u in [0, 1).

Being a pure counter scheme, the stream needs no sequential state and
vectorizes; `uniforms` is the bulk path and `mix64` the scalar reference.
Child streams come from `child_seed`, which feeds the master seed and the
stream index back through the same mixer.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """splitmix64 finalizer of a 64-bit integer (scalar reference path)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX_A) & MASK64
    z = ((z ^ (z >> 27)) * _MIX_B) & MASK64
    return z ^ (z >> 31)


def child_seed(seed: int, index: int) -> int:
    """Seed of independent child stream `index` (0-based) of a master seed."""
    if index < 0:
        raise ValueError("stream index must be >= 0")
    return mix64((seed + GOLDEN * (index + 1)) & MASK64)


def _as_signed(k: int) -> np.int64:
    # two's-complement image of an unsigned 64-bit constant
    return np.int64(k - (1 << 64)) if k >= (1 << 63) else np.int64(k)


def raw64(seed: int, n: int) -> np.ndarray:
    """Outputs 1..n of the stream as a uint64 array.

    Wrapping 64-bit multiplies run through the signed kernel (`int64` view);
    the low 64 bits agree with unsigned arithmetic under two's complement,
    which sidesteps a slow unsigned-multiply path in some numpy builds.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    z = np.arange(1, n + 1, dtype=np.int64)
    z *= _as_signed(GOLDEN)
    z += _as_signed(seed & MASK64)
    u = z.view(np.uint64)
    u ^= u >> np.uint64(30)
    u = (u.view(np.int64) * _as_signed(_MIX_A)).view(np.uint64)
    u ^= u >> np.uint64(27)
    u = (u.view(np.int64) * _as_signed(_MIX_B)).view(np.uint64)
    u ^= u >> np.uint64(31)
    return u


def uniforms(seed: int, n: int) -> np.ndarray:
    """n doubles in [0, 1), bit-reproducible for a given seed."""
    top53 = raw64(seed, n) >> np.uint64(11)
    return top53.view(np.int64).astype(np.float64) * 2.0**-53
