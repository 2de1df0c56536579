"""Exact discrete dynamics of a single two-color Kac ring.

A ring of N sites holds one black or white ball per site. Each timestep the
ring rotates clockwise by one site, and the ball arriving at the marked site
(the pointer, fixed at site 0) changes color when the step's flip decision is
true. Configurations are stored bit-packed: site j lives in bit j of an
integer, with black encoded as 1 and white as 0, so rings up to at least
2**16 sites stay cheap to copy and compare.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Callable, Iterable

import numpy as np

__all__ = [
    "Color",
    "PointerPolicy",
    "RingConfig",
    "Trajectory",
    "step",
    "relative_entropy",
    "counts",
    "imbalance",
    "imbalance_decay",
    "default_cap",
    "evolve",
]


class Color(IntEnum):
    """Ball color; the integer value is the packed bit encoding."""

    WHITE = 0
    BLACK = 1

    def flipped(self) -> "Color":
        return Color(1 - self.value)


class PointerPolicy(Enum):
    """How the pointer decides whether the crossing ball flips.

    CLASSICAL always flips. QUANTUM flips when measuring a freshly prepared
    qubit in equal superposition yields 1, i.e. a fair coin per step.
    """

    CLASSICAL = "classical"
    QUANTUM = "quantum"

    @classmethod
    def parse(cls, name: str) -> "PointerPolicy":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(
                f"unknown pointer policy {name!r}: expected 'classical' or 'quantum'"
            ) from None


# Flip deciders may also be arbitrary callables rng -> bool, used by tests to
# substitute a plain coin for the qubit pointer.
FlipDecider = Callable[[np.random.Generator], bool]


@dataclass(frozen=True)
class RingConfig:
    """Immutable ring configuration: ``n`` sites packed into ``bits``.

    Bit j of ``bits`` is the color of site j (BLACK=1, WHITE=0). Values
    compare site-wise via ordinary equality.
    """

    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"ring needs at least one site, got n={self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits {self.bits:#x} out of range for n={self.n} sites")

    @classmethod
    def from_colors(cls, colors: Iterable[Color | int]) -> "RingConfig":
        seq = [int(c) for c in colors]
        if any(c not in (0, 1) for c in seq):
            raise ValueError("colors must be Color values or 0/1 integers")
        bits = 0
        for j, c in enumerate(seq):
            bits |= c << j
        return cls(bits=bits, n=len(seq))

    @classmethod
    def from_string(cls, text: str) -> "RingConfig":
        """Parse a configuration string over {B, W}, leftmost char = site 0."""
        bad = set(text) - {"B", "W"}
        if bad or not text:
            raise ValueError(
                f"invalid configuration string {text!r}: only 'B' and 'W' allowed"
            )
        return cls.from_colors(1 if ch == "B" else 0 for ch in text)

    @classmethod
    def all_black(cls, n: int) -> "RingConfig":
        return cls(bits=(1 << n) - 1, n=n)

    @classmethod
    def all_white(cls, n: int) -> "RingConfig":
        return cls(bits=0, n=n)

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "RingConfig":
        """Draw uniformly over all 2**n colorings (consumes ceil(n/8) bytes)."""
        raw = int.from_bytes(rng.bytes((n + 7) // 8), "little")
        return cls(bits=raw & ((1 << n) - 1), n=n)

    def color_at(self, j: int) -> Color:
        return Color((self.bits >> (j % self.n)) & 1)

    def to_string(self) -> str:
        return "".join("B" if (self.bits >> j) & 1 else "W" for j in range(self.n))

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True)
class Trajectory:
    """Per-step record of one ring evolution.

    ``entropy_series[t]`` is the relative entropy (site-wise Hamming distance
    from the initial configuration) after t steps; ``imbalance_series[t]`` is
    black count minus white count. ``recurrence_time`` is the smallest t >= 1
    with zero entropy, or None when the step cap was reached first.
    """

    initial: RingConfig
    entropy_series: np.ndarray
    imbalance_series: np.ndarray
    recurrence_time: int | None

    @property
    def hit_cap(self) -> bool:
        return self.recurrence_time is None


def step(config: RingConfig, flip: bool) -> RingConfig:
    """Advance the ring one timestep.

    Rotates every ball one site clockwise (site j to site j+1 mod N); the
    ball leaving site N-1 enters the pointer site 0 and changes color iff
    ``flip`` is true.
    """
    n = config.n
    carry = (config.bits >> (n - 1)) & 1
    bits = ((config.bits << 1) & ((1 << n) - 1)) | carry
    if flip:
        bits ^= 1
    return RingConfig(bits=bits, n=n)


def relative_entropy(current: RingConfig, initial: RingConfig) -> int:
    """Site-wise Hamming distance between two equal-length configurations.

    Zero exactly when ``current`` equals ``initial``; additive over
    independent rings placed side by side.
    """
    if current.n != initial.n:
        raise ValueError(
            f"configurations are incomparable: {current.n} sites vs {initial.n} sites"
        )
    return (current.bits ^ initial.bits).bit_count()


def counts(config: RingConfig) -> tuple[int, int]:
    """Return (black_count, white_count); the two always sum to n."""
    black = config.bits.bit_count()
    return black, config.n - black


def imbalance(config: RingConfig) -> int:
    """Black count minus white count. Always congruent to n mod 2."""
    return 2 * config.bits.bit_count() - config.n


def imbalance_decay(initial_imbalance: float, pointer_density: float, t: int) -> float:
    """Mean-field prediction for the color imbalance after t steps.

    The molecular-chaos approximation multiplies the imbalance by
    ``(1 - 2*mu)`` each step, where ``mu`` is the fraction of marked sites
    (here ``1/n`` for the single pointer), so the imbalance decays toward
    zero geometrically even though the exact dynamics are periodic.

    Parameters
    ----------
    initial_imbalance : float
        Imbalance at t=0.
    pointer_density : float
        Marked-site fraction mu, required to lie in [0, 1].
    t : int
        Number of steps, >= 0.
    """
    if not 0.0 <= pointer_density <= 1.0:
        raise ValueError(f"pointer density must be in [0, 1], got {pointer_density}")
    return initial_imbalance * (1.0 - 2.0 * pointer_density) ** t


def default_cap(policy: PointerPolicy | FlipDecider, n: int) -> int:
    """Default step cap: 2n for the classical policy, 4 * 2**n otherwise."""
    if policy is PointerPolicy.CLASSICAL:
        return 2 * n
    return 4 * (1 << n)


def evolve(
    initial: RingConfig,
    policy: PointerPolicy | FlipDecider = PointerPolicy.CLASSICAL,
    rng: np.random.Generator | None = None,
    cap: int | None = None,
    stop_at_recurrence: bool = True,
) -> Trajectory:
    """Evolve a ring and record entropy and imbalance at every step.

    Parameters
    ----------
    initial : RingConfig
        Starting configuration; entropy is measured relative to it.
    policy : PointerPolicy or callable
        CLASSICAL flips every step; QUANTUM samples a fresh pointer qubit
        per step. A callable ``rng -> bool`` substitutes its own decider.
    rng : numpy.random.Generator, optional
        Source of measurement randomness; required only when the policy is
        stochastic. A fresh unseeded generator is created if omitted.
    cap : int, optional
        Maximum number of steps; defaults to :func:`default_cap`.
    stop_at_recurrence : bool
        When true (default), stop at the first t >= 1 with zero entropy.
        When false, always run ``cap`` steps; the recurrence time is still
        the first zero-entropy step if one occurred.

    Returns
    -------
    Trajectory
        Series indexed 0..last step, plus the recurrence time (None when
        no recurrence happened within the cap).
    """
    if cap is None:
        cap = default_cap(policy, initial.n)
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")

    if policy is PointerPolicy.CLASSICAL:
        decide = None
    elif policy is PointerPolicy.QUANTUM:
        from .qubit import sample_flip

        decide = sample_flip
    elif callable(policy):
        decide = policy
    else:
        raise TypeError(f"policy must be a PointerPolicy or callable, got {policy!r}")
    if decide is not None and rng is None:
        rng = np.random.default_rng()

    n = initial.n
    mask = (1 << n) - 1
    top = n - 1
    b0 = bits = initial.bits

    entropy = [0]
    imb = [2 * bits.bit_count() - n]
    recurrence: int | None = None
    for t in range(1, cap + 1):
        carry = (bits >> top) & 1
        bits = ((bits << 1) & mask) | carry
        if decide is None or decide(rng):
            bits ^= 1
        e = (bits ^ b0).bit_count()
        entropy.append(e)
        imb.append(2 * bits.bit_count() - n)
        if e == 0 and recurrence is None:
            recurrence = t
            if stop_at_recurrence:
                break

    return Trajectory(
        initial=initial,
        entropy_series=np.asarray(entropy, dtype=np.int64),
        imbalance_series=np.asarray(imb, dtype=np.int64),
        recurrence_time=recurrence,
    )
