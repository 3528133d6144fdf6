"""Turn protocols and the D/T comparison statistic.

Two protocols are played between a classic proposer C and a quantum
proposer Q, both courting the same woman.  C moves first in both:

* game 1 — one attempt each per turn;
* game 2 — C gets N/2 attempts per turn, Q still one.

A proposal only succeeds if it hits the woman's index and she then accepts,
with per-proposal probabilities ``p_accept_classic`` / ``p_accept_quantum``.
Success flags are counted independently per turn (both players may succeed
in the same turn), and the headline statistic over T turns is
``d_over_t = (Q successes - C successes) / T``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from .errors import ConfigurationError
from .statevector import OracleSpec, closed_form_probability, run_grover
from .strategies import (
    ClassicStrategy,
    SweepState,
    classic_memoryless_propose,
    classic_sweep_propose,
    quantum_propose,
)


class GameVariant(enum.IntEnum):
    GAME1 = 1
    GAME2 = 2


@dataclass(frozen=True)
class WomanProfile:
    """The courted woman: her index and per-player acceptance odds."""

    target: int
    p_accept_classic: float
    p_accept_quantum: float

    def __post_init__(self) -> None:
        for name in ("p_accept_classic", "p_accept_quantum"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ConfigurationError(f"{name} must be in [0, 1], got {p}")


@dataclass(frozen=True)
class GameConfig:
    """One match configuration.

    ``classic_attempts_per_turn`` defaults to the protocol value (1 for
    game 1, N/2 for game 2) but may be overridden for cross-checks.
    """

    n_qubits: int
    variant: GameVariant
    trials: int = 1000
    classic_attempts_per_turn: int | None = None
    quantum_iterations: int = 1
    classic_strategy: ClassicStrategy = ClassicStrategy.MEMORYLESS
    seed: int = 0

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ConfigurationError(f"trials must be >= 1, got {self.trials}")
        if self.quantum_iterations < 0:
            raise ConfigurationError("quantum_iterations must be >= 0")
        if self.classic_attempts_per_turn is None:
            default = 1 if self.variant == GameVariant.GAME1 else self.N // 2
            object.__setattr__(self, "classic_attempts_per_turn", default)
        if self.classic_attempts_per_turn < 1:
            raise ConfigurationError(
                f"classic_attempts_per_turn must be >= 1, got "
                f"{self.classic_attempts_per_turn} (N={self.N})"
            )
        if (
            self.classic_strategy == ClassicStrategy.SWEEP
            and self.classic_attempts_per_turn > self.N
        ):
            raise ConfigurationError(
                "sweep strategy cannot make more attempts than there are indices"
            )

    @property
    def N(self) -> int:
        return 2**self.n_qubits


@dataclass(frozen=True)
class TurnOutcome:
    c_success: bool
    q_success: bool


@dataclass(frozen=True)
class GameStats:
    q_successes: int
    c_successes: int
    trials: int
    d_over_t: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "d_over_t", (self.q_successes - self.c_successes) / self.trials
        )


def _check_target(cfg: GameConfig, woman: WomanProfile) -> None:
    if not 0 <= woman.target < cfg.N:
        raise ConfigurationError(
            f"target {woman.target} out of range for N={cfg.N}"
        )


def play_turn(
    cfg: GameConfig, woman: WomanProfile, rng: np.random.Generator
) -> TurnOutcome:
    """One turn: C's attempts first, then Q's single shot.

    A rejection does not end C's turn; every proposal that hits the target
    triggers an independent acceptance draw.
    """
    _check_target(cfg, woman)
    c_success = False
    sweep = SweepState() if cfg.classic_strategy == ClassicStrategy.SWEEP else None
    for _ in range(cfg.classic_attempts_per_turn):
        if sweep is not None:
            idx = classic_sweep_propose(cfg.N, sweep, rng)
        else:
            idx = classic_memoryless_propose(cfg.N, rng)
        if idx == woman.target and rng.random() < woman.p_accept_classic:
            c_success = True

    oracle = OracleSpec(target=woman.target, n_qubits=cfg.n_qubits)
    q_idx = quantum_propose(cfg.n_qubits, oracle, cfg.quantum_iterations, rng)
    q_success = q_idx == woman.target and rng.random() < woman.p_accept_quantum
    return TurnOutcome(c_success=c_success, q_success=q_success)


def run_match(
    cfg: GameConfig, woman: WomanProfile, rng: np.random.Generator | None = None
) -> GameStats:
    """Play ``cfg.trials`` independent turns and tally both players.

    Turns are sampled in vectorized batches (distributionally identical to
    looping :func:`play_turn`); results are a pure function of
    (config, profile, rng stream).
    """
    _check_target(cfg, woman)
    if rng is None:
        rng = np.random.default_rng(cfg.seed)
    N, T = cfg.N, cfg.trials
    k = cfg.classic_attempts_per_turn

    if cfg.classic_strategy == ClassicStrategy.SWEEP:
        # Without replacement the target shows up at most once per turn,
        # with probability k/N, triggering a single acceptance draw.
        found = rng.random(T) < k / N
        c_success = found & (rng.random(T) < woman.p_accept_classic)
    else:
        proposals = rng.integers(0, N, size=(T, k))
        hits = proposals == woman.target
        accepted = hits & (rng.random((T, k)) < woman.p_accept_classic)
        c_success = accepted.any(axis=1)

    oracle = OracleSpec(target=woman.target, n_qubits=cfg.n_qubits)
    probs = run_grover(cfg.n_qubits, oracle, cfg.quantum_iterations).probabilities()
    q_proposals = rng.choice(N, size=T, p=probs / probs.sum())
    q_success = (q_proposals == woman.target) & (
        rng.random(T) < woman.p_accept_quantum
    )

    return GameStats(
        q_successes=int(q_success.sum()),
        c_successes=int(c_success.sum()),
        trials=T,
    )


def expected_dt(cfg: GameConfig, woman: WomanProfile) -> float:
    """Analytic expectation of d_over_t; the Monte Carlo engine's oracle.

    Per turn, Q succeeds with probability ``p_G * P_q`` where p_G is the
    closed-form find probability after the configured iterates.  C's find
    chance over k attempts is ``1 - (1 - P_c/N)**k`` (memoryless) or
    ``(k/N) * P_c`` (sweep).
    """
    _check_target(cfg, woman)
    p_g = closed_form_probability(cfg.N, cfg.quantum_iterations)
    q_term = p_g * woman.p_accept_quantum
    k = cfg.classic_attempts_per_turn
    if cfg.classic_strategy == ClassicStrategy.SWEEP:
        c_term = (k / cfg.N) * woman.p_accept_classic
    else:
        c_term = 1.0 - (1.0 - woman.p_accept_classic / cfg.N) ** k
    return q_term - c_term


def stats_csv_row(cfg: GameConfig, woman: WomanProfile, stats: GameStats) -> str:
    """Flat CSV row: variant,N,Pc,Pq,T,c_success,q_success,d_over_t,seed."""
    from .experiment import format_float

    return ",".join(
        [
            str(int(cfg.variant)),
            str(cfg.N),
            format_float(woman.p_accept_classic),
            format_float(woman.p_accept_quantum),
            str(stats.trials),
            str(stats.c_successes),
            str(stats.q_successes),
            format_float(stats.d_over_t),
            str(cfg.seed),
        ]
    )


def game1_config(cfg: GameConfig) -> GameConfig:
    """Copy of ``cfg`` restated as a game-1 protocol (one classic attempt)."""
    return replace(cfg, variant=GameVariant.GAME1, classic_attempts_per_turn=1)
