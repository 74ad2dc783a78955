"""Closed-form payoff model, its gradient, and the geometric strategy.

The closed-form expression for a deviator's expected winnings counts two
families of winning events when the deviator holds choice i: all opponents
above i, or all opponents on one common integer below i. With two opponents
(n = 3) these are the only ways to win, so the expression is exact there.
From n = 4 on it omits mixed opponent configurations (for example two
opponents on '1' and one above '2' while the deviator holds '2'), and the
exact oracle in :mod:`lupi.game` quantifies the gap. The expression is kept
verbatim here, gap included; nothing is corrected toward the exact game.
"""

from __future__ import annotations

from typing import Sequence

from .game import GameSpec, MixedStrategy, StrategyLike

MODEL_PAPER = "paper"
MODEL_EXACT = "exact"
MODELS = (MODEL_PAPER, MODEL_EXACT)


def _ipow(base: float, exp: int) -> float:
    out = 1.0
    for _ in range(exp):
        out *= base
    return out


def _entries(strategy: StrategyLike, n: int, name: str):
    entries = list(strategy.probs) if isinstance(strategy, MixedStrategy) else [float(v) for v in strategy]
    if len(entries) != n:
        raise ValueError(f"{name} has {len(entries)} entries, expected {n}")
    return entries


def closed_form_payoff(spec: GameSpec, mine: StrategyLike, opponents_common: StrategyLike) -> float:
    """Deviator's expected winnings under the closed-form model.

    ``mine`` weights the deviator's choices, ``opponents_common`` is the one
    strategy shared by all n - 1 opponents. The final entry of each vector
    is recovered from normalization, exactly as the expression is written,
    so raw sequences whose first n - 1 entries are meaningful are accepted
    (finite-difference checks rely on this).
    """
    n = spec.n
    pi = _entries(mine, n, "mine")
    p = _entries(opponents_common, n, "opponents_common")
    shared = 0.0
    for j in range(n - 1):
        shared += _ipow(p[j], n - 1)
    head = 0.0
    for k in range(n - 1):
        head += pi[k]
    total = pi[0] * _ipow(1.0 - p[0], n - 1)
    total += (1.0 - head) * shared
    prefix = p[0]
    below = 0.0
    for i in range(2, n):
        prefix += p[i - 1]
        below += _ipow(p[i - 2], n - 1)
        total += pi[i - 1] * (_ipow(1.0 - prefix, n - 1) + below)
    return total


def closed_form_gradient(spec: GameSpec, opponents_common: StrategyLike) -> tuple:
    """Derivatives of the closed-form payoff in the deviator's first n - 1 weights.

    The payoff is linear in those weights once the last one is eliminated by
    normalization, so the derivatives depend only on the opponents' strategy.
    A symmetric equilibrium candidate is a common strategy at which all n - 1
    derivatives vanish.
    """
    n = spec.n
    p = _entries(opponents_common, n, "opponents_common")
    shared = 0.0
    for j in range(n - 1):
        shared += _ipow(p[j], n - 1)
    grad = [_ipow(1.0 - p[0], n - 1) - shared]
    prefix = p[0]
    below = 0.0
    for i in range(2, n):
        prefix += p[i - 1]
        below += _ipow(p[i - 2], n - 1)
        grad.append(_ipow(1.0 - prefix, n - 1) + below - shared)
    return tuple(grad)


def geometric_strategy(spec: GameSpec) -> MixedStrategy:
    """Halving weights: 1/2**i on choice i, with the last weight repeated.

    Sums to one by construction and approximates the symmetric equilibria
    while favouring smaller integers.
    """
    probs = [_ipow(0.5, i) for i in range(1, spec.n)]
    probs.append(probs[-1])
    return MixedStrategy(tuple(probs))


def geometric_payoff(spec: GameSpec) -> float:
    """Per-player payoff when everyone plays the geometric strategy (n >= 3)."""
    n = spec.n
    if n < 3:
        raise ValueError(f"geometric payoff is defined for n >= 3, got {n}")
    total = 0.0
    for k in range(1, n):
        inner = 0.0
        for j in range(1, k + 1):
            inner += _ipow(_ipow(0.5, j), n - 1)
        total += _ipow(0.5, k) * inner
    tail = 0.0
    for j in range(1, n):
        tail += _ipow(_ipow(0.5, j), n - 1)
    total += _ipow(0.5, n - 1) * tail
    return total


def two_choice_baseline(spec: GameSpec) -> float:
    """Per-player payoff when every player mixes evenly over '1' and '2'.

    Equals 1/2**(n-1): a player wins exactly when all others land on the
    other of the two integers. The reference point the geometric strategy
    is compared against.
    """
    return _ipow(0.5, spec.n - 1)
