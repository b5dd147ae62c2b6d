"""Authenticity loss as KL divergence, plus a retrieval-response curve.

The authenticity loss of a model against a factual reference is the KL
divergence D_KL(q || p) between the reference distribution q and the model's
generation distribution p, taken as a max over a finite set of contexts (the
supremum over all inputs is not computable, so callers supply the contexts).

The link from retrieval count to authenticity loss is an explicit
exponential-decay model, eps_free * gamma^R.  It is artifact plumbing: the
underlying premise only says that meeting a tolerance requires at least k
calls, so some concrete response shape is needed to sweep over R.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable


class DistributionError(ValueError):
    """Base class for invalid KL-divergence inputs."""


class AlphabetMismatchError(DistributionError):
    """The two distributions are over alphabets of different sizes."""


class UnsupportedMassError(DistributionError):
    """q puts mass where p has none, so the divergence is infinite."""


_SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class DiscreteDistribution:
    """Probabilities over a finite outcome alphabet; must sum to 1."""

    probabilities: tuple[float, ...]

    def __post_init__(self) -> None:
        probs = tuple(self.probabilities)
        object.__setattr__(self, "probabilities", probs)
        if any(p < 0 for p in probs):
            raise DistributionError("probabilities must all be >= 0")
        total = sum(probs)
        if abs(total - 1.0) > _SUM_TOLERANCE:
            raise DistributionError(
                f"probabilities must sum to 1 (got {total!r})"
            )

    def __len__(self) -> int:
        return len(self.probabilities)


@dataclass(frozen=True)
class AuthCurve:
    """Exponential decay of authenticity loss with retrieval count.

    eps_free is the loss with zero retrievals; each additional call scales
    the loss by gamma.
    """

    eps_free: float = 0.8
    gamma: float = 0.5

    def __post_init__(self) -> None:
        if self.eps_free < 0:
            raise ValueError("eps_free must be >= 0")
        if not 0 < self.gamma < 1:
            raise ValueError("gamma must be in (0, 1)")


DEFAULT_AUTH_CURVE = AuthCurve()


def kl_divergence(q: DiscreteDistribution, p: DiscreteDistribution) -> float:
    """D_KL(q || p) in nats, with the convention 0 * ln(0/p) = 0.

    Raises AlphabetMismatchError on unequal lengths and UnsupportedMassError
    when q assigns mass to an outcome p rules out.
    """
    if len(q) != len(p):
        raise AlphabetMismatchError(
            f"alphabet sizes differ: {len(q)} vs {len(p)}"
        )
    total = 0.0
    for i, (qi, pi) in enumerate(zip(q.probabilities, p.probabilities)):
        if qi == 0.0:
            continue
        if pi == 0.0:
            raise UnsupportedMassError(
                f"q has mass {qi!r} at outcome {i} where p has none"
            )
        total += qi * math.log(qi / pi)
    # Gibbs' inequality guarantees KL >= 0; near-identical distributions can
    # round to a tiny negative sum, which we snap back to zero.
    if -1e-12 < total < 0.0:
        return 0.0
    return total


def auth_loss(
    contexts: Iterable[tuple[DiscreteDistribution, DiscreteDistribution]],
) -> float:
    """Max KL divergence over the provided (q, p) context pairs."""
    divergences = [kl_divergence(q, p) for q, p in contexts]
    if not divergences:
        raise ValueError("auth_loss requires at least one context")
    return max(divergences)


def auth_response_curve(retrievals: int, curve: AuthCurve) -> float:
    """Authenticity loss eps_free * gamma^R after R retrieval calls."""
    if retrievals < 0:
        raise ValueError("retrievals must be >= 0")
    return curve.eps_free * curve.gamma**retrievals


def min_retrievals_for(eps_h: float, curve: AuthCurve) -> int:
    """Smallest R >= 0 with eps_free * gamma^R <= eps_h.

    Starts from the closed form ceil(ln(eps_h/eps_free) / ln(gamma)) and
    nudges by one where float rounding disagrees with the curve itself.
    """
    if eps_h <= 0:
        raise ValueError("eps_h must be > 0")
    if curve.eps_free <= eps_h:
        return 0
    r = max(0, math.ceil(math.log(eps_h / curve.eps_free) / math.log(curve.gamma)))
    while r > 0 and auth_response_curve(r - 1, curve) <= eps_h:
        r -= 1
    while auth_response_curve(r, curve) > eps_h:
        r += 1
    return r
