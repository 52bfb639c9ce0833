"""Assembly of per-configuration contributions and the final invariants.

A configuration's contribution is the product of the base factor, every
chain step's factors, and a smoothing factor per node, with the whole
infinity side evaluated in the 0-side frame and then flipped a -> -a.
Family steps are one-dimensional loci: their psi-linear factor is
integrated on the spot (coefficient of psi times the psi integral), so the
running product stays a single monomial and any number of family steps per
chain is handled.

Every configuration multiplies out to a degree-zero monomial -- a pure
number -- and the invariant is their exact sum.  Because the factors are
side-local, the double sum over (chain over 0) x (chain over infinity)
equals base * S * flip(S) with S the one-sided sum; that factored form is
the default evaluation path, and the configuration-by-configuration path
is kept (with optional parallelism) as a cross-check.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from .contributions import (
    base_contribution,
    end_contribution,
    node_smoothing,
    psi_integral,
    ruled_contribution,
)
from .exact import MONO_ONE, MONO_ZERO, AlphaMonomial, PsiLinear, alpha_flip
from .fixedpoints import (
    Chain,
    Configuration,
    Family,
    NodeEnd,
    base_tangent_weight,
    enumerate_chains,
    enumerate_configurations,
    source_tangent_weight,
)

__all__ = [
    "ConfigurationReport",
    "PsiAssemblyError",
    "DegreeZeroViolation",
    "chain_factors",
    "configuration_contribution",
    "side_sum",
    "multiple_cover_invariant",
]


class PsiAssemblyError(ValueError):
    """A psi class appeared where none can live (non-family step, or a
    family factor with both constant and psi parts)."""


class DegreeZeroViolation(ArithmeticError):
    """A configuration's total came out with a nonzero power of the
    equivariant parameter."""


@dataclass(frozen=True)
class ConfigurationReport:
    """A configuration with its labeled factor trace.

    The traced factors multiply exactly to ``total`` (family steps appear
    as their psi coefficient times the psi integral), and ``total`` always
    has power zero.
    """

    configuration: Configuration
    per_factor_trace: Tuple[Tuple[str, PsiLinear], ...]
    total: AlphaMonomial


def chain_factors(chain: Chain) -> List[Tuple[str, AlphaMonomial]]:
    """Ordered multiplicative factors of one chain, in the 0-side frame.

    Labels: ``smooth[a->b]`` for node smoothings, ``step<i>.main`` for
    rigid map factors, ``step<i>.main_psi_coeff`` / ``step<i>.psi_integral``
    for the integrated family pair, and ``step<i>.divisor_tangent`` /
    ``step<i>.automorphisms`` for a ruled bubble's auxiliary column.
    """
    factors: List[Tuple[str, AlphaMonomial]] = []
    prev_out = base_tangent_weight(chain.degree)
    prev_name = "base"
    for i, step in enumerate(chain.steps, 1):
        w_in = source_tangent_weight(step, NodeEnd.NODE_IN)
        factors.append((f"smooth[{prev_name}->{i}]", node_smoothing(prev_out, w_in)))
        bundle = end_contribution(step) if step.is_end_bubble else ruled_contribution(step)
        if bundle.main.psi:
            if not isinstance(step.shape, Family):
                raise PsiAssemblyError(f"psi factor on non-family step {step.describe()}")
            if bundle.main.const:
                raise PsiAssemblyError(
                    f"family factor of {step.describe()} has a constant part"
                )
            factors.append((f"step{i}.main_psi_coeff", bundle.main.psi))
            factors.append(
                (
                    f"step{i}.psi_integral",
                    AlphaMonomial(psi_integral(step.degree, step.shape.h)),
                )
            )
        else:
            factors.append((f"step{i}.main", bundle.main.const))
        if bundle.auxiliary != MONO_ONE:
            factors.append((f"step{i}.divisor_tangent", bundle.auxiliary))
        if bundle.automorphism_scale != 1:
            factors.append(
                (f"step{i}.automorphisms", AlphaMonomial(bundle.automorphism_scale))
            )
        if not step.is_end_bubble:
            prev_out = source_tangent_weight(step, NodeEnd.NODE_OUT)
            prev_name = str(i)
    return factors


def _product(factors: Iterable[AlphaMonomial]) -> AlphaMonomial:
    out = MONO_ONE
    for f in factors:
        out = out * f
    return out


@lru_cache(maxsize=None)
def _chains(d: int) -> tuple:
    return tuple(enumerate_chains(d))


@lru_cache(maxsize=None)
def _chain_products(d: int) -> tuple:
    return tuple(_product(m for _, m in chain_factors(c)) for c in _chains(d))


def configuration_contribution(cfg: Configuration) -> ConfigurationReport:
    """Labeled factor trace and degree-zero total of one configuration."""
    trace: List[Tuple[str, PsiLinear]] = [
        ("base", PsiLinear(base_contribution(cfg.cover_degree)))
    ]
    total = base_contribution(cfg.cover_degree)
    for label, mono in chain_factors(cfg.chain_zero):
        trace.append((f"zero.{label}", PsiLinear(mono)))
        total = total * mono
    for label, mono in chain_factors(cfg.chain_infinity):
        flipped = alpha_flip(mono)
        trace.append((f"infinity.{label}", PsiLinear(flipped)))
        total = total * flipped
    if total.power != 0:
        lines = "\n".join(f"  {label} = {value}" for label, value in trace)
        raise DegreeZeroViolation(
            f"configuration {cfg.describe()} has total {total}; trace:\n{lines}"
        )
    return ConfigurationReport(cfg, tuple(trace), total)


def side_sum(d: int, side: str) -> PsiLinear:
    """Sum of per-chain factor products over one side (base factor
    excluded); the infinity side is the a -> -a flip of the zero side."""
    if side not in ("zero", "infinity"):
        raise ValueError(f"side must be 'zero' or 'infinity', got {side!r}")
    total = MONO_ZERO
    for term in _chain_products(d):
        total = total + term
    if side == "infinity":
        total = alpha_flip(total)
    return PsiLinear(total)


def multiple_cover_invariant(
    d: int,
    *,
    method: str = "factored",
    workers: Optional[int] = None,
    order: Optional[Sequence[int]] = None,
) -> Fraction:
    """The exact degree-d invariant.

    ``method="factored"`` evaluates base * S * flip(S) from the one-sided
    chain sums; ``method="pairwise"`` sums configuration_contribution over
    the full configuration list (optionally permuted by ``order`` or
    evaluated with ``workers`` threads) -- identical by exactness, kept as
    the determinism cross-check.
    """
    if method == "factored":
        s0 = side_sum(d, "zero").const
        total = base_contribution(d) * s0 * alpha_flip(s0)
        if total.power != 0:
            raise DegreeZeroViolation(f"degree-{d} invariant has power {total.power}")
        return total.coeff
    if method != "pairwise":
        raise ValueError(f"unknown method {method!r}")
    configs = enumerate_configurations(d)
    if order is not None:
        if sorted(order) != list(range(len(configs))):
            raise ValueError("order must be a permutation of the configuration list")
        configs = [configs[i] for i in order]
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(configuration_contribution, configs))
    else:
        reports = [configuration_contribution(c) for c in configs]
    total = Fraction(0)
    for report in reports:
        total += report.total.coeff
    return total
