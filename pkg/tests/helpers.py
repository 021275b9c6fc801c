"""Shared test fixtures and independent oracles."""

from __future__ import annotations

from fractions import Fraction

from waldschmidt.config import SurfaceConfig, effective_generators
from waldschmidt.cone import monoid_membership
from waldschmidt.lattice import DivisorClass, parse_classes


def brute_force_alpha_hat(
    cfg: SurfaceConfig,
    m: tuple[int, ...],
    d_max: int = 20,
    m_max: int = 12,
) -> Fraction | None:
    """min d/m over the window with d*L - m*E_Z in the integer monoid.

    Exhaustive integer search, independent of the LP optimizer: the only
    shared code is the bounded monoid membership test.
    """
    gens = effective_generators(cfg)
    best: Fraction | None = None
    for mm in range(1, m_max + 1):
        for d in range(1, d_max + 1):
            q = Fraction(d, mm)
            if best is not None and q >= best:
                continue
            target = DivisorClass(tuple([d] + [-mm * x for x in m]))
            if monoid_membership(target, gens) is not None:
                best = q
    return best


def generic_config(r: int) -> SurfaceConfig:
    """NEG(X) for r general points: all exceptional classes of the rank."""
    from waldschmidt.classes import enumerate_exceptional

    return SurfaceConfig(r, tuple(enumerate_exceptional(r)))


def three_generic_points() -> SurfaceConfig:
    return SurfaceConfig(3, parse_classes(
        ["E_1", "E_2", "E_3", "L_12", "L_13", "L_23"], 3))
