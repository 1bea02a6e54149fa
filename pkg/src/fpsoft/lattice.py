"""Deterministic enumeration of FP-soft sets, points and topologies on the
finite grade lattice L_q = {0, 1/q, ..., 1}.

The carrier for a context with |X| universe symbols and |E| parameters has
((q+1) * 2^|X|)^|E| sets; enumeration order is lexicographic over the
ordered parameters, grade-major then bitset within each parameter.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .model import Context, FuzzyParamSet, grade
from .sets import FPSoftPoint, FPSoftSet, empty_set, universal_set
from .topology import FPSoftTopology, check_axioms

DEFAULT_BOUND = 10 ** 6
DEFAULT_TOPOLOGY_CARRIER_BOUND = 24


class CarrierBoundError(ValueError):
    """The requested lattice carrier exceeds the configured size bound."""


def make_context(universe_size: int, parameter_size: int,
                 universe_prefix: str = "x", parameter_prefix: str = "e") -> Context:
    return Context(
        tuple(f"{universe_prefix}{i}" for i in range(1, universe_size + 1)),
        tuple(f"{parameter_prefix}{i}" for i in range(1, parameter_size + 1)),
    )


@dataclass(frozen=True)
class LatticeSpec:
    context: Context
    resolution: int
    bound: int = DEFAULT_BOUND

    def __post_init__(self) -> None:
        if self.resolution < 1:
            raise ValueError("resolution must be a positive integer")
        if self.carrier_size > self.bound:
            raise CarrierBoundError(
                f"carrier has {self.carrier_size} sets, above bound {self.bound}")

    @property
    def carrier_size(self) -> int:
        per_param = (self.resolution + 1) * (1 << len(self.context.universe))
        return per_param ** len(self.context.parameters)

    @property
    def grades(self) -> tuple:
        return tuple(grade((n, self.resolution)) for n in range(self.resolution + 1))

    def enumerate_sets(self) -> Iterator[FPSoftSet]:
        ctx = self.context
        values = [(g, m) for g in self.grades for m in range(ctx.full_mask + 1)]
        for combo in itertools.product(values, repeat=len(ctx.parameters)):
            grades = tuple(g for g, _ in combo)
            approx = tuple(m for _, m in combo)
            yield FPSoftSet(ctx, FuzzyParamSet(ctx.parameters, grades), approx)

    def enumerate_points(self) -> Iterator[FPSoftPoint]:
        """All FP-soft points with a lattice grade in (0, 1]."""
        ctx = self.context
        for e in ctx.parameters:
            for g in self.grades[1:]:
                for m in range(ctx.full_mask + 1):
                    yield FPSoftPoint(ctx, e, g, m)

    def enumerate_topologies(
            self, carrier_bound: int = DEFAULT_TOPOLOGY_CARRIER_BOUND,
    ) -> Iterator[FPSoftTopology]:
        """Every open family on the carrier that satisfies the axioms.

        Yields each valid topology exactly once, ordered by the subset
        enumeration of the carrier (smaller families first in bitmask order
        over the canonical set enumeration).
        """
        carrier = list(self.enumerate_sets())
        if len(carrier) > carrier_bound:
            raise CarrierBoundError(
                f"carrier has {len(carrier)} sets, above topology enumeration "
                f"bound {carrier_bound}")
        ctx = self.context
        bottom, top = empty_set(ctx), universal_set(ctx)
        others = [f for f in carrier if f not in (bottom, top)]
        for r in range(len(others) + 1):
            for extra in itertools.combinations(others, r):
                family = (bottom, top) + extra
                if check_axioms(ctx, family) is None:
                    yield FPSoftTopology(ctx, tuple(sorted(family, key=FPSoftSet.sort_key)))
