"""FP-soft mappings between FP-soft classes: images, preimages, classification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .model import Context, ContextMismatchError, fuzzy_image, fuzzy_preimage
from .sets import FPSoftSet, FuzzyParamSet


@dataclass(frozen=True)
class MappingKind:
    injective: bool
    surjective: bool
    constant: bool


@dataclass(frozen=True)
class FPSoftMapping:
    """A pair of total functions u: X -> Y, p: E -> K.

    u and p are stored as value tuples aligned with the ordered source
    universe / parameters, keeping the dataclass hashable.
    """

    source: Context
    target: Context
    u_values: tuple[str, ...]
    p_values: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.u_values) != len(self.source.universe):
            raise ValueError("u must be total on the source universe")
        if len(self.p_values) != len(self.source.parameters):
            raise ValueError("p must be total on the source parameters")
        bad = set(self.u_values) - set(self.target.universe)
        if bad:
            raise ValueError(f"u values {sorted(bad)} not in target universe")
        bad = set(self.p_values) - set(self.target.parameters)
        if bad:
            raise ValueError(f"p values {sorted(bad)} not in target parameters")

    @classmethod
    def of(cls, source: Context, target: Context,
           u: Mapping[str, str], p: Mapping[str, str]) -> "FPSoftMapping":
        if set(u) != set(source.universe):
            raise ValueError("u must be defined on exactly the source universe")
        if set(p) != set(source.parameters):
            raise ValueError("p must be defined on exactly the source parameters")
        return cls(source, target,
                   tuple(u[x] for x in source.universe),
                   tuple(p[e] for e in source.parameters))

    @property
    def u(self) -> dict[str, str]:
        return dict(zip(self.source.universe, self.u_values))

    @property
    def p(self) -> dict[str, str]:
        return dict(zip(self.source.parameters, self.p_values))

    def u_mask(self, source_mask: int) -> int:
        """Image of a crisp source subset under u, as a target bitmask."""
        out = 0
        for i, y in enumerate(self.u_values):
            if source_mask >> i & 1:
                out |= 1 << self.target.universe.index(y)
        return out

    def u_inverse_mask(self, target_mask: int) -> int:
        out = 0
        for i, y in enumerate(self.u_values):
            if target_mask >> self.target.universe.index(y) & 1:
                out |= 1 << i
        return out


def image(m: FPSoftMapping, fa: FPSoftSet) -> FPSoftSet:
    """Image of fa: grades by the Zadeh sup-extension of p, crisp parts by
    unions of u-images over each fiber (empty on empty fibers)."""
    if fa.context != m.source:
        raise ContextMismatchError("set not over the mapping source")
    membership = fuzzy_image(fa.membership, m.p, m.target.parameters)
    approx = []
    for k in m.target.parameters:
        mask = 0
        for i, e in enumerate(m.source.parameters):
            if m.p_values[i] == k:
                mask |= m.u_mask(fa.approx[i])
        approx.append(mask)
    return FPSoftSet(m.target, membership, tuple(approx))


def preimage(m: FPSoftMapping, gs: FPSoftSet) -> FPSoftSet:
    if gs.context != m.target:
        raise ContextMismatchError("set not over the mapping target")
    membership = fuzzy_preimage(gs.membership, m.p, m.source.parameters)
    approx = tuple(
        m.u_inverse_mask(gs.approx[m.target.param_index(m.p_values[i])])
        for i in range(len(m.source.parameters))
    )
    return FPSoftSet(m.source, membership, approx)


def classify(m: FPSoftMapping) -> MappingKind:
    u_inj = len(set(m.u_values)) == len(m.u_values)
    p_inj = len(set(m.p_values)) == len(m.p_values)
    u_sur = set(m.u_values) == set(m.target.universe)
    p_sur = set(m.p_values) == set(m.target.parameters)
    u_con = len(set(m.u_values)) == 1
    p_con = len(set(m.p_values)) == 1
    return MappingKind(u_inj and p_inj, u_sur and p_sur, u_con and p_con)
