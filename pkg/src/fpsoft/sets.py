"""FP-soft sets, FP-soft points, and their Boolean-like algebra.

An FP-soft set pairs each parameter with a membership grade and a crisp
subset of the universe.  Crisp subsets are stored as bitmasks over the
ordered universe, grades as reduced Fractions, so dataclass equality is
the canonical structural equality and every value is hashable.

The side condition "crisp part is empty wherever the grade is 0" is not
enforced structurally: it is not preserved by complement, while the
involution complement(complement(F)) == F must hold exactly.  It is
exposed through is_normalized / normalize instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .model import (
    Context,
    ContextMismatchError,
    FuzzyParamSet,
    GradeLike,
    ONE,
    ZERO,
    grade,
    same_context,
)


@dataclass(frozen=True)
class FPSoftSet:
    context: Context
    membership: FuzzyParamSet
    approx: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.membership.params != self.context.parameters:
            raise ValueError("membership must be defined on exactly the context parameters")
        if len(self.approx) != len(self.context.parameters):
            raise ValueError("one crisp set per parameter required")
        full = self.context.full_mask
        for m in self.approx:
            if m < 0 or m & ~full:
                raise ValueError("crisp part not a subset of the universe")

    @classmethod
    def of(cls, context: Context,
           pairs: Mapping[str, tuple[GradeLike, Iterable[str]]]) -> "FPSoftSet":
        if set(pairs) != set(context.parameters):
            raise ValueError("pairs must cover exactly the context parameters")
        grades = {e: grade(g) for e, (g, _) in pairs.items()}
        approx = tuple(context.mask_of(pairs[e][1]) for e in context.parameters)
        return cls(context, FuzzyParamSet.of(context.parameters, grades), approx)

    def grade(self, e: str) -> Fraction:
        return self.membership(e)

    def crisp(self, e: str) -> frozenset[str]:
        return frozenset(self.context.symbols_of(self.approx[self.context.param_index(e)]))

    def items(self):
        """(parameter, grade, mask) triples in canonical order."""
        return zip(self.context.parameters, self.membership.grades, self.approx)

    def sort_key(self):
        return tuple(zip(self.membership.grades, self.approx))


@dataclass(frozen=True)
class FPSoftPoint:
    """A single-parameter FP-soft value (e, alpha, crisp) with alpha > 0."""

    context: Context
    param: str
    alpha: Fraction
    crisp: int

    def __post_init__(self) -> None:
        if self.param not in self.context.parameters:
            raise ValueError(f"{self.param!r} not a parameter")
        if not (0 < self.alpha <= 1):
            raise ValueError("point grade must lie in (0, 1]")
        if self.crisp < 0 or self.crisp & ~self.context.full_mask:
            raise ValueError("crisp part not a subset of the universe")

    @classmethod
    def of(cls, context: Context, param: str, alpha: GradeLike,
           symbols: Iterable[str]) -> "FPSoftPoint":
        return cls(context, param, grade(alpha), context.mask_of(symbols))

    def as_set(self) -> FPSoftSet:
        """Embed the point as an FP-soft set supported on its parameter."""
        grades = {e: self.alpha if e == self.param else ZERO
                  for e in self.context.parameters}
        approx = tuple(self.crisp if e == self.param else 0
                       for e in self.context.parameters)
        return FPSoftSet(self.context, FuzzyParamSet.of(self.context.parameters, grades), approx)


# ---------------------------------------------------------------- specials

def empty_set(context: Context) -> FPSoftSet:
    n = len(context.parameters)
    return FPSoftSet(context, FuzzyParamSet(context.parameters, (ZERO,) * n), (0,) * n)


def universal_set(context: Context) -> FPSoftSet:
    n = len(context.parameters)
    return FPSoftSet(context, FuzzyParamSet(context.parameters, (ONE,) * n),
                     (context.full_mask,) * n)


def a_universal_set(context: Context, support: Iterable[str]) -> FPSoftSet:
    return alpha_universal_set(context, ONE, support)


def alpha_universal_set(context: Context, alpha: GradeLike,
                        support: Iterable[str] | None = None) -> FPSoftSet:
    """Grade alpha and full crisp part on the support, (0, empty) elsewhere."""
    a = grade(alpha)
    if a == 0:
        raise ValueError("alpha-universal set requires alpha > 0")
    sup = set(context.parameters if support is None else support)
    unknown = sup - set(context.parameters)
    if unknown:
        raise ValueError(f"support symbols {sorted(unknown)} not parameters")
    grades = {e: a if e in sup else ZERO for e in context.parameters}
    approx = tuple(context.full_mask if e in sup else 0 for e in context.parameters)
    return FPSoftSet(context, FuzzyParamSet.of(context.parameters, grades), approx)


def make_special(context: Context, kind: str, *, alpha: GradeLike | None = None,
                 support: Iterable[str] | None = None) -> FPSoftSet:
    if kind == "empty":
        return empty_set(context)
    if kind == "universal":
        return universal_set(context)
    if kind == "a-universal":
        return a_universal_set(context, context.parameters if support is None else support)
    if kind == "alpha-universal":
        if alpha is None:
            raise ValueError("alpha-universal requires alpha")
        return alpha_universal_set(context, alpha, support)
    raise ValueError(f"unknown special kind {kind!r}")


# ---------------------------------------------------------------- algebra

def is_subset(fa: FPSoftSet, fb: FPSoftSet) -> bool:
    same_context(fa, fb)
    return all(ga <= gb and ma & ~mb == 0
               for (_, ga, ma), (_, gb, mb) in zip(fa.items(), fb.items()))


def equals(fa: FPSoftSet, fb: FPSoftSet) -> bool:
    same_context(fa, fb)
    return fa == fb


def _family(fs: Iterable[FPSoftSet]) -> list[FPSoftSet]:
    family = list(fs)
    if not family:
        raise ValueError("family must be nonempty")
    same_context(*family)
    return family


def union_family(fs: Iterable[FPSoftSet]) -> FPSoftSet:
    family = _family(fs)
    ctx = family[0].context
    n = len(ctx.parameters)
    grades = tuple(max(f.membership.grades[i] for f in family) for i in range(n))
    approx = []
    for i in range(n):
        m = 0
        for f in family:
            m |= f.approx[i]
        approx.append(m)
    return FPSoftSet(ctx, FuzzyParamSet(ctx.parameters, grades), tuple(approx))


def intersect_family(fs: Iterable[FPSoftSet]) -> FPSoftSet:
    family = _family(fs)
    ctx = family[0].context
    n = len(ctx.parameters)
    grades = tuple(min(f.membership.grades[i] for f in family) for i in range(n))
    approx = []
    for i in range(n):
        m = ctx.full_mask
        for f in family:
            m &= f.approx[i]
        approx.append(m)
    return FPSoftSet(ctx, FuzzyParamSet(ctx.parameters, grades), tuple(approx))


def complement(fa: FPSoftSet) -> FPSoftSet:
    ctx = fa.context
    grades = tuple(ONE - g for g in fa.membership.grades)
    approx = tuple(ctx.full_mask & ~m for m in fa.approx)
    return FPSoftSet(ctx, FuzzyParamSet(ctx.parameters, grades), approx)


def is_normalized(fa: FPSoftSet) -> bool:
    return all(g > 0 or m == 0 for _, g, m in fa.items())


def normalize(fa: FPSoftSet) -> FPSoftSet:
    approx = tuple(m if g > 0 else 0 for _, g, m in fa.items())
    return FPSoftSet(fa.context, fa.membership, approx)


def point_belongs(pt: FPSoftPoint, fa: FPSoftSet) -> bool:
    same_context(pt, fa)
    i = fa.context.param_index(pt.param)
    return pt.alpha <= fa.membership.grades[i] and pt.crisp & ~fa.approx[i] == 0


def decompose_points(fa: FPSoftSet) -> tuple[FPSoftPoint, ...]:
    """Canonical generating points (e, mu(e), f(e)) over the support.

    Requires a normalized, nonempty input; the union of the returned
    points (embedded as sets) reconstructs the input exactly.
    """
    if not is_normalized(fa):
        raise ValueError("decompose_points requires a normalized set")
    points = tuple(FPSoftPoint(fa.context, e, g, m)
                   for e, g, m in fa.items() if g > 0)
    if not points:
        raise ValueError("decompose_points requires a nonempty set")
    return points


def qcoincident(fa: FPSoftSet, fb: FPSoftSet) -> bool:
    same_context(fa, fb)
    return any(ga + gb > 1 or ma & mb
               for (_, ga, ma), (_, gb, mb) in zip(fa.items(), fb.items()))


def point_qcoincident(pt: FPSoftPoint, fa: FPSoftSet) -> bool:
    same_context(pt, fa)
    i = fa.context.param_index(pt.param)
    return pt.alpha + fa.membership.grades[i] > 1 or bool(pt.crisp & fa.approx[i])
