"""Contexts, exact membership grades and fuzzy parameter sets.

Grades are plain :class:`fractions.Fraction` values clamped to [0, 1];
Fraction keeps them in reduced canonical form, so equality of any two
grades produced by the operations below is structural and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

GradeLike = Fraction | int | str | tuple


class ContextMismatchError(ValueError):
    """Raised when operands live over different contexts."""


def grade(value: GradeLike) -> Fraction:
    """Coerce *value* to a Fraction and check it lies in [0, 1]."""
    if isinstance(value, tuple):
        g = Fraction(*value)
    else:
        g = Fraction(value)
    if g < 0 or g > 1:
        raise ValueError(f"grade {g} outside [0, 1]")
    return g


ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Context:
    """The pair (universe X, parameter set E) every object lives over.

    Both components are ordered tuples of distinct, nonempty symbol lists;
    the ordering fixes the canonical form of every derived object.
    """

    universe: tuple[str, ...]
    parameters: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.universe:
            raise ValueError("universe must be nonempty")
        if not self.parameters:
            raise ValueError("parameter set must be nonempty")
        if len(set(self.universe)) != len(self.universe):
            raise ValueError("duplicate symbol in universe")
        if len(set(self.parameters)) != len(self.parameters):
            raise ValueError("duplicate symbol in parameters")

    @property
    def full_mask(self) -> int:
        return (1 << len(self.universe)) - 1

    def mask_of(self, symbols: Iterable[str]) -> int:
        """Bitmask over the ordered universe for a crisp subset."""
        mask = 0
        for s in symbols:
            try:
                mask |= 1 << self.universe.index(s)
            except ValueError:
                raise ValueError(f"{s!r} not in universe") from None
        return mask

    def symbols_of(self, mask: int) -> tuple[str, ...]:
        return tuple(x for i, x in enumerate(self.universe) if mask >> i & 1)

    def param_index(self, e: str) -> int:
        try:
            return self.parameters.index(e)
        except ValueError:
            raise ValueError(f"{e!r} not a parameter") from None


def same_context(*objs) -> Context:
    ctx = objs[0].context
    for o in objs[1:]:
        if o.context != ctx:
            raise ContextMismatchError(
                f"context mismatch: {o.context} vs {ctx}"
            )
    return ctx


@dataclass(frozen=True)
class FuzzyParamSet:
    """A total map from an ordered parameter tuple to grades (mu_A)."""

    params: tuple[str, ...]
    grades: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.params) != len(self.grades):
            raise ValueError("one grade per parameter required")

    @classmethod
    def of(cls, params: Iterable[str], mapping: Mapping[str, GradeLike]) -> "FuzzyParamSet":
        params = tuple(params)
        missing = set(params) - set(mapping)
        extra = set(mapping) - set(params)
        if missing or extra:
            raise ValueError(f"grades must cover exactly the parameters "
                             f"(missing={sorted(missing)}, extra={sorted(extra)})")
        return cls(params, tuple(grade(mapping[e]) for e in params))

    @classmethod
    def constant(cls, params: Iterable[str], value: GradeLike) -> "FuzzyParamSet":
        params = tuple(params)
        g = grade(value)
        return cls(params, (g,) * len(params))

    def __call__(self, e: str) -> Fraction:
        return self.grades[self.params.index(e)]

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(e for e, g in zip(self.params, self.grades) if g > 0)


def _check_family(sets: Iterable[FuzzyParamSet]) -> list[FuzzyParamSet]:
    family = list(sets)
    if not family:
        raise ValueError("family must be nonempty")
    params = family[0].params
    for a in family[1:]:
        if a.params != params:
            raise ContextMismatchError("fuzzy sets over different parameter sets")
    return family


def fuzzy_complement(a: FuzzyParamSet) -> FuzzyParamSet:
    return FuzzyParamSet(a.params, tuple(ONE - g for g in a.grades))


def fuzzy_sup_family(sets: Iterable[FuzzyParamSet]) -> FuzzyParamSet:
    family = _check_family(sets)
    params = family[0].params
    return FuzzyParamSet(
        params, tuple(max(a.grades[i] for a in family) for i in range(len(params)))
    )


def fuzzy_inf_family(sets: Iterable[FuzzyParamSet]) -> FuzzyParamSet:
    family = _check_family(sets)
    params = family[0].params
    return FuzzyParamSet(
        params, tuple(min(a.grades[i] for a in family) for i in range(len(params)))
    )


def fuzzy_image(a: FuzzyParamSet, p: Mapping[str, str],
                target_params: Iterable[str]) -> FuzzyParamSet:
    """Zadeh sup-extension of p applied to a: result(k) = max over the fiber.

    Empty fibers get grade 0.
    """
    target_params = tuple(target_params)
    if set(p) != set(a.params):
        raise ValueError("p must be total on the source parameters")
    out = []
    for k in target_params:
        fiber = [a.grades[i] for i, e in enumerate(a.params) if p[e] == k]
        out.append(max(fiber) if fiber else ZERO)
    return FuzzyParamSet(target_params, tuple(out))


def fuzzy_preimage(s: FuzzyParamSet, p: Mapping[str, str],
                   source_params: Iterable[str]) -> FuzzyParamSet:
    """result(e) = s(p(e))."""
    source_params = tuple(source_params)
    if set(p) != set(source_params):
        raise ValueError("p must be total on the source parameters")
    return FuzzyParamSet(source_params, tuple(s(p[e]) for e in source_params))
