"""Finitely-presented FP-soft topological spaces.

Axiom validation, closure/interior, Q-neighborhoods, bases, operator-induced
topologies, enrichment and continuity.  A topology stores its open family
deduplicated in canonical order; the closed family is derived on demand.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .model import Context, ContextMismatchError, grade, ONE
from .sets import (
    FPSoftPoint,
    FPSoftSet,
    alpha_universal_set,
    complement,
    empty_set,
    intersect_family,
    is_subset,
    point_qcoincident,
    qcoincident,
    union_family,
    universal_set,
)
from . import mapping as fpmap

DEFAULT_CARRIER_BOUND = 10 ** 6


@dataclass(frozen=True)
class AxiomViolation:
    """Names the violated axiom with a concrete witness.

    For T2/T3 the witness is the offending pair, the set their
    intersection/union produced, and the first parameter at which that
    set differs from the closest member of the candidate family.
    """

    axiom: str
    members: tuple[FPSoftSet, ...]
    result: FPSoftSet | None
    param: str | None
    message: str


class TopologyAxiomError(ValueError):
    def __init__(self, violation: AxiomViolation):
        super().__init__(violation.message)
        self.violation = violation


@dataclass(frozen=True)
class FPSoftTopology:
    context: Context
    opens: tuple[FPSoftSet, ...]

    def __contains__(self, fa: FPSoftSet) -> bool:
        return fa in self.opens


def _canonical_family(sets: Iterable[FPSoftSet]) -> tuple[FPSoftSet, ...]:
    out = []
    seen = set()
    for f in sets:
        if f not in seen:
            seen.add(f)
            out.append(f)
    return tuple(sorted(out, key=FPSoftSet.sort_key))


def _closest_diff_param(result: FPSoftSet, family: Sequence[FPSoftSet]) -> str:
    """First differing parameter of the family member closest to *result*."""
    best = None
    for member in family:
        diffs = [e for (e, g1, m1), (_, g2, m2)
                 in zip(result.items(), member.items())
                 if (g1, m1) != (g2, m2)]
        if diffs and (best is None or len(diffs) < len(best)):
            best = diffs
    assert best is not None
    return best[0]


def check_axioms(context: Context,
                 candidates: Iterable[FPSoftSet]) -> AxiomViolation | None:
    """Return the first axiom violation of the candidate open family, if any.

    Axioms are probed in the order T1, T3 (pairwise unions), T2 (pairwise
    intersections); the reported pair is the first in canonical order.
    """
    family = list(candidates)
    for f in family:
        if f.context != context:
            raise ContextMismatchError("candidate open over a different context")
    family = list(_canonical_family(family))
    members = set(family)

    for special, name in ((empty_set(context), "empty"),
                          (universal_set(context), "universal")):
        if special not in members:
            return AxiomViolation(
                "T1", (), special, None,
                f"T1 violated: the {name} FP-soft set is not in the family")

    for axiom, op, word in (("T3", union_family, "union"),
                            ("T2", intersect_family, "intersection")):
        for fa, fb in itertools.combinations(family, 2):
            result = op((fa, fb))
            if result not in members:
                param = _closest_diff_param(result, family)
                return AxiomViolation(
                    axiom, (fa, fb), result, param,
                    f"{axiom} violated: {word} of a pair of members is not in "
                    f"the family (differs at {param})")
    return None


def validate_topology(context: Context,
                      candidates: Iterable[FPSoftSet]) -> FPSoftTopology:
    candidates = list(candidates)
    violation = check_axioms(context, candidates)
    if violation is not None:
        raise TopologyAxiomError(violation)
    return FPSoftTopology(context, _canonical_family(candidates))


def indiscrete_topology(context: Context) -> FPSoftTopology:
    return validate_topology(context, (empty_set(context), universal_set(context)))


def closed_family(t: FPSoftTopology) -> tuple[FPSoftSet, ...]:
    return _canonical_family(complement(f) for f in t.opens)


def closure(t: FPSoftTopology, fa: FPSoftSet) -> FPSoftSet:
    if fa.context != t.context:
        raise ContextMismatchError("set not over the topology context")
    supersets = [c for c in closed_family(t) if is_subset(fa, c)]
    return intersect_family(supersets)


def interior(t: FPSoftTopology, fa: FPSoftSet) -> FPSoftSet:
    if fa.context != t.context:
        raise ContextMismatchError("set not over the topology context")
    subsets = [o for o in t.opens if is_subset(o, fa)]
    return union_family(subsets)


def is_qnbd(t: FPSoftTopology, fa: FPSoftSet,
            target: FPSoftSet | FPSoftPoint) -> bool:
    """True iff some open set quasi-coincident with *target* sits inside fa."""
    if fa.context != t.context or target.context != t.context:
        raise ContextMismatchError("arguments not over the topology context")
    if isinstance(target, FPSoftPoint):
        coincides = lambda o: point_qcoincident(target, o)
    else:
        coincides = lambda o: qcoincident(target, o)
    return any(coincides(o) and is_subset(o, fa) for o in t.opens)


def closure_contains_point(t: FPSoftTopology, fa: FPSoftSet,
                           pt: FPSoftPoint) -> bool:
    from .sets import point_belongs
    return point_belongs(pt, closure(t, fa))


def closure_contains_point_via_qnbds(t: FPSoftTopology, fa: FPSoftSet,
                                     pt: FPSoftPoint) -> bool:
    """Independent characterization: every FP-Q-nbd of pt is quasi-coincident
    with fa.  Equivalent to checking the open Q-nbds only."""
    if fa.context != t.context or pt.context != t.context:
        raise ContextMismatchError("arguments not over the topology context")
    return all(qcoincident(o, fa)
               for o in t.opens if point_qcoincident(pt, o))


def is_base(t: FPSoftTopology, base: Iterable[FPSoftSet]) -> bool:
    base = list(base)
    for b in base:
        if b not in t.opens:
            raise ValueError("base member is not open")
    for fa in t.opens:
        below = [b for b in base if is_subset(b, fa)]
        # union of the empty subfamily is the empty set
        merged = union_family(below) if below else empty_set(t.context)
        if merged != fa:
            return False
    return True


def enriched_for(t: FPSoftTopology, q: int) -> bool:
    """Enrichment restricted to full-support constant-grade lattice sets:
    the alpha-universal set and its complement are open for every lattice
    grade alpha in (0, 1]."""
    if q < 1:
        raise ValueError("resolution must be positive")
    for num in range(1, q + 1):
        fa = alpha_universal_set(t.context, grade((num, q)))
        if fa not in t.opens or complement(fa) not in t.opens:
            return False
    return True


def is_continuous(m: fpmap.FPSoftMapping, t1: FPSoftTopology,
                  t2: FPSoftTopology) -> bool:
    if t1.context != m.source or t2.context != m.target:
        raise ContextMismatchError("topologies do not match the mapping contexts")
    return all(fpmap.preimage(m, gs) in t1.opens for gs in t2.opens)


def discontinuity_witness(m: fpmap.FPSoftMapping, t1: FPSoftTopology,
                          t2: FPSoftTopology) -> FPSoftSet | None:
    """The first open target set whose preimage is not open, if any."""
    if t1.context != m.source or t2.context != m.target:
        raise ContextMismatchError("topologies do not match the mapping contexts")
    for gs in t2.opens:
        if fpmap.preimage(m, gs) not in t1.opens:
            return gs
    return None


# ------------------------------------------------- operator-induced spaces

class OperatorAxiomError(ValueError):
    def __init__(self, axiom: str, witnesses: tuple[FPSoftSet, ...], message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witnesses = witnesses


@dataclass(frozen=True)
class OperatorTable:
    """A total operator on the finite lattice carrier FPS_{L_q}(X, E)."""

    context: Context
    resolution: int
    table: Mapping[FPSoftSet, FPSoftSet] = field(hash=False)

    def __post_init__(self) -> None:
        from .lattice import LatticeSpec
        spec = LatticeSpec(self.context, self.resolution)
        carrier = set(spec.enumerate_sets())
        if set(self.table) != carrier:
            raise ValueError("table must be total on the lattice carrier")
        if not set(self.table.values()) <= carrier:
            raise ValueError("table outputs must stay within the lattice")

    @classmethod
    def from_function(cls, context: Context, resolution: int,
                      fn: Callable[[FPSoftSet], FPSoftSet],
                      bound: int = DEFAULT_CARRIER_BOUND) -> "OperatorTable":
        from .lattice import LatticeSpec
        spec = LatticeSpec(context, resolution, bound=bound)
        return cls(context, resolution, {f: fn(f) for f in spec.enumerate_sets()})

    def __call__(self, fa: FPSoftSet) -> FPSoftSet:
        return self.table[fa]


def closure_operator_of(t: FPSoftTopology, q: int) -> OperatorTable:
    return OperatorTable.from_function(t.context, q, lambda f: closure(t, f))


def interior_operator_of(t: FPSoftTopology, q: int) -> OperatorTable:
    return OperatorTable.from_function(t.context, q, lambda f: interior(t, f))


def _check_operator(op: OperatorTable, kind: str) -> None:
    ctx = op.context
    carrier = sorted(op.table, key=FPSoftSet.sort_key)
    if kind == "closure":
        fixed, name = empty_set(ctx), "c1"
        contains = lambda f: is_subset(f, op(f))
        combine = union_family
    else:
        fixed, name = universal_set(ctx), "i1"
        contains = lambda f: is_subset(op(f), f)
        combine = intersect_family
    prefix = name[0]
    if op(fixed) != fixed:
        raise OperatorAxiomError(name, (fixed,), f"({name}) violated")
    for f in carrier:
        if not contains(f):
            raise OperatorAxiomError(f"{prefix}2", (f,), f"({prefix}2) violated")
    for f in carrier:
        if op(op(f)) != op(f):
            raise OperatorAxiomError(f"{prefix}4", (f,), f"({prefix}4) violated")
    for fa, fb in itertools.combinations_with_replacement(carrier, 2):
        if op(combine((fa, fb))) != combine((op(fa), op(fb))):
            raise OperatorAxiomError(f"{prefix}3", (fa, fb), f"({prefix}3) violated")


def induce_from_closure_operator(op: OperatorTable) -> FPSoftTopology:
    """Topology whose closed sets are the fixed points of a closure operator.

    Verifies (c1)-(c4) over the whole carrier, then checks that the induced
    topology's closure agrees with the operator on every lattice set.
    """
    _check_operator(op, "closure")
    opens = [complement(f) for f in op.table if op(f) == f]
    t = validate_topology(op.context, opens)
    for f in op.table:
        assert closure(t, f) == op(f), "induced closure disagrees with operator"
    return t


def induce_from_interior_operator(op: OperatorTable) -> FPSoftTopology:
    _check_operator(op, "interior")
    opens = [f for f in op.table if op(f) == f]
    t = validate_topology(op.context, opens)
    for f in op.table:
        assert interior(t, f) == op(f), "induced interior disagrees with operator"
    return t
