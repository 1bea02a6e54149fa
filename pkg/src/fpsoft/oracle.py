"""Definition-direct re-implementation used as the independent oracle.

Everything here works on a plain "raw" representation -- a tuple, aligned
with the ordered parameters, of (grade, frozenset-of-symbols) pairs -- and
evaluates the defining formulas literally, without calling the algebra
module's composite operations.  The law suites compute every scanned
instance through both routes and report any disagreement as a failure.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .model import Context
from .sets import FPSoftPoint, FPSoftSet

Raw = tuple[tuple[Fraction, frozenset[str]], ...]


def to_raw(f: FPSoftSet) -> Raw:
    return tuple((g, frozenset(f.context.symbols_of(m))) for _, g, m in f.items())


def point_to_raw(pt: FPSoftPoint) -> tuple[str, Fraction, frozenset[str]]:
    return pt.param, pt.alpha, frozenset(pt.context.symbols_of(pt.crisp))


def from_raw(ctx: Context, raw: Raw) -> FPSoftSet:
    return FPSoftSet.of(ctx, {e: (g, sorted(xs))
                              for e, (g, xs) in zip(ctx.parameters, raw)})


def raw_union(family: Sequence[Raw]) -> Raw:
    n = len(family[0])
    return tuple(
        (max(f[i][0] for f in family),
         frozenset().union(*(f[i][1] for f in family)))
        for i in range(n))


def raw_intersection(family: Sequence[Raw]) -> Raw:
    n = len(family[0])
    return tuple(
        (min(f[i][0] for f in family),
         frozenset.intersection(*(f[i][1] for f in family)))
        for i in range(n))


def raw_complement(raw: Raw, universe: frozenset[str]) -> Raw:
    return tuple((1 - g, universe - xs) for g, xs in raw)


def raw_subset(fa: Raw, fb: Raw) -> bool:
    return all(ga <= gb and xa <= xb for (ga, xa), (gb, xb) in zip(fa, fb))


def raw_q(fa: Raw, fb: Raw, universe: frozenset[str]) -> bool:
    # mu_A(e) + mu_B(e) > 1, or f_A(e) is not a subset of f_B^c(e)
    return any(ga + gb > 1 or not xa <= (universe - xb)
               for (ga, xa), (gb, xb) in zip(fa, fb))


def raw_point_q(param_index: int, alpha: Fraction, crisp: frozenset[str],
                fa: Raw, universe: frozenset[str]) -> bool:
    g, xs = fa[param_index]
    return alpha + g > 1 or not crisp <= (universe - xs)


def raw_point_belongs(param_index: int, alpha: Fraction,
                      crisp: frozenset[str], fa: Raw) -> bool:
    g, xs = fa[param_index]
    return alpha <= g and crisp <= xs


def raw_normalized(raw: Raw) -> bool:
    return all(g > 0 or not xs for g, xs in raw)


def raw_image(fa: Raw, source_params: Sequence[str], target_params: Sequence[str],
              u: Mapping[str, str], p: Mapping[str, str]) -> Raw:
    out = []
    for k in target_params:
        fiber = [i for i, e in enumerate(source_params) if p[e] == k]
        if fiber:
            g = max(fa[i][0] for i in fiber)
            xs = frozenset(u[x] for i in fiber for x in fa[i][1])
        else:
            g, xs = Fraction(0), frozenset()
        out.append((g, xs))
    return tuple(out)


def raw_preimage(gs: Raw, source_params: Sequence[str], target_params: Sequence[str],
                 source_universe: Sequence[str],
                 u: Mapping[str, str], p: Mapping[str, str]) -> Raw:
    out = []
    for e in source_params:
        k = target_params.index(p[e])
        g, ys = gs[k]
        out.append((g, frozenset(x for x in source_universe if u[x] in ys)))
    return tuple(out)


# -------------------------------------------- topology-level oracle routes

def raw_closure(opens: Sequence[Raw], fa: Raw, universe: frozenset[str]) -> Raw:
    closed = [raw_complement(o, universe) for o in opens]
    supersets = [c for c in closed if raw_subset(fa, c)]
    return raw_intersection(supersets)


def raw_interior(opens: Sequence[Raw], fa: Raw) -> Raw:
    subsets = [o for o in opens if raw_subset(o, fa)]
    return raw_union(subsets)
