"""Law registry: named algebraic and topological laws, each checked
exhaustively on finite grade lattices.

Every law is evaluated through two routes: the library's composite
operations and the definition-direct oracle (:mod:`fpsoft.oracle`).  Both
routes are tabulated over the whole lattice carrier when an environment is
built, and any disagreement raises :class:`OracleDisagreement` -- agreement
on every scanned instance is itself part of every law run.

Laws that hold only under a hypothesis (injective / surjective / enriched)
appear twice: a holds-under-hypothesis law and a
``counterexample-expected`` law confirming the hypothesis is necessary.
For those, "pass" means the exhaustive scan found the expected
counterexample, which is reported as the witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from . import oracle
from .compactness import check_compactness
from .lattice import LatticeSpec, make_context
from .mapping import FPSoftMapping, classify, image, preimage
from .model import grade
from .sets import (
    FPSoftPoint,
    FPSoftSet,
    alpha_universal_set,
    complement,
    decompose_points,
    empty_set,
    intersect_family,
    is_normalized,
    is_subset,
    point_belongs,
    point_qcoincident,
    qcoincident,
    union_family,
    universal_set,
)
from .topology import (
    FPSoftTopology,
    closure,
    closure_contains_point,
    closure_contains_point_via_qnbds,
    closure_operator_of,
    enriched_for,
    induce_from_closure_operator,
    induce_from_interior_operator,
    interior,
    interior_operator_of,
    is_base,
    is_continuous,
    is_qnbd,
)
from .docio import format_fraction, format_mapping, format_set


class UnknownLawError(KeyError):
    pass


class OracleDisagreement(AssertionError):
    """The library route and the definition-direct oracle disagreed."""


@dataclass
class LawResult:
    law: str
    passed: bool
    expects_counterexample: bool
    witness: str | None
    instances: int


# ------------------------------------------------------------ environments

class SetEnv:
    """Carrier of one lattice scale with library and oracle op tables."""

    def __init__(self, nx: int, ne: int, q: int, ux: str = "x", pe: str = "e"):
        self.ctx = make_context(nx, ne, ux, pe)
        self.spec = LatticeSpec(self.ctx, q)
        self.q = q
        self.sets = list(self.spec.enumerate_sets())
        self.index = {f: i for i, f in enumerate(self.sets)}
        self.raws = [oracle.to_raw(f) for f in self.sets]
        self.raw_index = {r: i for i, r in enumerate(self.raws)}
        self.universe = frozenset(self.ctx.universe)
        self.oracle_checks = 0
        n = len(self.sets)
        self.empty = self.index[empty_set(self.ctx)]
        self.full = self.index[universal_set(self.ctx)]

        self.comp = self._check(
            "complement",
            [self.index[complement(f)] for f in self.sets],
            [self.raw_index[oracle.raw_complement(r, self.universe)]
             for r in self.raws])

        uni_lib, uni_orc, int_lib, int_orc = [], [], [], []
        sub_lib, sub_orc, q_lib, q_orc = [], [], [], []
        for i in range(n):
            fi, ri = self.sets[i], self.raws[i]
            uni_lib.append([self.index[union_family((fi, g))] for g in self.sets])
            uni_orc.append([self.raw_index[oracle.raw_union((ri, r))] for r in self.raws])
            int_lib.append([self.index[intersect_family((fi, g))] for g in self.sets])
            int_orc.append([self.raw_index[oracle.raw_intersection((ri, r))] for r in self.raws])
            sub_lib.append([is_subset(fi, g) for g in self.sets])
            sub_orc.append([oracle.raw_subset(ri, r) for r in self.raws])
            q_lib.append([qcoincident(fi, g) for g in self.sets])
            q_orc.append([oracle.raw_q(ri, r, self.universe) for r in self.raws])
        self.uni = self._check("union", uni_lib, uni_orc)
        self.inter = self._check("intersection", int_lib, int_orc)
        self.subset = self._check("subset", sub_lib, sub_orc)
        self.qco = self._check("quasi-coincidence", q_lib, q_orc)

        self.normalized = self._check(
            "normalized",
            [is_normalized(f) for f in self.sets],
            [oracle.raw_normalized(r) for r in self.raws])

        self.points = list(self.spec.enumerate_points())
        self.ptq, self.belongs = [], []
        for pt in self.points:
            pidx = self.ctx.param_index(pt.param)
            crisp = frozenset(self.ctx.symbols_of(pt.crisp))
            self.ptq.append(self._check(
                f"point-q {self.point_text(pt)}",
                [point_qcoincident(pt, f) for f in self.sets],
                [oracle.raw_point_q(pidx, pt.alpha, crisp, r, self.universe)
                 for r in self.raws]))
            self.belongs.append(self._check(
                f"point-belongs {self.point_text(pt)}",
                [point_belongs(pt, f) for f in self.sets],
                [oracle.raw_point_belongs(pidx, pt.alpha, crisp, r)
                 for r in self.raws]))
        self.point_index = {pt: i for i, pt in enumerate(self.points)}

    def _check(self, what, lib, orc):
        if lib != orc:
            raise OracleDisagreement(
                f"library and oracle disagree on {what} over {self.ctx}")
        self.oracle_checks += 1
        return lib

    def point_text(self, pt: FPSoftPoint) -> str:
        syms = " ".join(self.ctx.symbols_of(pt.crisp))
        return f"{pt.param}:{format_fraction(pt.alpha)}:{{{syms}}}"

    def witness(self, **objs) -> str:
        lines = [f"context {{ universe: {' '.join(self.ctx.universe)} ; "
                 f"parameters: {' '.join(self.ctx.parameters)} }}"]
        for name, obj in objs.items():
            lines.append(self.describe(name, obj))
        return "\n".join(lines)

    def describe(self, name, obj) -> str:
        if isinstance(obj, FPSoftSet):
            return format_set(name, obj)
        if isinstance(obj, int):
            return format_set(name, self.sets[obj])
        if isinstance(obj, FPSoftPoint):
            return f"# point {name} = {self.point_text(obj)}"
        if isinstance(obj, FPSoftMapping):
            return format_mapping(name, obj)
        if isinstance(obj, FPSoftTopology):
            members = " ; ".join(format_set(f"{name}_open{i}", o)
                                 for i, o in enumerate(obj.opens, 1))
            return f"# topology {name}: {members}"
        if isinstance(obj, (tuple, list)):
            return "\n".join(self.describe(f"{name}_{i}", o)
                             for i, o in enumerate(obj, 1))
        return f"# {name} = {obj}"


_set_envs: dict[tuple, SetEnv] = {}


def set_env(nx: int, ne: int, q: int, ux: str = "x", pe: str = "e") -> SetEnv:
    key = (nx, ne, q, ux, pe)
    if key not in _set_envs:
        _set_envs[key] = SetEnv(nx, ne, q, ux, pe)
    return _set_envs[key]


class MapEnv:
    """All mappings between one pair of carriers, with image/preimage tables."""

    def __init__(self, src: SetEnv, tgt: SetEnv):
        self.src, self.tgt = src, tgt
        self.mappings = []
        for u_vals in itertools.product(tgt.ctx.universe,
                                        repeat=len(src.ctx.universe)):
            for p_vals in itertools.product(tgt.ctx.parameters,
                                            repeat=len(src.ctx.parameters)):
                m = FPSoftMapping(src.ctx, tgt.ctx, u_vals, p_vals)
                u, p = m.u, m.p
                img = [tgt.index[image(m, f)] for f in src.sets]
                img_orc = [tgt.raw_index[oracle.raw_image(
                    r, src.ctx.parameters, tgt.ctx.parameters, u, p)]
                    for r in src.raws]
                pre = [src.index[preimage(m, g)] for g in tgt.sets]
                pre_orc = [src.raw_index[oracle.raw_preimage(
                    r, src.ctx.parameters, tgt.ctx.parameters,
                    src.ctx.universe, u, p)] for r in tgt.raws]
                if img != img_orc:
                    raise OracleDisagreement(f"image disagreement for {m}")
                if pre != pre_orc:
                    raise OracleDisagreement(f"preimage disagreement for {m}")
                self.mappings.append((m, classify(m), img, pre))

    def witness(self, m: FPSoftMapping, **objs) -> str:
        lines = [f"context {{ universe: {' '.join(self.src.ctx.universe)} ; "
                 f"parameters: {' '.join(self.src.ctx.parameters)} }}",
                 format_mapping("m", m)]
        for name, obj in objs.items():
            env = self.tgt if (isinstance(obj, FPSoftSet)
                               and obj.context == self.tgt.ctx) else self.src
            lines.append(env.describe(name, obj))
        return "\n".join(lines)


_map_envs: dict[tuple, MapEnv] = {}


def map_envs(universe: int, parameters: int, q: int) -> Iterator[MapEnv]:
    """MapEnvs for every size combination up to the given bounds."""
    for nx in range(1, universe + 1):
        for ny in range(1, universe + 1):
            for ne in range(1, parameters + 1):
                for nk in range(1, parameters + 1):
                    key = (nx, ny, ne, nk, q)
                    if key not in _map_envs:
                        _map_envs[key] = MapEnv(set_env(nx, ne, q),
                                                set_env(ny, nk, q, "y", "k"))
                    yield _map_envs[key]


class TopoEnv:
    """All topologies on one carrier, with closure/interior tables."""

    def __init__(self, env: SetEnv):
        self.env = env
        self.topologies = list(env.spec.enumerate_topologies())
        self.cl, self.iv, self.open_idx = [], [], []
        for t in self.topologies:
            open_raws = [env.raws[env.index[o]] for o in t.opens]
            cl_lib = [env.index[closure(t, f)] for f in env.sets]
            cl_orc = [env.raw_index[oracle.raw_closure(open_raws, r, env.universe)]
                      for r in env.raws]
            iv_lib = [env.index[interior(t, f)] for f in env.sets]
            iv_orc = [env.raw_index[oracle.raw_interior(open_raws, r)]
                      for r in env.raws]
            if cl_lib != cl_orc:
                raise OracleDisagreement("closure disagreement")
            if iv_lib != iv_orc:
                raise OracleDisagreement("interior disagreement")
            env.oracle_checks += 2
            self.cl.append(cl_lib)
            self.iv.append(iv_lib)
            self.open_idx.append(frozenset(env.index[o] for o in t.opens))


_topo_envs: dict[tuple, TopoEnv] = {}


def topo_env(nx: int, ne: int, q: int, ux: str = "x", pe: str = "e") -> TopoEnv:
    key = (nx, ne, q, ux, pe)
    if key not in _topo_envs:
        _topo_envs[key] = TopoEnv(set_env(nx, ne, q, ux, pe))
    return _topo_envs[key]


# ------------------------------------------------------------ set laws

def _pairs(n: int):
    return itertools.combinations_with_replacement(range(n), 2)


def law_prop7_1(u, p, q):
    env = set_env(u, p, q)
    count = 0
    for i, j in _pairs(len(env.sets)):
        count += 1
        if env.comp[env.uni[i][j]] != env.inter[env.comp[i]][env.comp[j]]:
            return env.witness(F_A=i, F_B=j), count
    return None, count


def law_prop7_2(u, p, q):
    env = set_env(u, p, q)
    count = 0
    for i, j in _pairs(len(env.sets)):
        count += 1
        if env.comp[env.inter[i][j]] != env.uni[env.comp[i]][env.comp[j]]:
            return env.witness(F_A=i, F_B=j), count
    return None, count


def law_prop7_3(u, p, q):
    env = set_env(u, p, q)
    count = 0
    for i in range(len(env.sets)):
        count += 1
        if env.inter[i][i] != i or env.uni[i][i] != i:
            return env.witness(F_A=i), count
    return None, count


def law_prop7_4(u, p, q):
    env = set_env(u, p, q)
    count = 0
    for i in range(len(env.sets)):
        count += 1
        if env.inter[i][env.empty] != env.empty or env.inter[i][env.full] != i:
            return env.witness(F_A=i), count
    return None, count


def law_prop7_5(u, p, q):
    env = set_env(u, p, q)
    count = 0
    for i, j in _pairs(len(env.sets)):
        count += 1
        if env.uni[i][j] != env.uni[j][i] or env.inter[i][j] != env.inter[j][i]:
            return env.witness(F_A=i, F_B=j), count
    return None, count


def law_prop7_6(u, p, q):
    env = set_env(u, p, q)
    n = len(env.sets)
    uni, inter = env.uni, env.inter
    count = 0
    for i in range(n):
        ui, ii = uni[i], inter[i]
        for j in range(n):
            uij, iij = ui[j], ii[j]
            uj, ij_ = uni[j], inter[j]
            for k in range(n):
                count += 1
                if ui[uj[k]] != uni[uij][k] or ii[ij_[k]] != inter[iij][k]:
                    return env.witness(F_A=i, F_B=j, F_C=k), count
    return None, count


def law_prop7_7(u, p, q):
    env = set_env(u, p, q)
    count = 0
    for i in range(len(env.sets)):
        count += 1
        if env.uni[i][env.empty] != i or env.uni[i][env.full] != env.full:
            return env.witness(F_A=i), count
    return None, count


def _families(n: int, max_size: int):
    for size in range(1, max_size + 1):
        yield from itertools.combinations_with_replacement(range(n), size)


def law_de_morgan_family(u, p, q):
    env = set_env(u, p, q)
    n = len(env.sets)
    count = 0
    for fam in _families(n, 3):
        count += 1
        un = fam[0]
        it = fam[0]
        for i in fam[1:]:
            un = env.uni[un][i]
            it = env.inter[it][i]
        cu = env.comp[fam[0]]
        ci = env.comp[fam[0]]
        for i in fam[1:]:
            cu = env.inter[cu][env.comp[i]]
            ci = env.uni[ci][env.comp[i]]
        if env.comp[un] != cu or env.comp[it] != ci:
            return env.witness(family=[env.sets[i] for i in fam]), count
    return None, count


def law_pc_1(u, p, q):
    env = set_env(u, p, q)
    n = len(env.sets)
    count = 0
    for i in range(n):
        for j in range(n):
            count += 1
            if env.subset[i][j] != (not env.qco[i][env.comp[j]]):
                return env.witness(F_A=i, F_B=j), count
    return None, count


def law_pc_2(u, p, q):
    env = set_env(u, p, q)
    n = len(env.sets)
    count = 0
    for i in range(n):
        for j in range(n):
            count += 1
            if env.qco[i][j] and env.inter[i][j] == env.empty:
                return env.witness(F_A=i, F_B=j), count
    return None, count


def law_pc_3(u, p, q):
    env = set_env(u, p, q)
    count = 0
    for i in range(len(env.sets)):
        count += 1
        if env.qco[i][env.comp[i]]:
            return env.witness(F_A=i), count
    return None, count


def law_pc_4(u, p, q):
    env = set_env(u, p, q)
    n = len(env.sets)
    count = 0
    for i in range(n):
        if not env.normalized[i] or i == env.empty:
            continue
        pts = [env.point_index[pt] for pt in decompose_points(env.sets[i])]
        for j in range(n):
            count += 1
            if env.qco[i][j] != any(env.ptq[pi][j] for pi in pts):
                return env.witness(F_A=i, F_B=j), count
    return None, count


def law_pc_5(u, p, q):
    env = set_env(u, p, q)
    count = 0
    for pi, pt in enumerate(env.points):
        for i in range(len(env.sets)):
            count += 1
            if env.belongs[pi][env.comp[i]] != (not env.ptq[pi][i]):
                return env.witness(pt=pt, F_A=i), count
    return None, count


def law_pc_6(u, p, q):
    env = set_env(u, p, q)
    n = len(env.sets)
    count = 0
    for i in range(n):
        for j in range(n):
            if not env.subset[i][j]:
                continue
            for pi, pt in enumerate(env.points):
                count += 1
                if env.ptq[pi][i] and not env.ptq[pi][j]:
                    return env.witness(pt=pt, F_A=i, F_B=j), count
    return None, count


def law_prop_2_9(u, p, q):
    env = set_env(u, p, q)
    n = len(env.sets)
    count = 0
    for fam in _families(n, 3):
        un = fam[0]
        for i in fam[1:]:
            un = env.uni[un][i]
        for pi, pt in enumerate(env.points):
            count += 1
            if env.ptq[pi][un] != any(env.ptq[pi][i] for i in fam):
                return env.witness(pt=pt, family=[env.sets[i] for i in fam]), count
    return None, count


def law_cover_fip_duality(u, p, q):
    env = set_env(u, p, q)
    n = len(env.sets)
    count = 0
    for fam in _families(n, 3):
        count += 1
        un = fam[0]
        it = env.comp[fam[0]]
        for i in fam[1:]:
            un = env.uni[un][i]
            it = env.inter[it][env.comp[i]]
        if (un == env.full) != (it == env.empty):
            return env.witness(family=[env.sets[i] for i in fam]), count
    return None, count


# ------------------------------------------------------------ mapping laws

def _map_law(u, p, q, check):
    count = 0
    for env in map_envs(u, p, q):
        for entry in env.mappings:
            witness, n = check(env, *entry)
            count += n
            if witness is not None:
                return witness, count
    return None, count


def _ce_map_law(u, p, q, check):
    """Counterexample-expected variant: pass iff *check* finds a witness."""
    witness, count = _map_law(u, p, q, check)
    return witness, count


def law_fo_1(u, p, q):
    def check(env, m, kind, img, pre):
        n = len(env.src.sets)
        count = 0
        for i in range(n):
            for j in range(n):
                if env.src.subset[i][j]:
                    count += 1
                    if not env.tgt.subset[img[i]][img[j]]:
                        return env.witness(m, F_A1=env.src.sets[i],
                                           F_A2=env.src.sets[j]), count
        return None, count
    return _map_law(u, p, q, check)


def law_fo_2(u, p, q):
    def check(env, m, kind, img, pre):
        n = len(env.tgt.sets)
        count = 0
        for i in range(n):
            for j in range(n):
                if env.tgt.subset[i][j]:
                    count += 1
                    if not env.src.subset[pre[i]][pre[j]]:
                        return env.witness(m, G_S1=env.tgt.sets[i],
                                           G_S2=env.tgt.sets[j]), count
        return None, count
    return _map_law(u, p, q, check)


def law_fo_3(u, p, q):
    def check(env, m, kind, img, pre):
        count = 0
        for i in range(len(env.src.sets)):
            count += 1
            if not env.src.subset[i][pre[img[i]]]:
                return env.witness(m, F_A=env.src.sets[i]), count
            if kind.injective and pre[img[i]] != i:
                return env.witness(m, F_A=env.src.sets[i]), count
        return None, count
    return _map_law(u, p, q, check)


def law_fo_3_ce(u, p, q):
    def check(env, m, kind, img, pre):
        if kind.injective:
            return None, 0
        for i in range(len(env.src.sets)):
            if pre[img[i]] != i:
                return env.witness(m, F_A=env.src.sets[i]), 1
        return None, 1
    return _ce_map_law(u, p, q, check)


def law_fo_4(u, p, q):
    def check(env, m, kind, img, pre):
        count = 0
        for g in range(len(env.tgt.sets)):
            count += 1
            if not env.tgt.subset[img[pre[g]]][g]:
                return env.witness(m, G_S=env.tgt.sets[g]), count
            if kind.surjective and img[pre[g]] != g:
                return env.witness(m, G_S=env.tgt.sets[g]), count
        return None, count
    return _map_law(u, p, q, check)


def law_fo_4_ce(u, p, q):
    def check(env, m, kind, img, pre):
        if kind.surjective:
            return None, 0
        for g in range(len(env.tgt.sets)):
            if img[pre[g]] != g:
                return env.witness(m, G_S=env.tgt.sets[g]), 1
        return None, 1
    return _ce_map_law(u, p, q, check)


def law_fo_5(u, p, q):
    def check(env, m, kind, img, pre):
        count = 0
        for i, j in _pairs(len(env.src.sets)):
            count += 1
            if img[env.src.uni[i][j]] != env.tgt.uni[img[i]][img[j]]:
                return env.witness(m, F_A1=env.src.sets[i],
                                   F_A2=env.src.sets[j]), count
        return None, count
    return _map_law(u, p, q, check)


def law_fo_6(u, p, q):
    def check(env, m, kind, img, pre):
        count = 0
        for i, j in _pairs(len(env.src.sets)):
            count += 1
            lhs = img[env.src.inter[i][j]]
            rhs = env.tgt.inter[img[i]][img[j]]
            if not env.tgt.subset[lhs][rhs]:
                return env.witness(m, F_A1=env.src.sets[i],
                                   F_A2=env.src.sets[j]), count
            if kind.injective and lhs != rhs:
                return env.witness(m, F_A1=env.src.sets[i],
                                   F_A2=env.src.sets[j]), count
        return None, count
    return _map_law(u, p, q, check)


def law_fo_6_ce(u, p, q):
    def check(env, m, kind, img, pre):
        if kind.injective:
            return None, 0
        for i, j in _pairs(len(env.src.sets)):
            if img[env.src.inter[i][j]] != env.tgt.inter[img[i]][img[j]]:
                return env.witness(m, F_A1=env.src.sets[i],
                                   F_A2=env.src.sets[j]), 1
        return None, 1
    return _ce_map_law(u, p, q, check)


def law_fo_7(u, p, q):
    def check(env, m, kind, img, pre):
        count = 0
        for i, j in _pairs(len(env.tgt.sets)):
            count += 1
            if pre[env.tgt.uni[i][j]] != env.src.uni[pre[i]][pre[j]]:
                return env.witness(m, G_S1=env.tgt.sets[i],
                                   G_S2=env.tgt.sets[j]), count
        return None, count
    return _map_law(u, p, q, check)


def law_fo_8(u, p, q):
    def check(env, m, kind, img, pre):
        count = 0
        for i, j in _pairs(len(env.tgt.sets)):
            count += 1
            if pre[env.tgt.inter[i][j]] != env.src.inter[pre[i]][pre[j]]:
                return env.witness(m, G_S1=env.tgt.sets[i],
                                   G_S2=env.tgt.sets[j]), count
        return None, count
    return _map_law(u, p, q, check)


def law_fo_9(u, p, q):
    def check(env, m, kind, img, pre):
        count = 0
        for g in range(len(env.tgt.sets)):
            count += 1
            if pre[env.tgt.comp[g]] != env.src.comp[pre[g]]:
                return env.witness(m, G_S=env.tgt.sets[g]), count
        return None, count
    return _map_law(u, p, q, check)


def law_fo_10_surjective(u, p, q):
    def check(env, m, kind, img, pre):
        if not kind.surjective:
            return None, 0
        count = 0
        for i in range(len(env.src.sets)):
            count += 1
            if not env.tgt.subset[env.tgt.comp[img[i]]][img[env.src.comp[i]]]:
                return env.witness(m, F_A=env.src.sets[i]), count
        return None, count
    return _map_law(u, p, q, check)


def law_fo_10_ce(u, p, q):
    def check(env, m, kind, img, pre):
        if kind.surjective:
            return None, 0
        for i in range(len(env.src.sets)):
            if not env.tgt.subset[env.tgt.comp[img[i]]][img[env.src.comp[i]]]:
                return env.witness(m, F_A=env.src.sets[i]), 1
        return None, 1
    return _ce_map_law(u, p, q, check)


def law_fo_11(u, p, q):
    def check(env, m, kind, img, pre):
        if pre[env.tgt.full] != env.src.full:
            return env.witness(m), 1
        return None, 1
    return _map_law(u, p, q, check)


def law_fo_12(u, p, q):
    def check(env, m, kind, img, pre):
        if pre[env.tgt.empty] != env.src.empty:
            return env.witness(m), 1
        return None, 1
    return _map_law(u, p, q, check)


def law_fo_13(u, p, q):
    def check(env, m, kind, img, pre):
        if not env.tgt.subset[img[env.src.full]][env.tgt.full]:
            return env.witness(m), 1
        if kind.surjective and img[env.src.full] != env.tgt.full:
            return env.witness(m), 1
        return None, 1
    return _map_law(u, p, q, check)


def law_fo_13_ce(u, p, q):
    def check(env, m, kind, img, pre):
        if kind.surjective:
            return None, 0
        if img[env.src.full] != env.tgt.full:
            return env.witness(m), 1
        return None, 1
    return _ce_map_law(u, p, q, check)


def law_fo_14(u, p, q):
    def check(env, m, kind, img, pre):
        if img[env.src.empty] != env.tgt.empty:
            return env.witness(m), 1
        return None, 1
    return _map_law(u, p, q, check)


# ------------------------------------------------------------ topology laws

def _topo_law(u, p, q, check):
    tenv = topo_env(u, p, q)
    count = 0
    for ti, t in enumerate(tenv.topologies):
        witness, n = check(tenv, ti, t)
        count += n
        if witness is not None:
            return witness, count
    return None, count


def law_kap_oz(u, p, q):
    def check(tenv, ti, t):
        env, cl = tenv.env, tenv.cl[ti]
        closed = frozenset(env.comp[i] for i in tenv.open_idx[ti])
        count = 0
        if cl[env.empty] != env.empty or cl[env.full] != env.full:
            return env.witness(T=t), 1
        for i in range(len(env.sets)):
            count += 1
            if not env.subset[i][cl[i]]:
                return env.witness(T=t, F_A=i), count
            if cl[cl[i]] != cl[i]:
                return env.witness(T=t, F_A=i), count
            if (i in closed) != (cl[i] == i):
                return env.witness(T=t, F_A=i), count
            for j in range(len(env.sets)):
                if env.subset[i][j] and not env.subset[cl[i]][cl[j]]:
                    return env.witness(T=t, F_A=i, F_B=j), count
                if cl[env.uni[i][j]] != env.uni[cl[i]][cl[j]]:
                    return env.witness(T=t, F_A=i, F_B=j), count
        return None, count
    return _topo_law(u, p, q, check)


def law_ic_oz(u, p, q):
    def check(tenv, ti, t):
        env, iv = tenv.env, tenv.iv[ti]
        opens = tenv.open_idx[ti]
        count = 0
        if iv[env.empty] != env.empty or iv[env.full] != env.full:
            return env.witness(T=t), 1
        for i in range(len(env.sets)):
            count += 1
            if not env.subset[iv[i]][i]:
                return env.witness(T=t, F_A=i), count
            if iv[iv[i]] != iv[i]:
                return env.witness(T=t, F_A=i), count
            if (i in opens) != (iv[i] == i):
                return env.witness(T=t, F_A=i), count
            for j in range(len(env.sets)):
                if env.subset[i][j] and not env.subset[iv[i]][iv[j]]:
                    return env.witness(T=t, F_A=i, F_B=j), count
                if iv[env.inter[i][j]] != env.inter[iv[i]][iv[j]]:
                    return env.witness(T=t, F_A=i, F_B=j), count
        return None, count
    return _topo_law(u, p, q, check)


def law_ik(u, p, q):
    def check(tenv, ti, t):
        env, cl, iv = tenv.env, tenv.cl[ti], tenv.iv[ti]
        count = 0
        for i in range(len(env.sets)):
            count += 1
            if env.comp[iv[i]] != cl[env.comp[i]]:
                return env.witness(T=t, F_A=i), count
            if env.comp[cl[i]] != iv[env.comp[i]]:
                return env.witness(T=t, F_A=i), count
        return None, count
    return _topo_law(u, p, q, check)


def law_qnbd_closure(u, p, q):
    def check(tenv, ti, t):
        env = tenv.env
        count = 0
        for f in env.sets:
            for pt in env.points:
                count += 1
                if (closure_contains_point(t, f, pt)
                        != closure_contains_point_via_qnbds(t, f, pt)):
                    return env.witness(T=t, F_A=f, pt=pt), count
        return None, count
    return _topo_law(u, p, q, check)


def _base_point_criterion(env, t, base) -> bool:
    for pt in env.points:
        for fa in t.opens:
            if not is_qnbd(t, fa, pt):
                continue
            if not any(point_qcoincident(pt, fb) and is_subset(fb, fa)
                       for fb in base):
                return False
    return True


def _point_separable(t, base) -> bool:
    """True when every open not generated by *base* differs from the
    generated union at some parameter of grade below 1, so a refuting
    point with positive grade exists."""
    for fa in t.opens:
        below = [b for b in base if is_subset(b, fa)]
        merged = union_family(below) if below else empty_set(t.context)
        if merged == fa:
            continue
        if not any((g1, m1) != (g2, m2) and g1 < 1
                   for (_, g1, m1), (_, g2, m2)
                   in zip(merged.items(), fa.items())):
            return False
    return True


def law_base_qnbd_criterion(u, p, q):
    def check(tenv, ti, t):
        env = tenv.env
        count = 0
        for r in range(len(t.opens) + 1):
            for base in itertools.combinations(t.opens, r):
                count += 1
                via_def = is_base(t, base)
                via_pts = _base_point_criterion(env, t, base)
                if via_def and not via_pts:
                    return env.witness(T=t, base=list(base)), count
                if via_pts and not via_def and _point_separable(t, base):
                    return env.witness(T=t, base=list(base)), count
        return None, count
    return _topo_law(u, p, q, check)


def law_base_qnbd_converse_ce(u, p, q):
    """The unrestricted converse fails: some non-base subfamily satisfies the
    point criterion (crisp-only deficiency at grade 1 admits no refuting
    point of positive grade)."""
    def check(tenv, ti, t):
        env = tenv.env
        for r in range(len(t.opens) + 1):
            for base in itertools.combinations(t.opens, r):
                if (_base_point_criterion(env, t, base)
                        and not is_base(t, base)):
                    return env.witness(T=t, base=list(base)), 1
        return None, 1
    return _topo_law(u, p, q, check)


def _pair_topo_envs(u, p, q):
    src = topo_env(u, p, q)
    tgt = topo_env(u, p, q, "y", "k")
    key = ("pair", u, p, q)
    if key not in _map_envs:
        _map_envs[key] = MapEnv(src.env, tgt.env)
    return src, tgt, _map_envs[key]


def law_continuity_equivalence(u, p, q):
    src, tgt, menv = _pair_topo_envs(u, p, q)
    count = 0
    for m, kind, img, pre in menv.mappings:
        for i1, t1 in enumerate(src.topologies):
            cl1, iv1 = src.cl[i1], src.iv[i1]
            opens1 = src.open_idx[i1]
            closed1 = frozenset(src.env.comp[i] for i in opens1)
            for i2, t2 in enumerate(tgt.topologies):
                count += 1
                cl2, iv2 = tgt.cl[i2], tgt.iv[i2]
                opens2 = tgt.open_idx[i2]
                closed2 = frozenset(tgt.env.comp[i] for i in opens2)
                c1 = all(pre[g] in opens1 for g in opens2)
                c2 = all(pre[g] in closed1 for g in closed2)
                c3 = all(tgt.env.subset[img[cl1[i]]][cl2[img[i]]]
                         for i in range(len(src.env.sets)))
                c4 = all(src.env.subset[cl1[pre[g]]][pre[cl2[g]]]
                         for g in range(len(tgt.env.sets)))
                c5 = all(src.env.subset[pre[iv2[g]]][iv1[pre[g]]]
                         for g in range(len(tgt.env.sets)))
                if not (c1 == c2 == c3 == c4 == c5):
                    return menv.witness(m, T1=t1, T2=t2), count
    return None, count


def law_base_continuity(u, p, q):
    src, tgt, menv = _pair_topo_envs(u, p, q)
    count = 0
    for m, kind, img, pre in menv.mappings:
        for i1, t1 in enumerate(src.topologies):
            opens1 = src.open_idx[i1]
            for i2, t2 in enumerate(tgt.topologies):
                cont = all(pre[g] in opens1 for g in tgt.open_idx[i2])
                for r in range(len(t2.opens) + 1):
                    for base in itertools.combinations(t2.opens, r):
                        if not is_base(t2, base):
                            continue
                        count += 1
                        base_cont = all(pre[tgt.env.index[b]] in opens1
                                        for b in base)
                        if base_cont != cont:
                            return menv.witness(m, T1=t1, T2=t2,
                                                base=list(base)), count
    return None, count


def law_constant_map_continuity(u, p, q):
    """Every constant mapping from an enriched space is continuous, on
    instances where each preimage is lattice-representable as an
    alpha-universal set or its complement (the finite-model restriction of
    the enrichment hypothesis)."""
    src, tgt, menv = _pair_topo_envs(u, p, q)
    env = src.env
    representable = {env.empty, env.full}
    for num in range(1, q + 1):
        i = env.index[alpha_universal_set(env.ctx, grade((num, q)))]
        representable.add(i)
        representable.add(env.comp[i])
    count = 0
    for m, kind, img, pre in menv.mappings:
        if not kind.constant:
            continue
        for i1, t1 in enumerate(src.topologies):
            if not enriched_for(t1, q):
                continue
            opens1 = src.open_idx[i1]
            for i2, t2 in enumerate(tgt.topologies):
                pres = [pre[g] for g in tgt.open_idx[i2]]
                if not all(i in representable for i in pres):
                    continue
                count += 1
                if not all(i in opens1 for i in pres):
                    return menv.witness(m, T1=t1, T2=t2), count
    return None, count


def law_closure_operator_roundtrip(u, p, q):
    def check(tenv, ti, t):
        op = closure_operator_of(t, q)
        induced = induce_from_closure_operator(op)
        if induced != t:
            return tenv.env.witness(T=t), 1
        return None, 1
    return _topo_law(u, p, q, check)


def law_interior_operator_roundtrip(u, p, q):
    def check(tenv, ti, t):
        op = interior_operator_of(t, q)
        induced = induce_from_interior_operator(op)
        if induced != t:
            return tenv.env.witness(T=t), 1
        return None, 1
    return _topo_law(u, p, q, check)


def law_compact_report(u, p, q):
    def check(tenv, ti, t):
        report = check_compactness(t)
        if not (report.compact and report.fip_equivalence_verified):
            return tenv.env.witness(T=t), 1
        return None, 1
    return _topo_law(u, p, q, check)


def law_continuous_image_compact(u, p, q):
    src, tgt, menv = _pair_topo_envs(u, p, q)
    count = 0
    for m, kind, img, pre in menv.mappings:
        if not kind.surjective:
            continue
        for i1, t1 in enumerate(src.topologies):
            opens1 = src.open_idx[i1]
            for i2, t2 in enumerate(tgt.topologies):
                if not all(pre[g] in opens1 for g in tgt.open_idx[i2]):
                    continue
                if not check_compactness(t1).compact:
                    continue
                count += 1
                if not check_compactness(t2).compact:
                    return menv.witness(m, T1=t1, T2=t2), count
    return None, count


# ------------------------------------------------------------ the registry

@dataclass(frozen=True)
class Law:
    id: str
    description: str
    runner: Callable
    expects_counterexample: bool = False
    universe: int = 2
    parameters: int = 2
    resolution: int = 2


_TOPO_SCALE = dict(universe=1, parameters=1, resolution=1)

REGISTRY: dict[str, Law] = {}


def _register(law: Law) -> None:
    REGISTRY[law.id] = law


for _id, _desc, _run in [
    ("prop7-1", "complement of a union is the intersection of complements", law_prop7_1),
    ("prop7-2", "complement of an intersection is the union of complements", law_prop7_2),
    ("prop7-3", "union and intersection are idempotent", law_prop7_3),
    ("prop7-4", "intersection identities with the empty and universal sets", law_prop7_4),
    ("prop7-5", "union and intersection are commutative", law_prop7_5),
    ("prop7-6", "union and intersection are associative", law_prop7_6),
    ("prop7-7", "union identities with the empty and universal sets", law_prop7_7),
    ("de-morgan-family", "family De Morgan laws (families of size <= 3)", law_de_morgan_family),
    ("pc-1", "subset iff not quasi-coincident with the complement", law_pc_1),
    ("pc-2", "quasi-coincidence implies nonempty intersection", law_pc_2),
    ("pc-3", "no set is quasi-coincident with its own complement", law_pc_3),
    ("pc-4", "quasi-coincidence is witnessed by a canonical point", law_pc_4),
    ("pc-5", "a point belongs to the complement iff it is not quasi-coincident", law_pc_5),
    ("pc-6", "subset transfers point quasi-coincidence", law_pc_6),
    ("prop-2.9", "point quasi-coincidence with a family union (size <= 3)", law_prop_2_9),
    ("cover-fip-duality", "a family covers the universal set iff its complements "
     "intersect to the empty set (families <= 3)", law_cover_fip_duality),
]:
    _register(Law(_id, _desc, _run))

for _id, _desc, _run, _ce in [
    ("fo-1", "image is monotone", law_fo_1, False),
    ("fo-2", "preimage is monotone", law_fo_2, False),
    ("fo-3", "set within preimage of image; equality under injectivity", law_fo_3, False),
    ("fo-3-equality-without-injectivity",
     "preimage of image exceeds the set for some non-injective mapping", law_fo_3_ce, True),
    ("fo-4", "image of preimage within the set; equality under surjectivity", law_fo_4, False),
    ("fo-4-equality-without-surjectivity",
     "image of preimage is strict for some non-surjective mapping", law_fo_4_ce, True),
    ("fo-5", "image distributes over family union (families <= 2)", law_fo_5, False),
    ("fo-6", "image of intersection within intersection of images; "
     "equality under injectivity", law_fo_6, False),
    ("fo-6-equality-without-injectivity",
     "image/intersection equality fails for some non-injective mapping", law_fo_6_ce, True),
    ("fo-7", "preimage distributes over family union (families <= 2)", law_fo_7, False),
    ("fo-8", "preimage distributes over family intersection (families <= 2)", law_fo_8, False),
    ("fo-9", "preimage commutes with complement", law_fo_9, False),
    ("fo-10-under-surjectivity", "complement of image within image of complement, "
     "for surjective mappings (oracle-pinned direction)", law_fo_10_surjective, False),
    ("fo-10-without-surjectivity",
     "the unrestricted inclusion fails for some non-surjective mapping", law_fo_10_ce, True),
    ("fo-11", "preimage of the universal target set is the universal set", law_fo_11, False),
    ("fo-12", "preimage of the empty target set is the empty set", law_fo_12, False),
    ("fo-13", "image of the universal set within the universal target set; "
     "equality under surjectivity", law_fo_13, False),
    ("fo-13-equality-without-surjectivity",
     "image of the universal set is strict for some non-surjective mapping",
     law_fo_13_ce, True),
    ("fo-14", "image of the empty set is the empty target set", law_fo_14, False),
]:
    _register(Law(_id, _desc, _run, expects_counterexample=_ce))

for _id, _desc, _run in [
    ("kap-oz", "closure fixes the special sets, is extensive, idempotent, "
     "monotone, characterizes closedness, distributes over binary union", law_kap_oz),
    ("ic-oz", "dual properties of the interior", law_ic_oz),
    ("ik", "closure/interior duality through complement", law_ik),
    ("qnbd-closure", "point-in-closure iff every open Q-neighborhood is "
     "quasi-coincident with the set", law_qnbd_closure),
    ("base-qnbd-criterion", "base characterization through point "
     "Q-neighborhoods (converse on point-separable instances, the "
     "oracle-pinned form)", law_base_qnbd_criterion),
    ("continuity-equivalence", "the five continuity conditions agree", law_continuity_equivalence),
    ("base-continuity", "continuity iff base preimages are open", law_base_continuity),
    ("closure-operator-roundtrip", "topology -> closure operator -> same "
     "topology; operator axioms verified", law_closure_operator_roundtrip),
    ("interior-operator-roundtrip", "topology -> interior operator -> same "
     "topology; operator axioms verified", law_interior_operator_roundtrip),
    ("compact-report", "every finitely-presented space reports compact with "
     "the FIP equivalence verified", law_compact_report),
    ("continuous-image-compact", "continuous surjective image of a compact "
     "space is compact", law_continuous_image_compact),
]:
    _register(Law(_id, _desc, _run, **_TOPO_SCALE))

_register(Law("base-qnbd-converse-unrestricted",
              "the unrestricted point-criterion converse fails on a "
              "saturated-grade crisp-only deficiency",
              law_base_qnbd_converse_ce, expects_counterexample=True,
              **_TOPO_SCALE))

_register(Law("constant-map-continuity",
              "constant mappings from enriched spaces are continuous "
              "(lattice-representable preimages)", law_constant_map_continuity,
              universe=1, parameters=1, resolution=2))


def run_law_suite(law_id: str, universe: int | None = None,
                  parameters: int | None = None,
                  resolution: int | None = None, jobs: int = 1) -> LawResult:
    """Run one registered law exhaustively at the given (or default) scale.

    ``jobs`` is accepted for interface compatibility; scans are sequential
    so the reported counterexample is always the canonically first one.
    """
    if law_id not in REGISTRY:
        raise UnknownLawError(law_id)
    law = REGISTRY[law_id]
    witness, count = law.runner(
        universe if universe is not None else law.universe,
        parameters if parameters is not None else law.parameters,
        resolution if resolution is not None else law.resolution,
    )
    if law.expects_counterexample:
        return LawResult(law_id, witness is not None, True, witness, count)
    return LawResult(law_id, witness is None, False, witness, count)


def all_law_ids() -> list[str]:
    return list(REGISTRY)
