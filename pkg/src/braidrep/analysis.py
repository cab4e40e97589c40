"""Derived facts about computed representations: transitivity, subgroup counts,
type-I structure, the abelian special case, and the standard permutation
representation used as a sanity anchor."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import UsageError, VerificationError
from .extension import RepClass, TowerResult, compute_tower
from .groups import (CayleyTableGroup, FiniteGroup, SymmetricGroup,
                     derived_series, involution_count)
from .shift import Representation, ShiftDecomposition, decompose

__all__ = [
    "generator_orbits",
    "is_transitive",
    "LevelTransitivity",
    "TransitivityReport",
    "transitivity_report",
    "count_subgroups",
    "count_braid_subgroups",
    "type_I_census",
    "abelian_cycle_length",
    "pi_representation",
    "nontrivial_implies_transitive",
    "classes_all_even",
    "perfect_core_census_match",
]


# ---------------------------------------------------------------------------
# orbits and transitivity (permutation images only)
# ---------------------------------------------------------------------------

def _require_symmetric(group: FiniteGroup) -> SymmetricGroup:
    if not isinstance(group, SymmetricGroup):
        raise UsageError("transitivity analysis needs a symmetric-group backend")
    return group


def generator_orbits(group: SymmetricGroup, gens) -> tuple[tuple[int, ...], ...]:
    """Orbit partition of {1..r} under the subgroup generated by `gens`."""
    S = _require_symmetric(group)
    parent = list(range(S.r))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        img = S.image(g)
        for k in range(S.r):
            ra, rb = find(k), find(img[k] - 1)
            if ra != rb:
                parent[rb] = ra
    buckets: dict[int, list[int]] = {}
    for k in range(S.r):
        buckets.setdefault(find(k), []).append(k + 1)
    return tuple(tuple(sorted(o)) for o in sorted(buckets.values()))


def is_transitive(rep: Representation) -> bool:
    return len(generator_orbits(_require_symmetric(rep.group), rep.generators())) == 1


def _class_orbits(group: SymmetricGroup, cls: RepClass) -> tuple[tuple[int, ...], ...]:
    gens = sorted(set(cls.cycle.a_seq) | set(cls.b))
    return generator_orbits(group, gens)


@dataclass(eq=False)
class LevelTransitivity:
    """Per-class orbit data at one stage, with the index-r subgroup count."""

    n: int
    orbits: list[tuple[tuple[int, ...], ...]]
    transitive: list[bool]
    transitive_rep_count: int
    subgroup_count: int


@dataclass(eq=False)
class TransitivityReport:
    group: SymmetricGroup
    levels: list[LevelTransitivity]

    def level(self, n: int) -> LevelTransitivity:
        for lvl in self.levels:
            if lvl.n == n:
                return lvl
        raise UsageError(f"stage {n} not in report")


def transitivity_report(tower: TowerResult) -> TransitivityReport:
    """Orbit partitions, transitivity flags and subgroup counts for every stage."""
    S = _require_symmetric(tower.group)
    stabiliser = math.factorial(S.r - 1)
    out = []
    for lvl in tower.levels:
        orbits = [_class_orbits(S, cls) for cls in lvl.classes]
        flags = [len(p) == 1 for p in orbits]
        trans_reps = sum(cls.period for cls, f in zip(lvl.classes, flags) if f)
        if trans_reps % stabiliser:
            raise VerificationError(
                f"transitive count {trans_reps} at stage {lvl.n} is not a multiple of (r-1)!={stabiliser}")
        out.append(LevelTransitivity(lvl.n, orbits, flags, trans_reps, trans_reps // stabiliser))
    return TransitivityReport(S, out)


def count_subgroups(n: int, r: int, tower: TowerResult | None = None) -> int:
    """Number of index-r subgroups of the stage-n group, via transitive representations."""
    if r < 2:
        return 1 if r == 1 else 0
    t = tower if tower is not None else compute_tower(SymmetricGroup(r), n, with_braid=False)
    report = transitivity_report(t)
    return report.level(n).subgroup_count


def count_braid_subgroups(n: int, r: int, tower: TowerResult | None = None) -> int:
    """Number of index-r subgroups of the n-strand braid group, for r <= n-1.

    Valid once the stage-n classes over S_r are trivial: every braid
    representation then has cyclic image generated by the sigma_1 image, and
    transitive ones are counted and divided by the point-stabiliser size.
    """
    if r == 1:
        return 1
    S = SymmetricGroup(r)
    t = tower if tower is not None else compute_tower(S, n, with_braid=True)
    if not t.is_trivial_at(n):
        raise UsageError(f"stage {n} over {S.name} is not trivial; braid subgroup count needs r <= n-1")
    lvl = t.level(n)
    transitive = 0
    for cls, cs in zip(lvl.classes, lvl.braid_c or []):
        for c in cs:
            if len(generator_orbits(S, [c])) == 1:
                transitive += cls.period
    stabiliser = math.factorial(r - 1)
    if transitive % stabiliser:
        raise VerificationError(
            f"transitive braid count {transitive} is not a multiple of (r-1)!={stabiliser}")
    return transitive // stabiliser


# ---------------------------------------------------------------------------
# type-I structure and the abelian case
# ---------------------------------------------------------------------------

def type_I_census(r: int) -> tuple[int, int, int]:
    """(cycle count, representation count, transitive representation count) of
    type-I cycles over S_r: ((1 + n_r + r!)/2, 3 r! - 2, 3 (r-1)!)."""
    if r < 2:
        raise UsageError("type-I census formulas need r >= 2")
    n_r = involution_count(SymmetricGroup(r))
    fact = math.factorial(r)
    if (1 + n_r + fact) % 2:
        raise VerificationError("type-I cycle count formula did not come out integral")
    return ((1 + n_r + fact) // 2, 3 * fact - 2, 3 * math.factorial(r - 1))


def abelian_cycle_length(group: FiniteGroup, v: tuple[int, int]) -> int:
    """Closed-form cycle length through v for abelian groups: 1, 2, 3 or 6."""
    if not group.is_abelian():
        raise UsageError("closed-form cycle lengths apply to abelian groups only")
    a = group.check_element(v[0])
    b = group.check_element(v[1])
    e = group.identity
    if a == e and b == e:
        return 1
    if group.mul(a, b) == e and group.power(a, 3) == e:
        return 2
    if group.mul(a, a) == e and group.mul(b, b) == e:
        return 3
    return 6


# ---------------------------------------------------------------------------
# the permutation representation z_m -> alternating 3-cycles
# ---------------------------------------------------------------------------

def pi_representation(n: int, r: int, decomposition: ShiftDecomposition | None = None) -> Representation:
    """The standard representation into S_r (r >= n): z_m to (1 3 2) or (1 2 3)
    by parity of m, and the extra generators to (1 2)(i, i+1)."""
    if n < 3:
        raise UsageError("the tower starts at n = 3")
    if r < n:
        raise UsageError(f"the standard representation needs r >= n, got r={r} < n={n}")
    if decomposition is not None:
        S = _require_symmetric(decomposition.group)
        if S.r != r:
            raise UsageError("decomposition degree does not match r")
    else:
        S = SymmetricGroup(r)

    def perm(mapping: dict[int, int]) -> int:
        return S.index_of(tuple(mapping.get(k, k) for k in range(1, r + 1)))

    a0 = perm({1: 3, 3: 2, 2: 1})          # (1 3 2)
    a1 = perm({1: 2, 2: 3, 3: 1})          # (1 2 3)
    b = tuple(perm({1: 2, 2: 1, i: i + 1, i + 1: i}) for i in range(3, n))
    a = (a0, a1)
    for m in range(2):
        am, am1, am2 = a[m], a[(m + 1) % 2], a[m]
        if b:
            lhs = S.mul(S.mul(am, b[0]), am2)
            rhs = S.mul(S.mul(b[0], am1), b[0])
            if lhs != rhs:
                raise VerificationError("standard representation breaks the stage-4 relation")
        for bi in b[1:]:
            if S.mul(am, bi) != S.mul(bi, am1):
                raise VerificationError("standard representation breaks an intertwining relation")
    for i in range(len(b) - 1):
        lhs = S.mul(S.mul(b[i], b[i + 1]), b[i])
        rhs = S.mul(S.mul(b[i + 1], b[i]), b[i + 1])
        if lhs != rhs:
            raise VerificationError("standard representation breaks a braid relation")
    for i in range(len(b)):
        for j in range(i + 2, len(b)):
            if S.mul(b[i], b[j]) != S.mul(b[j], b[i]):
                raise VerificationError("standard representation breaks far commutation")

    decomp = decomposition if decomposition is not None else decompose(S)
    cycle, phase = decomp.phase_of((a0, a1))
    return Representation(S, cycle, phase, b)


# ---------------------------------------------------------------------------
# structural claims checked on whole towers
# ---------------------------------------------------------------------------

def nontrivial_implies_transitive(tower: TowerResult, n: int) -> bool:
    """True when every nontrivial stage-n class over S_r acts transitively."""
    S = _require_symmetric(tower.group)
    lvl = tower.level(n)
    return all(
        len(_class_orbits(S, cls)) == 1
        for cls in lvl.classes if not cls.is_trivial(S))


def classes_all_even(tower: TowerResult, n: int) -> bool:
    """True when every stage-n class has all generator images in the alternating group."""
    S = _require_symmetric(tower.group)
    lvl = tower.level(n)
    return all(
        S.parity(g) == 0
        for cls in lvl.classes for g in set(cls.cycle.a_seq) | set(cls.b))


def perfect_core_census_match(group: FiniteGroup, n: int,
                              tower: TowerResult | None = None) -> bool:
    """Compare the stage-n census over the group and over its perfect core.

    The core census is mapped back through the element embedding; equality of
    the two sets of (vertex, images) classes is the restriction statement for
    stages n >= 6.
    """
    core_elems = sorted(derived_series(group).core)
    idx = {g: k for k, g in enumerate(core_elems)}
    table = [[idx[group.mul(x, y)] for y in core_elems] for x in core_elems]
    core = CayleyTableGroup(table, name=f"core({group.name})",
                            labels=[group.label(g) for g in core_elems])
    t = tower if tower is not None else compute_tower(group, n, with_braid=False)
    core_t = compute_tower(core, n, with_braid=False)

    def census(t_: TowerResult, mapping=None) -> set:
        out = set()
        for cls in t_.level(n).classes:
            a = cls.cycle.a_seq
            bb = cls.b
            if mapping is not None:
                a = tuple(mapping[x] for x in a)
                bb = tuple(mapping[x] for x in bb)
            out.add((min((a[k], a[(k + 1) % len(a)]) for k in range(len(a))), bb))
        return out

    return census(t) == census(core_t, core_elems)
