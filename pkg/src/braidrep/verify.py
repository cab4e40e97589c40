"""Re-checkable structural facts bundled into named suites.

Each suite re-derives a property from a freshly computed tower (or a brute
scan) rather than trusting the engine's internal assertions; `verify` in the
command-line driver prints one PASS/FAIL line per suite.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .analysis import perfect_core_census_match
from .errors import ResourceLimitError
from .extension import TowerResult, compute_tower
from .groups import FiniteGroup, element_order
from .oracle import brute_hom_Bn, brute_hom_Kn, engine_census_Bn, engine_census_Kn

__all__ = ["SuiteResult", "run_suites", "SUITE_NAMES"]

SUITE_NAMES = ["census", "prop1", "prop2", "prop3", "prop4", "oracle-eq"]

_ORACLE_KN_LIMIT = 40          # group order above which the K_n oracle is skipped
_ORACLE_BN_TUPLE_LIMIT = 500_000   # cap on |G|^(n-1) for the B_n oracle


@dataclass
class SuiteResult:
    name: str
    ok: bool
    detail: str


def _census_suite(tower: TowerResult) -> SuiteResult:
    decomp = tower.decomposition
    total = sum(p * k for p, k in decomp.period_census.items())
    square = tower.group.order ** 2
    fixed = decomp.period_census.get(1, 0)
    ok = total == square and fixed == 1
    return SuiteResult("census", ok,
                       f"sum p*n_p = {total}, |G|^2 = {square}, fixed points = {fixed}")


def _prop1_suite(tower: TowerResult) -> SuiteResult:
    G = tower.group
    bad = 0
    for cycle in tower.decomposition.cycles:
        prod = G.identity
        for a in cycle.a_seq:
            prod = G.mul(prod, a)
        if prod != G.identity:
            bad += 1
    return SuiteResult("prop1", bad == 0,
                       f"{len(tower.decomposition.cycles)} cycle products checked, {bad} non-identity")


def _prop2_suite(tower: TowerResult) -> SuiteResult:
    G = tower.group
    e = G.identity
    if tower.n_max < 4:
        return SuiteResult("prop2", True, "skipped (tower stops before stage 4)")
    bad = []
    for cls in tower.level(4).classes:
        p = cls.period
        b3 = cls.b[0]
        if G.power(b3, p) != e:
            bad.append(f"b3^p != e at {cls.cycle.rep_vertex}")
        if math.gcd(p, G.order) == 1 and b3 != e:
            bad.append(f"gcd(p,|G|)=1 but b3 nontrivial at {cls.cycle.rep_vertex}")
        if cls.cycle.cycle_type == "I" and b3 != e:
            bad.append(f"type-I cycle with nontrivial b3 at {cls.cycle.rep_vertex}")
    return SuiteResult("prop2", not bad,
                       bad[0] if bad else f"{tower.level(4).class_count} stage-4 classes checked")


def _prop3_suite(tower: TowerResult) -> SuiteResult:
    G = tower.group
    e = G.identity
    if tower.n_max < 5:
        return SuiteResult("prop3", True, "skipped (tower stops before stage 5)")
    bad = []
    checked = 0
    for n in range(5, tower.n_max + 1):
        for cls in tower.level(n).classes:
            if cls.is_trivial(G):
                continue
            checked += 1
            b = cls.b
            p = cls.period
            for i in range(len(b) - 1):
                x, y = b[i], b[i + 1]
                if G.mul(G.mul(x, y), x) != G.mul(G.mul(y, x), y):
                    bad.append(f"adjacent braid relation fails at stage {n}")
                if G.mul(x, y) == G.mul(y, x):
                    bad.append(f"adjacent images commute at stage {n}")
            for i in range(len(b)):
                for j in range(i + 2, len(b)):
                    if G.mul(b[i], b[j]) != G.mul(b[j], b[i]):
                        bad.append(f"far commutation fails at stage {n}")
            for i, x in enumerate(b):
                if i > 0 and element_order(G, x) % p != 0:
                    bad.append(f"p does not divide ord(b_{i + 3}) at stage {n}")
                xp = G.power(x, p)
                if any(G.mul(xp, am) != G.mul(am, xp) for am in cls.cycle.a_seq):
                    bad.append(f"b^p fails to centralise the a-sequence at stage {n}")
    return SuiteResult("prop3", not bad,
                       bad[0] if bad else f"{checked} nontrivial classes at stages >= 5 checked")


def _prop4_suite(tower: TowerResult) -> SuiteResult:
    n = tower.n_max
    if n < 6:
        return SuiteResult("prop4", True, f"skipped (needs stage >= 6, tower stops at {n})")
    try:
        ok = perfect_core_census_match(tower.group, n, tower)
    except ResourceLimitError as exc:
        return SuiteResult("prop4", True, f"skipped ({exc})")
    return SuiteResult("prop4", ok, f"stage-{n} census vs perfect core census")


def _oracle_suite(tower: TowerResult, budget: int) -> SuiteResult:
    G = tower.group
    n = tower.n_max
    if G.order > _ORACLE_KN_LIMIT:
        return SuiteResult("oracle-eq", True, f"skipped (|G| = {G.order} > {_ORACLE_KN_LIMIT})")
    res = brute_hom_Kn(G, n, budget)
    eng = engine_census_Kn(tower, n)
    if res.census != eng:
        return SuiteResult("oracle-eq", False,
                           f"K{n} census mismatch: oracle {res.rep_count} reps vs engine "
                           f"{tower.level(n).rep_count}")
    detail = f"K{n}: {res.rep_count} representations match"
    if tower.level(n).braid_c is not None and G.order ** (n - 1) <= _ORACLE_BN_TUPLE_LIMIT:
        bres = brute_hom_Bn(G, n, budget)
        beng = engine_census_Bn(tower, n)
        if bres.census != beng:
            return SuiteResult("oracle-eq", False,
                               f"B{n} census mismatch: oracle {bres.rep_count} vs engine "
                               f"{tower.level(n).braid_rep_count}")
        detail += f"; B{n}: {bres.rep_count} representations match"
    return SuiteResult("oracle-eq", True, detail)


def run_suites(group: FiniteGroup, n: int, *, budget: int = 100_000_000,
               threads: int = 1, max_vertices: int = 10_000_000,
               tower: TowerResult | None = None) -> list[SuiteResult]:
    """Run every named suite against a stage-n tower over the group."""
    t = tower if tower is not None else compute_tower(
        group, n, threads=threads, max_vertices=max_vertices)
    results = [
        _census_suite(t),
        _prop1_suite(t),
        _prop2_suite(t),
        _prop3_suite(t),
        _prop4_suite(t),
        _oracle_suite(t, budget),
    ]
    if t.n_max >= 5 and t.is_trivial_at(t.n_max):
        results.append(SuiteResult("note", True, f"stage {t.n_max} is trivial over {group.name}"))
    return results
