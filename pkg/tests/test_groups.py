"""Group backends: handles, multiplication convention, ranking, derived series."""
from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidrep.errors import ResourceLimitError, UsageError
from braidrep.groups import (
    SL2,
    AbelianProduct,
    CayleyTableGroup,
    SymmetricGroup,
    alternating_group,
    derived_series,
    element_order,
    involution_count,
    lex_rank,
    lex_unrank,
    load_cayley_table,
    parse_group_spec,
    perfect_core_group,
    subgroup_closure,
)

BACKENDS = [
    SymmetricGroup(3),
    SymmetricGroup(4),
    SL2(2),
    SL2(3),
    AbelianProduct((6,)),
    AbelianProduct((2, 4)),
    alternating_group(4),
]


# ---------------------------------------------------------------------------
# axioms and the composition convention
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("group", BACKENDS, ids=lambda g: g.name)
def test_identity_and_inverses(group):
    e = group.identity
    for a in group.elements():
        assert group.mul(e, a) == a
        assert group.mul(a, e) == a
        assert group.mul(a, group.inv(a)) == e
        assert group.mul(group.inv(a), a) == e


@pytest.mark.parametrize("group", BACKENDS, ids=lambda g: g.name)
def test_tables_match_scalar_mul(group):
    mul_t, inv_t = group.tables()
    assert mul_t.shape == (group.order, group.order)
    for a in group.elements():
        assert inv_t[a] == group.inv(a)
        for b in group.elements():
            assert mul_t[a, b] == group.mul(a, b)


def test_composition_applies_right_factor_first():
    # In S3 (lex handles 0..5): handle 1 is (2 3), handle 2 is (1 2); doing
    # (1 2) first and then (2 3) sends 1 -> 2 -> 3, i.e. gives (1 2 3), which
    # is the lex-rank-5 permutation (3, 1, 2) at handle 4.
    S = SymmetricGroup(3)
    assert S.image(1) == (1, 3, 2)
    assert S.image(2) == (2, 1, 3)
    assert S.mul(1, 2) == 4
    assert S.image(4) == (3, 1, 2)

    # Same check in S4 with 1-based lex ranks: rank2 * rank7 = rank8.
    T = SymmetricGroup(4)
    assert T.mul(1, 6) == 7


def test_power_and_conjugate_and_commutator():
    S = SymmetricGroup(4)
    g = S.index_of((2, 3, 4, 1))  # 4-cycle
    assert S.power(g, 4) == S.identity
    assert S.power(g, -1) == S.inv(g)
    t = S.index_of((2, 1, 3, 4))
    # conjugating the transposition (1 2) by the 4-cycle g = (1 2 3 4)
    # relabels its moved points: g (1 2) g^-1 = (2 3)
    assert S.image(S.conjugate(g, t)) == (1, 3, 2, 4)
    assert S.mul(S.mul(t, g), S.inv(t)) == S.conjugate(t, g)
    a, b = 5, 9
    lhs = S.mul(S.mul(S.inv(a), S.inv(b)), S.mul(a, b))
    assert S.commutator(a, b) == lhs


def test_check_element_range():
    S = SymmetricGroup(3)
    assert S.check_element(5) == 5
    with pytest.raises(UsageError):
        S.check_element(6)
    with pytest.raises(UsageError):
        S.check_element(-1)
    with pytest.raises(UsageError):
        S.check_element("2")


# ---------------------------------------------------------------------------
# lexicographic ranking of permutations
# ---------------------------------------------------------------------------

def test_lex_rank_small_cases():
    assert lex_rank((1, 2, 3)) == 1
    assert lex_rank((1, 3, 2)) == 2
    assert lex_rank((3, 2, 1)) == 6
    assert lex_unrank(1, 4) == (1, 2, 3, 4)
    # the three double transpositions of S4 sit at ranks 8, 17, 24
    assert lex_unrank(8, 4) == (2, 1, 4, 3)
    assert lex_unrank(17, 4) == (3, 4, 1, 2)
    assert lex_unrank(24, 4) == (4, 3, 2, 1)


def test_lex_rank_matches_symmetric_group_handles():
    for r in (1, 2, 3, 4):
        S = SymmetricGroup(r)
        for a in S.elements():
            assert lex_rank(S.image(a)) == a + 1
            assert lex_unrank(a + 1, r) == S.image(a)


def test_lex_rank_rejects_bad_input():
    with pytest.raises(UsageError):
        lex_rank((1, 1, 2))
    with pytest.raises(UsageError):
        lex_unrank(0, 3)
    with pytest.raises(UsageError):
        lex_unrank(7, 3)


@given(st.integers(min_value=1, max_value=6), st.data())
def test_lex_rank_unrank_roundtrip(r, data):
    rank = data.draw(st.integers(min_value=1, max_value=math.factorial(r)))
    assert lex_rank(lex_unrank(rank, r)) == rank


# ---------------------------------------------------------------------------
# symmetric-group specifics
# ---------------------------------------------------------------------------

def test_parity_values_and_additivity():
    S = SymmetricGroup(4)
    assert S.parity(S.identity) == 0
    assert S.parity(S.index_of((2, 1, 3, 4))) == 1
    assert S.parity(S.index_of((2, 3, 1, 4))) == 0
    for a in range(0, 24, 5):
        for b in range(0, 24, 7):
            assert S.parity(S.mul(a, b)) == S.parity(a) ^ S.parity(b)


def test_cycle_notation_labels():
    S = SymmetricGroup(4)
    assert S.label(S.identity) == "()"
    assert S.label(S.index_of((2, 1, 4, 3))) == "(1 2)(3 4)"
    assert S.label(S.index_of((2, 3, 4, 1))) == "(1 2 3 4)"


def test_index_of_rejects_non_permutation():
    S = SymmetricGroup(3)
    with pytest.raises(UsageError):
        S.index_of((1, 1, 2))


def test_degree_must_be_positive():
    with pytest.raises(UsageError):
        SymmetricGroup(0)


# ---------------------------------------------------------------------------
# SL(2, q)
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_sl2_order(q):
    assert SL2(q).order == q ** 3 - q


@pytest.mark.parametrize("q", [1, 6, 10, 16])
def test_sl2_unsupported_field_size(q):
    with pytest.raises(UsageError):
        SL2(q)


def test_sl2_inverse_closed_form():
    G = SL2(5)
    for a in range(0, G.order, 11):
        assert G.mul(a, G.inv(a)) == G.identity


# ---------------------------------------------------------------------------
# abelian products
# ---------------------------------------------------------------------------

def test_abelian_product_orders():
    Z6 = AbelianProduct((6,))
    assert Z6.order == 6 and Z6.is_abelian()
    assert [element_order(Z6, a) for a in Z6.elements()] == [1, 6, 3, 2, 3, 6]
    Z24 = AbelianProduct((2, 4))
    assert Z24.order == 8 and Z24.is_abelian()
    assert Z24.name == "Z2xZ4"
    assert max(element_order(Z24, a) for a in Z24.elements()) == 4


def test_abelian_product_mixed_radix_handles():
    G = AbelianProduct((2, 4))
    assert G.digits(0) == (0, 0)
    assert G.digits(5) == (1, 1)
    assert G.mul(5, 7) == G._enc(((1 + 1) % 2, (1 + 3) % 4))


def test_abelian_product_rejects_bad_moduli():
    with pytest.raises(UsageError):
        AbelianProduct(())
    with pytest.raises(UsageError):
        AbelianProduct((0, 3))


# ---------------------------------------------------------------------------
# explicit Cayley tables
# ---------------------------------------------------------------------------

def test_cayley_table_reproduces_source_group():
    S = SymmetricGroup(3)
    mul_t, _ = S.tables()
    G = CayleyTableGroup(mul_t.tolist(), name="copyS3")
    assert G.order == 6 and G.identity == S.identity
    for a in G.elements():
        for b in G.elements():
            assert G.mul(a, b) == S.mul(a, b)


def test_cayley_table_with_shifted_identity():
    # relabel Z3 so the identity lands at handle 2
    sigma = [2, 0, 1]  # old handle -> new handle
    inv_sigma = [1, 2, 0]
    Z3 = AbelianProduct((3,))
    table = [[sigma[Z3.mul(inv_sigma[a], inv_sigma[b])] for b in range(3)] for a in range(3)]
    G = CayleyTableGroup(table)
    assert G.identity == 2
    assert G.mul(0, 0) == 1


def test_cayley_table_rejects_malformed_input():
    with pytest.raises(UsageError):
        CayleyTableGroup([[0, 1], [1]])  # ragged
    with pytest.raises(UsageError):
        CayleyTableGroup([[0, 1], [1, 2]])  # entry out of range
    with pytest.raises(UsageError):
        CayleyTableGroup([[0, 1], [1, 1]])  # repeated entry in a row
    with pytest.raises(UsageError):
        CayleyTableGroup([])


def test_cayley_table_rejects_missing_identity():
    # subtraction mod 5 is a latin square with only a one-sided identity
    table = [[(a - b) % 5 for b in range(5)] for a in range(5)]
    with pytest.raises(UsageError, match="identity"):
        CayleyTableGroup(table)


def test_cayley_table_rejects_nonassociative_loop():
    # smallest nonassociative loop: latin, two-sided identity, but
    # (1*1)*2 = 2 while 1*(1*2) = 4
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(UsageError, match="associative"):
        CayleyTableGroup(table)


def test_load_cayley_table_roundtrip(tmp_path):
    Z4 = AbelianProduct((4,))
    mul_t, _ = Z4.tables()
    path = tmp_path / "z4.txt"
    lines = ["4"] + [" ".join(str(int(x)) for x in row) for row in mul_t]
    path.write_text("\n".join(lines) + "\n")
    G = load_cayley_table(str(path))
    assert G.order == 4
    assert all(G.mul(a, b) == Z4.mul(a, b) for a in range(4) for b in range(4))
    via_spec = parse_group_spec(f"table:{path}")
    assert via_spec.order == 4


def test_load_cayley_table_errors(tmp_path):
    with pytest.raises(UsageError):
        load_cayley_table(str(tmp_path / "missing.txt"))
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n0 1 1\n")
    with pytest.raises(UsageError):
        load_cayley_table(str(bad))
    notint = tmp_path / "notint.txt"
    notint.write_text("2\n0 x 1 0\n")
    with pytest.raises(UsageError):
        load_cayley_table(str(notint))
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    with pytest.raises(UsageError):
        load_cayley_table(str(empty))


def test_alternating_group_construction():
    A4 = alternating_group(4)
    assert A4.order == 12 and A4.name == "A4"
    assert A4.label(A4.identity) == "()"
    # closed under multiplication by construction; spot-check an order-3 element
    threes = [a for a in A4.elements() if element_order(A4, a) == 3]
    assert len(threes) == 8


# ---------------------------------------------------------------------------
# element statistics, closures, derived series
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("r,count", [(2, 1), (3, 3), (4, 9)])
def test_involution_count_symmetric(r, count):
    assert involution_count(SymmetricGroup(r)) == count


@pytest.mark.parametrize("group", BACKENDS, ids=lambda g: g.name)
def test_element_order_divides_group_order(group):
    for a in group.elements():
        assert group.order % element_order(group, a) == 0


def test_subgroup_closure_examples():
    S = SymmetricGroup(4)
    t = S.index_of((2, 1, 3, 4))
    c = S.index_of((2, 3, 4, 1))
    assert subgroup_closure(S, [t]) == frozenset({S.identity, t})
    assert len(subgroup_closure(S, [t, c])) == 24
    assert subgroup_closure(S, []) == frozenset({S.identity})


def test_derived_series_sizes():
    ds = derived_series(SymmetricGroup(4))
    assert [len(t) for t in ds.terms] == [24, 12, 4, 1]
    assert ds.solvable

    ds5 = derived_series(SymmetricGroup(5))
    assert [len(t) for t in ds5.terms] == [120, 60]
    assert not ds5.solvable

    assert [len(t) for t in derived_series(SL2(3)).terms] == [24, 8, 2, 1]
    assert derived_series(AbelianProduct((6,))).terms[-1] == frozenset({0})


def test_derived_series_perfect_group():
    A5 = alternating_group(5)
    ds = derived_series(A5)
    assert len(ds.terms) == 1 and not ds.solvable
    core = perfect_core_group(A5, ds)
    assert core.order == 60


def test_derived_series_resource_cap():
    with pytest.raises(ResourceLimitError):
        derived_series(SymmetricGroup(5), max_order=100)


def test_perfect_core_of_s5_is_a5():
    core = perfect_core_group(SymmetricGroup(5))
    assert core.order == 60
    A5 = alternating_group(5)
    mul_core, _ = core.tables()
    mul_a5, _ = A5.tables()
    assert np.array_equal(mul_core, mul_a5)


# ---------------------------------------------------------------------------
# specification strings
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "spec,name,order",
    [
        ("S4", "S4", 24),
        ("s3", "S3", 6),
        ("SL2(3)", "SL2(3)", 24),
        ("sl2(2)", "SL2(2)", 6),
        ("Z6", "Z6", 6),
        ("Z2xZ4", "Z2xZ4", 8),
        ("z2Xz2", "Z2xZ2", 4),
    ],
)
def test_parse_group_spec(spec, name, order):
    g = parse_group_spec(spec)
    assert g.name == name
    assert g.order == order


@pytest.mark.parametrize("spec", ["", "S", "Q8", "Zx", "SL3(2)", "Z2x", "S4b"])
def test_parse_group_spec_rejects(spec):
    with pytest.raises(UsageError):
        parse_group_spec(spec)


@settings(max_examples=60)
@given(st.data())
def test_associativity_sampled(data):
    group = data.draw(st.sampled_from(BACKENDS))
    a = data.draw(st.integers(min_value=0, max_value=group.order - 1))
    b = data.draw(st.integers(min_value=0, max_value=group.order - 1))
    c = data.draw(st.integers(min_value=0, max_value=group.order - 1))
    assert group.mul(group.mul(a, b), c) == group.mul(a, group.mul(b, c))
    assert group.inv(group.mul(a, b)) == group.mul(group.inv(b), group.inv(a))
