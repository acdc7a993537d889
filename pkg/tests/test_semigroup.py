import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ALL_FIXTURES
from oracles import (all_isomorphisms, left_ideal_set, naive_green,
                     naive_is_clifford, naive_l_related, naive_r_related)
from sgcones.builders import fixture
from sgcones.errors import (BadLabels, NotAssociative, NotClosed,
                            SearchBudgetExceeded)
from sgcones.semigroup import (FiniteSemigroup, clifford_violation,
                               element_order, find_isomorphism,
                               from_table_text, green, idempotents,
                               is_clifford, is_clifford_by_dclasses,
                               is_commutative, is_inverse, is_regular,
                               is_semilattice, opposite,
                               principal_left_ideal, principal_right_ideal,
                               to_table_text, verify_morphism)


def test_rejects_out_of_range_entry():
    with pytest.raises(NotClosed):
        FiniteSemigroup([[0, 1], [1, 2]])


def test_nonassociative_witness_is_first():
    table = [[1, 0], [0, 0]]
    bad = None
    for a in range(2):
        for b in range(2):
            for c in range(2):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    bad = (a, b, c)
                    break
            if bad:
                break
        if bad:
            break
    assert bad == (0, 0, 1)
    with pytest.raises(NotAssociative) as exc:
        FiniteSemigroup(table)
    assert exc.value.triple == bad


def test_rejects_bad_labels():
    with pytest.raises(BadLabels):
        FiniteSemigroup([[0]], labels=["a", "b"])
    with pytest.raises(BadLabels):
        FiniteSemigroup([[0]], labels=["a b"])
    with pytest.raises(BadLabels):
        FiniteSemigroup([[0]], labels=[""])


def test_labels_do_not_affect_equality():
    a = FiniteSemigroup([[0]], labels=["x"])
    b = FiniteSemigroup([[0]], labels=["y"])
    assert a == b and hash(a) == hash(b)


def test_b2_frozen_structure():
    S = fixture("b2")
    assert S.table == (
        (0, 0, 0, 0, 0),
        (0, 1, 2, 0, 0),
        (0, 0, 0, 1, 2),
        (0, 3, 4, 0, 0),
        (0, 0, 0, 3, 4),
    )
    assert sorted(idempotents(S)) == [0, 1, 4]
    g = green(S)
    assert sorted(map(sorted, g.lclasses)) == [[0], [1, 3], [2, 4]]
    assert sorted(map(sorted, g.rclasses)) == [[0], [1, 2], [3, 4]]
    assert len(g.hclasses) == 5
    assert len(g.dclasses) == 2
    assert is_regular(S) and is_inverse(S)
    assert not is_clifford(S)
    assert clifford_violation(S) == (1, 2)


def test_opposite_frozen_example_and_involution():
    S = fixture("b2")
    T = opposite(S)
    assert T.table[1][2] == 0
    assert T.table[2][1] == 2
    for name in ALL_FIXTURES:
        S = fixture(name)
        assert opposite(opposite(S)) is S
        op = opposite(S)
        for a in range(S.order):
            for b in range(S.order):
                assert op.table[a][b] == S.table[b][a]


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_green_matches_divisibility_oracle(name):
    S = fixture(name)
    want = naive_green(S)
    got = green(S)
    assert sorted(map(sorted, got.lclasses)) == sorted(
        map(sorted, want["lclasses"])
    )
    assert sorted(map(sorted, got.rclasses)) == sorted(
        map(sorted, want["rclasses"])
    )
    assert sorted(map(sorted, got.hclasses)) == sorted(
        map(sorted, want["hclasses"])
    )
    assert sorted(map(sorted, got.dclasses)) == sorted(
        map(sorted, want["dclasses"])
    )
    for a in range(S.order):
        for b in range(S.order):
            assert (got.lclass[a] == got.lclass[b]) == naive_l_related(S, a, b)
            assert (got.rclass[a] == got.rclass[b]) == naive_r_related(S, a, b)


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_principal_ideals_match_oracle(name):
    S = fixture(name)
    op = opposite(S)
    for a in range(S.order):
        assert principal_left_ideal(S, a) == frozenset(left_ideal_set(S, a))
        assert principal_right_ideal(S, a) == frozenset(
            left_ideal_set(op, a)
        )


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_clifford_flags_match_oracle(name):
    S = fixture(name)
    assert is_clifford(S) == naive_is_clifford(S)
    assert is_clifford(S) == is_clifford_by_dclasses(S)


def test_class_flags_on_named_fixtures():
    assert is_semilattice(fixture("chain3"))
    assert is_semilattice(fixture("diamond"))
    assert not is_semilattice(fixture("z2"))
    assert is_inverse(fixture("b2")) and not is_clifford(fixture("b2"))
    assert not is_inverse(fixture("lz2"))
    assert is_commutative(fixture("z3"))
    assert not is_commutative(fixture("s3"))


def test_element_order_frozen():
    z3 = fixture("z3")
    assert [element_order(z3, a) for a in range(3)] == [(1, 1), (1, 3), (1, 3)]
    s3 = fixture("s3")
    assert [element_order(s3, a) for a in range(6)] == [
        (1, 1), (1, 2), (1, 2), (1, 3), (1, 3), (1, 2),
    ]


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_element_order_is_index_and_period(name):
    S = fixture(name)
    for a in range(S.order):
        index, period = element_order(S, a)
        powers = [a]
        for _ in range(index + period):
            powers.append(S.table[powers[-1]][a])
        # powers[k] = a^(k+1); index is 1-based
        assert powers[index - 1 + period] == powers[index - 1]
        if index + period > 2:
            seen = powers[: index - 1 + period]
            assert len(set(seen)) == len(seen)


def test_find_isomorphism_b2_self_anti():
    S = fixture("b2")
    wit = find_isomorphism(S, S, anti=True)
    assert wit == [0, 1, 3, 2, 4]
    assert verify_morphism(S, S, wit, anti=True)


@pytest.mark.parametrize("name", ["z3", "c2", "s3", "cl5"])
def test_find_isomorphism_is_lex_least(name):
    S = fixture(name)
    assert find_isomorphism(S, S) == next(all_isomorphisms(S, S))


def test_find_isomorphism_agrees_with_exhaustion():
    z3 = fixture("z3")
    assert list(all_isomorphisms(z3, z3)) == [[0, 1, 2], [0, 2, 1]]
    assert len(list(all_isomorphisms(fixture("s3"), fixture("s3")))) == 6
    assert (
        next(all_isomorphisms(fixture("b2"), fixture("b2"), anti=True))
        == [0, 1, 3, 2, 4]
    )


def test_find_isomorphism_distinguishes_same_order():
    assert find_isomorphism(fixture("z3"), fixture("chain3")) is None
    assert find_isomorphism(fixture("chain4"), fixture("diamond")) is None
    assert find_isomorphism(fixture("z2"), fixture("chain2")) is None


def test_find_isomorphism_budget():
    S = fixture("s3")
    with pytest.raises(SearchBudgetExceeded):
        find_isomorphism(S, S, budget=1)


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_table_text_roundtrip(name):
    S = fixture(name)
    T = from_table_text(to_table_text(S))
    assert T == S
    assert T.labels == S.labels


def test_table_text_errors():
    with pytest.raises(Exception):
        from_table_text("2\n0 1\n")
    with pytest.raises(Exception):
        from_table_text("1\n0 0\n")
    with pytest.raises(Exception):
        from_table_text("x\n0\n")
    with pytest.raises(BadLabels):
        from_table_text("1\n0\n#labels a b\n")


@settings(max_examples=40, deadline=None)
@given(name=st.sampled_from(ALL_FIXTURES), data=st.data())
def test_relabeled_copy_is_isomorphic(name, data):
    S = fixture(name)
    n = S.order
    perm = data.draw(st.permutations(list(range(n))))
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            table[perm[a]][perm[b]] = perm[S.table[a][b]]
    T = FiniteSemigroup(table)
    assert verify_morphism(S, T, perm)
    wit = find_isomorphism(S, T)
    assert wit is not None
    assert verify_morphism(S, T, wit)
    g1, g2 = green(S), green(T)
    assert sorted(map(len, g1.lclasses)) == sorted(map(len, g2.lclasses))
    assert sorted(map(len, g1.rclasses)) == sorted(map(len, g2.rclasses))
