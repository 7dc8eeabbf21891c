import itertools

import pytest

from planarps.trees import (LEAF, UNIT, binom, comb, contract,
                            contraction_table, count_trees, enumerate_binary,
                            enumerate_trees, format_tree, node, parse)

SCHROEDER = [1, 1, 3, 11, 45, 197, 903, 4279]
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429]


def test_counts_match_enumeration():
    for n, want in enumerate(SCHROEDER):
        assert count_trees(n) == want
        assert len(enumerate_trees(n)) == want


def test_binary_counts_are_catalan():
    for n in range(1, 8):
        assert len(enumerate_binary(n)) == CATALAN[n - 1]
        assert count_trees(n, max_arity=2) == CATALAN[n - 1]


def test_degrees_and_arity():
    t = parse("(x,(x,x),x)")
    assert t.degree == 4
    assert t.arity == 3
    assert t.max_arity() == 3
    assert UNIT.degree == 0 and LEAF.degree == 1


def test_parse_format_round_trip():
    for n in range(6):
        for t in enumerate_trees(n):
            assert parse(format_tree(t)) is t


def test_parse_tolerates_spaces():
    assert parse(" ( x , ( x , x ) ) ") is parse("(x,(x,x))")


@pytest.mark.parametrize("bad", ["", "y", "(x)", "(x,1)", "(x,x", "(x,x))", "x,x"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse(bad)


def test_interning():
    a = node((LEAF, node((LEAF, LEAF))))
    b = parse("(x,(x,x))")
    assert a is b


def test_node_validation():
    with pytest.raises(ValueError):
        node((LEAF,))
    with pytest.raises(ValueError):
        node((UNIT, LEAF))


def test_canonical_order_is_by_degree_then_arity_sequence():
    trees = enumerate_trees(4)
    keys = [t.sort_key() for t in trees]
    assert keys == sorted(keys)
    # the binary degree-4 trees come out in the documented order
    binaries = [str(t) for t in trees if t.max_arity() == 2]
    assert binaries == ["(x,(x,(x,x)))", "(x,((x,x),x))", "((x,x),(x,x))",
                        "((x,(x,x)),x)", "(((x,x),x),x)"]


def test_comb_shape():
    assert comb(0) is UNIT
    assert comb(1) is LEAF
    assert str(comb(3)) == "((x,x),x)"
    assert comb(4) is node((comb(3), LEAF))


def test_contract_examples():
    t = parse("(x,(x,x))")
    assert contract(t, []) is UNIT
    assert contract(t, [0]) is LEAF
    assert contract(t, [1, 2]) is parse("(x,x)")
    assert contract(t, [0, 2]) is parse("(x,x)")
    assert contract(t, [0, 1, 2]) is t


def test_contract_collapses_single_survivor_nodes():
    t = parse("((x,x),(x,x))")
    # keep one leaf per side: both inner nodes collapse
    assert contract(t, [0, 2]) is parse("(x,x)")
    # keep one side entirely: the root collapses onto it
    assert contract(t, [2, 3]) is parse("(x,x)")


def test_contract_rejects_bad_indices():
    with pytest.raises(ValueError):
        contract(LEAF, [1])
    with pytest.raises(ValueError):
        contract(parse("(x,x)"), [-1])


def _binom_by_subsets(upper, lower):
    count = 0
    for size in range(upper.degree + 1):
        if size != lower.degree:
            continue
        for sub in itertools.combinations(range(upper.degree), size):
            if contract(upper, sub) is lower:
                count += 1
    return count


def test_contraction_table_matches_subset_enumeration():
    for n in range(6):
        for upper in enumerate_trees(n):
            table = contraction_table(upper)
            assert sum(table.values()) == 2 ** n
            for lower, cnt in table.items():
                assert _binom_by_subsets(upper, lower) == cnt


def test_binom_basics():
    u = parse("(x,(x,x))")
    assert binom(u, u) == 1
    assert binom(u, UNIT) == 1
    assert binom(u, LEAF) == 3
    assert binom(LEAF, u) == 0
    assert binom(u, parse("(x,x)")) == 3


def test_binom_row_sums_are_binomials():
    import math
    u = parse("((x,x),(x,x),x)")
    table = contraction_table(u)
    for k in range(u.degree + 1):
        row = sum(c for t, c in table.items() if t.degree == k)
        assert row == math.comb(u.degree, k)
