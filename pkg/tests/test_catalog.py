from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fusionscope.catalog import CATALOG, Call, Product, build, build_text, expected_order, parse
from fusionscope.errors import ArityError, DomainError, ExprSyntaxError
from fusionscope.isomorphism import are_isomorphic, type_label
from fusionscope.subgroups import center


def test_parse_products():
    node = parse("S(3) x Z(4)")
    assert isinstance(node, Product)
    assert [f.name for f in node.factors] == ["S", "Z"]
    node = parse("Dic(12) x Z(2)")
    assert isinstance(node, Product)
    assert (node.factors[0].name, node.factors[0].args) == ("Dic", (12,))
    assert (node.factors[1].name, node.factors[1].args) == ("Z", (2,))


def test_parse_single_and_perm():
    assert isinstance(parse("AGL(1,5)"), Call)
    G = build_text("perm[(0,1,2),(0,1)]")
    assert G.order == 6
    assert build_text("Z(2)×Z(3)").order == 6
    assert build_text("Z(2)*Z(3)").order == 6


@pytest.mark.parametrize("text, error", [
    ("Z()", ArityError),
    ("AGL(5)", ArityError),
    ("D(7)", DomainError),
    ("Dic(10)", DomainError),
    ("AGL(1,6)", DomainError),
    ("Z(0)", DomainError),
    ("Q(3)", ExprSyntaxError),
    ("S(3) x", ExprSyntaxError),
    ("S(3", ExprSyntaxError),
    ("", ExprSyntaxError),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse(text)


def test_error_positions():
    with pytest.raises(ExprSyntaxError) as info:
        parse("S(3) x Q(2)")
    assert info.value.position == 7


def test_named_constructions():
    G = build_text("AGL(1,5)")
    assert G.order == 20 and G.degree == 5
    G = build_text("Dic(12)")
    assert G.order == 12 and center(G).order == 2
    assert build_text("Z(1)").order == 1
    assert build_text("D(12)").order == 12
    assert type_label(build_text("D(8)")) == "D8"
    assert type_label(build_text("Dic(8)")) == "Q8"


def test_dic12_is_the_semidirect_product():
    # Z/3 ⋊ Z/4 where the generator of Z/4 acts on Z/3 by m -> 2m
    gens = [(1, 2, 0, 3, 4, 5, 6), (0, 2, 1, 4, 5, 6, 3)]
    from fusionscope.group import group_from_generators

    semidirect = group_from_generators(7, gens)
    assert semidirect.order == 12
    assert are_isomorphic(semidirect, build_text("Dic(12)"))


def test_catalog_orders_match_expressions():
    for text in CATALOG:
        node = parse(text)
        assert build(node).order == expected_order(node), text


def test_rebuilding_is_deterministic():
    for text in ["S(3)xZ(4)", "Dic(12)xZ(2)", "AGL(1,7)", "D(8)xS(3)"]:
        a, b = build_text(text), build_text(text)
        assert np.array_equal(a.perms, b.perms)
        assert np.array_equal(a._table, b._table)


def test_dihedral_has_cyclic_index_two_subgroup():
    for n in range(2, 26, 2):
        G = build_text(f"D({n})")
        assert G.order == n
        assert int(G.element_orders.max()) >= n // 2


def test_dicyclic_unique_involution():
    for n in range(4, 41, 4):
        G = build_text(f"Dic({n})")
        assert G.order == n
        assert int(np.count_nonzero(G.element_orders == 2)) == 1


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(["Z(2)", "Z(3)", "Z(4)", "S(3)", "D(8)", "Dic(8)", "A(4)"]), min_size=1, max_size=3))
def test_product_order_is_product_of_orders(factors):
    text = " x ".join(factors)
    node = parse(text)
    assert build(node).order == expected_order(node)
    assert str(parse(str(node))) == str(node)
