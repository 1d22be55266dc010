import pickle

import pytest
from hypothesis import given

from assoc_coherence.expr import enumerate_exprs, leaf_count, metrics, parse, render
from assoc_coherence.fgroup import TreePair, generator_pair, reduce_pair
from assoc_coherence.moves import (
    InapplicableMoveError,
    InvalidAddressError,
    Letter,
    apply_alpha,
    apply_alpha_inv,
    can_apply,
    generator_template,
    parse_letter,
    rotate_at,
    rotation_addresses,
    spine_index,
)
from oracles import text_alpha, text_alpha_inv, trees

P = parse


@pytest.mark.parametrize(
    "i, text, expected",
    [(0, "(x*(x*x))", True), (0, "((x*x)*x)", False), (1, "((x*(x*x))*x)", True), (5, "(x*(x*x))", False)],
)
def test_can_apply(i, text, expected):
    assert can_apply(i, P(text)) is expected


@pytest.mark.parametrize(
    "i, source, target",
    [
        (0, "(x*(x*x))", "((x*x)*x)"),
        (0, "((x*x)*(x*x))", "(((x*x)*x)*x)"),
        (0, "(x*((x*x)*x))", "((x*(x*x))*x)"),
        (1, "((x*(x*x))*x)", "(((x*x)*x)*x)"),
    ],
)
def test_apply_alpha_examples(i, source, target):
    assert render(apply_alpha(i, P(source))) == target


def test_apply_alpha_errors_name_the_reason():
    with pytest.raises(InapplicableMoveError, match="right child is a leaf"):
        apply_alpha(0, P("((x*x)*x)"))
    with pytest.raises(InapplicableMoveError, match="no node"):
        apply_alpha(3, P("((x*x)*x)"))


def test_apply_alpha_inv_examples():
    assert render(apply_alpha_inv(0, P("((x*x)*x)"))) == "(x*(x*x))"
    assert render(apply_alpha_inv(1, P("(((x*x)*x)*x)"))) == "((x*(x*x))*x)"
    with pytest.raises(InapplicableMoveError, match="left child is a leaf"):
        apply_alpha_inv(0, P("(x*(x*x))"))


def test_rotate_at_examples():
    assert render(rotate_at(P("(x*(x*(x*x)))"), ("R",))) == "(x*((x*x)*x))"
    assert render(rotate_at(P("(x*(x*x))"), ())) == "((x*x)*x)"
    with pytest.raises(InapplicableMoveError):
        rotate_at(P("((x*x)*x)"), ())
    with pytest.raises(InvalidAddressError):
        rotate_at(P("(x*x)"), ("L", "L"))


def test_generator_template():
    assert tuple(map(render, generator_template(0))) == ("(x*(x*x))", "((x*x)*x)")
    assert tuple(map(render, generator_template(1))) == ("((x*(x*x))*x)", "(((x*x)*x)*x)")
    assert tuple(map(render, generator_template(2))) == ("(((x*(x*x))*x)*x)", "((((x*x)*x)*x)*x)")
    for i in range(6):
        s, t = generator_template(i)
        assert leaf_count(s) == leaf_count(t) == i + 3
        assert apply_alpha(i, s) == t


def test_letters():
    assert str(Letter(0)) == "a0"
    assert str(Letter(3, -1)) == "A3"
    assert parse_letter("A12") == Letter(12, -1)
    assert Letter(2).inverse() == Letter(2, -1)
    for bad in ("b0", "a", "a-1", "a0a1"):
        with pytest.raises(ValueError):
            parse_letter(bad)


def test_spine_index():
    assert spine_index(()) == 0
    assert spine_index(("L", "L")) == 2
    assert spine_index(("L", "R")) is None


def test_expressions_pickle():
    e = P("((x*(x*x))*(x*x))")
    assert pickle.loads(pickle.dumps(e)) == e


@pytest.mark.parametrize("n", range(1, 11))
def test_move_properties_exhaustive(n):
    for e in enumerate_exprs(n):
        text = render(e)
        level, weight = metrics(e)
        for i in range(n + 1):
            expected = text_alpha(i, text)
            assert can_apply(i, e) == (expected is not None)
            inv = text_alpha_inv(i, text)
            if inv is not None:
                assert render(apply_alpha_inv(i, e)) == inv
                assert apply_alpha(i, apply_alpha_inv(i, e)) == e
            if expected is None:
                continue
            f = apply_alpha(i, e)
            assert render(f) == expected  # independent string rotation
            assert apply_alpha_inv(i, f) == e
            assert leaf_count(f) == n
            assert i <= n - 3
            assert i >= level
            if weight > 1 and i > level:
                assert metrics(f) == (level, weight)
        if weight > 1:
            assert can_apply(level, e)
            after = metrics(apply_alpha(level, e))
            assert after.level > level or (after.level == level and after.weight < weight)


@pytest.mark.parametrize("n", range(3, 9))
def test_instances_reduce_to_the_template(n):
    for e in enumerate_exprs(n):
        for i in range(n - 2):
            if can_apply(i, e):
                assert reduce_pair(TreePair(e, apply_alpha(i, e))) == TreePair(*generator_template(i))


@pytest.mark.parametrize("n", range(3, 8))
def test_only_spine_rotations_are_generator_instances(n):
    gens = {generator_pair(Letter(i)) for i in range(n)}
    for e in enumerate_exprs(n):
        for addr in rotation_addresses(e):
            reduced = reduce_pair(TreePair(e, rotate_at(e, addr)))
            assert (reduced in gens) == (spine_index(addr) is not None)


@given(trees(14))
def test_rotate_at_spine_agrees_with_alpha(e):
    for addr in rotation_addresses(e):
        f = rotate_at(e, addr)
        assert leaf_count(f) == leaf_count(e)
        i = spine_index(addr)
        if i is not None:
            assert f == apply_alpha(i, e)
