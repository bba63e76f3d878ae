import sys

import pytest
from brute_utils import signatures

from ea2hg.ea2_core import (Signature, elements, embed_thin, format_element,
                            multiply, parse_element, plus_minus, s_of,
                            subset_stats, thin_coordinates, to_table, whole)
from ea2hg.errors import GuardError, ValidationError
from ea2hg.hg_kernel import (generated_closed_subset, product_sets,
                             validate_axioms)

# e={}, q1={1} thin, q2={2} thick, r={1,2}
EXAMPLE = Signature(2, 0b10)


def test_signature_parse():
    assert Signature.parse("p=2,thick=2") == EXAMPLE
    assert Signature.parse("p=0") == Signature(0)
    assert Signature.parse("p=2,thick=") == Signature(2)
    assert Signature.parse("p=4,thick=1,3") == Signature(4, 0b0101)
    assert str(EXAMPLE) == "p=2,thick=2"
    assert str(Signature(2)) == "p=2,thick="
    assert Signature.parse(str(Signature(5, 0b10110))) == Signature(5, 0b10110)


@pytest.mark.parametrize("text", ["p=2,thick=3", "q=2", "p=-1", "p=2,thick=a", "p=63"])
def test_signature_parse_errors(text):
    with pytest.raises(ValidationError):
        Signature.parse(text)


def test_signature_stats():
    sig = Signature(4, 0b0101)
    assert sig.p_sharp == 2
    assert sig.num_thin == 2
    assert sig.thin_positions == (1, 3)
    assert sig.stats == (2, 2)
    assert len(list(Signature.all_of_rank(3))) == 8
    with pytest.raises(ValidationError):
        Signature(2, 0b100)


def test_example_products():
    assert multiply(EXAMPLE, 0b10, 0b10) == (0b00, 0b10)
    assert multiply(EXAMPLE, 0b10, 0b11) == (0b01, 0b11)
    assert multiply(EXAMPLE, 0b11, 0b11) == (0b00, 0b10)
    assert multiply(EXAMPLE, 0b01, 0b01) == (0b00,)
    assert multiply(EXAMPLE, 0b01, 0b10) == (0b11,)


def test_products():
    thin = Signature(3)
    assert all(multiply(thin, x, y) == (x ^ y,) for x in range(8) for y in range(8))
    thick = Signature(3, 0b111)
    assert multiply(thick, 0b011, 0b110) == (0b101, 0b111)
    assert multiply(thick, 0b111, 0b111) == tuple(range(8))
    assert all(multiply(thick, 0, x) == (x,) for x in range(8))
    with pytest.raises(ValidationError):
        multiply(thick, 0b1000, 0)


def test_to_table():
    t = to_table(EXAMPLE)
    assert t.n == 4
    assert t.identity == 0
    assert t.star == (0, 1, 2, 3)
    assert t.table == (
        ((0,), (1,), (2,), (3,)),
        ((1,), (0,), (3,), (2,)),
        ((2,), (3,), (0, 2), (1, 3)),
        ((3,), (2,), (1, 3), (0, 2)),
    )
    assert to_table(Signature(0)).table == (((0,),),)
    with pytest.raises(GuardError):
        to_table(Signature(5))


@pytest.mark.parametrize("sig", signatures(3), ids=str)
def test_tables_are_hypergroups(sig):
    assert validate_axioms(to_table(sig)).passed


def test_parts():
    sig = Signature(3, 0b101)
    assert plus_minus(sig, 0b111) == (0b101, 0b010)
    assert plus_minus(sig, 0) == (0, 0)
    assert s_of(sig, 0b111) == 2
    assert s_of(sig, 0b010) == 0


@pytest.mark.parametrize("sig", signatures(4), ids=str)
def test_parts_recombine(sig):
    for x in elements(sig):
        plus, minus = plus_minus(sig, x)
        assert plus ^ minus == x
        assert multiply(sig, plus, minus) == (x,)
        assert s_of(sig, x) == bin(plus).count("1")


@pytest.mark.parametrize("sig", signatures(4), ids=str)
def test_single_element_closure(sig):
    t = to_table(sig)
    for r in elements(sig):
        plus, minus = plus_minus(sig, r)
        below = tuple(a for a in elements(sig) if a & ~plus == 0)
        # r r is every element below r+
        assert product_sets(t, [r], [r]) == below
        assert len(below) == 1 << s_of(sig, r)
        closure = set(below) | {a ^ minus for a in below}
        assert generated_closed_subset(t, [r]) == tuple(sorted(closure))


def test_thin_coordinates():
    sig = Signature(4, 0b0101)
    assert thin_coordinates(sig, 0b1010) == 0b11
    assert thin_coordinates(sig, 0b1111) == 0b11
    assert thin_coordinates(sig, 0b0101) == 0
    assert embed_thin(sig, 0b10) == 0b1000
    assert all(thin_coordinates(sig, embed_thin(sig, v)) == v for v in range(4))
    with pytest.raises(ValidationError):
        embed_thin(sig, 0b100)


def test_element_text():
    sig = Signature(3)
    assert format_element(0b101) == "{1,3}"
    assert format_element(0) == "{}"
    assert parse_element(sig, "{1,3}") == 0b101
    assert parse_element(sig, "{}") == 0
    assert parse_element(sig, "{ 2 }") == 0b010
    with pytest.raises(ValidationError):
        parse_element(sig, "{4}")
    with pytest.raises(ValidationError):
        parse_element(sig, "1,2")


def test_elements():
    assert list(elements(Signature(2))) == [0, 1, 2, 3]
    assert whole(Signature(0)) == (0,)
    with pytest.raises(GuardError):
        elements(Signature(21))


def test_subset_stats():
    assert subset_stats(EXAMPLE, (0, 1, 2, 3)) == (1, 1)
    assert subset_stats(EXAMPLE, (0, 2)) == (1, 0)
    assert subset_stats(EXAMPLE, (0, 1)) == (0, 1)
    assert subset_stats(EXAMPLE, (0,)) == (0, 0)


if __name__ == "__main__":
    pytest.main(sys.argv)
