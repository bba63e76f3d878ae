import itertools
import sys
from collections import Counter

import pytest
from brute_utils import oracle, signatures

from ea2hg.classify import (AutDescriptor, ClosedDescriptor, aut_descriptor,
                            aut_groups_isomorphic, count_closed,
                            count_closed_of_size, count_closed_within,
                            count_strongly_normal,
                            count_strongly_normal_of_size,
                            count_strongly_normal_within, dimension,
                            enumerate_closed, find_basis, frattini_fast,
                            is_aut_s3, is_aut_symmetric_product,
                            is_aut_trivial, is_isomorphic, is_nilpotent_fast,
                            is_residually_thin_fast, is_strongly_normal_fast,
                            is_subset, iso_class_stats, iso_class_stats_within,
                            isomorphism_witness, join, materialize,
                            maximal_closed, meet, num_iso_classes_within,
                            num_strongly_normal_iso_classes, recognize,
                            strong_core_fast, thin_part_fast,
                            trivial_descriptor, whole_descriptor)
from ea2hg.ea2_core import Signature, subset_stats
from ea2hg.errors import GuardError, NotClosedError, ValidationError
from ea2hg.gf2_linalg import span
from ea2hg.hg_kernel import (brute_automorphism_count,
                             brute_isomorphism_exists, frattini,
                             generated_closed_subset, is_homomorphism,
                             is_nilpotent, is_residually_thin,
                             is_strongly_normal, maximal_closed_subsets)

EXAMPLE = Signature(2, 0b10)


def small_closed(sig):
    _, closed = oracle(sig)
    return [g for g in closed if len(g) <= 8]


def test_example_enumeration():
    descriptors = list(enumerate_closed(EXAMPLE))
    assert [str(d) for d in descriptors] == [
        "A={};F=[]",
        "A={};F=[0b1]",
        "A={2};F=[]",
        "A={2};F=[0b1]",
    ]
    assert [materialize(d) for d in descriptors] == [(0,), (0, 1), (0, 2), (0, 1, 2, 3)]
    strongly_normal = enumerate_closed(EXAMPLE, strongly_normal=True)
    assert [materialize(d) for d in strongly_normal] == [(0, 2), (0, 1, 2, 3)]
    assert count_closed(EXAMPLE) == 4
    assert count_strongly_normal(EXAMPLE) == 2


def test_descriptor_text():
    sig = Signature(3, 0b001)
    d = ClosedDescriptor.parse(sig, "A={1};F=[0b11]")
    assert d.thick_support == 0b001
    assert d.thin_subgroup == span([0b11], 2)
    assert str(d) == "A={1};F=[0b11]"
    assert ClosedDescriptor.parse(sig, " A={} ; F=[0b01, 0b10] ") == ClosedDescriptor(
        sig, 0, span([1, 2], 2)
    )
    assert str(whole_descriptor(sig)) == "A={1};F=[0b10,0b1]"
    assert str(trivial_descriptor(sig)) == "A={};F=[]"
    for bad in ["A={2};F=[]", "A={1};F=[0b100]", "A=1;F=[]", "A={1};F=[x]", "A={4};F=[]"]:
        with pytest.raises(ValidationError):
            ClosedDescriptor.parse(sig, bad)


def test_descriptor_validation():
    sig = Signature(3, 0b001)
    with pytest.raises(ValidationError):
        ClosedDescriptor(sig, 0b010, span([], 2))
    with pytest.raises(ValidationError):
        ClosedDescriptor(sig, 0, span([], 3))


def test_materialize_and_recognize():
    sig = Signature(3, 0b001)
    d = ClosedDescriptor.parse(sig, "A={1};F=[0b11]")
    assert materialize(d) == (0b000, 0b001, 0b110, 0b111)
    assert recognize(sig, [0b111, 0b000, 0b110, 0b001]) == d
    assert recognize(sig, [0]) == trivial_descriptor(sig)
    with pytest.raises(NotClosedError):
        recognize(sig, [0, 0b111])
    with pytest.raises(NotClosedError):
        recognize(sig, [0b001])
    with pytest.raises(ValidationError):
        recognize(sig, [])
    with pytest.raises(GuardError):
        materialize(whole_descriptor(Signature(21)))


@pytest.mark.parametrize("sig", signatures(4), ids=str)
def test_enumeration_matches_oracle(sig):
    t, closed = oracle(sig)
    descriptors = list(enumerate_closed(sig))
    structured = [materialize(d) for d in descriptors]
    assert len(set(structured)) == len(structured)
    assert set(structured) == set(closed)
    assert count_closed(sig) == len(closed)

    whole = tuple(range(t.n))
    scanned = {g for g in closed if is_strongly_normal(t, g, whole)}
    assert {materialize(d) for d in enumerate_closed(sig, strongly_normal=True)} == scanned
    assert count_strongly_normal(sig) == len(scanned)
    for d in descriptors:
        assert recognize(sig, materialize(d)) == d
        assert subset_stats(sig, materialize(d)) == d.stats


def test_counts():
    assert count_closed(Signature(4)) == 67
    assert count_closed(Signature(3, 0b001)) == 10
    assert count_strongly_normal(Signature(4, 0b1111)) == 1
    assert count_closed(Signature(0)) == 1
    assert count_closed_within((2, 2)) == 4 * 5
    assert count_strongly_normal_within((2, 2)) == 5


def test_count_closed_of_size():
    assert count_closed_of_size((2, 2), 3) == 5
    assert count_closed_of_size((2, 2), 0) == 1
    assert count_closed_of_size((2, 2), 5) == 0
    assert count_closed_of_size((1, 1), 1) == 2
    assert count_closed_of_size((0, 4), 2) == 35
    assert count_closed_of_size((3, 0), 2) == 3
    assert count_strongly_normal_of_size((1, 1), 0) == 0
    assert count_strongly_normal_of_size((1, 1), 1) == 1
    assert count_strongly_normal_of_size((1, 1), 2) == 1
    with pytest.raises(ValidationError):
        count_closed_of_size((1, 1), -1)
    sig = Signature(4, 0b0011)
    assert len(list(enumerate_closed(sig, size_exponent=3))) == 5


@pytest.mark.parametrize("sig", signatures(5), ids=str)
def test_sizes_match_enumeration(sig):
    sizes = Counter(d.size_exponent for d in enumerate_closed(sig))
    sn_sizes = Counter(d.size_exponent for d in enumerate_closed(sig, strongly_normal=True))
    for r in range(sig.p + 2):
        assert count_closed_of_size(sig.stats, r) == sizes[r]
        assert count_strongly_normal_of_size(sig.stats, r) == sn_sizes[r]
        assert len(list(enumerate_closed(sig, size_exponent=r))) == sizes[r]


@pytest.mark.parametrize("sig", signatures(4), ids=str)
def test_sizes_match_oracle(sig):
    _, closed = oracle(sig)
    sizes = Counter(len(g) for g in closed)
    for r in range(sig.p + 1):
        assert count_closed_of_size(sig.stats, r) == sizes[1 << r]


@pytest.mark.parametrize("sig", signatures(4), ids=str)
def test_iso_class_statistics(sig):
    p, p_sharp = sig.p, sig.p_sharp
    stats = iso_class_stats(sig)
    assert len(stats) == p * p_sharp - p_sharp**2 + p + 1
    assert len(stats) == num_iso_classes_within(sig.stats)
    partition = Counter(d.stats for d in enumerate_closed(sig))
    assert partition == Counter({(c.s, c.r2): c.cardinality for c in stats})
    sn_partition = Counter(d.stats for d in enumerate_closed(sig, strongly_normal=True))
    assert len(sn_partition) == num_strongly_normal_iso_classes(sig.stats)


def test_iso_class_stats_within():
    stats = iso_class_stats_within((1, 2))
    assert [(c.s, c.r2, c.cardinality) for c in stats] == [
        (0, 0, 1),
        (0, 1, 3),
        (0, 2, 1),
        (1, 0, 1),
        (1, 1, 3),
        (1, 2, 1),
    ]


@pytest.mark.parametrize("sig", signatures(3), ids=str)
def test_isomorphism_matches_oracle(sig):
    t, _ = oracle(sig)
    small = small_closed(sig)
    for g1, g2 in itertools.combinations_with_replacement(small, 2):
        d1, d2 = recognize(sig, g1), recognize(sig, g2)
        assert is_isomorphic(d1, d2) == brute_isomorphism_exists(t, g1, t, g2)
        witness = isomorphism_witness(d1, d2)
        if is_isomorphic(d1, d2):
            assert sorted(witness.values()) == list(g2)
            assert is_homomorphism(t, g1, t, g2, witness)
        else:
            assert witness is None


def test_isomorphism_witness_across_signatures():
    sig1, sig2 = Signature(3, 0b001), Signature(3, 0b100)
    d1, d2 = whole_descriptor(sig1), whole_descriptor(sig2)
    witness = isomorphism_witness(d1, d2)
    t1, _ = oracle(sig1)
    t2, _ = oracle(sig2)
    assert is_homomorphism(t1, materialize(d1), t2, materialize(d2), witness)
    assert brute_isomorphism_exists(t1, materialize(d1), t2, materialize(d2))


@pytest.mark.parametrize("sig", signatures(3), ids=str)
def test_automorphisms_match_oracle(sig):
    t, _ = oracle(sig)
    for g in small_closed(sig):
        d = recognize(sig, g)
        assert aut_descriptor(d).order == brute_automorphism_count(t, g)


def test_automorphism_orders_covered():
    orders = {
        aut_descriptor(recognize(sig, g)).order
        for sig in signatures(3)
        for g in small_closed(sig)
    }
    assert {1, 2, 6, 168} <= orders
    assert aut_descriptor(whole_descriptor(Signature(4, 0b1111))).order == 24
    assert aut_descriptor(whole_descriptor(Signature(3, 0b001))).order == 6


def test_aut_groups_isomorphic():
    trivial = [AutDescriptor(s, r2, 1) for s, r2 in [(0, 0), (0, 1), (1, 0), (1, 1)]]
    s3 = [AutDescriptor(s, r2, 6) for s, r2 in [(0, 2), (1, 2), (3, 0), (3, 1)]]
    for a, b in itertools.product(trivial, repeat=2):
        assert aut_groups_isomorphic(a, b)
    for a, b in itertools.product(s3, repeat=2):
        assert aut_groups_isomorphic(a, b)
    for a, b in itertools.product(trivial, s3):
        assert not aut_groups_isomorphic(a, b)
    assert all(is_aut_trivial(a) for a in trivial)
    assert all(is_aut_s3(a) for a in s3)
    assert not is_aut_s3(AutDescriptor(3, 2, 36))
    assert not aut_groups_isomorphic(AutDescriptor(2, 0, 2), AutDescriptor(1, 0, 1))
    assert aut_groups_isomorphic(AutDescriptor(2, 0, 2), AutDescriptor(2, 1, 2))
    # S_3 x S_3 only arises from (3, 2)
    assert not aut_groups_isomorphic(AutDescriptor(3, 2, 36), AutDescriptor(2, 2, 12))
    assert not aut_groups_isomorphic(AutDescriptor(0, 3, 168), AutDescriptor(4, 0, 24))
    assert is_aut_symmetric_product(AutDescriptor(5, 2, 720))
    assert not is_aut_symmetric_product(AutDescriptor(0, 3, 168))


@pytest.mark.parametrize("sig", signatures(3), ids=str)
def test_automorphisms_of_strongly_normal_subsets(sig):
    t, closed = oracle(sig)
    for g in closed:
        s = recognize(sig, g).s
        normal = [
            recognize(sig, f) for f in closed if set(f) <= set(g) and is_strongly_normal(t, f, g)
        ]
        for f in normal:
            aut = aut_descriptor(f)
            assert (aut.s, aut.r2) == (s, f.r2)
        for f1, f2 in itertools.combinations(normal, 2):
            same_group = aut_groups_isomorphic(aut_descriptor(f1), aut_descriptor(f2))
            if {f1.r2, f2.r2} == {0, 1}:
                # GL(0, 2) and GL(1, 2) are both trivial
                assert same_group
                assert not is_isomorphic(f1, f2)
            else:
                assert same_group == is_isomorphic(f1, f2), (str(f1), str(f2))


def test_equal_automorphism_groups_of_nonisomorphic_subsets():
    sig = Signature(3, 0b011)
    t, _ = oracle(sig)
    d0 = ClosedDescriptor.parse(sig, "A={1,2};F=[]")
    d1 = ClosedDescriptor.parse(sig, "A={1,2};F=[0b1]")
    assert brute_automorphism_count(t, materialize(d0)) == 2
    assert brute_automorphism_count(t, materialize(d1)) == 2
    assert aut_groups_isomorphic(aut_descriptor(d0), aut_descriptor(d1))
    assert not brute_isomorphism_exists(t, materialize(d0), t, materialize(d1))
    assert not is_isomorphic(d0, d1)


@pytest.mark.parametrize("sig", signatures(4), ids=str)
def test_basis_and_dimension(sig):
    t, _ = oracle(sig)
    for d in enumerate_closed(sig):
        basis = find_basis(d)
        assert len(basis) == dimension(d)
        assert generated_closed_subset(t, basis) == materialize(d)
        expected = 1 if d.thick_support and d.r2 == 0 else d.r2
        assert dimension(d) == expected


def test_basis_examples():
    sig = Signature(3, 0b001)
    assert find_basis(trivial_descriptor(sig)) == []
    assert find_basis(ClosedDescriptor.parse(sig, "A={1};F=[]")) == [0b001]
    assert find_basis(whole_descriptor(sig)) == [0b101, 0b010]
    assert dimension(whole_descriptor(Signature(3, 0b111))) == 1


@pytest.mark.parametrize("sig", signatures(4), ids=str)
def test_frattini_is_trivial(sig):
    t, closed = oracle(sig)
    for g in closed:
        assert frattini(t, g) == (0,)
        assert materialize(frattini_fast(recognize(sig, g))) == (0,)


@pytest.mark.parametrize("sig", signatures(3), ids=str)
def test_thin_series_predicates(sig):
    t, closed = oracle(sig)
    for g in closed:
        d = recognize(sig, g)
        assert is_residually_thin(t, g) == is_residually_thin_fast(d)
        assert is_nilpotent(t, g) == is_nilpotent_fast(d)


def test_two_element_thick_subset():
    d = ClosedDescriptor.parse(EXAMPLE, "A={2};F=[]")
    assert not is_residually_thin_fast(d)
    assert not is_nilpotent_fast(d)
    assert is_residually_thin_fast(thin_part_fast(whole_descriptor(EXAMPLE)))


def test_lattice_operations():
    sig = Signature(4, 0b0011)
    a = ClosedDescriptor.parse(sig, "A={1};F=[0b01]")
    b = ClosedDescriptor.parse(sig, "A={2};F=[0b10]")
    assert str(meet(a, b)) == "A={};F=[]"
    assert str(join(a, b)) == "A={1,2};F=[0b10,0b1]"
    assert is_subset(a, join(a, b))
    assert not is_subset(a, b)
    assert is_subset(meet(a, b), a)
    assert materialize(join(a, b)) == tuple(range(16))
    with pytest.raises(ValidationError):
        meet(a, trivial_descriptor(Signature(4)))


def test_strongly_normal_fast():
    whole = whole_descriptor(EXAMPLE)
    assert is_strongly_normal_fast(ClosedDescriptor.parse(EXAMPLE, "A={2};F=[]"), whole)
    assert not is_strongly_normal_fast(ClosedDescriptor.parse(EXAMPLE, "A={};F=[0b1]"), whole)
    assert str(strong_core_fast(whole)) == "A={2};F=[]"
    assert str(thin_part_fast(whole)) == "A={};F=[0b1]"


@pytest.mark.parametrize("sig", signatures(3), ids=str)
def test_maximal_closed_matches_oracle(sig):
    t, _ = oracle(sig)
    for d in enumerate_closed(sig):
        fast = sorted(materialize(m) for m in maximal_closed(d))
        assert fast == sorted(maximal_closed_subsets(t, materialize(d)))


def test_enumerate_guards():
    with pytest.raises(GuardError):
        next(enumerate_closed(Signature(15)))
    with pytest.raises(ValidationError):
        next(enumerate_closed(EXAMPLE, size_exponent=-1))
    assert list(enumerate_closed(EXAMPLE, size_exponent=7)) == []
    # thick generators do not count against the guard
    assert count_closed(Signature(40, (1 << 40) - 1)) == 1 << 40
    assert next(enumerate_closed(Signature(40, (1 << 40) - 1))) == trivial_descriptor(
        Signature(40, (1 << 40) - 1)
    )


if __name__ == "__main__":
    pytest.main(sys.argv)
