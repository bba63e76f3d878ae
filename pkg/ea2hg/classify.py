"""Closed subsets of an elementary abelian 2-hypergroup, by formula.

Every closed subset G factors uniquely as <r>F where r is the thick element
whose support A is the union of the thick supports in G, and F is the set
of thin elements of G, a subgroup of the thin elements of H. A
``ClosedDescriptor`` stores exactly
(A, F) with F in canonical echelon form over the thin coordinates, so
descriptors are unique keys for closed subsets and all counting,
isomorphism and automorphism questions reduce to (s, r2) = (|A|, dim F).
"""

import logging
import math
import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from ea2hg.ea2_core import (Element, Signature, check_element, embed_thin,
                            format_element, thin_coordinates)
from ea2hg.errors import NotClosedError, ValidationError, check_guard
from ea2hg.gf2_linalg import (Gf2Subspace, combine, coordinates,
                              enumerate_subspaces, gaussian_binomial,
                              gl2_order, hyperplanes, intersect, is_subspace,
                              span, subspace_members, sum_spaces)
from ea2hg.hg_kernel import ElementSet

logger = logging.getLogger(__name__)

Stats = Tuple[int, int]

MATERIALIZE_GUARD = 20
ENUMERATE_GUARD = 14

_DESCRIPTOR_RE = re.compile(r"^A=\{([0-9,]*)\};F=\[([^\]]*)\]$")


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _submasks(mask: int) -> Iterator[int]:
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


@dataclass(frozen=True)
class ClosedDescriptor:
    sig: Signature
    thick_support: int
    thin_subgroup: Gf2Subspace

    def __post_init__(self) -> None:
        if self.thick_support & ~self.sig.thick_mask or self.thick_support < 0:
            raise ValidationError(
                f"thick support {format_element(self.thick_support)} is not inside the "
                f"thick generators of {self.sig}"
            )
        if self.thin_subgroup.width != self.sig.num_thin:
            raise ValidationError(
                f"thin subgroup width {self.thin_subgroup.width} != {self.sig.num_thin}"
            )

    @property
    def s(self) -> int:
        return _popcount(self.thick_support)

    @property
    def r2(self) -> int:
        return self.thin_subgroup.dim

    @property
    def stats(self) -> Stats:
        return self.s, self.r2

    @property
    def size_exponent(self) -> int:
        return self.s + self.r2

    @classmethod
    def parse(cls, sig: Signature, text: str) -> "ClosedDescriptor":
        match = _DESCRIPTOR_RE.match(text.replace(" ", ""))
        if match is None:
            raise ValidationError(f"malformed descriptor {text!r}, expected A={{i,...}};F=[mask,...]")
        thick = 0
        for part in match.group(1).split(","):
            if not part:
                continue
            index = int(part)
            if not 1 <= index <= sig.p:
                raise ValidationError(f"thick index {index} outside [1, {sig.p}]")
            thick |= 1 << (index - 1)
        try:
            masks = [int(part, 0) for part in match.group(2).split(",") if part]
        except ValueError:
            raise ValidationError(f"malformed thin basis in {text!r}") from None
        return cls(sig, thick, span(masks, sig.num_thin))

    def __str__(self) -> str:
        masks = ",".join(bin(v) for v in self.thin_subgroup.basis)
        return f"A={format_element(self.thick_support)};F=[{masks}]"


@dataclass(frozen=True)
class AutDescriptor:
    s: int
    r2: int
    order: int


@dataclass(frozen=True)
class IsoClassStat:
    s: int
    r2: int
    cardinality: int


def trivial_descriptor(sig: Signature) -> ClosedDescriptor:
    return ClosedDescriptor(sig, 0, Gf2Subspace(sig.num_thin))


def whole_descriptor(sig: Signature) -> ClosedDescriptor:
    return ClosedDescriptor(sig, sig.thick_mask, span((1 << j for j in range(sig.num_thin)), sig.num_thin))


# ---- descriptors <-> element sets ----
def materialize(d: ClosedDescriptor) -> ElementSet:
    check_guard("materialize: s+r2", d.size_exponent, MATERIALIZE_GUARD)
    thin = [embed_thin(d.sig, v) for v in subspace_members(d.thin_subgroup)]
    return tuple(sorted(a | x for a in _submasks(d.thick_support) for x in thin))


def recognize(sig: Signature, g: ElementSet) -> ClosedDescriptor:
    members = set(g)
    if not members:
        raise ValidationError("recognize: G must be nonempty")
    for x in members:
        check_element(sig, x)
    if 0 not in members:
        raise NotClosedError("recognize: G does not contain e")
    thick = 0
    for x in members:
        thick |= x & sig.thick_mask
    d = ClosedDescriptor(sig, thick, span((thin_coordinates(sig, x) for x in members), sig.num_thin))
    # a closed subset has exactly 2^(s+r2) elements
    if len(members) != 1 << d.size_exponent or set(materialize(d)) != members:
        raise NotClosedError(f"recognize: {sorted(members)} is not a closed subset of {sig}")
    return d


# ---- enumeration ----
def enumerate_closed(
    sig: Signature, size_exponent: Optional[int] = None, strongly_normal: bool = False
) -> Iterator[ClosedDescriptor]:
    """Yield every closed subset once, thick support ascending.

    With strongly_normal only A = K is produced; with size_exponent only
    subsets of 2^size_exponent elements.
    """
    check_guard("enumerate_closed: p-p#", sig.num_thin, ENUMERATE_GUARD)
    if size_exponent is not None and size_exponent < 0:
        raise ValidationError(f"size exponent {size_exponent} must be nonnegative")
    logger.debug("enumerating closed subsets of %s, size_exponent=%s", sig, size_exponent)
    supports = [sig.thick_mask] if strongly_normal else _submasks(sig.thick_mask)
    for thick in supports:
        k = None
        if size_exponent is not None:
            k = size_exponent - _popcount(thick)
            if not 0 <= k <= sig.num_thin:
                continue
        for space in enumerate_subspaces(sig.num_thin, k):
            yield ClosedDescriptor(sig, thick, space)


# ---- counting ----
def _subspace_total(n: int) -> int:
    return sum(gaussian_binomial(n, k) for k in range(n + 1))


def count_closed_within(stats: Stats) -> int:
    s, r2 = stats
    return (1 << s) * _subspace_total(r2)


def count_strongly_normal_within(stats: Stats) -> int:
    return _subspace_total(stats[1])


def count_closed(sig: Signature) -> int:
    return count_closed_within(sig.stats)


def count_strongly_normal(sig: Signature) -> int:
    return count_strongly_normal_within(sig.stats)


def count_closed_of_size(stats: Stats, r: int) -> int:
    """Closed subsets of 2^r elements inside a closed G with the given stats."""
    s, r2 = stats
    if r < 0:
        raise ValidationError(f"size exponent {r} must be nonnegative")
    if r > s + r2:
        return 0
    if r <= min(s, r2):
        lo, hi = 0, r
    elif s < r <= r2:
        lo, hi = 0, s
    elif r2 < r <= s:
        lo, hi = r - r2, r
    else:
        lo, hi = min(s, r - r2), max(s, r - r2)
    return sum(math.comb(s, t) * gaussian_binomial(r2, r - t) for t in range(lo, hi + 1))


def count_strongly_normal_of_size(stats: Stats, r: int) -> int:
    s, r2 = stats
    if r < 0:
        raise ValidationError(f"size exponent {r} must be nonnegative")
    if r < s:
        return 0
    return gaussian_binomial(r2, r - s)


# ---- isomorphism ----
def is_isomorphic(d1: ClosedDescriptor, d2: ClosedDescriptor) -> bool:
    # |G| = 2^(s+r2), so equal (s, r2) covers the size condition as well
    return d1.stats == d2.stats


def iso_class_stats_within(stats: Stats) -> List[IsoClassStat]:
    s, r2 = stats
    return [
        IsoClassStat(t, k, math.comb(s, t) * gaussian_binomial(r2, k))
        for t in range(s + 1)
        for k in range(r2 + 1)
    ]


def iso_class_stats(sig: Signature) -> List[IsoClassStat]:
    return iso_class_stats_within(sig.stats)


def num_iso_classes_within(stats: Stats) -> int:
    s, r2 = stats
    return s * r2 + s + r2 + 1


def num_strongly_normal_iso_classes(stats: Stats) -> int:
    return stats[1] + 1


def isomorphism_witness(d1: ClosedDescriptor, d2: ClosedDescriptor) -> Optional[Dict[Element, Element]]:
    """An explicit isomorphism materialize(d1) -> materialize(d2), or None.

    The thick generators of A1 go to those of A2 in index order and the
    echelon basis of F1 goes to that of F2; the element with parts (x+, x-)
    is sent to the element with the two images as parts.
    """
    if not is_isomorphic(d1, d2):
        return None
    sig1, sig2 = d1.sig, d2.sig
    thick_map = dict(zip(
        (i for i in range(sig1.p) if d1.thick_support >> i & 1),
        (i for i in range(sig2.p) if d2.thick_support >> i & 1),
    ))
    witness = {}
    for x in materialize(d1):
        image = 0
        for i, j in thick_map.items():
            if x >> i & 1:
                image |= 1 << j
        coeffs = coordinates(d1.thin_subgroup, thin_coordinates(sig1, x))
        image |= embed_thin(sig2, combine(d2.thin_subgroup, coeffs))
        witness[x] = image
    return witness


# ---- automorphism groups ----
def aut_descriptor(d: ClosedDescriptor) -> AutDescriptor:
    return AutDescriptor(d.s, d.r2, math.factorial(d.s) * gl2_order(d.r2))


def _aut_factors(a: AutDescriptor) -> List[Tuple[str, int]]:
    # nontrivial indecomposable direct factors of S_s x GL(r2, 2)
    factors = []
    if a.s >= 2:
        factors.append(("S", a.s))
    if a.r2 == 2:
        factors.append(("S", 3))
    elif a.r2 >= 3:
        factors.append(("GL", a.r2))
    return sorted(factors)


def aut_groups_isomorphic(a: AutDescriptor, b: AutDescriptor) -> bool:
    if (a.s, a.r2) == (b.s, b.r2):
        return True
    return _aut_factors(a) == _aut_factors(b)


def is_aut_trivial(a: AutDescriptor) -> bool:
    return not _aut_factors(a)


def is_aut_s3(a: AutDescriptor) -> bool:
    return _aut_factors(a) == [("S", 3)]


def is_aut_symmetric_product(a: AutDescriptor) -> bool:
    return a.r2 <= 2


# ---- bases, dimension and the thin/thick operators ----
def dimension(d: ClosedDescriptor) -> int:
    if d.thick_support and d.r2 == 0:
        return 1
    return d.r2


def find_basis(d: ClosedDescriptor) -> List[Element]:
    if d.r2 == 0:
        return [d.thick_support] if d.thick_support else []
    basis = [embed_thin(d.sig, f) for f in d.thin_subgroup.basis]
    # the whole thick support rides on the first thin vector
    basis[0] |= d.thick_support
    return basis


def thin_part_fast(d: ClosedDescriptor) -> ClosedDescriptor:
    return ClosedDescriptor(d.sig, 0, d.thin_subgroup)


def strong_core_fast(d: ClosedDescriptor) -> ClosedDescriptor:
    return ClosedDescriptor(d.sig, d.thick_support, Gf2Subspace(d.sig.num_thin))


def is_residually_thin_fast(d: ClosedDescriptor) -> bool:
    return d.thick_support == 0


def is_nilpotent_fast(d: ClosedDescriptor) -> bool:
    return d.thick_support == 0


def frattini_fast(d: ClosedDescriptor) -> ClosedDescriptor:
    return trivial_descriptor(d.sig)


# ---- lattice operations ----
def _check_same_signature(d1: ClosedDescriptor, d2: ClosedDescriptor) -> None:
    if d1.sig != d2.sig:
        raise ValidationError(f"descriptors over different signatures: {d1.sig} vs {d2.sig}")


def is_subset(d1: ClosedDescriptor, d2: ClosedDescriptor) -> bool:
    _check_same_signature(d1, d2)
    return not d1.thick_support & ~d2.thick_support and is_subspace(d1.thin_subgroup, d2.thin_subgroup)


def meet(d1: ClosedDescriptor, d2: ClosedDescriptor) -> ClosedDescriptor:
    _check_same_signature(d1, d2)
    return ClosedDescriptor(
        d1.sig, d1.thick_support & d2.thick_support, intersect(d1.thin_subgroup, d2.thin_subgroup)
    )


def join(d1: ClosedDescriptor, d2: ClosedDescriptor) -> ClosedDescriptor:
    _check_same_signature(d1, d2)
    return ClosedDescriptor(
        d1.sig, d1.thick_support | d2.thick_support, sum_spaces(d1.thin_subgroup, d2.thin_subgroup)
    )


def is_strongly_normal_fast(f: ClosedDescriptor, g: ClosedDescriptor) -> bool:
    """F is strongly normal in G iff F lies in G and contains the thick part of G."""
    return is_subset(f, g) and f.thick_support == g.thick_support


def maximal_closed(d: ClosedDescriptor) -> List[ClosedDescriptor]:
    maximal = []
    for i in range(d.sig.p):
        if d.thick_support >> i & 1:
            maximal.append(ClosedDescriptor(d.sig, d.thick_support & ~(1 << i), d.thin_subgroup))
    for plane in hyperplanes(d.thin_subgroup):
        maximal.append(ClosedDescriptor(d.sig, d.thick_support, plane))
    return maximal
