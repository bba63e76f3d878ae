"""Elementary abelian 2-hypergroups given by a signature.

A signature (p, K) describes the constrained direct product of p two-element
closed subsets <q_1>, ..., <q_p>; generator q_{i+1} is thick iff bit i of K
is set. Every element is identified with its support mask (bit i set iff
q_{i+1} is in the support), so the identity is mask 0 and H has 2^p
elements.

Coordinatewise a thin generator squares to {e} and a thick one to {e, q};
multiplying coordinatewise gives the closed form used by ``multiply``.
"""

import logging
import re
from dataclasses import dataclass
from typing import Callable, Iterator, List, Tuple

from ea2hg.errors import ValidationError, check_guard
from ea2hg.gf2_linalg import Gf2Vector, span
from ea2hg.hg_kernel import ElementSet, TableHypergroup

logger = logging.getLogger(__name__)

Element = int
ProductRule = Callable[["Signature", Element, Element], ElementSet]

MAX_GENERATORS = 62
TABLE_GUARD = 4
ELEMENTS_GUARD = 20

_SIGNATURE_RE = re.compile(r"^p=(\d+)(?:,thick=([0-9,]*))?$")
_ELEMENT_RE = re.compile(r"^\{\s*([0-9,\s]*)\}$")


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _indices(text: str) -> List[int]:
    return [int(part) for part in text.split(",") if part.strip()]


@dataclass(frozen=True)
class Signature:
    p: int
    thick_mask: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.p <= MAX_GENERATORS:
            raise ValidationError(f"p={self.p} outside [0, {MAX_GENERATORS}]")
        if not 0 <= self.thick_mask < (1 << self.p):
            raise ValidationError(f"thick mask {self.thick_mask:#b} does not fit p={self.p}")

    @property
    def full_mask(self) -> int:
        return (1 << self.p) - 1

    @property
    def thin_mask(self) -> int:
        return self.full_mask & ~self.thick_mask

    @property
    def p_sharp(self) -> int:
        return _popcount(self.thick_mask)

    @property
    def num_thin(self) -> int:
        return self.p - self.p_sharp

    @property
    def thin_positions(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self.p) if self.thin_mask >> i & 1)

    @property
    def stats(self) -> Tuple[int, int]:
        """(s(H), r2(H)) = (p#, p - p#)."""
        return self.p_sharp, self.num_thin

    @classmethod
    def parse(cls, text: str) -> "Signature":
        match = _SIGNATURE_RE.match(text.replace(" ", ""))
        if match is None:
            raise ValidationError(f"malformed signature {text!r}, expected p=<int>,thick=<idx list>")
        p = int(match.group(1))
        thick = 0
        for index in _indices(match.group(2) or ""):
            if not 1 <= index <= p:
                raise ValidationError(f"thick index {index} outside [1, {p}]")
            thick |= 1 << (index - 1)
        return cls(p, thick)

    @classmethod
    def all_of_rank(cls, p: int) -> Iterator["Signature"]:
        """Every signature with p generators, thick masks ascending."""
        for thick in range(1 << p):
            yield cls(p, thick)

    def __str__(self) -> str:
        thick = ",".join(str(i + 1) for i in range(self.p) if self.thick_mask >> i & 1)
        return f"p={self.p},thick={thick}"


def check_element(sig: Signature, x: Element) -> None:
    if not 0 <= x < (1 << sig.p):
        raise ValidationError(f"element mask {x:#b} out of range for {sig}")


def format_element(x: Element) -> str:
    indices = []
    i = 1
    while x:
        if x & 1:
            indices.append(str(i))
        x >>= 1
        i += 1
    return "{" + ",".join(indices) + "}"


def parse_element(sig: Signature, text: str) -> Element:
    match = _ELEMENT_RE.match(text.strip())
    if match is None:
        raise ValidationError(f"malformed element {text!r}, expected {{i,j,...}}")
    x = 0
    for index in _indices(match.group(1)):
        if not 1 <= index <= sig.p:
            raise ValidationError(f"support index {index} outside [1, {sig.p}]")
        x |= 1 << (index - 1)
    return x


def elements(sig: Signature) -> Iterator[Element]:
    check_guard("elements: p", sig.p, ELEMENTS_GUARD)
    return iter(range(1 << sig.p))


def whole(sig: Signature) -> ElementSet:
    return tuple(elements(sig))


def multiply(sig: Signature, x: Element, y: Element) -> ElementSet:
    """The product xy = {U : D <= U <= D | M}, ascending.

    D is the symmetric difference of the supports and M the thick part of
    their intersection.
    """
    check_element(sig, x)
    check_element(sig, y)
    d = x ^ y
    m = x & y & sig.thick_mask
    # walk the submasks of m upwards
    products = []
    sub = 0
    while True:
        products.append(d | sub)
        if sub == m:
            break
        sub = (sub - m) & m
    return tuple(products)


def to_table(sig: Signature, product: ProductRule = multiply) -> TableHypergroup:
    """Materialize the 2^p x 2^p table; element index i is support mask i."""
    check_guard("to_table: p", sig.p, TABLE_GUARD)
    n = 1 << sig.p
    table = [[product(sig, x, y) for y in range(n)] for x in range(n)]
    logger.debug("materialized table for %s", sig)
    return TableHypergroup(n, 0, list(range(n)), table)


def plus_minus(sig: Signature, x: Element) -> Tuple[Element, Element]:
    """(x+, x-): the thick and the thin part of x, with x+ x- = {x}."""
    check_element(sig, x)
    return x & sig.thick_mask, x & sig.thin_mask


def s_of(sig: Signature, x: Element) -> int:
    check_element(sig, x)
    return _popcount(x & sig.thick_mask)


def thin_coordinates(sig: Signature, x: Element) -> Gf2Vector:
    """x- compressed onto the p - p# thin coordinates."""
    check_element(sig, x)
    v = 0
    for j, pos in enumerate(sig.thin_positions):
        if x >> pos & 1:
            v |= 1 << j
    return v


def embed_thin(sig: Signature, v: Gf2Vector) -> Element:
    if not 0 <= v < (1 << sig.num_thin):
        raise ValidationError(f"thin vector {v:#b} does not fit {sig.num_thin} thin coordinates")
    x = 0
    for j, pos in enumerate(sig.thin_positions):
        if v >> j & 1:
            x |= 1 << pos
    return x


def subset_stats(sig: Signature, g: ElementSet) -> Tuple[int, int]:
    """(s(G), r2(G)) for a closed subset G."""
    s = max((s_of(sig, x) for x in g), default=0)
    r2 = span((thin_coordinates(sig, x) for x in g), sig.num_thin).dim
    return s, r2
