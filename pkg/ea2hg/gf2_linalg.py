"""Exact GF(2) linear algebra over int bitmasks.

A vector is a plain ``int`` whose bit i is coordinate i. Subspaces are kept in
reduced row-echelon form with strictly decreasing pivots (the pivot of a row
is its highest set bit), which makes them canonical, hashable and cheap to
test for membership.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple

from ea2hg.errors import ValidationError, check_guard

logger = logging.getLogger(__name__)

Gf2Vector = int

MAX_WIDTH = 62
MEMBERS_GUARD = 20
ENUMERATION_GUARD = 14


def _reduce(rows: Iterable[int]) -> Tuple[int, ...]:
    # no width cap here: intersect() works in a doubled width
    pivots = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                break
            row ^= pivots[top]
    basis = [pivots[top] for top in sorted(pivots, reverse=True)]
    # clear every pivot column from the other rows
    for i, row in enumerate(basis):
        pivot = 1 << (row.bit_length() - 1)
        for j in range(len(basis)):
            if j != i and basis[j] & pivot:
                basis[j] ^= row
    return tuple(basis)


def check_width(width: int) -> None:
    if not 0 <= width <= MAX_WIDTH:
        raise ValidationError(f"width {width} outside [0, {MAX_WIDTH}]")


def check_vector(v: Gf2Vector, width: int) -> None:
    if not 0 <= v < (1 << width):
        raise ValidationError(f"vector {v:#b} does not fit width {width}")


@dataclass(frozen=True)
class Gf2Subspace:
    width: int
    basis: Tuple[Gf2Vector, ...] = ()

    def __post_init__(self) -> None:
        check_width(self.width)
        for v in self.basis:
            check_vector(v, self.width)
        if _reduce(self.basis) != tuple(self.basis):
            raise ValidationError(
                f"basis {[bin(v) for v in self.basis]} is not in reduced echelon form"
            )

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(v.bit_length() - 1 for v in self.basis)

    def __contains__(self, v: Gf2Vector) -> bool:
        return contains(self, v)

    def __len__(self) -> int:
        return 1 << self.dim


def zero_space(width: int) -> Gf2Subspace:
    return Gf2Subspace(width)


def full_space(width: int) -> Gf2Subspace:
    check_width(width)
    return Gf2Subspace(width, tuple(1 << i for i in reversed(range(width))))


def span(vectors: Iterable[Gf2Vector], width: int) -> Gf2Subspace:
    vectors = list(vectors)
    check_width(width)
    for v in vectors:
        if not 0 <= v < (1 << width):
            raise ValidationError(f"span: vector {v:#b} does not fit width {width}")
    return Gf2Subspace(width, _reduce(vectors))


def contains(space: Gf2Subspace, v: Gf2Vector) -> bool:
    if not 0 <= v < (1 << space.width):
        return False
    for row in space.basis:
        if v >> (row.bit_length() - 1) & 1:
            v ^= row
    return v == 0


def coordinates(space: Gf2Subspace, v: Gf2Vector) -> Tuple[int, ...]:
    """Coefficients of v against space.basis; raises if v is outside."""
    coeffs = []
    rest = v
    for row in space.basis:
        bit = rest >> (row.bit_length() - 1) & 1
        coeffs.append(bit)
        if bit:
            rest ^= row
    if rest:
        raise ValidationError(f"vector {v:#b} is not in the subspace")
    return tuple(coeffs)


def combine(space: Gf2Subspace, coeffs: Iterable[int]) -> Gf2Vector:
    v = 0
    for row, bit in zip(space.basis, coeffs):
        if bit:
            v ^= row
    return v


def _check_same_width(a: Gf2Subspace, b: Gf2Subspace) -> None:
    if a.width != b.width:
        raise ValidationError(f"width mismatch: {a.width} != {b.width}")


def is_subspace(a: Gf2Subspace, b: Gf2Subspace) -> bool:
    _check_same_width(a, b)
    return all(contains(b, v) for v in a.basis)


def sum_spaces(a: Gf2Subspace, b: Gf2Subspace) -> Gf2Subspace:
    _check_same_width(a, b)
    return Gf2Subspace(a.width, _reduce(a.basis + b.basis))


def intersect(a: Gf2Subspace, b: Gf2Subspace) -> Gf2Subspace:
    _check_same_width(a, b)
    n = a.width
    # Zassenhaus: reduce rows (u | u) and (w | 0); rows whose high half
    # vanishes carry a basis of the intersection in their low half.
    rows = [(u << n) | u for u in a.basis] + [w << n for w in b.basis]
    low = (1 << n) - 1
    common = [row & low for row in _reduce(rows) if row >> n == 0]
    return Gf2Subspace(n, _reduce(common))


def subspace_members(space: Gf2Subspace) -> List[Gf2Vector]:
    check_guard("subspace_members: dim", space.dim, MEMBERS_GUARD)
    # bit i of the combination index picks the row with the i-th smallest
    # pivot, so members come out in ascending numeric order
    rows = space.basis[::-1]
    members = [0]
    for row in rows:
        members += [m ^ row for m in members]
    return members


def hyperplanes(space: Gf2Subspace) -> Iterator[Gf2Subspace]:
    """Every codimension-1 subspace of space (none when space is zero)."""
    if space.dim == 0:
        return
    # hyperplanes are kernels of nonzero functionals on the basis coordinates
    for functional in range(1, 1 << space.dim):
        anchor = (functional & -functional).bit_length() - 1
        kernel = []
        for i, row in enumerate(space.basis):
            if i == anchor:
                continue
            if functional >> i & 1:
                kernel.append(row ^ space.basis[anchor])
            else:
                kernel.append(row)
        yield span(kernel, space.width)


def gaussian_binomial(n: int, k: int) -> int:
    """Number of k-dimensional subspaces of GF(2)^n."""
    if n < 0 or k < 0:
        raise ValidationError(f"gaussian_binomial: negative argument ({n}, {k})")
    if k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= (1 << (n - i)) - 1
        den *= (1 << (i + 1)) - 1
    return num // den


def gl2_order(r: int) -> int:
    """Order of GL(r, 2); GL(0, 2) is the trivial group."""
    if r < 0:
        raise ValidationError(f"gl2_order: negative degree {r}")
    order = 1
    for i in range(r):
        order *= (1 << r) - (1 << i)
    return order


def _echelon_bases(n: int, k: int) -> Iterator[Tuple[Gf2Vector, ...]]:
    for pivots in itertools.combinations(range(n - 1, -1, -1), k):
        pivot_set = set(pivots)
        # free entries of row i: non-pivot columns below its pivot
        free = [
            (i, col)
            for i, pivot in enumerate(pivots)
            for col in range(pivot)
            if col not in pivot_set
        ]
        for assignment in range(1 << len(free)):
            rows = [1 << pivot for pivot in pivots]
            for bit, (i, col) in enumerate(free):
                if assignment >> bit & 1:
                    rows[i] |= 1 << col
            yield tuple(rows)


def enumerate_subspaces(n: int, k: Optional[int] = None) -> Iterator[Gf2Subspace]:
    """Yield every subspace of GF(2)^n (or every k-dimensional one) once.

    Subspaces are produced dimension by dimension, then by pivot columns,
    then by the free entries of the echelon form.
    """
    if n < 0:
        raise ValidationError(f"enumerate_subspaces: negative n={n}")
    check_guard("enumerate_subspaces: n", n, ENUMERATION_GUARD)
    if k is not None and not 0 <= k <= n:
        raise ValidationError(f"enumerate_subspaces: k={k} outside [0, {n}]")
    dims = range(n + 1) if k is None else (k,)
    logger.debug("enumerating subspaces of GF(2)^%d, dims=%s", n, list(dims))
    for dim in dims:
        for basis in _echelon_bases(n, dim):
            yield Gf2Subspace(n, basis)
