"""Table-based finite hypergroups and exhaustive brute-force algorithms.

Nothing here knows about signatures or bitmask supports: a hypergroup is an
explicit hypermultiplication table over element indices 0..n-1. This is the
oracle the structured algorithms in ``ea2hg.classify`` are checked against,
so everything is computed by definition (fixed points, exhaustive scans,
backtracking) rather than by formula.

Internally subsets of H are int bitsets over element indices; the public
functions accept any iterable of indices and return ``ElementSet`` tuples
sorted ascending.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from ea2hg.errors import NotClosedError, ValidationError, check_guard

logger = logging.getLogger(__name__)

ElementSet = Tuple[int, ...]

SUBSET_SCAN_GUARD = 16
MAP_SEARCH_GUARD = 8


def _iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def _from_bits(bits: int) -> ElementSet:
    return tuple(_iter_bits(bits))


def _popcount(bits: int) -> int:
    return bin(bits).count("1")


class TableDocument(BaseModel):
    n: int
    identity: int
    star: List[int]
    table: List[List[List[int]]]


class TableHypergroup:
    def __init__(
        self,
        n: int,
        identity: int,
        star: Sequence[int],
        table: Sequence[Sequence[Iterable[int]]],
    ) -> None:
        if n < 1:
            raise ValidationError(f"table must have at least one element, got n={n}")
        if not 0 <= identity < n:
            raise ValidationError(f"identity {identity} out of range for n={n}")
        if len(star) != n or any(not 0 <= s < n for s in star):
            raise ValidationError(f"star must map {n} indices into [0, {n})")
        if len(table) != n or any(len(row) != n for row in table):
            raise ValidationError(f"table must be {n}x{n}")

        entries = []
        for i, row in enumerate(table):
            entry_row = []
            for j, entry in enumerate(row):
                entry = sorted(set(entry))
                if any(not 0 <= x < n for x in entry):
                    raise ValidationError(
                        f"table entry ({i}, {j}) has an index out of range: {entry}"
                    )
                entry_row.append(tuple(entry))
            entries.append(tuple(entry_row))

        self._n = n
        self._identity = identity
        self._star = tuple(star)
        self._table = tuple(entries)
        # bitset form of every product pq
        self._rows = [[sum(1 << x for x in entry) for entry in row] for row in entries]

    @property
    def n(self) -> int:
        return self._n

    @property
    def identity(self) -> int:
        return self._identity

    @property
    def star(self) -> Tuple[int, ...]:
        return self._star

    @property
    def table(self) -> Tuple[Tuple[ElementSet, ...], ...]:
        return self._table

    def product(self, p: int, q: int) -> ElementSet:
        return self._table[p][q]

    def to_document(self) -> TableDocument:
        return TableDocument(
            n=self._n,
            identity=self._identity,
            star=list(self._star),
            table=[[list(entry) for entry in row] for row in self._table],
        )

    def to_json(self) -> str:
        return self.to_document().model_dump_json()

    @classmethod
    def from_document(cls, doc: TableDocument) -> "TableHypergroup":
        return cls(doc.n, doc.identity, doc.star, doc.table)

    @classmethod
    def from_json(cls, text: str) -> "TableHypergroup":
        return cls.from_document(TableDocument.model_validate_json(text))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TableHypergroup):
            return NotImplemented
        return (self._identity, self._star, self._table) == (
            other._identity,
            other._star,
            other._table,
        )

    def __hash__(self) -> int:
        return hash((self._identity, self._star, self._table))

    def __repr__(self) -> str:
        return f"TableHypergroup(n={self._n}, identity={self._identity})"

    # ---- bitset primitives ----
    @property
    def _e(self) -> int:
        return 1 << self._identity

    def _bits(self, elements: Iterable[int]) -> int:
        bits = 0
        for x in elements:
            if not 0 <= x < self._n:
                raise ValidationError(f"element {x} out of range for n={self._n}")
            bits |= 1 << x
        return bits

    def _mul(self, left: int, right: int) -> int:
        result = 0
        rights = list(_iter_bits(right))
        for a in _iter_bits(left):
            row = self._rows[a]
            for b in rights:
                result |= row[b]
        return result

    def _star_of(self, bits: int) -> int:
        return sum(1 << self._star[x] for x in _iter_bits(bits))

    def _is_closed(self, bits: int) -> bool:
        members = list(_iter_bits(bits))
        for a in members:
            row = self._rows[self._star[a]]
            for b in members:
                if row[b] & ~bits:
                    return False
        return True

    def _closure(self, bits: int) -> int:
        bits |= self._star_of(bits) | self._e
        while True:
            grown = bits | self._mul(bits, bits)
            if grown == bits:
                return bits
            bits = grown

    def _require_closed(self, bits: int, what: str) -> None:
        if bits == 0:
            raise ValidationError(f"{what} must be nonempty")
        if not self._is_closed(bits):
            raise NotClosedError(f"{what} {_from_bits(bits)} is not a closed subset")

    def _is_strongly_normal(self, f: int, g: int) -> bool:
        for p in _iter_bits(g):
            conj = self._mul(self._mul(1 << self._star[p], f), 1 << p)
            if conj & ~f:
                return False
        return True

    @cached_property
    def closed_subset_bits(self) -> Tuple[int, ...]:
        """Every closed subset as a bitset, ascending; exhaustive scan."""
        check_guard("brute_closed_subsets: n", self._n, SUBSET_SCAN_GUARD)
        low = self._e - 1
        closed = []
        for rest in range(1 << (self._n - 1)):
            bits = ((rest & ~low) << 1) | self._e | (rest & low)
            if self._is_closed(bits):
                closed.append(bits)
        logger.debug("%r has %d closed subsets", self, len(closed))
        return tuple(closed)


@dataclass
class AxiomReport:
    violations: List[Tuple[str, Tuple[int, ...]]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def _flag(self, tag: str, witness: Tuple[int, ...]) -> None:
        # keep only the first witness per axiom
        if all(t != tag for t, _ in self.violations):
            self.violations.append((tag, witness))


def validate_axioms(t: TableHypergroup) -> AxiomReport:
    report = AxiomReport()
    n, e, star, rows = t.n, t.identity, t.star, t._rows
    elements = range(n)

    for p in elements:
        if star[star[p]] != p:
            report._flag("star", (p,))
        for q in elements:
            if rows[p][q] == 0:
                report._flag("nonempty", (p, q))

    for p in elements:
        if rows[e][p] != 1 << p or rows[p][e] != 1 << p:
            report._flag("H2", (e, p))
    for u in elements:
        if u != e and all(rows[u][p] == 1 << p == rows[p][u] for p in elements):
            report._flag("H2-unique", (u,))

    for p in elements:
        for q in elements:
            pq = rows[p][q]
            for r in elements:
                if t._mul(pq, 1 << r) != t._mul(1 << p, rows[q][r]):
                    report._flag("H1", (p, q, r))
                in_qr = rows[q][r] >> p & 1
                in_pr = rows[p][star[r]] >> q & 1
                in_qp = rows[star[q]][p] >> r & 1
                if not in_qr == in_pr == in_qp:
                    report._flag("H3", (p, q, r))

    if not report.passed:
        logger.info("%r violates %s", t, [tag for tag, _ in report.violations])
    return report


def product_sets(t: TableHypergroup, f: Iterable[int], g: Iterable[int]) -> ElementSet:
    return _from_bits(t._mul(t._bits(f), t._bits(g)))


def is_closed_subset(t: TableHypergroup, g: Iterable[int]) -> bool:
    bits = t._bits(g)
    if bits == 0:
        raise ValidationError("is_closed_subset: G must be nonempty")
    return t._is_closed(bits)


def brute_closed_subsets(t: TableHypergroup) -> List[ElementSet]:
    return [_from_bits(bits) for bits in t.closed_subset_bits]


def generated_closed_subset(t: TableHypergroup, s: Iterable[int]) -> ElementSet:
    return _from_bits(t._closure(t._bits(s)))


def thin_part(t: TableHypergroup, g: Iterable[int]) -> ElementSet:
    return tuple(p for p in _iter_bits(t._bits(g)) if t._rows[t.star[p]][p] == t._e)


def strong_core(t: TableHypergroup, g: Iterable[int]) -> ElementSet:
    bits = t._bits(g)
    t._require_closed(bits, "strong_core: G")
    squares = 0
    for p in _iter_bits(bits):
        squares |= t._rows[t.star[p]][p]
    return _from_bits(t._closure(squares))


def _closed_pair(t: TableHypergroup, f: Iterable[int], g: Iterable[int]) -> Tuple[int, int]:
    f_bits, g_bits = t._bits(f), t._bits(g)
    t._require_closed(f_bits, "F")
    t._require_closed(g_bits, "G")
    if f_bits & ~g_bits:
        raise ValidationError(f"F {_from_bits(f_bits)} is not contained in G {_from_bits(g_bits)}")
    return f_bits, g_bits


def is_strongly_normal(t: TableHypergroup, f: Iterable[int], g: Iterable[int]) -> bool:
    return t._is_strongly_normal(*_closed_pair(t, f, g))


def is_normal(t: TableHypergroup, f: Iterable[int], g: Iterable[int]) -> bool:
    f_bits, g_bits = _closed_pair(t, f, g)
    return all(t._mul(f_bits, 1 << p) == t._mul(1 << p, f_bits) for p in _iter_bits(g_bits))


def _commutator_bits(t: TableHypergroup, f: int, g: int) -> int:
    values = 0
    for b in _iter_bits(f):
        for c in _iter_bits(g):
            stars = t._rows[t.star[b]][t.star[c]]
            values |= t._mul(t._mul(stars, 1 << b), 1 << c)
    return t._closure(values)


def commutator_closed_subset(t: TableHypergroup, f: Iterable[int], g: Iterable[int]) -> ElementSet:
    return _from_bits(_commutator_bits(t, t._bits(f), t._bits(g)))


def is_residually_thin(t: TableHypergroup, g: Iterable[int]) -> bool:
    """Search for a chain {e} = F_1 < ... < F_k = G, each strongly normal in the next."""
    g_bits = t._bits(g)
    t._require_closed(g_bits, "is_residually_thin: G")
    closed = t.closed_subset_bits
    memo: Dict[int, bool] = {}

    def reachable(top: int) -> bool:
        if top == t._e:
            return True
        if top not in memo:
            memo[top] = any(
                f != top
                and not f & ~top
                and t._is_strongly_normal(f, top)
                and reachable(f)
                for f in closed
            )
        return memo[top]

    return reachable(g_bits)


def is_nilpotent(t: TableHypergroup, g: Iterable[int]) -> bool:
    g_bits = t._bits(g)
    t._require_closed(g_bits, "is_nilpotent: G")
    term = g_bits
    seen = set()
    while term != t._e:
        if term in seen:
            return False
        seen.add(term)
        term = _commutator_bits(t, term, g_bits)
    return True


def _maximal_bits(t: TableHypergroup, g_bits: int) -> List[int]:
    proper = [f for f in t.closed_subset_bits if f != g_bits and not f & ~g_bits]
    return [
        f for f in proper if not any(h != f and not f & ~h for h in proper)
    ]


def maximal_closed_subsets(t: TableHypergroup, g: Iterable[int]) -> List[ElementSet]:
    g_bits = t._bits(g)
    t._require_closed(g_bits, "maximal_closed_subsets: G")
    return [_from_bits(f) for f in _maximal_bits(t, g_bits)]


def frattini(t: TableHypergroup, g: Iterable[int]) -> ElementSet:
    g_bits = t._bits(g)
    t._require_closed(g_bits, "frattini: G")
    meet = g_bits
    maximal = _maximal_bits(t, g_bits)
    if not maximal:
        # {e} has no maximal closed subsets
        return (t.identity,)
    for f in maximal:
        meet &= f
    return _from_bits(meet)


def involutions(t: TableHypergroup) -> ElementSet:
    e = t._e
    return tuple(p for p in range(t.n) if p != t.identity and t._is_closed(e | 1 << p))


def is_commutative(t: TableHypergroup, g: Iterable[int]) -> bool:
    members = list(_iter_bits(t._bits(g)))
    return all(t._rows[p][q] == t._rows[q][p] for p in members for q in members)


# ---- homomorphisms ----
def is_homomorphism(
    t1: TableHypergroup,
    g1: Iterable[int],
    t2: TableHypergroup,
    g2: Iterable[int],
    alpha: Dict[int, int],
) -> bool:
    """True iff alpha maps G1 into G2 with e -> e and (pq)^alpha = p^alpha q^alpha."""
    dom = list(_iter_bits(t1._bits(g1)))
    cod = t2._bits(g2)
    if set(alpha) != set(dom) or any(not cod >> alpha[p] & 1 for p in dom):
        return False
    if alpha[t1.identity] != t2.identity:
        return False
    for p in dom:
        for q in dom:
            image = 0
            for z in _iter_bits(t1._rows[p][q]):
                if z not in alpha:
                    return False
                image |= 1 << alpha[z]
            if image != t2._rows[alpha[p]][alpha[q]]:
                return False
    return True


def _fingerprint(t: TableHypergroup, g_bits: int, p: int) -> Tuple[int, Tuple[int, ...]]:
    row = t._rows[p]
    return (
        _popcount(t._rows[t.star[p]][p]),
        tuple(sorted(_popcount(row[q]) for q in _iter_bits(g_bits))),
    )


def _isomorphisms(
    t1: TableHypergroup, g1: int, t2: TableHypergroup, g2: int
) -> Iterator[Dict[int, int]]:
    t1._require_closed(g1, "G1")
    t2._require_closed(g2, "G2")
    check_guard("isomorphism search: |G1|", _popcount(g1), MAP_SEARCH_GUARD)
    check_guard("isomorphism search: |G2|", _popcount(g2), MAP_SEARCH_GUARD)
    if _popcount(g1) != _popcount(g2):
        return

    prints1 = {p: _fingerprint(t1, g1, p) for p in _iter_bits(g1)}
    prints2 = {q: _fingerprint(t2, g2, q) for q in _iter_bits(g2)}
    if sorted(prints1.values()) != sorted(prints2.values()):
        return

    e1, e2 = t1.identity, t2.identity
    order = [e1] + sorted((p for p in prints1 if p != e1), key=lambda p: (prints1[p], p))
    alpha: Dict[int, int] = {}
    used = set()

    def consistent(p: int) -> bool:
        for q in alpha:
            for x, y in ((p, q), (q, p)):
                source = t1._rows[x][y]
                target = t2._rows[alpha[x]][alpha[y]]
                if _popcount(source) != _popcount(target):
                    return False
                for z in _iter_bits(source):
                    if z in alpha and not target >> alpha[z] & 1:
                        return False
        return True

    def extend(pos: int) -> Iterator[Dict[int, int]]:
        if pos == len(order):
            if is_homomorphism(t1, _iter_bits(g1), t2, _iter_bits(g2), alpha):
                yield dict(alpha)
            return
        p = order[pos]
        candidates = [e2] if p == e1 else [q for q in prints2 if prints2[q] == prints1[p]]
        for q in candidates:
            if q in used:
                continue
            alpha[p] = q
            used.add(q)
            if consistent(p):
                yield from extend(pos + 1)
            del alpha[p]
            used.discard(q)

    yield from extend(0)


def brute_isomorphism(
    t1: TableHypergroup, g1: Iterable[int], t2: TableHypergroup, g2: Iterable[int]
) -> Optional[Dict[int, int]]:
    return next(_isomorphisms(t1, t1._bits(g1), t2, t2._bits(g2)), None)


def brute_isomorphism_exists(
    t1: TableHypergroup, g1: Iterable[int], t2: TableHypergroup, g2: Iterable[int]
) -> bool:
    return brute_isomorphism(t1, g1, t2, g2) is not None


def brute_automorphism_count(t: TableHypergroup, g: Iterable[int]) -> int:
    bits = t._bits(g)
    return sum(1 for _ in _isomorphisms(t, bits, t, bits))
