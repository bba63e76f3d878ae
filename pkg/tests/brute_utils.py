import itertools
from functools import lru_cache
from typing import Callable, List, Sequence, Tuple

from ea2hg.ea2_core import Signature, to_table
from ea2hg.gf2_linalg import span
from ea2hg.hg_kernel import ElementSet, TableHypergroup, brute_closed_subsets


def signatures(max_p: int, min_p: int = 0) -> List[Signature]:
    return [sig for p in range(min_p, max_p + 1) for sig in Signature.all_of_rank(p)]


@lru_cache(maxsize=None)
def oracle(sig: Signature) -> Tuple[TableHypergroup, List[ElementSet]]:
    """Table and exhaustive closed-subset list, shared across tests."""
    t = to_table(sig)
    return t, brute_closed_subsets(t)


def brute_gl2_order(r: int) -> int:
    # count r x r matrices whose rows span GF(2)^r
    vectors = range(1 << r)
    return sum(1 for rows in itertools.product(vectors, repeat=r) if span(rows, r).dim == r)


def group_table(elements: Sequence, op: Callable) -> TableHypergroup:
    """A group as a hypergroup with singleton products; elements[0] is the identity."""
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    table = [[[index[op(a, b)]] for b in elements] for a in elements]
    star = [next(j for j in range(n) if index[op(a, elements[j])] == 0) for a in elements]
    return TableHypergroup(n, 0, star, table)


def symmetric_group_table(degree: int) -> TableHypergroup:
    perms = list(itertools.permutations(range(degree)))
    return group_table(perms, lambda a, b: tuple(a[b[i]] for i in range(degree)))


def cyclic_group_table(n: int) -> TableHypergroup:
    return group_table(list(range(n)), lambda a, b: (a + b) % n)
