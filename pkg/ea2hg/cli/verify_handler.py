"""Cross-check the structured algorithms against the brute-force table oracle.

Every signature with p <= max_p is materialized as a table and each check
compares a formula or structured enumeration with the exhaustive answer.
Reports are buffered per signature and emitted in signature order.
"""

import itertools
import logging
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property, partial
from typing import Callable, List, Optional, TextIO, Tuple

from ea2hg.classify import (ClosedDescriptor, aut_descriptor, count_closed,
                            count_closed_of_size, count_strongly_normal,
                            count_strongly_normal_of_size, dimension,
                            enumerate_closed, find_basis, frattini_fast,
                            is_isomorphic, is_nilpotent_fast,
                            is_residually_thin_fast, is_strongly_normal_fast,
                            iso_class_stats, isomorphism_witness, materialize,
                            maximal_closed, num_iso_classes_within, recognize,
                            strong_core_fast, thin_part_fast,
                            whole_descriptor)
from ea2hg.cli.cli_args import RunConfig
from ea2hg.cli.common import emit
from ea2hg.cli.records import CheckRecord, SummaryRecord
from ea2hg.ea2_core import (TABLE_GUARD, ProductRule, Signature, multiply,
                            to_table)
from ea2hg.errors import check_guard
from ea2hg.hg_kernel import (MAP_SEARCH_GUARD, ElementSet, TableHypergroup,
                            brute_automorphism_count, brute_closed_subsets,
                            brute_isomorphism_exists,
                            commutator_closed_subset, frattini,
                            generated_closed_subset, is_homomorphism,
                            is_nilpotent, is_residually_thin,
                            is_strongly_normal, maximal_closed_subsets,
                            strong_core, thin_part, validate_axioms)

logger = logging.getLogger(__name__)

DEFAULT_MAX_P = 4


@dataclass
class OracleContext:
    sig: Signature
    table: TableHypergroup

    @cached_property
    def whole(self) -> ElementSet:
        return tuple(range(self.table.n))

    @cached_property
    def closed(self) -> List[ElementSet]:
        return brute_closed_subsets(self.table)

    @cached_property
    def strongly_normal(self) -> List[ElementSet]:
        return [g for g in self.closed if is_strongly_normal(self.table, g, self.whole)]

    @cached_property
    def descriptors(self) -> List[ClosedDescriptor]:
        return list(enumerate_closed(self.sig))

    @cached_property
    def small(self) -> List[ElementSet]:
        return [g for g in self.closed if len(g) <= MAP_SEARCH_GUARD]


CheckResult = Optional[str]


def check_axioms(ctx: OracleContext) -> CheckResult:
    report = validate_axioms(ctx.table)
    if report.passed:
        return None
    return "violated " + ", ".join(f"{tag} at {witness}" for tag, witness in report.violations)


def check_enumeration(ctx: OracleContext) -> CheckResult:
    structured = [materialize(d) for d in ctx.descriptors]
    if len(set(structured)) != len(structured):
        return "enumeration produced a closed subset twice"
    if set(structured) != set(ctx.closed):
        return f"{len(structured)} enumerated vs {len(ctx.closed)} by exhaustive scan"
    sn = [materialize(d) for d in enumerate_closed(ctx.sig, strongly_normal=True)]
    if set(sn) != set(ctx.strongly_normal):
        return f"{len(sn)} strongly normal enumerated vs {len(ctx.strongly_normal)} by scan"
    whole = whole_descriptor(ctx.sig)
    expected = set(ctx.strongly_normal)
    for d in ctx.descriptors:
        if is_strongly_normal_fast(d, whole) != (materialize(d) in expected):
            return f"strong normality of {d} disagrees"
    return None


def check_counts(ctx: OracleContext) -> CheckResult:
    if count_closed(ctx.sig) != len(ctx.closed):
        return f"count_closed {count_closed(ctx.sig)} != {len(ctx.closed)}"
    if count_strongly_normal(ctx.sig) != len(ctx.strongly_normal):
        return f"count_strongly_normal {count_strongly_normal(ctx.sig)} != {len(ctx.strongly_normal)}"
    sizes = Counter(len(g) for g in ctx.closed)
    sn_sizes = Counter(len(g) for g in ctx.strongly_normal)
    for r in range(ctx.sig.p + 2):
        if count_closed_of_size(ctx.sig.stats, r) != sizes[1 << r]:
            return f"count_closed_of_size(r={r}) != {sizes[1 << r]}"
        if count_strongly_normal_of_size(ctx.sig.stats, r) != sn_sizes[1 << r]:
            return f"count_strongly_normal_of_size(r={r}) != {sn_sizes[1 << r]}"
    return None


def check_classes(ctx: OracleContext) -> CheckResult:
    partition = Counter(recognize(ctx.sig, g).stats for g in ctx.closed)
    stats = {(c.s, c.r2): c.cardinality for c in iso_class_stats(ctx.sig)}
    if partition != Counter(stats):
        return f"class sizes {dict(partition)} != {stats}"
    p, p_sharp = ctx.sig.p, ctx.sig.p_sharp
    if num_iso_classes_within(ctx.sig.stats) != len(stats) or len(stats) != p * p_sharp - p_sharp**2 + p + 1:
        return f"{len(stats)} isomorphism classes"
    return None


def check_isomorphism(ctx: OracleContext) -> CheckResult:
    t = ctx.table
    for g1, g2 in itertools.combinations_with_replacement(ctx.small, 2):
        d1, d2 = recognize(ctx.sig, g1), recognize(ctx.sig, g2)
        fast = is_isomorphic(d1, d2)
        if fast != brute_isomorphism_exists(t, g1, t, g2):
            return f"is_isomorphic({d1}, {d2}) = {fast} disagrees with search"
        if fast and not is_homomorphism(t, g1, t, g2, isomorphism_witness(d1, d2)):
            return f"witness for ({d1}, {d2}) is not a homomorphism"
    return None


def check_automorphisms(ctx: OracleContext) -> CheckResult:
    for g in ctx.small:
        d = recognize(ctx.sig, g)
        order, brute = aut_descriptor(d).order, brute_automorphism_count(ctx.table, g)
        if order != brute:
            return f"|Aut({d})| = {order} but search found {brute}"
    return None


def check_lattice(ctx: OracleContext) -> CheckResult:
    t = ctx.table
    for g in ctx.closed:
        d = recognize(ctx.sig, g)
        if frattini(t, g) != (t.identity,) or materialize(frattini_fast(d)) != (t.identity,):
            return f"Frattini of {d} is not {{e}}"
        maximal = sorted(materialize(m) for m in maximal_closed(d))
        if maximal != sorted(maximal_closed_subsets(t, g)):
            return f"maximal closed subsets of {d} disagree"
        if thin_part(t, g) != materialize(thin_part_fast(d)):
            return f"thin part of {d} disagrees"
        if strong_core(t, g) != materialize(strong_core_fast(d)):
            return f"strong core of {d} disagrees"
    return None


def check_thin_series(ctx: OracleContext) -> CheckResult:
    t = ctx.table
    for g in ctx.closed:
        d = recognize(ctx.sig, g)
        if is_residually_thin(t, g) != is_residually_thin_fast(d):
            return f"residual thinness of {d} disagrees"
        if is_nilpotent(t, g) != is_nilpotent_fast(d):
            return f"nilpotency of {d} disagrees"
    return None


def check_commutator(ctx: OracleContext) -> CheckResult:
    t = ctx.table
    for g in ctx.closed:
        if commutator_closed_subset(t, g, g) != strong_core(t, g):
            return f"[G, G] of {recognize(ctx.sig, g)} is not its strong core"
    return None


def check_basis(ctx: OracleContext) -> CheckResult:
    t = ctx.table
    for d in ctx.descriptors:
        basis = find_basis(d)
        if len(basis) != dimension(d):
            return f"basis of {d} has {len(basis)} elements, dimension is {dimension(d)}"
        if generated_closed_subset(t, basis) != materialize(d):
            return f"basis {basis} does not generate {d}"
        for i in range(len(basis)):
            if generated_closed_subset(t, basis[:i] + basis[i + 1:]) == materialize(d):
                return f"basis {basis} of {d} is not minimal"
    return None


CHECKS: List[Tuple[str, Callable[[OracleContext], CheckResult]]] = [
    ("axioms", check_axioms),
    ("enumeration", check_enumeration),
    ("counts", check_counts),
    ("classes", check_classes),
    ("isomorphism", check_isomorphism),
    ("automorphisms", check_automorphisms),
    ("lattice", check_lattice),
    ("thin_series", check_thin_series),
    ("commutator", check_commutator),
    ("basis", check_basis),
]


def run_checks(sig: Signature, product: ProductRule = multiply) -> List[CheckRecord]:
    ctx = OracleContext(sig, to_table(sig, product))
    records = []
    for name, check in CHECKS:
        try:
            detail = check(ctx)
        except Exception as e:
            # an exception fails this check only
            detail = f"{type(e).__name__}: {e}"
        records.append(
            CheckRecord(signature=str(sig), check=name, passed=detail is None, detail=detail)
        )
    failures = sum(not r.passed for r in records)
    logger.info("verified %s: %d checks, %d failed", sig, len(records), failures)
    return records


def cmd_verify(
    config: RunConfig, out: Optional[TextIO] = None, product: ProductRule = multiply
) -> int:
    out = out or sys.stdout
    max_p = DEFAULT_MAX_P if config.max_p is None else config.max_p
    check_guard("verify: max_p", max_p, TABLE_GUARD)
    sigs = [sig for p in range(max_p + 1) for sig in Signature.all_of_rank(p)]
    num_workers = config.num_workers or 1

    if num_workers > 1:
        with ProcessPoolExecutor(max_workers=num_workers) as executor:
            reports = list(executor.map(partial(run_checks, product=product), sigs))
    else:
        reports = [run_checks(sig, product) for sig in sigs]

    num_checks = failures = 0
    for records in reports:
        for record in records:
            emit(record, config, out)
            num_checks += 1
            failures += not record.passed
    summary = SummaryRecord(
        signatures=len(sigs), checks=num_checks, failures=failures, passed=failures == 0
    )
    emit(summary, config, out)
    return 0 if failures == 0 else 1
