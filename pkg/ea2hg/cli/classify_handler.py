import logging
import sys
from typing import Optional, TextIO

from ea2hg.classify import (aut_descriptor, aut_groups_isomorphic,
                            count_closed, count_closed_of_size,
                            count_strongly_normal,
                            count_strongly_normal_of_size, dimension,
                            enumerate_closed, find_basis, is_aut_s3,
                            is_aut_symmetric_product, is_aut_trivial,
                            is_isomorphic, iso_class_stats, materialize)
from ea2hg.cli.cli_args import RunConfig
from ea2hg.cli.common import descriptor_fields, emit, to_descriptors
from ea2hg.cli.records import (AutRecord, BasisRecord, CountRecord,
                               DescriptorRecord, IsoClassRecord, IsoRecord)
from ea2hg.ea2_core import TABLE_GUARD, format_element, to_table
from ea2hg.hg_kernel import MAP_SEARCH_GUARD, brute_isomorphism_exists

logger = logging.getLogger(__name__)


def cmd_enumerate(config: RunConfig, out: Optional[TextIO] = None) -> int:
    num_records = 0
    for d in enumerate_closed(config.signature, config.size, config.strongly_normal):
        emit(DescriptorRecord(**descriptor_fields(d)), config, out)
        num_records += 1
    logger.info("enumerated %d closed subsets of %s", num_records, config.signature)
    return 0


def cmd_count(config: RunConfig, out: Optional[TextIO] = None) -> int:
    sig = config.signature
    if config.size is None:
        count = count_strongly_normal(sig) if config.strongly_normal else count_closed(sig)
    elif config.strongly_normal:
        count = count_strongly_normal_of_size(sig.stats, config.size)
    else:
        count = count_closed_of_size(sig.stats, config.size)
    record = CountRecord(
        signature=str(sig),
        strongly_normal=config.strongly_normal,
        size_exponent=config.size,
        count=count,
    )
    emit(record, config, out)
    return 0


def cmd_classes(config: RunConfig, out: Optional[TextIO] = None) -> int:
    for stat in iso_class_stats(config.signature):
        record = IsoClassRecord(
            s=stat.s, r2=stat.r2, size=1 << (stat.s + stat.r2), cardinality=stat.cardinality
        )
        emit(record, config, out)
    return 0


def cmd_iso(config: RunConfig, out: Optional[TextIO] = None) -> int:
    sig = config.signature
    d1, d2 = to_descriptors(config)
    brute = None
    # the table oracle only runs on small inputs
    if sig.p <= TABLE_GUARD and 1 << max(d1.size_exponent, d2.size_exponent) <= MAP_SEARCH_GUARD:
        t = to_table(sig)
        brute = brute_isomorphism_exists(t, materialize(d1), t, materialize(d2))
    record = IsoRecord(
        first=str(d1),
        second=str(d2),
        isomorphic=is_isomorphic(d1, d2),
        brute_isomorphic=brute,
        aut_isomorphic=aut_groups_isomorphic(aut_descriptor(d1), aut_descriptor(d2)),
    )
    emit(record, config, out)
    return 0


def cmd_aut(config: RunConfig, out: Optional[TextIO] = None) -> int:
    d = to_descriptors(config)[0]
    a = aut_descriptor(d)
    record = AutRecord(
        descriptor=str(d),
        s=a.s,
        r2=a.r2,
        order=a.order,
        trivial=is_aut_trivial(a),
        s3=is_aut_s3(a),
        symmetric_product=is_aut_symmetric_product(a),
    )
    emit(record, config, out)
    return 0


def cmd_basis(config: RunConfig, out: Optional[TextIO] = None) -> int:
    d = to_descriptors(config)[0]
    record = BasisRecord(
        descriptor=str(d),
        basis=[format_element(x) for x in find_basis(d)],
        dimension=dimension(d),
    )
    emit(record, config, out)
    return 0
