import sys
from typing import List, Optional, TextIO

from pydantic import BaseModel

from ea2hg.classify import ClosedDescriptor, aut_descriptor, whole_descriptor
from ea2hg.cli.cli_args import RunConfig
from ea2hg.ea2_core import format_element


def jsonify_model(obj: BaseModel) -> str:
    return obj.model_dump_json()


def emit(record: BaseModel, config: RunConfig, out: Optional[TextIO] = None) -> None:
    out = out or sys.stdout
    if config.output_format == "structured":
        out.write(jsonify_model(record) + "\n")
    else:
        out.write(record.to_text() + "\n")


def to_descriptors(config: RunConfig) -> List[ClosedDescriptor]:
    """The --subset descriptors, or H itself when none were given."""
    if not config.subsets:
        return [whole_descriptor(config.signature)]
    return [ClosedDescriptor.parse(config.signature, text) for text in config.subsets]


def descriptor_fields(d: ClosedDescriptor) -> dict:
    return {
        "descriptor": str(d),
        "thick_support": format_element(d.thick_support),
        "thin_basis": [bin(v) for v in d.thin_subgroup.basis],
        "s": d.s,
        "r2": d.r2,
        "size": 1 << d.size_exponent,
        "aut_order": aut_descriptor(d).order,
    }
