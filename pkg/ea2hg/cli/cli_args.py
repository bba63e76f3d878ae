import argparse
from typing import List, Literal, Optional

import pydantic
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ea2hg.ea2_core import Signature
from ea2hg.errors import ValidationError

COMMANDS = ("table", "enumerate", "count", "iso", "aut", "classes", "basis", "verify")
SUBSET_COMMANDS = ("aut", "basis", "iso")
FILTER_COMMANDS = ("enumerate", "count")

Command = Literal["table", "enumerate", "count", "iso", "aut", "classes", "basis", "verify"]


class RunConfig(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    command: Command
    signature: Optional[Signature] = None
    size: Optional[int] = Field(default=None, ge=0)
    strongly_normal: bool = False
    subsets: List[str] = []
    output_format: Literal["text", "structured"] = "text"
    max_p: Optional[int] = Field(default=None, ge=0)
    num_workers: Optional[int] = Field(default=None, ge=1)
    log_level: Literal["debug", "info", "warning", "error"] = "warning"

    @field_validator("signature", mode="before")
    @classmethod
    def parse_signature(cls, value):
        if isinstance(value, str):
            return Signature.parse(value)
        return value

    @model_validator(mode="after")
    def check_flags(self) -> "RunConfig":
        command = self.command
        if command == "verify":
            if self.signature is not None:
                raise ValueError("verify sweeps every signature, --sig is not accepted")
        elif self.signature is None:
            raise ValueError(f"{command} requires --sig")
        if command != "verify" and (self.max_p is not None or self.num_workers is not None):
            raise ValueError("--max-p and --num-workers are only valid for verify")
        if command not in FILTER_COMMANDS and (self.size is not None or self.strongly_normal):
            raise ValueError("--size and --strongly-normal are only valid for enumerate and count")
        if command not in SUBSET_COMMANDS and self.subsets:
            raise ValueError("--subset is only valid for aut, basis and iso")
        if command == "iso" and len(self.subsets) != 2:
            raise ValueError("iso requires exactly two --subset descriptors")
        if command in ("aut", "basis") and len(self.subsets) > 1:
            raise ValueError(f"{command} takes at most one --subset descriptor")
        return self


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise ValidationError(f"{self.prog}: {message}")


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS lets the flags appear before or after the command
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--sig",
        type=str,
        default=argparse.SUPPRESS,
        help="Signature p=<int>,thick=<idx list>, e.g. p=2,thick=2.",
    )
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=["text", "structured"],
        default=argparse.SUPPRESS,
        help="Output format. Default is text.",
    )
    parser.add_argument(
        "--log-level",
        dest="log_level",
        choices=["debug", "info", "warning", "error"],
        default=argparse.SUPPRESS,
        help="Log level for diagnostics on stderr. Default is warning.",
    )
    return parser


def _command_flags() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--size",
        type=int,
        default=None,
        help="Only closed subsets with 2^size elements.",
    )
    parser.add_argument(
        "--strongly-normal",
        dest="strongly_normal",
        action="store_true",
        help="Only strongly normal closed subsets of H.",
    )
    parser.add_argument(
        "--subset",
        dest="subsets",
        action="append",
        default=[],
        help="Closed subset descriptor A={i,...};F=[mask,...]. Repeat twice for iso.",
    )
    parser.add_argument(
        "--max-p",
        dest="max_p",
        type=int,
        default=None,
        help="Largest number of generators swept by verify. Default is 4.",
    )
    parser.add_argument(
        "--num-workers",
        dest="num_workers",
        type=int,
        default=None,
        help="Worker processes for verify. Default is 1.",
    )
    return parser


def build_parser() -> argparse.ArgumentParser:
    global_flags = _global_flags()
    parser = _ArgumentParser(
        prog="ea2hg",
        description="Exact computations on elementary abelian 2-hypergroups.",
        parents=[global_flags],
    )
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)
    helps = {
        "table": "Print the hypermultiplication table (p <= 4).",
        "enumerate": "Stream every closed subset as a descriptor.",
        "count": "Count closed subsets by formula.",
        "iso": "Decide whether two closed subsets are isomorphic.",
        "aut": "Describe the automorphism group of a closed subset.",
        "classes": "List the isomorphism classes of closed subsets.",
        "basis": "Find a basis and the dimension of a closed subset.",
        "verify": "Cross-check every formula against the brute-force oracle.",
    }
    for command in COMMANDS:
        subparsers.add_parser(command, help=helps[command], parents=[global_flags, _command_flags()])
    return parser


def parse_args(argv: Optional[List[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    values = {k: v for k, v in vars(args).items() if v is not None}
    if "sig" in values:
        values["signature"] = values.pop("sig")
    try:
        return RunConfig(**values)
    except pydantic.ValidationError as e:
        error = e.errors()[0]
        raise ValidationError(error["msg"].removeprefix("Value error, ")) from None
