"""Line-delimited output records.

Field order is declaration order, so structured output is byte-stable. See
docs/record_schema.md for the schema.
"""

from typing import List, Literal, Optional

from pydantic import BaseModel


class DescriptorRecord(BaseModel):
    record: Literal["descriptor"] = "descriptor"
    descriptor: str
    thick_support: str
    thin_basis: List[str]
    s: int
    r2: int
    size: int
    aut_order: int

    def to_text(self) -> str:
        return f"{self.descriptor}  s={self.s} r2={self.r2} size={self.size} aut={self.aut_order}"


class CountRecord(BaseModel):
    record: Literal["count"] = "count"
    signature: str
    strongly_normal: bool
    size_exponent: Optional[int] = None
    count: int

    def to_text(self) -> str:
        return str(self.count)


class IsoClassRecord(BaseModel):
    record: Literal["iso_class"] = "iso_class"
    s: int
    r2: int
    size: int
    cardinality: int

    def to_text(self) -> str:
        return f"s={self.s} r2={self.r2} size={self.size} cardinality={self.cardinality}"


class IsoRecord(BaseModel):
    record: Literal["iso"] = "iso"
    first: str
    second: str
    isomorphic: bool
    brute_isomorphic: Optional[bool] = None
    aut_isomorphic: bool

    def to_text(self) -> str:
        brute = "skipped" if self.brute_isomorphic is None else str(self.brute_isomorphic).lower()
        return (
            f"isomorphic={str(self.isomorphic).lower()} brute={brute} "
            f"aut_isomorphic={str(self.aut_isomorphic).lower()}"
        )


class AutRecord(BaseModel):
    record: Literal["aut"] = "aut"
    descriptor: str
    s: int
    r2: int
    order: int
    trivial: bool
    s3: bool
    symmetric_product: bool

    def to_text(self) -> str:
        return f"{self.descriptor}  Aut = S_{self.s} x GL({self.r2},2)  order={self.order}"


class BasisRecord(BaseModel):
    record: Literal["basis"] = "basis"
    descriptor: str
    basis: List[str]
    dimension: int

    def to_text(self) -> str:
        return f"{self.descriptor}  basis=[{', '.join(self.basis)}] dimension={self.dimension}"


class CheckRecord(BaseModel):
    record: Literal["check"] = "check"
    signature: str
    check: str
    passed: bool
    detail: Optional[str] = None

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.signature} {self.check}"
        return f"{line}: {self.detail}" if self.detail else line


class SummaryRecord(BaseModel):
    record: Literal["summary"] = "summary"
    signatures: int
    checks: int
    failures: int
    passed: bool

    def to_text(self) -> str:
        status = "PASSED" if self.passed else "FAILED"
        return f"{status}: {self.checks} checks over {self.signatures} signatures, {self.failures} failures"
