# state/semigroup_state.py
# Shared models and enums for semigroups, verification reports and code tables

from enum import Enum
from pathlib import Path
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator, model_validator

from semigroups.errors import InvalidFieldSizeError


class PointType(str, Enum):
    """Kind of point on the Suzuki curve"""
    RATIONAL = "rational"
    GENERIC = "generic"


class OutputFormat(str, Enum):
    """Serialization format for tables"""
    CSV = "csv"
    MARKDOWN = "markdown"
    JSON = "json"


class CliCommand(str, Enum):
    """Top-level CLI commands"""
    SEMIGROUP = "semigroup"
    VERIFY = "verify"
    FENGRAO = "fengrao"
    TABLE = "table"


class GeneratorKind(str, Enum):
    """The two generator families of the generic-point semigroup"""
    NU = "nu"
    MU = "mu"


class ThresholdCase(str, Enum):
    """Which closed form the admissibility threshold m_{j,k,l} takes"""
    A = "A"  # j = k = l = 0
    B = "B"  # m = j+k+l+1
    C = "C"  # m = j+k+l+2


class CheckId(str, Enum):
    """Identifiers of the structure checks, in report order"""
    F1_PAIRWISE_DISTINCT = "f1_pairwise_distinct"
    F1_BELOW_2G = "f1_below_2g"
    F2_COUNT = "f2_count"
    FAMILIES_DISJOINT = "families_disjoint"
    INTERVAL_COVERED = "interval_covered"
    NONGAP_COUNT = "nongap_count"
    GENERATORS_MATCH_FAMILIES = "generators_match_families"
    GENERATORS_MINIMAL = "generators_minimal"
    RATIONAL_SYMMETRIC = "rational_symmetric"
    GENERIC_NON_SYMMETRIC = "generic_non_symmetric"
    GENUS_IDENTITY = "genus_identity"
    F1_CASE_COUNTS = "f1_case_counts"
    F1_DECOMPOSITION = "f1_decomposition"
    DELTA_ZERO_GENERATORS = "delta_zero_generators"
    MINIMAL_SET_EQUALS_GENERATORS = "minimal_set_equals_generators"
    CONDUCTOR_BOUND = "conductor_bound"
    GENERATOR_SEPARATION = "generator_separation"


class SuzukiParams(BaseModel):
    """Parameters of the Suzuki curve S_q; only s is stored"""

    model_config = ConfigDict(frozen=True)

    s: int = Field(ge=1)

    @computed_field
    @property
    def q0(self) -> int:
        return 2 ** self.s

    @computed_field
    @property
    def q(self) -> int:
        return 2 * self.q0 ** 2

    @computed_field
    @property
    def genus_g(self) -> int:
        return self.q0 * (self.q - 1)

    @classmethod
    def from_q(cls, q: int) -> "SuzukiParams":
        """
        Build parameters from the field size

        Args:
            q: Field size, must equal 2 * 4^s with s >= 1

        Returns:
            SuzukiParams with the matching s

        Raises:
            InvalidFieldSizeError: q has the wrong shape
        """
        if q < 8 or q % 2:
            raise InvalidFieldSizeError(q)
        half = q // 2
        exponent = half.bit_length() - 1
        if half != 1 << exponent or exponent % 2:
            raise InvalidFieldSizeError(q)
        return cls(s=exponent // 2)


class F1Index(BaseModel):
    """Tuple (h, j, k, l) indexing n_{h,j,k,l} = hq - (l+2k)q0 - j"""

    model_config = ConfigDict(frozen=True)

    h: int = Field(ge=0)
    j: int = Field(ge=0)
    k: int = Field(ge=0)
    ell: int = Field(ge=0, le=1)


class GeneratorLabel(BaseModel):
    """One element of the minimal generating set, with its provenance"""

    model_config = ConfigDict(frozen=True)

    kind: GeneratorKind
    h: int = Field(ge=1)
    k: Optional[int] = None
    value: int = Field(ge=1)

    @property
    def name(self) -> str:
        if self.kind == GeneratorKind.NU:
            return f"nu_{{{self.h},{self.k}}}"
        return f"mu_{{{self.h}}}"


class CheckResult(BaseModel):
    """Outcome of a single structure check"""

    check_id: CheckId
    description: str
    expected: Union[bool, int, str]
    actual: Union[bool, int, str]
    passed: bool
    error: Optional[str] = None


class VerificationReport(BaseModel):
    """Flat list of check outcomes for one value of q"""

    q: int
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failed(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def get(self, check_id: CheckId) -> CheckResult:
        return next(check for check in self.checks if check.check_id == check_id)


class CodeRecord(BaseModel):
    """One row of the dual one-point code comparison"""

    model_config = ConfigDict(frozen=True)

    q: int
    ell: int = Field(ge=1)
    rho_ell: int = Field(ge=0)
    n: int = Field(ge=1)
    dim: int = Field(ge=1)
    d1: int = Field(ge=2)
    d2: int = Field(ge=2)

    @model_validator(mode="after")
    def _dimension_matches_index(self) -> "CodeRecord":
        if self.dim != self.n - self.ell:
            raise ValueError(f"dim {self.dim} != n - ell = {self.n - self.ell}")
        return self

    def as_row(self) -> Tuple[int, int, int, int, int]:
        return (self.rho_ell, self.n, self.dim, self.d1, self.d2)


class CodeComparison(BaseModel):
    """Records plus diagnostics from one comparison scan"""

    q: int
    n: int
    scan_limit: int
    records: List[CodeRecord] = Field(default_factory=list)
    # indices whose l-th non-gaps differ between the two semigroups
    mismatched_indices: int = 0
    # of those, the ones where the generic bound was larger
    suppressed_records: int = 0


class CliConfig(BaseModel):
    """Validated command line"""

    command: CliCommand
    q: int
    point: PointType = PointType.GENERIC
    ell: Optional[int] = Field(default=None, ge=1)
    format: OutputFormat = OutputFormat.CSV
    output: Optional[Path] = None
    length_override: Optional[int] = Field(default=None, ge=1)
    check: bool = False

    @field_validator("q")
    @classmethod
    def _q_has_suzuki_shape(cls, value: int) -> int:
        try:
            SuzukiParams.from_q(value)
        except InvalidFieldSizeError as exc:
            raise ValueError(str(exc)) from exc
        return value

    @property
    def params(self) -> SuzukiParams:
        return SuzukiParams.from_q(self.q)
