from pydantic import BaseModel, Field, model_validator
from typing import Literal, Optional
from sympy import isprime

Command = Literal["classes", "chartable", "barcore", "barquot", "core", "blocks", "verify-isometry", "selftest", "golden"]
GroupKind = Literal["sym", "alt", "wreath", "ntilde"]

class JobSpec(BaseModel):
    command: Command = Field(..., description="Operation to run")
    group: Optional[GroupKind] = Field(None, description="Group family for classes and chartable")
    n: Optional[int] = Field(None, ge=1, le=30, description="Degree n of the double cover")
    p: Optional[int] = Field(None, ge=2, le=13, description="Prime p (or the bar length q for barcore/barquot/core)")
    t: Optional[int] = Field(None, ge=1, le=6, description="Number of blocks t of N_p wr S_t")
    core: Optional[str] = Field(None, description="p-bar core, comma separated; empty string for the empty core")
    partition: Optional[str] = Field(None, description="Partition, comma separated")
    cover: Literal["+", "-"] = Field("+", description="Double cover with t_j^2 = 1 (+) or t_j^2 = z (-)")
    side: Literal["sym", "alt"] = Field("sym", description="Symmetric or alternating side")
    format: Literal["json", "csv", "pretty"] = Field("json", description="Output format")
    oracle: bool = Field(False, description="Cross-check the table against the Dixon/matrix oracle")
    brauer: bool = Field(False, description="Compose the isometry with the Brauer correspondent")
    mutate: bool = Field(False, description="Run the mutation harness after verification")
    decimals: Optional[int] = Field(None, ge=1, le=30, description="Add a decimal column with this many digits")
    parallelism: int = Field(1, ge=1, le=64, description="Worker count; output does not depend on it")
    timing: bool = Field(False, description="Keep the runtime field in reports")
    max_group_order: Optional[int] = Field(None, ge=1, description="Override SPIN_MAX_GROUP_ORDER")
    max_conductor: Optional[int] = Field(None, ge=1, description="Override SPIN_MAX_CONDUCTOR")
    write: bool = Field(False, description="Regenerate the golden reports instead of checking them")
    directory: Optional[str] = Field(None, description="Golden report directory; SPIN_CACHE_DIR/golden when omitted")
    only: Optional[str] = Field(None, description="Comma separated golden job names")

    @model_validator(mode="after")
    def check_parameters(self):
        """Reject specs missing the parameters their command needs"""
        missing = [name for name in self._required() if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.command} needs {', '.join(missing)}")
        needs_prime = self.command in ("blocks", "verify-isometry") or self.group in ("wreath", "ntilde")
        if needs_prime and (self.p == 2 or not isprime(self.p)):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.command in ("barcore", "barquot") and self.p % 2 == 0:
            raise ValueError(f"bar length must be odd, got {self.p}")
        return self

    def _required(self) -> list[str]:
        if self.command in ("classes", "chartable"):
            if self.group is None:
                return ["group"]
            return {"sym": ["n"], "alt": ["n"], "wreath": ["p", "t"], "ntilde": ["p"]}[self.group]
        if self.command in ("barcore", "barquot", "core"):
            return ["partition", "p"]
        if self.command == "blocks":
            return ["n", "p"]
        if self.command == "verify-isometry":
            return ["n", "p", "core"]
        return []
