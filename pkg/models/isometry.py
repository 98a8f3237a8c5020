from pydantic import BaseModel, Field
from typing import Any, Optional, List

class BlockModel(BaseModel):
    p: int = Field(..., description="Prime p")
    n: int = Field(..., description="Degree n")
    core: List[int] = Field(..., description="p-bar core")
    weight: int = Field(..., description="Number of p-bars removed")
    side: str = Field(..., description="sym, alt or wreath")
    ambient: str = Field(..., description="sym or alt for wreath blocks")
    split: bool = Field(..., description="Weight zero block holding one member of an associate pair")
    variant: str = Field(..., description="+, - or empty")
    abelian_defect: bool = Field(..., description="Weight smaller than p")

class MapEntryModel(BaseModel):
    source: str = Field(..., description="Character of the source block")
    sign: int = Field(..., description="+1 or -1")
    target: str = Field(..., description="Character of the target block")

class Violation(BaseModel):
    kind: str = Field(..., description="isometry, integrality_source, integrality_target, vanishing or generalized")
    x: Optional[str] = Field(None, description="Source class")
    x_prime: Optional[str] = Field(None, description="Target class")
    value: Optional[str] = Field(None, description="Exact kernel value or inner product")
    detail: Optional[str] = Field(None, description="Human readable explanation")

class IsometryReport(BaseModel):
    p: int = Field(..., description="Prime p")
    n: int = Field(..., description="Degree n")
    core: List[int] = Field(..., description="p-bar core")
    weight: int = Field(..., description="Weight w")
    side: str = Field(..., description="sym or alt")
    cover: str = Field(..., description="+ or -")
    source: str = Field(..., description="Source group")
    target: str = Field(..., description="Target group")
    brauer: bool = Field(..., description="Target is the Brauer correspondent")
    pairs_checked: int = Field(..., description="Class pairs examined")
    violations: List[dict[str, Any]] = Field(..., description="Violating pairs with exact values")
    runtime: Optional[float] = Field(None, description="Seconds spent, only with --timing")
    mutations: Optional[List[dict[str, Any]]] = Field(None, description="Mutation harness results")
