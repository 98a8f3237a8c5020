from pydantic import BaseModel, Field
from typing import Optional, List

class ClassRow(BaseModel):
    label: str = Field(..., description="Class label: cycle type (or wreath type) plus split tag")
    size: int = Field(..., description="Number of elements in the class")
    centralizer: int = Field(..., description="Order of the centralizer of a representative")
    p_regular: bool = Field(..., description="Representative has order prime to p")

class CharacterRow(BaseModel):
    label: str = Field(..., description="Character label, e.g. (3,1)+")
    degree: str = Field(..., description="Value at the identity")
    values: List[str] = Field(..., description="Exact values, one per class")
    decimals: Optional[List[str]] = Field(None, description="Decimal approximations when requested")

class CharacterTable(BaseModel):
    schema_version: int = Field(..., description="Version of this JSON layout")
    group: str = Field(..., description="sym, alt, wreath or ntilde")
    cover: str = Field(..., description="+ or -")
    classes: List[ClassRow] = Field(..., description="Classes in stable order")
    characters: List[CharacterRow] = Field(..., description="Spin characters in stable order")
    diffs: Optional[List[str]] = Field(None, description="Oracle differences when --oracle is set")
