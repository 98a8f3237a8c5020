from pydantic import BaseModel, Field
from typing import Any, Literal, Optional

class StoredReport(BaseModel):
    report_id: str = Field(..., description="MongoDB document ID")
    kind: str = Field(..., description="isometry or table")
    created: str = Field(..., description="ISO timestamp of storage")

class CreateReportRequest(BaseModel):
    kind: Literal["isometry", "table"] = Field("isometry", description="Corpus the report belongs to")
    n: Optional[int] = Field(None, description="Degree n")
    p: Optional[int] = Field(None, description="Prime p")
    side: Optional[str] = Field(None, description="sym or alt")
    report: dict[str, Any] = Field(..., description="Report body as produced by the CLI or the API")
