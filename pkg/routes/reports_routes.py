from fastapi import APIRouter, Query, status, Request
from fastapi.responses import JSONResponse
from models.reports import CreateReportRequest, StoredReport
from services.reports import (
    get_all_reports,
    get_report_by_id,
    get_reports_by_params,
    create_report,
    delete_report
)
from typing import Literal, Optional, List

reports_router = APIRouter()

# CREATE - Store a report in the regression corpus
@reports_router.post("/", status_code=status.HTTP_201_CREATED, response_model=StoredReport, response_class=JSONResponse)
def add_report(request: Request, payload: CreateReportRequest):
    """
    Store a verification report or a table summary

    - **kind**: isometry or table
    - **n**: Degree n
    - **p**: Prime p
    - **side**: sym or alt
    - **report**: Report body as returned by the CLI or the API
    """
    try:
        doc = dict(payload.report)
        for key in ("n", "p", "side"):
            if getattr(payload, key) is not None:
                doc[key] = getattr(payload, key)
        new_report = create_report(doc, payload.kind)
        return JSONResponse(content=new_report, status_code=201)
    except ValueError as e:
        return JSONResponse(content={"message": str(e)}, status_code=400)
    except Exception as e:
        return JSONResponse(content={"message": str(e)}, status_code=500)

# READ - Get all reports with optional filters
@reports_router.get("/", status_code=status.HTTP_200_OK, response_model=List[StoredReport], response_class=JSONResponse)
def get_reports(
    request: Request,
    kind: Literal["isometry", "table"] = Query("isometry", description="Corpus to read"),
    n: Optional[int] = Query(None, description="Filter by degree n"),
    p: Optional[int] = Query(None, description="Filter by prime p"),
    side: Optional[str] = Query(None, description="Filter by side (sym or alt)"),
    failed: Optional[bool] = Query(None, description="Only reports with (true) or without (false) violations")
):
    """
    Retrieve all reports with optional filters

    - **kind**: isometry or table
    - **n**: Filter by degree n
    - **p**: Filter by prime p
    - **side**: Filter by side
    - **failed**: Filter by presence of violations
    """
    try:
        if n is not None or p is not None or side or failed is not None:
            reports = get_reports_by_params(kind, n=n, p=p, side=side, failed=failed)
        else:
            reports = get_all_reports(kind)

        return JSONResponse(content=reports, status_code=200)
    except ValueError as e:
        return JSONResponse(content={"message": str(e)}, status_code=404 if "not found" in str(e) else 400)
    except Exception as e:
        return JSONResponse(content={"message": str(e)}, status_code=500)

# READ - Get a single report by ID
@reports_router.get("/{report_id}", status_code=status.HTTP_200_OK, response_model=StoredReport, response_class=JSONResponse)
def get_report(
    request: Request,
    report_id: str,
    kind: Literal["isometry", "table"] = Query("isometry", description="Corpus to read")
):
    """
    Retrieve a specific report by its ID

    - **report_id**: MongoDB ObjectId of the report
    """
    try:
        report = get_report_by_id(report_id, kind)

        return JSONResponse(content=report, status_code=200)
    except ValueError as e:
        return JSONResponse(content={"message": str(e)}, status_code=404 if "not found" in str(e) else 400)
    except Exception as e:
        return JSONResponse(content={"message": str(e)}, status_code=500)

# DELETE - Delete a report
@reports_router.delete("/{report_id}", status_code=status.HTTP_200_OK, response_model=dict, response_class=JSONResponse)
def remove_report(
    request: Request,
    report_id: str,
    kind: Literal["isometry", "table"] = Query("isometry", description="Corpus to delete from")
):
    """
    Delete a report by its ID

    - **report_id**: MongoDB ObjectId of the report to be deleted
    """
    try:
        success = delete_report(report_id, kind)

        return JSONResponse(content={"report_id": report_id, "was_deleted": success}, status_code=200)
    except ValueError as e:
        return JSONResponse(content={"message": str(e)}, status_code=404 if "not found" in str(e) else 400)
    except Exception as e:
        return JSONResponse(content={"message": str(e)}, status_code=500)
