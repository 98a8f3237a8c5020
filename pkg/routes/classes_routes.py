from fastapi import APIRouter, Query, status, Request
from fastapi.responses import JSONResponse
from config import ResourceCapExceeded
from models.jobs import JobSpec
from services.jobs import run_job
from typing import Literal, Optional

classes_router = APIRouter()

# READ - Conjugacy classes of a double cover
@classes_router.get("/{group}", status_code=status.HTTP_200_OK, response_class=JSONResponse)
def get_classes(
    request: Request,
    group: Literal["sym", "alt", "wreath", "ntilde"],
    n: Optional[int] = Query(None, description="Degree n (sym, alt)"),
    p: Optional[int] = Query(None, description="Prime p (wreath, ntilde) or the p-regularity flag (sym, alt)"),
    t: Optional[int] = Query(None, description="Number of blocks t (wreath)"),
    cover: Literal["+", "-"] = Query("+", description="Cover with t_j^2 = 1 (+) or t_j^2 = z (-)"),
    side: Literal["sym", "alt"] = Query("sym", description="Whole group or its even part (wreath, ntilde)")
):
    """
    Retrieve the classes of a double cover in stable order

    - **group**: sym, alt, wreath or ntilde
    - **n**: Degree of the symmetric group
    - **p**: Prime p
    - **t**: Number of blocks of N_p wr S_t
    - **cover**: + or -
    - **side**: sym or alt
    """
    try:
        spec = JobSpec(command="classes", group=group, n=n, p=p, t=t, cover=cover, side=side)
        return JSONResponse(content=run_job(spec), status_code=200)
    except ValueError as e:
        return JSONResponse(content={"message": str(e)}, status_code=400)
    except ResourceCapExceeded as e:
        return JSONResponse(content={"message": str(e)}, status_code=413)
    except Exception as e:
        return JSONResponse(content={"message": str(e)}, status_code=500)
