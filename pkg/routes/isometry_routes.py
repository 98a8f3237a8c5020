from fastapi import APIRouter, Query, status, Request
from fastapi.responses import JSONResponse
from config import ResourceCapExceeded
from models.isometry import IsometryReport
from models.jobs import JobSpec
from services.jobs import run_job
from typing import Literal

isometry_router = APIRouter()

# READ - Verify the perfect isometry of a block
@isometry_router.get("/", status_code=status.HTTP_200_OK, response_model=IsometryReport, response_class=JSONResponse)
def verify_isometry(
    request: Request,
    n: int = Query(..., description="Degree n"),
    p: int = Query(..., description="Odd prime p"),
    core: str = Query("", description="p-bar core, comma separated; empty for the empty core"),
    side: Literal["sym", "alt"] = Query("sym", description="Double cover of S_n or of A_n"),
    cover: Literal["+", "-"] = Query("+", description="Cover with t_j^2 = 1 (+) or t_j^2 = z (-)"),
    brauer: bool = Query(False, description="Compose with the Brauer correspondent"),
    mutate: bool = Query(False, description="Run the mutation harness")
):
    """
    Build the signed bijection of a block and check it on every class pair

    - **n**: Degree of the symmetric group
    - **p**: Odd prime
    - **core**: p-bar core of the block
    - **side**: sym or alt
    - **cover**: + or -
    - **brauer**: Use the Brauer correspondent as target
    - **mutate**: Flip each sign and swap each pair
    """
    try:
        spec = JobSpec(command="verify-isometry", n=n, p=p, core=core, side=side, cover=cover,
                       brauer=brauer, mutate=mutate)
        return JSONResponse(content=run_job(spec), status_code=200)
    except ValueError as e:
        return JSONResponse(content={"message": str(e)}, status_code=400)
    except ResourceCapExceeded as e:
        return JSONResponse(content={"message": str(e)}, status_code=413)
    except Exception as e:
        return JSONResponse(content={"message": str(e)}, status_code=500)
