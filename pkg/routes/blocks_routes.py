from fastapi import APIRouter, Query, status, Request
from fastapi.responses import JSONResponse
from config import ResourceCapExceeded
from models.jobs import JobSpec
from services.jobs import run_job
from typing import Literal

blocks_router = APIRouter()

# READ - p-blocks of spin characters
@blocks_router.get("/", status_code=status.HTTP_200_OK, response_class=JSONResponse)
def get_blocks(
    request: Request,
    n: int = Query(..., description="Degree n"),
    p: int = Query(..., description="Odd prime p"),
    side: Literal["sym", "alt"] = Query("sym", description="Double cover of S_n or of A_n"),
    oracle: bool = Query(False, description="Also check C-blocks against bar-core blocks (sym only)")
):
    """
    Retrieve the blocks of spin characters with their members and Brauer data

    - **n**: Degree of the symmetric group
    - **p**: Odd prime
    - **side**: sym or alt
    - **oracle**: Add the C-block consistency check
    """
    try:
        spec = JobSpec(command="blocks", n=n, p=p, side=side, oracle=oracle)
        return JSONResponse(content=run_job(spec), status_code=200)
    except ValueError as e:
        return JSONResponse(content={"message": str(e)}, status_code=400)
    except ResourceCapExceeded as e:
        return JSONResponse(content={"message": str(e)}, status_code=413)
    except Exception as e:
        return JSONResponse(content={"message": str(e)}, status_code=500)
