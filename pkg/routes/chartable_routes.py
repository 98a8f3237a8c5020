from fastapi import APIRouter, Query, status, Request
from fastapi.responses import JSONResponse
from config import ResourceCapExceeded
from models.jobs import JobSpec
from models.tables import CharacterTable
from services.jobs import run_job
from typing import Literal, Optional

chartable_router = APIRouter()

# READ - Spin character table
@chartable_router.get("/{group}", status_code=status.HTTP_200_OK, response_model=CharacterTable, response_class=JSONResponse)
def get_chartable(
    request: Request,
    group: Literal["sym", "alt", "wreath", "ntilde"],
    n: Optional[int] = Query(None, description="Degree n (sym, alt)"),
    p: Optional[int] = Query(None, description="Prime p"),
    t: Optional[int] = Query(None, description="Number of blocks t (wreath)"),
    cover: Literal["+", "-"] = Query("+", description="Cover with t_j^2 = 1 (+) or t_j^2 = z (-)"),
    side: Literal["sym", "alt"] = Query("sym", description="Whole group or its even part (wreath, ntilde)"),
    oracle: bool = Query(False, description="Compare against the Dixon and matrix oracles"),
    decimals: Optional[int] = Query(None, description="Digits of the decimal column")
):
    """
    Retrieve the spin character table of a double cover

    - **group**: sym, alt, wreath or ntilde
    - **n**: Degree of the symmetric group
    - **p**: Prime p
    - **t**: Number of blocks of N_p wr S_t
    - **cover**: + or -
    - **side**: sym or alt
    - **oracle**: Add the oracle differences
    - **decimals**: Add decimal approximations
    """
    try:
        spec = JobSpec(command="chartable", group=group, n=n, p=p, t=t, cover=cover, side=side,
                       oracle=oracle, decimals=decimals)
        return JSONResponse(content=run_job(spec), status_code=200)
    except ValueError as e:
        return JSONResponse(content={"message": str(e)}, status_code=400)
    except ResourceCapExceeded as e:
        return JSONResponse(content={"message": str(e)}, status_code=413)
    except Exception as e:
        return JSONResponse(content={"message": str(e)}, status_code=500)
