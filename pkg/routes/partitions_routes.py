from fastapi import APIRouter, Query, status, Request
from fastapi.responses import JSONResponse
from models.jobs import JobSpec
from services.jobs import run_job
from typing import Literal

partitions_router = APIRouter()

# READ - Bar core, bar quotient or ordinary core of a partition
@partitions_router.get("/{operation}", status_code=status.HTTP_200_OK, response_class=JSONResponse)
def get_partition_data(
    request: Request,
    operation: Literal["barcore", "barquot", "core"],
    partition: str = Query(..., description="Partition, comma separated (e.g. '4,2')"),
    q: int = Query(..., description="Bar length (odd) or hook length")
):
    """
    Remove q-bars (or q-hooks) from a partition

    - **operation**: barcore, barquot or core
    - **partition**: Comma separated parts
    - **q**: Bar or hook length
    """
    try:
        spec = JobSpec(command=operation, partition=partition, p=q)
        return JSONResponse(content=run_job(spec), status_code=200)
    except ValueError as e:
        return JSONResponse(content={"message": str(e)}, status_code=400)
    except Exception as e:
        return JSONResponse(content={"message": str(e)}, status_code=500)
