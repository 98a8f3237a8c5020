import logging
import os
from contextlib import contextmanager
from contextvars import ContextVar

from dotenv import load_dotenv

load_dotenv()

CACHE_DIR = os.getenv("SPIN_CACHE_DIR", ".spin_cache")
MAX_GROUP_ORDER = int(os.getenv("SPIN_MAX_GROUP_ORDER", "100000"))
MAX_CONDUCTOR = int(os.getenv("SPIN_MAX_CONDUCTOR", "5040"))
LOG_LEVEL = os.getenv("SPIN_LOG_LEVEL", "INFO")

# (max group order, max conductor) for the job running in this context
_caps: ContextVar[tuple[int, int]] = ContextVar("resource_caps", default=(MAX_GROUP_ORDER, MAX_CONDUCTOR))


class ResourceCapExceeded(RuntimeError):
    """Raised when a computation would exceed a configured resource cap"""


class VerificationError(AssertionError):
    """Raised when an internal cross-check between two computations disagrees"""


def active_caps() -> tuple[int, int]:
    return _caps.get()


def check_group_order(order: int, what: str = "group") -> None:
    """Refuse to use a group larger than the active group order cap"""
    cap = _caps.get()[0]
    if order > cap:
        raise ResourceCapExceeded(f"{what} of order {order} exceeds the group order cap {cap}")


def check_conductor(conductor: int) -> None:
    """Refuse cyclotomic conductors above the active conductor cap"""
    cap = _caps.get()[1]
    if conductor > cap:
        raise ResourceCapExceeded(f"conductor {conductor} exceeds the conductor cap {cap}")


@contextmanager
def resource_caps(max_group_order: int | None = None, max_conductor: int | None = None):
    """Override the caps for one job, visible only to the current thread or task"""
    order, conductor = _caps.get()
    token = _caps.set((max_group_order if max_group_order is not None else order,
                       max_conductor if max_conductor is not None else conductor))
    try:
        yield
    finally:
        _caps.reset(token)


def configure_logging(level: str | None = None) -> None:
    """Configure the root logger once for the CLI and the API"""
    logging.basicConfig(
        level=getattr(logging, (level or LOG_LEVEL).upper(), logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
