"""Regression corpus of verification reports and table summaries in MongoDB"""
import logging
from datetime import datetime, timezone
from typing import Optional

from bson import ObjectId
from bson.errors import InvalidId

from database import isometry_reports, table_summaries

logger = logging.getLogger(__name__)

KINDS = {"isometry": isometry_reports, "table": table_summaries}


def _collection(kind: str, collection=None):
    if collection is not None:
        return collection
    if kind not in KINDS:
        raise ValueError(f"report kind must be one of {sorted(KINDS)}, got '{kind}'")
    return KINDS[kind]


def _object_id(report_id: str) -> ObjectId:
    try:
        return ObjectId(report_id)
    except (InvalidId, TypeError):
        raise ValueError(f"'{report_id}' is not a valid report id")


def individual_serial(report) -> dict:
    """Convert a MongoDB document to a dictionary and return it"""
    out = {key: value for key, value in report.items() if key != "_id"}
    out["report_id"] = str(report["_id"])
    return out


def list_serial(report_list) -> list[dict]:
    """Serialize a list of report documents"""
    return [individual_serial(report) for report in report_list]


def create_report(report: dict, kind: str = "isometry", collection=None) -> dict:
    """Store a report in the corpus"""
    target = _collection(kind, collection)
    doc = dict(report)
    doc["kind"] = kind
    doc.setdefault("created", datetime.now(timezone.utc).isoformat())
    result = target.insert_one(doc)

    if result is None:
        raise ValueError("Error storing report")

    doc["_id"] = result.inserted_id
    logger.info("stored %s report %s", kind, result.inserted_id)
    return individual_serial(doc)


def get_all_reports(kind: str = "isometry", collection=None) -> list[dict]:
    """Retrieve every report of one kind"""
    target = _collection(kind, collection)
    if target.count_documents({}) == 0:
        raise ValueError(f"No {kind} reports found")
    return list_serial(target.find({}).sort("created", 1))


def get_report_by_id(report_id: str, kind: str = "isometry", collection=None) -> dict:
    """Retrieve a single report by ID"""
    report = _collection(kind, collection).find_one({"_id": _object_id(report_id)})

    if report is None:
        raise ValueError(f"Report with id: {report_id} not found")

    return individual_serial(report)


def get_reports_by_params(
    kind: str = "isometry",
    n: Optional[int] = None,
    p: Optional[int] = None,
    side: Optional[str] = None,
    failed: Optional[bool] = None,
    collection=None,
) -> list[dict]:
    """Retrieve reports matching the given parameters"""
    query: dict = {}
    if n is not None:
        query["n"] = n
    if p is not None:
        query["p"] = p
    if side:
        query["side"] = side
    if failed is not None:
        query["violations.0"] = {"$exists": failed}

    target = _collection(kind, collection)
    if target.count_documents(query) == 0:
        raise ValueError("No reports found with the given parameters")

    return list_serial(target.find(query).sort("created", 1))


def delete_report(report_id: str, kind: str = "isometry", collection=None) -> bool:
    """Delete a report by ID"""
    result = _collection(kind, collection).delete_one({"_id": _object_id(report_id)})

    if result.deleted_count == 0:
        raise ValueError(f"Report with id: {report_id} not found")

    logger.info("deleted %s report %s", kind, report_id)
    return result.deleted_count > 0
