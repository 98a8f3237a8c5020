import pytest
from fastapi.testclient import TestClient
from pymongo.errors import PyMongoError
from main import app
from database import client as mongo_client, test_collection
from services.reports import (
    create_report,
    delete_report,
    get_all_reports,
    get_report_by_id,
    get_reports_by_params,
    individual_serial,
)

# Create test client
client = TestClient(app)


@pytest.fixture(scope="module")
def mongo_available():
    """Skip the corpus tests when no MongoDB server answers"""
    try:
        mongo_client.admin.command("ping")
    except PyMongoError as e:
        pytest.skip(f"MongoDB not available: {e}")


@pytest.fixture(scope="function")
def setup_test_db(mongo_available):
    """Setup test database before each test and cleanup after"""
    # Clear test collection before each test
    test_collection.delete_many({})

    yield

    # Cleanup after test
    test_collection.delete_many({})


@pytest.fixture
def sample_report():
    """A passing isometry report"""
    return {"n": 3, "p": 3, "core": [], "weight": 1, "side": "sym", "cover": "+", "violations": []}


@pytest.fixture
def failing_report():
    """An isometry report with one violation"""
    return {"n": 4, "p": 3, "core": [1], "weight": 1, "side": "sym", "cover": "+",
            "violations": [{"kind": "vanishing", "x": "(3,1)", "x_prime": "(1|)", "value": "1"}]}


class TestSerialization:
    """Tests for converting MongoDB documents"""

    def test_individual_serial(self):
        """Test _id is replaced by report_id"""
        doc = {"_id": "abc", "n": 3}
        assert individual_serial(doc) == {"n": 3, "report_id": "abc"}

    def test_unknown_kind(self):
        """Test report kinds are checked"""
        with pytest.raises(ValueError):
            get_all_reports("tables")

    def test_invalid_id(self):
        """Test malformed ids are refused before any query"""
        with pytest.raises(ValueError) as exc:
            get_report_by_id("not-an-id")
        assert "not a valid report id" in str(exc.value)


class TestCorpus:
    """Tests for storing and querying reports"""

    def test_create_and_get(self, setup_test_db, sample_report):
        """Test a stored report can be read back by id"""
        stored = create_report(sample_report, collection=test_collection)
        assert stored["kind"] == "isometry"
        assert "created" in stored

        fetched = get_report_by_id(stored["report_id"], collection=test_collection)
        assert fetched["n"] == 3
        assert fetched["violations"] == []

    def test_get_all_empty(self, setup_test_db):
        """Test an empty corpus raises"""
        with pytest.raises(ValueError):
            get_all_reports(collection=test_collection)

    def test_filter_by_failure(self, setup_test_db, sample_report, failing_report):
        """Test the failed filter separates passing and failing reports"""
        create_report(sample_report, collection=test_collection)
        create_report(failing_report, collection=test_collection)

        failing = get_reports_by_params(failed=True, collection=test_collection)
        passing = get_reports_by_params(failed=False, collection=test_collection)
        assert [r["n"] for r in failing] == [4]
        assert [r["n"] for r in passing] == [3]

    def test_filter_by_params(self, setup_test_db, sample_report, failing_report):
        """Test filtering by n and p"""
        create_report(sample_report, collection=test_collection)
        create_report(failing_report, collection=test_collection)

        assert len(get_reports_by_params(p=3, collection=test_collection)) == 2
        with pytest.raises(ValueError):
            get_reports_by_params(n=9, collection=test_collection)

    def test_delete(self, setup_test_db, sample_report):
        """Test deleting a report and deleting it again"""
        stored = create_report(sample_report, collection=test_collection)

        assert delete_report(stored["report_id"], collection=test_collection) is True
        with pytest.raises(ValueError) as exc:
            delete_report(stored["report_id"], collection=test_collection)
        assert "not found" in str(exc.value)


class TestReportsRoutes:
    """Tests for the /reports/ endpoints"""

    def test_invalid_id(self):
        """Test GET /reports/{id} with a malformed id"""
        response = client.get("/reports/not-an-id")
        assert response.status_code == 400

    def test_unknown_kind(self):
        """Test the kind query parameter is validated"""
        response = client.get("/reports/", params={"kind": "tables"})
        assert response.status_code == 422

    def test_create_validation(self):
        """Test POST /reports/ without a report body"""
        response = client.post("/reports/", json={"kind": "isometry"})
        assert response.status_code == 422
