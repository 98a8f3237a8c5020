import pytest
from fastapi.testclient import TestClient
from main import app
from services.cyclo import parse

# Create test client
client = TestClient(app)


@pytest.fixture
def isometry_params():
    """Query for the principal 3-block of the double cover of S_3"""
    return {"n": 3, "p": 3, "core": ""}


class TestRoot:
    """Tests for GET / endpoint"""

    def test_welcome(self):
        """Test the welcome message"""
        response = client.get("/")
        assert response.status_code == 200
        assert response.json() == {"message": "Welcome to the Spin Isometry API"}


class TestClassesRoutes:
    """Tests for GET /classes/{group} endpoint"""

    def test_sym_classes(self):
        """Test the class list of the double cover of S_3"""
        response = client.get("/classes/sym", params={"n": 3})

        assert response.status_code == 200
        data = response.json()
        assert data["count"] == 6
        assert data["order"] == 12

    def test_ntilde_classes(self):
        """Test the classes of the double cover of N_5 add up to 40"""
        response = client.get("/classes/ntilde", params={"p": 5})

        assert response.status_code == 200
        assert response.json()["order"] == 40

    def test_missing_parameter(self):
        """Test wreath classes without t"""
        response = client.get("/classes/wreath", params={"p": 3})

        assert response.status_code == 400
        assert "needs t" in response.json()["message"]

    def test_out_of_range(self):
        """Test n beyond the accepted range"""
        response = client.get("/classes/sym", params={"n": 40})
        assert response.status_code == 400

    def test_unknown_group(self):
        """Test an unknown group family"""
        response = client.get("/classes/dihedral", params={"n": 3})
        assert response.status_code == 422


class TestChartableRoutes:
    """Tests for GET /chartable/{group} endpoint"""

    def test_sym_degrees(self):
        """Test the degrees of the double cover of S_5"""
        response = client.get("/chartable/sym", params={"n": 5})

        assert response.status_code == 200
        degrees = [parse(row["degree"]) for row in response.json()["characters"]]
        assert degrees == [4, 6, 6, 4, 4]

    def test_ntilde(self):
        """Test the three spin characters of the double cover of N_3"""
        response = client.get("/chartable/ntilde", params={"p": 3})

        assert response.status_code == 200
        data = response.json()
        assert len(data["characters"]) == 3
        assert data["group"] == "ntilde"

    def test_wreath_with_oracle(self):
        """Test the oracle comparison through the API"""
        response = client.get("/chartable/wreath", params={"p": 3, "t": 1, "oracle": True})

        assert response.status_code == 200
        assert response.json()["diffs"] == []

    def test_composite_p(self):
        """Test p must be an odd prime for wreath tables"""
        response = client.get("/chartable/wreath", params={"p": 9, "t": 1})
        assert response.status_code == 400


class TestPartitionsRoutes:
    """Tests for GET /partitions/{operation} endpoint"""

    def test_barcore(self):
        """Test (4,2) has empty 3-bar core"""
        response = client.get("/partitions/barcore", params={"partition": "4,2", "q": 3})

        assert response.status_code == 200
        data = response.json()
        assert data["core"] == []
        assert data["weight"] == 2

    def test_barquot(self):
        """Test the 5-bar quotient of (2,1) is empty"""
        response = client.get("/partitions/barquot", params={"partition": "2,1", "q": 5})

        assert response.status_code == 200
        data = response.json()
        assert data["core"] == [2, 1]
        assert data["weight"] == 0

    def test_bad_partition(self):
        """Test a malformed partition"""
        response = client.get("/partitions/core", params={"partition": "x", "q": 3})
        assert response.status_code == 400

    def test_missing_q(self):
        """Test q is required"""
        response = client.get("/partitions/barcore", params={"partition": "4,2"})
        assert response.status_code == 422


class TestBlocksRoutes:
    """Tests for GET /blocks/ endpoint"""

    def test_blocks(self):
        """Test the blocks of the double cover of S_5 at p = 5"""
        response = client.get("/blocks/", params={"n": 5, "p": 5})

        assert response.status_code == 200
        blocks = response.json()["blocks"]
        weights = sorted(b["block"]["weight"] for b in blocks)
        assert weights[-1] == 1

    def test_even_p(self):
        """Test p = 2 is refused"""
        response = client.get("/blocks/", params={"n": 5, "p": 2})
        assert response.status_code == 400


class TestIsometryRoutes:
    """Tests for GET /isometry/ endpoint"""

    def test_verify(self, isometry_params):
        """Test the principal 3-block of n = 3 passes"""
        response = client.get("/isometry/", params=isometry_params)

        assert response.status_code == 200
        data = response.json()
        assert data["violations"] == []
        assert data["weight"] == 1

    def test_alt_side(self, isometry_params):
        """Test I_A through the API"""
        response = client.get("/isometry/", params={**isometry_params, "side": "alt"})

        assert response.status_code == 200
        assert response.json()["violations"] == []

    def test_invalid_core(self):
        """Test (2,1) is not a 3-bar core"""
        response = client.get("/isometry/", params={"n": 6, "p": 3, "core": "2,1"})

        assert response.status_code == 400
        assert "bar core" in response.json()["message"]
