"""HTTP facade: endpoints, validation behavior, parity with the library."""

import json

import pytest
from fastapi.testclient import TestClient

from helpers import CONTINUED_TABLE_EXPECTED, PRETRAIN_TABLE_EXPECTED, cells_match
from llmplan.api import create_app
from llmplan.engine import Mode, Scenario, TokenSource, estimate


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app(ui_dir="/nonexistent"))


def scratch_body(params=65e9, **overrides):
    body = {
        "mode": "from_scratch",
        "params": params,
        "token_source": {"type": "chinchilla_optimal"},
    }
    body.update(overrides)
    return body


class TestConstants:
    def test_published_values(self, client):
        payload = client.get("/api/v1/constants").json()
        assert payload["a100_flops_per_hour"] == 5.35701e17
        assert payload["default_tokens_per_gb"] == 3.5e8
        assert payload["dev_multiplier"] == 5.14
        assert payload["chinchilla_slope"] == 0.9606
        assert payload["chinchilla_intercept"] == 0.8981
        assert payload["flops_factor"] == 6.0
        assert payload["price_reserved_usd_per_hour"] == 3.0
        assert payload["price_on_demand_usd_per_hour"] == 5.0

    def test_stateless_identical_bodies(self, client):
        first = client.get("/api/v1/constants")
        second = client.get("/api/v1/constants")
        assert first.content == second.content


class TestEstimate:
    def test_65b_from_scratch(self, client):
        response = client.post("/api/v1/estimate", json=scratch_body())
        assert response.status_code == 200
        payload = response.json()
        assert payload["usd_display"] == "$3.4M"
        assert payload["time_display"] == "129.1 years"
        assert payload["dataset_display"] == "4.4TB"

    def test_65b_continued_500gb(self, client):
        body = {
            "mode": "continued_pretrain",
            "params": 65e9,
            "token_source": {"type": "from_disk", "gb": 500.0},
        }
        payload = client.post("/api/v1/estimate", json=body).json()
        assert payload["usd_display"] == "$382.2K"

    def test_epochs_below_one_is_400(self, client):
        response = client.post("/api/v1/estimate", json=scratch_body(epochs=0.5))
        assert response.status_code == 400
        errors = response.json()["errors"]
        assert any("epochs" in e["field"] for e in errors)

    def test_chinchilla_plus_continued_is_422(self, client):
        body = scratch_body()
        body["mode"] = "continued_pretrain"
        response = client.post("/api/v1/estimate", json=body)
        assert response.status_code == 422
        assert response.json()["errors"]

    def test_unknown_field_rejected(self, client):
        body = scratch_body(gpu_hours=12)
        response = client.post("/api/v1/estimate", json=body)
        assert response.status_code == 400
        assert any("gpu_hours" in e["field"] for e in response.json()["errors"])

    def test_missing_required_field(self, client):
        response = client.post("/api/v1/estimate", json={"mode": "from_scratch"})
        assert response.status_code == 400
        assert any(e["field"] == "params" for e in response.json()["errors"])

    def test_source_field_errors(self, client):
        body = scratch_body(token_source={"type": "explicit"})
        response = client.post("/api/v1/estimate", json=body)
        assert response.status_code == 400
        assert any("token_source" in e["field"] for e in response.json()["errors"])

    def test_custom_plan(self, client):
        body = scratch_body(plan={"type": "custom", "rate": 1.5})
        payload = client.post("/api/v1/estimate", json=body).json()
        base = client.post("/api/v1/estimate", json=scratch_body()).json()
        assert payload["usd"] == pytest.approx(base["usd"] / 2, rel=1e-12)

    def test_unknown_gpu_name(self, client):
        response = client.post("/api/v1/estimate", json=scratch_body(gpu="TPU v5"))
        assert response.status_code == 400
        assert any(e["field"] == "gpu" for e in response.json()["errors"])

    def test_numeric_parity_with_library(self, client):
        payload = client.post("/api/v1/estimate", json=scratch_body(13e9)).json()
        expected = estimate(Scenario(Mode.FROM_SCRATCH, 13e9, TokenSource.chinchilla()))
        assert payload["tokens"] == expected.tokens
        assert payload["flops"] == expected.flops
        assert payload["gpu_hours"] == expected.gpu_hours
        assert payload["usd"] == expected.usd
        assert payload["project_usd"] == expected.project_usd


class TestSweep:
    def test_model_sweep_matches_pretrain_table(self, client):
        body = {
            "base": scratch_body(1.5e9),
            "field": "model",
            "values": [1.5e9, 7e9, 13e9, 33e9, 65e9, 175e9],
        }
        payload = client.post("/api/v1/sweep", json=body).json()
        assert len(payload["points"]) == 6
        for point, expected in zip(payload["points"], PRETRAIN_TABLE_EXPECTED):
            assert cells_match(point["estimate"]["usd_display"], expected[4])

    def test_empty_values(self, client):
        body = {"base": scratch_body(), "field": "model", "values": []}
        response = client.post("/api/v1/sweep", json=body)
        assert response.status_code == 200
        assert response.json()["points"] == []

    def test_disk_sweep_matches_published_column(self, client):
        body = {
            "base": {
                "mode": "continued_pretrain",
                "params": 13e9,
                "token_source": {"type": "from_disk", "gb": 1.0},
            },
            "field": "disk_gb",
            "values": [20, 100, 500, 1000, 5000, 10000],
        }
        payload = client.post("/api/v1/sweep", json=body).json()
        for point, gb in zip(payload["points"], [20, 100, 500, 1000, 5000, 10000]):
            assert cells_match(
                point["estimate"]["usd_display"], CONTINUED_TABLE_EXPECTED[gb][2]
            )

    def test_per_point_errors_inline(self, client):
        body = {"base": scratch_body(), "field": "epochs", "values": [1.0, 0.25, 2.0]}
        points = client.post("/api/v1/sweep", json=body).json()["points"]
        assert points[0]["error"] is None
        assert points[1]["error"] and points[1]["estimate"] is None
        assert points[2]["error"] is None

    def test_unknown_field_rejected(self, client):
        body = {"base": scratch_body(), "field": "voltage", "values": [1.0]}
        assert client.post("/api/v1/sweep", json=body).status_code == 400


class TestTables:
    def test_pretrain_rows(self, client):
        payload = client.get("/api/v1/tables/pretrain").json()
        assert len(payload["rows"]) == 6
        for row, expected in zip(payload["rows"], PRETRAIN_TABLE_EXPECTED):
            assert row["example_model"] == expected[1]
            assert cells_match(row["tokens_display"], expected[2])
            assert cells_match(row["dataset_display"], expected[3])
            assert cells_match(row["usd_display"], expected[4])

    def test_continued_grid(self, client):
        payload = client.get("/api/v1/tables/continued").json()
        assert len(payload["usd"]) == 6
        assert all(len(row) == 5 for row in payload["usd"])
        assert len(payload["model_sizes"]) == 5

    def test_unknown_table_404(self, client):
        response = client.get("/api/v1/tables/bogus")
        assert response.status_code == 404
        assert response.json()["errors"]

    def test_matches_cli_tables_payload(self, client, capsys):
        from llmplan.cli import run_command

        assert run_command(["tables", "--which", "4", "--format", "json"]) == 0
        cli_payload = json.loads(capsys.readouterr().out)
        api_payload = client.get("/api/v1/tables/continued").json()
        assert cli_payload == api_payload


class TestErrorsAreJson:
    def test_unknown_api_path(self, client):
        response = client.get("/api/v1/nothing/here")
        assert response.status_code == 404
        assert response.headers["content-type"].startswith("application/json")
        assert "errors" in response.json()

    def test_malformed_json_body(self, client):
        response = client.post(
            "/api/v1/estimate",
            content=b"{not json",
            headers={"content-type": "application/json"},
        )
        assert response.status_code == 400
        assert "errors" in response.json()


class TestStaticUi:
    def test_serves_ui_assets_when_directory_exists(self, tmp_path):
        (tmp_path / "index.html").write_text("<html><body>planner</body></html>")
        app = create_app(ui_dir=str(tmp_path))
        client = TestClient(app)
        response = client.get("/")
        assert response.status_code == 200
        assert "planner" in response.text
        # API routes still take precedence over the mount
        assert client.get("/api/v1/constants").status_code == 200

    def test_placeholder_root_without_ui(self, client):
        payload = client.get("/").json()
        assert payload["service"] == "llmplan"
