"""
Tests for document repositories and settings
"""
import json

import pytest

from app.config.settings import Settings
from app.core.exceptions import DensityDocumentError, GraphFormatError
from app.repositories import DensityRepository, GraphRepository

pytestmark = pytest.mark.unit


def test_graph_round_trip(tmp_path, triangle):
    repository = GraphRepository()
    path = tmp_path / "triangle.txt"
    repository.save(triangle, path)
    loaded = repository.load(path)
    assert loaded.edges == triangle.edges


def test_missing_graph_file(tmp_path):
    with pytest.raises(GraphFormatError, match="cannot read"):
        GraphRepository().load(tmp_path / "absent.txt")


def test_table_and_dpp_documents(tmp_path, disjoint_pairs):
    table_path = tmp_path / "table.json"
    table_path.write_text(json.dumps(disjoint_pairs.to_document()))
    dpp_path = tmp_path / "dpp.json"
    dpp_path.write_text(json.dumps({"k": 1, "vectors": [[2.0], [0.0], [3.0]]}))

    repository = DensityRepository()
    assert repository.load_table(table_path).entries == disjoint_pairs.entries
    dpp = repository.load_dpp(dpp_path)
    assert dpp.support() == [(0,), (2,)]
    assert dpp.eval([2]) == pytest.approx(9.0)


def test_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("[1, 2")
    with pytest.raises(DensityDocumentError, match="not valid JSON"):
        DensityRepository().load_table(path)


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("DOWNUP_SCHEDULE_CONSTANT", "2.5")
    monkeypatch.setenv("DOWNUP_DEBUG_CHECKS", "true")
    configured = Settings()
    assert configured.SCHEDULE_CONSTANT == 2.5
    assert configured.DEBUG_CHECKS is True
    assert configured.validate()


def test_settings_validate_rejects_bad_epsilon():
    assert not Settings(DEFAULT_EPSILON=1.5).validate()
