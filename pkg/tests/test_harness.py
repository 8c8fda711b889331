import json

import pytest

from chibound.graph6 import parse_graph6, write_graph6
from chibound.harness import (ConfigError, RunConfig, exit_code_for,
                              report_fingerprint, verify_run, write_report)
from chibound.patterns import diamond, pineapple


def test_config_validation():
    with pytest.raises(ConfigError):
        RunConfig.from_dict({})
    with pytest.raises(ConfigError):
        RunConfig.from_dict({"source": {"kind": "nope"}})
    with pytest.raises(ConfigError):
        RunConfig.from_dict({"source": {"kind": "enumerate"}, "bogus": 1})
    with pytest.raises(ConfigError):
        RunConfig.from_dict({"source": {"kind": "enumerate"},
                             "theorem": "THM9"})
    with pytest.raises(ConfigError):
        RunConfig.from_dict({"source": {"kind": "sample", "n": 5}})
    cfg = RunConfig.from_dict({"source": {"kind": "enumerate", "n_max": 4},
                               "properties": ["P1"]})
    assert cfg.chi_cap >= 1


def test_empty_source_clean_exit(tmp_path):
    path = tmp_path / "empty.g6"
    path.write_text("")
    cfg = RunConfig(source={"kind": "graph6", "path": str(path)})
    report = verify_run(cfg)
    assert report["aggregates"]["graphs_scanned"] == 0
    assert exit_code_for(report) == 0


def test_missing_file_is_operational_error():
    cfg = RunConfig(source={"kind": "graph6", "path": "/nonexistent.g6"})
    report = verify_run(cfg)
    assert report["aggregates"]["errors"] == 1
    assert exit_code_for(report) == 1


def test_clean_sweep_exit_zero():
    cfg = RunConfig(source={"kind": "enumerate", "n_max": 5},
                    class_name="thm4", theorem="THM4",
                    properties=("P4", "P5", "P6", "P7"))
    report = verify_run(cfg)
    assert report["aggregates"]["violations"] == 0
    assert report["aggregates"]["members_found"] > 0
    assert exit_code_for(report) == 0


def test_negative_fixture_exit_two(tmp_path):
    path = tmp_path / "diamond.g6"
    path.write_text(write_graph6(diamond()) + "\n")
    cfg = RunConfig(source={"kind": "graph6", "path": str(path)},
                    properties=("P1",), skip_membership=True)
    report = verify_run(cfg)
    assert report["aggregates"]["violations"] == 1
    assert exit_code_for(report) == 2
    # the witness re-verifies: it names a vertex of S on the same graph
    violation = report["violations"][0]
    g = parse_graph6(violation["graph6"])
    from chibound.decompose import decompose_auto
    dec = decompose_auto(g, 2)
    assert dec.s_set >> violation["witness"] & 1


def test_out_of_class_graphs_are_skipped(tmp_path):
    path = tmp_path / "mix.g6"
    path.write_text(write_graph6(diamond()) + "\n"
                    + write_graph6(pineapple(4, 1)) + "\n")
    cfg = RunConfig(source={"kind": "graph6", "path": str(path)},
                    class_name="thm1", theorem="THM1", properties=("P1",))
    report = verify_run(cfg)
    assert report["aggregates"]["graphs_scanned"] == 2
    assert report["aggregates"]["members_found"] == 1
    assert report["aggregates"]["violations"] == 0
    skipped = [r for r in report["records"] if "skipped" in r]
    assert len(skipped) == 1
    assert skipped[0]["membership"]["violated"] == "diamond"


def test_reproducibility_modulo_walltime():
    cfg = RunConfig(source={"kind": "sample", "n": 7, "edge_prob": 0.3,
                            "count": 8},
                    class_name="diamond-free", seed=99, properties=("P8",))
    a = verify_run(cfg)
    b = verify_run(cfg)
    assert report_fingerprint(a) == report_fingerprint(b)
    assert a["wall_time_seconds"] >= 0


def test_report_is_json_serializable(tmp_path):
    cfg = RunConfig(source={"kind": "enumerate", "n_max": 4},
                    class_name="thm4", theorem="THM4")
    report = verify_run(cfg)
    out = tmp_path / "report.json"
    write_report(report, str(out))
    loaded = json.loads(out.read_text())
    assert loaded["schema_version"] == 1
    assert loaded["config"]["class_name"] == "thm4"
    assert len(loaded["records"]) == report["aggregates"]["graphs_scanned"]


def test_certificate_summary_in_records():
    cfg = RunConfig(source={"kind": "enumerate", "n_max": 5},
                    class_name="thm1", theorem="THM1",
                    theorem_params={"t": 2})
    report = verify_run(cfg)
    certs = [r["certificate"] for r in report["records"]
             if "certificate" in r and "palette_used" in r.get("certificate", {})]
    assert certs
    for c in certs:
        assert c["palette_used"] <= c["bound_value"]
        assert c["ok"] is True
