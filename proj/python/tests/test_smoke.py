import json

import pytest

import hueon


def test_ring4_oracle_and_heuristics(data_dir):
    net = hueon.Network.from_instance(data_dir / "ring4" / "instance.json")
    assert net.nodes == ["A", "B", "C", "D"]
    assert net.oracle()["optimum"] == 4
    assert net.oracle("ssmf")["optimum"] == 11
    assert net.oracle("ull")["optimum"] == 6
    uff = net.run_static("uff", fibers="ssmf")
    assert uff["max_fs_used"] == 11
    assert net.validate(uff["dump"]) == []


def test_static_generated_demands(data_dir):
    net = hueon.Network.from_files(data_dir / "n6s9.json")
    a = net.run_static("oa", alpha=1.12, x_max=200, seed=7)
    b = net.run_static("oa", alpha=1.12, x_max=200, seed=7)
    assert a == b
    assert a["offered"] == 30 and a["blocked"] == 0
    assert net.validate(a["dump"]) == []


def test_corrupted_dump_is_reported(data_dir):
    net = hueon.Network.from_files(data_dir / "n6s9.json")
    dump = net.run_static("uff", x_max=200, seed=3)["dump"]
    dump["assignments"].append(dump["assignments"][0])
    kinds = {kind for kind, _ in net.validate(dump)}
    assert "overlap" in kinds


def test_dynamic_and_mode_errors(data_dir):
    net = hueon.Network.from_files(data_dir / "n6s9.json")
    r = net.run_dynamic("su", load=36, events=1000, seed=2)
    assert r["offered"] > 0 and 0.0 <= r["blocking_probability"] <= 1.0
    with pytest.raises(hueon.HueonError):
        net.run_dynamic("oa", events=10)
    with pytest.raises(hueon.HueonError):
        net.run_static("su")


def test_cost(data_dir):
    assert hueon.deployment_cost(data_dir / "usnet.json", "UU") == pytest.approx(171680)
    assert hueon.deployment_cost(data_dir / "usnet.json", "S") == 0


def test_lp_text(data_dir, tmp_path):
    net = hueon.Network.from_instance(data_dir / "ring4" / "instance_linear.json")
    text = net.to_lp()
    assert text.startswith("\\") or "Minimize" in text
    net.export_lp(tmp_path / "ring4")
    assert (tmp_path / "ring4.lp").read_text() == text
    names = json.loads((tmp_path / "ring4.names.json").read_text())
    assert names
