import json

import pytest

from silspath import cli


def _run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_roots_d43_has_six_positive_roots(capsys):
    code, out, _err = _run(capsys, "roots", "--type", "D43")
    assert code == 0
    obj = json.loads(out)
    assert obj["family"] == "D43"
    assert len(obj["positive_roots"]) == 6
    assert obj["positive_count"] == 6


def test_roots_untwisted_default_rank(capsys):
    code, out, _err = _run(capsys, "roots", "--type", "G2r")
    assert code == 0
    assert json.loads(out)["rank"] == 2


def test_unknown_type_is_a_usage_error(capsys):
    code, out, err = _run(capsys, "roots", "--type", "Z9")
    assert code == 2
    assert not out
    assert "unknown type" in err


def test_bad_flag_is_a_usage_error(capsys):
    code, _out, _err = _run(capsys, "roots", "--type", "D43", "--frobnicate")
    assert code == 2


def test_missing_rank_is_a_usage_error(capsys):
    code, _out, err = _run(capsys, "roots", "--type", "A2l2")
    assert code == 2
    assert "rank" in err


def test_weyl_decompose_identity(capsys):
    code, out, _err = _run(
        capsys, "weyl", "--type", "Dlp12", "--rank", "2",
        "--element", '{"finite": [], "xi": [0, 0]}')
    assert code == 0
    obj = json.loads(out)
    assert obj["peterson"] is True
    assert obj["w"] == [] and obj["z"] == [] and obj["xi"] == [0, 0]


def test_weyl_lengths_of_one_reflection(capsys):
    elt = '{"finite": [1], "xi": [0, 0]}'
    code, out, _err = _run(capsys, "weyl", "--type", "A2l2", "--rank", "2",
                           "--op", "length", "--element", elt)
    assert code == 0
    assert json.loads(out)["length"] == 1
    code, out, _err = _run(capsys, "weyl", "--type", "A2l2", "--rank", "2",
                           "--op", "silength", "--element", elt)
    assert code == 0
    assert json.loads(out)["semi_infinite_length"] == 1


def test_weyl_silength_of_adjusted_translation(capsys):
    code, out, _err = _run(
        capsys, "weyl", "--type", "Dlp12", "--rank", "2", "--op", "silength",
        "--element", '{"finite": [], "xi": [1, 0]}')
    assert code == 0
    obj = json.loads(out)
    assert obj["semi_infinite_length"] == 2


def test_sibg_dot_output(capsys):
    code, out, _err = _run(capsys, "sibg", "--type", "Dlp12", "--rank", "2",
                           "--lambda", "1,0", "--box", "1", "--dot")
    assert code == 0
    assert out.startswith("digraph")
    assert "->" in out and "style=" in out


def test_sibg_json_output(capsys):
    code, out, _err = _run(capsys, "sibg", "--type", "A2l2", "--rank", "1",
                           "--lambda", "1", "--box", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj["vertices"] and obj["edges"]
    for e in obj["edges"]:
        assert set(e) == {"source", "target", "label"}


def test_paths_crystal_orbit_lines(capsys):
    code, out, _err = _run(capsys, "paths", "--type", "A2l2", "--rank", "1",
                           "--lambda", "1", "--depth", "2")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines() if line]
    assert len(lines) > 1
    for obj in lines:
        assert obj["cuts"][0] == "0" and obj["cuts"][-1] == "1"
        assert len(obj["xs"]) == len(obj["cuts"]) - 1


def test_paths_rejects_bad_seed(capsys):
    code, _out, err = _run(capsys, "paths", "--type", "A2l2", "--rank", "1",
                           "--lambda", "1", "--seed", '{"xs": []}')
    assert code == 2
    assert "seed" in err


def test_qbg_dot_and_json(capsys):
    code, out, _err = _run(capsys, "qbg", "--type", "Dlp12", "--rank", "2",
                           "--dot")
    assert code == 0
    assert out.startswith("digraph")
    assert "dashed" in out  # quantum edges exist for the full flag variety
    code, out, _err = _run(capsys, "qbg", "--type", "Dlp12", "--rank", "2",
                           "--J", "1")
    assert code == 0
    obj = json.loads(out)
    kinds = {e["kind"] for e in obj["edges"]}
    assert kinds <= {"Bruhat", "Quantum"}
    assert obj["vertices"][0] == []


def test_qls_enumerate(capsys):
    code, out, _err = _run(capsys, "qls", "--type", "A2l2", "--rank", "1",
                           "--lambda", "2", "--enumerate",
                           "--max-segments", "2")
    assert code == 0
    paths = json.loads(out)
    assert paths
    for p in paths:
        assert p["cuts"][0] == "0" and p["cuts"][-1] == "1"


def test_components_with_probe(capsys):
    code, out, _err = _run(capsys, "components", "--type", "Dlp12",
                           "--rank", "2", "--lambda", "2,0", "--box", "1",
                           "--probe-depth", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj["special_elements"]
    assert len(obj["probes"]) == len(obj["special_elements"])
    for rep in obj["probes"]:
        assert rep["orbit_size"] >= 1


def test_verify_all_rank1_passes(capsys):
    code, out, _err = _run(capsys, "verify", "--suite", "all",
                           "--type", "A2l2", "--rank", "1", "--box", "2")
    assert code == 0
    obj = json.loads(out)
    assert obj["pass"] is True
    names = [it["name"] for it in obj["items"]]
    assert names == ["roots", "weyl", "sibg", "paths", "qbg", "reduction",
                     "sublemma", "components"]
    assert all(it["pass"] for it in obj["items"])


def test_verify_reduction_suite(capsys):
    code, out, _err = _run(capsys, "verify", "--suite", "reduction",
                           "--type", "Dlp12", "--rank", "2", "--box", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj["items"][0]["violations"] == []


def test_verify_reduction_needs_twisted_input(capsys):
    code, _out, err = _run(capsys, "verify", "--suite", "reduction",
                           "--type", "B", "--rank", "2")
    assert code == 2
    assert "twisted" in err


def test_verify_sublemma_with_fixed_lambda(capsys):
    code, out, _err = _run(capsys, "verify", "--suite", "sublemma",
                           "--type", "Dlp12", "--rank", "2",
                           "--lambda", "2,1", "--box", "1")
    assert code == 0
    obj = json.loads(out)
    item = obj["items"][0]
    assert item["mismatches"] == []
    assert item["witnesses_audited"] > 0


def test_verify_failure_exits_one(capsys, monkeypatch):
    monkeypatch.setattr(cli, "_suite_roots",
                        lambda d: {"pass": False, "positive_roots": -1})
    code, out, _err = _run(capsys, "verify", "--suite", "roots",
                           "--type", "D43")
    assert code == 1
    obj = json.loads(out)
    assert obj["pass"] is False


def test_verify_item_exception_is_reported_not_raised(capsys, monkeypatch):
    def boom(d):
        raise RuntimeError("synthetic")

    monkeypatch.setattr(cli, "_suite_roots", boom)
    code, out, _err = _run(capsys, "verify", "--suite", "roots",
                           "--type", "D43")
    assert code == 1
    assert "synthetic" in json.loads(out)["items"][0]["error"]


def test_worker_env_var_does_not_change_output(capsys, monkeypatch):
    argv = ["verify", "--suite", "sibg", "--type", "A2l2", "--rank", "1",
            "--box", "1"]
    code, serial, _err = _run(capsys, *argv)
    assert code == 0
    monkeypatch.setenv("SILSPATH_WORKERS", "4")
    code, pooled, _err = _run(capsys, *argv)
    assert code == 0
    assert serial == pooled


def test_output_is_deterministic(capsys):
    argv = ["sibg", "--type", "Dlp12", "--rank", "2", "--lambda", "1,1",
            "--box", "1", "--dot"]
    _code, first, _err = _run(capsys, *argv)
    _code, second, _err = _run(capsys, *argv)
    assert first == second


def test_console_script_entry_exists():
    import importlib.metadata as md

    eps = md.entry_points(group="console_scripts")
    names = {ep.name: ep.value for ep in eps}
    assert names.get("silspath") == "silspath.cli:main"


@pytest.mark.parametrize("family,rank", [("A2l2", 2), ("D43", 2)])
def test_verify_sibg_suite_smoke(capsys, family, rank):
    code, out, _err = _run(capsys, "verify", "--suite", "sibg",
                           "--type", family, "--rank", str(rank),
                           "--lambda", "1" + ",0" * (rank - 1), "--box", "1")
    assert code == 0
    assert json.loads(out)["items"][0]["states"] > 0
