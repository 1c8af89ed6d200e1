import json
import os
import subprocess
import sys

import pytest

from shtopo import analyze
from shtopo.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_json(capsys):
    code, out, _ = run_cli(capsys, "analyze", "zn:12", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["dclk_dim"] == 1 and d["derived_dim"] == 2
    assert d["distributive"] is True


def test_analyze_text_m3(capsys):
    code, out, _ = run_cli(capsys, "analyze", "m3")
    assert code == 0
    assert "dclk dim     : -1" in out
    assert "X (nonzero sh): {}" in out


def test_analyze_missing_file(capsys):
    code, _, err = run_cli(capsys, "analyze", "file:does-not-exist.json")
    assert code == 1
    assert "does-not-exist.json" in err


def test_analyze_bad_spec(capsys):
    code, _, err = run_cli(capsys, "analyze", "zn:banana")
    assert code == 1
    assert "error" in err


def test_analyze_invalid_lattice_document(tmp_path, capsys):
    p = tmp_path / "fence.json"
    p.write_text(json.dumps({
        "n": 4, "relation": "covers",
        "pairs": [[0, 2], [0, 3], [1, 2], [1, 3]],
    }))
    code, _, err = run_cli(capsys, "analyze", f"file:{p}")
    assert code == 2
    assert "no-top" in err or "not a bounded lattice" in err


def test_verify_exhaustive_five(capsys):
    code, out, _ = run_cli(capsys, "verify", "--exhaustive", "5", "--seed", "7")
    assert code == 0
    assert "result: OK" in out


def test_verify_bound_refusal(capsys):
    code, _, err = run_cli(capsys, "verify", "--exhaustive", "9")
    assert code == 1
    assert "bound" in err


def test_verify_ring_range(capsys):
    code, out, _ = run_cli(capsys, "verify", "--exhaustive", "0",
                           "--rings", "zn:2..30", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["ok"] is True
    assert d["corpus"]["lattices"] == 29


def test_verify_writes_summary_file(tmp_path, capsys):
    out_path = tmp_path / "run.json"
    code, _, _ = run_cli(capsys, "verify", "--exhaustive", "4",
                         "--out", str(out_path))
    assert code == 0
    d = json.loads(out_path.read_text())
    assert d["ok"] is True


def test_enumerate_counts(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--max", "5")
    assert code == 0
    assert "total        10" in out


def test_enumerate_json_stream(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--max", "3", "--format", "json")
    assert code == 0
    docs = [json.loads(line) for line in out.strip().splitlines()]
    assert [d["n"] for d in docs] == [1, 2, 3]


def test_enumerate_bound_refusal(capsys):
    code, _, err = run_cli(capsys, "enumerate", "--max", "8")
    assert code == 1
    assert "bound" in err


def test_export_hasse_dot(tmp_path, capsys):
    path = tmp_path / "z12.dot"
    code, _, _ = run_cli(capsys, "export", "zn:12", "hasse", str(path))
    assert code == 0
    text = path.read_text()
    assert text.startswith("digraph")
    assert text.count("[label=") == 6        # one node per divisor
    assert text.count("->") == 7             # cover pairs only


def test_export_strata_dot_labels(tmp_path, capsys):
    path = tmp_path / "z12s.dot"
    code, _, _ = run_cli(capsys, "export", "zn:12", "strata", str(path))
    assert code == 0
    text = path.read_text()
    for frag in ('label="(6)"', 'label="(4)"'):
        line = next(l for l in text.splitlines() if frag in l)
        assert 'xlabel="S_0"' in line
    line3 = next(l for l in text.splitlines() if 'label="(3)"' in l)
    assert 'xlabel="S_1"' in line3


def test_export_m3_strata_empty_annotation(tmp_path, capsys):
    path = tmp_path / "m3.dot"
    code, _, _ = run_cli(capsys, "export", "m3", "strata", str(path))
    assert code == 0
    text = path.read_text()
    assert "no strata" in text
    assert "xlabel" not in text


def test_export_topology_dot(tmp_path, capsys):
    path = tmp_path / "topo.dot"
    code, _, _ = run_cli(capsys, "export", "zn:12", "topology", str(path))
    assert code == 0
    assert path.read_text().count("[label=") == 6  # six closed sets


def test_export_round_trip(tmp_path, capsys):
    path = tmp_path / "z12.json"
    code, _, _ = run_cli(capsys, "export", "zn:12", "lattice", str(path))
    assert code == 0
    direct = analyze("zn:12").to_json_dict()
    again = analyze(f"file:{path}").to_json_dict()
    for key in ("n", "x_points", "dclk_dim", "derived_dim", "strata",
                "y_levels", "labels", "verdicts"):
        assert direct[key] == again[key]


def test_export_figure(tmp_path, capsys):
    path = tmp_path / "z12.png"
    code, _, _ = run_cli(capsys, "export", "zn:12", "strata", str(path))
    assert code == 0
    assert path.stat().st_size > 1000


def test_analyze_with_figure(tmp_path, capsys):
    fig = tmp_path / "report.png"
    code, out, _ = run_cli(capsys, "analyze", "zn:12", "--fig", str(fig))
    assert code == 0
    assert fig.exists() and fig.stat().st_size > 1000
    assert "dclk dim     : 1" in out


def test_analyze_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "analyze", "zn:12", "--format", "json",
                           "--out", str(path))
    assert code == 0
    assert out == ""
    assert json.loads(path.read_text())["derived_dim"] == 2


def test_analyze_dot_format(capsys):
    code, out, _ = run_cli(capsys, "analyze", "zn:12", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")


def test_verify_witness_dir_is_replayable(tmp_path, capsys, monkeypatch):
    import shtopo.verify as V
    from shtopo.verify import Claim, CheckResult

    bogus = Claim(
        "bogus-no-pentagons", "w-base", "no lattice contains a pentagon", "any",
        lambda ctx: CheckResult(ctx.lattice.is_modular, "non-modular"),
    )
    monkeypatch.setattr(V, "REGISTRY", V.REGISTRY + (bogus,))
    wdir = tmp_path / "witnesses"
    code, _, _ = run_cli(capsys, "verify", "--exhaustive", "5",
                         "--witness-dir", str(wdir))
    assert code == 3  # an asserted claim failed
    wfile = wdir / "bogus-no-pentagons.json"
    assert wfile.exists()
    # the persisted witness replays through the normal analyze path
    monkeypatch.undo()
    code, out, _ = run_cli(capsys, "analyze", f"file:{wfile}", "--format", "json")
    assert code == 0
    assert json.loads(out)["modular"] is False


def test_verify_summaries_byte_identical_across_processes(tmp_path):
    """Same config, different hash seeds: byte-identical JSON summaries."""
    outs = []
    for hash_seed in ("0", "424242"):
        path = tmp_path / f"run-{hash_seed}.json"
        env = dict(os.environ, PYTHONHASHSEED=hash_seed)
        proc = subprocess.run(
            [sys.executable, "-m", "shtopo.cli", "verify", "--exhaustive", "5",
             "--seed", "7", "--out", str(path)],
            capture_output=True, env=env, text=True,
        )
        assert proc.returncode == 0, proc.stderr
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
