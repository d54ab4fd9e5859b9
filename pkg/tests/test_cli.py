import json
import subprocess
import sys

import pytest

from fraccy import fixtures
from fraccy.cli import main, run_batch
from fraccy.presentation import parse


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_d4_json(capsys):
    code, out, _ = run(capsys, "classify", "d4rad2", "--lmax", "3", "--format", "json")
    assert code == 0
    js = json.loads(out)
    assert {"l": 3, "m": 2, "routeB": "yes"}.items() <= js["pairs"][-1].items()
    assert js["least"] == {"l": 3, "m": 2}


def test_info_loop(capsys):
    code, out, _ = run(capsys, "info", "loop", "--format", "json")
    js = json.loads(out)
    assert js["profile"]["idim"] == {"exact": 1}
    assert js["profile"]["gldim"] == {"atLeast": 30}
    code, out, _ = run(capsys, "info", "loop")
    assert "Exact(1)" in out and "AtLeast(30)" in out


def test_examples_emit_roundtrip(capsys):
    code, out, _ = run(capsys, "examples", "emit", "a3lin")
    assert code == 0
    assert parse(out) == fixtures.get("a3lin").presentation()
    code, out, _ = run(capsys, "examples", "list")
    assert set(out.split()) == set(fixtures.FIXTURES)


def test_check_ha_on_replica(capsys):
    code, out, _ = run(capsys, "check-ha", "d4rad2", "-m", "2", "--format", "json")
    assert code == 0 and json.loads(out)["d"] == 3
    code, out, _ = run(capsys, "check-ha", "d4rad2", "-m", "2", "-d", "3", "--format", "json")
    assert json.loads(out)["status"] == "yes"


def test_check_mag_on_replica(capsys):
    code, out, _ = run(capsys, "check-mag", "loop", "-m", "1", "--format", "json")
    assert json.loads(out)["d"] == 2


def test_half_cy(capsys):
    code, out, _ = run(capsys, "half-cy", "loop", "-n", "1", "--format", "json")
    js = json.loads(out)
    assert code == 0 and js["agree"] and js["twistedCY"] == "yes"


def test_serre_and_stalk(capsys):
    code, out, _ = run(capsys, "serre-formal", "a2lin", "--range=-3:3", "--format", "json")
    assert set(json.loads(out)["stalk"].values()) == {"yes"}
    code, out, _ = run(capsys, "stalk-property", "a2lin", "-m", "2", "--format", "json")
    assert json.loads(out)["status"] == "yes"


def test_resolve(capsys):
    code, out, _ = run(capsys, "resolve", "d4rad2", "--module", "S1", "--format", "json")
    js = json.loads(out)
    assert code == 0 and js["complete"] and len(js["terms"]) == 3
    code, out, _ = run(capsys, "resolve", "loop", "--module", "S1", "--length", "3")
    assert code == 2  # truncated at the requested length


def test_replicate_data(capsys):
    code, out, _ = run(capsys, "replicate", "loop", "-m", "1", "--data", "--format", "json")
    js = json.loads(out)
    assert js["fingerprint"]["dim"] == 15 and len(js["structure"]["labels"]) == 15


@pytest.mark.parametrize(
    "argv",
    [
        ["info", "nosuch"],
        ["classify", "loop", "--lmax", "1"],
        ["info", "loop", "--cutoff", "0"],
        ["resolve", "loop", "--module", "Q1"],
        ["serre-formal", "loop", "--range", "3:1"],
        ["info", "loop", "-p", "4"],
        ["bogus"],
    ],
)
def test_input_errors_exit_one(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err


def test_parse_error_position(capsys, tmp_path):
    f = tmp_path / "bad.quiver"
    f.write_text("algebra bad over GF(3)\nvertices: 1 2\narrows: a: 1 -> 3\n", encoding="utf-8")
    code, _, err = run(capsys, "info", str(f))
    assert code == 1 and ":3:17:" in err


def test_undecided_exit_code(capsys, tmp_path):
    f = tmp_path / "r.quiver"
    f.write_text("algebra r over GF(3)\nvertices: 1\narrows: x: 1 -> 1; y: 1 -> 1\nrelations: x*x; x*y; y*x; y*y\n", encoding="utf-8")
    code, out, _ = run(capsys, "classify", str(f), "--lmax", "2", "--cutoff", "3", "--format", "json")
    assert code == 2 and json.loads(out)["least"] is None


def test_text_and_json_agree(capsys):
    _, out_j, _ = run(capsys, "classify", "loop", "--lmax", "4", "--format", "json")
    _, out_t, _ = run(capsys, "classify", "loop", "--lmax", "4")
    rows = {line.split()[0]: line.split()[1:] for line in out_t.splitlines() if line.startswith("l=")}
    for pair in json.loads(out_j)["pairs"]:
        fields = rows[f"l={pair['l']}"]
        assert f"routeB={pair['routeB']}" in fields and f"routeA={pair['routeA']}" in fields


def test_batch_parallel_equals_sequential(tmp_path):
    for name in ["a3nonlin", "loop", "a2lin", "k"]:
        (tmp_path / f"{name}.quiver").write_text(fixtures.get(name).source, encoding="utf-8")
    paths = sorted(str(x) for x in tmp_path.glob("*.quiver"))
    seq = run_batch(paths, 3, 30)
    par = run_batch(paths, 3, 30, jobs=3)
    assert seq == par
    singles = [run_batch([x], 3, 30)[0] for x in paths]
    assert singles == seq


def test_module_entry_point(tmp_path):
    out = subprocess.run([sys.executable, "-m", "fraccy", "classify", "a3nonlin", "--lmax", "2", "--format", "json"], capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["least"] == {"l": 2, "m": 1}
