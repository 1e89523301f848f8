"""End-to-end command line tests (exit codes, JSON shapes, determinism)."""

import itertools
import json

from a4csl.a4 import CARTAN_A4
from a4csl.cli import main
from a4csl.counting import f_soc_values, f_ssl_values
from a4csl.icosian import Icosian
from a4csl.lattice import forms_equivalent


def test_count_ssl_json(tmp_path):
    out = tmp_path / "counts.json"
    assert main(["count", "ssl", "--max", "12", "--format", "json",
                 "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    values = {row["n"]: row["count"] for row in payload["values"]}
    expected = f_ssl_values(12)
    assert values == {i: expected[i] for i in range(1, 13)}
    assert values[2] == 0 and values[4] == 6


def test_count_soc_text(capsys):
    assert main(["count", "soc", "--max", "6"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].split() == ["index", "count"]
    got = {int(a): int(b) for a, b in (ln.split() for ln in lines[1:])}
    expected = f_soc_values(6)
    assert got == {i: expected[i] for i in range(1, 7)}


def test_series_commands_pass(capsys):
    assert main(["series", "ssl", "--limit", "80"]) == 0
    assert "ok" in capsys.readouterr().out
    assert main(["series", "soc", "--limit", "80", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["ok"] is True


def test_csl_json_shape(tmp_path):
    out = tmp_path / "csl.json"
    assert main(["csl", "1,1,0,0,0,0,0,0", "--format", "json",
                 "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["sigma"] == 2
    assert payload["denominator"] == 2
    assert payload["reduced_norm"] == "2"
    assert payload["basis"] == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0],
                               [0, 0, 0, 2]]
    assert payload["rotation"][0] == ["0", "-1", "0", "0"]
    assert payload["index"] == payload["sigma"]


def test_csl_rejects_non_primitive():
    assert main(["csl", "2", "2", "0", "0", "0", "0", "0", "0"]) == 3


def test_csl_rejects_non_admissible():
    # find the first primitive icosian whose norm quadruple is not a
    # perfect square, then make sure the CLI reports a domain error
    for zc in itertools.product((0, 1), repeat=8):
        if not any(zc):
            continue
        q = Icosian.from_zcoords(zc)
        if q.is_primitive() and not q.is_admissible():
            coords = ",".join(str(c) for c in zc)
            assert main(["csl", coords]) == 3
            return
    raise AssertionError("no non-admissible sample found")


def test_ssl_subcommand_json(tmp_path):
    out = tmp_path / "ssl.json"
    assert main(["ssl", "1,1,0,0,0,0,0,0", "--format", "json",
                 "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["norm_scale"] == 4
    assert payload["index"] == 16
    gram = payload["gram"]
    assert all(x % 4 == 0 for row in gram for x in row)
    reduced = [[x // 4 for x in row] for row in gram]
    assert forms_equivalent(reduced, CARTAN_A4)


def test_enumerate_icosians_unit_shell(capsys):
    assert main(["enumerate-icosians", "--trace-norm", "2",
                 "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["count"] == 120
    assert len(payload["zcoords"]) == 120


def test_usage_errors_exit_two(capsys):
    assert main(["count"]) == 2
    assert main(["no-such-command"]) == 2
    assert main(["csl", "1", "2", "3"]) == 2
    capsys.readouterr()  # swallow usage noise


def test_verify_smoke_profile(tmp_path):
    out = tmp_path / "report.json"
    assert main(["verify", "--profile", "smoke", "--format", "json",
                 "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["ok"] is True
    assert [s["name"] for s in payload["sections"]] == [
        "ssl-counts",
        "ssl-counts-dual",
        "soc-counts",
        "csl-samples",
        "series-identities",
    ]


def test_verify_threads_byte_identical(tmp_path):
    one = tmp_path / "one.json"
    two = tmp_path / "two.json"
    assert main(["verify", "--profile", "smoke", "--format", "json",
                 "--threads", "1", "--out", str(one)]) == 0
    assert main(["verify", "--profile", "smoke", "--format", "json",
                 "--threads", "4", "--out", str(two)]) == 0
    assert one.read_bytes() == two.read_bytes()
