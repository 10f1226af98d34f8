import json
from pathlib import Path

import pytest

from zcurve.cli import build_parser, parse_h_rule, run, UsageError

GOLDEN = Path(__file__).parent / "data" / "golden"


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def assert_close(got, want, path="$"):
    if isinstance(want, dict):
        assert set(got) == set(want), path
        for k in want:
            assert_close(got[k], want[k], f"{path}.{k}")
    elif isinstance(want, list):
        assert len(got) == len(want), path
        for i, (g, w) in enumerate(zip(got, want)):
            assert_close(g, w, f"{path}[{i}]")
    elif isinstance(want, float):
        assert got == pytest.approx(want, rel=1e-9, abs=1e-9), path
    else:
        assert got == want, path


def test_eval_csv(capsys):
    code, out, _ = call(capsys, "eval", "--t", "150", "--what", "z")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == "t,z,zprime"
    t, z, zp = map(float, row.split(","))
    assert t == 150.0 and z == pytest.approx(-0.0910108, abs=1e-6)


def test_eval_json_with_theta(capsys):
    code, out, _ = call(capsys, "eval", "--t", "1e4", "--what", "all", "--format", "json")
    d = json.loads(out)
    assert code == 0 and {"theta", "theta1", "z", "zprime"} <= set(d)


def test_eval_below_domain_is_usage_error(capsys):
    code, _, err = call(capsys, "eval", "--t", "50")
    assert code == 1 and "t >= 100" in err


def test_bad_flag_exit_1():
    with pytest.raises(SystemExit) as exc:
        run(["zeros", "--T", "abc", "--H", "1"])
    assert exc.value.code == 1


def test_zeros_and_extrema_csv(capsys):
    code, out, _ = call(capsys, "zeros", "--T", "100", "--H", "10")
    assert code == 0 and out.splitlines()[0] == "index,t,residual"
    assert len(out.splitlines()) == 5
    code, out, _ = call(capsys, "extrema", "--T", "100", "--H", "10", "--format", "json")
    d = json.loads(out)
    assert code == 0 and len(d["extrema"]) == 3 and "littlewood" in d


def test_arclen(capsys):
    code, out, _ = call(capsys, "arclen", "--T", "100", "--H", "10")
    assert code == 0
    assert float(out.splitlines()[1].split(",")[2]) == pytest.approx(22.0330596, abs=1e-6)


def test_gram_needs_window_or_nu(capsys):
    code, _, err = call(capsys, "gram")
    assert code == 1 and "--nu" in err


def test_verify_theorem_exit_0(capsys):
    code, out, _ = call(capsys, "verify", "theorem", "--T", "1e4", "--H", "100", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["kind"] == "theorem" and d["findings"] == []


def test_verify_strict_domain_error(capsys):
    code, _, err = call(capsys, "verify", "theorem", "--T", "1e4", "--H", "100", "--strict")
    assert code == 1 and "T^(1/4)" in err


def test_verify_findings_exit_2(capsys):
    # the short window [1000, 1005] has ratio about 0.80, below 1 - eps
    code, out, _ = call(capsys, "verify", "lemma3", "--T", "1e3", "--H", "5", "--eps", "0.01")
    d = json.loads(out)
    assert code == 2 and d["extra"]["ratio"] < 0.99 and d["findings"]


@pytest.mark.parametrize("name,argv", [
    ("theorem_1e3_100", ["verify", "theorem", "--T", "1e3", "--H", "100"]),
    ("lemma1_1e4_100", ["verify", "lemma1", "--T", "1e4", "--H", "100"]),
    ("lemma2_1e4_100", ["verify", "lemma2", "--T", "1e4", "--H", "100"]),
    ("gram_1e3_100", ["gram", "--T", "1e3", "--H", "100", "--format", "json"]),
])
def test_golden_reports(capsys, name, argv):
    code, out, _ = call(capsys, *argv)
    want = json.loads((GOLDEN / f"{name}.json").read_text())
    assert_close(json.loads(out), want)


def test_output_is_deterministic(capsys):
    argv = ["verify", "theorem", "--T", "1e3", "--H", "20"]
    _, a, _ = call(capsys, *argv)
    _, b, _ = call(capsys, *argv)
    assert a == b


def test_svg_output_and_figure(capsys, tmp_path):
    fig = tmp_path / "z.svg"
    out_csv = tmp_path / "z.csv"
    code = run(["zeros", "--T", "100", "--H", "10", "--figure", str(fig), "--output", str(out_csv),
                "--no-timestamp"])
    assert code == 0
    svg = fig.read_text()
    assert "config-hash=" in svg and "generated=" not in svg and svg.rstrip().endswith("</svg>")
    assert out_csv.read_text().startswith("index,t,residual")
    run(["zeros", "--T", "100", "--H", "10", "--figure", str(tmp_path / "b.svg"), "--output", str(out_csv),
         "--no-timestamp"])
    assert (tmp_path / "b.svg").read_text() == svg


def test_svg_timestamp_present_by_default(capsys):
    code, out, _ = call(capsys, "zeros", "--T", "100", "--H", "5", "--format", "svg")
    assert code == 0 and "generated=" in out


def test_sweep_csv_and_svg(capsys, tmp_path):
    fig = tmp_path / "s.svg"
    code, out, _ = call(capsys, "sweep", "--T-list", "1e3,1e4", "--H-rule", "T^0.2", "--format", "csv",
                        "--figure", str(fig))
    lines = out.strip().splitlines()
    assert lines[0].startswith("T,H,arc_len") and len(lines) == 3
    assert code in (0, 2) and fig.exists()


def test_h_rule_parsing():
    assert parse_h_rule("T^0.24") == 0.24
    for bad in ("T^0.3", "H^0.2", "0.2"):
        with pytest.raises(UsageError):
            parse_h_rule(bad)


def test_sweep_bad_rule_exit_1(capsys):
    code, _, err = call(capsys, "sweep", "--T-list", "1e3", "--H-rule", "T^0.5")
    assert code == 1 and "0.25" in err


def test_cache_commands(capsys, tmp_path):
    d = tmp_path / "cache"
    call(capsys, "zeros", "--T", "1e3", "--H", "5", "--cache-dir", str(d))
    code, out, _ = call(capsys, "cache", "list", "--cache-dir", str(d))
    assert code == 0 and len(out.splitlines()) == 1
    code, out, _ = call(capsys, "cache", "path", "--cache-dir", str(d))
    assert out.strip() == str(d)
    code, out, _ = call(capsys, "cache", "clear", "--cache-dir", str(d))
    assert "removed 1" in out


def test_every_verify_target_parses():
    p = build_parser()
    for target in ("lemma1", "lemma2", "lemma3", "lemma4", "theorem", "trig"):
        assert p.parse_args(["verify", target, "--T", "1e4", "--H", "10"]).target == target
