"""Pruebas de la linea de comandos de entrolab."""

import json
import math
from fractions import Fraction

import pytest

from entrolab_apps.config import ConfigError, RunConfig
from entrolab_apps.main import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, main
from entrolab_core.constants import DEFAULT_BITS
from entrolab_core.interval_maps import constant_slope_map
from entrolab_core.numkit import parse_rational

TENT = {"nodes": [["0", "0"], ["1/2", "1"], ["1", "0"]]}
GOLDEN = {"alphabet": 2, "allowed": [[1, 1], [1, 0]]}
ENV_VARS = ("ENTROLAB_CACHE", "ENTROLAB_BITS", "ENTROLAB_MAX_PERIOD", "ENTROLAB_NODE_CAP", "ENTROLAB_BUDGET_SECONDS")


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)


def _write(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def _enclosure(line):
    # "h in [lo,hi] ..." -> (lo, hi)
    inner = line[line.index("[") + 1:line.index("]")]
    lo, hi = inner.split(",")
    return parse_rational(lo), parse_rational(hi)


@pytest.mark.parametrize("r, expected", [("2", "h in [0,0] EXACT"), ("4", "h in [1,1] EXACT")])
def test_logistic_exact_parameters(capsys, tmp_path, r, expected):
    code = main(["entropy", "logistic", "--r", r, "--eps", "1/1000", "--cache-path", str(tmp_path / "c.jsonl")])
    assert code == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == expected


def test_logistic_budget_exceeded(capsys, tmp_path):
    code = main([
        "entropy", "logistic", "--r", "3.9", "--eps", "1/1000000", "--max-period", "2",
        "--cache-path", str(tmp_path / "c.jsonl"), "--format", "json",
    ])
    assert code == EXIT_BUDGET
    data = json.loads(capsys.readouterr().out)
    assert data["status"] == "BUDGET_EXCEEDED"
    assert data["upper"]["side"] == "ABOVE"


def test_logistic_requires_valid_parameter(capsys):
    assert main(["entropy", "logistic", "--r", "5", "--eps", "1/10"]) == EXIT_USAGE
    assert main(["entropy", "logistic", "--r", "abc", "--eps", "1/10"]) == EXIT_USAGE
    assert main(["entropy", "logistic", "--r", "3.5"]) == EXIT_USAGE
    assert "Error" in capsys.readouterr().err


def test_pwl_variation_is_certified(capsys, tmp_path):
    path = _write(tmp_path / "slope2.json", constant_slope_map(2).to_json())
    assert main(["entropy", "pwl", "--file", path, "--method", "variation"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "h in [1,1] VARIATION CERTIFIED"


def test_pwl_variation_in_nats(capsys, tmp_path):
    path = _write(tmp_path / "tent.json", TENT)
    assert main(["entropy", "pwl", "--file", path, "--method", "variation", "--units", "nats"]) == EXIT_OK
    line = capsys.readouterr().out.strip()
    assert line.endswith("(nats)")
    lo, hi = _enclosure(line)
    assert lo <= Fraction(math.log(2)) <= hi


def test_pwl_horseshoe_streams_rows(capsys, tmp_path):
    path = _write(tmp_path / "tent.json", TENT)
    assert main(["entropy", "pwl", "--file", path, "--method", "horseshoe", "--max-n", "2"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "p\tn\tbound_lo\tbound_hi"
    rows = [line.split("\t") for line in lines[1:]]
    assert rows and rows[-1][1] == "2"
    assert parse_rational(rows[-1][2]) >= Fraction(1, 2)
    assert all(parse_rational(row[3]) <= 1 for row in rows)


def test_pwl_horseshoe_on_identity_prints_header_only(capsys, tmp_path):
    path = _write(tmp_path / "id.json", {"nodes": [["0", "0"], ["1", "1"]]})
    assert main(["entropy", "pwl", "--file", path, "--method", "horseshoe", "--max-n", "3"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["p\tn\tbound_lo\tbound_hi"]


def test_variation_rejects_quadratic_map(tmp_path):
    path = _write(tmp_path / "quad.json", {"r": "4"})
    assert main(["entropy", "pwl", "--file", path, "--method", "variation"]) == EXIT_USAGE


def test_realize_round_trip(capsys, tmp_path):
    out = tmp_path / "f.json"
    assert main(["realize", "--h", "0.5849625", "--out", str(out)]) == EXIT_OK
    capsys.readouterr()
    assert main(["entropy", "pwl", "--file", str(out), "--method", "variation"]) == EXIT_OK
    line = capsys.readouterr().out.strip()
    assert line.endswith("VARIATION CERTIFIED")
    lo, hi = _enclosure(line)
    tolerance = Fraction(1, 2**19)
    assert lo - tolerance <= Fraction("0.5849625") <= hi + tolerance


def test_realize_staircase_writes_map(capsys, tmp_path):
    out = tmp_path / "g.json"
    assert main(["realize", "--h", "1/2", "--h", "3/4", "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["nodes"][0] == ["0", "0"]
    assert data["nodes"][-1] == ["1", "1"]
    assert "escalera" in capsys.readouterr().out


def test_realize_out_of_range(tmp_path):
    assert main(["realize", "--h", "3/2", "--out", str(tmp_path / "x.json")]) == EXIT_USAGE


def test_sft_entropy_golden(capsys, tmp_path):
    path = _write(tmp_path / "golden.json", GOLDEN)
    assert main(["sft", "entropy", "--file", path]) == EXIT_OK
    line = capsys.readouterr().out.strip()
    assert line.endswith("SFT")
    lo, hi = _enclosure(line)
    assert lo <= Fraction("0.69424191363") <= hi
    assert hi - lo <= Fraction(1, 10**8)


def test_sft_mixing_and_kappa(capsys, tmp_path):
    path = _write(tmp_path / "golden.json", GOLDEN)
    assert main(["sft", "mixing", "--file", path]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["MIXING", "gap\t2"]
    assert main(["sft", "kappa", "--file", path, "--encode", "010010"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "0101"
    assert main(["sft", "kappa", "--file", path, "--decode", "0101"]) == EXIT_OK
    assert "010010".startswith(capsys.readouterr().out.strip())


def test_sft_kappa_rejects_inadmissible_word(tmp_path):
    path = _write(tmp_path / "golden.json", GOLDEN)
    assert main(["sft", "kappa", "--file", path, "--encode", "0110"]) == EXIT_USAGE


def test_centers_table_and_cache(capsys, tmp_path):
    cache = tmp_path / "centers.jsonl"
    args = ["centers", "--max-period", "3", "--cache-path", str(cache)]
    assert main(args) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "period\tr_lo\tr_hi\th_lo\th_hi\torbit_order"
    assert [line.split("\t")[0] for line in lines[1:]] == ["1", "2", "3"]
    assert lines[3].split("\t")[-1] == "2 3 1"
    stored = cache.read_text(encoding="utf-8")

    assert main(args) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == lines
    assert cache.read_text(encoding="utf-8") == stored


def test_json_output_is_deterministic(capsys, tmp_path):
    args = ["centers", "--max-period", "2", "--cache-path", str(tmp_path / "c.jsonl"), "--format", "json"]
    assert main(args) == EXIT_OK
    first = capsys.readouterr().out
    assert main(args) == EXIT_OK
    assert capsys.readouterr().out == first
    assert [record["period"] for record in json.loads(first)] == [1, 2]


def test_environment_cache_path_wins(capsys, tmp_path, monkeypatch):
    env_cache = tmp_path / "env.jsonl"
    monkeypatch.setenv("ENTROLAB_CACHE", str(env_cache))
    assert main(["centers", "--max-period", "1", "--cache-path", str(tmp_path / "flag.jsonl")]) == EXIT_OK
    assert env_cache.exists()
    assert not (tmp_path / "flag.jsonl").exists()


def test_environment_max_period_applies(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("ENTROLAB_MAX_PERIOD", "1")
    assert main(["centers", "--cache-path", str(tmp_path / "c.jsonl")]) == EXIT_OK
    assert len(capsys.readouterr().out.splitlines()) == 2


def test_malformed_inputs_are_usage_errors(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{no json", encoding="utf-8")
    assert main(["sft", "entropy", "--file", str(broken)]) == EXIT_USAGE
    assert main(["sft", "entropy", "--file", str(tmp_path / "missing.json")]) == EXIT_USAGE
    bad_map = _write(tmp_path / "bad.json", {"nodes": [["0", "0"], ["1", "2"]]})
    assert main(["entropy", "pwl", "--file", bad_map, "--method", "variation"]) == EXIT_USAGE
    assert main(["centers", "--max-period", "11"]) == EXIT_USAGE
    assert main(["sin-comando"]) == EXIT_USAGE
    assert main([]) == EXIT_USAGE


def test_logistic_tsv_reports_wall_time(capsys, tmp_path):
    args = ["entropy", "logistic", "--r", "7/2", "--eps", "1/32", "--max-period", "4",
            "--cache-path", str(tmp_path / "c.jsonl")]
    assert main(args) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("h in [")
    times = [line for line in lines if line.startswith("time\t")]
    assert len(times) == 1
    assert float(times[0].split("\t")[1]) >= 0
    assert lines.index(times[0]) < lines.index("side\td\th_lo\th_hi\twitness_period")

    assert main(args + ["--format", "json"]) == EXIT_OK
    assert "time" not in json.loads(capsys.readouterr().out)


def _spy_enumerate_centers(monkeypatch):
    import entrolab_apps.main as cli

    seen = []
    real = cli.enumerate_centers

    def spy(*args, **kwargs):
        seen.append(kwargs.get("bits"))
        return real(*args, **kwargs)

    monkeypatch.setattr(cli, "enumerate_centers", spy)
    return seen


def test_environment_bits_reach_centers(capsys, tmp_path, monkeypatch):
    seen = _spy_enumerate_centers(monkeypatch)
    args = ["centers", "--max-period", "2", "--cache-path", str(tmp_path / "c.jsonl")]
    assert main(args) == EXIT_OK
    monkeypatch.setenv("ENTROLAB_BITS", "200")
    assert main(args) == EXIT_OK
    assert main(args + ["--bits", "96"]) == EXIT_OK
    assert seen == [None, 200, 96]


def test_run_config_bits_default_to_adaptive():
    config = RunConfig()
    assert config.bits is None
    assert config.precision == DEFAULT_BITS
    assert RunConfig(bits=80).precision == 80
    with pytest.raises(ConfigError):
        RunConfig(bits=0)


def test_invalid_environment_bits_is_usage_error(tmp_path, monkeypatch):
    monkeypatch.setenv("ENTROLAB_BITS", "muchos")
    assert main(["centers", "--max-period", "1", "--cache-path", str(tmp_path / "c.jsonl")]) == EXIT_USAGE
