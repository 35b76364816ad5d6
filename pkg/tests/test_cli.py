"""End-to-end runs of every subcommand through cli.main."""

import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from sumset_races.cli import main

PROBLEM = {"n": 2, "H": 2, "theta": "1", "m": [[1, 0]]}
TARGETS = {"targets": [[1, 2], [2, 1]]}


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def built(tmp_path):
    problem = write(tmp_path / "problem.json", PROBLEM)
    output = str(tmp_path / "out.json")
    assert main(["build", problem, output]) == 0
    return problem, output


class TestBuild:
    def test_writes_passing_report(self, built):
        _, output = built
        data = json.loads(open(output).read())
        assert data["all_pass"] is True
        assert len(data["sets"]) == 2

    def test_three_set_problem(self, tmp_path):
        problem = write(
            tmp_path / "p.json",
            {"n": 3, "H": 3, "theta": "3/7", "m": [[0, 0, 1], [-2, 3, 0]]},
        )
        output = str(tmp_path / "o.json")
        assert main(["build", problem, output]) == 0
        assert json.loads(open(output).read())["all_pass"] is True

    @pytest.mark.parametrize(
        "obj",
        [
            {"n": 2, "H": 1, "theta": "1", "m": [[1]]},
            {"n": 2, "H": 2, "theta": "1.5", "m": [[1, 0]]},
            {"n": 2, "H": 2, "theta": "1"},
        ],
    )
    def test_schema_problems_exit_2(self, tmp_path, obj):
        problem = write(tmp_path / "p.json", obj)
        assert main(["build", problem, str(tmp_path / "o.json")]) == 2

    def test_malformed_json_exits_2(self, tmp_path, capsys):
        bad = tmp_path / "p.json"
        bad.write_text("{oops")
        assert main(["build", str(bad), str(tmp_path / "o.json")]) == 2
        assert "schema error" in capsys.readouterr().err

    def test_missing_file_exits_2(self, tmp_path):
        assert main(["build", str(tmp_path / "absent.json"), str(tmp_path / "o.json")]) == 2


class TestVerify:
    def test_passes_on_fresh_build(self, built, capsys):
        problem, output = built
        assert main(["verify", output, problem]) == 0
        out = capsys.readouterr().out
        assert "verification passed" in out
        assert "telescoping: 2/2 ok" in out  # one pair, two folds

    def test_tampered_sets_exit_3(self, built, tmp_path, capsys):
        problem, output = built
        data = json.loads(open(output).read())
        first = data["sets"][0]
        first[-1][1] = "9999"  # stretch the last part
        tampered = write(tmp_path / "tampered.json", data)
        assert main(["verify", tampered, problem]) == 3
        assert "FAIL" in capsys.readouterr().out

    def test_wrong_set_count_exits_2(self, built, tmp_path):
        problem, output = built
        data = json.loads(open(output).read())
        data["sets"].append(data["sets"][0])
        assert main(["verify", write(tmp_path / "extra.json", data), problem]) == 2

    def test_race_output_is_accepted_as_sets_file(self, built, tmp_path):
        # shared 'sets' key: verify reads race output too (and fails its
        # checks, since the race sets solve a different problem)
        problem, _ = built
        targets = write(tmp_path / "t.json", TARGETS)
        race_out = str(tmp_path / "race.json")
        assert main(["race", targets, race_out]) == 0
        assert main(["verify", race_out, problem]) == 3


class TestRace:
    def test_finds_and_realizes_witness(self, tmp_path, capsys):
        targets = write(tmp_path / "t.json", TARGETS)
        output = str(tmp_path / "race.json")
        assert main(["race", targets, output, "--ground", "12", "--maxsize", "5"]) == 0
        assert "witness found" in capsys.readouterr().out
        data = json.loads(open(output).read())
        assert data["all_pass"] is True
        assert [row["target"] for row in data["report"]] == [[1, 2], [2, 1]]
        assert len(data["witness"]) == 2

    def test_exhaustion_exits_4(self, tmp_path, capsys):
        targets = write(tmp_path / "t.json", TARGETS)
        output = str(tmp_path / "race.json")
        assert main(["race", targets, output, "--ground", "2", "--maxsize", "2"]) == 4
        assert "search exhausted" in capsys.readouterr().out

    def test_bad_flags_exit_2(self, tmp_path):
        targets = write(tmp_path / "t.json", TARGETS)
        output = str(tmp_path / "race.json")
        assert main(["race", targets, output, "--ground", "-1"]) == 2
        assert main(["race", targets, output, "--maxsize", "0"]) == 2

    def test_invalid_targets_exit_2(self, tmp_path):
        targets = write(tmp_path / "t.json", {"targets": [[1, 3]]})
        assert main(["race", targets, str(tmp_path / "o.json")]) == 2


class TestPlot:
    def test_renders_rows_per_set_and_fold(self, built, tmp_path):
        _, output = built
        svg_path = tmp_path / "chart.svg"
        assert main(["plot", output, str(svg_path), "--hmax", "2"]) == 0
        root = ET.fromstring(svg_path.read_text())
        assert root.tag.endswith("svg")
        ns = {"s": "http://www.w3.org/2000/svg"}
        rows = [g for g in root.iter("{http://www.w3.org/2000/svg}g") if g.get("class") == "row"]
        assert len(rows) == 4  # 2 sets, folds 1 and 2
        labels = {g.get("data-label") for g in rows}
        assert labels == {"A1", "2A1", "A2", "2A2"}
        assert root.findall(".//s:rect", ns)

    def test_bad_hmax_exits_2(self, built, tmp_path):
        _, output = built
        assert main(["plot", output, str(tmp_path / "x.svg"), "--hmax", "0"]) == 2


class TestOracle:
    def test_grid_brackets_exact_measures(self, built, capsys):
        _, output = built
        assert main(["oracle", output]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out
        assert out.count(" ok") >= 2

    def test_custom_step(self, built):
        _, output = built
        assert main(["oracle", output, "--grid-step", "1/4096"]) == 0

    def test_rejects_bad_step(self, built):
        _, output = built
        assert main(["oracle", output, "--grid-step", "0"]) == 2
        assert main(["oracle", output, "--grid-step", "0.5"]) == 2


class TestEntryPoints:
    def test_module_invocation(self, tmp_path):
        problem = write(tmp_path / "p.json", PROBLEM)
        output = str(tmp_path / "o.json")
        proc = subprocess.run(
            [sys.executable, "-m", "sumset_races", "build", problem, output],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "difference checks pass" in proc.stdout

    def test_usage_error_shares_exit_2(self):
        with pytest.raises(SystemExit) as err:
            main(["no-such-command"])
        assert err.value.code == 2
