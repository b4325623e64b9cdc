from fractions import Fraction

import pytest

from intrinsic_dim import parse_transactions
from intrinsic_dim.cli import main, run_sweep, sweep_rows_to_csv

F = Fraction

TOY_SWEEP_CSV = (
    "dataset,min_support,min_confidence,num_rules,integral,dimension,integral_exact\n"
    "toy,0.33333333333333331,1,4,0.1111111111111111,81,1/9\n"
    "toy,0.66666666666666663,1,2,0.1111111111111111,81,1/9\n"
)

TOY_CURVE_CSV = (
    "alpha,obs_diam,alpha_exact,obs_diam_exact\n"
    "0,0.33333333333333331,0,1/3\n"
    "0.16666666666666666,0.33333333333333331,1/6,1/3\n"
    "0.33333333333333331,0,1/3,0\n"
    "0.66666666666666663,0,2/3,0\n"
    "1,0,1,0\n"
)


class TestStats:
    def test_key_values(self, toy_file, capsys):
        assert main(["stats", str(toy_file)]) == 0
        out = capsys.readouterr().out
        assert "num_transactions=3" in out
        assert "universe_size=3" in out
        assert "density=2/3" in out

    def test_csv(self, toy_file, capsys):
        assert main(["stats", str(toy_file), "--csv"]) == 0
        assert capsys.readouterr().out.splitlines()[1] == "3,0,3,0.66666666666666663,2/3"

    def test_duplicates_reported(self, tmp_path, capsys):
        path = tmp_path / "dup.dat"
        path.write_text("1 2\n1 2\n", encoding="utf-8")
        assert main(["stats", str(path)]) == 0
        assert "num_duplicates_removed=1" in capsys.readouterr().out

    def test_empty_file_exits_2(self, tmp_path, capsys):
        path = tmp_path / "empty.dat"
        path.write_text("", encoding="utf-8")
        assert main(["stats", str(path)]) == 2
        assert "no transactions" in capsys.readouterr().err

    def test_missing_file_exits_2(self, tmp_path, capsys):
        assert main(["stats", str(tmp_path / "nope.dat")]) == 2


class TestDim:
    def test_toy_exact_line(self, toy_file, capsys):
        assert main(
            ["dim", str(toy_file), "--min-support", "1/3", "--min-confidence", "1"]
        ) == 0
        assert capsys.readouterr().out == "rules=4 integral=1/9 dimension=81\n"

    def test_no_frequent_itemsets(self, toy_file, capsys):
        assert main(
            ["dim", str(toy_file), "--min-support", "0.9", "--min-confidence", "1.0"]
        ) == 0
        assert capsys.readouterr().out == "rules=0 integral=0 dimension=inf\n"

    @pytest.mark.parametrize("support", ["0", "1.5", "-1/3", "abc"])
    def test_invalid_threshold_exits_3(self, toy_file, support, capsys):
        assert main(
            ["dim", str(toy_file), "--min-support", support, "--min-confidence", "1"]
        ) == 3

    def test_missing_flag_exits_3(self, toy_file):
        assert main(["dim", str(toy_file), "--min-support", "1/3"]) == 3

    def test_universe_override_changes_head_measure(self, toy_file, capsys):
        assert main(
            [
                "dim",
                str(toy_file),
                "--min-support",
                "1/3",
                "--min-confidence",
                "1",
                "--universe",
                "6",
            ]
        ) == 0
        # Head measures halve (1/6), integral halves, dimension quadruples.
        assert capsys.readouterr().out == "rules=4 integral=1/18 dimension=324\n"


class TestSweep:
    def test_toy_golden_csv(self, toy_file, tmp_path, capsys):
        out = tmp_path / "sweep.csv"
        assert main(
            [
                "sweep",
                str(toy_file),
                "--supports",
                "1/3,2/3",
                "--confidences",
                "1.0",
                "--out",
                str(out),
            ]
        ) == 0
        assert out.read_text(encoding="utf-8") == TOY_SWEEP_CSV

    def test_rows_sorted_by_confidence_then_support(self, toy_file, tmp_path):
        out = tmp_path / "sweep.csv"
        assert main(
            [
                "sweep",
                str(toy_file),
                "--supports",
                "2/3,1/3",
                "--confidences",
                "1.0,0.5",
                "--out",
                str(out),
            ]
        ) == 0
        rows = out.read_text(encoding="utf-8").splitlines()[1:]
        keys = [(float(r.split(",")[2]), float(r.split(",")[1])) for r in rows]
        assert keys == sorted(keys)

    def test_dimension_monotone_within_confidence(self, toy_file, tmp_path):
        out = tmp_path / "sweep.csv"
        assert main(
            [
                "sweep",
                str(toy_file),
                "--supports",
                "1/3,2/3,0.9",
                "--confidences",
                "0.5,1.0",
                "--out",
                str(out),
            ]
        ) == 0
        rows = [line.split(",") for line in out.read_text().splitlines()[1:]]
        by_confidence: dict[str, list[float]] = {}
        for row in rows:
            by_confidence.setdefault(row[2], []).append(float(row[5]))
        for dims in by_confidence.values():
            assert dims == sorted(dims)

    def test_cells_match_single_runs(self, toy_file, tmp_path, capsys):
        out = tmp_path / "sweep.csv"
        main(
            [
                "sweep",
                str(toy_file),
                "--supports",
                "1/3",
                "--confidences",
                "0.5",
                "--out",
                str(out),
            ]
        )
        row = out.read_text().splitlines()[1].split(",")
        main(["dim", str(toy_file), "--min-support", "1/3", "--min-confidence", "0.5"])
        report = capsys.readouterr().out.strip()
        assert report == f"rules={row[3]} integral={row[6]} dimension=" + (
            "inf" if row[5] == "inf" else str(1 / F(row[6]) ** 2)
        )

    def test_empty_supports_exit_3(self, toy_file, tmp_path):
        out = tmp_path / "sweep.csv"
        assert main(
            ["sweep", str(toy_file), "--supports", ",", "--confidences", "1", "--out", str(out)]
        ) == 3
        assert not out.exists()

    def test_failure_leaves_no_partial_output(self, tmp_path):
        out = tmp_path / "sweep.csv"
        missing = tmp_path / "missing.dat"
        assert main(
            ["sweep", str(missing), "--supports", "1/3", "--confidences", "1", "--out", str(out)]
        ) == 2
        assert list(tmp_path.iterdir()) == []

    def test_threads_env_gives_identical_output(self, toy_file, tmp_path, monkeypatch):
        seq = tmp_path / "seq.csv"
        par = tmp_path / "par.csv"
        main(
            ["sweep", str(toy_file), "--supports", "1/3,2/3,0.9", "--confidences", "0.5,0.8,1", "--out", str(seq)]
        )
        monkeypatch.setenv("INTRINSIC_DIM_THREADS", "4")
        main(
            ["sweep", str(toy_file), "--supports", "1/3,2/3,0.9", "--confidences", "0.5,0.8,1", "--out", str(par)]
        )
        assert seq.read_bytes() == par.read_bytes()

    def test_bad_threads_env_warns_and_runs(self, toy_file, tmp_path, monkeypatch, capsys):
        out = tmp_path / "sweep.csv"
        monkeypatch.setenv("INTRINSIC_DIM_THREADS", "lots")
        assert main(
            ["sweep", str(toy_file), "--supports", "1/3", "--confidences", "1", "--out", str(out)]
        ) == 0
        assert "INTRINSIC_DIM_THREADS" in capsys.readouterr().err


class TestObsDiamCurve:
    def test_toy_golden(self, toy_file, capsys):
        assert main(
            ["obsdiam-curve", str(toy_file), "--min-support", "1/3", "--min-confidence", "1"]
        ) == 0
        assert capsys.readouterr().out == TOY_CURVE_CSV

    def test_alpha_increasing_value_non_increasing(self, toy_file, capsys):
        main(
            [
                "obsdiam-curve",
                str(toy_file),
                "--min-support",
                "1/3",
                "--min-confidence",
                "0.5",
                "--resolution",
                "10",
            ]
        )
        rows = [line.split(",") for line in capsys.readouterr().out.splitlines()[1:]]
        alphas = [F(r[2]) for r in rows]
        values = [F(r[3]) for r in rows]
        assert alphas == sorted(set(alphas))
        assert all(a >= b for a, b in zip(values, values[1:]))

    def test_empty_rule_set_constant_zero(self, toy_file, capsys):
        main(
            ["obsdiam-curve", str(toy_file), "--min-support", "0.9", "--min-confidence", "1"]
        )
        rows = [line.split(",") for line in capsys.readouterr().out.splitlines()[1:]]
        assert all(r[3] == "0" for r in rows)

    def test_out_file(self, toy_file, tmp_path):
        out = tmp_path / "curve.csv"
        assert main(
            [
                "obsdiam-curve",
                str(toy_file),
                "--min-support",
                "1/3",
                "--min-confidence",
                "1",
                "--out",
                str(out),
            ]
        ) == 0
        assert out.read_text(encoding="utf-8") == TOY_CURVE_CSV


class TestSynth:
    def test_cube_one(self, capsys):
        assert main(["synth", "--cube", "1"]) == 0
        assert capsys.readouterr().out == (
            "n=1 integral=1/2 dimension=4 dimension_decimal=4\n"
        )

    def test_cube_two_decimal(self, capsys):
        assert main(["synth", "--cube", "2"]) == 0
        out = capsys.readouterr().out
        assert "dimension=64/9" in out
        assert "dimension_decimal=7.1111111111111107" in out

    def test_cube_invalid_exits_3(self):
        assert main(["synth", "--cube", "0"]) == 3

    def test_random_round_trip(self, tmp_path):
        out = tmp_path / "rand.dat"
        assert main(["synth", "--random", "0,6,10,0.5", "--out", str(out)]) == 0
        from intrinsic_dim import random_transaction_db

        db = random_transaction_db(0, 6, 10, 0.5)
        with open(out, encoding="utf-8") as handle:
            parsed, _ = parse_transactions(handle, declared_universe=6)
        assert parsed.as_token_sets() == db.as_token_sets()

    @pytest.mark.parametrize(
        "spec", ["1,2,3", "a,b,c,d", "0,5,5,1.0", "0,0,5,0.5"]
    )
    def test_random_invalid_exits_3(self, spec):
        assert main(["synth", "--random", spec]) == 3

    def test_cube_and_random_mutually_exclusive(self):
        assert main(["synth", "--cube", "1", "--random", "0,1,1,0.5"]) == 3


class TestParsing:
    def test_unknown_command_exits_3(self):
        assert main(["frobnicate"]) == 3

    def test_library_sweep_matches_cli(self, toy_file):
        with open(toy_file, encoding="utf-8") as handle:
            db, _ = parse_transactions(handle)
        rows = run_sweep(db, "toy", [F(1, 3), F(2, 3)], [F(1)])
        assert sweep_rows_to_csv(rows) == TOY_SWEEP_CSV
