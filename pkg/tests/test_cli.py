import math

import pytest

from besselcert.cli import CSV_HEADER, main

# a 17-digit rendering of J_0(1); the printed string may differ in the last
# digit (it shows the double's own expansion) but parses to the same double
J0_AT_1 = float("0.76519768655796655")


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows_of(stdout):
    lines = stdout.splitlines()
    assert lines[0] == CSV_HEADER
    return [line.split(",") for line in lines[1:]]


class TestEval:
    def test_reference_row(self, capsys):
        code, out, _ = run(capsys, "eval", "--nu", "0", "--x", "1")
        assert code == 0
        (row,) = rows_of(out)
        assert row[0] == "oracle"
        assert float(row[3]) == J0_AT_1
        assert float(row[5]) < 1e-15
        assert row[7] == "true"

    def test_missing_flag_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "eval", "--nu", "0")
        assert code == 2

    def test_domain_error_is_usage_error(self, capsys):
        code, _, err = run(capsys, "eval", "--nu", "0", "--x", "-3")
        assert code == 2 and "error:" in err


class TestApprox:
    def test_exact_case_prints_zero_width(self, capsys):
        code, out, _ = run(capsys, "approx", "--nu", "0.5", "--x", "3")
        assert code == 0
        (row,) = rows_of(out)
        assert row[0] == "sharp_low" and row[5] == "0"

    def test_olver_point(self, capsys):
        code, out, _ = run(capsys, "approx", "--nu", "5", "--x", "20",
                           "--method", "olver", "--l1", "3", "--l2", "3")
        assert code == 0
        (row,) = rows_of(out)
        assert float(row[6]) <= 1 and row[7] == "true"

    def test_transition_takes_z(self, capsys):
        code, out, _ = run(capsys, "approx", "--nu", "10", "--x", "0.5",
                           "--method", "transition")
        assert code == 0
        (row,) = rows_of(out)
        assert float(row[2]) == 0.5  # the z coordinate, not 10 + 10^(1/3)/2


class TestBounds:
    def test_point_bound_row(self, capsys):
        code, out, _ = run(capsys, "bounds", "--name", "watson",
                           "--nu", "1", "--x", "2")
        assert code == 0
        (row,) = rows_of(out)
        assert float(row[4]) == pytest.approx(1.0, rel=1e-14)

    def test_two_report_bound(self, capsys):
        code, out, _ = run(capsys, "bounds", "--name", "log_derivative",
                           "--nu", "0.5", "--x", "0.5")
        assert code == 0
        rows = rows_of(out)
        assert len(rows) == 2
        assert float(rows[0][3]) == pytest.approx(math.sqrt(3) - 2, rel=1e-14)

    def test_missing_required_flag(self, capsys):
        code, _, err = run(capsys, "bounds", "--name", "monotonic", "--nu", "2")
        assert code == 2 and "--t" in err

    def test_plain_format(self, capsys):
        code, out, _ = run(capsys, "bounds", "--name", "airy_envelope",
                           "--x", "3", "--format", "plain")
        assert code == 0
        assert out.startswith("airy_envelope: nu=nan x=3")


class TestZeros:
    def test_airy_estimate_row(self, capsys):
        code, out, _ = run(capsys, "zeros", "--family", "airy", "--s", "1",
                           "--mode", "full")
        assert code == 0
        (row,) = rows_of(out)
        assert abs(float(row[3]) - 2.338107410) < 0.00122
        assert row[7] == "true"

    def test_bessel_requires_order(self, capsys):
        code, _, err = run(capsys, "zeros", "--family", "bessel", "--s", "1")
        assert code == 2 and "--nu" in err

    def test_bessel_row_contains_pi(self, capsys):
        code, out, _ = run(capsys, "zeros", "--family", "bessel", "--s", "1",
                           "--nu", "0.5")
        assert code == 0
        (row,) = rows_of(out)
        center, refined, hw = float(row[3]), float(row[4]), float(row[5])
        assert refined == pytest.approx(math.pi, abs=1e-9)
        assert center <= refined <= center + hw


class TestScan:
    def test_one_row_per_check(self, capsys):
        code, out, _ = run(capsys, "scan", "--method", "classic",
                           "--nu-list", "0,1,5", "--x-lo", "0.5",
                           "--x-hi", "100", "--points", "20")
        assert code == 0
        assert len(rows_of(out)) == 60

    def test_bound_names_are_scannable(self, capsys):
        code, out, _ = run(capsys, "scan", "--method", "envelope",
                           "--nu-list", "0.5,2", "--x-lo", "1",
                           "--x-hi", "50", "--points", "10")
        assert code == 0
        assert len(rows_of(out)) == 20

    def test_byte_identical_reruns(self, capsys):
        args = ("scan", "--method", "sharp", "--nu-list", "0,0.5,3",
                "--x-lo", "0.3", "--x-hi", "120", "--points", "15")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2

    def test_empty_admissible_grid(self, capsys):
        code, _, err = run(capsys, "scan", "--method", "derivative",
                           "--nu-list", "10", "--x-lo", "0.5",
                           "--x-hi", "5", "--points", "5")
        assert code == 2 and "no admissible" in err

    def test_bad_nu_list(self, capsys):
        code, _, _ = run(capsys, "scan", "--method", "classic",
                         "--nu-list", "0;1", "--x-lo", "1",
                         "--x-hi", "2", "--points", "5")
        assert code == 2


class TestSup:
    def test_row_in_window(self, capsys):
        code, out, _ = run(capsys, "sup", "--nu", "2", "--coarse-points", "400")
        assert code == 0
        (row,) = rows_of(out)
        normalized = float(row[3]) / float(row[4])
        assert 0.35 < normalized < 1.26

    def test_degenerate_window_fails_the_sandwich(self, capsys):
        # a sub-oscillation window cannot see the sup; the row reports the
        # broken sandwich and the exit code says so
        code, out, _ = run(capsys, "sup", "--nu", "0.51", "--x-max", "0.5",
                           "--coarse-points", "50")
        assert code == 1
        (row,) = rows_of(out)
        assert row[7] == "false"


class TestHarness:
    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "rows.csv"
        code = main(["eval", "--nu", "1", "--x", "2", "--output", str(target)])
        assert code == 0
        text = target.read_text()
        assert text.startswith(CSV_HEADER + "\n") and text.endswith("\n")
        assert capsys.readouterr().out == ""

    def test_no_subcommand(self, capsys):
        assert main([]) == 2

    def test_unknown_choice(self, capsys):
        assert main(["approx", "--nu", "0", "--x", "1",
                     "--method", "chebyshev"]) == 2

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
