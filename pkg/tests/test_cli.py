"""End-to-end command-line runs, in process, with exit-code contracts."""

import json

import pytest

from hopfcyclic.cli import main, EXIT_OK, EXIT_FAIL, EXIT_USAGE


@pytest.fixture(scope="module")
def lib(tmp_path_factory):
    """A directory holding every shipped input file."""
    d = tmp_path_factory.mktemp("lib")
    assert main(["fixtures", "--output", str(d)]) == EXIT_OK
    return d


def test_check_fixture_library(capsys):
    assert main(["check", "--fixtures"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "ok" in out


def test_check_single_file(lib):
    assert main(["check", str(lib / "hopf-kz2.json")]) == EXIT_OK


def test_check_rejects_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["check", str(bad)]) == EXIT_USAGE
    captured = capsys.readouterr()
    assert "line" in captured.out + captured.err


def test_check_missing_file_is_usage_error(tmp_path):
    assert main(["check", str(tmp_path / "absent.json")]) == EXIT_USAGE


def test_degree_must_be_positive():
    assert main(["cohomology", "x.json", "--degree", "0"]) == EXIT_USAGE


def test_unknown_field_is_usage_error(lib):
    assert main(["check", str(lib / "hopf-kz2.json"),
                 "--field", "six"]) == EXIT_USAGE


def test_build_hopf(lib, capsys):
    assert main(["build", str(lib / "hopf-kz2.json")]) == EXIT_OK
    out = capsys.readouterr().out
    assert "axioms ok" in out
    assert "Cyc(algebra)" in out and "Cyc(coalgebra)" in out


def test_build_module_algebra_with_coefficients(lib, capsys):
    assert main(["build", str(lib / "module-algebra-dual-numbers.json"),
                 "--coefficients", str(lib / "modcomodule-trivial-kz2.json"),
                 "--degree", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "axioms" in out


def test_cohomology_models_agree(lib, capsys):
    assert main(["cohomology", str(lib / "hopf-kz2.json"),
                 "--model", "both", "--degree", "4"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "agree" in out


def test_compare_clean(lib):
    assert main(["compare", str(lib / "hopf-kz2.json"),
                 "--degree", "4"]) == EXIT_OK


def test_compare_corrupt_b_negative_control(lib, capsys):
    assert main(["compare", str(lib / "hopf-kz2.json"), "--degree", "4",
                 "--corrupt-b"]) == EXIT_FAIL
    out = capsys.readouterr().out
    assert "bB + Bb != 0" in out or "B^2 != 0" in out


def test_char_map(lib, capsys):
    assert main(["char-map", str(lib / "pairing-action-kz2.json"),
                 "--degree", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "routes agreed" in out


def test_pair_scenarios(lib):
    for via in ("trace-cup", "crossed", "cocrossed", "star"):
        assert main(["pair", "--via", via, "--degree", "2"]) == EXIT_OK, via


def test_pair_epi_and_drop_factor():
    assert main(["pair", "--via", "epi", "--degree", "1"]) == EXIT_OK
    assert main(["pair", "--via", "epi", "--degree", "1",
                 "--drop-factor"]) == EXIT_FAIL


def test_reports_are_deterministic(lib, tmp_path):
    r1, r2 = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["cohomology", str(lib / "hopf-kz2.json"), "--model", "both",
            "--degree", "4"]
    assert main(argv + ["--output", str(r1)]) == EXIT_OK
    assert main(argv + ["--output", str(r2)]) == EXIT_OK
    assert r1.read_bytes() == r2.read_bytes()
    rep = json.loads(r1.read_text())
    assert rep["ok"] is True and rep["command"] == "cohomology"
    assert rep["bicomplex"]["degrees"] == rep["mixed"]["degrees"]


def test_fixture_library_is_reproducible(lib, tmp_path):
    d2 = tmp_path / "again"
    d2.mkdir()
    assert main(["fixtures", "--output", str(d2)]) == EXIT_OK
    names = sorted(p.name for p in lib.iterdir())
    assert names == sorted(p.name for p in d2.iterdir())
    for name in names:
        assert (lib / name).read_bytes() == (d2 / name).read_bytes()


def test_sequential_flag_is_accepted(lib):
    assert main(["check", str(lib / "hopf-kz2.json"),
                 "--sequential"]) == EXIT_OK
