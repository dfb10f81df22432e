# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-16 17:55

import json

import pytest

from punctual.cli import EXIT_CAP, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, \
    format_ascii, format_csv, main, render


def run(capsys, *argv):
    code = main(["--jobs", "1"] + list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out) if out.strip() else None


def test_no_subcommand(capsys):
    assert run(capsys)[0] == EXIT_USAGE


def test_bounds_gorenstein(capsys):
    code, payload = run_json(capsys, "bounds", "gorenstein", "3", "2", "4")

    assert code == EXIT_OK
    assert payload == {'dim': 11}


def test_bounds_margin(capsys):
    code, payload = run_json(capsys, "bounds", "margin", "tau_2", "5")

    assert code == EXIT_OK
    assert payload['locus'] == 52
    assert payload['expected'] == 48
    assert payload['verdict'] == "violating"


def test_bounds_invalid(capsys):
    assert run(capsys, "bounds", "margin", "tau_4", "5")[0] == EXIT_USAGE
    assert run(capsys, "bounds", "gorenstein", "3", "2")[0] == EXIT_USAGE


def test_bounds_nbound(capsys):
    code, payload = run_json(capsys, "bounds", "nbound", "2", "11", "4")

    assert code == EXIT_OK
    assert payload == {'N': 52}


def test_verify(capsys):
    code, payload = run_json(capsys, "verify", "sec23")

    assert code == EXIT_OK
    assert payload[0]['name'] == "sec23"
    assert payload[0]['passed']


def test_verify_unknown(capsys):
    assert run(capsys, "verify", "nope")[0] == EXIT_USAGE


def test_tangent_dual(capsys):
    code, payload = run_json(capsys, "tangent", "--dual", "y1^4, y2^3, y3*y4")

    assert code == EXIT_OK
    assert payload['T_pos'] == 17


def test_tangent_ideal(capsys):
    code, payload = run_json(
        capsys, "tangent", "--ideal", "x1^3, x2^2, x1*x3, x1*x2, x3^4",
        "--window", "1", "4"
    )

    assert code == EXIT_OK
    assert payload['series'] == {'1': 5, '2': 3, '3': 0, '4': 0}


def test_tangent_parse_error(capsys):
    assert run(capsys, "tangent", "--ideal", "x1 + 2.5")[0] == EXIT_USAGE


def test_apolar(capsys):
    code, payload = run_json(capsys, "apolar", "--dual", "y2*y3^3, y1^2")

    assert code == EXIT_OK
    assert payload['hilbert'] == [1, 3, 3, 2, 1]
    assert payload['socle_dim'] == 2
    assert payload['graded']


def test_enumerate_oseq(capsys):
    code, payload = run_json(capsys, "enumerate", "--kind", "oseq", "--k", "4")

    assert code == EXIT_OK
    assert sorted(payload) == [[1, 1, 1, 1], [1, 2, 1], [1, 3]]


def test_enumerate_cap(capsys):
    code, _ = run(
        capsys, "--cap", "1", "enumerate", "--kind", "monomial", "--n", "3",
        "--k", "6"
    )

    assert code == EXIT_CAP


def test_oseq_check(capsys):
    assert run_json(capsys, "oseq", "--check", "1,3,3,2,1")[1] == {
        'H': [1, 3, 3, 2, 1], 'o_sequence': True,
    }
    assert not run_json(capsys, "oseq", "--check", "1,2,4")[1]['o_sequence']
    assert run(capsys, "oseq")[0] == EXIT_USAGE


def test_regular(capsys):
    assert run(capsys, "regular", "--n", "1", "--k", "3")[0] == EXIT_USAGE

    code, payload = run_json(
        capsys, "--seed", "1", "regular", "--n", "2", "--k", "3", "--tau",
        "2", "--trials", "10"
    )

    assert code == EXIT_OK
    assert payload['passed']
    assert payload['seed'] == 1


def test_regular_projection_fails(capsys):
    code, payload = run_json(
        capsys, "--seed", "1", "regular", "--n", "1", "--k", "3",
        "--trials", "5", "--project", "2"
    )

    assert code == EXIT_MISMATCH
    assert not payload['passed']


def test_cache_status(capsys, tmp_path):
    code, payload = run_json(
        capsys, "--cache-dir", str(tmp_path), "cache", "status"
    )

    assert code == EXIT_OK
    assert payload['entries'] == 0


def test_cache_round(capsys, tmp_path):
    cache_dir = str(tmp_path / "cache")
    run(capsys, "--cache-dir", cache_dir, "enumerate", "--kind", "oseq",
        "--k", "5")

    assert run_json(
        capsys, "--cache-dir", cache_dir, "cache", "status"
    )[1]['entries'] == 1
    assert run_json(
        capsys, "--cache-dir", cache_dir, "cache", "rebuild"
    )[1]['diffs'] == []
    assert run_json(
        capsys, "--cache-dir", cache_dir, "cache", "clear"
    )[1]['removed'] == 1


def test_formats(capsys):
    code, out = run(
        capsys, "--format", "csv", "enumerate", "--kind", "oseq", "--k", "3"
    )

    assert code == EXIT_OK
    assert out.splitlines()[0] == "H"
    assert len(out.splitlines()) == 3

    code, out = run(capsys, "--format", "ascii", "bounds", "fiber", "5", "6", "1")

    assert code == EXIT_OK
    assert out.splitlines()[0].startswith("key")
    assert "9" in out.splitlines()[-1]


def test_render():
    assert render({'b': 1, 'a': 2}, "json") == '{\n  "a": 2,\n  "b": 1\n}'
    assert format_csv(["k", 1], [["x", 2]]) == "k,1\nx,2"
    assert format_ascii(["k", "v"], [["x", 10]]).splitlines() == [
        "k |  v", "--+---", "x | 10",
    ]


@pytest.mark.slow
def test_tables(capsys):
    code, payload = run_json(capsys, "tables", "o_sequences", "--k", "8")

    assert code == EXIT_OK
    assert payload['o_sequences']['diffs'] == []
