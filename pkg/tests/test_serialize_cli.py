import io
import json
import subprocess
import sys
from dataclasses import dataclass
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from simplexcube import cli
from simplexcube.cube import projector_norm_cube, xi_cube
from simplexcube.families import catalog
from simplexcube.serialize import decode, dumps, encode, format_float, report_to_csv, rows_to_csv
from simplexcube.simplex import format_simplex


@dataclass
class _Rec:
    a: Fraction
    b: float
    c: tuple
    _hidden: int = 0


def test_encode_basic():
    e = encode(_Rec(Fraction(3, 4), 0.1, (1, Fraction(2))))
    assert e == {"a": "3/4", "b": 0.1, "c": [1, "2"]}
    assert encode({(0, 1): frozenset({3, 1})}) == {"0 1": [1, 3]}


@given(st.fractions(max_denominator=10**9))
def test_fraction_round_trip(q):
    assert decode(json.loads(json.dumps(encode(q)))) == q


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_float_round_trip(x):
    assert float(format_float(x)) == x
    assert json.loads(json.dumps(encode(x))) == x


@pytest.mark.parametrize("name", ["s1", "s2", "v(1/2,1/2)", "hadamard(3)"])
def test_report_round_trip(name):
    S = catalog(name)
    for rep in (xi_cube(S), projector_norm_cube(S)):
        e = encode(rep)
        assert encode(decode(json.loads(dumps(rep)))) == e


def test_csv():
    rows = [{"n": 1, "v": Fraction(1, 3)}, {"n": 2, "w": None, "v": [1, 2]}]
    assert rows_to_csv(rows) == "n,v,w\n1,1/3,\n2,1;2,\n"
    assert report_to_csv({"xi": Fraction(3)}) == "key,value\nxi,3\n"


def _run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_catalog_pipes_into_xi(monkeypatch, capsys):
    code, text, _ = _run(["catalog", "s1"], monkeypatch=monkeypatch, capsys=capsys)
    assert code == 0
    code, out, _ = _run(["xi", "--format", "json"], text, monkeypatch, capsys)
    assert code == 0
    data = json.loads(out)
    assert data["xi"] == "3"
    assert len(data["witness_vertices"]) == 4


def test_json_output_is_stable(monkeypatch, capsys):
    text = format_simplex(catalog("s2"))
    outs = {_run(["norm-cube", "--format", "json"], text, monkeypatch, capsys)[1] for _ in range(3)}
    assert len(outs) == 1


def test_d_series(monkeypatch, capsys):
    code, out, _ = _run(["d-series", "--max", "50", "--format", "json"], monkeypatch=monkeypatch, capsys=capsys)
    assert code == 0
    rows = json.loads(out)
    # exact zeros are emitted as the rational string "0"
    zeros = [r["n"] for r in rows if r["d_n"] == "0"]
    assert zeros == [3, 8, 15, 24, 35, 48]


def test_table_t6(monkeypatch, capsys):
    code, out, _ = _run(["table", "--name", "t6", "--format", "json"], monkeypatch=monkeypatch, capsys=capsys)
    assert code == 0
    rows = json.loads(out)
    assert [r["xi_prime"] for r in rows[:5]] == ["1", "4", "3", "13/3", "11/2"]
    assert rows[5]["xi_prime"] is None
    assert rows[6]["theta_prime"] == "5/2"


def test_exit_codes(monkeypatch, capsys):
    assert _run(["catalog", "nope"], monkeypatch=monkeypatch, capsys=capsys)[0] == 2
    assert _run(["xi"], "0 0\n1 x\n", monkeypatch, capsys)[0] == 2
    assert _run(["search-01", "-n", "7"], monkeypatch=monkeypatch, capsys=capsys)[0] == 3
    code, _, err = _run(["search-01", "-n", "6"], monkeypatch=monkeypatch, capsys=capsys)
    assert code == 3 and "error" in err


def test_perfect_check_rejects_outside(monkeypatch, capsys):
    code, _, err = _run(["perfect-check"], "0 0\n2 0\n0 1\n", monkeypatch, capsys)
    assert code == 2 and err


def test_module_entry_point():
    text = format_simplex(catalog("s1"))
    p = subprocess.run([sys.executable, "-m", "simplexcube", "xi", "--format", "csv"],
                       input=text, capture_output=True, text=True, check=True)
    assert p.stdout.splitlines()[1] == "xi,3"


S2_TEXT = format_simplex(catalog("s2"))

EVERY_SUBCOMMAND = [
    (["xi"], S2_TEXT, "xi: 3"),
    (["alpha"], S2_TEXT, "alpha: 3"),
    (["alpha", "--domain", "ball"], S2_TEXT, "agree: True"),
    (["diam"], S2_TEXT, "1 1 1"),
    (["norm-cube"], S2_TEXT, "norm:"),
    (["norm-ball", "--radius", "2"], S2_TEXT, "sign_vector:"),
    (["ball-report", "--center", "0.5,0.5,0.5"], S2_TEXT, "euler_ratio:"),
    (["psi", "-n", "4"], "", "exact: 11/5"),
    (["d-series", "--max", "3"], "", "3,0"),
    (["theta-lower", "--cube", "-n", "10", "--h", "320"], "", "legendre_bound: 1.66989"),
    (["theta-lower", "--cube", "-n", "3", "--nu", "1/3"], "", "legendre_bound: 1.2492"),
    (["theta-lower", "--ball", "-n", "9"], "", "ball_lower_bound:"),
    (["slice-measure", "-n", "3", "--gamma", "1.5"], "", "measure: 1.03125"),
    (["hadamard-simplex", "-n", "3"], "", "1 1 1"),
    (["maxdet-check"], "1 0 0\n0 1 0\n1 1 1\n", "ProvablyNonMaximal"),
    (["h-search", "-n", "4"], "", "h_n: 3"),
    (["catalog", "list"], "", "s-star"),
    (["cut-volumes"], S2_TEXT, "1/4 1/4 1/4 1/4"),
    (["perfect-check"], S2_TEXT, "is_perfect: True"),
    (["search-01", "-n", "3", "--objective", "norm"], "", "value: 2"),
    (["table", "--name", "theta-lower"], "", "53,"),
    (["table", "--name", "xi-small"], "", "V(1/2,1/2)"),
    (["table", "--name", "theta-upper-small"], "", "7/2,5,4"),
]


@pytest.mark.parametrize("argv,stdin,needle", EVERY_SUBCOMMAND, ids=lambda x: x if isinstance(x, str) else None)
def test_every_subcommand(argv, stdin, needle, monkeypatch, capsys):
    code, out, err = _run(argv, stdin, monkeypatch, capsys)
    assert code == 0, err
    assert needle in out
