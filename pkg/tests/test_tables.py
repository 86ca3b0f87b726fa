from fractions import Fraction

import pytest

from simplexcube.tables import build_table, crossover_n, known_nu, theta_lower_rows, xi_small_rows


def test_theta_lower_rows_track_printed():
    rows = theta_lower_rows()
    assert len(rows) == 54
    assert not any(r["deviates"] for r in rows)
    computed = [r for r in rows if r["legendre_computed"] is not None]
    assert {r["n"] for r in computed} >= set(range(1, 21)) | {23, 31, 53}


def test_crossover_needs_the_53rd_row():
    rows = theta_lower_rows()
    assert crossover_n(rows) == 53
    assert crossover_n(rows[:52]) is None


def test_known_nu_sources():
    assert known_nu(3) == (Fraction(2, 6), "h_n fixture")
    assert known_nu(23)[1] == "Hadamard order"
    assert known_nu(53)[1].startswith("Ehlich")
    assert known_nu(21) == (None, "printed")


def test_xi_small_constructions():
    rows = {r["n"]: r for r in xi_small_rows()}
    assert rows[5]["xi_construction"] == 5 and rows[7]["xi_construction"] == 7
    assert all(r["xi_construction"] >= r["xi_lower"] for r in rows.values())


def test_unknown_table():
    with pytest.raises(ValueError):
        build_table("t9")
