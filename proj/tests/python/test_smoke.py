"""Smoke tests for the python bindings."""

import math

import pytest

import toepcomm as tp


def test_parse_and_lower():
    assert tp.parse_check("( z + 0.5 ) ^ 2") == "(z+0.5)^2"
    s = tp.lower("(z+0.5)^2", order=8)
    assert s.order == 8
    assert s.coeffs[0] == 0.25
    assert s.coeffs[2] == 1.0
    assert abs(s.eval(-0.5)) == 0.0


def test_syntax_errors_are_value_errors():
    with pytest.raises(ValueError, match="position 3"):
        tp.parse_check("z^^2")


def test_winding_and_valence():
    assert tp.winding_number("(z+0.5)^2", 0j) == 2
    assert tp.winding_number("(z+0.5)^2", 1.21 + 0j) == 1
    assert tp.valence("z^6", 0j) == 6


def test_profile_and_probes():
    profile = tp.winding_profile("(z+0.5)^2", grid=16)
    windings = {s["n"] for s in profile["samples"]}
    assert {1, 2} <= windings
    assert tp.minimal_winding_of("z^6", grid=8) == 6
    assert tp.univalence("(z+0.5)^2")["certified_nonunivalent"]
    assert not tp.univalence("z+0.5")["certified_nonunivalent"]
    assert tp.single_cover("(z+0.5)^2")["single_covers"]


def test_factorization():
    assert tp.support_gcd("z^2+z^4") == 2
    bdu = tp.bdu_factor("z^2+z^4")
    assert bdu["k"] == 2
    assert bdu["residual"] < 1e-10
    k_gcd, k_wind, agree = tp.bdu_crosscheck("z^6")
    assert (k_gcd, k_wind, agree) == (6, 6, True)
    zeros = tp.tc_inner_part("(z+0.5)^2", -0.5 + 0j)
    assert len(zeros) == 2
    fit = tp.fit_through_blaschke("z^6", [0j] * 3, degree=4)
    assert fit["residual"] < 1e-10


def test_operator_space():
    t = tp.toeplitz_matrix("z", 4)
    assert t.shape == (4, 4)
    assert t[1, 0] == 1.0
    dims = tp.commutant_dims("z", 5)
    assert dims == (5, 5, 5)
    w = tp.density_witness("(z+0.5)^2", n=16, depth=6)
    assert w is not None and w["max_pairing"] <= 1e-8
    assert tp.density_witness("z", n=8, depth=7) is None
    sup = tp.fejer_supnorm_check("z", 3)
    assert math.isclose(sup[0], 0.75)
    basis = tp.malmquist_basis([0j, 0.5 + 0j], order=64)
    assert len(basis) == 2
    assert abs(basis[1][1] - math.sqrt(3) / 2) < 1e-12


def test_classify_and_plot():
    verdict = tp.classify("(z+0.5)^2")
    assert verdict["mcp"] == "No"
    assert verdict["dcp"] == "No"
    assert verdict["confidence"]["dcp"] == "Certified"
    assert any(rule["id"] == "R1" for rule in verdict["rules"])

    power = tp.classify("z^3")
    assert (power["mcp"], power["dcp"]) == ("No", "Yes")

    svg = tp.winding_plot_svg("(z+0.5)^2")
    assert svg.startswith("<svg")
    assert "#6baed6" in svg

    assert tp.example_dsl("cardioid") == "(z+0.5)^2"
    assert "identity" in tp.example_names()
