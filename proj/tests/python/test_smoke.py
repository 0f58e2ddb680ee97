"""End-to-end checks of the Python bindings."""

import math

import pytest

import rhxi


def test_version():
    assert rhxi.__version__ == "0.1.0"


def test_zeta_classical_values():
    z2 = rhxi.zeta(2.0)
    assert abs(z2["value"] - math.pi**2 / 6) < 1e-14
    assert z2["err_bound"] < 1e-30
    assert not z2["near_pole"]

    z0 = rhxi.zeta(0.0)
    assert abs(z0["value"] + 0.5) < 1e-15


def test_xi_fixed_points_and_strings():
    half = rhxi.xi(0.0)
    assert abs(half["value"] - 0.5) < 1e-15
    assert half["value_str"].startswith("0.5")
    sym_a = rhxi.xi(complex(0.3, 2.0))
    sym_b = rhxi.xi(complex(0.7, -2.0))
    assert abs(sym_a["value"] - sym_b["value"]) < 1e-14


def test_near_pole_flag():
    # zeta flags proximity to s = 1 well inside its guard band
    near_one = rhxi.zeta(complex(1.0, 1e-30))
    assert near_one["near_pole"]
    assert abs(near_one["value"]) > 1e25

    # a double-precision ordinate is ~5e-12 off in the xi ratio; at 80 bits
    # the proximity band (2^-36) is wide enough to notice it
    at_zero = rhxi.f_ratio(
        complex(0.5, 14.134725141734694), precision_bits=80, tol=1e-4
    )
    assert at_zero["near_pole"]

    # at the default precision the same point is just a regular evaluation
    clean = rhxi.f_ratio(complex(0.5, 14.134725141734694))
    assert not clean["near_pole"]


def test_zeta_pole_raises():
    with pytest.raises(rhxi.PoleError):
        rhxi.zeta(1.0)


def test_domain_error_raises():
    with pytest.raises(rhxi.DomainError):
        rhxi.i_of_eps(0.0)
    with pytest.raises(rhxi.DomainError):
        rhxi.scan_zeros(500.0)
    # the family is catchable via the shared base
    with pytest.raises(rhxi.RhxiError):
        rhxi.i_of_eps(-1.0)


def test_integral_against_reference():
    a = rhxi.i_of_eps(0.3, tol=1e-6, precision_bits=192)
    ref = rhxi.reference_value(tol=1e-6, precision_bits=192)
    combined = a["quad_err"] + a["tail_err"] + ref["quad_err"] + ref["tail_err"]
    assert abs(a["value"] - ref["value"]) <= 5 * combined
    assert a["t_used"] >= 12.0
    assert a["panels"] > 0


def test_closed_form_prefix():
    cf = rhxi.closed_form_j()
    assert cf["value_str"].startswith("5.6133588")
    j = rhxi.j_of_eps(0.1, tol=1e-8, precision_bits=192)
    assert abs(j["value"] - cf["value"]) < 1e-6


def test_scan_zeros():
    zl = rhxi.scan_zeros(30.0, precision_bits=128)
    assert [round(z["ordinate"], 6) for z in zl] == [14.134725, 21.022040, 25.010858]
    assert all(z["radius"] < 1e-10 for z in zl)


def test_residue_at_first_zero():
    est = rhxi.residue_at(complex(0.5, 14.134725141734694), precision_bits=192)
    assert est["winding"] == 1
    assert abs(est["residue"] - est["cross_check"]) < 1e-10
    assert abs(est["residue"].real + 8.15897158046504e-05) < 1e-12


def test_injected_sweep_flags_jump():
    res = rhxi.sweep(
        [0.2, 0.3],
        tol=1e-5,
        precision_bits=192,
        inject=(complex(0.01, 0.0), complex(0.75, 6.0)),
    )
    assert len(res["jumps"]) == 1
    jump = res["jumps"][0]
    assert jump["eps_lo"] == pytest.approx(0.2)
    assert jump["delta"] == pytest.approx(-0.02, rel=1e-2)
    assert not any(res["failed"])


def test_plain_sweep_is_quiet():
    res = rhxi.sweep([0.15, 0.35], tol=1e-5, precision_bits=192)
    assert res["jumps"] == []
    for v, e in zip(res["values"], res["err_bounds"]):
        assert abs(v - res["reference"]) <= 5 * (e + res["reference_err"])
