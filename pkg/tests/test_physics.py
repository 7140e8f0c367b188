import json
import math

import pytest

from nanoloop import (
    CODATA_2018,
    PICOMETRE_UNITS,
    PhysicalConstants,
    RectParams,
    TriParams,
    derive_rect,
    derive_tri,
    potential_from_gamma,
    tunneling_length,
)
from nanoloop.errors import ConfigError, DomainError
from nanoloop.physics import ENV_CONSTANTS, constants_from_env, load_constants

from oracles import kinetic_factor_mp, wavenumber_mp


def test_kinetic_factor_matches_high_precision():
    ref = float(kinetic_factor_mp())
    assert CODATA_2018.kinetic_factor == pytest.approx(ref, rel=1e-12)
    assert CODATA_2018.kinetic_factor == pytest.approx(26.2468, abs=5e-5)


def test_picometre_units_scale():
    assert PICOMETRE_UNITS.kinetic_factor == pytest.approx(CODATA_2018.kinetic_factor * 1e-6, rel=1e-14)


def test_wavenumber_one_ev():
    d = derive_rect(RectParams(a=-1.0, b=0.5, E=1.0, V0=2.0))
    assert d.k == pytest.approx(float(wavenumber_mp(1)), rel=1e-12)
    assert d.k == pytest.approx(5.1232, abs=1e-4)


def test_half_height_gives_k_equal_beta():
    d = derive_rect(RectParams(a=-0.5, b=0.5, E=0.5, V0=1.0))
    assert d.k == d.beta
    assert d.k == pytest.approx(float(wavenumber_mp("0.5")), rel=1e-12)
    assert d.k == pytest.approx(3.6227, abs=1e-4)
    assert d.Theta == d.k * -0.5


@pytest.mark.parametrize("E,V0", [(0.0, 1.0), (1.0, 1.0), (1.5, 1.0), (-0.1, 1.0)])
def test_derive_rect_rejects_non_tunneling(E, V0):
    with pytest.raises(DomainError):
        derive_rect(RectParams(a=-0.5, b=0.5, E=E, V0=V0) if E > 0 else RectParams(a=-0.5, b=0.5, E=E, V0=V0))


def test_rect_params_domain():
    RectParams(a=0.0, b=0.0, E=0.5, V0=1.0)  # shorted barrier
    with pytest.raises(DomainError):
        RectParams(a=0.1, b=0.5, E=0.5, V0=1.0)
    with pytest.raises(DomainError):
        RectParams(a=-0.1, b=-0.5, E=0.5, V0=1.0)
    with pytest.raises(DomainError):
        RectParams(a=math.nan, b=0.5, E=0.5, V0=1.0)


def test_derive_tri_values():
    d = derive_tri(TriParams(E=0.5, V0=1.0, c=1.0))
    assert d.gamma == pytest.approx(float(kinetic_factor_mp()) ** (1 / 3), rel=1e-12)
    assert d.gamma == pytest.approx(2.971, abs=1e-3)  # 2.97184...
    assert d.K == -d.X
    assert d.X == pytest.approx(d.gamma / 2, rel=1e-15)
    assert d.R == d.gamma / d.k
    assert d.Theta is None


def test_derive_tri_identities_over_grid():
    for E in (0.01, 0.2, 0.5, 0.77, 0.99):
        for V0 in (0.3, 1.0, 4.0):
            for c in (0.1, 1.0, 3.0):
                d = derive_tri(TriParams(E=E * V0, V0=V0, c=c, a=-0.4))
                assert d.K < 0 < d.X
                assert d.X - d.K == pytest.approx(d.gamma * c, rel=1e-12)
                assert d.Theta == pytest.approx(d.k * -0.4, rel=1e-15)


def test_k_limit_near_top():
    d = derive_tri(TriParams(E=1.0 - 1e-12, V0=1.0, c=1.0))
    assert -1e-10 < d.K < 0


def test_derive_tri_errors():
    with pytest.raises(DomainError):
        TriParams(E=0.5, V0=1.0, c=0.0)
    with pytest.raises(DomainError):
        TriParams(E=0.5, V0=1.0, c=1.0, a=0.0)
    with pytest.raises(DomainError):
        derive_tri(TriParams(E=1.0, V0=1.0, c=1.0))


def test_tunneling_length():
    assert tunneling_length(0.0, 1.0, 1.0) == 1.0
    assert tunneling_length(1.0, 1.0, 1.0) == 0.0
    assert tunneling_length(0.25, 1.0, 2.0) == 1.5
    with pytest.raises(DomainError):
        tunneling_length(1.1, 1.0, 1.0)
    with pytest.raises(DomainError):
        tunneling_length(-0.1, 1.0, 1.0)


def test_potential_from_gamma_round_trip():
    for V0 in (0.2, 1.0, 3.7):
        for c in (0.3, 1.0, 2.5):
            d = derive_tri(TriParams(E=0.1 * V0, V0=V0, c=c))
            assert potential_from_gamma(d.gamma, c) == pytest.approx(V0, rel=1e-12)
    g0 = derive_tri(TriParams(E=0.5, V0=1.0, c=1.0)).gamma
    assert potential_from_gamma(2 * g0, 1.0) == pytest.approx(8.0, rel=1e-12)
    assert potential_from_gamma(2.971, 1.0) == pytest.approx(1.0, abs=1e-3)
    with pytest.raises(DomainError):
        potential_from_gamma(0.0, 1.0)


def test_pure_functions_are_bit_identical():
    p = TriParams(E=0.37, V0=1.3, c=0.9, a=-0.2)
    assert derive_tri(p) == derive_tri(p)


def test_constants_override_file(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"constants": {"length_unit_m": 1e-12}}))
    c = load_constants(path)
    assert c.kinetic_factor == PICOMETRE_UNITS.kinetic_factor
    assert constants_from_env({ENV_CONSTANTS: str(path)}) == c
    assert constants_from_env({}) is CODATA_2018


def test_constants_override_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"constants": {"hbar_js": 1e-34,}}')
    with pytest.raises(ConfigError, match="line 1, column"):
        load_constants(bad)
    unknown = tmp_path / "unknown.json"
    unknown.write_text('{"planck": 6.6e-34}')
    with pytest.raises(ConfigError, match="unknown"):
        load_constants(unknown)
    with pytest.raises(ConfigError):
        PhysicalConstants.from_mapping({"hbar_js": -1.0})


def test_constants_round_trip():
    assert PhysicalConstants.from_mapping(CODATA_2018.to_dict()) == CODATA_2018
