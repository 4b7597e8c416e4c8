"""Parameter validation and unit-conversion behavior."""

import dataclasses
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crsec.params import (
    LinkBudget,
    ParameterError,
    SystemParams,
    ValidatedParams,
    db_to_linear,
    validate,
)
from tests.conftest import make_link, make_params


class TestDbToLinear:
    def test_reference_points(self):
        assert db_to_linear(0.0) == 1.0
        assert math.isclose(db_to_linear(5.0), 3.16228, rel_tol=1e-5)
        assert math.isclose(db_to_linear(-10.0), 0.1, rel_tol=1e-12)
        assert math.isclose(db_to_linear(20.0), 100.0, rel_tol=1e-12)

    @pytest.mark.parametrize("bad", [math.inf, -math.inf, math.nan])
    def test_rejects_non_finite(self, bad):
        with pytest.raises(ParameterError):
            db_to_linear(bad)

    @given(st.floats(-150, 150), st.floats(-150, 150))
    def test_multiplicative(self, a, b):
        assert math.isclose(
            db_to_linear(a + b), db_to_linear(a) * db_to_linear(b), rel_tol=1e-12
        )

    @given(st.floats(-150, 150), st.floats(min_value=1e-6, max_value=50))
    def test_strictly_increasing(self, a, step):
        assert db_to_linear(a + step) > db_to_linear(a)


class TestLinkBudget:
    def test_relay_classes_default_to_direct_analogues(self):
        link = LinkBudget(sigma2_sd=1.0, sigma2_se=0.1, sigma2_pd=0.2, sigma2_pe=0.3)
        assert link.sigma2_si == 1.0
        assert link.sigma2_id == 1.0
        assert link.sigma2_pi == 0.2
        assert link.sigma2_ie == 0.1

    def test_explicit_relay_classes_are_kept(self):
        link = LinkBudget(
            sigma2_sd=1.0, sigma2_se=0.1, sigma2_pd=0.2, sigma2_pe=0.3,
            sigma2_si=2.0, sigma2_id=3.0, sigma2_pi=4.0, sigma2_ie=5.0,
        )
        assert (link.sigma2_si, link.sigma2_id, link.sigma2_pi, link.sigma2_ie) == (2.0, 3.0, 4.0, 5.0)

    def test_immutable(self):
        link = make_link()
        with pytest.raises(dataclasses.FrozenInstanceError):
            link.sigma2_sd = 2.0


class TestSystemParams:
    def test_detector_defaults(self):
        params = SystemParams(
            p0=0.8, gamma_s_db=10.0, gamma_p_db=5.0,
            link_variances=make_link(), secrecy_rate=0.1,
        )
        assert params.pd == 0.9
        assert params.pf == 0.1
        assert params.n_relays == 0

    def test_immutable(self):
        params = make_params()
        with pytest.raises(dataclasses.FrozenInstanceError):
            params.p0 = 0.5


class TestValidate:
    def test_baseline_set_is_valid(self):
        vp = validate(make_params())
        assert isinstance(vp, ValidatedParams)
        assert math.isclose(vp.gamma_s_lin, 10.0, rel_tol=1e-12)
        assert math.isclose(vp.gamma_p_lin, 3.16228, rel_tol=1e-5)

    def test_idempotent(self):
        vp = validate(make_params())
        assert validate(vp) is vp

    def test_convenience_accessors(self):
        vp = validate(make_params(n_relays=3))
        assert vp.p0 == 0.8
        assert vp.n_relays == 3
        assert vp.secrecy_rate == 0.1
        assert vp.link.sigma2_sd == 1.0

    @pytest.mark.parametrize(
        "overrides, field",
        [
            (dict(p0=1.2), "p0"),
            (dict(p0=-0.1), "p0"),
            (dict(pd=1.5), "pd"),
            (dict(pf=-0.5), "pf"),
            (dict(pd=0.2, pf=0.9), "pd"),
            (dict(gamma_s_db=math.nan), "gamma_s_db"),
            (dict(gamma_p_db=math.inf), "gamma_p_db"),
            (dict(secrecy_rate=0.0), "secrecy_rate"),
            (dict(secrecy_rate=-1.0), "secrecy_rate"),
            (dict(n_relays=-1), "n_relays"),
        ],
    )
    def test_each_violation_names_its_field(self, overrides, field):
        with pytest.raises(ParameterError, match=field):
            validate(make_params(**overrides))

    def test_zero_variance_rejected_by_name(self):
        with pytest.raises(ParameterError, match="sigma2_se"):
            validate(make_params(sigma2_se=0.0))

    def test_negative_relay_variance_rejected_by_name(self):
        with pytest.raises(ParameterError, match="sigma2_pi"):
            validate(make_params(sigma2_pi=-0.2))

    def test_impossible_detected_idle_event(self):
        # band always occupied and detector always fires: nothing to condition on
        with pytest.raises(ParameterError):
            validate(make_params(p0=0.0, pd=1.0, pf=1.0))

    def test_non_integer_relay_count_rejected(self):
        with pytest.raises(ParameterError, match="n_relays"):
            validate(make_params(n_relays=2.5))

    @given(
        p0=st.floats(0.01, 1.0),
        pf=st.floats(0.0, 0.99),
        excess=st.floats(0.0, 1.0),
    )
    def test_accepts_any_calibrated_detector(self, p0, pf, excess):
        pd = min(1.0, pf + excess * (1.0 - pf))
        vp = validate(make_params(p0=p0, pd=pd, pf=pf))
        assert vp.pd >= vp.pf
