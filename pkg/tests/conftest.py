"""Shared fixtures and hypothesis configuration for the test suite."""

from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from crsec.params import LinkBudget, SystemParams

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

REPO_ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture(scope="session")
def configs_dir() -> Path:
    return REPO_ROOT / "configs"


def make_link(**overrides) -> LinkBudget:
    """Default link budget used by the comparison presets."""
    values = dict(sigma2_sd=1.0, sigma2_se=0.1, sigma2_pd=0.2, sigma2_pe=0.2)
    values.update(overrides)
    return LinkBudget(**values)


def make_params(**overrides) -> SystemParams:
    """Baseline parameter set; override any field per test."""
    values = dict(
        p0=0.8,
        gamma_s_db=10.0,
        gamma_p_db=5.0,
        link_variances=make_link(),
        secrecy_rate=0.1,
        n_relays=0,
        pd=0.9,
        pf=0.1,
    )
    link_overrides = {k: overrides.pop(k) for k in list(overrides) if k.startswith("sigma2_")}
    if link_overrides:
        values["link_variances"] = make_link(**link_overrides)
    values.update(overrides)
    return SystemParams(**values)


def perfect_sensing_params(**overrides) -> SystemParams:
    """Interference-free setup matching the closed-form oracle assumptions."""
    values = dict(pd=1.0, pf=0.0)
    values.update(overrides)
    return make_params(**values)
