"""Shared builders and hypothesis strategies for the test suite."""

from typing import NamedTuple

from hypothesis import strategies as st

from fluorspec.correlation import CorrelationIC, emission_pair, regression_initial
from fluorspec.models import LiouvilleSystem, build_system
from fluorspec.schemas import FrequencyGrid, ModelConfig
from fluorspec.solvers import SteadyState, steady_state


class Pipeline(NamedTuple):
    system: LiouvilleSystem
    ss: SteadyState
    ic: CorrelationIC


def two_level(rabi=1.0, detuning=0.0, gamma=1.0, **fields) -> ModelConfig:
    return ModelConfig(
        model="two_level", rabi_1=rabi, detuning_1=detuning, gamma_1=gamma, **fields
    )


def lambda_model(
    rabi_1=5.0,
    rabi_2=5.0,
    detuning_1=2.0,
    detuning_2=-1.0,
    gamma_1=1.0,
    gamma_2=1.0,
    **fields,
) -> ModelConfig:
    return ModelConfig(
        model="lambda",
        rabi_1=rabi_1,
        rabi_2=rabi_2,
        detuning_1=detuning_1,
        detuning_2=detuning_2,
        gamma_1=gamma_1,
        gamma_2=gamma_2,
        **fields,
    )


def prepare(config: ModelConfig, **pair_options) -> Pipeline:
    system = build_system(config)
    ss = steady_state(system)
    ic = regression_initial(system, ss, emission_pair(config, **pair_options))
    return Pipeline(system, ss, ic)


def covering_grid(config: ModelConfig, count: int = 1001) -> FrequencyGrid:
    """Symmetric grid spanning +-(largest Rabi frequency + 10 gamma_1)."""
    rabi = max(config.rabi_1, config.rabi_2)
    return FrequencyGrid.symmetric((rabi + 10 * config.gamma_1) / config.gamma_1, count)


rabis = st.floats(min_value=0.1, max_value=20.0)
detunings = st.floats(min_value=-10.0, max_value=10.0)
gammas = st.floats(min_value=0.5, max_value=2.0)

two_level_configs = st.builds(
    two_level, rabi=rabis, detuning=detunings, gamma=st.just(1.0)
)


@st.composite
def lambda_configs(draw) -> ModelConfig:
    detuning_1 = draw(detunings)
    raman = draw(st.floats(min_value=0.5, max_value=10.0))
    sign = draw(st.sampled_from([-1.0, 1.0]))
    return lambda_model(
        rabi_1=draw(rabis),
        rabi_2=draw(rabis),
        detuning_1=detuning_1,
        detuning_2=detuning_1 + sign * raman,
        gamma_1=1.0,
        gamma_2=draw(st.floats(min_value=0.1, max_value=5.0)),
    )


any_configs = st.one_of(two_level_configs, lambda_configs())
