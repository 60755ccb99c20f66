"""Experiment registry and config validation."""

import pytest

from wumetric.experiments import (
    EXPERIMENTS,
    GOLDEN_CASES,
    ConfigError,
    ExperimentConfig,
    golden_eta_hat,
    polydisc_cases,
    run_experiment,
)


def test_registry_shape():
    assert set(EXPERIMENTS) == {
        "polydisc_formula",
        "g2_usc",
        "gn_usc",
        "monotone",
        "rem_one",
        "rem_two",
        "elem_reinhardt_table",
        "product_check",
    }
    for name, exp in EXPERIMENTS.items():
        assert exp.description, name
        assert exp.columns, name


def test_polydisc_cases_are_fixed():
    cases = polydisc_cases()
    assert len(cases) == 20
    assert cases == polydisc_cases()  # deterministic
    from collections import Counter

    assert Counter(len(r) for r in cases) == {2: 7, 3: 7, 4: 6}
    assert all(0.2 <= x <= 3.0 for r in cases for x in r)


def test_golden_table_shape():
    assert len(GOLDEN_CASES) == 12
    kinds = {c.kind for c in GOLDEN_CASES}
    assert kinds <= {"gamma", "gamma_k", "azukawa", "kappa"}
    # both type branches and both support branches are represented
    assert {c.declared for c in GOLDEN_CASES} == {None, "irrational"}
    assert any(all(x > 0 for x in c.alpha) for c in GOLDEN_CASES)
    assert any(all(x < 0 for x in c.alpha) for c in GOLDEN_CASES)
    assert any(0.0 in c.a for c in GOLDEN_CASES)
    # eta-hat collapses exactly when too many coordinates vanish
    for c in GOLDEN_CASES:
        s = sum(1 for z in c.a if z != 0)
        want = c.expected if s >= len(c.alpha) - 1 else 0.0
        assert golden_eta_hat(c, c.expected) == want


def test_config_validation_messages():
    with pytest.raises(ConfigError, match="experiment"):
        run_experiment(ExperimentConfig(experiment="nope"))
    with pytest.raises(ConfigError, match="resolution"):
        run_experiment(ExperimentConfig(experiment="rem_one", resolution=4))
    with pytest.raises(ConfigError, match="t"):
        run_experiment(ExperimentConfig(experiment="g2_usc", t=1.0))
    with pytest.raises(ConfigError, match="t"):
        run_experiment(ExperimentConfig(experiment="gn_usc", n=3, t=1.5))
    with pytest.raises(ConfigError, match="n"):
        run_experiment(ExperimentConfig(experiment="gn_usc", n=2))
    with pytest.raises(ConfigError, match="x"):
        run_experiment(ExperimentConfig(experiment="g2_usc", x_grid=(0.5, 1.5)))
    with pytest.raises(ConfigError, match="m-list"):
        run_experiment(ExperimentConfig(experiment="monotone", m_list=(0.5,)))
    with pytest.raises(ConfigError, match="tol"):
        run_experiment(ExperimentConfig(experiment="rem_one", tolerance=2.0))


def test_rows_carry_tolerance_and_flags():
    rows = run_experiment(ExperimentConfig(experiment="rem_two"))
    assert rows
    for row in rows:
        assert row.tolerance >= 0.0
        assert isinstance(row.ok, bool)
        assert row.experiment == "rem_two"
