import numpy as np
import pytest

from k3kit.exceptions import HypothesisViolated, PairNotHyperbolic
from k3kit.lattice import make_lattice
from k3kit.period import PeriodDomain, PeriodPoint, recompose_h, split_h


def _random_point(rng, domain, size=0.5):
    tau = rng.uniform(-1.0, 1.0, size=domain.signature)
    return PeriodPoint(size * tau / np.linalg.norm(tau), domain=domain)


@pytest.fixture
def domain():
    return PeriodDomain(make_lattice('U^3+E8(-1)'))


def test_split_and_recompose(domain, helpers):
    """
    """
    lattice = domain.lattice
    a, b = lattice.basis_vector(0), lattice.basis_vector(1)
    rng = helpers.rng()
    for _ in range(10):
        point = _random_point(rng, domain)
        split = split_h(point, a, b)
        assert split.point.signature == (2, 10)
        assert 2 * split.lam + split.mu_norm > 0
        gram = domain.gram
        assert abs(split.mu @ gram @ np.array(a.coords, dtype=float)) < 1e-9
        assert abs(split.mu @ gram @ np.array(b.coords, dtype=float)) < 1e-9
        restored = recompose_h(split)
        assert np.allclose(restored.tau, point.tau, atol=1e-8)


def test_split_along_second_u(domain, helpers):
    """
    """
    lattice = domain.lattice
    a, b = lattice.basis_vector(3), lattice.basis_vector(2)
    point = _random_point(helpers.rng(5), domain)
    split = split_h(point, a, b)
    assert len(split.mu_in_complement()) == lattice.rank - 2
    assert np.allclose(recompose_h(split).tau, point.tau, atol=1e-8)


def test_split_needs_large_signature(helpers):
    """
    """
    domain = PeriodDomain(make_lattice('U^2+E8(-1)'))
    lattice = domain.lattice
    with pytest.raises(HypothesisViolated):
        split_h(_random_point(helpers.rng(), domain), lattice.basis_vector(0), lattice.basis_vector(1))


@pytest.mark.parametrize(
    "a,b",
    [
        (0, 0),
        (0, 2),
        (6, 7),
    ]
)
def test_split_rejects_non_hyperbolic_pairs(domain, helpers, a, b):
    """
    """
    lattice = domain.lattice
    with pytest.raises(PairNotHyperbolic):
        split_h(_random_point(helpers.rng(), domain), lattice.basis_vector(a), lattice.basis_vector(b))
