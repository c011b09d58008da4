import numpy as np
import pytest

from k3kit.exceptions import DegeneratePlane, InvalidPeriodPoint, NotPositivePlane
from k3kit.lattice import make_lattice
from k3kit.period import (
    PeriodDomain, PeriodPoint, bergman_form, bergman_norm, gram_det, normalize_basis
)


def _random_tau(rng, p, q, size=0.5):
    tau = rng.uniform(-1.0, 1.0, size=(p, q))
    return size * tau / np.linalg.norm(tau)


def test_origin_has_unit_gram_det():
    """
    """
    point = PeriodPoint(np.zeros((2, 3)))
    assert point.signature == (2, 3)
    assert gram_det(point) == pytest.approx(1.0)


def test_gram_det_is_positive_inside(helpers):
    """
    """
    rng = helpers.rng()
    for _ in range(10):
        point = PeriodPoint(_random_tau(rng, 3, 5, size=0.9))
        assert 0.0 < gram_det(point) <= 1.0


@pytest.mark.parametrize(
    "tau,signature,error",
    [
        ([[0.0, 0.0]], (2, 1), InvalidPeriodPoint),
        ([[np.nan, 0.0]], None, InvalidPeriodPoint),
        ([[1.0, 0.0]], None, NotPositivePlane),
        ([[0.8, 0.7]], None, NotPositivePlane),
    ]
)
def test_invalid_points_raise(tau, signature, error):
    """
    """
    with pytest.raises(error):
        PeriodPoint(tau, signature)


def test_point_signature_must_match_domain():
    """
    """
    domain = PeriodDomain(make_lattice('U+E8(-1)'))
    with pytest.raises(InvalidPeriodPoint):
        PeriodPoint(np.zeros((2, 8)), domain=domain)


def test_text_round_trip(helpers):
    """
    """
    point = PeriodPoint(_random_tau(helpers.rng(), 2, 4))
    text = point.to_text()
    assert text.splitlines()[0] == '2 4'
    restored = PeriodPoint.from_text(text)
    assert np.allclose(restored.tau, point.tau, atol=1e-11)


def test_normalize_basis_ignores_choice_of_rows(helpers):
    """
    """
    rng = helpers.rng(1)
    tau = _random_tau(rng, 2, 3)
    rows = np.hstack([np.eye(2), tau])
    mixing = np.array([[2.0, 1.0], [-1.0, 3.0]])
    point = normalize_basis(mixing @ rows)
    assert point.signature == (2, 3)
    assert np.allclose(point.tau, tau)


def test_normalize_basis_from_lattice_coordinates():
    """
    """
    domain = PeriodDomain(make_lattice('U'))
    # f1 + f2 e' positivo
    point = normalize_basis([[1, 1]], domain=domain, frame=False)
    assert point.signature == (1, 1)
    assert gram_det(point) > 0


@pytest.mark.parametrize(
    "basis,error",
    [
        ([[1.0, 0.0, 0.0], [2.0, 0.0, 0.0]], DegeneratePlane),
        ([[1.0, 0.0, 0.0]], DegeneratePlane),
        ([[1.0, 0.0, 1.0], [0.0, 1.0, 0.0]], NotPositivePlane),
    ]
)
def test_normalize_basis_rejects_bad_planes(basis, error):
    """
    """
    with pytest.raises(error):
        normalize_basis(basis, signature=(2, 1))


def test_bergman_form_at_origin_is_frobenius_norm(helpers):
    """
    """
    a = helpers.rng(2).normal(size=(2, 3))
    point = PeriodPoint(np.zeros((2, 3)))
    assert bergman_form(point, a) == pytest.approx(bergman_norm(a))
    assert bergman_norm(a) == pytest.approx(float(np.sum(a ** 2)))


def test_bergman_form_is_positive(helpers):
    """
    """
    rng = helpers.rng(3)
    point = PeriodPoint(_random_tau(rng, 2, 3))
    assert bergman_form(point, rng.normal(size=(2, 3))) > 0
