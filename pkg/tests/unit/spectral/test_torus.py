import pytest

from k3kit import settings
from k3kit.exceptions import PrecisionNotReached
from k3kit.spectral import TorusModulus, torus_det, zeta_derivative


TAUS = [1j, 2j, 0.5 + 1j, 1.0 / 3 + 2j]


@pytest.mark.parametrize("tau", TAUS)
def test_determinant_matches_eta(tau):
    """
    """
    report = torus_det(tau)
    assert report.identity_residual < 1e-6
    assert report.det_value > 0
    assert report.terms_used > 0
    assert report.target_precision == settings.DEFAULT.TOLERANCE


@pytest.mark.parametrize("tau", TAUS)
def test_determinant_shift_invariance(tau):
    """
    """
    det = torus_det(tau).det_value
    assert torus_det(tau + 1).det_value == pytest.approx(det, rel=1e-10)


@pytest.mark.parametrize("tau", [1j, 0.2 + 1.3j])
def test_determinant_under_inversion(tau):
    """
    """
    det = torus_det(tau).det_value
    # il toro di modulo -1/tau e' riscalato di 1/|tau|, il determinante di 1/|tau|^2
    assert torus_det(-1 / tau).det_value == pytest.approx(det / abs(tau) ** 2, rel=1e-8)


def test_report_dict():
    """
    """
    doc = torus_det(TorusModulus(1j)).to_dict()
    assert set(doc) == {
        "det_value", "eta_real", "eta_imag", "identity_residual", "terms_used", "target_precision"
    }
    assert abs(doc["eta_imag"]) < 1e-12


def test_term_budget():
    """
    """
    with pytest.raises(PrecisionNotReached):
        zeta_derivative(TorusModulus(1j), 1e-6, term_budget=10)
