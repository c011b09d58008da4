import logging
import math

import numpy as np
from scipy import special

from k3kit import settings
from k3kit.exceptions import PrecisionNotReached
from k3kit.spectral.eta import TorusModulus, eta_value


logger = logging.getLogger('Spectral')

EULER_GAMMA = float(np.euler_gamma)

# tempo di separazione del nucleo del calore
SPLIT_TIME = 1.0 / (4.0 * math.pi)


class DetReport(object):
    """
    Esito del calcolo del determinante regolarizzato del laplaciano
    sul toro piatto, confrontato con (Im tau)^2 |eta(tau)|^4.
    """

    def __init__(self, det_value, eta_value, identity_residual, terms_used, target_precision, zeta_derivative=None):
        self.det_value = det_value
        self.eta_value = eta_value
        self.identity_residual = identity_residual
        self.terms_used = terms_used
        self.target_precision = target_precision
        self.zeta_derivative = zeta_derivative

    def to_dict(self):
        return {
            "det_value": self.det_value,
            "eta_real": self.eta_value.real,
            "eta_imag": self.eta_value.imag,
            "identity_residual": self.identity_residual,
            "terms_used": self.terms_used,
            "target_precision": self.target_precision
        }

    def __repr__(self):
        return "%s(det=%.12g, residual=%.3e, terms=%d)" % (
            type(self).__name__, self.det_value, self.identity_residual, self.terms_used
        )


def _quadratic_box(gram, bound):
    """
    Coppie intere (a, b) con Q(a, b) <= bound e Q di matrice gram 2x2,
    escluso l'origine, con le rispettive norme.
    """
    inv = np.linalg.inv(gram)
    ra = int(math.floor(math.sqrt(bound * inv[0, 0]))) + 1
    rb = int(math.floor(math.sqrt(bound * inv[1, 1]))) + 1
    a, b = np.meshgrid(np.arange(-ra, ra + 1), np.arange(-rb, rb + 1), indexing='ij')
    a, b = a.ravel().astype(float), b.ravel().astype(float)
    norms = gram[0, 0] * a * a + 2 * gram[0, 1] * a * b + gram[1, 1] * b * b
    mask = (norms <= bound) & ((a != 0) | (b != 0))
    return norms[mask]


def zeta_derivative(modulus, precision=None, term_budget=None):
    """
    La derivata in 0 della funzione zeta spettrale del laplaciano sul
    toro C / (Z + tau Z), con autovalori 4 pi^2 |v*|^2 sul reticolo duale.

    La traccia del calore si spezza al tempo t0: la parte per t > t0 da'
    le code E1(4 pi^2 |v*|^2 t0); la parte per t < t0 si trasforma con
    la formula di Poisson nella somma sul reticolo Z + tau Z:

        zeta'(0) = sum' E1(4 pi^2 |v*|^2 t0) - y/(4 pi t0)
                   + (y/pi) sum' exp(-|v|^2/(4 t0)) / |v|^2 - gamma - log t0

    Returns
    -------
    `tuple`
        (zeta'(0), numero di termini sommati).
    """
    precision = settings.DEFAULT.TOLERANCE if precision is None else precision
    term_budget = settings.DEFAULT.TERM_BUDGET if term_budget is None else term_budget
    x, y = modulus.x, modulus.y
    t0 = SPLIT_TIME
    # entrambe le somme decadono come exp(-pi |.|^2) con t0 = 1/(4 pi)
    bound = (math.log(1.0 / precision) + 30.0) / math.pi

    gram = np.array([[1.0, x], [x, x * x + y * y]])
    dual = np.linalg.inv(gram)
    direct_norms = _quadratic_box(gram, bound)
    dual_norms = _quadratic_box(dual, bound)
    terms = len(direct_norms) + len(dual_norms)
    if terms > term_budget:
        raise PrecisionNotReached(
            'Lattice sums need %d terms, above the budget of %d' % (terms, term_budget)
        )
    large_time = math.fsum(special.exp1(4.0 * math.pi ** 2 * dual_norms * t0))
    small_time = math.fsum(np.exp(-direct_norms / (4.0 * t0)) / direct_norms)
    value = large_time - y / (4.0 * math.pi * t0) + y / math.pi * small_time - EULER_GAMMA - math.log(t0)
    return value, terms


def torus_det(modulus, precision=None, term_budget=None):
    """
    Determinante regolarizzato det' = exp(-zeta'(0)) del laplaciano
    piatto sul toro di modulo tau, confrontato con la forma chiusa
    (Im tau)^2 |eta(tau)|^4 calcolata dalla serie in q.

    Parameters
    ----------
    modulus : `TorusModulus` o `complex`
        Il modulo.
    precision : `float`, optional
        La precisione richiesta. Default: settings.DEFAULT.TOLERANCE.
    term_budget : `int`, optional
        Il numero massimo di termini. Default: settings.DEFAULT.TERM_BUDGET.

    Returns
    -------
    `DetReport`
        Il determinante, il valore di eta e il residuo relativo.
    """
    if not isinstance(modulus, TorusModulus):
        modulus = TorusModulus(modulus)
    precision = settings.DEFAULT.TOLERANCE if precision is None else precision
    derivative, terms = zeta_derivative(modulus, precision, term_budget)
    det = math.exp(-derivative)
    eta, _ = eta_value(modulus, precision=min(precision, 1e-12) * 1e-3)
    closed = modulus.y ** 2 * abs(eta) ** 4
    residual = abs(det - closed) / det
    logger.info('Torus determinant at tau = %s: %.12g (residual %.3e, %d terms)' % (
        modulus.tau, det, residual, terms
    ))
    return DetReport(det, eta, residual, terms, precision, derivative)
