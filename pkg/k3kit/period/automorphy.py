import numpy as np

from k3kit.exceptions import InvalidPeriodPoint, NotIsometry
from k3kit.lattice.reflection import is_isometry
from k3kit.period.point import PeriodPoint, gram_det


# peso della forma g(tau)
GRAM_DET_WEIGHT = -2


def _domain_of(point, domain):
    domain = domain if domain is not None else point.domain
    if domain is None:
        raise InvalidPeriodPoint('Period point carries no lattice frame to act on')
    return domain


def factor_of_automorphy(gamma, point, domain=None):
    """
    Fattore di automorfia di un'isometria intera.

    Con le righe X = [I | tau] si ha X gamma_f = [mu | sigma], dove
    gamma_f e' gamma nella base ortonormale; il punto immagine ha
    coordinate mu^{-1} sigma.
    Con questa convenzione vale g(gamma tau) det(mu)^2 = g(tau): il
    quadrato di det mu moltiplica g nel punto immagine, non in tau.

    Parameters
    ----------
    gamma : `list[list[int]]`
        L'isometria, nella convenzione per righe.
    point : `PeriodPoint`
        Il punto.
    domain : `PeriodDomain`, optional
        Il dominio, se il punto non lo porta con se'.

    Returns
    -------
    `tuple`
        (mu, image) con mu matrice p x p e image il punto trasformato.
    """
    domain = _domain_of(point, domain)
    if not is_isometry(gamma, domain.lattice):
        raise NotIsometry('Matrix does not preserve the form of "%s"' % domain.lattice.label)
    p = point.p
    rows = point.spanning_rows() @ domain.isometry_in_frame(gamma)
    mu, sigma = rows[:, :p], rows[:, p:]
    image = PeriodPoint(np.linalg.solve(mu, sigma), point.signature, domain=domain)
    return mu, image


def automorphy_residual(gamma, point, domain=None, weight=GRAM_DET_WEIGHT):
    """
    Errore relativo dell'identita' g(gamma tau) det(mu)^{-weight} = g(tau),
    cioe' g(gamma tau) det(mu)^2 = g(tau) per il peso -2.
    """
    mu, image = factor_of_automorphy(gamma, point, domain)
    g = gram_det(point)
    return abs(gram_det(image) * np.linalg.det(mu) ** (-weight) - g) / g


def cocycle_residual(gamma1, gamma2, point, domain=None):
    """
    Errore relativo della relazione di cociclo per l'azione per righe:
    mu(gamma1 gamma2, tau) = mu(gamma1, tau) mu(gamma2, tau gamma1).
    """
    domain = _domain_of(point, domain)
    product = (np.asarray(gamma1, dtype=object) @ np.asarray(gamma2, dtype=object)).tolist()
    mu_product, _ = factor_of_automorphy(product, point, domain)
    mu1, image = factor_of_automorphy(gamma1, point, domain)
    mu2, _ = factor_of_automorphy(gamma2, image, domain)
    composed = mu1 @ mu2
    return float(np.abs(mu_product - composed).max() / max(1.0, np.abs(mu_product).max()))
