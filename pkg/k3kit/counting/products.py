import math

from k3kit.exceptions import NegativeTruncation, UnsupportedLattice
from k3kit.lattice.enumeration import RootConstraint, enumerate_roots
from k3kit.counting.series import PowerSeries


def product_expansion(profile, weyl_exponent=0, order=None):
    """
    Espansione q^w prod_{n=1}^{N} (1 - q^n)^{a_n}, esatta e troncata
    all'ordine N.

    Parameters
    ----------
    profile : `CountProfile`
        I conteggi a_n.
    weyl_exponent : `Fraction`, optional
        L'esponente w del monomio iniziale.
    order : `int`, optional
        L'ordine di troncamento. Default: l'ordine del profilo.

    Returns
    -------
    `PowerSeries`
        La serie prodotto.
    """
    order = profile.order if order is None else order
    if order < 0:
        raise NegativeTruncation('Truncation order must be non-negative, got %d' % order)
    series = PowerSeries.one(order, offset=weyl_exponent)
    for n in range(1, min(order, profile.order) + 1):
        series = series.multiply_binomial(n, profile.count(n))
    return series


def log_derivative_series(profile):
    """
    La serie di Lambert sum_m (sum_{d | m} d a_d) q^m, uguale a
    -q d/dq log prod (1 - q^n)^{a_n}.
    """
    order = profile.order
    coeffs = [0] * (order + 1)
    for d in range(1, order + 1):
        weight = d * profile.count(d)
        if weight == 0:
            continue
        for m in range(d, order + 1, d):
            coeffs[m] += weight
    return PowerSeries(coeffs, 0, order)


class TubeLineProduct(object):
    """
    Il logaritmo del prodotto sulla retta w = i t l del dominio tubo,
    dove exp(2 pi i <delta, w>) = q^{<delta, l>} con q = exp(-2 pi t).

    Si calcola in due modi: valutando la serie prodotto troncata
    (via serie) e sommando log(1 - q^{<delta, l>}) sulle radici positive
    elencate una per una (via radici).

    Parameters
    ----------
    profile : `CountProfile`
        Il profilo dei conteggi.
    """

    def __init__(self, profile):
        self.profile = profile

    @staticmethod
    def nome(t):
        return math.exp(-2.0 * math.pi * t)

    def series_route(self, t):
        q = self.nome(t)
        return math.log(product_expansion(self.profile, 0).evaluate(q))

    def root_route(self, t, workers=None):
        profile = self.profile
        if profile.strategy == 'restriction':
            raise UnsupportedLattice(
                'Restricted counts of "%s" include vectors that are not roots' % profile.lattice.label
            )
        q = self.nome(t)
        terms = []
        for n in range(1, profile.order + 1):
            roots = enumerate_roots(profile.lattice, RootConstraint(-2, [(profile.l, n)]), workers=workers)
            terms.extend(math.log1p(-q ** n) for _ in roots)
        return math.fsum(terms)

    def counts_route(self, t):
        """
        La stessa somma usando i conteggi a_n invece delle radici.
        """
        q = self.nome(t)
        return math.fsum(self.profile.count(n) * math.log1p(-q ** n) for n in range(1, self.profile.order + 1))

    def __repr__(self):
        return "%s(profile=%r)" % (type(self).__name__, self.profile)
