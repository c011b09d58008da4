"""
Serie theta di reticoli definiti negativi, nella variabile q con
esponente la semi-norma -<x, x>/2.
"""
import numpy as np

from k3kit.exceptions import NegativeTruncation, NotHyperbolic
from k3kit.lattice.enumeration import short_vectors
from k3kit.counting.series import PowerSeries


def _dense_product(a, b, order):
    """
    Prodotto troncato all'ordine order di due serie dense.
    """
    a = list(a[:order + 1])
    b = np.array(list(b[:order + 1]) + [0] * (order + 1 - len(b)), dtype=object)
    if a[:1] == [1] and not any(a[1:]):
        return [int(c) for c in b]
    out = np.zeros(order + 1, dtype=object)
    for i, c in enumerate(a):
        if c != 0:
            out[i:] += c * b[:order + 1 - i]
    return [int(c) for c in out]


def _sparse_power(terms, exponent, order):
    """
    Potenza di una serie sparsa data come lista (grado, coefficiente),
    con i gradi in ordine crescente.
    """
    result = np.zeros(order + 1, dtype=object)
    result[0] = 1
    for _ in range(exponent):
        out = np.zeros(order + 1, dtype=object)
        for k, c in terms:
            if k > order:
                break
            out[k:] += c * result[:order + 1 - k]
        result = out
    return [int(c) for c in result]


def e8_theta(order):
    """
    Serie theta di E8 come 1/2 (theta3^8 + theta4^8 + theta2^8) nella
    variabile t con esponente la norma, da cui si leggono i coefficienti
    dei gradi pari.
    """
    if order < 0:
        raise NegativeTruncation('Truncation order must be non-negative, got %d' % order)
    top = 2 * order
    theta3 = []
    theta4 = []
    k = 0
    while k * k <= top:
        weight = 1 if k == 0 else 2
        theta3.append((k * k, weight))
        theta4.append((k * k, weight * (-1 if k % 2 else 1)))
        k += 1
    # theta2^8 = t^2 (sum_k t^{k^2 + k})^8
    shifted = []
    k = 0
    while k * k + k <= top:
        shifted.append((k * k + k, 2))
        k += 1
    t3 = _sparse_power(theta3, 8, top)
    t4 = _sparse_power(theta4, 8, top)
    t2 = [0, 0] + _sparse_power(shifted, 8, top)[:top - 1] if top >= 2 else [0] * (top + 1)
    return PowerSeries([(t3[2 * n] + t4[2 * n] + t2[2 * n]) // 2 for n in range(order + 1)], 0, order)


def rank_one_theta(half_norm, order):
    """
    Serie theta di <-2n>: sum_x q^{n x^2}.
    """
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    x = 1
    while half_norm * x * x <= order:
        coeffs[half_norm * x * x] += 2
        x += 1
    return PowerSeries(coeffs, 0, order)


def _generic_theta(gram, order):
    negated = [[-g for g in row] for row in gram]
    coeffs = [0] * (order + 1)
    for x in short_vectors(negated, 2 * order):
        norm = -sum(x[i] * gram[i][j] * x[j] for i in range(len(x)) for j in range(len(x)))
        coeffs[norm // 2] += 1
    return PowerSeries(coeffs, 0, order)


def theta_series(lattice, order):
    """
    Serie theta di un reticolo definito negativo:
    il coefficiente di q^k conta i vettori con -<x, x>/2 = k.
    I blocchi E8(-1) e <-2n> usano formule chiuse, gli altri
    l'enumerazione Fincke-Pohst; le somme dirette moltiplicano.

    Parameters
    ----------
    lattice : `Lattice`
        Il reticolo definito negativo.
    order : `int`
        L'ordine di troncamento.

    Returns
    -------
    `PowerSeries`
        La serie theta.
    """
    if order < 0:
        raise NegativeTruncation('Truncation order must be non-negative, got %d' % order)
    if lattice.rank > 0 and not lattice.is_negative_definite:
        raise NotHyperbolic('Theta series needs a negative definite lattice, "%s" has signature %s' % (
            lattice.label, lattice.signature
        ))
    coeffs = [1] + [0] * order
    cache = {}
    for s in lattice.summands:
        if s.size == 0:
            continue
        if s.gram not in cache:
            if s.name == 'E8(-1)':
                cache[s.gram] = e8_theta(order)
            elif s.name.startswith('<-') and s.size == 1:
                cache[s.gram] = rank_one_theta(-s.gram[0][0] // 2, order)
            else:
                cache[s.gram] = _generic_theta(s.gram, order)
        coeffs = _dense_product(coeffs, cache[s.gram].coeffs, order)
    return PowerSeries(coeffs, 0, order)
