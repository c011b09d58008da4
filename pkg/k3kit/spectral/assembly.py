import cmath
import math

from k3kit.exceptions import InvalidPeriodPoint
from k3kit.period.point import PeriodPoint, gram_det


def k3_det_assembly(point, phi, constant=1.0):
    """
    Assembla g(tau) |exp(phi(tau))|^2, moltiplicato per una costante
    di normalizzazione, a partire da un valutatore esterno phi.

    Parameters
    ----------
    point : `PeriodPoint`
        Il punto del dominio dei periodi.
    phi : `callable` o `complex`
        Il valutatore di phi nel punto, oppure il suo valore.
    constant : `float`, optional
        La costante moltiplicativa. Default 1.

    Returns
    -------
    `float`
        Il valore assemblato, positivo.
    """
    if not isinstance(point, PeriodPoint):
        raise InvalidPeriodPoint('Expected a period point, got %r' % (point,))
    value = complex(phi(point) if callable(phi) else phi)
    if not cmath.isfinite(value):
        raise InvalidPeriodPoint('Evaluator returned a non finite value %s' % value)
    return gram_det(point) * math.exp(2.0 * value.real) * constant
