import cmath
import math

from k3kit.exceptions import LowerHalfPlane


class TorusModulus(object):
    """
    Modulo tau del toro piatto C / (Z + tau Z), con Im tau > 0.

    Parameters
    ----------
    tau : `complex` o `str`
        Il modulo, ad esempio 1j oppure "0.5+1j".
    """

    def __init__(self, tau):
        if isinstance(tau, str):
            tau = complex(tau.replace(' ', '').replace('i', 'j'))
        tau = complex(tau)
        if not tau.imag > 0:
            raise LowerHalfPlane('Modulus %s is not in the upper half plane' % tau)
        self.tau = tau

    @property
    def x(self):
        return self.tau.real

    @property
    def y(self):
        return self.tau.imag

    @property
    def nome(self):
        """
        q = exp(2 pi i tau).
        """
        return cmath.exp(2j * math.pi * self.tau)

    def shifted(self, k=1):
        return TorusModulus(self.tau + k)

    def __eq__(self, rhs):
        return isinstance(rhs, TorusModulus) and self.tau == rhs.tau

    def __hash__(self):
        return hash(self.tau)

    def __repr__(self):
        return "%s(tau=%s)" % (type(self).__name__, self.tau)


def truncation_for(modulus, precision):
    """
    Il minimo N con |q|^N < precision.
    """
    log_q = -2.0 * math.pi * modulus.y
    return max(1, int(math.ceil(math.log(precision) / log_q)))


def eta_value(modulus, order=None, precision=1e-12):
    """
    La eta di Dedekind q^{1/24} prod_{n <= N} (1 - q^n).

    Parameters
    ----------
    modulus : `TorusModulus`
        Il modulo.
    order : `int`, optional
        Il troncamento N. Default: il minimo con |q|^N < precision.
    precision : `float`, optional
        La precisione usata per scegliere N.

    Returns
    -------
    `tuple`
        (valore, maggiorazione dell'errore di troncamento 2 |q|^{N+1} |eta_N|).
    """
    if not isinstance(modulus, TorusModulus):
        modulus = TorusModulus(modulus)
    if order is None:
        order = truncation_for(modulus, precision)
    q = modulus.nome
    value = cmath.exp(2j * math.pi * modulus.tau / 24)
    power = 1
    for _ in range(order):
        power *= q
        value *= 1 - power
    bound = 2 * abs(q) ** (order + 1) * abs(value)
    return value, bound
