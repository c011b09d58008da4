from fractions import Fraction

from k3kit.exceptions import ImaginaryPartNotInCone
from k3kit.lattice.lattice import direct_sum, make_lattice
from k3kit.lattice.vector import ComplexVector, LatticeVector, pair


def cone_reference(lattice):
    """
    Vettore di riferimento della componente V+ del cono positivo:
    f1 + f2 nel primo sommando U del reticolo.
    """
    blocks = lattice.hyperbolic_summands()
    if not blocks:
        raise ImaginaryPartNotInCone(
            'Lattice "%s" has no U summand, pass a reference vector for the positive cone' % lattice.label
        )
    coords = [0] * lattice.rank
    coords[blocks[0].offset] = coords[blocks[0].offset + 1] = 1
    return LatticeVector(lattice, coords)


class TubePoint(object):
    """
    Punto w = x + i y del dominio tubo su un reticolo S di segnatura
    (1, k), con y nella componente V+ del cono positivo.

    Parameters
    ----------
    w : `ComplexVector`
        Il vettore complesso, a coordinate razionali esatte.
    reference : `LatticeVector`, optional
        Vettore positivo che individua V+. Default: f1 + f2 nel primo U.
    """

    def __init__(self, w, reference=None):
        self.w = w
        self.reference = reference if reference is not None else cone_reference(w.lattice)
        y = w.imag
        norm = y.norm
        if norm <= 0 or pair(y, self.reference) <= 0:
            raise ImaginaryPartNotInCone(
                'Imaginary part %s has norm %s and is not in the positive cone' % (list(y.coords), norm)
            )

    @property
    def lattice(self):
        return self.w.lattice

    def __repr__(self):
        return "%s(w=%r)" % (type(self).__name__, self.w)


def tube_embed(point):
    """
    Immersione Psi(w) = (w, -<w, w>/2, 1) del dominio tubo nel cono
    isotropo di (S + U) tensor C. Psi e' isotropo in modo esatto e
    <Psi, conj(Psi)> = 2 <y, y> > 0.

    Parameters
    ----------
    point : `TubePoint`
        Il punto del dominio tubo.

    Returns
    -------
    `ComplexVector`
        Il vettore Psi(w) su S + U.
    """
    w = point.w
    ambient = direct_sum(w.lattice, make_lattice('U'))
    re, im = w.bilinear(w)
    real = list(w.real.coords) + [-Fraction(re) / 2, 1]
    imag = list(w.imag.coords) + [-Fraction(im) / 2, 0]
    return ComplexVector(ambient, real, imag)
