from fractions import Fraction

from k3kit.exceptions import NotBField, NotPositiveFourPlane, RiemannRelationViolated
from k3kit.lattice.exact import determinant
from k3kit.lattice.lattice import direct_sum, make_lattice
from k3kit.lattice.vector import ComplexVector, LatticeVector, pair


class BField(object):
    """
    Campo B su una superficie K3: un vettore complesso b di
    Lambda_K3 tensor C con <Im b, Im b> > 0.

    Parameters
    ----------
    b : `ComplexVector`
        Il vettore, a coordinate razionali esatte.
    """

    def __init__(self, b):
        norm = b.imag.norm
        if norm <= 0:
            raise NotBField('Imaginary part of the B field has norm %s, expected a positive norm' % norm)
        self.b = b

    @property
    def lattice(self):
        return self.b.lattice

    def __eq__(self, rhs):
        return isinstance(rhs, BField) and self.b == rhs.b

    def __hash__(self):
        return hash(self.b)

    def __repr__(self):
        return "%s(b=%r)" % (type(self).__name__, self.b)


def extended_lattice(lattice):
    """
    Il reticolo esteso Lambda + U0, con U0 nelle ultime due coordinate.
    """
    return direct_sum(lattice, make_lattice('U'))


def _extend(vector, tail):
    return list(vector.coords) + list(tail)


def extend_bfield(bfield):
    """
    Estende il campo B al vettore V = (b, 1, -<b, b>/2) del reticolo
    esteso: V e' isotropo in modo esatto e <V, conj(V)> = 2 <Im b, Im b>.

    Parameters
    ----------
    bfield : `BField` o `ComplexVector`
        Il campo B.

    Returns
    -------
    `ComplexVector`
        Il vettore V sul reticolo esteso.
    """
    if not isinstance(bfield, BField):
        bfield = BField(bfield)
    b = bfield.b
    ambient = extended_lattice(b.lattice)
    re, im = b.bilinear(b)
    real = _extend(b.real, [1, -Fraction(re) / 2])
    imag = _extend(b.imag, [0, -Fraction(im) / 2])
    return ComplexVector(ambient, real, imag)


class FourPlane(object):
    """
    Il 4-piano generato da Re omega, Im omega, Re V, Im V nel reticolo
    esteso, con la matrice di Gram esatta.
    """

    def __init__(self, basis, gram, orthogonal):
        self.basis = basis
        self.gram = gram
        self.orthogonal = orthogonal

    def leading_minors(self):
        return [determinant([row[:k] for row in self.gram[:k]]) for k in range(1, len(self.gram) + 1)]

    @property
    def is_positive(self):
        return all(m > 0 for m in self.leading_minors())

    def matrix(self):
        """
        La matrice reale 4 x 24 delle righe di base.
        """
        return [[float(c) for c in v.coords] for v in self.basis]

    def __repr__(self):
        return "%s(gram=%s, orthogonal=%s)" % (
            type(self).__name__, [[str(x) for x in row] for row in self.gram], self.orthogonal
        )


def four_plane(omega, bfield):
    """
    Costruisce il 4-piano di una superficie K3 con campo B.

    Verifica le relazioni di Riemann per omega (<omega, omega> = 0 e
    <omega, conj(omega)> > 0), poi la positivita' della Gram con i minori
    principali. L'ortogonalita' tra i due 2-piani viene riportata, non
    assunta.

    Parameters
    ----------
    omega : `ComplexVector`
        Il periodo, su Lambda_K3.
    bfield : `BField` o `ComplexVector`
        Il campo B.

    Returns
    -------
    `FourPlane`
        Il 4-piano con la sua Gram.
    """
    re, im = omega.bilinear(omega)
    if re != 0 or im != 0:
        raise RiemannRelationViolated('<omega, omega> = %s + %si, expected 0' % (re, im))
    hre, _ = omega.hermitian(omega)
    if hre <= 0:
        raise RiemannRelationViolated('<omega, conj(omega)> = %s, expected a positive value' % hre)

    v = extend_bfield(bfield)
    ambient = v.lattice
    basis = [
        LatticeVector(ambient, _extend(omega.real, [0, 0])),
        LatticeVector(ambient, _extend(omega.imag, [0, 0])),
        v.real,
        v.imag,
    ]
    gram = [[pair(x, y) for y in basis] for x in basis]
    orthogonal = all(gram[i][j] == 0 for i in (0, 1) for j in (2, 3))
    plane = FourPlane(basis, gram, orthogonal)
    if not plane.is_positive:
        raise NotPositiveFourPlane(
            'Gram of the four-plane is not positive definite (leading minors %s)' % (
                [str(m) for m in plane.leading_minors()]
            )
        )
    return plane
