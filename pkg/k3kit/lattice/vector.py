from fractions import Fraction
import math

from k3kit.exceptions import LatticeMismatch, NotIntegral, ZeroVector
from k3kit.lattice.exact import normalise, to_fraction


class LatticeVector(object):
    """
    Vettore di un reticolo espresso nella base del reticolo.
    Le coordinate sono razionali esatti; il vettore e' integrale
    quando tutti i denominatori valgono 1.

    Parameters
    ----------
    lattice : `Lattice`
        Il reticolo di appartenenza.
    coords : `list`
        Le coordinate (int, Fraction o stringhe "p/q").
    """

    def __init__(self, lattice, coords):
        coords = tuple(normalise(c) for c in coords)
        if len(coords) != lattice.rank:
            raise LatticeMismatch(
                'Vector of length %d does not fit lattice "%s" of rank %d' % (
                    len(coords), lattice.label, lattice.rank
                )
            )
        self.lattice = lattice
        self.coords = coords
        self.integral = all(isinstance(c, int) for c in coords)

    @property
    def norm(self):
        return pair(self, self)

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def _check_same(self, rhs):
        if not isinstance(rhs, LatticeVector) or not (rhs.lattice == self.lattice):
            raise LatticeMismatch(
                'Vectors belong to different lattices ("%s" and "%s")' % (
                    self.lattice.label, getattr(getattr(rhs, 'lattice', None), 'label', rhs)
                )
            )

    def __add__(self, rhs):
        self._check_same(rhs)
        return LatticeVector(self.lattice, [a + b for a, b in zip(self.coords, rhs.coords)])

    def __sub__(self, rhs):
        self._check_same(rhs)
        return LatticeVector(self.lattice, [a - b for a, b in zip(self.coords, rhs.coords)])

    def __neg__(self):
        return LatticeVector(self.lattice, [-a for a in self.coords])

    def __mul__(self, scalar):
        scalar = to_fraction(scalar)
        return LatticeVector(self.lattice, [scalar * a for a in self.coords])

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = to_fraction(scalar)
        return LatticeVector(self.lattice, [Fraction(a) / scalar for a in self.coords])

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, key):
        return self.coords[key]

    def __eq__(self, rhs):
        if not isinstance(rhs, LatticeVector):
            return False
        return self.coords == rhs.coords and self.lattice == rhs.lattice

    def __hash__(self):
        return hash(self.coords)

    def __lt__(self, rhs):
        return self.coords < rhs.coords

    def __repr__(self):
        return "%s(lattice=%s, coords=%s)" % (
            type(self).__name__, self.lattice.label, format_coords(self.coords)
        )

    def to_json_dict(self):
        return {"lattice": self.lattice.label, "coords": [coord_to_json(c) for c in self.coords]}

    @classmethod
    def from_json_dict(cls, data, lattice=None):
        """
        Ricostruisce un vettore dal documento JSON
        {"lattice": "<descriptor>", "coords": [...]}.
        """
        from k3kit.lattice.lattice import make_lattice
        if lattice is None:
            lattice = make_lattice(data["lattice"])
        return cls(lattice, [to_fraction(c) for c in data["coords"]])


class ComplexVector(object):
    """
    Vettore di L tensor C con parte reale e immaginaria razionali esatte.

    Parameters
    ----------
    lattice : `Lattice`
        Il reticolo ambiente.
    real : `list`
        Le coordinate della parte reale.
    imag : `list`
        Le coordinate della parte immaginaria.
    """

    def __init__(self, lattice, real, imag):
        self.lattice = lattice
        self.real = LatticeVector(lattice, real)
        self.imag = LatticeVector(lattice, imag)

    @classmethod
    def from_parts(cls, real, imag):
        return cls(real.lattice, real.coords, imag.coords)

    def conjugate(self):
        return ComplexVector(self.lattice, self.real.coords, [-c for c in self.imag.coords])

    def bilinear(self, rhs):
        """
        Estensione C-bilineare della forma: restituisce la coppia
        (parte reale, parte immaginaria) di <self, rhs>.
        """
        re = pair(self.real, rhs.real) - pair(self.imag, rhs.imag)
        im = pair(self.real, rhs.imag) + pair(self.imag, rhs.real)
        return normalise(re), normalise(im)

    def hermitian(self, rhs):
        """
        Restituisce <self, conj(rhs)> come coppia (reale, immaginaria).
        """
        return self.bilinear(rhs.conjugate())

    def __eq__(self, rhs):
        return isinstance(rhs, ComplexVector) and self.real == rhs.real and self.imag == rhs.imag

    def __hash__(self):
        return hash((self.real.coords, self.imag.coords))

    def __repr__(self):
        return "%s(lattice=%s, real=%s, imag=%s)" % (
            type(self).__name__, self.lattice.label,
            format_coords(self.real.coords), format_coords(self.imag.coords)
        )


def coord_to_json(c):
    c = normalise(c)
    if isinstance(c, int):
        return c
    return '%d/%d' % (c.numerator, c.denominator)


def format_coords(coords):
    return '[%s]' % ','.join(str(coord_to_json(c)) for c in coords)


def pair(v, w):
    """
    Calcola in modo esatto v^T * gram * w.

    Parameters
    ----------
    v : `LatticeVector`
        Il primo vettore.
    w : `LatticeVector`
        Il secondo vettore, dello stesso reticolo.

    Returns
    -------
    `int` o `Fraction`
        Il prodotto scalare.
    """
    if not (v.lattice == w.lattice):
        raise LatticeMismatch(
            'Cannot pair vectors of lattices "%s" and "%s"' % (v.lattice.label, w.lattice.label)
        )
    return normalise(v.lattice.pair_coords(v.coords, w.coords))


def is_primitive(v):
    """
    Verifica se un vettore intero e' primitivo (gcd delle coordinate 1).
    """
    if not v.integral:
        raise NotIntegral('Primitivity is defined for integral vectors only, got %s' % format_coords(v.coords))
    if v.is_zero:
        raise ZeroVector('The zero vector is neither primitive nor imprimitive')
    g = 0
    for c in v.coords:
        g = math.gcd(g, c)
    return g == 1
