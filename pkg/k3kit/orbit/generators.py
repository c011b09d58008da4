from abc import ABCMeta, abstractmethod
from fractions import Fraction

from k3kit.exceptions import NotRoot
from k3kit.lattice.reflection import reflect
from k3kit.lattice.vector import LatticeVector, coord_to_json, pair
from k3kit.lattice.exact import to_fraction


class Generator(object):
    """
    Classe astratta per i generatori di una parola di isometrie.
    Ogni generatore agisce esattamente sui vettori del reticolo ambiente.
    """

    __metaclass__ = ABCMeta

    kind = None

    @abstractmethod
    def apply(self, v):
        raise NotImplementedError(
            "Should implement apply()"
        )

    @abstractmethod
    def inverse(self):
        raise NotImplementedError(
            "Should implement inverse()"
        )

    @abstractmethod
    def to_json_dict(self):
        raise NotImplementedError(
            "Should implement to_json_dict()"
        )

    def matrix(self, lattice):
        """
        Matrice intera del generatore nella convenzione per righe:
        la riga k e' l'immagine del k-esimo vettore di base.
        """
        return [list(self.apply(lattice.basis_vector(k)).coords) for k in range(lattice.rank)]

    def __eq__(self, rhs):
        return type(self) is type(rhs) and self.to_json_dict() == rhs.to_json_dict()

    def __hash__(self):
        return hash(repr(self.to_json_dict()))

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, self.to_json_dict())


class Reflection(Generator):
    """
    Riflessione T(v) = v + <v, root> root.

    Parameters
    ----------
    root : `LatticeVector`
        Un vettore di norma -2 del reticolo ambiente.
    """

    kind = 'reflection'

    def __init__(self, root):
        if root.norm != -2:
            raise NotRoot('Reflection vector %s has norm %s' % (list(root.coords), root.norm))
        self.root = root

    def apply(self, v):
        return reflect(self.root, v)

    def inverse(self):
        return self

    def to_json_dict(self):
        return {"kind": self.kind, "root": [coord_to_json(c) for c in self.root.coords]}


class Transvection(Generator):
    """
    Trasvezione di Eichler relativa a un sommando U = <f1, f2> e a
    lambda ortogonale a U. Scrivendo x = (v, m, n) con m coefficiente
    di f1 e n di f2:

        (v, m, n) -> (v + m lambda, m, n - <v, lambda> - m <lambda, lambda>/2)

    La mappa fissa e = f2 e preserva la forma.

    Parameters
    ----------
    lam : `LatticeVector`
        Vettore del reticolo ambiente con coordinate nulle sul blocco U.
    offset : `int`
        L'indice della coordinata di f1 nel reticolo ambiente.
    """

    kind = 'transvection'

    def __init__(self, lam, offset):
        self.lam = lam
        self.offset = offset
        if lam.coords[offset] != 0 or lam.coords[offset + 1] != 0:
            raise ValueError(
                'Transvection vector %s must vanish on the hyperbolic block at %d' % (list(lam.coords), offset)
            )
        self._lam_norm = lam.norm

    def _split(self, x):
        i = self.offset
        m, n = x.coords[i], x.coords[i + 1]
        coords = list(x.coords)
        coords[i] = coords[i + 1] = 0
        return LatticeVector(x.lattice, coords), m, n

    def _join(self, v, m, n):
        coords = list(v.coords)
        coords[self.offset], coords[self.offset + 1] = m, n
        return LatticeVector(v.lattice, coords)

    def apply(self, x):
        v, m, n = self._split(x)
        return self._join(
            v + m * self.lam,
            m,
            n - pair(v, self.lam) - m * Fraction(self._lam_norm, 2)
        )

    def inverse(self):
        return Transvection(-self.lam, self.offset)

    def to_json_dict(self):
        return {
            "kind": self.kind,
            "lambda": [coord_to_json(c) for c in self.lam.coords],
            "offset": self.offset
        }


class LiteralTransvection(Transvection):
    """
    La variante (v, m, n) -> (v + 2m lambda, m, n - <v, lambda> - m <lambda, lambda>).
    Non preserva la forma: non compare mai nelle parole prodotte,
    serve solo come controesempio nei controlli di isometria.
    """

    kind = 'literal-transvection'

    def apply(self, x):
        v, m, n = self._split(x)
        return self._join(
            v + 2 * m * self.lam,
            m,
            n - pair(v, self.lam) - m * self._lam_norm
        )

    def inverse(self):
        raise NotImplementedError('The literal transvection is not an isometry and has no inverse in O(M)')


class SignFlip(Generator):
    """
    L'isometria -id.
    """

    kind = 'sign_flip'

    def apply(self, v):
        return -v

    def inverse(self):
        return self

    def to_json_dict(self):
        return {"kind": self.kind}


class BlockAutomorphism(Generator):
    """
    Automorfismo che permuta blocchi della decomposizione.

    I nomi ammessi sono "swap:i:j" (scambia due blocchi con la stessa
    matrice di Gram, agli offset i e j) e "flip:i" (scambia f1 e f2
    nel blocco U all'offset i).

    Parameters
    ----------
    name : `str`
        Il nome dell'automorfismo.
    size : `int`, optional
        La dimensione dei blocchi scambiati da "swap".
    """

    kind = 'block'

    def __init__(self, name, size=2):
        self.name = name
        self.size = size
        parts = name.split(':')
        if parts[0] == 'swap' and len(parts) == 3:
            self._permutation = ('swap', int(parts[1]), int(parts[2]))
        elif parts[0] == 'flip' and len(parts) == 2:
            self._permutation = ('flip', int(parts[1]))
        else:
            raise ValueError('Unknown block automorphism "%s"' % name)

    def apply(self, v):
        coords = list(v.coords)
        if self._permutation[0] == 'swap':
            _, i, j = self._permutation
            for k in range(self.size):
                coords[i + k], coords[j + k] = coords[j + k], coords[i + k]
        else:
            i = self._permutation[1]
            coords[i], coords[i + 1] = coords[i + 1], coords[i]
        return LatticeVector(v.lattice, coords)

    def inverse(self):
        return self

    def to_json_dict(self):
        return {"kind": self.kind, "name": self.name, "size": self.size}


def generator_from_json_dict(data, lattice):
    """
    Ricostruisce un generatore dal suo dizionario JSON.
    """
    kind = data["kind"]
    if kind == Reflection.kind:
        return Reflection(LatticeVector(lattice, [to_fraction(c) for c in data["root"]]))
    if kind == Transvection.kind:
        return Transvection(LatticeVector(lattice, [to_fraction(c) for c in data["lambda"]]), int(data["offset"]))
    if kind == LiteralTransvection.kind:
        return LiteralTransvection(
            LatticeVector(lattice, [to_fraction(c) for c in data["lambda"]]), int(data["offset"])
        )
    if kind == SignFlip.kind:
        return SignFlip()
    if kind == BlockAutomorphism.kind:
        return BlockAutomorphism(data["name"], int(data.get("size", 2)))
    raise ValueError('Unknown generator kind "%s"' % kind)
