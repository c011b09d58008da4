from k3kit.exceptions import NotIsometry
from k3kit.lattice.exact import mat_mul
from k3kit.lattice.reflection import is_isometry
from k3kit.orbit.generators import generator_from_json_dict


class IsometryWord(object):
    """
    Sequenza ordinata di generatori, applicati dal primo all'ultimo.

    Parameters
    ----------
    ambient : `Lattice`
        Il reticolo su cui agisce la parola.
    generators : `list[Generator]`, optional
        I generatori iniziali.
    """

    def __init__(self, ambient, generators=None):
        self.ambient = ambient
        self.generators = list(generators or [])

    def append(self, generator):
        self.generators.append(generator)

    def extend(self, generators):
        self.generators.extend(generators)

    def copy(self):
        return IsometryWord(self.ambient, self.generators)

    def apply(self, v):
        for g in self.generators:
            v = g.apply(v)
        return v

    def inverse(self):
        return IsometryWord(self.ambient, [g.inverse() for g in reversed(self.generators)])

    def matrix(self):
        """
        Matrice intera della parola (convenzione per righe), prodotto
        delle matrici dei generatori nell'ordine di applicazione.
        """
        rank = self.ambient.rank
        result = [[int(i == j) for j in range(rank)] for i in range(rank)]
        for g in self.generators:
            result = mat_mul(result, g.matrix(self.ambient))
        return result

    def check_isometry(self):
        """
        Verifica esatta che la parola preservi la forma.
        """
        for g in self.generators:
            if not is_isometry(g.matrix(self.ambient), self.ambient):
                raise NotIsometry('Generator %r does not preserve the form of "%s"' % (g, self.ambient.label))
        return True

    @property
    def is_identity(self):
        return len(self.generators) == 0

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def to_json_list(self):
        return [g.to_json_dict() for g in self.generators]

    @classmethod
    def from_json_list(cls, data, ambient):
        return cls(ambient, [generator_from_json_dict(d, ambient) for d in data])

    def __repr__(self):
        return "%s(ambient=%s, length=%s)" % (type(self).__name__, self.ambient.label, len(self))
