import re

from k3kit.exceptions import EmptyDescriptor, MalformedDescriptor
from k3kit.lattice.exact import determinant, signature_of


# Diagramma di Dynkin di E8: catena 0-1-2-3-4-5-6, nodo 7 attaccato al nodo 4
E8_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7))

_SUMMAND_RE = re.compile(r'^(U|E8\(-1\)|<-(\d+)>)(?:\^(\d+))?$')


def hyperbolic_gram():
    return ((0, 1), (1, 0))


def e8_minus_gram():
    gram = [[-2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in E8_EDGES:
        gram[i][j] = 1
        gram[j][i] = 1
    return tuple(tuple(row) for row in gram)


def rank_one_gram(norm):
    return ((norm,),)


class Summand(object):
    """
    Blocco di una somma diretta ortogonale.

    Parameters
    ----------
    name : `str`
        Il nome del blocco, ad esempio 'U', 'E8(-1)' o '<-4>'.
    offset : `int`
        L'indice della prima coordinata del blocco.
    gram : `tuple[tuple[int]]`
        La matrice di Gram del blocco.
    """

    def __init__(self, name, offset, gram):
        self.name = name
        self.offset = offset
        self.gram = tuple(tuple(int(x) for x in row) for row in gram)

    @property
    def size(self):
        return len(self.gram)

    @property
    def indices(self):
        return list(range(self.offset, self.offset + self.size))

    def moved_to(self, offset):
        return Summand(self.name, offset, self.gram)

    def __eq__(self, rhs):
        return (
            isinstance(rhs, Summand) and self.name == rhs.name
            and self.offset == rhs.offset and self.gram == rhs.gram
        )

    def __hash__(self):
        return hash((self.name, self.offset, self.gram))

    def __repr__(self):
        return "%s(name=%s, offset=%s, size=%s)" % (
            type(self).__name__, self.name, self.offset, self.size
        )


class Lattice(object):
    """
    Reticolo pari con matrice di Gram intera, segnatura
    e decomposizione in blocchi ortogonali.

    Parameters
    ----------
    gram : `list[list[int]]`
        La matrice di Gram simmetrica, con diagonale pari.
    label : `str`, optional
        Il descrittore testuale, ad esempio "U^3+E8(-1)^2".
    summands : `list[Summand]`, optional
        I blocchi della somma diretta. Se omesso il reticolo
        e' un unico blocco.
    """

    def __init__(self, gram, label=None, summands=None):
        self.gram = tuple(tuple(int(x) for x in row) for row in gram)
        self._check_gram()
        self.rank = len(self.gram)
        self.label = label if label is not None else 'gram'
        if summands is None:
            summands = [Summand(self.label, 0, self.gram)]
        self.summands = tuple(summands)
        self.signature = signature_of(self.gram) if self.rank > 0 else (0, 0)
        self._determinant = None
        self._rows = tuple(
            tuple((j, g) for j, g in enumerate(row) if g != 0) for row in self.gram
        )

    def _check_gram(self):
        n = len(self.gram)
        for i, row in enumerate(self.gram):
            if len(row) != n:
                raise MalformedDescriptor('Gram matrix is not square (row %d has length %d)' % (i, len(row)))
            if row[i] % 2 != 0:
                raise MalformedDescriptor('Gram matrix has odd diagonal entry %d at %d' % (row[i], i))
            for j in range(i):
                if row[j] != self.gram[j][i]:
                    raise MalformedDescriptor('Gram matrix is not symmetric at (%d, %d)' % (i, j))

    @property
    def determinant(self):
        if self._determinant is None:
            self._determinant = determinant(self.gram)
        return self._determinant

    @property
    def is_unimodular(self):
        return abs(self.determinant) == 1

    @property
    def is_negative_definite(self):
        return self.signature[0] == 0

    @property
    def is_hyperbolic(self):
        return self.signature[0] == 1

    def hyperbolic_summands(self):
        """
        Restituisce i blocchi U della decomposizione, nell'ordine.
        """
        return [s for s in self.summands if s.name == 'U']

    def gram_times(self, coords):
        """
        Calcola gram * coords in modo esatto sfruttando la sparsita'.
        """
        return [sum(g * coords[j] for j, g in row) for row in self._rows]

    def pair_coords(self, x, y):
        total = 0
        for i, row in enumerate(self._rows):
            xi = x[i]
            if xi == 0:
                continue
            total += xi * sum(g * y[j] for j, g in row)
        return total

    def vector(self, coords):
        from k3kit.lattice.vector import LatticeVector
        return LatticeVector(self, coords)

    def basis_vector(self, index):
        coords = [0] * self.rank
        coords[index] = 1
        return self.vector(coords)

    def zero(self):
        return self.vector([0] * self.rank)

    def sublattice(self, indices, label=None):
        """
        Restringe il reticolo alle coordinate date. Gli indici devono
        essere unione di blocchi, cosi' la restrizione resta una somma
        diretta ortogonale.

        Parameters
        ----------
        indices : `list[int]`
            Le coordinate da mantenere, nell'ordine.
        label : `str`, optional
            Il descrittore del nuovo reticolo.

        Returns
        -------
        `Lattice`
            Il reticolo ristretto.
        """
        index_set = set(indices)
        gram = [[self.gram[i][j] for j in indices] for i in indices]
        position = {old: new for new, old in enumerate(indices)}
        summands = []
        for s in self.summands:
            if set(s.indices) <= index_set:
                summands.append(s.moved_to(position[s.offset]))
        summands.sort(key=lambda s: s.offset)
        if label is None:
            label = '+'.join(s.name for s in summands) if summands else 'gram'
        return Lattice(gram, label=label, summands=summands or None)

    def to_text(self):
        """
        Esporta la matrice di Gram come testo con interi separati da spazi.
        """
        return '\n'.join(' '.join(str(x) for x in row) for row in self.gram) + '\n'

    def to_json_dict(self):
        return {
            "lattice": self.label,
            "rank": self.rank,
            "signature": list(self.signature),
            "determinant": self.determinant,
            "gram": [list(row) for row in self.gram],
            "summands": [{"name": s.name, "offset": s.offset, "size": s.size} for s in self.summands]
        }

    @classmethod
    def from_json_dict(cls, data):
        """
        Ricostruisce il reticolo dalla Gram e dai blocchi di to_json_dict().
        """
        gram = data["gram"]
        summands = [
            Summand(s["name"], s["offset"], [row[s["offset"]:s["offset"] + s["size"]]
                                             for row in gram[s["offset"]:s["offset"] + s["size"]]])
            for s in data.get("summands", [])
        ]
        return cls(gram, label=data.get("lattice"), summands=summands or None)

    def __eq__(self, rhs):
        if self is rhs:
            return True
        return isinstance(rhs, Lattice) and self.label == rhs.label and self.gram == rhs.gram

    def __hash__(self):
        return hash((self.label, self.gram))

    def __repr__(self):
        return "%s(label=%s, rank=%s, signature=%s)" % (
            type(self).__name__, self.label, self.rank, self.signature
        )


def _parse_summand(token):
    match = _SUMMAND_RE.match(token)
    if match is None:
        raise MalformedDescriptor('Cannot parse lattice summand "%s"' % token)
    base, norm, power = match.groups()
    power = int(power) if power is not None else 1
    if power < 1:
        raise MalformedDescriptor('Summand power must be positive in "%s"' % token)
    if base == 'U':
        return [('U', hyperbolic_gram())] * power
    if base == 'E8(-1)':
        return [('E8(-1)', e8_minus_gram())] * power
    norm = int(norm)
    if norm == 0 or norm % 2 != 0:
        raise MalformedDescriptor('Rank one summand "%s" must have norm -2n with n positive' % token)
    return [('<-%d>' % norm, rank_one_gram(-norm))] * power


def make_lattice(descriptor):
    """
    Costruisce un reticolo da un descrittore come "U^3+E8(-1)^2"
    o "<-4>+U^2+E8(-1)^2". La matrice di Gram e' diagonale a blocchi
    nell'ordine dei sommandi.

    Parameters
    ----------
    descriptor : `str`
        La somma formale di sommandi U, E8(-1) e <-2n>.

    Returns
    -------
    `Lattice`
        Il reticolo costruito.
    """
    if descriptor is None or descriptor.strip() == '':
        raise EmptyDescriptor('Lattice descriptor is empty')
    tokens = [t.strip() for t in descriptor.replace(' ', '').split('+')]
    if any(t == '' for t in tokens):
        raise MalformedDescriptor('Lattice descriptor "%s" has an empty summand' % descriptor)
    blocks = []
    for token in tokens:
        blocks.extend(_parse_summand(token))

    rank = sum(len(gram) for _, gram in blocks)
    gram = [[0] * rank for _ in range(rank)]
    summands = []
    offset = 0
    for name, block in blocks:
        for i, row in enumerate(block):
            for j, g in enumerate(row):
                gram[offset + i][offset + j] = g
        summands.append(Summand(name, offset, block))
        offset += len(block)
    return Lattice(gram, label=descriptor.replace(' ', ''), summands=summands)


def k3_lattice():
    """
    Il reticolo K3, U^3 + E8(-1)^2, di segnatura (3, 19).
    """
    return make_lattice('U^3+E8(-1)^2')


def direct_sum(*lattices):
    """
    Somma diretta ortogonale, con i blocchi di ciascun addendo
    spostati nella posizione finale.
    """
    rank = sum(lat.rank for lat in lattices)
    gram = [[0] * rank for _ in range(rank)]
    summands = []
    offset = 0
    for lat in lattices:
        for i, row in enumerate(lat.gram):
            for j, g in enumerate(row):
                gram[offset + i][offset + j] = g
        summands.extend(s.moved_to(offset + s.offset) for s in lat.summands)
        offset += lat.rank
    label = '+'.join(lat.label for lat in lattices)
    return Lattice(gram, label=label, summands=summands)
