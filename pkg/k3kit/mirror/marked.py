from k3kit.exceptions import MalformedDescriptor, NoHyperbolicSummand, UnsupportedLattice
from k3kit.lattice.complement import describe
from k3kit.lattice.lattice import hyperbolic_gram, k3_lattice


class MarkedMSurfaceData(object):
    """
    Dati reticolari di una coppia marcata (X, M): il reticolo di Picard M
    e il trascendente T come unioni di blocchi dichiarati di Lambda_K3,
    piu' un sommando U scelto dentro T.

    Parameters
    ----------
    picard : `list[Summand]`
        I blocchi di M.
    transcendental : `list[Summand]`
        I blocchi di T.
    u_choice : `Summand`, optional
        Un blocco U di T.
    ambient : `Lattice`, optional
        Il reticolo K3. Default: U^3 + E8(-1)^2.
    """

    def __init__(self, picard, transcendental, u_choice=None, ambient=None):
        self.ambient = ambient if ambient is not None else k3_lattice()
        self.picard = sorted(picard, key=lambda s: s.offset)
        self.transcendental = sorted(transcendental, key=lambda s: s.offset)
        self.u_choice = u_choice
        used = [k for s in self.picard + self.transcendental for k in s.indices]
        if len(set(used)) != len(used):
            raise MalformedDescriptor('Picard and transcendental blocks overlap')
        if sorted(used) != list(range(self.ambient.rank)):
            raise MalformedDescriptor(
                'Blocks cover rank %d, the ambient lattice has rank %d' % (len(used), self.ambient.rank)
            )
        for s in self.picard + self.transcendental:
            if s not in self.ambient.summands:
                raise MalformedDescriptor('Block %r is not a summand of "%s"' % (s, self.ambient.label))

    def _indices(self, blocks):
        return [k for s in blocks for k in s.indices]

    @property
    def picard_lattice(self):
        return self.ambient.sublattice(self._indices(self.picard), describe([s.name for s in self.picard]))

    @property
    def transcendental_lattice(self):
        return self.ambient.sublattice(
            self._indices(self.transcendental), describe([s.name for s in self.transcendental])
        )

    @property
    def rho(self):
        return len(self._indices(self.picard))

    def signatures(self):
        """
        Le segnature di M e di T, che sommano a quella di Lambda_K3.
        """
        m = self.picard_lattice.signature if self.picard else (0, 0)
        t = self.transcendental_lattice.signature if self.transcendental else (0, 0)
        return m, t

    def to_json_dict(self):
        return {
            "ambient": self.ambient.label,
            "picard": describe([s.name for s in self.picard]),
            "picard_indices": [s.indices for s in self.picard],
            "transcendental": describe([s.name for s in self.transcendental]),
            "transcendental_indices": [s.indices for s in self.transcendental],
            "u_choice": None if self.u_choice is None else self.u_choice.indices
        }

    def __eq__(self, rhs):
        return (
            isinstance(rhs, MarkedMSurfaceData) and self.picard == rhs.picard
            and self.transcendental == rhs.transcendental and self.u_choice == rhs.u_choice
        )

    def __hash__(self):
        return hash((tuple(self.picard), tuple(self.transcendental), self.u_choice))

    def __repr__(self):
        return "%s(picard=%s, transcendental=%s)" % (
            type(self).__name__,
            describe([s.name for s in self.picard]),
            describe([s.name for s in self.transcendental])
        )


def marked_pair(picard_blocks, ambient=None, u_choice=None):
    """
    Costruisce i dati marcati a partire dagli indici dei blocchi di
    Lambda_K3 che formano M; T e' formato dai blocchi restanti.
    Se u_choice non e' dato si usa il primo blocco U di T.

    Parameters
    ----------
    picard_blocks : `list[int]`
        Le posizioni in ambient.summands dei blocchi di M.
    ambient : `Lattice`, optional
        Il reticolo K3.
    u_choice : `int`, optional
        La posizione in ambient.summands del blocco U scelto.

    Returns
    -------
    `MarkedMSurfaceData`
        I dati marcati.
    """
    ambient = ambient if ambient is not None else k3_lattice()
    summands = list(ambient.summands)
    for k in list(picard_blocks) + ([] if u_choice is None else [u_choice]):
        if not 0 <= k < len(summands):
            raise UnsupportedLattice(
                'Block position %d is out of range, "%s" has %d summands' % (k, ambient.label, len(summands))
            )
    picard = [summands[k] for k in picard_blocks]
    transcendental = [s for k, s in enumerate(summands) if k not in set(picard_blocks)]
    if u_choice is not None:
        chosen = summands[u_choice]
    else:
        chosen = next((s for s in transcendental if s.name == 'U'), None)
    return MarkedMSurfaceData(picard, transcendental, chosen, ambient)


def mirror_swap(data):
    """
    Scambio di specchio: M1 e' il complemento di U in T, T1 = M + U.
    Il rango di M1 e' 20 - rank M.

    Parameters
    ----------
    data : `MarkedMSurfaceData`
        I dati della superficie.

    Returns
    -------
    `MarkedMSurfaceData`
        I dati della superficie specchio, con lo stesso U.
    """
    u = data.u_choice
    if u is None:
        raise NoHyperbolicSummand('No U summand was chosen inside T')
    if u not in data.transcendental:
        raise NoHyperbolicSummand('Chosen block %r does not lie in the transcendental lattice' % u)
    if u.gram != tuple(tuple(row) for row in hyperbolic_gram()):
        raise NoHyperbolicSummand('Chosen block %r is not a hyperbolic plane' % u)
    picard = [s for s in data.transcendental if s != u]
    transcendental = list(data.picard) + [u]
    return MarkedMSurfaceData(picard, transcendental, u, data.ambient)


def same_summands(a, b):
    """
    Confronta i multiinsiemi delle matrici di Gram dei blocchi di M e di T.
    """
    def shape(blocks):
        return sorted(s.gram for s in blocks)
    return shape(a.picard) == shape(b.picard) and shape(a.transcendental) == shape(b.transcendental)
