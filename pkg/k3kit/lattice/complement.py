import math

from k3kit.exceptions import NotInHyperbolicSummand, NotPositiveNorm, NotPrimitive, ZeroVector
from k3kit.lattice.exact import integer_kernel
from k3kit.lattice.lattice import Lattice, Summand, rank_one_gram
from k3kit.lattice.vector import LatticeVector, is_primitive


class LatticeEmbedding(object):
    """
    Immersione isometrica di un reticolo in un reticolo ambiente,
    data dalle immagini dei vettori di base (righe).

    Parameters
    ----------
    source : `Lattice`
        Il reticolo immerso.
    target : `Lattice`
        Il reticolo ambiente.
    rows : `list[list[int]]`
        Le coordinate nell'ambiente delle immagini della base di source.
    """

    def __init__(self, source, target, rows):
        self.source = source
        self.target = target
        self.rows = [list(row) for row in rows]

    def apply(self, v):
        coords = [0] * self.target.rank
        for c, row in zip(v.coords, self.rows):
            if c == 0:
                continue
            for k, x in enumerate(row):
                coords[k] += c * x
        return LatticeVector(self.target, coords)

    def images(self):
        return [LatticeVector(self.target, row) for row in self.rows]

    def __repr__(self):
        return "%s(source=%s, target=%s)" % (
            type(self).__name__, self.source.label, self.target.label
        )


def describe(names):
    """
    Compone un descrittore compatto, ad esempio ['U', 'U', 'E8(-1)']
    diventa "U^2+E8(-1)".
    """
    parts = []
    for name in names:
        if parts and parts[-1][0] == name:
            parts[-1][1] += 1
        else:
            parts.append([name, 1])
    return '+'.join(name if count == 1 else '%s^%d' % (name, count) for name, count in parts)


def _hyperbolic_block_of(l):
    support = [k for k, c in enumerate(l.coords) if c != 0]
    for block in l.lattice.hyperbolic_summands():
        if set(support) <= set(block.indices) and support:
            return block
    raise NotInHyperbolicSummand(
        'Vector %s is not supported on a single U summand of "%s"' % (list(l.coords), l.lattice.label)
    )


def orthogonal_complement(l):
    """
    Complemento ortogonale di una polarizzazione l = x e1 + y e2 contenuta
    in un sommando U. Il risultato e' <-2n> + (sommandi restanti) con
    generatore l* = x e1 - y e2, dove 2n = <l, l>.

    Parameters
    ----------
    l : `LatticeVector`
        La polarizzazione, primitiva e di norma positiva.

    Returns
    -------
    `tuple`
        (Lattice, LatticeEmbedding) del complemento.
    """
    ambient = l.lattice
    if not l.integral:
        raise NotPrimitive('Polarization %s is not integral' % list(l.coords))
    if l.is_zero:
        raise ZeroVector('Polarization is the zero vector')
    block = _hyperbolic_block_of(l)
    if not is_primitive(l):
        raise NotPrimitive('Polarization %s is not primitive' % list(l.coords))
    norm = l.norm
    if norm <= 0:
        raise NotPositiveNorm('Polarization %s has norm %s, expected a positive norm' % (list(l.coords), norm))

    i, j = block.offset, block.offset + 1
    x, y = l.coords[i], l.coords[j]
    l_star = [0] * ambient.rank
    l_star[i], l_star[j] = x, -y

    rows = [l_star]
    names = ['<-%d>' % norm]
    summands = [Summand(names[0], 0, rank_one_gram(-norm))]
    offset = 1
    for s in ambient.summands:
        if s is block or s == block:
            continue
        for k in s.indices:
            row = [0] * ambient.rank
            row[k] = 1
            rows.append(row)
        summands.append(s.moved_to(offset))
        names.append(s.name)
        offset += s.size

    gram = [[ambient.pair_coords(r, c) for c in rows] for r in rows]
    complement = Lattice(gram, label=describe(names), summands=summands)
    return complement, LatticeEmbedding(complement, ambient, rows)


def complement_of(vectors, label='complement'):
    """
    Complemento ortogonale intero, in posizione generale, di una
    famiglia di vettori di un reticolo.

    Parameters
    ----------
    vectors : `list[LatticeVector]`
        I vettori, tutti dello stesso reticolo.
    label : `str`, optional
        Il descrittore del complemento.

    Returns
    -------
    `tuple`
        (Lattice, LatticeEmbedding) del complemento.
    """
    ambient = vectors[0].lattice
    constraints = [ambient.gram_times(v.coords) for v in vectors]
    denominators = [math.lcm(*[getattr(c, 'denominator', 1) for c in row]) for row in constraints]
    constraints = [[int(c * d) for c in row] for row, d in zip(constraints, denominators)]
    basis = integer_kernel(constraints, size=ambient.rank)
    gram = [[ambient.pair_coords(r, c) for c in basis] for r in basis]
    complement = Lattice(gram, label=label)
    return complement, LatticeEmbedding(complement, ambient, basis)
