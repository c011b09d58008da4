import logging

from k3kit import settings
from k3kit.exceptions import (
    LatticeMismatch, NegativeTruncation, NotHyperbolic, NotPolarization, NotPositiveNorm, UnsupportedLattice
)
from k3kit.lattice.enumeration import RootConstraint, enumerate_roots, hyperbolic_pairs
from k3kit.lattice.vector import coord_to_json, pair
from k3kit.counting.theta import theta_series


logger = logging.getLogger('CurveCounting')

STRATEGIES = ('auto', 'enumerate', 'theta')


class CountProfile(object):
    """
    Conteggio delle radici per grado: a[n-1] e' il numero di radici
    delta con <delta, l> = n, per 1 <= n <= N. Le radici ortogonali
    a l (i muri) sono riportate a parte e non vengono contate.

    Parameters
    ----------
    lattice : `Lattice`
        Il reticolo iperbolico S.
    l : `LatticeVector`
        La polarizzazione.
    a : `list[int]`
        I conteggi a_1, ..., a_N.
    walls : `list[LatticeVector]`
        Le radici ortogonali a l.
    strategy : `str`, optional
        La strategia usata per il conteggio.
    """

    def __init__(self, lattice, l, a, walls, strategy=None):
        self.lattice = lattice
        self.l = l
        self.a = list(a)
        self.walls = list(walls)
        self.strategy = strategy

    @property
    def order(self):
        return len(self.a)

    def count(self, n):
        return self.a[n - 1] if 1 <= n <= len(self.a) else 0

    def to_json_dict(self):
        return {
            "lattice": self.lattice.label,
            "l": [coord_to_json(c) for c in self.l.coords],
            "a": self.a,
            "walls": [[coord_to_json(c) for c in w.coords] for w in self.walls],
            "strategy": self.strategy
        }

    def __eq__(self, rhs):
        return isinstance(rhs, CountProfile) and self.a == rhs.a and len(self.walls) == len(rhs.walls)

    def __hash__(self):
        return hash((tuple(self.a), len(self.walls)))

    def __repr__(self):
        return "%s(lattice=%s, order=%s, walls=%s)" % (
            type(self).__name__, self.lattice.label, self.order, len(self.walls)
        )


def _check_polarization(lattice, l):
    if not (l.lattice == lattice):
        raise LatticeMismatch('Polarization does not belong to lattice "%s"' % lattice.label)
    if lattice.signature[0] != 1:
        raise NotHyperbolic('Lattice "%s" has signature %s, expected (1, k)' % (lattice.label, lattice.signature))
    if not l.integral or l.norm <= 0:
        raise NotPolarization('Vector %s has norm %s, a polarization needs a positive norm' % (
            list(l.coords), l.norm
        ))


def _theta_block(lattice, l):
    """
    Il blocco U che contiene il supporto di l, se il resto del
    reticolo e' definito negativo.
    """
    for block in lattice.hyperbolic_summands():
        i, j = block.offset, block.offset + 1
        if any(c != 0 for k, c in enumerate(l.coords) if k not in (i, j)):
            continue
        fiber = lattice.sublattice([k for k in range(lattice.rank) if k not in (i, j)])
        if fiber.rank == 0 or fiber.is_negative_definite:
            return block, fiber
    return None


def _theta_counts(lattice, l, order, block, fiber):
    i, j = block.offset, block.offset + 1
    l_a, l_b = l.coords[i], l.coords[j]
    pairs = {n: hyperbolic_pairs(l_a, l_b, n, -2) for n in range(1, order + 1)}
    top = max([1 + a * b for ps in pairs.values() for a, b in ps] + [0])
    theta = theta_series(fiber, top)
    return [sum(theta[1 + a * b] for a, b in pairs[n]) for n in range(1, order + 1)]


def _enumerated_counts(lattice, l, order, workers):
    return [
        len(enumerate_roots(lattice, RootConstraint(-2, [(l, n)]), workers=workers))
        for n in range(1, order + 1)
    ]


def count_roots_with_degree(lattice, l, order, strategy='auto', workers=None):
    """
    Conta le radici di S per grado rispetto alla polarizzazione l.

    Con la strategia "enumerate" le radici di ogni grado vengono
    elencate (fissando le coordinate iperboliche ed enumerando la fibra
    definita). Con "theta" si usa la serie theta della fibra:
    a_n = sum r_D(1 + ab) sulle coppie (a, b) con a l_b + b l_a = n e ab >= -1.
    "auto" sceglie theta quando l sta in un blocco U con fibra definita.

    Parameters
    ----------
    lattice : `Lattice`
        Il reticolo S di segnatura (1, k).
    l : `LatticeVector`
        La polarizzazione, di norma positiva.
    order : `int`
        Il grado massimo N.
    strategy : `str`, optional
        Una tra "auto", "enumerate", "theta".
    workers : `int`, optional
        Numero di processi per l'enumerazione.

    Returns
    -------
    `CountProfile`
        Il profilo dei conteggi.
    """
    if order < 0:
        raise NegativeTruncation('Truncation order must be non-negative, got %d' % order)
    if strategy not in STRATEGIES:
        raise ValueError('Unknown counting strategy "%s", expected one of %s' % (strategy, STRATEGIES))
    _check_polarization(lattice, l)
    workers = workers or settings.DEFAULT.THREADS

    theta = _theta_block(lattice, l)
    if strategy == 'auto':
        strategy = 'theta' if theta is not None else 'enumerate'
    if strategy == 'theta':
        if theta is None:
            raise NotHyperbolic(
                'Theta counting needs l inside a U summand with a definite fiber in "%s"' % lattice.label
            )
        a = _theta_counts(lattice, l, order, *theta)
    else:
        a = _enumerated_counts(lattice, l, order, workers)

    walls = enumerate_roots(lattice, RootConstraint(-2, [(l, 0)]), workers=workers)
    logger.info('Counted roots of "%s" up to degree %d (%s strategy), %d walls' % (
        lattice.label, order, strategy, len(walls)
    ))
    return CountProfile(lattice, l, a, walls, strategy)


def restricted_profile(lattice, l, indices, order, workers=None):
    """
    Conteggi del prodotto di S ristretto alla retta del tubo di un
    sottoreticolo unimodulare S1, somma dei blocchi di S indicati e
    contenente l. Ogni radice di S si scrive x + k con x in S1 e k nel
    complemento K, e <x + k, l> = <x, l>, quindi

        a_n = sum_{m >= 0} r_K(m) #{x in S1 : <x, x> = 2m - 2, <x, l> = n}.

    Il termine m = 0 conta le radici di S1; gli altri contano vettori
    di S1 di norma non negativa, pesati con la serie theta di K. I
    vettori di S1 si contano sulle coppie iperboliche del blocco U di l
    e sulla serie theta della fibra di S1.

    Parameters
    ----------
    lattice : `Lattice`
        Il reticolo S di segnatura (1, k).
    l : `LatticeVector`
        La polarizzazione, nulla fuori da S1.
    indices : `list[int]`
        Le coordinate di S1, unione di blocchi di S.
    order : `int`
        Il grado massimo N.
    workers : `int`, optional
        Numero di processi per l'enumerazione dei muri.

    Returns
    -------
    `CountProfile`
        Il profilo su S1, con strategia "restriction". I muri sono le
        radici di S1 ortogonali a l.
    """
    if order < 0:
        raise NegativeTruncation('Truncation order must be non-negative, got %d' % order)
    _check_polarization(lattice, l)
    index_set = set(indices)
    covered = set(k for s in lattice.summands if set(s.indices) <= index_set for k in s.indices)
    if covered != index_set:
        raise UnsupportedLattice('Coordinates %s are not a union of summands of "%s"' % (
            sorted(index_set), lattice.label
        ))
    if any(c != 0 for k, c in enumerate(l.coords) if k not in index_set):
        raise NotPolarization('Polarization %s does not lie in the sublattice %s' % (list(l.coords), sorted(index_set)))
    kept = sorted(index_set)
    sub = lattice.sublattice(kept)
    if not sub.is_unimodular:
        raise UnsupportedLattice('Sublattice "%s" has determinant %s, expected a unimodular one' % (
            sub.label, sub.determinant
        ))
    complement = lattice.sublattice([k for k in range(lattice.rank) if k not in index_set])
    sub_l = sub.vector([l.coords[k] for k in kept])
    theta = _theta_block(sub, sub_l)
    if theta is None:
        raise NotHyperbolic('Restriction needs l inside a U summand with a definite fiber in "%s"' % sub.label)
    block, fiber = theta
    i, j = block.offset, block.offset + 1
    pairs = {n: hyperbolic_pairs(sub_l.coords[i], sub_l.coords[j], n, -2) for n in range(1, order + 1)}
    top = max([1 + a * b for ps in pairs.values() for a, b in ps] + [0])
    r_fiber = theta_series(fiber, top)
    r_complement = theta_series(complement, top)

    counts = []
    for n in range(1, order + 1):
        total = 0
        for m in range(top + 1):
            if r_complement[m] == 0:
                continue
            # <x, x> = 2ab + <d, d> = 2m - 2 con d nella fibra
            shell = sum(r_fiber[1 + a * b - m] for a, b in pairs[n] if a * b >= m - 1)
            total += r_complement[m] * shell
        counts.append(total)

    walls = enumerate_roots(sub, RootConstraint(-2, [(sub_l, 0)]), workers=workers or settings.DEFAULT.THREADS)
    logger.info('Restricted "%s" to "%s" up to degree %d' % (lattice.label, sub.label, order))
    return CountProfile(sub, sub_l, counts, walls, 'restriction')


def chamber_walls(lattice, v, bound, positive=None, workers=None):
    """
    Radici che separano v dalla camera: quelle con <delta, v> <= 0.

    Con positive = l si considerano le radici positive 1 <= <delta, l> <= bound;
    altrimenti le radici con -bound <= <delta, v> <= 0. Una lista vuota
    certifica la posizione di v solo fino al limite dato.

    Parameters
    ----------
    lattice : `Lattice`
        Il reticolo iperbolico.
    v : `LatticeVector`
        Il vettore da controllare, di norma positiva.
    bound : `int`
        L'altezza massima delle radici.
    positive : `LatticeVector`, optional
        La polarizzazione che definisce le radici positive.

    Returns
    -------
    `list[LatticeVector]`
        Le radici trovate, in ordine lessicografico.
    """
    if v.norm <= 0:
        raise NotPositiveNorm('Vector %s has norm %s, expected a positive norm' % (list(v.coords), v.norm))
    workers = workers or 1
    found = []
    if positive is not None:
        for n in range(1, bound + 1):
            roots = enumerate_roots(lattice, RootConstraint(-2, [(positive, n)]), workers=workers)
            found.extend(r for r in roots if pair(r, v) <= 0)
    else:
        for c in range(-bound, 1):
            found.extend(enumerate_roots(lattice, RootConstraint(-2, [(v, c)]), workers=workers))
    return sorted(found, key=lambda r: r.coords)
