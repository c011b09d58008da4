import numpy as np

from k3kit import settings
from k3kit.exceptions import UnsupportedLattice
from k3kit.lattice.vector import LatticeVector
from k3kit.orbit.generators import BlockAutomorphism, Reflection, SignFlip, Transvection
from k3kit.orbit.reduction import HyperbolicSplit
from k3kit.orbit.word import IsometryWord


def _block_roots(lattice):
    """
    Radici evidenti di ciascun blocco: f1 - f2 per U, i vettori di
    base per E8(-1) e per <-2>.
    """
    roots = []
    for s in lattice.summands:
        if s.name == 'U':
            coords = [0] * lattice.rank
            coords[s.offset], coords[s.offset + 1] = 1, -1
            roots.append(LatticeVector(lattice, coords))
        elif s.name == 'E8(-1)' or s.name == '<-2>':
            roots.extend(lattice.basis_vector(k) for k in s.indices)
    return roots


def _random_lambda(lattice, block, rng, support=3):
    free = [k for k in range(lattice.rank) if k not in (block.offset, block.offset + 1)]
    coords = [0] * lattice.rank
    for k in rng.choice(free, size=min(support, len(free)), replace=False):
        coords[int(k)] = int(rng.integers(-1, 2))
    return LatticeVector(lattice, coords)


def random_isometry_word(lattice, length, rng=None):
    """
    Parola casuale di generatori di O(M): riflessioni nelle radici dei
    blocchi, trasvezioni con lambda a coordinate in {-1, 0, 1},
    scambi f1 <-> f2 e -id.

    Parameters
    ----------
    lattice : `Lattice`
        Il reticolo ambiente, con almeno un sommando U.
    length : `int`
        Il numero di generatori.
    rng : `np.random.Generator`, optional
        Il generatore pseudo-casuale. Default: seme settings.DEFAULT.SEED.

    Returns
    -------
    `IsometryWord`
        La parola generata.
    """
    rng = np.random.default_rng(settings.DEFAULT.SEED) if rng is None else rng
    blocks = lattice.hyperbolic_summands()
    if not blocks:
        raise UnsupportedLattice('Lattice "%s" has no U summand' % lattice.label)
    roots = _block_roots(lattice)
    word = IsometryWord(lattice)
    for _ in range(length):
        choice = rng.random()
        block = blocks[int(rng.integers(len(blocks)))]
        if choice < 0.45:
            word.append(Transvection(_random_lambda(lattice, block, rng), block.offset))
        elif choice < 0.85:
            word.append(Reflection(roots[int(rng.integers(len(roots)))]))
        elif choice < 0.95:
            word.append(BlockAutomorphism('flip:%d' % block.offset))
        else:
            word.append(SignFlip())
    return word


def random_root(lattice, length, rng=None):
    """
    Radice casuale ottenuta applicando una parola casuale alla radice
    canonica f1 - f2 del primo sommando U.
    """
    word = random_isometry_word(lattice, length, rng)
    return word.apply(HyperbolicSplit(lattice).canonical_root())
