from fractions import Fraction
import math

from k3kit.exceptions import NoUsableIsotropic, VectorInLattice
from k3kit.lattice.exact import to_fraction
from k3kit.lattice.vector import LatticeVector
from k3kit.orbit.generators import Transvection


def _is_integral(x):
    return Fraction(x).denominator == 1


def _solve_on_block(v, x, i):
    """
    Con a = v_i oppure b = v_{i+1} non intero: arrotonda la parte
    fuori dal blocco e sceglie (m, n) nel blocco in modo che
    |2(a - m)(b - n) + <z - zeta, z - zeta> - x| < 1.
    """
    lattice = v.lattice
    a, b = Fraction(v.coords[i]), Fraction(v.coords[i + 1])
    rest = [round(Fraction(c)) if k not in (i, i + 1) else 0 for k, c in enumerate(v.coords)]
    frac = [Fraction(c) - r if k not in (i, i + 1) else 0 for k, (c, r) in enumerate(zip(v.coords, rest))]
    target = x - lattice.pair_coords(frac, frac)
    if not _is_integral(a):
        m = math.floor(a)
        n = round(b - target / (2 * (a - m)))
    else:
        n = math.floor(b)
        m = round(a - target / (2 * (b - n)))
    rest[i], rest[i + 1] = m, n
    return LatticeVector(lattice, rest)


def approximate_norm_shift(v, x):
    """
    Dato v in L tensor Q non intero e un reale x, trova mu in L con
    |<v - mu, v - mu> - x| < 1.

    Si usa un sommando U di L, con coordinate (a, b) per v. Se a (o b)
    non e' intero si sceglie m = floor(a) e poi n in modo che
    2(a - m)(b - n) sia vicino a x meno la norma della parte restante.
    Se a e b sono interi, una trasvezione di Eichler rende b frazionario;
    il risultato viene riportato indietro con la trasvezione inversa.

    Parameters
    ----------
    v : `LatticeVector`
        Il vettore razionale di L.
    x : `Fraction`, `int` o `float`
        Il valore bersaglio (i float sono convertiti in modo esatto).

    Returns
    -------
    `LatticeVector`
        Il vettore intero mu.
    """
    if v.integral:
        raise VectorInLattice('Vector %s already lies in the lattice' % list(v.coords))
    x = to_fraction(x)
    lattice = v.lattice
    blocks = lattice.hyperbolic_summands()
    if not blocks:
        raise NoUsableIsotropic(
            'Lattice "%s" exposes no hyperbolic summand to shift the norm with' % lattice.label
        )
    for block in blocks:
        i = block.offset
        if not (_is_integral(v.coords[i]) and _is_integral(v.coords[i + 1])):
            return _solve_on_block(v, x, i)

    block = blocks[0]
    i = block.offset
    pairings = lattice.gram_times(v.coords)
    for t in range(lattice.rank):
        if t in (i, i + 1) or _is_integral(pairings[t]):
            continue
        lam = lattice.basis_vector(t)
        g = Transvection(lam, i)
        shifted = g.apply(v)
        mu = _solve_on_block(shifted, x, i)
        return g.inverse().apply(mu)
    raise NoUsableIsotropic(
        'No isotropic vector of "%s" pairs non-integrally with %s' % (lattice.label, list(v.coords))
    )
