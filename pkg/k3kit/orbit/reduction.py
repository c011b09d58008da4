from fractions import Fraction
import logging

from k3kit import settings
from k3kit.exceptions import BudgetExceeded, NoUsableIsotropic, NotRoot, UnsupportedLattice
from k3kit.lattice.exact import extended_gcd_combination
from k3kit.lattice.vector import LatticeVector
from k3kit.orbit.certificate import ReductionCertificate
from k3kit.orbit.generators import LiteralTransvection, Reflection, SignFlip, Transvection
from k3kit.orbit.norm_shift import approximate_norm_shift
from k3kit.orbit.word import IsometryWord


logger = logging.getLogger('OrbitReduction')


class HyperbolicSplit(object):
    """
    Scrive il reticolo ambiente come M = L + U, dove U = <f1, f2> e'
    il primo sommando iperbolico e L e' il complemento dei blocchi
    restanti. Un vettore di M si scrive (v, m, n) con v in L,
    m coefficiente di f1 e n di f2, cosi' che <x, f2> = m.

    Parameters
    ----------
    ambient : `Lattice`
        Il reticolo M, con almeno un sommando U.
    """

    def __init__(self, ambient):
        blocks = ambient.hyperbolic_summands()
        if not blocks:
            raise UnsupportedLattice('Lattice "%s" has no U summand to split off' % ambient.label)
        self.ambient = ambient
        self.block = blocks[0]
        self.offset = self.block.offset
        self.rest = [k for k in range(ambient.rank) if k not in (self.offset, self.offset + 1)]
        self.inner = ambient.sublattice(self.rest)

    @property
    def isotropic(self):
        """
        Il vettore e = f2.
        """
        return self.ambient.basis_vector(self.offset + 1)

    def split(self, x):
        """
        Restituisce la terna (v, m, n) con v vettore di L.
        """
        v = LatticeVector(self.inner, [x.coords[k] for k in self.rest])
        return v, x.coords[self.offset], x.coords[self.offset + 1]

    def join(self, v, m, n):
        coords = [0] * self.ambient.rank
        for k, c in zip(self.rest, v.coords):
            coords[k] = c
        coords[self.offset], coords[self.offset + 1] = m, n
        return LatticeVector(self.ambient, coords)

    def lift(self, v):
        """
        Immerge un vettore di L in M con coordinate iperboliche nulle.
        """
        return self.join(v, 0, 0)

    def canonical_root(self):
        """
        La radice canonica f1 - f2 del primo sommando U.
        """
        return self.join(self.inner.zero(), 1, -1)

    def __repr__(self):
        return "%s(ambient=%s, offset=%s, inner=%s)" % (
            type(self).__name__, self.ambient.label, self.offset, self.inner.label
        )


def _check_root(delta):
    if not delta.integral or delta.norm != -2:
        raise NotRoot('Vector %s has norm %s, a root must be integral of norm -2' % (list(delta.coords), delta.norm))


def _check_budget(steps, budget, what):
    if steps > budget:
        raise BudgetExceeded('%s exceeded the step budget of %d' % (what, budget))


def transvection(lam, ambient=None):
    """
    La trasvezione di Eichler
    (v, m, n) -> (v + m lambda, m, n - <v, lambda> - m <lambda, lambda>/2)
    rispetto al primo sommando U dell'ambiente. E' un'isometria e fissa e = f2.

    Parameters
    ----------
    lam : `LatticeVector`
        Un vettore di L, oppure di M con coordinate nulle sul primo U.
    ambient : `Lattice`, optional
        Il reticolo M, necessario quando lam e' dato in L.

    Returns
    -------
    `Transvection`
        Il generatore.
    """
    split = HyperbolicSplit(ambient if ambient is not None else lam.lattice)
    if lam.lattice != split.ambient:
        lam = split.lift(lam)
    return Transvection(lam, split.offset)


def literal_transvection(lam, ambient=None):
    """
    La variante (v + 2m lambda, m, n - <v, lambda> - m <lambda, lambda>),
    che non preserva la forma.
    """
    split = HyperbolicSplit(ambient if ambient is not None else lam.lattice)
    if lam.lattice != split.ambient:
        lam = split.lift(lam)
    return LiteralTransvection(lam, split.offset)


def _gamma1_steps(r, split, word, budget):
    steps = 0
    while True:
        v, m, n = split.split(r)
        if m == 0:
            break
        w = v / m
        if w.integral:
            break
        steps += 1
        _check_budget(steps, budget, 'gamma1 reduction')
        mu = approximate_norm_shift(w, Fraction(r.norm, m * m))
        delta = split.join(mu, 1, Fraction(-mu.norm - 2, 2))
        reflection = Reflection(delta)
        reduced = reflection.apply(r)
        m_next = split.split(reduced)[1]
        if abs(m_next) >= abs(m):
            # non succede: |m'| < |m|/2 per costruzione di mu
            raise BudgetExceeded('gamma1 reduction stalled at m = %s' % m)
        word.append(reflection)
        r = reduced
        if settings.PRINT_EVENTS:
            print('gamma1 step %d: m = %s -> %s' % (steps, m, m_next))
    if split.split(r)[1] < 0:
        word.append(SignFlip())
        r = -r
    return r, steps


def gamma1_reduce(r, budget=None):
    """
    Riduce una radice r = (v, m, n) di M riflettendo nelle radici
    delta = (mu, 1, (-<mu, mu> - 2)/2), con mu scelto da
    approximate_norm_shift(v/m, <r, r>/m^2). Ogni passo almeno dimezza |m|.
    Si ferma quando m = 0 oppure v/m sta in L; se serve aggiunge -id
    per avere m >= 0.

    Parameters
    ----------
    r : `LatticeVector`
        Una radice del reticolo ambiente.
    budget : `int`, optional
        Il numero massimo di passi. Default: settings.DEFAULT.STEP_BUDGET.

    Returns
    -------
    `ReductionCertificate`
        Il certificato della riduzione.

    Raises
    ------
    UnsupportedLattice
        Se M non ha un sommando U, oppure se L non ne ha uno e v/m
        non sta in L.
    """
    _check_root(r)
    budget = settings.DEFAULT.STEP_BUDGET if budget is None else budget
    split = HyperbolicSplit(r.lattice)
    word = IsometryWord(r.lattice)
    try:
        output, steps = _gamma1_steps(r, split, word, budget)
    except NoUsableIsotropic as e:
        raise UnsupportedLattice(
            'Lattice "%s" needs a second U summand to reduce %s (%s)' % (r.lattice.label, list(r.coords), e)
        )
    logger.info('gamma1 reduction of %s done in %d steps' % (list(r.coords), steps))
    return ReductionCertificate(r, word, output, steps)


def _unit_pairing_vector(split, v):
    """
    Trova lambda0 in L con <v, lambda0> = 1.
    """
    pairings = split.inner.gram_times(v.coords)
    g, coeffs = extended_gcd_combination([int(p) for p in pairings])
    if g != 1:
        raise UnsupportedLattice(
            'Root %s of "%s" has divisor %d, no vector pairs to 1 with it' % (list(v.coords), split.inner.label, g)
        )
    return LatticeVector(split.inner, coeffs)


def canonicalize_root(delta, budget=None):
    """
    Porta una radice di U^p + E8(-1)^q (p >= 2) sulla radice canonica
    f1 - f2 del primo sommando U.

    La parola si compone di: riduzione gamma1; se m = 0, trasvezione che
    annulla n e riflessione che porta la radice in R1; infine, con m = 1,
    la trasvezione per -v che lascia f1 - f2.

    Parameters
    ----------
    delta : `LatticeVector`
        La radice da ridurre.
    budget : `int`, optional
        Il numero massimo di passi. Default: settings.DEFAULT.STEP_BUDGET.

    Returns
    -------
    `ReductionCertificate`
        Il certificato con output f1 - f2.
    """
    _check_root(delta)
    ambient = delta.lattice
    if len(ambient.hyperbolic_summands()) < 2:
        raise UnsupportedLattice(
            'Canonical reduction needs at least two U summands, "%s" has %d' % (
                ambient.label, len(ambient.hyperbolic_summands())
            )
        )
    budget = settings.DEFAULT.STEP_BUDGET if budget is None else budget
    split = HyperbolicSplit(ambient)
    word = IsometryWord(ambient)
    r, steps = _gamma1_steps(delta, split, word, budget)

    v, m, n = split.split(r)
    if m == 0:
        lam0 = _unit_pairing_vector(split, v)
        if n != 0:
            g = Transvection(split.lift(lam0 * n), split.offset)
            word.append(g)
            r = g.apply(r)
            steps += 1
        kappa = split.join(lam0, 1, Fraction(-lam0.norm - 2, 2))
        g = Reflection(kappa)
        word.append(g)
        r = g.apply(r)
        steps += 1
        v, m, n = split.split(r)

    # qui m = 1 e la norma forza r = (v, 1, -1 - <v, v>/2)
    if not v.is_zero:
        g = Transvection(split.lift(-v), split.offset)
        word.append(g)
        r = g.apply(r)
        steps += 1
    _check_budget(steps, budget, 'Root canonicalization')

    if r != split.canonical_root():
        raise BudgetExceeded('Root canonicalization ended at %s' % list(r.coords))
    logger.info('Root %s canonicalized with a word of length %d' % (list(delta.coords), len(word)))
    return ReductionCertificate(delta, word, r, steps)
