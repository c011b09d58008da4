from fractions import Fraction
import logging

from k3kit import settings
from k3kit.exceptions import BadPolarization, ComponentUnreachable, NotRoot
from k3kit.lattice.vector import LatticeVector, pair
from k3kit.orbit.certificate import ReductionCertificate
from k3kit.orbit.generators import Reflection
from k3kit.orbit.reduction import HyperbolicSplit
from k3kit.orbit.word import IsometryWord


logger = logging.getLogger('OrbitReduction')

PERP_ROOT = 'perp-root'
LSTAR_COMPONENT = 'lstar-component'

MAX_LSTAR_MULTIPLE = 3


class ComponentResult(object):
    """
    Esito di discriminant_component: la componente del divisore
    discriminante, il certificato e il coefficiente k della proiezione
    finale k l* (None per le radici ortogonali a l).
    """

    def __init__(self, tag, certificate, coefficient, polarization):
        self.tag = tag
        self.certificate = certificate
        self.coefficient = coefficient
        self.polarization = polarization

    def projection(self):
        """
        Proiezione dell'output sul complemento ortogonale di l.
        """
        l = self.polarization
        delta = self.certificate.output
        return delta - l * Fraction(pair(delta, l), l.norm)

    def verify(self):
        """
        Riesegue il certificato e controlla che la proiezione finale
        sia k l*.
        """
        if not self.certificate.replay():
            return False
        if self.tag == PERP_ROOT:
            return pair(self.certificate.input, self.polarization) == 0
        return self.projection() == dual_polarization(self.polarization) * self.coefficient

    def to_json_dict(self):
        data = self.certificate.to_json_dict()
        data["tag"] = self.tag
        if self.coefficient is not None:
            c = Fraction(self.coefficient)
            data["coefficient"] = c.numerator if c.denominator == 1 else '%d/%d' % (c.numerator, c.denominator)
        return data

    def __repr__(self):
        return "%s(tag=%s, coefficient=%s, steps=%s)" % (
            type(self).__name__, self.tag, self.coefficient, self.certificate.steps
        )


def _polarization_degree(l, split):
    v, x, y = split.split(l)
    if not v.is_zero or x != 1 or not isinstance(y, int) or y < 1:
        raise BadPolarization(
            'Polarization %s is not of the form e1 + n e2 in the first U summand' % list(l.coords)
        )
    return y


def dual_polarization(l):
    """
    Il vettore l* = e1 - n e2, ortogonale a l = e1 + n e2 e di norma -2n.
    """
    split = HyperbolicSplit(l.lattice)
    n = _polarization_degree(l, split)
    return split.join(split.inner.zero(), 1, -n)


def _outer_size(delta, split):
    v = split.split(delta)[0]
    return sum(abs(c) for c in v.coords)


def _candidate_roots(split, n):
    """
    Radici kappa = k0 l* + s mu ortogonali a l, con
    mu = a + ((N - x^2 <c, c>)/2) b + x c, N = 2 n k0^2 - 2,
    (a, b) base di un sommando U di L e c un vettore di base di L fuori
    da quel blocco. A queste si aggiungono le radici semplici dei
    blocchi definiti di L, che fissano l.
    """
    inner = split.inner
    l_star = split.join(inner.zero(), 1, -n)
    candidates = []
    for k0 in range(1, MAX_LSTAR_MULTIPLE + 1):
        big_n = 2 * n * k0 * k0 - 2
        for block in inner.hyperbolic_summands():
            i = block.offset
            others = [t for t in range(inner.rank) if t not in (i, i + 1)]
            for a_index, b_index in ((i, i + 1), (i + 1, i)):
                for c_index in [None] + others:
                    for x in ((0,) if c_index is None else (-1, 1)):
                        coords = [0] * inner.rank
                        c_norm = 0 if c_index is None else inner.gram[c_index][c_index]
                        coords[a_index] += 1
                        coords[b_index] += Fraction(big_n - x * x * c_norm, 2)
                        if c_index is not None:
                            coords[c_index] += x
                        mu = LatticeVector(inner, coords)
                        for s in (1, -1):
                            candidates.append(l_star * k0 + split.lift(mu * s))
    for s in inner.summands:
        if s.name == 'U':
            continue
        for t in s.indices:
            if inner.gram[t][t] == -2:
                candidates.append(split.lift(inner.basis_vector(t)))
    return [c for c in candidates if c.integral and c.norm == -2]


def discriminant_component(delta, l, n=None, budget=None):
    """
    Determina la componente del divisore discriminante contenente la
    radice delta, rispetto alla polarizzazione l = e1 + n e2.

    Se <delta, l> = 0 la radice sta nella componente delle radici
    ortogonali a l. Altrimenti si riflette delta nelle radici
    kappa = k0 l* + mu ortogonali a l (il gruppo fissa l) scegliendo
    ad ogni passo quella che riduce di piu' la norma L1 della parte di
    delta fuori dal primo U, finche' la proiezione su l^perp e' k l*.

    Parameters
    ----------
    delta : `LatticeVector`
        Una radice del reticolo K3.
    l : `LatticeVector`
        La polarizzazione e1 + n e2.
    n : `int`, optional
        Il grado atteso, controllato contro <l, l> = 2n.
    budget : `int`, optional
        Il numero massimo di passi. Default: settings.DEFAULT.STEP_BUDGET.

    Returns
    -------
    `ComponentResult`
        La componente, il certificato e il coefficiente k.
    """
    if not delta.integral or delta.norm != -2:
        raise NotRoot('Vector %s has norm %s, a root must be integral of norm -2' % (list(delta.coords), delta.norm))
    if not (l.lattice == delta.lattice):
        raise BadPolarization('Polarization and root live in different lattices')
    split = HyperbolicSplit(delta.lattice)
    degree = _polarization_degree(l, split)
    if n is not None and n != degree:
        raise BadPolarization('Polarization %s has degree %d, expected %d' % (list(l.coords), degree, n))
    n = degree
    budget = settings.DEFAULT.STEP_BUDGET if budget is None else budget
    word = IsometryWord(delta.lattice)

    d = pair(delta, l)
    if d == 0:
        return ComponentResult(PERP_ROOT, ReductionCertificate(delta, word, delta, 0), None, l)
    if abs(d) != n - 1:
        raise ComponentUnreachable(
            'Root %s has <delta, l> = %s; only |<delta, l>| = %d reaches a multiple of l*' % (
                list(delta.coords), d, n - 1
            )
        )

    candidates = _candidate_roots(split, n)
    current = delta
    size = _outer_size(current, split)
    steps = 0
    while size > 0:
        steps += 1
        if steps > budget:
            raise ComponentUnreachable('Descent exceeded the step budget of %d' % budget)
        best, best_size = None, size
        for kappa in candidates:
            image = current + kappa * pair(current, kappa)
            image_size = _outer_size(image, split)
            if image_size < best_size:
                best, best_size = (kappa, image), image_size
        if best is None:
            raise ComponentUnreachable(
                'No reflection reduces %s below size %s' % (list(current.coords), size)
            )
        word.append(Reflection(best[0]))
        current, size = best[1], best_size
        if settings.PRINT_EVENTS:
            print('descent step %d: size %s' % (steps, size))

    l_star = dual_polarization(l)
    coefficient = Fraction(pair(current, l_star), -2 * n)
    logger.info('Root %s reduced to the l* component in %d steps' % (list(delta.coords), steps))
    certificate = ReductionCertificate(delta, word, current, steps)
    return ComponentResult(LSTAR_COMPONENT, certificate, coefficient, l)
