import numpy as np

from k3kit.exceptions import HypothesisViolated, InvalidPeriodPoint, PairNotHyperbolic
from k3kit.lattice.complement import complement_of
from k3kit.lattice.vector import pair
from k3kit.period.frame import PeriodDomain
from k3kit.period.point import normalize_basis


class SplitResult(object):
    """
    Decomposizione di un punto di h_{p,q} rispetto a un sommando U = <a, b>:
    il punto tau' di h_{p-1,q-1} sul complemento W, e il vettore
    f1 = mu + a + lambda b del piano con <f1, b> = 1.
    """

    def __init__(self, point, mu, lam, a, b, inner, embedding, source):
        self.point = point
        self.mu = mu
        self.lam = lam
        self.a = a
        self.b = b
        self.inner = inner
        self.embedding = embedding
        self.source = source

    @property
    def mu_norm(self):
        return float(self.mu @ self.source.gram @ self.mu)

    def mu_in_complement(self):
        """
        Coordinate di mu nella base di W.
        """
        rows = np.array(self.embedding.rows, dtype=float)
        return np.linalg.lstsq(rows.T, self.mu, rcond=None)[0]

    def __repr__(self):
        return "%s(signature=%s, lambda=%.6g, mu_norm=%.6g)" % (
            type(self).__name__, self.point.signature, self.lam, self.mu_norm
        )


def _check_pair(a, b):
    if not (a.lattice == b.lattice):
        raise PairNotHyperbolic('Vectors of the pair belong to different lattices')
    if a.norm != 0 or b.norm != 0 or pair(a, b) != 1:
        raise PairNotHyperbolic(
            'Vectors %s and %s are not an isotropic pair with pairing 1' % (list(a.coords), list(b.coords))
        )


def split_h(point, a, b):
    """
    Spezza un punto di h_{p,q} lungo il sommando iperbolico <a, b>.

    Il piano E del punto interseca b^perp in un (p-1)-piano K; il vettore
    f1 di E ortogonale a K, normalizzato con <f1, b> = 1, si scrive
    f1 = mu + a + lambda b con mu ortogonale ad a e b. La proiezione di K
    sul complemento W di <a, b> da' il punto di h_{p-1,q-1}. Si ha sempre
    2 lambda + <mu, mu> = <f1, f1> > 0.

    Parameters
    ----------
    point : `PeriodPoint`
        Il punto, con il suo dominio.
    a : `LatticeVector`
        Vettore isotropo.
    b : `LatticeVector`
        Vettore isotropo con <a, b> = 1.

    Returns
    -------
    `SplitResult`
        La decomposizione.
    """
    domain = point.domain
    if domain is None:
        raise InvalidPeriodPoint('Period point carries no lattice frame to split')
    p, q = point.signature
    if p < 3 or q < 2:
        raise HypothesisViolated('Splitting needs p >= 3 and q >= 2, got (%d, %d)' % (p, q))
    _check_pair(a, b)

    gram = domain.gram
    av = np.array(a.coords, dtype=float)
    bv = np.array(b.coords, dtype=float)
    plane = domain.from_frame(point.spanning_rows())
    c = plane @ gram @ bv
    pivot = int(np.argmax(np.abs(c)))
    kernel = np.array([plane[j] - c[j] / c[pivot] * plane[pivot] for j in range(p) if j != pivot])

    # f1 in E ortogonale a K
    coupling = plane @ gram @ kernel.T
    left = np.linalg.svd(coupling.T)[2][-1]
    f1 = left @ plane
    f1 = f1 / (f1 @ gram @ bv)
    lam = float(f1 @ gram @ av)
    mu = f1 - av - lam * bv

    inner, embedding = complement_of([a, b], label='complement')
    inner_domain = PeriodDomain(inner)
    projected = kernel - np.outer(kernel @ gram @ av, bv)
    rows = np.array(embedding.rows, dtype=float)
    coords = np.linalg.lstsq(rows.T, projected.T, rcond=None)[0].T
    reduced = normalize_basis(coords, domain=inner_domain, frame=False)
    return SplitResult(reduced, mu, lam, a, b, inner_domain, embedding, domain)


def recompose_h(split):
    """
    Ricostruisce il punto originale da una decomposizione: ogni riga w
    del piano di W si solleva a w - <mu, w> b, poi si aggiunge f1.
    """
    gram = split.source.gram
    av = np.array(split.a.coords, dtype=float)
    bv = np.array(split.b.coords, dtype=float)
    rows = np.array(split.embedding.rows, dtype=float)
    inner_rows = split.inner.from_frame(split.point.spanning_rows()) @ rows
    lifted = inner_rows - np.outer(inner_rows @ gram @ split.mu, bv)
    f1 = split.mu + av + split.lam * bv
    plane = np.vstack([lifted, f1])
    return normalize_basis(plane, domain=split.source, frame=False)
