import numpy as np

from k3kit import settings
from k3kit.exceptions import DegeneratePlane, InvalidPeriodPoint, NotPositivePlane


class PeriodPoint(object):
    """
    Punto di h_{p,q} in coordinate piatte: il p-piano positivo
    generato dalle righe di [I_p | tau] nella base ortonormale.

    Parameters
    ----------
    tau : `np.ndarray`
        La matrice reale p x q.
    signature : `tuple`, optional
        La coppia (p, q). Default: la forma di tau.
    domain : `PeriodDomain`, optional
        Il dominio dei periodi del reticolo, necessario per l'azione
        delle isometrie.
    """

    def __init__(self, tau, signature=None, domain=None):
        tau = np.atleast_2d(np.asarray(tau, dtype=float))
        if signature is None:
            signature = tau.shape
        p, q = signature
        if tau.shape != (p, q):
            raise InvalidPeriodPoint('Coordinates of shape %s do not match signature %s' % (tau.shape, signature))
        if domain is not None and domain.signature != (p, q):
            raise InvalidPeriodPoint('Signature %s does not match the domain signature %s' % (signature, domain.signature))
        if not np.all(np.isfinite(tau)):
            raise InvalidPeriodPoint('Coordinates must be finite')
        self.tau = tau
        self.signature = (p, q)
        self.domain = domain
        smallest = np.linalg.eigvalsh(self.gram()).min() if p > 0 else 1.0
        if smallest <= settings.DEFAULT.POSITIVITY_EPS:
            raise NotPositivePlane(
                'Plane spanned by [I|tau] is not positive definite (smallest eigenvalue %.3e)' % smallest
            )

    @property
    def p(self):
        return self.signature[0]

    @property
    def q(self):
        return self.signature[1]

    def spanning_rows(self):
        """
        Le righe g_j = e_j + sum_i tau_j^i e_{p+i} nella base ortonormale.
        """
        return np.hstack([np.eye(self.p), self.tau])

    def gram(self):
        return np.eye(self.p) - self.tau @ self.tau.T

    def to_text(self):
        """
        Righe decimali separate da spazi, precedute da "p q".
        """
        digits = settings.DEFAULT.REAL_DIGITS
        lines = ['%d %d' % self.signature]
        lines.extend(' '.join('%.*g' % (digits, x) for x in row) for row in self.tau)
        return '\n'.join(lines) + '\n'

    @classmethod
    def from_text(cls, text, domain=None):
        lines = [line.split() for line in text.strip().splitlines() if line.strip()]
        p, q = int(lines[0][0]), int(lines[0][1])
        tau = np.array([[float(x) for x in row] for row in lines[1:]], dtype=float).reshape(p, q)
        return cls(tau, (p, q), domain=domain)

    def __eq__(self, rhs):
        return (
            isinstance(rhs, PeriodPoint) and self.signature == rhs.signature
            and np.array_equal(self.tau, rhs.tau)
        )

    def __hash__(self):
        return hash((self.signature, self.tau.tobytes()))

    def __repr__(self):
        return "%s(signature=%s, tau=%s)" % (type(self).__name__, self.signature, self.tau.tolist())


def normalize_basis(basis, signature=None, domain=None, frame=True):
    """
    Calcola le coordinate piatte tau del p-piano generato dalle righe
    di basis: riducendo le righe si ottiene [I_p | tau]. Il risultato
    non dipende dalla scelta delle righe generatrici.

    Parameters
    ----------
    basis : `np.ndarray`
        La matrice p x (p+q) delle righe generatrici.
    signature : `tuple`, optional
        La coppia (p, q). Default: quella del dominio, oppure
        (righe, colonne - righe).
    domain : `PeriodDomain`, optional
        Il dominio dei periodi.
    frame : `boolean`, optional
        Se True le righe sono gia' nella base ortonormale; altrimenti
        sono coordinate del reticolo e vengono convertite.

    Returns
    -------
    `PeriodPoint`
        Il punto corrispondente.
    """
    basis = np.atleast_2d(np.asarray(basis, dtype=float))
    if not frame:
        basis = domain.to_frame(basis)
    if signature is None:
        signature = domain.signature if domain is not None else (basis.shape[0], basis.shape[1] - basis.shape[0])
    p, q = signature
    if basis.shape != (p, p + q):
        raise DegeneratePlane('Expected %d rows of length %d, got shape %s' % (p, p + q, basis.shape))
    if np.linalg.matrix_rank(basis) < p:
        raise DegeneratePlane('Rows span a plane of rank %d < %d' % (np.linalg.matrix_rank(basis), p))
    form = np.diag([1.0] * p + [-1.0] * q)
    gram = basis @ form @ basis.T
    smallest = np.linalg.eigvalsh((gram + gram.T) / 2).min()
    if smallest <= settings.DEFAULT.POSITIVITY_EPS * max(1.0, np.abs(gram).max()):
        raise NotPositivePlane('Rows do not span a positive %d-plane (smallest eigenvalue %.3e)' % (p, smallest))
    tau = np.linalg.solve(basis[:, :p], basis[:, p:])
    return PeriodPoint(tau, (p, q), domain=domain)


def gram_det(point):
    """
    Il determinante di Gram g(tau) = det(I_p - tau tau^T), positivo
    su tutto il dominio.
    """
    return float(np.linalg.det(point.gram()))


def bergman_norm(a):
    """
    La forma quadratica sum |A_ij|^2, cioe' la metrica di Bergman
    nel punto base tau = 0.
    """
    a = np.asarray(a, dtype=float)
    return float(np.sum(a * a))


def bergman_form(point, a):
    """
    La forma quadratica invariante in un punto del dominio,
    tr((I - tau tau^T)^{-1} A (I - tau^T tau)^{-1} A^T).
    Coincide con bergman_norm per tau = 0.

    Parameters
    ----------
    point : `PeriodPoint`
        Il punto.
    a : `np.ndarray`
        Il vettore tangente, matrice p x q.

    Returns
    -------
    `float`
        Il valore della forma.
    """
    a = np.asarray(a, dtype=float)
    tau = point.tau
    left = np.eye(point.p) - tau @ tau.T
    right = np.eye(point.q) - tau.T @ tau
    return float(np.trace(np.linalg.solve(left, a) @ np.linalg.solve(right, a.T)))
