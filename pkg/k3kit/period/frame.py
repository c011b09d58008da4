import math

import numpy as np

from k3kit.exceptions import LatticeMismatch
from k3kit.lattice.exact import congruence_diagonalize


class PeriodDomain(object):
    """
    Dominio dei periodi h_{p,q} di un reticolo di segnatura (p, q),
    con una base ortonormale fissata di L tensor R.

    La base si ottiene diagonalizzando la forma in modo esatto e
    riscalando le righe di 1/sqrt|d|, con le direzioni positive prima.
    La matrice P soddisfa P G P^T = diag(I_p, -I_q); un vettore di
    coordinate x nel reticolo ha coordinate y = x P^{-1} nella base.

    Parameters
    ----------
    lattice : `Lattice`
        Il reticolo, non degenere.
    """

    def __init__(self, lattice):
        self.lattice = lattice
        self.p, self.q = lattice.signature
        change, diag = congruence_diagonalize(lattice.gram)
        order = sorted(range(len(diag)), key=lambda k: (diag[k] < 0, k))
        self.frame = np.array([
            [float(c) / math.sqrt(abs(float(diag[k]))) for c in change[k]]
            for k in order
        ], dtype=float).reshape(lattice.rank, lattice.rank)
        self.frame_inverse = np.linalg.inv(self.frame)
        self.gram = np.array(lattice.gram, dtype=float).reshape(lattice.rank, lattice.rank)
        self.form = np.diag([1.0] * self.p + [-1.0] * self.q)

    @property
    def signature(self):
        return (self.p, self.q)

    def to_frame(self, coords):
        """
        Coordinate nella base ortonormale di vettori (righe) del reticolo.
        """
        coords = np.asarray(coords, dtype=float)
        if coords.ndim == 0 or coords.shape[-1] != self.lattice.rank:
            raise LatticeMismatch(
                'Rows of length %s do not fit "%s" of rank %d' % (
                    coords.shape[-1] if coords.ndim else 0, self.lattice.label, self.lattice.rank
                )
            )
        return coords @ self.frame_inverse

    def from_frame(self, coords):
        return np.asarray(coords, dtype=float) @ self.frame

    def isometry_in_frame(self, gamma):
        """
        Scrive un'isometria intera (convenzione per righe) nella base
        ortonormale: gamma_f = P gamma P^{-1}.
        """
        return self.frame @ np.asarray(gamma, dtype=float) @ self.frame_inverse

    def __eq__(self, rhs):
        return isinstance(rhs, PeriodDomain) and self.lattice == rhs.lattice

    def __hash__(self):
        return hash(self.lattice)

    def __repr__(self):
        return "%s(lattice=%s, signature=%s)" % (type(self).__name__, self.lattice.label, self.signature)
