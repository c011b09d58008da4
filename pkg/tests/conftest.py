import numpy as np
import pytest

from k3kit import settings
from k3kit.lattice import make_lattice
from k3kit.orbit import random_isometry_word, random_root


class Helpers:
    @staticmethod
    def rng(offset=0):
        """
        Generatore pseudo-casuale con il seme di test, eventualmente
        spostato per ottenere flussi indipendenti.
        """
        return np.random.default_rng(settings.TEST.SEED + offset)

    @staticmethod
    def random_roots(descriptor, count, length=12, seed_offset=0):
        """
        Radici casuali ottenute da f1 - f2 con parole casuali di generatori.

        Parametri
        ----------
        descriptor : `str`
            Il descrittore del reticolo.
        count : `int`
            Il numero di radici.
        length : `int`
            La lunghezza delle parole.
        """
        lattice = make_lattice(descriptor)
        rng = Helpers.rng(seed_offset)
        return [random_root(lattice, length, rng) for _ in range(count)]

    @staticmethod
    def random_isometry_matrix(descriptor, length=8, seed_offset=0):
        """
        Matrice intera (convenzione per righe) di una isometria casuale.
        """
        lattice = make_lattice(descriptor)
        return random_isometry_word(lattice, length, Helpers.rng(seed_offset)).matrix()

    @staticmethod
    def random_vector(lattice, rng, low=-3, high=4):
        return lattice.vector([int(c) for c in rng.integers(low, high, size=lattice.rank)])


@pytest.fixture
def helpers():
    return Helpers
