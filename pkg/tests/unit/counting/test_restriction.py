import math

import numpy as np
import pytest

from k3kit.counting import TubeLineProduct, count_roots_with_degree, restricted_profile
from k3kit.exceptions import NotPolarization, UnsupportedLattice
from k3kit.lattice import make_lattice
from k3kit.period import PeriodPoint, gram_det
from k3kit.spectral import k3_det_assembly


def _diagonal_polarization(lattice):
    return lattice.vector([1, 1] + [0] * (lattice.rank - 2))


@pytest.fixture(scope='module')
def e8_squared_pair():
    lattice = make_lattice('U+E8(-1)^2')
    l = _diagonal_polarization(lattice)
    ambient = count_roots_with_degree(lattice, l, 10)
    restricted = restricted_profile(lattice, l, range(10), 10, workers=1)
    return ambient, restricted


def test_restriction_to_u_e8(e8_squared_pair):
    """
    """
    ambient, restricted = e8_squared_pair
    assert restricted.lattice.label == 'U+E8(-1)'
    assert restricted.strategy == 'restriction'
    assert restricted.l.coords == (1, 1) + (0,) * 8
    assert restricted.a == ambient.a
    assert restricted.count(1) == 960
    # le sole radici di U + E8(-1) ortogonali a l
    assert len(restricted.walls) == 242


def test_restriction_against_enumeration():
    """
    """
    lattice = make_lattice('U+<-2>+<-4>')
    l = _diagonal_polarization(lattice)
    ambient = count_roots_with_degree(lattice, l, 10, strategy='enumerate', workers=1)
    restricted = restricted_profile(lattice, l, [0, 1], 10, workers=1)
    assert restricted.lattice.label == 'U'
    assert restricted.a == ambient.a
    assert len(restricted.walls) == 2


@pytest.mark.parametrize("t", [1.5, 2.0, 3.0])
def test_tube_line_values_match(e8_squared_pair, t):
    """
    """
    ambient, restricted = e8_squared_pair
    on_ambient = TubeLineProduct(ambient)
    on_sublattice = TubeLineProduct(restricted)
    assert on_sublattice.series_route(t) == pytest.approx(on_ambient.series_route(t), rel=1e-9)
    assert on_sublattice.counts_route(t) == pytest.approx(on_ambient.series_route(t), rel=1e-9)
    with pytest.raises(UnsupportedLattice):
        on_sublattice.root_route(t)


def test_assembly_with_restricted_product(e8_squared_pair):
    """
    """
    ambient, restricted = e8_squared_pair
    tau = np.zeros((3, 19))
    tau[0, 0], tau[1, 4], tau[2, 18] = 0.2, -0.1, 0.3
    point = PeriodPoint(tau)
    t = 2.0
    phi = TubeLineProduct(ambient).series_route(t)
    by_ambient = k3_det_assembly(point, phi)
    by_sublattice = k3_det_assembly(point, lambda p: TubeLineProduct(restricted).series_route(t))
    assert by_sublattice == pytest.approx(by_ambient, rel=1e-9)
    assert by_ambient == pytest.approx(gram_det(point) * math.exp(2 * phi), rel=1e-12)
    assert 0 < by_ambient < gram_det(point)


def test_restriction_errors():
    """
    """
    lattice = make_lattice('U+E8(-1)^2')
    l = _diagonal_polarization(lattice)
    with pytest.raises(UnsupportedLattice):
        restricted_profile(lattice, l, range(5), 3)
    outside = lattice.vector([2, 1] + [0] * 8 + [1] + [0] * 7)
    assert outside.norm == 2
    with pytest.raises(NotPolarization):
        restricted_profile(lattice, outside, range(10), 3)
    small = make_lattice('U+<-2>+<-4>')
    with pytest.raises(UnsupportedLattice):
        restricted_profile(small, _diagonal_polarization(small), [0, 1, 2], 3)
