import pytest

from k3kit.counting import CountProfile, chamber_walls, count_roots_with_degree, divisor_sigma
from k3kit.exceptions import (
    LatticeMismatch, NegativeTruncation, NotHyperbolic, NotPolarization, NotPositiveNorm
)
from k3kit.lattice import make_lattice


def _polarization(lattice, head, tail=None):
    coords = list(head) + [0] * (lattice.rank - len(head))
    for k, c in (tail or {}).items():
        coords[k] = c
    return lattice.vector(coords)


@pytest.fixture
def u_e8():
    return make_lattice('U+E8(-1)')


def test_counts_on_u_e8(u_e8):
    """
    """
    profile = count_roots_with_degree(u_e8, _polarization(u_e8, [1, 1]), 3)
    assert profile.strategy == 'theta'
    assert profile.a == [480, 2640, 13920]
    assert profile.count(1) == 480
    assert profile.count(4) == 0
    assert len(profile.walls) == 242
    assert all(w.norm == -2 for w in profile.walls)


def test_counts_on_u_e8_squared():
    """
    """
    lattice = make_lattice('U+E8(-1)^2')
    profile = count_roots_with_degree(lattice, _polarization(lattice, [1, 1]), 1)
    assert profile.a == [960]
    assert len(profile.walls) == 482


def test_strategies_agree(u_e8):
    """
    """
    l = _polarization(u_e8, [1, 1])
    by_theta = count_roots_with_degree(u_e8, l, 2, strategy='theta')
    by_enumeration = count_roots_with_degree(u_e8, l, 2, strategy='enumerate', workers=1)
    assert by_enumeration.strategy == 'enumerate'
    assert by_theta == by_enumeration


def test_strategies_agree_off_diagonal(u_e8):
    """
    """
    l = _polarization(u_e8, [2, 1])
    by_theta = count_roots_with_degree(u_e8, l, 2, strategy='theta')
    by_enumeration = count_roots_with_degree(u_e8, l, 2, strategy='enumerate', workers=1)
    # grado 1: (a, b) = (1, 0), (-1, 1); grado 2: (0, 1), (2, 0)
    assert by_theta.a == [1 + 240, 240 + 240]
    assert by_theta == by_enumeration


def _diagonal_counts(theta, order):
    # l = e1 + e2: a + b = n con ab >= 0
    return [sum(theta[1 + a * (n - a)] for a in range(n + 1)) for n in range(1, order + 1)]


def test_theta_route_matches_eisenstein_series():
    """
    """
    top = 26
    e4 = [1] + [240 * divisor_sigma(3, m) for m in range(1, top + 1)]
    e4_squared = [sum(e4[k] * e4[m - k] for k in range(m + 1)) for m in range(top + 1)]
    assert e4_squared == [1] + [480 * divisor_sigma(7, m) for m in range(1, top + 1)]
    for descriptor, theta in (('U+E8(-1)', e4), ('U+E8(-1)^2', e4_squared)):
        lattice = make_lattice(descriptor)
        profile = count_roots_with_degree(lattice, _polarization(lattice, [1, 1]), 10, strategy='theta')
        assert profile.a == _diagonal_counts(theta, 10)


@pytest.mark.parametrize("head", [[1, 1], [2, 1], [3, 1]])
def test_strategies_agree_to_degree_ten(head):
    """
    """
    lattice = make_lattice('U+<-2>^2+<-4>')
    l = _polarization(lattice, head)
    by_theta = count_roots_with_degree(lattice, l, 10, strategy='theta')
    by_enumeration = count_roots_with_degree(lattice, l, 10, strategy='enumerate', workers=1)
    assert by_theta.a == by_enumeration.a
    assert len(by_theta.walls) == len(by_enumeration.walls)


def test_auto_falls_back_to_enumeration():
    """
    """
    lattice = make_lattice('U+<-2>')
    l = _polarization(lattice, [2, 1, 1])
    profile = count_roots_with_degree(lattice, l, 2, workers=1)
    assert profile.strategy == 'enumerate'
    with pytest.raises(NotHyperbolic):
        count_roots_with_degree(lattice, l, 2, strategy='theta')


def test_json_dict(u_e8):
    """
    """
    doc = count_roots_with_degree(u_e8, _polarization(u_e8, [1, 1]), 1).to_json_dict()
    assert doc["lattice"] == 'U+E8(-1)'
    assert doc["a"] == [480]
    assert len(doc["walls"]) == 242
    assert doc["strategy"] == 'theta'


@pytest.mark.parametrize(
    "descriptor,head,error",
    [
        ('U+E8(-1)', [1, 0], NotPolarization),
        ('U+E8(-1)', [1, -1], NotPolarization),
        ('U^2+E8(-1)', [1, 1], NotHyperbolic),
    ]
)
def test_invalid_polarizations(descriptor, head, error):
    """
    """
    lattice = make_lattice(descriptor)
    with pytest.raises(error):
        count_roots_with_degree(lattice, _polarization(lattice, head), 2)


def test_polarization_from_other_lattice(u_e8):
    """
    """
    other = make_lattice('U+E8(-1)^2')
    with pytest.raises(LatticeMismatch):
        count_roots_with_degree(u_e8, _polarization(other, [1, 1]), 2)


def test_bad_order_and_strategy(u_e8):
    """
    """
    l = _polarization(u_e8, [1, 1])
    with pytest.raises(NegativeTruncation):
        count_roots_with_degree(u_e8, l, -1)
    with pytest.raises(ValueError):
        count_roots_with_degree(u_e8, l, 2, strategy='guess')


def test_profile_equality(u_e8):
    """
    """
    l = _polarization(u_e8, [1, 1])
    assert CountProfile(u_e8, l, [1, 2], []) == CountProfile(u_e8, l, [1, 2], [])
    assert CountProfile(u_e8, l, [1, 2], []) != CountProfile(u_e8, l, [1, 3], [])


def test_chamber_walls(u_e8):
    """
    """
    l = _polarization(u_e8, [1, 1])
    assert chamber_walls(u_e8, l, 3, positive=l, workers=1) == []
    # v = 2e + 2f + alpha con alpha radice di E8(-1)
    v = _polarization(u_e8, [2, 2, 1])
    walls = chamber_walls(u_e8, v, 3, positive=l, workers=1)
    assert [list(w.coords[:3]) for w in walls] == [[0, 1, 1], [1, 0, 1]]
    assert all(w.coords[3:] == (0,) * 7 for w in walls)


def test_chamber_walls_need_positive_vector(u_e8):
    """
    """
    with pytest.raises(NotPositiveNorm):
        chamber_walls(u_e8, _polarization(u_e8, [1, 0]), 2)
