import pytest

from k3kit.exceptions import NotRoot
from k3kit.lattice import LatticeVector, apply_matrix, is_isometry, make_lattice, reflect, reflection_matrix


def test_reflect_root_to_negative():
    """
    """
    lattice = make_lattice('U+E8(-1)')
    delta = lattice.basis_vector(2)
    assert reflect(delta, delta) == -delta


def test_reflect_fixes_orthogonal():
    """
    """
    lattice = make_lattice('U+<-2>')
    delta = LatticeVector(lattice, [0, 0, 1])
    v = LatticeVector(lattice, [3, -1, 0])
    assert reflect(delta, v) == v


def test_reflection_matrix_is_isometry():
    """
    """
    lattice = make_lattice('U^2+E8(-1)')
    delta = LatticeVector(lattice, [1, -1, 1, 0] + [0] * 8)
    assert delta.norm == -2
    matrix = reflection_matrix(delta)
    assert is_isometry(matrix, lattice)
    v = LatticeVector(lattice, [2, 5, -1, 3, 1, 0, 0, 0, 0, 0, 0, 4])
    assert apply_matrix(matrix, v) == reflect(delta, v)


def test_reflect_rejects_non_root():
    """
    """
    lattice = make_lattice('U')
    with pytest.raises(NotRoot):
        reflect(LatticeVector(lattice, [1, 1]), LatticeVector(lattice, [1, 0]))
    with pytest.raises(NotRoot):
        reflection_matrix(LatticeVector(lattice, [1, 0]))


def test_is_isometry_rejects_scaling():
    """
    """
    lattice = make_lattice('U')
    assert is_isometry([[1, 0], [0, 1]], lattice)
    assert is_isometry([[0, 1], [1, 0]], lattice)
    assert not is_isometry([[2, 0], [0, 1]], lattice)
    assert not is_isometry([[1, 0]], lattice)
