import pytest

from k3kit.exceptions import NotRoot
from k3kit.lattice import LatticeVector, is_isometry, make_lattice
from k3kit.orbit import BlockAutomorphism, LiteralTransvection, Reflection, SignFlip, Transvection
from k3kit.orbit.generators import generator_from_json_dict


LATTICE = make_lattice('U^2+E8(-1)')


def _vector(coords):
    return LatticeVector(LATTICE, coords)


def _lam():
    # radice semplice di E8(-1) piu' un vettore del secondo U
    return _vector([0, 0, 1, 2, 1, 0, 0, 0, 0, 0, 0, 0])


@pytest.mark.parametrize(
    "generator",
    [
        Reflection(_vector([1, -1] + [0] * 10)),
        Reflection(_vector([0, 0, 0, 0, 1] + [0] * 7)),
        Transvection(_lam(), 0),
        Transvection(_vector([0, 0, 1, -1] + [0] * 8), 0),
        BlockAutomorphism('swap:0:2'),
        BlockAutomorphism('flip:2'),
        SignFlip(),
    ]
)
def test_generators_are_isometries(generator):
    """
    """
    assert is_isometry(generator.matrix(LATTICE), LATTICE)
    x = _vector([3, -1, 2, 5, 0, 1, -2, 0, 0, 1, 0, 4])
    assert generator.inverse().apply(generator.apply(x)) == x
    assert generator.apply(x).norm == x.norm


def test_transvection_fixes_isotropic_vector():
    """
    """
    g = Transvection(_lam(), 0)
    f2 = LATTICE.basis_vector(1)
    assert g.apply(f2) == f2
    f1 = LATTICE.basis_vector(0)
    image = g.apply(f1)
    assert image.norm == 0
    assert image.coords[:2] == (1, -1)


def test_literal_transvection_is_not_isometry():
    """
    """
    g = LiteralTransvection(_lam(), 0)
    assert not is_isometry(g.matrix(LATTICE), LATTICE)
    assert g.apply(LATTICE.basis_vector(0)).norm != 0


def test_transvection_needs_vector_off_block():
    """
    """
    with pytest.raises(ValueError):
        Transvection(_vector([1, 0] + [0] * 10), 0)


def test_reflection_needs_root():
    """
    """
    with pytest.raises(NotRoot):
        Reflection(_vector([1, 1] + [0] * 10))


def test_block_automorphism_names():
    """
    """
    with pytest.raises(ValueError):
        BlockAutomorphism('rotate:0')


@pytest.mark.parametrize(
    "generator",
    [
        Reflection(_vector([1, -1] + [0] * 10)),
        Transvection(_lam(), 0),
        BlockAutomorphism('swap:0:2'),
        SignFlip(),
    ]
)
def test_generator_json_dict(generator):
    """
    """
    assert generator_from_json_dict(generator.to_json_dict(), LATTICE) == generator
