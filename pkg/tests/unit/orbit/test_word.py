import pytest

from k3kit.exceptions import NotIsometry
from k3kit.lattice import LatticeVector, apply_matrix, is_isometry, make_lattice
from k3kit.orbit import IsometryWord, LiteralTransvection, Reflection, SignFlip, Transvection, random_isometry_word


def test_word_apply_matrix_inverse(helpers):
    """
    """
    lattice = make_lattice('U^2+E8(-1)')
    word = random_isometry_word(lattice, 10, helpers.rng())
    assert len(word) == 10
    matrix = word.matrix()
    assert is_isometry(matrix, lattice)
    assert word.check_isometry()
    x = helpers.random_vector(lattice, helpers.rng(1))
    assert apply_matrix(matrix, x) == word.apply(x)
    assert word.inverse().apply(word.apply(x)) == x


def test_word_is_identity():
    """
    """
    lattice = make_lattice('U^2')
    word = IsometryWord(lattice)
    assert word.is_identity
    word.append(SignFlip())
    assert not word.is_identity
    copy = word.copy()
    copy.append(SignFlip())
    assert len(word) == 1 and len(copy) == 2


def test_word_rejects_literal_transvection():
    """
    """
    lattice = make_lattice('U^2+E8(-1)')
    lam = LatticeVector(lattice, [0, 0, 0, 0, 1] + [0] * 7)
    word = IsometryWord(lattice, [Transvection(lam, 0)])
    assert word.check_isometry()
    word.append(LiteralTransvection(lam, 0))
    with pytest.raises(NotIsometry):
        word.check_isometry()


def test_word_json_list():
    """
    """
    lattice = make_lattice('U^2')
    root = LatticeVector(lattice, [1, -1, 0, 0])
    word = IsometryWord(lattice, [Reflection(root), SignFlip()])
    restored = IsometryWord.from_json_list(word.to_json_list(), lattice)
    assert list(restored) == list(word)
