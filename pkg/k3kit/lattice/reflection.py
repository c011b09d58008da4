from k3kit.exceptions import NotRoot
from k3kit.lattice.vector import LatticeVector, pair


def _check_root(delta):
    norm = delta.norm
    if norm != -2:
        raise NotRoot('Vector %s has norm %s, a root must have norm -2' % (list(delta.coords), norm))


def reflect(delta, v):
    """
    Riflessione nella radice delta: T(v) = v + <v, delta> delta.

    Parameters
    ----------
    delta : `LatticeVector`
        Una radice (norma -2).
    v : `LatticeVector`
        Il vettore da riflettere.

    Returns
    -------
    `LatticeVector`
        Il vettore riflesso, integrale se v lo e'.
    """
    _check_root(delta)
    return v + pair(v, delta) * delta


def reflection_matrix(delta):
    """
    Matrice intera della riflessione nella convenzione per righe,
    x -> x * R con R = I + (G delta) delta^T.
    """
    _check_root(delta)
    g_delta = delta.lattice.gram_times(delta.coords)
    n = delta.lattice.rank
    return [
        [int(i == j) + g_delta[i] * delta.coords[j] for j in range(n)]
        for i in range(n)
    ]


def apply_matrix(matrix, v):
    """
    Applica una matrice (convenzione per righe) a un vettore.
    """
    n = len(v.coords)
    coords = [sum(v.coords[i] * matrix[i][j] for i in range(n)) for j in range(n)]
    return LatticeVector(v.lattice, coords)


def is_isometry(matrix, lattice):
    """
    Verifica esatta di M * G * M^T = G.

    Parameters
    ----------
    matrix : `list[list[int]]`
        La matrice nella convenzione per righe.
    lattice : `Lattice`
        Il reticolo di cui preservare la forma.

    Returns
    -------
    `boolean`
        True se la matrice preserva la forma.
    """
    n = lattice.rank
    if len(matrix) != n or any(len(row) != n for row in matrix):
        return False
    images = [lattice.gram_times(row) for row in matrix]
    for i in range(n):
        for j in range(i, n):
            value = sum(matrix[i][k] * images[j][k] for k in range(n))
            if value != lattice.gram[i][j]:
                return False
    return True
