"""
Algebra lineare esatta su interi e razionali.

Le routine lavorano su liste di liste di `int` o `Fraction`; per
determinanti e sistemi lineari si appoggiano a sympy, che opera su
razionali senza perdita di precisione.
"""
from fractions import Fraction
import math

import sympy


def to_fraction(value):
    """
    Converte un valore scalare in `Fraction`. Accetta interi,
    frazioni, stringhe nel formato "p/q" e float (convertiti in modo esatto).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError('Boolean "%s" is not a rational number' % value)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


def normalise(value):
    """
    Riporta una `Fraction` con denominatore 1 a un `int`.
    """
    value = to_fraction(value)
    if value.denominator == 1:
        return value.numerator
    return value


def _to_sympy(matrix):
    return sympy.Matrix([
        [sympy.Rational(to_fraction(x).numerator, to_fraction(x).denominator) for x in row]
        for row in matrix
    ])


def determinant(matrix):
    """
    Determinante esatto di una matrice quadrata razionale.

    Parameters
    ----------
    matrix : `list[list]`
        La matrice, come liste di righe.

    Returns
    -------
    `int` o `Fraction`
        Il determinante.
    """
    if len(matrix) == 0:
        return 1
    return normalise(_to_sympy(matrix).det(method='bareiss'))


def inverse(matrix):
    """
    Inversa esatta di una matrice quadrata razionale invertibile.
    """
    inv = _to_sympy(matrix).inv()
    return [[normalise(inv[i, j]) for j in range(inv.cols)] for i in range(inv.rows)]


def solve_left(rows, target):
    """
    Risolve x * rows = target su Q. Restituisce None
    se il sistema non ha soluzione.

    Parameters
    ----------
    rows : `list[list]`
        Le k righe (vettori generatori) di lunghezza r.
    target : `list`
        Il vettore di lunghezza r da esprimere.

    Returns
    -------
    `list[Fraction]` o None
        I coefficienti della combinazione lineare.
    """
    if len(rows) == 0:
        return [] if all(to_fraction(t) == 0 for t in target) else None
    system = _to_sympy(rows).T
    rhs = _to_sympy([[t] for t in target])
    try:
        solution, params = system.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    if params.shape[0] > 0:
        solution = solution.subs({p: 0 for p in params})
    return [normalise(solution[i, 0]) for i in range(solution.rows)]


def mat_mul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def transpose(a):
    return [list(col) for col in zip(*a)]


def ldl_decomposition(matrix):
    """
    Decomposizione LDL^T esatta di una matrice simmetrica
    definita positiva.

    Parameters
    ----------
    matrix : `list[list]`
        Matrice simmetrica definita positiva a coefficienti razionali.

    Returns
    -------
    `tuple`
        (L, D) con L unitriangolare inferiore e D lista della diagonale,
        tali che matrix = L diag(D) L^T.
    """
    n = len(matrix)
    a = [[to_fraction(x) for x in row] for row in matrix]
    low = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    diag = [Fraction(0)] * n
    for j in range(n):
        d = a[j][j] - sum(low[j][k] * low[j][k] * diag[k] for k in range(j))
        if d <= 0:
            raise ValueError('Matrix is not positive definite (pivot %s at %d)' % (d, j))
        diag[j] = d
        for i in range(j + 1, n):
            s = a[i][j] - sum(low[i][k] * low[j][k] * diag[k] for k in range(j))
            low[i][j] = s / d
    return low, diag


def congruence_diagonalize(gram):
    """
    Diagonalizzazione per congruenza su Q di una forma simmetrica.

    Quando un pivot e' nullo si scambia con un indice successivo a
    diagonale non nulla, oppure si sostituisce b_i con b_i + b_j.

    Parameters
    ----------
    gram : `list[list]`
        La matrice di Gram simmetrica.

    Returns
    -------
    `tuple`
        (C, D) con C razionale invertibile e C * gram * C^T = diag(D).
    """
    n = len(gram)
    a = [[to_fraction(x) for x in row] for row in gram]
    c = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        c[i], c[j] = c[j], c[i]

    def add_to(i, j):
        # b_i <- b_i + b_j
        a[i] = [x + y for x, y in zip(a[i], a[j])]
        for row in a:
            row[i] = row[i] + row[j]
        c[i] = [x + y for x, y in zip(c[i], c[j])]

    for i in range(n):
        if a[i][i] == 0:
            swap_with = next((j for j in range(i + 1, n) if a[j][j] != 0), None)
            if swap_with is not None:
                swap(i, swap_with)
            else:
                partner = next((j for j in range(i + 1, n) if a[i][j] != 0), None)
                if partner is None:
                    continue
                add_to(i, partner)
        pivot = a[i][i]
        for j in range(i + 1, n):
            if a[j][i] == 0:
                continue
            f = a[j][i] / pivot
            a[j] = [x - f * y for x, y in zip(a[j], a[i])]
            for row in a:
                row[j] = row[j] - f * row[i]
            c[j] = [x - f * y for x, y in zip(c[j], c[i])]
    return c, [a[i][i] for i in range(n)]


def signature_of(gram):
    """
    Restituisce la segnatura (p, q) di una forma non degenere.
    """
    _, diag = congruence_diagonalize(gram)
    if any(d == 0 for d in diag):
        raise ValueError('Gram matrix is degenerate')
    return (sum(1 for d in diag if d > 0), sum(1 for d in diag if d < 0))


def extended_gcd_combination(values):
    """
    Trova interi y con sum(y_i * values_i) = gcd(values).

    Returns
    -------
    `tuple`
        (g, y) con g >= 0 il massimo comun divisore.
    """
    g = 0
    coeffs = [0] * len(values)
    for idx, v in enumerate(values):
        if v == 0:
            continue
        if g == 0:
            g = abs(v)
            coeffs[idx] = 1 if v > 0 else -1
            continue
        # x * g + y * v = gcd(g, v)
        old_r, r = g, v
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r != 0:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        if old_r < 0:
            old_r, old_s, old_t = -old_r, -old_s, -old_t
        coeffs = [old_s * x for x in coeffs]
        coeffs[idx] = old_t
        g = old_r
    return g, coeffs


def integer_kernel(rows, size=None):
    """
    Base su Z del nucleo intero di una matrice intera.

    Parameters
    ----------
    rows : `list[list[int]]`
        Le righe della matrice M (k x r).
    size : `int`, optional
        Il numero di colonne r, necessario quando k = 0.

    Returns
    -------
    `list[list[int]]`
        Vettori x in Z^r, base del reticolo {x : M x = 0}.
    """
    r = size if size is not None else len(rows[0])
    a = [list(map(int, row)) for row in rows]
    # colonne di u = trasformazione unimodulare accumulata
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    free = list(range(r))

    def col_sub(target, source, q):
        for row in a:
            row[target] -= q * row[source]
        for row in u:
            row[target] -= q * row[source]

    for row in a:
        while True:
            nonzero = [c for c in free if row[c] != 0]
            if len(nonzero) <= 1:
                break
            p = min(nonzero, key=lambda c: abs(row[c]))
            for c in nonzero:
                if c != p:
                    col_sub(c, p, row[c] // row[p])
        nonzero = [c for c in free if row[c] != 0]
        if nonzero:
            free.remove(nonzero[0])
    return [[u[i][c] for i in range(r)] for c in free]


def primitive_part(coords):
    """
    Divide un vettore intero per il gcd delle sue coordinate.
    """
    g = 0
    for x in coords:
        g = math.gcd(g, int(x))
    if g == 0:
        return list(coords)
    return [int(x) // g for x in coords]
