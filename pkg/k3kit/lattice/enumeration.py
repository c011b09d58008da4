from fractions import Fraction
import itertools
import logging
import math
from multiprocessing import Pool

from k3kit import settings
from k3kit.exceptions import BadConstraint, UnboundedConstraint
from k3kit.lattice.exact import inverse, ldl_decomposition, signature_of, to_fraction
from k3kit.lattice.vector import LatticeVector, pair


logger = logging.getLogger('Enumeration')


class RootConstraint(object):
    """
    Vincoli per l'enumerazione di vettori di norma fissata.

    Parameters
    ----------
    norm : `int`, optional
        La norma richiesta (negativa, -2 per le radici).
    pairings : `list[tuple]`, optional
        Coppie (vettore, valore intero) con <x, vettore> = valore.
    coordinate_bound : `int`, optional
        Limite |x_i| <= coordinate_bound sulle coordinate.
    """

    def __init__(self, norm=-2, pairings=None, coordinate_bound=None):
        if norm >= 0:
            raise BadConstraint('Constraint norm must be negative, got %s' % norm)
        if coordinate_bound is not None and coordinate_bound < 1:
            raise BadConstraint('Coordinate bound must be at least 1, got %s' % coordinate_bound)
        self.norm = int(norm)
        self.pairings = [(w, to_fraction(c)) for w, c in (pairings or [])]
        self.coordinate_bound = coordinate_bound

    @property
    def is_negation_symmetric(self):
        return all(c == 0 for _, c in self.pairings)

    def accepts(self, v):
        if v.norm != self.norm:
            return False
        if any(pair(v, w) != c for w, c in self.pairings):
            return False
        if self.coordinate_bound is not None and any(abs(c) > self.coordinate_bound for c in v.coords):
            return False
        return True

    def __repr__(self):
        return "%s(norm=%s, pairings=%s, coordinate_bound=%s)" % (
            type(self).__name__, self.norm, len(self.pairings), self.coordinate_bound
        )


def _integer_range(center, radius_sq):
    """
    Interi x con (x - center)^2 <= radius_sq, in modo esatto.
    """
    if radius_sq < 0:
        return range(0)
    s = math.sqrt(float(radius_sq))
    c = float(center)
    lo = math.floor(c - s) - 1
    hi = math.ceil(c + s) + 1
    while lo <= hi and (lo - center) ** 2 > radius_sq:
        lo += 1
    while hi >= lo and (hi - center) ** 2 > radius_sq:
        hi -= 1
    return range(lo, hi + 1)


class FinckePohst(object):
    """
    Enumerazione dei vettori interi x con Q(x) <= bound per una forma
    definita positiva Q, tramite branch-and-bound sulla decomposizione
    triangolare esatta Q(x) = sum_k d_k (x_k + sum_{i>k} l_ik x_i)^2.

    Parameters
    ----------
    matrix : `list[list]`
        La matrice razionale definita positiva della forma.
    """

    def __init__(self, matrix):
        self.matrix = [[to_fraction(x) for x in row] for row in matrix]
        self.rank = len(self.matrix)
        self.low, self.diag = ldl_decomposition(self.matrix)
        # per ogni k le coppie (i, l_ik) con i > k e l_ik != 0
        self._links = [
            [(i, self.low[i][k]) for i in range(k + 1, self.rank) if self.low[i][k] != 0]
            for k in range(self.rank)
        ]

    def top_range(self, bound):
        k = self.rank - 1
        return list(_integer_range(Fraction(0), to_fraction(bound) / self.diag[k]))

    def enumerate(self, bound, shell=False, top_values=None):
        """
        Restituisce le tuple intere con Q(x) <= bound, o Q(x) = bound
        se shell e' True.

        Parameters
        ----------
        bound : `int` o `Fraction`
            Il raggio al quadrato dell'ellissoide.
        shell : `boolean`, optional
            Se True conserva solo i punti sul bordo.
        top_values : `list[int]`, optional
            Valori ammessi per l'ultima coordinata (per la
            suddivisione tra processi).

        Returns
        -------
        `list[tuple]`
            I punti trovati.
        """
        bound = to_fraction(bound)
        if self.rank == 0:
            return [()] if (bound == 0 or not shell) and bound >= 0 else []
        results = []
        x = [0] * self.rank
        low_links = self._links
        diag = self.diag

        def recurse(k, remaining, values=None):
            center = -sum((l_ik * x[i] for i, l_ik in low_links[k]), Fraction(0))
            d = diag[k]
            candidates = values if values is not None else _integer_range(center, remaining / d)
            for v in candidates:
                rest = remaining - d * (v - center) ** 2
                if rest < 0:
                    continue
                x[k] = v
                if k == 0:
                    if not shell or rest == 0:
                        results.append(tuple(x))
                else:
                    recurse(k - 1, rest)
            x[k] = 0

        recurse(self.rank - 1, bound, top_values)
        return results


def _enumerate_branch(args):
    matrix, bound, shell, top_values = args
    return FinckePohst(matrix).enumerate(bound, shell=shell, top_values=top_values)


def short_vectors(matrix, bound, shell=False, workers=1):
    """
    Enumerazione Fincke-Pohst, eventualmente suddivisa tra processi
    sui valori dell'ultima coordinata. Il risultato e' ordinato.
    """
    fp = FinckePohst(matrix)
    top = fp.top_range(bound)
    if workers is None or workers <= 1 or len(top) <= 1:
        points = fp.enumerate(bound, shell=shell)
    else:
        chunks = [top[i::workers] for i in range(workers) if top[i::workers]]
        with Pool(processes=len(chunks)) as pool:
            parts = pool.map(_enumerate_branch, [(fp.matrix, bound, shell, chunk) for chunk in chunks])
        points = [p for part in parts for p in part]
    return sorted(points)


def _negated_gram(lattice, indices):
    return [[-lattice.gram[i][j] for j in indices] for i in indices]


def _finalise(lattice, candidates, constraint):
    seen = set()
    vectors = []
    for coords in candidates:
        if coords in seen:
            continue
        seen.add(coords)
        v = LatticeVector(lattice, coords)
        if constraint.accepts(v):
            vectors.append(v)
    vectors.sort(key=lambda v: v.coords)
    return vectors


def _definite_candidates(lattice, constraint, workers):
    indices = list(range(lattice.rank))
    return short_vectors(_negated_gram(lattice, indices), -constraint.norm, shell=True, workers=workers)


def _fiber_block(lattice, constraint):
    """
    Trova un blocco U e un vincolo con vettore positivo supportato
    sul blocco, se esistono.
    """
    if not lattice.is_hyperbolic:
        return None
    for block in lattice.hyperbolic_summands():
        i, j = block.offset, block.offset + 1
        for w, c in constraint.pairings:
            if not w.integral or w.norm <= 0:
                continue
            if all(x == 0 for k, x in enumerate(w.coords) if k not in (i, j)):
                return block, w, c
    return None


def hyperbolic_pairs(w_a, w_b, c, norm):
    """
    Coppie intere (a, b) con a*w_b + b*w_a = c e 2ab >= norm,
    per w_a, w_b dello stesso segno.
    """
    if w_a < 0:
        w_a, w_b, c = -w_a, -w_b, -c
    c = to_fraction(c)
    disc = c * c - 2 * norm * w_a * w_b
    s = math.sqrt(float(disc))
    lo = math.floor((float(c) - s) / (2 * w_b)) - 1
    hi = math.ceil((float(c) + s) / (2 * w_b)) + 1
    pairs = []
    for a in range(lo, hi + 1):
        b = (c - a * w_b) / w_a
        if b.denominator != 1:
            continue
        b = b.numerator
        if 2 * a * b >= norm:
            pairs.append((a, b))
    return pairs


def _fiber_candidates(lattice, constraint, block, w, c, workers):
    i, j = block.offset, block.offset + 1
    fiber = [k for k in range(lattice.rank) if k not in (i, j)]
    fiber_form = _negated_gram(lattice, fiber)
    # w = w_a u1 + w_b u2 e <(a, b), w> = a w_b + b w_a
    pairs = hyperbolic_pairs(w.coords[i], w.coords[j], c, constraint.norm)
    shells = {}
    candidates = []
    for a, b in pairs:
        target = 2 * a * b - constraint.norm
        if target not in shells:
            if fiber:
                shells[target] = short_vectors(fiber_form, target, shell=True, workers=workers)
            else:
                shells[target] = [()] if target == 0 else []
        for x in shells[target]:
            coords = [0] * lattice.rank
            coords[i], coords[j] = a, b
            for k, value in zip(fiber, x):
                coords[k] = value
            candidates.append(tuple(coords))
    logger.info(
        'Fiber enumeration on "%s": %d hyperbolic pairs, %d candidates' % (
            lattice.label, len(pairs), len(candidates)
        )
    )
    return candidates


def _majorant_candidates(lattice, constraint, workers):
    """
    Se i vettori dei vincoli generano un p-piano positivo W,
    la forma 2 <x_W, x_W> - <x, x> e' definita positiva e
    le soluzioni stanno sul suo guscio 2 c^T G_W^-1 c - norm.
    """
    p = lattice.signature[0]
    vectors = [w for w, _ in constraint.pairings]
    values = [c for _, c in constraint.pairings]
    if len(vectors) == 0:
        return None
    w_gram = [[pair(u, v) for v in vectors] for u in vectors]
    try:
        if signature_of(w_gram) != (len(vectors), 0) or len(vectors) != p:
            return None
    except ValueError:
        return None
    w_inv = inverse(w_gram)
    rows = [lattice.gram_times(v.coords) for v in vectors]
    n = lattice.rank
    k = len(vectors)
    matrix = [
        [
            2 * sum(rows[a][r] * w_inv[a][b] * rows[b][s] for a in range(k) for b in range(k))
            - lattice.gram[r][s]
            for s in range(n)
        ]
        for r in range(n)
    ]
    bound = 2 * sum(values[a] * w_inv[a][b] * values[b] for a in range(k) for b in range(k)) - constraint.norm
    return short_vectors(matrix, bound, shell=True, workers=workers)


def _hyperbolic_plane_candidates(constraint):
    half = Fraction(constraint.norm, 2)
    if half.denominator != 1:
        return []
    half = half.numerator
    candidates = []
    for d in range(1, abs(half) + 1):
        if half % d == 0:
            candidates.extend([(d, half // d), (-d, -(half // d))])
    return candidates


def _box_candidates(lattice, bound):
    return itertools.product(range(-bound, bound + 1), repeat=lattice.rank)


def enumerate_roots(lattice, constraint=None, workers=None):
    """
    Enumera i vettori di norma fissata che soddisfano i vincoli.

    Per reticoli definiti negativi usa Fincke-Pohst su -gram; per
    reticoli iperbolici con un vincolo positivo sul blocco U fissa le
    coordinate iperboliche e enumera la fibra definita; con vincoli che
    generano un p-piano positivo usa la forma maggiorante; altrimenti
    richiede un limite esplicito sulle coordinate.

    Parameters
    ----------
    lattice : `Lattice`
        Il reticolo.
    constraint : `RootConstraint`, optional
        I vincoli. Default: radici (norma -2) senza altre condizioni.
    workers : `int`, optional
        Numero di processi per l'enumerazione. Default 1.

    Returns
    -------
    `list[LatticeVector]`
        I vettori trovati, senza duplicati e in ordine lessicografico.
    """
    if constraint is None:
        constraint = RootConstraint()
    workers = workers or 1

    if lattice.is_negative_definite:
        candidates = _definite_candidates(lattice, constraint, workers)
        route = 'definite'
    else:
        candidates = None
        fiber = _fiber_block(lattice, constraint)
        if fiber is not None:
            candidates = _fiber_candidates(lattice, constraint, *fiber, workers=workers)
            route = 'fiber'
        if candidates is None:
            candidates = _majorant_candidates(lattice, constraint, workers)
            route = 'majorant'
        if candidates is None and lattice.rank == 2 and lattice.gram == ((0, 1), (1, 0)):
            candidates = _hyperbolic_plane_candidates(constraint)
            route = 'hyperbolic-plane'
        if candidates is None and constraint.coordinate_bound is not None:
            candidates = _box_candidates(lattice, constraint.coordinate_bound)
            route = 'box'
        if candidates is None:
            raise UnboundedConstraint(
                'Constraint %r does not bound the solutions in lattice "%s" of signature %s; '
                'add a positive pairing condition or a coordinate bound' % (
                    constraint, lattice.label, lattice.signature
                )
            )

    vectors = _finalise(lattice, candidates, constraint)
    logger.info('Enumerated %d vectors of norm %d in "%s" (%s route)' % (
        len(vectors), constraint.norm, lattice.label, route
    ))
    if settings.PRINT_EVENTS:
        print('Enumeration "%s": %d vectors' % (lattice.label, len(vectors)))
    return vectors
