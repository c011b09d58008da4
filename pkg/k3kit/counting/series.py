from fractions import Fraction

from k3kit.exceptions import NegativeTruncation
from k3kit.lattice.exact import normalise, to_fraction


class PowerSeries(object):
    """
    Serie formale troncata q^offset * sum_{n=0}^{order} c_n q^n
    con coefficienti interi o razionali esatti.

    Parameters
    ----------
    coeffs : `list`
        I coefficienti c_0, c_1, ...
    offset : `Fraction`, optional
        L'esponente iniziale. Default 0.
    order : `int`, optional
        L'ordine di troncamento N. Default: len(coeffs) - 1.
    """

    def __init__(self, coeffs, offset=0, order=None):
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise NegativeTruncation('Truncation order must be non-negative, got %d' % order)
        coeffs = [normalise(c) for c in list(coeffs)[:order + 1]]
        coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.coeffs = coeffs
        self.offset = normalise(offset)
        self.order = order

    @classmethod
    def one(cls, order, offset=0):
        return cls([1], offset=offset, order=order)

    def __getitem__(self, n):
        return self.coeffs[n] if 0 <= n <= self.order else 0

    def __len__(self):
        return self.order + 1

    def _check_offset(self, rhs):
        if self.offset != rhs.offset:
            raise ValueError('Cannot add series with offsets %s and %s' % (self.offset, rhs.offset))

    def __add__(self, rhs):
        self._check_offset(rhs)
        order = min(self.order, rhs.order)
        return PowerSeries([self[n] + rhs[n] for n in range(order + 1)], self.offset, order)

    def __sub__(self, rhs):
        self._check_offset(rhs)
        order = min(self.order, rhs.order)
        return PowerSeries([self[n] - rhs[n] for n in range(order + 1)], self.offset, order)

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.offset, self.order)

    def __mul__(self, rhs):
        if not isinstance(rhs, PowerSeries):
            scalar = to_fraction(rhs)
            return PowerSeries([scalar * c for c in self.coeffs], self.offset, self.order)
        order = min(self.order, rhs.order)
        out = [0] * (order + 1)
        right = [(m, c) for m, c in enumerate(rhs.coeffs[:order + 1]) if c != 0]
        for n, a in enumerate(self.coeffs[:order + 1]):
            if a == 0:
                continue
            for m, b in right:
                if n + m > order:
                    break
                out[n + m] += a * b
        return PowerSeries(out, to_fraction(self.offset) + to_fraction(rhs.offset), order)

    __rmul__ = __mul__

    def multiply_binomial(self, n, exponent):
        """
        Moltiplica per (1 - q^n)^exponent, con exponent intero >= 0,
        sfruttando la sparsita' del binomio.
        """
        result = self
        if exponent == 0 or n > self.order:
            return result
        terms = [(0, 1)]
        c = 1
        for k in range(1, exponent + 1):
            if k * n > self.order:
                break
            c = -c * (exponent - k + 1) // k
            terms.append((k * n, c))
        out = [0] * (self.order + 1)
        for m, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for shift, b in terms:
                if m + shift > self.order:
                    break
                out[m + shift] += a * b
        return PowerSeries(out, self.offset, self.order)

    def inverse(self):
        """
        L'inverso moltiplicativo, se c_0 e' non nullo.
        """
        c0 = to_fraction(self.coeffs[0])
        if c0 == 0:
            raise ZeroDivisionError('Series with zero constant term has no inverse')
        out = [Fraction(0)] * (self.order + 1)
        out[0] = 1 / c0
        for n in range(1, self.order + 1):
            s = sum(self.coeffs[k] * out[n - k] for k in range(1, n + 1))
            out[n] = -s / c0
        return PowerSeries(out, -to_fraction(self.offset), self.order)

    def q_derivative(self):
        """
        L'operatore q d/dq, che moltiplica c_n per (offset + n).
        """
        off = to_fraction(self.offset)
        return PowerSeries([(off + n) * c for n, c in enumerate(self.coeffs)], self.offset, self.order)

    def log_derivative(self):
        """
        La derivata logaritmica q d/dq log f = (q f') / f, senza offset.
        """
        unit = PowerSeries(self.coeffs, 0, self.order)
        return PowerSeries((unit.q_derivative() * unit.inverse()).coeffs, 0, self.order) + \
            PowerSeries([self.offset], 0, self.order)

    def evaluate(self, q):
        """
        Valuta la serie troncata in q (reale o complesso, |q| < 1).
        """
        total = 0
        power = 1
        for c in self.coeffs:
            if c != 0:
                total += float(c) * power
            power *= q
        if self.offset != 0:
            total *= q ** float(self.offset)
        return total

    def to_pairs(self):
        """
        Coppie (esponente, coefficiente) dei termini non nulli.
        """
        off = to_fraction(self.offset)
        return [(normalise(off + n), c) for n, c in enumerate(self.coeffs) if c != 0]

    def __eq__(self, rhs):
        return (
            isinstance(rhs, PowerSeries) and self.offset == rhs.offset
            and self.order == rhs.order and self.coeffs == rhs.coeffs
        )

    def __hash__(self):
        return hash((self.offset, self.order, tuple(self.coeffs)))

    def __repr__(self):
        head = ', '.join(str(c) for c in self.coeffs[:8])
        return "%s(offset=%s, order=%s, coeffs=[%s%s])" % (
            type(self).__name__, self.offset, self.order, head, ', ...' if self.order >= 8 else ''
        )


def euler_product(order):
    """
    Il prodotto prod_{n=1}^{N} (1 - q^n) troncato all'ordine N,
    con offset 1/24 (il prefattore della eta di Dedekind).
    """
    if order < 0:
        raise NegativeTruncation('Truncation order must be non-negative, got %d' % order)
    series = PowerSeries.one(order, offset=Fraction(1, 24))
    for n in range(1, order + 1):
        series = series.multiply_binomial(n, 1)
    return series


def pentagonal_indices(order):
    """
    Gli interi m = k(3k - 1)/2 (k in Z) fino a order, con il segno (-1)^k.
    """
    signs = {0: 1}
    k = 1
    while k * (3 * k - 1) // 2 <= order:
        for m in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if m <= order:
                signs[m] = -1 if k % 2 else 1
        k += 1
    return signs


def divisor_sigma(k, m):
    """
    La somma delle potenze k-esime dei divisori di m.
    """
    total = 0
    d = 1
    while d * d <= m:
        if m % d == 0:
            total += d ** k
            if d * d != m:
                total += (m // d) ** k
        d += 1
    return total
