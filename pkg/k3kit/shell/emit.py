from abc import ABCMeta, abstractmethod
from fractions import Fraction
import json
import os

import pandas as pd

from k3kit import settings
from k3kit.exceptions import UnsupportedFormat
from k3kit.lattice.lattice import Lattice
from k3kit.lattice.vector import ComplexVector, LatticeVector, coord_to_json, format_coords
from k3kit.orbit.certificate import ReductionCertificate
from k3kit.orbit.discriminant import ComponentResult
from k3kit.period.point import PeriodPoint, gram_det
from k3kit.mirror.marked import MarkedMSurfaceData
from k3kit.counting.profile import CountProfile
from k3kit.counting.products import log_derivative_series
from k3kit.counting.series import PowerSeries
from k3kit.spectral.torus import DetReport
from k3kit.utils.console import status_line


def real(x):
    """
    Arrotonda un reale a REAL_DIGITS cifre significative.
    """
    return float('%.*g' % (settings.DEFAULT.REAL_DIGITS, x))


def format_real(x):
    return '%.*g' % (settings.DEFAULT.REAL_DIGITS, x)


def _json_value(value):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return coord_to_json(value)
    if isinstance(value, float):
        return real(value)
    if isinstance(value, complex):
        return {"real": real(value.real), "imag": real(value.imag)}
    if isinstance(value, dict):
        return {str(k): _json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    if hasattr(value, 'item'):
        return _json_value(value.item())
    return str(value)


def _text_value(value):
    if isinstance(value, float):
        return format_real(value)
    if isinstance(value, complex):
        return '%s%+.*gi' % (format_real(value.real), settings.DEFAULT.REAL_DIGITS, value.imag)
    if isinstance(value, Fraction):
        return str(coord_to_json(value))
    if isinstance(value, (list, tuple)):
        return format_coords(value) if all(isinstance(v, (int, Fraction)) for v in value) else str(list(value))
    return str(value)


def _aligned(pairs):
    width = max((len(k) for k, _ in pairs), default=0)
    return '\n'.join('%s  %s' % (k.ljust(width), _text_value(v)) for k, v in pairs) + '\n'


class Report(object):
    """
    Report e' una classe astratta che fornisce un'interfaccia per la
    serializzazione dei risultati dei moduli nei formati testo, JSON
    e CSV. Le sottoclassi che non hanno una forma tabellare non
    implementano to_frame() e sollevano UnsupportedFormat.
    """

    __metaclass__ = ABCMeta

    kind = None

    def __init__(self, result):
        self.result = result

    @abstractmethod
    def to_text(self):
        raise NotImplementedError("Should implement to_text()")

    @abstractmethod
    def to_document(self):
        raise NotImplementedError("Should implement to_document()")

    def to_frame(self):
        raise UnsupportedFormat('Result of kind "%s" has no csv form (text/json only)' % self.kind)

    def to_json(self):
        return json.dumps(_json_value(self.to_document()), sort_keys=True, indent=2) + '\n'

    def to_csv(self):
        return self.to_frame().to_csv(
            index=False, lineterminator='\n', float_format='%%.%dg' % settings.DEFAULT.REAL_DIGITS
        )

    def render(self, fmt):
        if fmt == 'text':
            return self.to_text()
        if fmt == 'json':
            return self.to_json()
        if fmt == 'csv':
            return self.to_csv()
        raise UnsupportedFormat('Unknown output format "%s", expected one of %s' % (
            fmt, ', '.join(settings.SUPPORTED['FORMATS'])
        ))


class LatticeReport(Report):
    kind = 'lattice'

    def to_text(self):
        lat = self.result
        head = _aligned([
            ('lattice', lat.label),
            ('rank', lat.rank),
            ('signature', '(%d, %d)' % lat.signature),
            ('determinant', lat.determinant),
            ('unimodular', lat.is_unimodular)
        ])
        return head + lat.to_text()

    def to_document(self):
        return self.result.to_json_dict()

    def to_frame(self):
        lat = self.result
        return pd.DataFrame([list(row) for row in lat.gram], columns=['c%d' % j for j in range(lat.rank)])


class VectorListReport(Report):
    """
    Un elenco di vettori dello stesso reticolo, in ordine lessicografico.
    """

    kind = 'vectors'

    def __init__(self, result):
        super().__init__(sorted(result))

    @property
    def lattice_label(self):
        return self.result[0].lattice.label if self.result else ''

    def to_text(self):
        lines = ['# %d vectors in %s' % (len(self.result), self.lattice_label)]
        lines.extend(format_coords(v.coords) for v in self.result)
        return '\n'.join(lines) + '\n'

    def to_document(self):
        return {
            "lattice": self.lattice_label,
            "count": len(self.result),
            "vectors": [[coord_to_json(c) for c in v.coords] for v in self.result]
        }

    def to_frame(self):
        rank = len(self.result[0]) if self.result else 0
        return pd.DataFrame(
            [[coord_to_json(c) for c in v.coords] for v in self.result],
            columns=['x%d' % j for j in range(rank)]
        )


class CertificateReport(Report):
    kind = 'certificate'

    def to_text(self):
        cert = self.result
        pairs = [
            ('lattice', cert.input.lattice.label),
            ('input', list(cert.input.coords)),
            ('output', list(cert.output.coords)),
            ('steps', cert.steps),
            ('replay', cert.replay())
        ]
        word = ['%3d  %s' % (k, repr(g)) for k, g in enumerate(cert.word)]
        return _aligned(pairs) + ('\n'.join(word) + '\n' if word else '')

    def to_document(self):
        return self.result.to_json_dict()


class ComponentReport(CertificateReport):
    kind = 'component'

    def __init__(self, result):
        super().__init__(result.certificate)
        self.component = result

    def to_text(self):
        extra = _aligned([
            ('component', self.component.tag),
            ('coefficient', self.component.coefficient),
            ('verified', self.component.verify())
        ])
        return extra + super().to_text()

    def to_document(self):
        return self.component.to_json_dict()


class PeriodPointReport(Report):
    kind = 'period-point'

    def to_text(self):
        return self.result.to_text()

    def to_document(self):
        point = self.result
        return {
            "signature": list(point.signature),
            "tau": [[real(x) for x in row] for row in point.tau.tolist()],
            "gram_det": real(gram_det(point))
        }

    def to_frame(self):
        point = self.result
        return pd.DataFrame(point.tau, columns=['t%d' % j for j in range(point.q)])


class ComplexVectorReport(Report):
    kind = 'complex-vector'

    def to_text(self):
        z = self.result
        iso, herm = z.bilinear(z), z.hermitian(z)
        return _aligned([
            ('lattice', z.lattice.label),
            ('real', list(z.real.coords)),
            ('imag', list(z.imag.coords)),
            ('<Z,Z>', '%s + %s i' % (_text_value(iso[0]), _text_value(iso[1]))),
            ('<Z,conj Z>', '%s + %s i' % (_text_value(herm[0]), _text_value(herm[1])))
        ])

    def to_document(self):
        z = self.result
        iso, herm = z.bilinear(z), z.hermitian(z)
        return {
            "lattice": z.lattice.label,
            "real": [coord_to_json(c) for c in z.real.coords],
            "imag": [coord_to_json(c) for c in z.imag.coords],
            "isotropy": [coord_to_json(c) for c in iso],
            "hermitian": [coord_to_json(c) for c in herm]
        }

    def to_frame(self):
        z = self.result
        return pd.DataFrame({
            "index": list(range(len(z.real))),
            "real": [coord_to_json(c) for c in z.real.coords],
            "imag": [coord_to_json(c) for c in z.imag.coords]
        })


class MarkedDataReport(Report):
    kind = 'marked-data'

    def to_text(self):
        data = self.result
        m, t = data.signatures()
        return _aligned([
            ('ambient', data.ambient.label),
            ('picard', data.to_json_dict()['picard']),
            ('transcendental', data.to_json_dict()['transcendental']),
            ('rho', data.rho),
            ('signature M', '(%d, %d)' % m),
            ('signature T', '(%d, %d)' % t)
        ])

    def to_document(self):
        doc = self.result.to_json_dict()
        doc["rho"] = self.result.rho
        return doc


class CountProfileReport(Report):
    """
    Conteggi a_n e coefficienti c_n della serie di Lambert
    sum_{d | n} d a_d, una riga per grado.
    """

    kind = 'count-profile'

    def _rows(self):
        profile = self.result
        lambert = log_derivative_series(profile)
        return [(n, profile.count(n), lambert[n]) for n in range(1, profile.order + 1)]

    def to_text(self):
        profile = self.result
        rows = self._rows()
        width = max([len(str(c)) for row in rows for c in row] + [3])
        head = '# %s, l = %s, walls = %d, strategy = %s\n' % (
            profile.lattice.label, format_coords(profile.l.coords), len(profile.walls), profile.strategy
        )
        lines = [' '.join(h.rjust(width) for h in ('n', 'a_n', 'c_n'))]
        lines.extend(' '.join(str(c).rjust(width) for c in row) for row in rows)
        return head + '\n'.join(lines) + '\n'

    def to_document(self):
        doc = self.result.to_json_dict()
        doc["c"] = [row[2] for row in self._rows()]
        return doc

    def to_frame(self):
        return pd.DataFrame(self._rows(), columns=['n', 'a_n', 'c_n'])


class SeriesReport(Report):
    kind = 'series'

    def to_text(self):
        series = self.result
        lines = ['# offset %s, order %d' % (_text_value(Fraction(series.offset)), series.order)]
        lines.extend('%s %d' % (_text_value(Fraction(e)), c) for e, c in series.to_pairs())
        return '\n'.join(lines) + '\n'

    def to_document(self):
        series = self.result
        return {
            "offset": Fraction(series.offset),
            "order": series.order,
            "coefficients": list(series.coeffs)
        }

    def to_frame(self):
        return pd.DataFrame(
            [(coord_to_json(e), c) for e, c in self.result.to_pairs()], columns=['exponent', 'coefficient']
        )


class DetReportReport(Report):
    kind = 'det-report'

    def to_text(self):
        report = self.result
        return _aligned([
            ('det', report.det_value),
            ('eta', report.eta_value),
            ('zeta\'(0)', report.zeta_derivative),
            ('residual', report.identity_residual),
            ('terms', report.terms_used),
            ('tolerance', report.target_precision)
        ])

    def to_document(self):
        return self.result.to_dict()


class MappingReport(Report):
    """
    Un dizionario di valori scalari, come quello prodotto da assemble.
    """

    kind = 'mapping'

    def to_text(self):
        return _aligned(sorted(self.result.items()))

    def to_document(self):
        return dict(self.result)


REPORTS = [
    (Lattice, LatticeReport),
    (ComponentResult, ComponentReport),
    (ReductionCertificate, CertificateReport),
    (PeriodPoint, PeriodPointReport),
    (ComplexVector, ComplexVectorReport),
    (MarkedMSurfaceData, MarkedDataReport),
    (CountProfile, CountProfileReport),
    (PowerSeries, SeriesReport),
    (DetReport, DetReportReport),
    (dict, MappingReport)
]


def report_for(result):
    """
    Sceglie la classe Report adatta al tipo del risultato.
    """
    if isinstance(result, (list, tuple)) and all(isinstance(v, LatticeVector) for v in result):
        return VectorListReport(result)
    for kind, report in REPORTS:
        if isinstance(result, kind):
            return report(result)
    raise UnsupportedFormat('No serialization for results of type %s' % type(result).__name__)


def emit(result, fmt='text'):
    """
    Serializza un risultato di un modulo nel formato richiesto.
    L'output e' deterministico: chiavi ordinate, vettori in ordine
    lessicografico e reali con REAL_DIGITS cifre significative.

    Parameters
    ----------
    result : `object`
        Il risultato di un'operazione della libreria.
    fmt : `str`, optional
        Uno tra 'text', 'json' e 'csv'.

    Returns
    -------
    `bytes`
        Il flusso di byte codificato UTF-8.
    """
    return report_for(result).render(fmt).encode('utf-8')


def to_file(result, fmt, output_filename):
    """
    Scrive il risultato serializzato in un file.
    """
    payload = emit(result, fmt)
    if settings.PRINT_EVENTS:
        print(status_line('k3kit', 'Outputting %s results to "%s"...' % (fmt, output_filename)))
    with open(os.path.expanduser(output_filename), 'wb') as outfile:
        outfile.write(payload)
    return payload
