from fractions import Fraction
import json

import numpy as np
import pytest

from k3kit import settings
from k3kit.counting import count_roots_with_degree, euler_product
from k3kit.exceptions import UnsupportedFormat
from k3kit.lattice import ComplexVector, enumerate_roots, make_lattice
from k3kit.mirror import marked_pair
from k3kit.period import PeriodPoint
from k3kit.shell import emit, report_for, to_file
from k3kit.shell.emit import VectorListReport, real
from k3kit.spectral import DetReport


def test_lattice_text_json_csv():
    """
    """
    lattice = make_lattice('U')
    text = emit(lattice).decode('utf-8')
    assert 'signature' in text
    assert '(1, 1)' in text
    doc = json.loads(emit(lattice, 'json'))
    assert doc["rank"] == 2
    assert doc["determinant"] == -1
    assert doc["gram"] == [[0, 1], [1, 0]]
    assert doc["summands"] == [{"name": "U", "offset": 0, "size": 2}]
    assert emit(lattice, 'csv') == b'c0,c1\n0,1\n1,0\n'


def test_vectors_are_sorted():
    """
    """
    lattice = make_lattice('<-2>^2')
    roots = enumerate_roots(lattice)
    report = report_for(list(reversed(roots)))
    assert isinstance(report, VectorListReport)
    doc = json.loads(emit(list(reversed(roots)), 'json'))
    assert doc["count"] == 4
    assert doc["vectors"] == [[-1, 0], [0, -1], [0, 1], [1, 0]]
    assert emit(roots, 'csv').decode('utf-8').splitlines()[0] == 'x0,x1'
    assert emit(roots, 'text').decode('utf-8').splitlines()[0] == '# 4 vectors in <-2>^2'


def test_fractions_are_strings():
    """
    """
    lattice = make_lattice('U')
    z = ComplexVector(lattice, [Fraction(3, 4), 1], [1, 1])
    doc = json.loads(emit(z, 'json'))
    assert doc["real"] == ["3/4", 1]
    assert doc["isotropy"] == ["-1/2", "7/2"]
    assert doc["hermitian"] == ["7/2", 0]


def test_count_profile_csv():
    """
    """
    lattice = make_lattice('U+E8(-1)')
    profile = count_roots_with_degree(lattice, lattice.vector([1, 1] + [0] * 8), 2)
    lines = emit(profile, 'csv').decode('utf-8').splitlines()
    assert lines == ['n,a_n,c_n', '1,480,480', '2,2640,5760']
    doc = json.loads(emit(profile, 'json'))
    assert doc["a"] == [480, 2640]
    assert doc["c"] == [480, 5760]


def test_series_report():
    """
    """
    series = euler_product(5)
    lines = emit(series).decode('utf-8').splitlines()
    assert lines == ['# offset 1/24, order 5', '1/24 1', '25/24 -1', '49/24 -1', '121/24 1']
    doc = json.loads(emit(series, 'json'))
    assert doc["offset"] == "1/24"
    assert doc["coefficients"] == [1, -1, -1, 0, 0, 1]
    assert emit(series, 'csv').decode('utf-8').splitlines()[0] == 'exponent,coefficient'


def test_period_point_reals_are_rounded():
    """
    """
    point = PeriodPoint(np.array([[1.0 / 3, 0.0]]))
    doc = json.loads(emit(point, 'json'))
    assert doc["tau"] == [[real(1.0 / 3), 0.0]]
    assert doc["signature"] == [1, 2]
    assert emit(point, 'csv').decode('utf-8').splitlines()[0] == 't0,t1'


def test_det_report_has_no_csv():
    """
    """
    report = DetReport(1.5, 0.75 + 0j, 1e-9, 10, 1e-6, -0.4)
    doc = json.loads(emit(report, 'json'))
    assert doc["det_value"] == 1.5
    assert doc["terms_used"] == 10
    with pytest.raises(UnsupportedFormat):
        emit(report, 'csv')


def test_marked_data_report():
    """
    """
    doc = json.loads(emit(marked_pair([0, 3]), 'json'))
    assert doc["rho"] == 10
    assert doc["picard"] == 'U+E8(-1)'


@pytest.mark.parametrize("fmt", ['xml', 'TEXT', ''])
def test_unknown_format_raises(fmt):
    """
    """
    with pytest.raises(UnsupportedFormat):
        emit(make_lattice('U'), fmt)


def test_unknown_result_raises():
    """
    """
    with pytest.raises(UnsupportedFormat):
        emit(object())
    with pytest.raises(UnsupportedFormat):
        emit([1, 2, 3])


def test_output_is_deterministic():
    """
    """
    data = marked_pair([0])
    for fmt in settings.SUPPORTED['FORMATS'][:2]:
        assert emit(data, fmt) == emit(marked_pair([0]), fmt)


def test_to_file(tmp_path):
    """
    """
    path = tmp_path / 'lattice.json'
    payload = to_file(make_lattice('E8(-1)'), 'json', str(path))
    assert path.read_bytes() == payload
    assert json.loads(payload)["rank"] == 8
