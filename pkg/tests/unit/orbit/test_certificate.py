import json

from k3kit.lattice import LatticeVector, make_lattice
from k3kit.orbit import ReductionCertificate, canonicalize_root


def test_certificate_json_replay(helpers):
    """
    """
    delta = helpers.random_roots('U^3+E8(-1)^2', 1, length=20)[0]
    certificate = canonicalize_root(delta)
    text = certificate.to_json()
    data = json.loads(text)
    assert sorted(data) == ['input', 'lattice', 'output', 'steps', 'word']
    assert data['lattice'] == 'U^3+E8(-1)^2'
    restored = ReductionCertificate.from_json(text)
    assert restored.replay()
    assert restored.input == certificate.input
    assert restored.output == certificate.output
    assert restored.steps == certificate.steps
    assert restored.to_json() == text


def test_tampered_certificate_fails_replay():
    """
    """
    lattice = make_lattice('U^2+E8(-1)')
    certificate = canonicalize_root(lattice.basis_vector(5))
    wrong = ReductionCertificate(
        certificate.input, certificate.word, LatticeVector(lattice, [-1, 1] + [0] * 10)
    )
    assert not wrong.replay()
    assert wrong.steps == len(certificate.word)
