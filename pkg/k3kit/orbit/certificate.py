import json

from k3kit.lattice.exact import to_fraction
from k3kit.lattice.lattice import make_lattice
from k3kit.lattice.vector import LatticeVector, coord_to_json
from k3kit.orbit.word import IsometryWord


class ReductionCertificate(object):
    """
    Certificato di una riduzione: applicando la parola all'input
    si ottiene esattamente l'output.

    Parameters
    ----------
    input : `LatticeVector`
        Il vettore di partenza.
    word : `IsometryWord`
        La parola di isometrie.
    output : `LatticeVector`
        Il rappresentante ottenuto.
    steps : `int`, optional
        Il numero di passi della procedura. Default: la lunghezza della parola.
    """

    def __init__(self, input, word, output, steps=None):
        self.input = input
        self.word = word
        self.output = output
        self.steps = len(word) if steps is None else steps

    def replay(self):
        """
        Riapplica la parola all'input e confronta con l'output.

        Returns
        -------
        `boolean`
            True se la parola riproduce l'output e la norma e' conservata.
        """
        image = self.word.apply(self.input)
        return image == self.output and image.norm == self.input.norm

    def to_json_dict(self):
        return {
            "lattice": self.input.lattice.label,
            "input": [coord_to_json(c) for c in self.input.coords],
            "word": self.word.to_json_list(),
            "output": [coord_to_json(c) for c in self.output.coords],
            "steps": self.steps
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text, lattice=None):
        """
        Ricostruisce il certificato dal formato JSON prodotto da to_json().
        """
        data = json.loads(text) if isinstance(text, str) else text
        if lattice is None:
            lattice = make_lattice(data["lattice"])
        source = LatticeVector(lattice, [to_fraction(c) for c in data["input"]])
        target = LatticeVector(lattice, [to_fraction(c) for c in data["output"]])
        word = IsometryWord.from_json_list(data["word"], lattice)
        return cls(source, word, target, steps=data.get("steps"))

    def __repr__(self):
        return "%s(input=%s, output=%s, steps=%s)" % (
            type(self).__name__, list(self.input.coords), list(self.output.coords), self.steps
        )
