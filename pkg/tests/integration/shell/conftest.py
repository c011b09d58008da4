import json

from click.testing import CliRunner
import pytest

from k3kit.shell.cli import cli


class Invoker:
    def __init__(self):
        self.runner = CliRunner()

    def __call__(self, *argv):
        return self.runner.invoke(cli, list(argv))

    def json(self, *argv):
        result = self(*(list(argv) + ['--format', 'json']))
        assert result.exit_code == 0, result.output
        return json.loads(result.output)


@pytest.fixture
def invoke():
    return Invoker()
