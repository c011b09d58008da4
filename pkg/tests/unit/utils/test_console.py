import pytest

from k3kit.utils.console import GREEN, RED, YELLOW, status_line, string_colour


@pytest.mark.parametrize(
    "text,colour,expected",
    [
        ('ok', GREEN, "\x1b[1;32mok\x1b[0m"),
        ('budget', YELLOW, "\x1b[1;33mbudget\x1b[0m"),
        ('error', RED, "\x1b[1;31merror\x1b[0m"),
    ]
)
def test_string_colour(text, colour, expected):
    """
    """
    assert string_colour(text, colour=colour) == expected


def test_status_line():
    """
    """
    line = status_line('k3kit', 'Outputting json results')
    assert line == "\x1b[1;32m[k3kit]\x1b[0m Outputting json results"
    assert status_line('x', 'y', colour=RED).startswith("\x1b[1;31m[x]")
