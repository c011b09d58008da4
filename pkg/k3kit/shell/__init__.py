from k3kit.shell.command import Command, parse_command
from k3kit.shell.emit import emit, report_for, to_file
