import click


class Command(object):
    """
    Un comando della CLI validato: il nome del sottocomando e la
    mappa dei parametri gia' convertiti da click.

    Parameters
    ----------
    name : `str`
        Il nome del sottocomando.
    args : `dict`
        I parametri, con i valori di default gia' applicati.
    """

    def __init__(self, name, args):
        self.name = name
        self.args = dict(args)

    @property
    def output(self):
        return self.args.get('output')

    @property
    def fmt(self):
        return self.args.get('fmt', 'text')

    def __eq__(self, rhs):
        return isinstance(rhs, Command) and self.name == rhs.name and self.args == rhs.args

    def __hash__(self):
        return hash((self.name, tuple(sorted(self.args))))

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, self.name)


def parse_command(argv, group=None):
    """
    Valida una riga di comando senza eseguirla.

    Parameters
    ----------
    argv : `list[str]`
        I token della riga di comando, a partire dal sottocomando.
    group : `click.Group`, optional
        Il gruppo di comandi. Default: la CLI di k3kit.

    Returns
    -------
    `Command`
        Il comando validato.

    Raises
    ------
    `click.UsageError`
        Per sottocomandi o opzioni sconosciuti e parametri non validi
        (codice di uscita 2).
    """
    if group is None:
        from k3kit.shell.cli import cli
        group = cli
    argv = list(argv)
    if not argv:
        raise click.UsageError('Missing command, expected one of %s' % ', '.join(sorted(group.commands)))
    name = argv[0]
    command = group.commands.get(name)
    if command is None:
        raise click.UsageError('No such command "%s"' % name)
    ctx = command.make_context(name, argv[1:])
    return Command(name, ctx.params)
