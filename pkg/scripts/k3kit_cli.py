from k3kit.shell.cli import cli


if __name__ == "__main__":
    cli()
