BLACK, RED, GREEN, YELLOW, BLUE, MAGENTA, CYAN, WHITE = range(8)


def string_colour(text, colour=WHITE):
    """
    Crea una stringa di testo in un colore particolare sul terminale.
    """
    return "\x1b[1;%dm%s\x1b[0m" % (30 + colour, text)


def status_line(label, text, colour=GREEN):
    """
    Riga di stato della CLI: etichetta colorata seguita dal messaggio.
    """
    return '%s %s' % (string_colour('[%s]' % label, colour), text)
