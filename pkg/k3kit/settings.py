import os
import warnings

import yaml
from munch import munchify, unmunchify


ENV_VAR_ROOT = 'K3KIT'
DEFAULT_CONFIG_FILENAME = './config.yml'


def from_env(key, default_value=None, root=ENV_VAR_ROOT):
    """Restituisce un parametro numerico o un percorso
    utilizzando la variabile d'ambiente oppure il default_value"""
    if root != "":
        ENV_VAR_KEY = root + "_" + key.upper()
    else:
        ENV_VAR_KEY = key.upper()
    if ENV_VAR_KEY in os.environ:
        return os.environ[ENV_VAR_KEY]
    if default_value == '' or default_value is None:
        warnings.warn("You should pass %s using --%s or using environment variable %r" % (key, key, ENV_VAR_KEY))
    return default_value


def _float_from_env(key, default_value):
    value = from_env(key, default_value)
    try:
        return float(value)
    except (TypeError, ValueError):
        warnings.warn("Environment variable %s_%s=%r is not a number, using %s" % (
            ENV_VAR_ROOT, key.upper(), value, default_value)
        )
        return default_value


DEFAULT = munchify({
    "TOLERANCE": _float_from_env("TOL", 1e-6),
    "STEP_BUDGET": 10 ** 4,
    "TRUNCATION": 200,
    "TERM_BUDGET": 10 ** 6,
    "THREADS": os.cpu_count() or 1,
    "SEED": 20240917,
    "POSITIVITY_EPS": 1e-10,
    "AUTOMORPHY_TOL": 1e-9,
    "REAL_DIGITS": 12
})


TEST = munchify({
    "TOLERANCE": 1e-6,
    "STEP_BUDGET": 10 ** 4,
    "TRUNCATION": 200,
    "TERM_BUDGET": 10 ** 6,
    "THREADS": 1,
    "SEED": 20240917,
    "POSITIVITY_EPS": 1e-10,
    "AUTOMORPHY_TOL": 1e-9,
    "REAL_DIGITS": 12
})


SUPPORTED = {
    'FORMATS': ['text', 'json', 'csv'],
    'SUMMANDS': ['U', 'E8(-1)', '<-2n>']
}

LOGGING = {
    'DATE_FORMAT': '%Y-%m-%d %H:%M:%S'
}

PRINT_EVENTS = False


def set_print_events(print_events=True):
    global PRINT_EVENTS
    PRINT_EVENTS = print_events


def from_file(fname=DEFAULT_CONFIG_FILENAME, testing=False):
    """
    Carica la configurazione da un file YAML, sovrapponendo
    i valori letti a quelli di default.

    Parameters
    ----------
    fname : `str`, optional
        Il percorso del file di configurazione.
    testing : `boolean`, optional
        Se True restituisce la configurazione di test.

    Returns
    -------
    `Munch`
        La configurazione risultante.
    """
    if testing:
        return TEST
    try:
        with open(os.path.expanduser(fname)) as fd:
            conf = yaml.load(fd, Loader=yaml.FullLoader) or {}
    except IOError:
        warnings.warn(
            "A configuration file named '%s' is missing, using the default configuration:\n%s" % (
                fname,
                yaml.dump(unmunchify(DEFAULT), explicit_start=True, indent=True, default_flow_style=False)
            )
        )
        return DEFAULT
    merged = unmunchify(DEFAULT)
    merged.update({k.upper(): v for k, v in conf.items()})
    return munchify(merged)
