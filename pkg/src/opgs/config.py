"""Presentations from TOML files.

Example::

    alphabet = ["a", "b"]
    unital = false
    relations = ["b a - a b"]
    opi = "N1c"
    params = { lambda = "2" }
    order = "db"        # optional
"""

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .freealg import Presentation
from .opi import make_opi
from .text import parse_poly
from .words import Alphabet

KEYS = {"alphabet", "unital", "relations", "opi", "params", "order"}


class ConfigError(ValueError):
    pass


def presentation_from_dict(d):
    unknown = set(d) - KEYS
    if unknown:
        raise ConfigError("unknown keys %s (allowed: %s)" % (sorted(unknown), ", ".join(sorted(KEYS))))
    if "alphabet" not in d:
        raise ConfigError("missing 'alphabet'")
    try:
        alphabet = Alphabet.coerce(d["alphabet"])
    except ValueError as e:
        raise ConfigError(str(e)) from None
    params = {}
    for k, v in dict(d.get("params", {})).items():
        if isinstance(v, float):
            raise ConfigError("parameter %s: write rationals as strings like \"1/2\", not floats" % k)
        params[k] = str(v) if not isinstance(v, str) else v
    opi = make_opi(d["opi"], params) if "opi" in d else None
    unital = d.get("unital", opi.unital if opi is not None else False)
    if not isinstance(unital, bool):
        raise ConfigError("'unital' must be true or false")
    relations = d.get("relations", [])
    if isinstance(relations, str):
        relations = [relations]
    rels = tuple(parse_poly(r, alphabet) for r in relations)
    return Presentation(alphabet, rels, opi, unital, d.get("order"))


def load_presentation(path):
    with open(path, "rb") as fh:
        try:
            d = tomllib.load(fh)
        except tomllib.TOMLDecodeError as e:
            raise ConfigError("%s: %s" % (path, e)) from None
    return presentation_from_dict(d)
