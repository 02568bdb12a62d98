import functools
import json
import pathlib

#: schurdim package `resources` directory.
RESCR_PATH = pathlib.Path(__file__).parent / "resources"


@functools.lru_cache(maxsize=None)
def load_schema():
    """JSON schema of the records printed with ``--format json``"""
    path = RESCR_PATH / "dimreport.schema.json"
    return json.loads(path.read_text(encoding="utf-8"))


def missing_keys(record, kind):
    """Required keys of the schema definition `kind` absent in `record`

    Parameters
    ----------
    record: dict
        Output of one of the `to_dict` methods
    kind: str
        Name of the definition, e.g. "DimReport" or "SchurDimResult"

    Returns
    -------
    missing: list of str
        Empty if the record carries all required keys
    """
    definitions = load_schema()["definitions"]
    if kind not in definitions:
        raise ValueError("Unknown record kind '{}', expected one of {}!"
                         .format(kind, sorted(definitions)))
    return [key for key in definitions[kind].get("required", [])
            if key not in record]
