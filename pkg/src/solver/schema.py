"""
The published schema for `--json` output and a validator over it.
"""

import os
from functools import lru_cache
from typing import Any, Dict

import yaml
from jsonschema import Draft202012Validator

__all__ = ["SCHEMA_PATH", "load_schema", "schema_for", "validate_output"]

SCHEMA_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "output_schema.yml")


@lru_cache(maxsize=None)
def load_schema() -> Dict[str, Any]:
    with open(SCHEMA_PATH, encoding="utf-8") as f:
        schema = yaml.safe_load(f)
    Draft202012Validator.check_schema(schema)
    return schema


def schema_for(name: str) -> Draft202012Validator:
    """Validator for one definition, e.g. `jack` or `scan_uniqueness`."""
    schema = load_schema()
    if name not in schema["$defs"]:
        raise KeyError(f"no output schema named {name!r}")
    return Draft202012Validator({**schema, "$ref": f"#/$defs/{name}"})


def validate_output(name: str, payload: Any) -> None:
    """Raise jsonschema.ValidationError if `payload` does not match the `name` definition."""
    schema_for(name).validate(payload)
