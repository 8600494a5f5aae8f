import json
import importlib.resources as pkg_resources

import jsonschema
from jsonschema import validate

from nodal_kstab import validators
from nodal_kstab.exceptions import SchemaValidationError
from nodal_kstab.utils.logger import get_logger

logger = get_logger(__name__)

_SCHEMA = None


def load_schema(schema_path=None):
    global _SCHEMA
    if schema_path is not None:
        with open(schema_path, "r", encoding="utf-8") as f:
            return json.load(f)
    if _SCHEMA is None:
        with pkg_resources.files(validators).joinpath("report_schema.json").open("r", encoding="utf-8") as f:
            _SCHEMA = json.load(f)
    return _SCHEMA


def validate_report(payload, schema_path=None):
    """Validate a report payload against the packaged schema and return it unchanged."""
    schema = load_schema(schema_path)
    try:
        validate(instance=payload, schema=schema)
    except jsonschema.exceptions.ValidationError as err:
        location = "/".join(str(p) for p in err.absolute_path) or "root"
        logger.error(f"❌ Invalid report at {location}: {err.message}")
        raise SchemaValidationError(f"Invalid report at {location}: {err.message}")
    logger.debug(f"✅ Report of kind {payload.get('kind')} is valid")
    return payload
