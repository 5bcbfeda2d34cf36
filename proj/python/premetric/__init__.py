"""Residual checks for pre-metric electrodynamics.

Thin wrapper over the C++ core. Specs are plain dicts with the same keys as
the JSON field-spec files accepted by the ``premetric check`` command.
"""

import json

from ._core import ContractViolation, SpecError, registered_checks
from . import _core

__all__ = ["check", "identities", "catalog", "registered_checks", "SpecError", "ContractViolation"]


def check(spec):
    """Run a field spec (dict or JSON text) and return the report dict."""
    text = spec if isinstance(spec, str) else json.dumps(spec)
    return json.loads(_core.check_json(text))


def identities(dims=(2, 3, 4, 5, 6), trials=1000, seed=1):
    return json.loads(_core.identities_json(list(dims), trials, seed))


def catalog():
    return json.loads(_core.catalog_json())["entries"]
