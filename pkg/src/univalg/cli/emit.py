"""Rendering of output records and diagnostics."""

import json


def emit(record, fmt="text"):
    """One rendered string for an Output (or a CliError) in ``text`` or ``json``."""
    if fmt == "json":
        return json.dumps(record.to_json(), separators=(", ", ": "))
    if fmt != "text":
        raise ValueError(f"unknown output format {fmt!r}")
    return str(record) if not hasattr(record, "text") else record.text
