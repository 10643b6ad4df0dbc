"""Structured reports as YAML key-value trees with exact values rendered as strings."""

from __future__ import annotations

from typing import Any

import yaml

from .exact.diffop import DiffOperator
from .exact.poly import MultiPoly
from .exact.scalar import ScalarExpr


class _Dumper(yaml.SafeDumper):
    pass


def _str_presenter(dumper, data):
    style = "|" if "\n" in data else None
    return dumper.represent_scalar("tag:yaml.org,2002:str", data, style=style)


_Dumper.add_representer(str, _str_presenter)


def plain(value: Any):
    """Convert exact objects to strings, recursively."""
    if isinstance(value, (ScalarExpr, MultiPoly, DiffOperator)):
        return str(value)
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if isinstance(value, set):
        return sorted(plain(v) for v in value)
    return value


def dump(tree: dict) -> str:
    return yaml.dump(plain(tree), Dumper=_Dumper, sort_keys=False, allow_unicode=True, width=100)


def load(text: str) -> dict:
    return yaml.safe_load(text)
