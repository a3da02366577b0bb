"""Access to the packaged spec files."""

from __future__ import annotations

from importlib import resources

from .specfile import load_spec_data

import sys

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib


def bundled_names():
    out = []
    for entry in resources.files("superwarp.specs").iterdir():
        if entry.name.endswith(".toml"):
            out.append(entry.name[:-5])
    return sorted(out)


def load_bundled(name):
    data = tomllib.loads(
        resources.files("superwarp.specs").joinpath(f"{name}.toml")
        .read_text(encoding="utf-8"))
    return load_spec_data(data)


def bundled_manifold(name):
    spec = load_bundled(name)
    if spec["kind"] != "manifold":
        raise ValueError(f"{name} is not a plain manifold spec")
    return spec["manifold"]


def bundled_warped(name):
    spec = load_bundled(name)
    if spec["kind"] != "warped":
        raise ValueError(f"{name} is not a warped spec")
    return spec["product"]


def einstein_constant(name):
    """Declared fiber Einstein constant (exact, as a string in the spec)."""
    import sympy
    spec = load_bundled(name)
    return sympy.Rational(spec["info"].get("einstein_constant", "0"))
