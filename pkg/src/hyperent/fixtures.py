"""Hypergraphs from the worked examples, shipped as JSON files."""

from __future__ import annotations

from importlib import resources

from .hypergraph import Hypergraph, parse_json


def fixture_names() -> list[str]:
    files = resources.files(__package__).joinpath("data")
    return sorted(p.name for p in files.iterdir() if p.name.endswith(".json"))


def fixture_text(name: str) -> str:
    if not name.endswith(".json"):
        name += ".json"
    return resources.files(__package__).joinpath("data", name).read_text()


def load_fixture(name: str) -> Hypergraph:
    """Load e.g. ``"fig1a"`` or ``"fig1a.json"``."""
    return parse_json(fixture_text(name))
