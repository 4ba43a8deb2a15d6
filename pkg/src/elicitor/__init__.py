"""Decision support for selecting requirement elicitation techniques.

Three knowledge matrices relate techniques to project attributes, people
traits and process models; a profile of one project is mapped through
them by set union, then filtered by recorded feasibility judgments.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .dataset import Dataset, load_dataset

__version__ = "0.1.0"


def default_dataset_path() -> Path:
    return Path(resources.files("elicitor").joinpath("data/default.dataset"))


def fixture_path(name: str) -> Path:
    """Path of a shipped case-study profile: ipos, osm or bhoomi."""
    return Path(resources.files("elicitor").joinpath(f"data/fixtures/{name}.profile"))


def load_default_dataset() -> Dataset:
    path = default_dataset_path()
    with open(path, "rb") as handle:
        return load_dataset(handle, name=str(path))
