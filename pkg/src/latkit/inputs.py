"""Input files: JSON or TOML descriptions of a quadratic space and a subgroup.

Two shapes are accepted::

    {"name": "A2", "gram": [[2, -1], [-1, 2]]}

    {"name": "isotropic line",
     "ambient": {"gram": [[0, 1], [1, 0]], "generators": [[1, 0]]}}

Entries are integers or exact ``"p/q"`` strings; floats are rejected.
Optional keys: ``window`` and ``seed`` (naturals).
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .errors import ParseError
from .exact import Matrix, as_fraction, frac_str
from .space import QuadraticSpace, Subgroup

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

__all__ = ["InputSpec", "load_input", "parse_input", "corpus_names", "load_corpus"]


@dataclass(frozen=True)
class InputSpec:
    name: str
    gram: Matrix
    generators: Matrix | None = None
    window: int | None = None
    seed: int | None = None

    @property
    def ambient(self) -> bool:
        return self.generators is not None

    def space(self) -> QuadraticSpace:
        return QuadraticSpace(self.gram)

    def subgroup(self) -> Subgroup:
        sp = self.space()
        if self.generators is None:
            return Subgroup.full(sp)
        return Subgroup(sp, self.generators.rows)

    def to_dict(self) -> dict:
        """Echo in input-file shape; :func:`parse_input` reads it back."""
        rows = lambda M: [[frac_str(x) for x in r] for r in M.rows]  # noqa: E731
        out: dict = {"name": self.name}
        if self.generators is None:
            out["gram"] = rows(self.gram)
        else:
            out["ambient"] = {"gram": rows(self.gram), "generators": rows(self.generators)}
        if self.window is not None:
            out["window"] = self.window
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def _matrix(raw, what: str, square: bool) -> Matrix:
    if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
        raise ParseError(f"{what} must be a list of rows")
    width = {len(r) for r in raw}
    if len(width) > 1:
        raise ParseError(f"{what} rows have different lengths")
    ncols = width.pop() if width else 0
    if square and ncols != len(raw):
        raise ParseError(f"{what} must be square, got {len(raw)}x{ncols}")
    try:
        rows = [[as_fraction(x) if not isinstance(x, bool) else _bad(x) for x in r] for r in raw]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{what}: {exc}") from None
    rows = [[int(x) if x.denominator == 1 else x for x in r] for r in rows]
    return Matrix(rows, ncols)


def _bad(x):
    raise TypeError(f"not a rational: {x!r}")


def _natural(raw, key):
    if raw is None:
        return None
    if isinstance(raw, bool) or not isinstance(raw, int) or raw < 0:
        raise ParseError(f"{key} must be a natural number")
    return raw


def parse_input(data: dict, default_name: str = "input") -> InputSpec:
    if not isinstance(data, dict):
        raise ParseError("top level must be a table/object")
    unknown = set(data) - {"name", "gram", "ambient", "window", "seed"}
    if unknown:
        raise ParseError(f"unknown keys: {sorted(unknown)}")
    if ("gram" in data) == ("ambient" in data):
        raise ParseError("give exactly one of 'gram' or 'ambient'")
    name = str(data.get("name", default_name))
    if "gram" in data:
        gram, gens = _matrix(data["gram"], "gram", True), None
    else:
        amb = data["ambient"]
        if not isinstance(amb, dict) or set(amb) != {"gram", "generators"}:
            raise ParseError("'ambient' needs exactly the keys 'gram' and 'generators'")
        gram = _matrix(amb["gram"], "ambient gram", True)
        gens = _matrix(amb["generators"], "generators", False)
        if gens.nrows and gens.ncols != gram.nrows:
            raise ParseError("generators must have one entry per ambient coordinate")
    spec = InputSpec(name, gram, gens, _natural(data.get("window"), "window"), _natural(data.get("seed"), "seed"))
    spec.space()  # NotSymmetric / Degenerate
    return spec


def load_input(path: str | Path) -> InputSpec:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    try:
        if path.suffix.lower() == ".toml":
            data = tomllib.loads(text)
        else:
            data = json.loads(text)
    except (json.JSONDecodeError, tomllib.TOMLDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from None
    return parse_input(data, default_name=path.stem)


def corpus_names() -> list[str]:
    files = resources.files("latkit") / "corpus"
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".json"))


def corpus_path(name: str):
    return resources.files("latkit") / "corpus" / f"{name}.json"


def load_corpus(name: str) -> InputSpec:
    data = json.loads(corpus_path(name).read_text())
    return parse_input(data, default_name=name)


def frac_rows(M: Matrix) -> list[list[str]]:
    return [[frac_str(Fraction(x)) for x in r] for r in M.rows]
