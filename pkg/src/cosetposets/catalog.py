"""The bundled group catalog and its loader.

Catalog lines read ``name;degree;comma-separated cycles;expected_order``,
with ``#`` comments. Every entry is rebuilt from its generator words on
load and checked against its expected order.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .groups import PermutationGroup
from .perm import parse_permutation_list


class CatalogError(ValueError):
    """A catalog line failed to parse or verify; carries the line number."""


@dataclass(frozen=True)
class GroupCatalogEntry:
    name: str
    degree: int
    generator_words: tuple[str, ...]
    expected_order: int

    def build(self) -> PermutationGroup:
        gens = [g for word in self.generator_words
                for g in parse_permutation_list(word, self.degree)]
        gens = [g for g in gens if not g.is_identity()]
        group = PermutationGroup(gens, self.degree)
        if group.order != self.expected_order:
            raise CatalogError(
                f"entry {self.name!r}: built order {group.order}, "
                f"expected {self.expected_order}")
        return group


def parse_catalog(text: str) -> list[GroupCatalogEntry]:
    entries = []
    names = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(";")
        if len(parts) != 4:
            raise CatalogError(f"line {lineno}: expected 4 ';'-separated fields")
        name, degree_s, gens_s, order_s = (p.strip() for p in parts)
        try:
            degree = int(degree_s)
            expected = int(order_s)
        except ValueError:
            raise CatalogError(f"line {lineno}: degree and order must be integers") from None
        if name in names:
            raise CatalogError(f"line {lineno}: duplicate name {name!r}")
        names.add(name)
        try:
            parse_permutation_list(gens_s, degree)
        except ValueError as exc:
            raise CatalogError(f"line {lineno}: {exc}") from None
        entries.append(GroupCatalogEntry(name, degree, (gens_s,), expected))
    return entries


def load_catalog(path: str | Path | None = None,
                 verify: bool = True) -> list[GroupCatalogEntry]:
    """Parse a catalog file (the bundled one by default).

    With ``verify`` set, every entry is built and its order checked.
    """
    if path is None:
        text = resources.files("cosetposets").joinpath("data/catalog.txt").read_text()
    else:
        text = Path(path).read_text()
    entries = parse_catalog(text)
    if verify:
        for entry in entries:
            entry.build()
    return entries


def catalog_group(name: str, path: str | Path | None = None) -> PermutationGroup:
    for entry in load_catalog(path, verify=False):
        if entry.name == name:
            return entry.build()
    raise KeyError(f"no catalog entry named {name!r}")
