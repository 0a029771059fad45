"""The fixed test corpus: named catalog graphs plus every cubic bridgeless multigraph on <= 10 vertices."""
from __future__ import annotations

from dataclasses import dataclass

from .graph_core.enumeration import cubic_bridgeless_multigraphs
from .graph_core.generators import generate
from .graph_core.multigraph import Multigraph

CORPUS_VERSION = 1

CATALOG_ENTRIES = [
    ("K4",),
    ("B3",),
    ("K33",),
    ("petersen",),
    ("prism",),
    ("k4_chain", 4),
    ("k4_chain", 6),
    ("k4_chain", "12,13,12,23"),
    ("necklace", 3),
    ("necklace", 4),
    ("digon_ring", 3),
    ("triangle_replace", "petersen", 0),
]


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    graph: Multigraph


def catalog() -> list:
    out = []
    for name, *params in CATALOG_ENTRIES:
        label = name if not params else f"{name}({','.join(map(str, params))})"
        out.append(CorpusEntry(label, generate(name, *params)))
    return out


def enumerated(max_n: int = 10) -> list:
    out = []
    for n in range(2, max_n + 1, 2):
        for i, G in enumerate(cubic_bridgeless_multigraphs(n)):
            out.append(CorpusEntry(f"enum{n}#{i}", G))
    return out


def corpus(max_n: int = 10, max_catalog_n: int | None = None) -> list:
    cat = catalog()
    if max_catalog_n is not None:
        cat = [c for c in cat if c.graph.n <= max_catalog_n]
    return cat + enumerated(max_n)
