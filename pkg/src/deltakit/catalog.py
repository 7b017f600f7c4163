"""Append-only JSONL catalog of fully scanned semigroups.

Each line records one semigroup's headline invariants: minimal generators,
embedding dimension, Frobenius number, symmetry, the delta set computed at
the full scan bound, Betti elements, that bound, and a timestamp.  Records
are deduplicated by generator tuple, so appending is idempotent and a search
resumed against the same file skips everything already recorded.

Only full-bound scans are admissible: a record whose bound falls short of
the proven scan bound is rejected outright, because a partial delta set is
not a fact worth caching.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .core import NumericalSemigroup, construct
from .errors import BadParameters, IoFailure, PartialScanRejected
from .factorizations import delta_bound
from .presentations import betti_elements


@dataclass(frozen=True, slots=True)
class CatalogRecord:
    """One catalog line: a fully scanned semigroup and its invariants."""

    generators: tuple[int, ...]
    embedding_dimension: int
    frobenius: int
    symmetric: bool
    delta: tuple[int, ...]
    betti: tuple[int, ...]
    bound: int
    timestamp: int

    def as_dict(self) -> dict:
        """JSON-ready dict using the on-disk field names."""
        return {
            "generators": list(self.generators),
            "e": self.embedding_dimension,
            "frobenius": self.frobenius,
            "symmetric": self.symmetric,
            "delta": list(self.delta),
            "betti": list(self.betti),
            "bound": self.bound,
            "ts": self.timestamp,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CatalogRecord":
        return cls(
            generators=tuple(data["generators"]),
            embedding_dimension=data["e"],
            frobenius=data["frobenius"],
            symmetric=data["symmetric"],
            delta=tuple(data["delta"]),
            betti=tuple(data["betti"]),
            bound=data["bound"],
            timestamp=data["ts"],
        )


def record_line(record: CatalogRecord) -> str:
    """Canonical one-line serialization: sorted keys, no whitespace."""
    return json.dumps(record.as_dict(), sort_keys=True, separators=(",", ":")) + "\n"


def record_for(
    S: NumericalSemigroup, delta: tuple[int, ...], bound: int, timestamp: int
) -> CatalogRecord:
    """Assemble a record for a semigroup whose full-bound delta scan already
    produced delta; computes the remaining invariants (Betti scan included,
    which is the expensive part)."""
    return CatalogRecord(
        generators=S.generators,
        embedding_dimension=S.embedding_dimension,
        frobenius=S.frobenius,
        symmetric=S.is_symmetric(),
        delta=tuple(delta),
        betti=betti_elements(S).values,
        bound=bound,
        timestamp=timestamp,
    )


def read_catalog(path: str | Path) -> tuple[CatalogRecord, ...]:
    """All records in file order; a missing file is an empty catalog.

    Duplicate generator tuples are returned as-is so callers can observe
    raw file contents; writers are the ones responsible for dedup.
    """
    path = Path(path)
    if not path.exists():
        return ()
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot read catalog {path}: {exc}") from exc
    records: list[CatalogRecord] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
            records.append(CatalogRecord.from_dict(data))
        except (ValueError, KeyError, TypeError) as exc:
            raise IoFailure(
                f"malformed catalog line {lineno} in {path}: {exc}"
            ) from exc
    return tuple(records)


class CatalogWriter:
    """Loads a catalog once, then appends new records with dedup.

    Every append validates before writing: the generators must be a minimal
    system and the recorded bound must reach the full scan bound.  Each
    accepted record is flushed as its own line, so an interrupted run leaves
    a well-formed file behind.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._known: dict[tuple[int, ...], CatalogRecord] = {}
        for rec in read_catalog(self.path):
            self._known.setdefault(rec.generators, rec)

    def __len__(self) -> int:
        return len(self._known)

    def lookup(self, generators: tuple[int, ...]) -> CatalogRecord | None:
        return self._known.get(tuple(generators))

    def append(self, record: CatalogRecord) -> bool:
        """Write the record unless its generators are already cataloged;
        returns whether a line was written."""
        gens = record.generators
        S = construct(gens)
        if S.generators != gens:
            raise BadParameters(
                f"catalog records need a minimal generating tuple; "
                f"{gens} minimalizes to {S.generators}"
            )
        full = delta_bound(S)
        if record.bound < full:
            raise PartialScanRejected(
                f"catalog records need a full scan: bound {record.bound} is "
                f"below the proven bound {full} for {gens}"
            )
        if gens in self._known:
            return False
        try:
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(record_line(record))
        except OSError as exc:
            raise IoFailure(f"cannot append to catalog {self.path}: {exc}") from exc
        self._known[gens] = record
        return True


def catalog_append(record: CatalogRecord, path: str | Path) -> bool:
    """One-shot idempotent append; returns whether a line was written."""
    return CatalogWriter(path).append(record)
