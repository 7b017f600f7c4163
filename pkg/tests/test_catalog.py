"""JSONL catalog records: serialization, dedup, and failure modes."""
from __future__ import annotations

import json

import pytest

from deltakit.catalog import (
    CatalogRecord,
    CatalogWriter,
    catalog_append,
    read_catalog,
    record_for,
    record_line,
)
from deltakit.core import construct
from deltakit.errors import BadParameters, IoFailure, PartialScanRejected
from deltakit.factorizations import delta_bound, delta_semigroup

TS = 1755129600


def sample_record() -> CatalogRecord:
    S = construct([6, 13, 14, 16])
    return record_for(S, delta_semigroup(S).delta, delta_bound(S), TS)


class TestRecord:
    def test_record_for_headline_invariants(self):
        rec = sample_record()
        assert rec.generators == (6, 13, 14, 16)
        assert rec.embedding_dimension == 4
        assert rec.frobenius == 23
        assert rec.symmetric is False
        assert rec.delta == (1, 3)
        assert rec.betti == (26, 28, 30, 32)
        assert rec.bound == 26720

    def test_line_is_canonical(self):
        line = record_line(sample_record())
        assert line == (
            '{"betti":[26,28,30,32],"bound":26720,"delta":[1,3],"e":4,'
            '"frobenius":23,"generators":[6,13,14,16],"symmetric":false,'
            '"ts":1755129600}\n'
        )
        # canonical form: parsing and re-dumping reproduces the same bytes
        data = json.loads(line)
        assert json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n" == line

    def test_dict_round_trip(self):
        rec = sample_record()
        assert CatalogRecord.from_dict(rec.as_dict()) == rec


class TestAppendAndRead:
    def test_append_is_idempotent(self, tmp_path):
        path = tmp_path / "cat.jsonl"
        rec = sample_record()
        assert catalog_append(rec, path) is True
        assert catalog_append(rec, path) is False
        assert path.read_text().count("\n") == 1
        assert read_catalog(path) == (rec,)

    def test_missing_file_is_empty(self, tmp_path):
        assert read_catalog(tmp_path / "absent.jsonl") == ()

    def test_partial_bound_rejected(self, tmp_path):
        S = construct([6, 13, 14, 16])
        rec = record_for(S, (1, 3), delta_bound(S) - 1, TS)
        with pytest.raises(PartialScanRejected):
            catalog_append(rec, tmp_path / "cat.jsonl")
        assert not (tmp_path / "cat.jsonl").exists()

    def test_non_minimal_generators_rejected(self, tmp_path):
        # 8 = 4 + 4, so the tuple minimalizes to (4, 6, 9)
        rec = CatalogRecord(
            generators=(4, 6, 8, 9),
            embedding_dimension=4,
            frobenius=0,
            symmetric=False,
            delta=(),
            betti=(),
            bound=10**9,
            timestamp=TS,
        )
        with pytest.raises(BadParameters):
            catalog_append(rec, tmp_path / "cat.jsonl")

    def test_append_into_missing_directory_fails(self, tmp_path):
        with pytest.raises(IoFailure):
            catalog_append(sample_record(), tmp_path / "no" / "cat.jsonl")

    def test_malformed_line_fails_with_location(self, tmp_path):
        path = tmp_path / "cat.jsonl"
        path.write_text(record_line(sample_record()) + '{"generators":[2,3]}\n')
        with pytest.raises(IoFailure, match="line 2"):
            read_catalog(path)

    def test_reading_a_directory_fails(self, tmp_path):
        with pytest.raises(IoFailure):
            read_catalog(tmp_path)


class TestWriter:
    def test_lookup_and_first_wins(self, tmp_path):
        path = tmp_path / "cat.jsonl"
        rec = sample_record()
        other = CatalogRecord(
            generators=rec.generators,
            embedding_dimension=rec.embedding_dimension,
            frobenius=rec.frobenius,
            symmetric=rec.symmetric,
            delta=rec.delta,
            betti=rec.betti,
            bound=rec.bound,
            timestamp=TS + 1,
        )
        # duplicate lines on disk: the reader reports both, the writer keeps the first
        path.write_text(record_line(rec) + record_line(other))
        assert len(read_catalog(path)) == 2
        writer = CatalogWriter(path)
        assert len(writer) == 1
        assert writer.lookup((6, 13, 14, 16)) == rec
        assert writer.lookup([6, 13, 14, 16]) == rec
        assert writer.lookup((2, 3)) is None
        assert writer.append(other) is False
