"""Bundled dataset fidelity: table values, coverage, integrity checks."""

from __future__ import annotations

import pytest

from ctxsim.casestudy import (
    _CHECKSUMS,
    OBJECT_IDS,
    ResourceCorruptionError,
    _parse_golden,
    _read,
    data_path,
    load_case_study,
)

PART_PROFILE = {
    "LiquidProofConcavity": "ToContain",
    "SupportingBase": "ToStabilize",
    "Handle": "ToLift",
    "Whistle": "ToWhistle",
    "Neck": "ToPour",
    "Spout": "ToPour",
    "Lip": "ToPour",
    "CircularNeckToPour": "ToPour",
    "Cover": "ToCover",
}


class TestDataset:
    def test_nine_objects(self, case_study):
        objects = [i for i in case_study.ontology.instances.values()
                   if i.class_name == "Object"]
        assert sorted(i.id for i in objects) == sorted(OBJECT_IDS)

    def test_kettles_19_parts(self, case_study):
        parts = case_study.ontology.instances["Kettles_19"].rel_targets("hasPart")
        assert parts == {"Whistle_6", "Spout_32", "Cover_31",
                         "LiquidProofConcavity_29", "Handle_30", "SupportingBase_39"}

    def test_capacities_and_solid_flags(self, case_study):
        onto = case_study.ontology
        assert onto.instances["OilCruet_36"].attrs["liquidCapacityInLiters"] == 0.3
        assert onto.instances["IceBucket_28"].attrs["mightContainSolid"] is True
        assert onto.instances["FruitBowl_30"].attrs["liquidCapacityInLiters"] == 3.0
        assert onto.instances["Kettles_20"].attrs["mightContainSolid"] is False

    def test_tasks(self, case_study):
        onto = case_study.ontology
        assert onto.instances["MilkPot_22"].rel_targets("hasCharacterizingTask") == {
            "toHeat", "toBoil", "toPour"}
        assert onto.instances["WateringCan_1"].rel_targets("hasCharacterizingTask") == {"toPour"}

    def test_unvalued_slots_stay_absent(self, case_study):
        for oid in OBJECT_IDS:
            inst = case_study.ontology.instances[oid]
            assert "weightInKilos" not in inst.attrs
            assert "hasPicture" not in inst.attrs
            assert "hasShapeInfo" not in inst.rels

    def test_every_part_has_its_name_pattern_profile(self, case_study):
        onto = case_study.ontology
        for oid in OBJECT_IDS:
            for pid in onto.instances[oid].rels["hasPart"]:
                part = onto.instances[pid]
                pattern = pid.rsplit("_", 1)[0]
                assert part.class_name == "FunctionalPart"
                assert part.rel_targets("hasPartCategory") == {pattern}
                assert part.rel_targets("hasFunctionality") == {PART_PROFILE[pattern]}


class TestGoldens:
    def test_nine_rows_per_context(self, case_study):
        for name in ("part", "usage"):
            rows = case_study.goldens[name]
            assert len(rows) == 9
            assert {r.query for r in rows} == set(OBJECT_IDS)

    def test_rows_cover_all_other_instances(self, case_study):
        for rows in case_study.goldens.values():
            for row in rows:
                assert row.all_ids() == set(OBJECT_IDS) - {row.query}

    def test_scores_strictly_decreasing(self, case_study):
        for rows in case_study.goldens.values():
            for row in rows:
                scores = [s for _ids, s in row.groups]
                assert scores == sorted(scores, reverse=True)
                assert len(set(scores)) == len(scores)

    def test_full_grid_coverage_with_diagonal(self, case_study):
        # golden cells plus the diagonal tile the whole 9x9 grid
        for rows in case_study.goldens.values():
            cells = {(row.query, target) for row in rows for target in row.all_ids()}
            cells |= {(o, o) for o in OBJECT_IDS}
            assert len(cells) == 81

    def test_printed_low_values_kept_verbatim(self, case_study):
        rows = {r.query: r for r in case_study.goldens["usage"]}
        milk = dict((ids, s) for ids, s in rows["MilkPot_22"].groups)
        assert milk[("FruitBowl_30",)] == 0.0952
        assert milk[("IceBucket_28",)] == 0.1111


class TestIntegrity:
    def test_checksums_cover_all_bundled_files(self):
        assert set(_CHECKSUMS) == {"alessi.onto", "part.ctx", "usage.ctx",
                                   "golden_part.tsv", "golden_usage.tsv"}
        for name in _CHECKSUMS:
            _read(name)  # must not raise

    def test_corruption_detected(self, monkeypatch):
        import ctxsim.casestudy as cs
        monkeypatch.setitem(cs._CHECKSUMS, "part.ctx", "0" * 64)
        with pytest.raises(ResourceCorruptionError):
            load_case_study()

    def test_bad_golden_line_reported(self):
        with pytest.raises(Exception, match="3 tab-separated fields"):
            _parse_golden("part", "only two\tfields")

    def test_data_path_resolves(self):
        assert data_path("alessi.onto").exists()
