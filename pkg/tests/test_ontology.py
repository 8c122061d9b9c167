"""Ontology parsing, validation, hierarchy queries, and round-trips."""

from __future__ import annotations

import random

import pytest

from ctxsim.errors import ParseError, SchemaValidationError, UnknownIdError
from ctxsim.ontology import dump_ontology, load_ontology, parse_ontology

import reference

MINIMAL = """
classes:
  - name: Object
    attributes:
      - {name: weightInKilos, kind: number, card: one}
instances: []
"""

CHAIN = """
classes:
  - name: A
    attributes:
      - {name: x, kind: number, card: one}
      - {name: y, kind: text, card: one}
  - name: B
    parent: A
    relations:
      - {name: partner, target: A, card: many}
  - name: C
    parent: B
  - name: Lone
instances:
  - {id: a1, class: A, attrs: {x: 1.5}, rels: {}}
  - {id: b1, class: B, attrs: {y: hello}, rels: {partner: [a1]}}
  - {id: c1, class: C, attrs: {}, rels: {partner: [b1, a1]}}
"""


class TestParsing:
    def test_minimal_document(self):
        onto = parse_ontology(MINIMAL)
        assert len(onto.classes) == 1
        assert len(onto.instances) == 0
        attrs, rels = onto.effective_slots("Object")
        assert set(attrs) == {"weightInKilos"}
        assert rels == {}

    def test_alessi_shape(self, case_study):
        onto = case_study.ontology
        assert len(onto.classes) == 5
        objects = [i for i in onto.instances.values() if i.class_name == "Object"]
        assert len(objects) == 9

    def test_load_from_path(self, tmp_path):
        target = tmp_path / "mini.onto"
        target.write_text(MINIMAL, encoding="utf-8")
        onto = load_ontology(target)
        assert set(onto.classes) == {"Object"}

    def test_yaml_syntax_error_has_location(self):
        with pytest.raises(ParseError) as err:
            parse_ontology("classes:\n  - name: [unclosed", source="bad.onto")
        assert "bad.onto" in str(err.value)

    def test_cycle_rejected(self):
        doc = """
        classes:
          - {name: A, parent: B}
          - {name: B, parent: A}
        instances: []
        """
        with pytest.raises(SchemaValidationError, match="cycle"):
            parse_ontology(doc)

    def test_unknown_parent_rejected(self):
        with pytest.raises(SchemaValidationError, match="unknown parent"):
            parse_ontology("classes: [{name: A, parent: Ghost}]\ninstances: []")

    def test_duplicate_class_rejected(self):
        with pytest.raises(SchemaValidationError, match="duplicate class"):
            parse_ontology("classes: [{name: A}, {name: A}]\ninstances: []")

    def test_slot_collision_rejected(self):
        doc = """
        classes:
          - name: A
            attributes: [{name: x, kind: number, card: one}]
          - name: B
            parent: A
            attributes: [{name: x, kind: text, card: one}]
        instances: []
        """
        with pytest.raises(SchemaValidationError, match="collision on 'x'"):
            parse_ontology(doc)

    def test_dangling_relation_target_rejected(self):
        doc = """
        classes:
          - name: A
            relations: [{name: r, target: A, card: many}]
        instances:
          - {id: a1, class: A, rels: {r: [ghost]}}
        """
        with pytest.raises(SchemaValidationError, match="dangling target 'ghost'"):
            parse_ontology(doc)

    def test_wrong_kind_rejected(self):
        doc = """
        classes:
          - name: A
            attributes: [{name: x, kind: bool, card: one}]
        instances:
          - {id: a1, class: A, attrs: {x: 3.5}}
        """
        with pytest.raises(SchemaValidationError, match="does not match kind 'bool'"):
            parse_ontology(doc)

    def test_cardinality_enforced(self):
        doc = """
        classes:
          - name: A
            attributes: [{name: x, kind: number, card: one}]
        instances:
          - {id: a1, class: A, attrs: {x: [1.0, 2.0]}}
        """
        with pytest.raises(SchemaValidationError, match="card-one"):
            parse_ontology(doc)

    def test_relation_target_class_conformance(self):
        doc = """
        classes:
          - name: A
            relations: [{name: r, target: B, card: many}]
          - name: B
          - name: Other
        instances:
          - {id: o1, class: Other}
          - {id: a1, class: A, rels: {r: [o1]}}
        """
        with pytest.raises(SchemaValidationError, match="expected B"):
            parse_ontology(doc)

    def test_absent_slots_are_legal(self):
        onto = parse_ontology(CHAIN)
        assert "y" not in onto.instances["a1"].attrs
        assert onto.instances["a1"].attr_value_set("y") is None


class TestHierarchyQueries:
    @pytest.fixture()
    def onto(self):
        return parse_ontology(CHAIN)

    def test_depths(self, onto):
        assert onto.class_depth("A") == 0
        assert onto.class_depth("B") == 1
        assert onto.class_depth("C") == 2

    def test_depth_of_child_is_parent_plus_one(self, onto):
        for cls in onto.classes.values():
            if cls.parent is not None:
                assert onto.class_depth(cls.name) == onto.class_depth(cls.parent) + 1

    def test_lca(self, onto):
        assert onto.lowest_common_ancestor("C", "C") == "C"
        assert onto.lowest_common_ancestor("C", "B") == "B"
        assert onto.lowest_common_ancestor("C", "A") == "A"
        assert onto.lowest_common_ancestor("B", "Lone") is None

    def test_lca_of_siblings(self):
        doc = """
        classes: [{name: A}, {name: B, parent: A}, {name: C, parent: A}]
        instances: []
        """
        onto = parse_ontology(doc)
        assert onto.lowest_common_ancestor("B", "C") == "A"

    def test_effective_slots_union(self, onto):
        attrs, rels = onto.effective_slots("C")
        assert set(attrs) == {"x", "y"}
        assert set(rels) == {"partner"}

    def test_effective_slots_monotone_under_subclassing(self, onto):
        for cls in onto.classes.values():
            if cls.parent is None:
                continue
            sub_a, sub_r = onto.effective_slots(cls.name)
            sup_a, sup_r = onto.effective_slots(cls.parent)
            assert set(sup_a) <= set(sub_a)
            assert set(sup_r) <= set(sub_r)

    def test_alessi_object_slots(self, case_study):
        attrs, rels = case_study.ontology.effective_slots("Object")
        assert set(attrs) == {"weightInKilos", "hasPicture", "mightContainSolid",
                              "liquidCapacityInLiters"}
        assert set(rels) == {"hasCharacterizingTask", "hasPart", "hasShapeInfo"}

    def test_unknown_class_raises(self, onto):
        with pytest.raises(UnknownIdError):
            onto.class_depth("Ghost")
        with pytest.raises(UnknownIdError):
            onto.effective_slots("Ghost")


class TestRoundTrip:
    def test_chain_round_trip(self):
        onto = parse_ontology(CHAIN)
        again = parse_ontology(dump_ontology(onto))
        assert onto == again

    def test_alessi_round_trip(self, case_study):
        onto = case_study.ontology
        assert parse_ontology(dump_ontology(onto)) == onto

    def test_random_ontologies_round_trip(self):
        rng = random.Random(5)
        for _ in range(25):
            onto, _ctx = reference.random_ontology(rng)
            assert parse_ontology(dump_ontology(onto)) == onto


class TestReferentialClosure:
    def test_full_store_walk(self, case_study):
        onto = case_study.ontology
        for inst in onto.instances.values():
            _attrs, rels = onto.effective_slots(inst.class_name)
            for name, targets in inst.rels.items():
                decl = rels[name]
                for target in targets:
                    other = onto.instances[target]  # resolves
                    assert onto.is_subclass_of(other.class_name, decl.target)
