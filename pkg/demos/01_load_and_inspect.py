"""Walk the bundled container dataset: classes, slots, instances.

Every resource in the repository is described as an instance of an
ontology class.  This script loads the bundle and pokes around the
schema and the metadata of a couple of containers.
"""

from ctxsim import load_case_study

case = load_case_study()
onto = case.ontology

print("classes:")
for name, cls in onto.classes.items():
    attrs, rels = onto.effective_slots(name)
    parent = f" (is-a {cls.parent})" if cls.parent else ""
    print(f"  {name}{parent}: {len(attrs)} attributes, {len(rels)} relations")

print("\neffective slots of Object:")
attrs, rels = onto.effective_slots("Object")
for attr in attrs.values():
    print(f"  attribute {attr.name}: {attr.kind} ({attr.card})")
for rel in rels.values():
    print(f"  relation  {rel.name} -> {rel.target} ({rel.card})")

print("\nthe nine containers:")
for inst in onto.instances_of("Object"):
    tasks = ", ".join(sorted(inst.rels.get("hasCharacterizingTask", ())))
    print(f"  {inst.id:<14} capacity={inst.attrs.get('liquidCapacityInLiters')!s:<5} "
          f"solid={inst.attrs.get('mightContainSolid')!s:<5} tasks=[{tasks}]")

kettle = onto.instances["Kettles_19"]
print(f"\n{kettle.id} decomposes into:")
for pid in kettle.rels["hasPart"]:
    part = onto.instances[pid]
    (category,) = part.rels["hasPartCategory"]
    (functionality,) = part.rels["hasFunctionality"]
    print(f"  {pid:<26} category={category:<22} functionality={functionality}")
