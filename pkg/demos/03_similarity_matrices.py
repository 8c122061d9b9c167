"""Full similarity matrices and their grayscale renderings.

Builds the 9x9 directed score grid for both contexts, prints them, and
writes PGM images next to this script (darker pixel = more similar, so
the diagonal is always black).
"""

from pathlib import Path

from ctxsim import SimilarityEngine, load_case_study
from ctxsim.render import format_score, matrix_to_pgm

case = load_case_study()
engine = SimilarityEngine(case.ontology)
out_dir = Path(__file__).parent

for name in ("part", "usage"):
    matrix = engine.matrix(case.contexts[name])
    short = [i.split("_")[0][:9] for i in matrix.ids]

    print(f"\ncontext {name!r}  (row = query, column = target)")
    print(" " * 10 + " ".join(f"{s:>9}" for s in short))
    for i, row_id in enumerate(matrix.ids):
        cells = " ".join(f"{format_score(float(v)):>9}" for v in matrix.values[i])
        print(f"{short[i]:>9} {cells}")

    target = out_dir / f"matrix_{name}.pgm"
    target.write_bytes(matrix_to_pgm(matrix))
    print(f"wrote {target}")

    asymmetric = []
    for i in range(len(matrix.ids)):
        for j in range(i + 1, len(matrix.ids)):
            gap = abs(float(matrix.values[i, j]) - float(matrix.values[j, i]))
            if gap > 0.1:
                asymmetric.append((gap, matrix.ids[i], matrix.ids[j]))
    asymmetric.sort(reverse=True)
    gap, a, b = asymmetric[0]
    print(f"most asymmetric pair: {a} / {b} (gap {gap:.4f}) "
          f"of {len(asymmetric)} pairs with gap > 0.1")
