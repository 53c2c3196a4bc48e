#!/usr/bin/env python3
"""Regenerates the fixture polytopes used by the test and acceptance suites.

Run from anywhere: python3 fixtures/generate.py
The committed JSON files are the source of truth; this script only documents
how their coordinates were produced.
"""
import itertools
import json
import math
import pathlib
import random

OUT = pathlib.Path(__file__).resolve().parent


def write(name, vertices, dimension=None, **extra):
    doc = {"name": name, "dimension": dimension or len(vertices[0]),
           "vertices": [[float(x) for x in v] for v in vertices]}
    doc.update(extra)
    lines = []
    for key, value in doc.items():
        if isinstance(value, list):
            rows = ",\n    ".join(json.dumps(row) for row in value)
            lines.append(f'  "{key}": [\n    {rows}\n  ]')
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(value)}")
    (OUT / f"{name}.json").write_text("{\n" + ",\n".join(lines) + "\n}\n")


def polygon(n, sx=1.0, sy=1.0, phase=0.0):
    return [(sx * math.cos(2 * math.pi * k / n + phase),
             sy * math.sin(2 * math.pi * k / n + phase)) for k in range(n)]


def regular_simplex(d):
    # Helmert basis of the hyperplane sum(x) = 0 in R^{d+1}.
    basis = []
    for k in range(1, d + 1):
        row = [1.0] * k + [-float(k)] + [0.0] * (d - k)
        norm = math.sqrt(sum(x * x for x in row))
        basis.append([x / norm for x in row])
    pts = []
    for i in range(d + 1):
        e = [1.0 if j == i else 0.0 for j in range(d + 1)]
        c = [x - 1.0 / (d + 1) for x in e]
        pts.append([sum(b[j] * c[j] for j in range(d + 1)) for b in basis])
    r = math.sqrt(sum(x * x for x in pts[0]))
    return [[x / r for x in p] for p in pts]


def cyclic_4_polytope(n):
    pts = [(math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n),
            math.cos(math.pi * i / n), math.sin(math.pi * i / n))
           for i in range(1, n + 1)]
    centroid = [sum(p[k] for p in pts) / n for k in range(4)]
    return [[p[k] - centroid[k] for k in range(4)] for p in pts]


def main():
    write("triangle", polygon(3))
    write("square", [(1, 1), (-1, 1), (-1, -1), (1, -1)])
    write("rectangle", [(2, 1), (-2, 1), (-2, -1), (2, -1)])
    write("hexagon", polygon(6))
    write("hexagon_stretched", polygon(6, sx=2.0))
    rng = random.Random(20231016)
    write("hexagon_perturbed",
          [(x + rng.uniform(-0.08, 0.08), y + rng.uniform(-0.08, 0.08))
           for x, y in polygon(6)])
    for d in (2, 3, 4):
        write(f"simplex{d}", regular_simplex(d))
    write("cube", list(itertools.product((1, -1), repeat=3)))
    write("octahedron", [(1, 0, 0), (-1, 0, 0), (0, 1, 0),
                         (0, -1, 0), (0, 0, 1), (0, 0, -1)])
    write("prism3", [(x, y, z) for z in (1, -1) for x, y in polygon(3)])
    write("cyclic_6_4", cyclic_4_polytope(6))

    # Negative and special-purpose inputs for the CLI tests.
    write("hexagon_translated", [(x + 5, y) for x, y in polygon(6)])
    write("square_with_center", [(1, 1), (-1, 1), (-1, -1), (1, -1), (0, 0)])
    k44 = [(1, 0, 0, 0), (0, 1, 0, 0), (-1, 0, 0, 0), (0, -1, 0, 0),
           (0, 0, 1, 0), (0, 0, 0, 1), (0, 0, -1, 0), (0, 0, 0, -1)]
    write("k44_embedding", k44,
          edges=[[i, j] for i in range(4) for j in range(4, 8)])


if __name__ == "__main__":
    main()
