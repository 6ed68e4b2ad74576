#!/usr/bin/env python3
"""Derive catalog facet lists from standard polyhedron coordinates.

Run once; the output in data/ is committed together with data/CHECKSUMS
(FNV-1a 64-bit over the file bytes, verified by the C++ test suite).

    python3 scripts/derive_polyhedra.py data/
"""
import itertools
import json
import sys
from pathlib import Path

import numpy as np
from scipy.spatial import ConvexHull

PHI = (1 + 5 ** 0.5) / 2


def cyclic_perms(p):
    x, y, z = p
    return [(x, y, z), (z, x, y), (y, z, x)]


def signed(p):
    out = set()
    for signs in itertools.product((1, -1), repeat=3):
        out.add(tuple(s * c for s, c in zip(signs, p)))
    return sorted(out)


def icosahedron_points():
    pts = set()
    for base in signed((0, 1, PHI)):
        pts.update(cyclic_perms(base))
    return np.array(sorted(pts))


def cube_points():
    return np.array(sorted(itertools.product((-1, 1), repeat=3)), dtype=float)


def dodecahedron_points():
    pts = set(itertools.product((-1, 1), repeat=3))
    for base in signed((0, 1 / PHI, PHI)):
        pts.update(cyclic_perms(base))
    return np.array(sorted(pts), dtype=float)


def polygon_faces(points):
    """Group hull triangles by supporting plane and order each face cyclically."""
    hull = ConvexHull(points)
    groups = {}
    for simplex, eq in zip(hull.simplices, hull.equations):
        key = tuple(np.round(eq, 6))
        groups.setdefault(key, set()).update(int(i) for i in simplex)
    faces = []
    for key, verts in groups.items():
        normal = np.array(key[:3])
        verts = sorted(verts)
        centre = points[verts].mean(axis=0)
        ref = points[verts[0]] - centre
        ortho = np.cross(normal, ref)
        angles = [np.arctan2(np.dot(points[v] - centre, ortho),
                             np.dot(points[v] - centre, ref)) for v in verts]
        faces.append([v for _, v in sorted(zip(angles, verts))])
    return sorted(faces)


def face_edges(faces):
    edges = set()
    for f in faces:
        for a, b in zip(f, f[1:] + f[:1]):
            edges.add((min(a, b), max(a, b)))
    return sorted(edges)


def kis(faces, n_vertices):
    """Cone every polygonal face over a new apex vertex (labels are 1-based)."""
    facets = []
    for k, f in enumerate(faces):
        apex = n_vertices + k + 1
        for a, b in zip(f, f[1:] + f[:1]):
            facets.append(sorted([a + 1, b + 1, apex]))
    return sorted(facets)


def barycentric_surface(faces, n_vertices):
    """Flag triangles (vertex, edge, face) of a polygonal surface."""
    edges = face_edges(faces)
    edge_label = {e: n_vertices + i + 1 for i, e in enumerate(edges)}
    face_base = n_vertices + len(edges)
    facets = []
    for k, f in enumerate(faces):
        for a, b in zip(f, f[1:] + f[:1]):
            e = edge_label[(min(a, b), max(a, b))]
            for v in (a, b):
                facets.append(sorted([v + 1, e, face_base + k + 1]))
    return sorted(facets)


def fnv1a64(data: bytes) -> int:
    h = 0xcbf29ce484222325
    for byte in data:
        h ^= byte
        h = (h * 0x100000001b3) & 0xFFFFFFFFFFFFFFFF
    return h


def dump(path: Path, payload: dict):
    text = json.dumps(payload, separators=(",", ":")) + "\n"
    path.write_text(text)
    return text.encode()


def main(out_dir: str):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    ico = icosahedron_points()
    ico_faces = polygon_faces(ico)
    assert len(ico) == 12 and len(ico_faces) == 20
    cube = cube_points()
    cube_faces = polygon_faces(cube)
    assert len(cube_faces) == 6 and all(len(f) == 4 for f in cube_faces)
    dodeca = dodecahedron_points()
    dodeca_faces = polygon_faces(dodeca)
    assert len(dodeca) == 20 and len(dodeca_faces) == 12
    assert all(len(f) == 5 for f in dodeca_faces)

    entries = {
        "icosahedron": {
            "name": "icosahedron",
            "vertices": list(range(1, 13)),
            "edges": [[a + 1, b + 1] for a, b in face_edges(ico_faces)],
        },
        "tetrakis-hexahedron": {
            "name": "tetrakis-hexahedron",
            "facets": kis(cube_faces, len(cube)),
        },
        "pentakis-dodecahedron": {
            "name": "pentakis-dodecahedron",
            "facets": kis(dodeca_faces, len(dodeca)),
        },
        "disdyakis-dodecahedron": {
            "name": "disdyakis-dodecahedron",
            "facets": barycentric_surface(cube_faces, len(cube)),
        },
        "disdyakis-triacontahedron": {
            "name": "disdyakis-triacontahedron",
            "facets": barycentric_surface(dodeca_faces, len(dodeca)),
        },
    }
    sums = []
    for name, payload in entries.items():
        data = dump(out / f"{name}.json", payload)
        sums.append(f"{fnv1a64(data):016x}  {name}.json")
    (out / "CHECKSUMS").write_text("\n".join(sums) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data")
