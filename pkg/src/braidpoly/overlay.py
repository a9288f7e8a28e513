"""The balanced crossing/face incidence graph and its dimer sum.

Vertices on one side are the crossings in word order; on the other,
every face except two.  The deleted pair is the two faces flanking the
closure arc of strand position 2; they always have opposite shading,
neither is the outer face, and dropping them balances the graph (faces
minus two equals crossings).  For two-strand closures this is the
innermost pair on the right.

Each surviving face gets one edge per incident crossing, even when the
boundary touches that crossing at both opposite quadrants; the lowest
touched slot serves as the representative corner, which also anchors
the embedding (rotation at a crossing = corner order, rotation at a
face = representative order along its boundary walk).

Letters, per face: a shaded face gives L to its lowest-numbered
crossing and D to the rest; an unshaded face gives l and d.  Negative
checkerboard crossings bar their letters.  Summing the specialized
letter product over perfect matchings then reproduces the bracket of
the diagram.
"""

from __future__ import annotations

from dataclasses import dataclass

from .activity import ActivityWord, signed_letter
from .diagram import Dart, LinkDiagram
from .errors import TooManyCrossings, UnbalancedGraph, UnsupportedWord
from .kauffman import specialize_bracket
from .laurent import LaurentPoly1

__all__ = [
    "OverlayEdge",
    "OverlayGraph",
    "build_overlay",
    "overlay_activity_letters",
    "perfect_matchings",
    "matching_word",
    "partition_function",
    "components",
    "overlay_to_dot",
]

Matching = frozenset


@dataclass
class OverlayEdge:
    crossing_id: int
    face_id: int
    corner: Dart
    letter: str | None = None
    kasteleyn_sign: int = 1


@dataclass
class OverlayGraph:
    crossings: tuple[int, ...]
    faces: tuple[int, ...]
    shaded: frozenset[int]
    edges: tuple[OverlayEdge, ...]
    crossing_rotation: dict[int, tuple[int, ...]]
    face_rotation: dict[int, tuple[int, ...]]
    crossing_signs: dict[int, int]
    deleted: tuple[int, int]

    def edges_at_crossing(self, cid: int) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e.crossing_id == cid]

    def edges_at_face(self, fid: int) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e.face_id == fid]


def build_overlay(d: LinkDiagram) -> OverlayGraph:
    if not d.word.is_homogeneous_family():
        raise UnsupportedWord(
            f"{d.word.to_text() or '<empty>'} is outside the supported braid family"
        )
    bottom, top = d.closure_darts[2]
    deleted = (d.face_index[bottom], d.face_index[top])
    if deleted[0] == deleted[1]:
        raise UnbalancedGraph("deletion picked one face twice")

    crossings = tuple(c.id for c in d.crossings)
    shaded_ids = sorted(
        (f.id for f in d.faces if f.shaded and f.id not in deleted),
        key=lambda fid: (min(k for k, _ in d.faces[fid].corners), fid),
    )
    unshaded_ids = sorted(
        (f.id for f in d.faces if not f.shaded and f.id not in deleted),
        key=lambda fid: (min(k for k, _ in d.faces[fid].corners), fid),
    )
    faces = tuple(shaded_ids + unshaded_ids)
    if len(faces) != len(crossings):
        raise UnbalancedGraph(
            f"{len(faces)} face vertices against {len(crossings)} crossings"
        )

    # representative corner of each surviving (crossing, face) incidence
    reps: dict[tuple[int, int], Dart] = {}
    for f in d.faces:
        if f.id in deleted:
            continue
        for k, s in f.corners:
            key = (k, f.id)
            if key not in reps or s < reps[key][1]:
                reps[key] = (k, s)

    face_pos = {fid: j for j, fid in enumerate(faces)}
    edge_keys = sorted(reps, key=lambda key: (key[0], face_pos[key[1]]))
    edges = tuple(OverlayEdge(k, fid, reps[(k, fid)]) for k, fid in edge_keys)
    edge_index = {(e.crossing_id, e.face_id): i for i, e in enumerate(edges)}

    crossing_rotation = {}
    for cid in crossings:
        incident = sorted(
            (i for i, e in enumerate(edges) if e.crossing_id == cid),
            key=lambda i: edges[i].corner[1],
        )
        crossing_rotation[cid] = tuple(incident)
    face_rotation = {}
    for fid in faces:
        around = []
        for corner in d.faces[fid].corners:
            i = edge_index.get((corner[0], fid))
            if i is not None and edges[i].corner == corner:
                around.append(i)
        face_rotation[fid] = tuple(around)

    return OverlayGraph(
        crossings,
        faces,
        frozenset(shaded_ids),
        edges,
        crossing_rotation,
        face_rotation,
        {c.id: c.checkerboard_sign for c in d.crossings},
        deleted,
    )


def overlay_activity_letters(g: OverlayGraph) -> OverlayGraph:
    for fid in g.faces:
        incident = sorted(g.edges_at_face(fid), key=lambda i: g.edges[i].crossing_id)
        lead, others = ("L", "D") if fid in g.shaded else ("l", "d")
        for rank, i in enumerate(incident):
            base = lead if rank == 0 else others
            g.edges[i].letter = signed_letter(base, g.crossing_signs[g.edges[i].crossing_id])
    return g


def perfect_matchings(g: OverlayGraph, max_crossings: int = 24):
    """All perfect matchings, as frozensets of edge positions.

    Backtracks on the unmatched crossing with the fewest free faces,
    which keeps the branching shallow on the ladder-like graphs here.
    """
    if len(g.crossings) > max_crossings:
        raise TooManyCrossings(
            f"{len(g.crossings)} crossings exceeds the matching cap {max_crossings}"
        )
    return _matching_stream(g)


def _matching_stream(g: OverlayGraph):
    by_crossing = {cid: g.edges_at_crossing(cid) for cid in g.crossings}

    def recurse(unmatched: frozenset[int], used_faces: frozenset[int], chosen: tuple[int, ...]):
        if not unmatched:
            yield frozenset(chosen)
            return
        cid = min(
            unmatched,
            key=lambda c: sum(
                1 for i in by_crossing[c] if g.edges[i].face_id not in used_faces
            ),
        )
        options = [i for i in by_crossing[cid] if g.edges[i].face_id not in used_faces]
        for i in options:
            yield from recurse(
                unmatched - {cid},
                used_faces | {g.edges[i].face_id},
                chosen + (i,),
            )

    yield from recurse(frozenset(g.crossings), frozenset(), ())


def matching_word(g: OverlayGraph, matching: Matching) -> ActivityWord:
    letters = []
    for i in matching:
        letter = g.edges[i].letter
        if letter is None:
            raise ValueError("letters not assigned; call overlay_activity_letters")
        letters.append(letter)
    return ActivityWord(letters)


def partition_function(g: OverlayGraph, max_crossings: int = 24) -> LaurentPoly1:
    """Dimer sum: specialized matching words over all perfect matchings."""
    total = LaurentPoly1.zero()
    for m in perfect_matchings(g, max_crossings):
        total = total + specialize_bracket(matching_word(g, m))
    return total


def components(g: OverlayGraph) -> list[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]]:
    """Connected components as (crossing ids, face ids, edge positions).

    Orders within each tuple follow the graph's global order, and
    components are listed by their first crossing.
    """
    adjacency: dict[tuple[str, int], list[tuple[str, int]]] = {}
    for e in g.edges:
        adjacency.setdefault(("c", e.crossing_id), []).append(("f", e.face_id))
        adjacency.setdefault(("f", e.face_id), []).append(("c", e.crossing_id))
    seen: set[tuple[str, int]] = set()
    out = []
    for cid in g.crossings:
        start = ("c", cid)
        if start in seen:
            continue
        stack = [start]
        block = set()
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            block.add(node)
            stack.extend(adjacency.get(node, []))
        cids = tuple(c for c in g.crossings if ("c", c) in block)
        fids = tuple(f for f in g.faces if ("f", f) in block)
        eids = tuple(i for i, e in enumerate(g.edges) if ("c", e.crossing_id) in block)
        out.append((cids, fids, eids))
    return out


def overlay_to_dot(g: OverlayGraph) -> str:
    lines = ["graph overlay {"]
    for cid in g.crossings:
        lines.append(f"  c{cid} [shape=box];")
    for fid in g.faces:
        style = ', style=filled, fillcolor="gray80"' if fid in g.shaded else ""
        lines.append(f"  f{fid} [shape=ellipse{style}];")
    for e in g.edges:
        attrs = []
        if e.letter is not None:
            attrs.append(f'label="{e.letter}"')
        if e.kasteleyn_sign < 0:
            attrs.append("style=dashed")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  c{e.crossing_id} -- f{e.face_id}{suffix};")
    lines.append("}")
    return "\n".join(lines)
