"""Combinatorial maps behind diagram shadows.

A shadow is the 4-valent map of a diagram with crossing information dropped:
for each graph edge, the sequence of crossing passages (with the left/right
sense of the transversal strand), plus the rotation at graph vertices. This
module owns the canonical code (a signed extended Gauss code minimized over
traversal choices and mirror), shadow-level reduction, and reconstruction of
PD codes from crossing assignments.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from stickforge.pdcode import PDCode

CYCLE = "cycle"
BOUQUET = "bouquet"
THETA = "theta"

Passage = Tuple[int, int]  # (crossing id, sign of dir_self x dir_other)


@dataclass
class MapStruct:
    """Traversal-level description of a shadow.

    streams: one passage list per graph edge (cycle: a single cyclic stream;
    bouquet: two loops based at the 4-valent vertex; theta: three edges, each
    walked from vertex u to vertex w).
    vrot: vertex rotations as cyclic dart tuples. Darts are (stream, end)
    pairs with end 0 = leaving the base vertex, 1 = arriving. Bouquet: one
    rotation of 4 darts at x. Theta: rotation of 3 out-darts at u, then 3
    in-darts at w.
    """

    kind: str
    streams: List[List[Passage]]
    vrot: List[Tuple[Tuple[int, int], ...]]

    @property
    def crossing_count(self) -> int:
        return sum(len(s) for s in self.streams) // 2


def _variants(m: MapStruct):
    """All (stream order, per-stream direction, mirror) traversal variants."""
    if m.kind == CYCLE:
        for mirror in (1, -1):
            for rev in (False, True):
                yield (0,), (rev,), mirror
    elif m.kind == BOUQUET:
        for mirror in (1, -1):
            for order in ((0, 1), (1, 0)):
                for r0 in (False, True):
                    for r1 in (False, True):
                        yield order, (r0, r1), mirror
    elif m.kind == THETA:
        import itertools

        for mirror in (1, -1):
            for order in itertools.permutations((0, 1, 2)):
                # edges can only be reversed all at once (swapping u and w)
                for flip in (False, True):
                    yield order, (flip, flip, flip), mirror
    else:
        raise ValueError(f"unknown kind {m.kind}")


def _walk_tokens(m: MapStruct, order, revs, mirror, start: int = 0):
    """Token string for one traversal variant (cycle start rotation separate)."""
    # a passage's sign flips when exactly one of the two strands at the
    # crossing lies on a reversed stream (both flipped or none: unchanged)
    rev_of_stream = {si: revs[pos] for pos, si in enumerate(order)}
    stream_of_passage: Dict[int, List[int]] = {}
    for si, stream in enumerate(m.streams):
        for cid, _ in stream:
            stream_of_passage.setdefault(cid, []).append(si)
    relabel: Dict[int, int] = {}
    out: List[str] = []
    for pos, si in enumerate(order):
        stream = m.streams[si]
        seq = list(reversed(stream)) if revs[pos] else list(stream)
        if m.kind == CYCLE and seq:
            seq = seq[start:] + seq[:start]
        toks = []
        for cid, sgn in seq:
            sa, sb = stream_of_passage[cid]
            flip = rev_of_stream[sa] != rev_of_stream[sb]
            s = sgn * mirror * (-1 if flip else 1)
            if cid not in relabel:
                relabel[cid] = len(relabel) + 1
                toks.append(f"{relabel[cid]}{'+' if s > 0 else '-'}")
            else:
                toks.append(f"{relabel[cid]}.")
        out.append(",".join(toks))
    body = "/".join(out)
    rot = _rotation_block(m, order, revs, mirror)
    return body + rot


def _rotation_block(m: MapStruct, order, revs, mirror) -> str:
    if m.kind == CYCLE:
        return ""
    # dart renaming: dart (stream, end) -> index under the variant
    def rename(dart: Tuple[int, int]) -> int:
        s, e = dart
        pos = order.index(s)
        if revs[pos]:
            e = 1 - e
        return 2 * pos + e

    blocks = []
    for rot in m.vrot:
        named = [rename(d) for d in rot]
        if mirror == -1:
            named = named[::-1]
        # normalize cyclic tuple to start at its minimum
        k = named.index(min(named))
        named = named[k:] + named[:k]
        blocks.append("".join(map(str, named)))
    if m.kind == THETA and revs[0]:
        # swapping u and w swaps the two rotation blocks
        blocks = blocks[::-1]
    return "@" + "@".join(blocks)


def canonical_code(m: MapStruct) -> str:
    """Lexicographic minimum over traversal variants (and mirror)."""
    best: Optional[str] = None
    for order, revs, mirror in _variants(m):
        if m.kind == CYCLE:
            n = len(m.streams[0])
            starts = range(max(n, 1))
        else:
            starts = (0,)
        for st in starts:
            code = m.kind[0] + ":" + _walk_tokens(m, order, revs, mirror, st)
            if best is None or code < best:
                best = code
    assert best is not None
    return best


def parse_code(code: str) -> MapStruct:
    """Inverse of canonical_code's serialization (any variant parses)."""
    kind = {"c": CYCLE, "b": BOUQUET, "t": THETA}[code[0]]
    rest = code[2:]
    if "@" in rest:
        body, *rots = rest.split("@")
    else:
        body, rots = rest, []
    streams: List[List[Passage]] = []
    seen: Dict[int, int] = {}
    for part in body.split("/"):
        stream: List[Passage] = []
        if part:
            for tok in part.split(","):
                if tok.endswith("."):
                    cid = int(tok[:-1]) - 1
                    stream.append((cid, -seen[cid]))
                else:
                    sgn = 1 if tok.endswith("+") else -1
                    cid = int(tok[:-1]) - 1
                    seen[cid] = sgn
                    stream.append((cid, sgn))
        streams.append(stream)
    vrot = []
    for blk in rots:
        darts = tuple((int(ch) // 2, int(ch) % 2) for ch in blk)
        vrot.append(darts)
    return MapStruct(kind, streams, vrot)


def find_monogon(m: MapStruct) -> Optional[int]:
    """Crossing whose two passages are adjacent along one stream, if any."""
    for si, stream in enumerate(m.streams):
        n = len(stream)
        rng = range(n) if (m.kind == CYCLE and n > 1) else range(n - 1)
        for i in rng:
            j = (i + 1) % n
            if stream[i][0] == stream[j][0]:
                return stream[i][0]
    return None


def remove_crossing(m: MapStruct, cid: int) -> MapStruct:
    """Delete both passages of a crossing (R1 unwind at shadow level)."""
    streams = [[p for p in s if p[0] != cid] for s in m.streams]
    return MapStruct(m.kind, streams, list(m.vrot))


def struct_to_pd(m: MapStruct, over_first: Sequence[bool]) -> PDCode:
    """PD code from a map structure plus an over/under choice per crossing.

    over_first[k] is True when the strand passing crossing k FIRST in the
    walk goes over. Arcs are labeled consecutively stream by stream.
    """
    c = m.crossing_count
    if len(over_first) != c:
        raise ValueError(f"need {c} bits, got {len(over_first)}")
    # enumerate passages in walk order; assign arc labels
    # For a cyclic stream the walk starts/ends at an arbitrary passage split.
    # For graph streams, arcs start/end at the vertices.
    passage_seq: List[Tuple[int, int, int]] = []  # (stream, index, cid)
    for si, stream in enumerate(m.streams):
        for i, (cid, sgn) in enumerate(stream):
            passage_seq.append((si, i, cid))
    arc_in: Dict[Tuple[int, int], int] = {}
    arc_out: Dict[Tuple[int, int], int] = {}
    label = 0
    stream_first_arc: List[int] = []
    stream_last_arc: List[int] = []
    for si, stream in enumerate(m.streams):
        first = label + 1
        for i in range(len(stream)):
            label += 1
            arc_in[(si, i)] = label
            arc_out[(si, i)] = label + 1
        if m.kind == CYCLE:
            if stream:
                arc_out[(si, len(stream) - 1)] = first
                label = max(label, first)  # label already counted
            stream_first_arc.append(first)
            stream_last_arc.append(first)
        else:
            label += 1  # trailing arc into the end vertex
            stream_first_arc.append(first)
            stream_last_arc.append(label)
    # crossing passages: (stream, idx, sign) in first/second order
    occ: Dict[int, List[Tuple[int, int, int]]] = {}
    for si, stream in enumerate(m.streams):
        for i, (cid, sgn) in enumerate(stream):
            occ.setdefault(cid, []).append((si, i, sgn))
    crossings = []
    for cid in range(c):
        (s1, i1, sg1), (s2, i2, sg2) = occ[cid]
        p_in, p_out = arc_in[(s1, i1)], arc_out[(s1, i1)]
        q_in, q_out = arc_in[(s2, i2)], arc_out[(s2, i2)]
        # ccw orders around the crossing, starting at P-in (first passage):
        #   sign +1 (second strand crosses left to right): P_in, Q_in, P_out, Q_out
        #   sign -1: P_in, Q_out, P_out, Q_in
        if over_first[cid]:
            # second strand is under: start tuple at Q_in
            if sg1 > 0:
                tup = (q_in, p_out, q_out, p_in)
            else:
                tup = (q_in, p_in, q_out, p_out)
        else:
            if sg1 > 0:
                tup = (p_in, q_in, p_out, q_out)
            else:
                tup = (p_in, q_out, p_out, q_in)
        crossings.append(tup)
    vertex_tuples = _vertex_tuples(m, stream_first_arc, stream_last_arc)
    return PDCode.from_tuples(crossings, vertex_tuples)


def _vertex_tuples(m: MapStruct, first_arc, last_arc) -> List[Tuple[int, ...]]:
    if m.kind == CYCLE:
        return []
    out = []
    for rot in m.vrot:
        arcs = []
        for s, e in rot:
            arcs.append(first_arc[s] if e == 0 else last_arc[s])
        # start at the smallest arc label (rotation is cyclic)
        k = arcs.index(min(arcs))
        out.append(tuple(arcs[k:] + arcs[:k]))
    return out
