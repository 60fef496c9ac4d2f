"""PD codes: the wire format for diagrams of knots and small spatial graphs.

A crossing is a 4-tuple of arc labels listed counterclockwise starting at the
incoming under-strand. Graph vertices (the bouquet 4-valent vertex, the two
theta 3-valent vertices) are extra tuples listing incident arcs in
counterclockwise order; in text form they carry a ``V`` prefix, e.g.
``V(1,5,9,13)``.

Every arc label must occur exactly twice across all tuples. For knot PDs the
arcs are numbered 1..2n along a traversal, so each crossing tuple (a,b,c,d)
has c = a+1 (mod 2n) and the over strand occupies b and d.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple


class MalformedPD(ValueError):
    """PD text or tuple data violating the format invariants."""


@dataclass(frozen=True)
class PDCode:
    crossings: Tuple[Tuple[int, int, int, int], ...]
    vertex_tuples: Tuple[Tuple[int, ...], ...] = ()
    arc_count: int = 0

    @classmethod
    def from_tuples(
        cls,
        crossings: Sequence[Sequence[int]],
        vertex_tuples: Sequence[Sequence[int]] = (),
    ) -> "PDCode":
        cr = tuple(tuple(int(x) for x in t) for t in crossings)
        vt = tuple(tuple(int(x) for x in t) for t in vertex_tuples)
        labels = [x for t in cr for x in t] + [x for t in vt for x in t]
        arc_count = max(labels) if labels else 0
        code = cls(cr, vt, arc_count)
        code.validate()
        return code

    def validate(self) -> None:
        counts: Dict[int, int] = {}
        for t in self.crossings:
            if len(t) != 4:
                raise MalformedPD(f"crossing arity {len(t)} != 4: {t}")
            for x in t:
                counts[x] = counts.get(x, 0) + 1
        for t in self.vertex_tuples:
            if len(t) not in (3, 4):
                raise MalformedPD(f"vertex arity {len(t)} not in (3, 4): {t}")
            for x in t:
                counts[x] = counts.get(x, 0) + 1
        for label, n in sorted(counts.items()):
            if not isinstance(label, int) or label < 1:
                raise MalformedPD(f"bad arc label {label!r}")
            if n != 2:
                raise MalformedPD(f"arc label {label} appears {n} times (want 2)")
        if counts and sorted(counts) != list(range(1, len(counts) + 1)):
            raise MalformedPD("arc labels are not consecutive from 1")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def is_knot(self) -> bool:
        return not self.vertex_tuples

    def strands_at(self, k: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        """(under (in, out), over (in, out)) arc pairs at crossing k."""
        a, b, c, d = self.crossings[k]
        n = self.arc_count
        if n == 2:  # single kink: label arithmetic is degenerate mod 2
            return (a, c), ((b, d) if b == c else (d, b))
        if self.is_knot():
            # arcs are cyclic along the knot
            if d % n == (b + 1) % n:
                return (a, c), (b, d)
            if b % n == (d + 1) % n:
                return (a, c), (d, b)
        else:
            # arcs run along open graph edges: no wraparound
            if d == b + 1:
                return (a, c), (b, d)
            if b == d + 1:
                return (a, c), (d, b)
        raise MalformedPD(f"over strand of {self.crossings[k]} is not consecutive")

    def sign(self, k: int) -> int:
        """Crossing sign: +1 when the over strand runs b -> d, else -1."""
        a, b, c, d = self.crossings[k]
        (_, _), (oin, _) = self.strands_at(k)
        return 1 if oin == b else -1

    def writhe(self) -> int:
        return sum(self.sign(k) for k in range(len(self.crossings)))

    def flip_crossing(self, k: int) -> "PDCode":
        """Exchange over/under at crossing k (rotate the tuple by one slot)."""
        a, b, c, d = self.crossings[k]
        (_, _), (oin, oout) = self.strands_at(k)
        new = (b, c, d, a) if oin == b else (d, a, b, c)
        cr = list(self.crossings)
        cr[k] = new
        return PDCode(tuple(cr), self.vertex_tuples, self.arc_count)


_TUPLE_RE = re.compile(r"([Vv]?)\s*[\(\[]\s*([0-9,\s]*?)\s*[\)\]]")


def parse_pd(text: str) -> PDCode:
    """Parse PD text: a bracketed or bare comma-separated tuple list.

    ``(`` and ``[`` are interchangeable; tuples prefixed ``V`` are graph
    vertices. Raises MalformedPD on arity or label-count violations.
    """
    s = text.strip()
    if not s:
        raise MalformedPD("empty PD text")
    # strip one level of enclosing list brackets if present
    body = s
    if body[0] in "[(" and body[-1] in ")]":
        # only strip if the bracket encloses the whole list, not the first tuple
        depth = 0
        enclosing = True
        for i, ch in enumerate(body):
            if ch in "[(":
                depth += 1
            elif ch in ")]":
                depth -= 1
                if depth == 0 and i < len(body) - 1:
                    enclosing = False
                    break
        if enclosing and any(ch in "[(" for ch in body[1:-1]):
            body = body[1:-1]
    crossings: List[Tuple[int, ...]] = []
    vertices: List[Tuple[int, ...]] = []
    consumed = 0
    for m in _TUPLE_RE.finditer(body):
        consumed += 1
        inner = m.group(2).strip()
        if not inner:
            raise MalformedPD("empty tuple")
        try:
            vals = tuple(int(tok) for tok in inner.split(","))
        except ValueError as exc:
            raise MalformedPD(f"non-integer token in {m.group(0)!r}") from exc
        if m.group(1):
            vertices.append(vals)
        else:
            if len(vals) != 4:
                raise MalformedPD(f"crossing arity {len(vals)} != 4: {vals}")
            crossings.append(vals)
    leftover = _TUPLE_RE.sub("", body).replace(",", "").strip()
    if consumed == 0 or leftover:
        raise MalformedPD(f"unparsable PD text near {leftover[:40]!r}")
    # unbalanced bracket check
    if body.count("(") + body.count("[") != body.count(")") + body.count("]"):
        raise MalformedPD("unbalanced brackets")
    return PDCode.from_tuples(crossings, vertices)


def emit_pd(p: PDCode) -> str:
    """Normalized PD text; round-trips through parse_pd."""
    bits = ["(" + ",".join(map(str, t)) + ")" for t in p.crossings]
    bits += ["V(" + ",".join(map(str, t)) + ")" for t in p.vertex_tuples]
    return "[" + ",".join(bits) + "]"


def relabel_consecutive(
    crossings: Sequence[Sequence[int]],
    vertex_tuples: Sequence[Sequence[int]] = (),
) -> PDCode:
    """Renumber arbitrary distinct arc labels to 1..n preserving order."""
    labels = sorted({x for t in crossings for x in t} | {x for t in vertex_tuples for x in t})
    ren = {old: i + 1 for i, old in enumerate(labels)}
    return PDCode.from_tuples(
        [[ren[x] for x in t] for t in crossings],
        [[ren[x] for x in t] for t in vertex_tuples],
    )
