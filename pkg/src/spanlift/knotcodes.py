"""Planar diagram and Gauss codes for link projections.

A diagram with n crossings is stored as a combinatorial map on 4n darts.
Dart 4*c + s is the end of slot s at crossing c, with slots numbered 0..3
counterclockwise from the incoming under-strand, matching the PD tuple
X(a,b,c,d): slot 0 carries arc a, slot 1 arc b, and so on.  Two fixed-point
free involutions carry the structure: ``theta`` pairs the two dart ends of
each arc, and slot rotation plays the role of the vertex permutation.  Faces
are the orbits of dart -> rotate(theta(dart)), walked counterclockwise, and
their count is checked against the Euler formula at construction time, so a
Diagram that exists is planar.

PD text is whitespace-separated ``X(a,b,c,d)`` tuples with ``#`` line
comments; the single token ``U`` denotes the crossingless unknot.  Gauss
codes are per-component passage strings like ``O1+U2+O3+U1+O2+U3+`` joined
by ``;``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DanglingArc,
    MalformedCode,
    MalformedTuple,
    NonPlanar,
    NonRealizable,
)

__all__ = [
    "Diagram",
    "Face",
    "parse_pd",
    "parse_gauss",
    "to_pd",
    "to_gauss",
    "faces",
    "is_alternating",
    "is_reduced",
    "is_connected",
    "crossing_signs",
    "writhe",
    "self_writhe",
    "aggregate_linking",
    "mirror",
    "canonical_code",
    "is_isomorphic",
]


def _rotate(dart: int) -> int:
    """Next dart counterclockwise around the same crossing."""
    return (dart & ~3) | ((dart + 1) & 3)


def _across(dart: int) -> int:
    """Dart of the same strand passage on the far side of the crossing."""
    return dart ^ 2


@dataclass(frozen=True)
class Face:
    """One complementary region of the projection.

    Attributes:
        darts: the dart orbit walked counterclockwise around the region.
            Its length is the gon number of the face.
    """

    darts: tuple[int, ...]

    @property
    def gon(self) -> int:
        return len(self.darts)

    def corners(self) -> tuple[tuple[int, int], ...]:
        """Crossing indices visited, one per side of the face."""
        return tuple((d >> 2, d & 3) for d in self.darts)


class Diagram:
    """An immutable link projection with under/over data.

    Construct through :func:`parse_pd` or :func:`parse_gauss` rather than
    directly; the constructor assumes tuples already validated for arity.
    """

    __slots__ = (
        "crossings",
        "n",
        "theta",
        "arc_of",
        "components",
        "_entries",
        "_faces",
        "_signs",
    )

    def __init__(self, crossings: Sequence[tuple[int, int, int, int]]):
        self.crossings = tuple(tuple(x) for x in crossings)
        self.n = len(self.crossings)
        self.theta = self._build_theta()
        self.arc_of = {
            4 * c + s: arc
            for c, tup in enumerate(self.crossings)
            for s, arc in enumerate(tup)
        }
        self._check_planarity()
        self.components = self._trace_components()
        self._entries = None
        self._faces = None
        self._signs = None

    # -- construction helpers -------------------------------------------

    def _build_theta(self) -> tuple[int, ...]:
        ends: dict[int, list[int]] = {}
        for c, tup in enumerate(self.crossings):
            for s, arc in enumerate(tup):
                ends.setdefault(arc, []).append(4 * c + s)
        theta = [0] * (4 * self.n)
        for arc, darts in ends.items():
            if len(darts) != 2:
                raise DanglingArc(
                    f"arc {arc} has {len(darts)} ends, expected 2"
                )
            a, b = darts
            theta[a] = b
            theta[b] = a
        return tuple(theta)

    def _shadow_pieces(self) -> list[set[int]]:
        """Connected components of the underlying 4-valent graph."""
        seen: set[int] = set()
        pieces = []
        for start in range(self.n):
            if start in seen:
                continue
            piece = {start}
            stack = [start]
            seen.add(start)
            while stack:
                c = stack.pop()
                for s in range(4):
                    other = self.theta[4 * c + s] >> 2
                    if other not in seen:
                        seen.add(other)
                        piece.add(other)
                        stack.append(other)
            pieces.append(piece)
        return pieces

    def _check_planarity(self) -> None:
        if self.n == 0:
            return
        face_count: dict[int, int] = {}
        seen: set[int] = set()
        for d0 in range(4 * self.n):
            if d0 in seen:
                continue
            d = d0
            while True:
                seen.add(d)
                d = _rotate(self.theta[d])
                if d == d0:
                    break
            c = d0 >> 2
            face_count[c] = face_count.get(c, 0)
            # tally one face per orbit against the piece holding its seed
            face_count[c] += 1
        pieces = self._shadow_pieces()
        rep = {}
        for piece in pieces:
            root = min(piece)
            for c in piece:
                rep[c] = root
        per_piece: dict[int, int] = {}
        for seed_crossing, count in face_count.items():
            root = rep[seed_crossing]
            per_piece[root] = per_piece.get(root, 0) + count
        for piece in pieces:
            want = len(piece) + 2
            got = per_piece.get(min(piece), 0)
            if got != want:
                raise NonPlanar(
                    f"component with {len(piece)} crossings closes up "
                    f"{got} faces, expected {want}"
                )

    def _trace_components(self) -> tuple[tuple[int, ...], ...]:
        """Arc cycles of the strands, each started from its least arc.

        The default orientation walks from the least arc of a component
        toward the smaller of its two neighboring arcs (smaller entry dart
        on a tie), so repeated parses orient identically.
        """
        comps: list[tuple[int, ...]] = []
        placed: set[int] = set()
        for arc in sorted(set(self.arc_of.values())):
            if arc in placed:
                continue
            d1, d2 = sorted(d for d, a in self.arc_of.items() if a == arc)
            nbr1 = self.arc_of[_across(d1)]
            nbr2 = self.arc_of[_across(d2)]
            entry = d1 if (nbr1, d1) <= (nbr2, d2) else d2
            cycle = []
            d = entry
            while True:
                cycle.append(self.arc_of[d])
                d = self.theta[_across(d)]
                if d == entry:
                    break
            comps.append(tuple(cycle))
            placed.update(cycle)
        return tuple(comps)

    # -- cached traversal data ------------------------------------------

    def entry_darts(self) -> tuple[tuple[int, ...], ...]:
        """Darts at which each oriented component enters its crossings."""
        if self._entries is None:
            out = []
            for cycle in self.components:
                first_arc = cycle[0]
                next_arc = cycle[1 % len(cycle)]
                d1, d2 = sorted(
                    d for d, a in self.arc_of.items() if a == first_arc
                )
                entry = d1 if (self.arc_of[_across(d1)], d1) <= (
                    self.arc_of[_across(d2)],
                    d2,
                ) else d2
                seq = []
                d = entry
                while True:
                    seq.append(d)
                    d = self.theta[_across(d)]
                    if d == entry:
                        break
                out.append(tuple(seq))
            self._entries = tuple(out)
        return self._entries

    def faces(self) -> tuple[Face, ...]:
        if self._faces is None:
            if self.n == 0:
                self._faces = (Face(()), Face(()))
            else:
                out = []
                seen: set[int] = set()
                for d0 in range(4 * self.n):
                    if d0 in seen:
                        continue
                    orbit = []
                    d = d0
                    while True:
                        orbit.append(d)
                        seen.add(d)
                        d = _rotate(self.theta[d])
                        if d == d0:
                            break
                    out.append(Face(tuple(orbit)))
                self._faces = tuple(out)
        return self._faces

    def signs(self) -> tuple[int, ...]:
        """Crossing signs under the default orientation."""
        if self._signs is None:
            under_slot = [None] * self.n
            over_slot = [None] * self.n
            for seq in self.entry_darts():
                for d in seq:
                    c, s = d >> 2, d & 3
                    if s % 2 == 0:
                        under_slot[c] = s
                    else:
                        over_slot[c] = s
            out = []
            for c in range(self.n):
                sign = -1
                if under_slot[c] == 2:
                    sign = -sign
                if over_slot[c] == 3:
                    sign = -sign
                out.append(sign)
            self._signs = tuple(out)
        return self._signs

    def component_of_crossing(self) -> tuple[tuple[int, int], ...]:
        """(under component, over component) index pair per crossing."""
        under = [0] * self.n
        over = [0] * self.n
        for ci, seq in enumerate(self.entry_darts()):
            for d in seq:
                if d & 1:
                    over[d >> 2] = ci
                else:
                    under[d >> 2] = ci
        return tuple(zip(under, over))

    def arc_component(self) -> dict[int, int]:
        return {
            arc: ci
            for ci, cycle in enumerate(self.components)
            for arc in cycle
        }

    def component_count(self) -> int:
        """Number of link components; the crossingless unknot counts one."""
        return len(self.components) if self.n else 1

    # -- dunder conveniences --------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Diagram) and self.crossings == other.crossings

    def __hash__(self) -> int:
        return hash(self.crossings)

    def __repr__(self) -> str:
        return f"Diagram({to_pd(self)!r})"


_PD_TOKEN = re.compile(r"^X\((\d+),(\d+),(\d+),(\d+)\)$")


def parse_pd(text: str) -> Diagram:
    """Parse PD text into a Diagram.

    Args:
        text: whitespace-separated X tuples, ``#`` starts a line comment.
            The single token ``U`` denotes the 0-crossing unknot.

    Raises:
        MalformedTuple: on empty input or an unrecognized token.
        DanglingArc: when an arc label is not used exactly twice.
        NonPlanar: when the tuples do not close up a sphere diagram.
    """
    tokens = []
    for line in text.splitlines() or [text]:
        body = line.split("#", 1)[0]
        tokens.extend(body.split())
    if not tokens:
        raise MalformedTuple("empty PD input")
    if "U" in tokens:
        if tokens != ["U"]:
            raise MalformedTuple("U token cannot be combined with crossings")
        return Diagram(())
    crossings = []
    for tok in tokens:
        m = _PD_TOKEN.match(tok)
        if not m:
            raise MalformedTuple(f"bad PD token {tok!r}")
        tup = tuple(int(g) for g in m.groups())
        if 0 in tup:
            raise MalformedTuple(f"arc labels must be positive in {tok!r}")
        crossings.append(tup)
    return Diagram(crossings)


def to_pd(d: Diagram) -> str:
    if d.n == 0:
        return "U"
    return " ".join("X({},{},{},{})".format(*tup) for tup in d.crossings)


_GAUSS_TOKEN = re.compile(r"([OU])(\d+)([+-])")


def parse_gauss(text: str) -> Diagram:
    """Parse a Gauss code into a Diagram.

    Components are ``;``-separated passage strings; each passage is an O or
    U, a crossing number, and the crossing sign.  The empty string is the
    unknot.

    Raises:
        MalformedCode: on syntax errors or an inconsistent passage set.
        NonRealizable: when the code admits no planar diagram.
    """
    text = text.strip()
    if text == "":
        return Diagram(())
    comp_tokens: list[list[tuple[str, int, str]]] = []
    for part in text.split(";"):
        part = part.strip()
        toks = _GAUSS_TOKEN.findall(part)
        if "".join(f"{t}{k}{s}" for t, k, s in toks) != part.replace(" ", ""):
            raise MalformedCode(f"bad Gauss component {part!r}")
        if not toks:
            raise MalformedCode("empty Gauss component")
        comp_tokens.append([(t, int(k), s) for t, k, s in toks])

    passages: dict[int, dict[str, tuple[int, int, str]]] = {}
    arc = 0
    for comp in comp_tokens:
        base = arc
        m = len(comp)
        for i, (kind, k, sign) in enumerate(comp):
            # the arc leaving passage i carries label i within the component
            arc_out = base + i + 1
            arc_in = base + (i - 1) % m + 1
            slot = passages.setdefault(k, {})
            if kind in slot:
                raise MalformedCode(f"crossing {k} passed {kind} twice")
            slot[kind] = (arc_in, arc_out, sign)
        arc += m

    crossings = []
    for k in sorted(passages):
        slot = passages[k]
        if set(slot) != {"O", "U"}:
            raise MalformedCode(f"crossing {k} lacks an O or U passage")
        u_in, u_out, s1 = slot["U"]
        o_in, o_out, s2 = slot["O"]
        if s1 != s2:
            raise MalformedCode(f"crossing {k} has conflicting signs")
        if s1 == "+":
            crossings.append((u_in, o_out, u_out, o_in))
        else:
            crossings.append((u_in, o_in, u_out, o_out))
    try:
        return Diagram(crossings)
    except NonPlanar as exc:
        raise NonRealizable(str(exc)) from exc


def to_gauss(d: Diagram) -> str:
    """Emit a Gauss code under the default orientation.

    Crossings are renumbered 1.. in order of first visit.
    """
    if d.n == 0:
        return ""
    signs = d.signs()
    label: dict[int, int] = {}
    parts = []
    for seq in d.entry_darts():
        toks = []
        for dart in seq:
            c = dart >> 2
            if c not in label:
                label[c] = len(label) + 1
            kind = "O" if dart & 1 else "U"
            toks.append(f"{kind}{label[c]}{'+' if signs[c] > 0 else '-'}")
        parts.append("".join(toks))
    return ";".join(parts)


# -- spec-level convenience functions -----------------------------------


def faces(d: Diagram) -> tuple[Face, ...]:
    return d.faces()


def is_alternating(d: Diagram) -> bool:
    """True when every arc joins an under end to an over end."""
    return all(
        (dart & 1) != (d.theta[dart] & 1) for dart in range(4 * d.n)
    )


def is_reduced(d: Diagram) -> bool:
    """True when no crossing is nugatory.

    A crossing is nugatory exactly when two of its opposite corners lie on
    one face, so we test face membership of the corner orbits.
    """
    if d.n == 0:
        return True
    face_index: dict[int, int] = {}
    for i, f in enumerate(d.faces()):
        for dart in f.darts:
            face_index[dart] = i
    for c in range(d.n):
        corner_faces = [face_index[d.theta[4 * c + s]] for s in range(4)]
        if corner_faces[0] == corner_faces[2] or corner_faces[1] == corner_faces[3]:
            return False
    return True


def is_connected(d: Diagram) -> bool:
    if d.n == 0:
        return True
    return len(d._shadow_pieces()) == 1


def crossing_signs(
    d: Diagram, flips: Iterable[int] = ()
) -> tuple[int, ...]:
    """Crossing signs, optionally with some components reversed.

    Args:
        d: the diagram.
        flips: indices of components to traverse against the default
            orientation.  Self-crossing signs never depend on this.
    """
    flipped = frozenset(flips)
    if not flipped:
        return d.signs()
    under_slot = [0] * d.n
    over_slot = [0] * d.n
    for ci, seq in enumerate(d.entry_darts()):
        darts = [_across(e) for e in seq] if ci in flipped else seq
        for dart in darts:
            c, s = dart >> 2, dart & 3
            if s % 2 == 0:
                under_slot[c] = s
            else:
                over_slot[c] = s
    out = []
    for c in range(d.n):
        sign = -1
        if under_slot[c] == 2:
            sign = -sign
        if over_slot[c] == 3:
            sign = -sign
        out.append(sign)
    return tuple(out)


def writhe(d: Diagram) -> int:
    return sum(d.signs())


def self_writhe(d: Diagram) -> int:
    """Sum of signs over crossings where one component crosses itself."""
    pairs = d.component_of_crossing()
    return sum(
        s for s, (cu, co) in zip(d.signs(), pairs) if cu == co
    )


def aggregate_linking(d: Diagram) -> int:
    """Sum of pairwise linking numbers over all component pairs.

    Each pairwise linking number is half the signed count of crossings
    between the two components; the aggregate over a diagram is an integer
    because mixed crossings pair up.
    """
    pairs = d.component_of_crossing()
    mixed = sum(
        s for s, (cu, co) in zip(d.signs(), pairs) if cu != co
    )
    half = Fraction(mixed, 2)
    if half.denominator != 1:
        raise NonPlanar("odd mixed crossing count in a planar diagram")
    return int(half)


def mirror(d: Diagram) -> Diagram:
    """The diagram with every crossing switched.

    Implemented by rotating each PD tuple one slot, which swaps the under
    strand with the over strand while preserving the shadow.
    """
    return Diagram(tuple((b, c, dd, a) for (a, b, c, dd) in d.crossings))


def _encode_from(d: Diagram, start: int, reflect: bool) -> tuple[int, ...]:
    """Label darts breadth-first from start; serialize the map structure."""
    rot = (lambda x: _rotate(_rotate(_rotate(x)))) if reflect else _rotate
    order = {start: 0}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in (rot(cur), d.theta[cur]):
            if nxt not in order:
                order[nxt] = len(order)
                queue.append(nxt)
    out = []
    inv = {v: k for k, v in order.items()}
    for i in range(len(order)):
        dart = inv[i]
        out.append(order[rot(dart)])
        out.append(order[d.theta[dart]])
        out.append(dart & 1)
    return tuple(out)


def canonical_code(d: Diagram, reflection: bool = False) -> tuple[int, ...]:
    """A label-independent key for diagram isomorphism.

    Two diagrams get equal keys exactly when a relabeling of crossings and
    arcs, combined with rotating tuples by two slots, carries one to the
    other.  With ``reflection=True`` the key also identifies a diagram with
    its reflection (reversed rotation order), which keeps under/over data
    but forgets the embedding's chirality.

    Connected diagrams only; the unknot encodes as an empty tuple.
    """
    if d.n == 0:
        return ()
    best = None
    for start in range(4 * d.n):
        for refl in ((False, True) if reflection else (False,)):
            code = _encode_from(d, start, refl)
            if best is None or code < best:
                best = code
    return best


def is_isomorphic(a: Diagram, b: Diagram, reflection: bool = False) -> bool:
    if a.n != b.n:
        return False
    return canonical_code(a, reflection) == canonical_code(b, reflection)
