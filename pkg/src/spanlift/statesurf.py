"""State surfaces of a link diagram and their invariants.

A state assigns one split letter per crossing, ``A`` joining the tuple ends
(a,b) and (c,d), ``B`` joining (a,d) and (b,c).  Splitting every crossing
leaves a family of disjoint circles; gluing a half-twisted band back in at
each crossing yields the state surface, whose boundary is the link.  Euler
characteristic, twist, aggregate slope, orientability, and the basic
property are all read off the split combinatorics without geometry.

Orientability works over the circle adjacency graph: each circle gets a
reference direction by walking it from its least dart, and each crossing
band demands an even or odd relative flip of the two circles it joins.
The surface is orientable exactly when those demands are satisfiable,
which is a bipartiteness check with parities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Union

from .errors import BoundExceeded, NonIntegerGenus, SplitDomainMismatch
from .knotcodes import Diagram, crossing_signs, self_writhe

__all__ = [
    "DEFAULT_STATE_BOUND",
    "State",
    "StateSurface",
    "resolve",
    "genus_of",
    "enumerate_states",
    "seifert_state",
]

DEFAULT_STATE_BOUND = 20


class State(str):
    """A split assignment written as one letter per crossing, ``A`` or ``B``.

    Lexicographic string order (A before B) is the enumeration order used
    throughout the library.
    """

    def __new__(cls, text: str) -> "State":
        if any(ch not in "AB" for ch in text):
            raise SplitDomainMismatch(f"state letters must be A or B: {text!r}")
        return super().__new__(cls, text)


def _hop(dart: int, letter: str) -> int:
    """The dart joined to this one by the split at its crossing."""
    if letter == "A":
        return dart ^ 1
    return (dart & ~3) | (3 - (dart & 3))


@dataclass(frozen=True)
class StateSurface:
    """Invariants of one state surface.

    Attributes:
        state: the split assignment the surface came from.
        f: number of state circles.
        euler: Euler characteristic, always f minus the crossing count.
        a_count, b_count: letter tallies; twist is their difference.
        slope: aggregate boundary slope, twist plus the self-writhe.
        orientable: whether the surface is two-sided in the sphere.
        basic: True when every crossing band joins two distinct circles.
        connected: whether the surface is connected.
        boundary_components: link components bounded, one per strand.
        circles: dart cycles of the state circles, traversal order.
    """

    state: State
    f: int
    euler: int
    a_count: int
    b_count: int
    twist: int
    slope: int
    orientable: bool
    basic: bool
    connected: bool
    boundary_components: int
    circles: tuple[tuple[int, ...], ...]


class _ParityForest:
    """Union-find that tracks a relative flip bit along each union."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.parity = [0] * size

    def find(self, x: int) -> tuple[int, int]:
        p = 0
        while self.parent[x] != x:
            p ^= self.parity[x]
            x = self.parent[x]
        return x, p

    def union(self, a: int, b: int, want: int) -> bool:
        """Demand parity(a) xor parity(b) == want; False on contradiction."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return (pa ^ pb) == want
        self.parent[ra] = rb
        self.parity[ra] = pa ^ pb ^ want
        return True


def resolve(d: Diagram, state: Union[State, str]) -> StateSurface:
    """Build the state surface of ``d`` for the given split assignment.

    Raises:
        SplitDomainMismatch: when the state length or letters do not match
            the crossing set.
    """
    state = State(str(state))
    if len(state) != d.n:
        raise SplitDomainMismatch(
            f"state has {len(state)} letters for {d.n} crossings"
        )
    if d.n == 0:
        return StateSurface(
            state=state,
            f=1,
            euler=1,
            a_count=0,
            b_count=0,
            twist=0,
            slope=0,
            orientable=True,
            basic=True,
            connected=True,
            boundary_components=1,
            circles=((),),
        )

    letters = {
        4 * c + s: state[c] for c in range(d.n) for s in range(4)
    }
    circles: list[tuple[int, ...]] = []
    circle_of = [-1] * (4 * d.n)
    ref_in = [False] * (4 * d.n)
    for d0 in range(4 * d.n):
        if circle_of[d0] >= 0:
            continue
        cycle = []
        dart = d0
        while True:
            # even positions leave along the split, odd positions hop arcs
            cycle.append(dart)
            circle_of[dart] = len(circles)
            ref_in[dart] = len(cycle) % 2 == 1
            nxt = _hop(dart, letters[dart])
            cycle.append(nxt)
            circle_of[nxt] = len(circles)
            dart = d.theta[nxt]
            if dart == d0:
                break
        circles.append(tuple(cycle))

    f = len(circles)
    forest = _ParityForest(f)
    joiner = _ParityForest(f)
    basic = True
    orientable = True
    for c in range(d.n):
        u = circle_of[4 * c]
        v = circle_of[4 * c + 2]
        if u == v:
            basic = False
        demand = 1 ^ int(ref_in[4 * c]) ^ int(ref_in[4 * c + 2])
        if not forest.union(u, v, demand):
            orientable = False
        joiner.union(u, v, 0)

    roots = {joiner.find(i)[0] for i in range(f)}
    a_count = state.count("A")
    b_count = d.n - a_count
    twist = a_count - b_count
    return StateSurface(
        state=state,
        f=f,
        euler=f - d.n,
        a_count=a_count,
        b_count=b_count,
        twist=twist,
        slope=twist + self_writhe(d),
        orientable=orientable,
        basic=basic,
        connected=len(roots) == 1,
        boundary_components=d.component_count(),
        circles=tuple(circles),
    )


def genus_of(surface: StateSurface) -> Union[int, Fraction]:
    """Genus of the surface, a half-integer in the nonorientable case.

    Orientable surfaces report the usual integer genus; nonorientable ones
    report half their crosscap number, so one crosscap counts one half.

    Raises:
        NonIntegerGenus: when an orientable surface has odd
            2 - euler - boundary_components, which no surface attains.
    """
    doubled = 2 - surface.euler - surface.boundary_components
    if surface.orientable:
        if doubled % 2:
            raise NonIntegerGenus(
                f"orientable surface with 2 - euler - boundary = {doubled}"
            )
        return doubled // 2
    return Fraction(doubled, 2)


def enumerate_states(
    d: Diagram,
    filter: str = "all",
    bound: int = DEFAULT_STATE_BOUND,
) -> Iterator[StateSurface]:
    """Yield state surfaces in lexicographic state order, A before B.

    Args:
        d: the diagram.
        filter: ``all``, ``basic``, ``orientable``, or ``nonorientable``.
        bound: refuse to enumerate when the crossing count exceeds this.

    Raises:
        BoundExceeded: when ``d.n > bound``.
        ValueError: on an unknown filter name.
    """
    if filter not in ("all", "basic", "orientable", "nonorientable"):
        raise ValueError(f"unknown state filter {filter!r}")
    if d.n > bound:
        raise BoundExceeded(
            f"{d.n} crossings exceed the enumeration bound {bound}"
        )
    for letters in product("AB", repeat=d.n):
        surface = resolve(d, "".join(letters))
        if filter == "basic" and not surface.basic:
            continue
        if filter == "orientable" and not surface.orientable:
            continue
        if filter == "nonorientable" and surface.orientable:
            continue
        yield surface


def seifert_state(d: Diagram, flips: frozenset[int] = frozenset()) -> State:
    """The state whose circles are the Seifert circles of an orientation.

    Args:
        d: the diagram.
        flips: indices of components whose default orientation is reversed.

    Positive crossings split A, negative ones split B; with some choice of
    ``flips`` this reproduces every orientable state of the diagram.
    """
    signs = crossing_signs(d, flips)
    return State("".join("A" if s > 0 else "B" for s in signs))
