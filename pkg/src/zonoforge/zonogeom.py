"""Exact integer geometry for the canonical cyclic vector configuration.

Generator i is placed at (1, t, t^2, ..., t^(d-1)) with t = i, so any d
generators taken with increasing indices span a positively oriented frame
(a Vandermonde-type determinant).  Every geometric decision in the package
reduces to the sign of an exact integer determinant; no floating point is
used anywhere.

Vertices are identified by their subset labels, never by coordinates: with
the canonical parameters two distinct labels can collide as points for small
d, and nothing downstream needs coordinate distinctness.  Coordinates serve
sign predicates and the 2-D export only.

Boundary spectra.  A subset is classified by its piece count (number of
maximal runs of consecutive elements).  Writing h = d/2 for even d and
h = (d-1)/2 for odd d, the boundary labels of Z(n, d) split into front,
rear and rim as follows:

  even d:  rim   = h-piece subsets containing both 1 and n, plus all with
                   fewer pieces;
           front = rim + h-piece subsets containing 1 but not n;
           rear  = rim + h-piece subsets containing n but not 1;
  odd d:   rim   = h-piece subsets containing 1 or n, plus all with fewer
                   pieces;
           front = rim + h-piece subsets containing neither 1 nor n;
           rear  = rim + (h+1)-piece subsets containing both 1 and n.

Front means "seen along the last coordinate direction" (smallest last
coordinate in each fibre of the projection that drops it); rear is the
opposite side; the rim is their intersection.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import DegenerateInput, DimensionOutOfRange, GroundSetMismatch, InvariantViolation
from .setcalc import (
    Collection,
    SubsetMask,
    _masks_with_pieces,
    _universal_bits,
    bits_of,
    elements_of,
)

#: Marker for "use the unit vector along the last coordinate axis" as the
#: extra column of an orientation test.
LAST_AXIS = object()


class CyclicConfiguration:
    """The canonical configuration of n generators in dimension d."""

    __slots__ = ("n", "d", "generators")

    def __init__(self, n: int, d: int):
        if n < 1:
            raise DimensionOutOfRange(f"need at least one generator, got n={n}")
        if d < 1:
            raise DimensionOutOfRange(f"dimension must be positive, got d={d}")
        self.n = n
        self.d = d
        self.generators = tuple(
            tuple(i**p for p in range(d)) for i in range(1, n + 1)
        )

    def generator(self, i: int) -> tuple[int, ...]:
        """Column of generator i (1-based)."""
        if not 1 <= i <= self.n:
            raise DegenerateInput(f"generator index {i} outside [1, {self.n}]")
        return self.generators[i - 1]

    def __repr__(self):
        return f"CyclicConfiguration(n={self.n}, d={self.d})"


def _det(matrix: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    m = [row[:] for row in matrix]
    k = len(m)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(k - 1):
        if m[i][i] == 0:
            for j in range(i + 1, k):
                if m[j][i] != 0:
                    m[i], m[j] = m[j], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for j in range(i + 1, k):
            for c in range(i + 1, k):
                m[j][c] = (m[j][c] * m[i][i] - m[j][i] * m[i][c]) // prev
            m[j][i] = 0
        prev = m[i][i]
    return sign * m[-1][-1]


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def orientation_sign(cfg: CyclicConfiguration, indices, extra=LAST_AXIS) -> int:
    """Sign of det(generator columns for `indices`, then the extra column).

    `indices` must be strictly ascending and one short of the dimension; the
    extra column is a generator index or LAST_AXIS for the unit vector along
    the final coordinate.
    """
    indices = tuple(indices)
    if len(indices) + 1 != cfg.d:
        raise DegenerateInput(
            f"need {cfg.d - 1} indices plus one extra column, got {len(indices)}"
        )
    if any(indices[i] >= indices[i + 1] for i in range(len(indices) - 1)):
        raise DegenerateInput(f"indices must be strictly ascending: {indices}")
    cols = [cfg.generator(i) for i in indices]
    if extra is LAST_AXIS:
        cols.append(tuple(0 if p < cfg.d - 1 else 1 for p in range(cfg.d)))
    else:
        if extra in indices:
            raise DegenerateInput(f"duplicate generator index {extra}")
        cols.append(cfg.generator(extra))
    rows = [[col[p] for col in cols] for p in range(cfg.d)]
    return _sign(_det(rows))


class Point:
    """An exact integer point of the ambient space."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(coords)

    def __eq__(self, other):
        return isinstance(other, Point) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"Point{self.coords}"


def vertex_point(cfg: CyclicConfiguration, x: SubsetMask) -> Point:
    """Coordinate sum of the generators indexed by x.

    The first coordinate always equals |x| because every generator starts
    with a 1.
    """
    if x.n != cfg.n:
        raise GroundSetMismatch(f"label over [{x.n}] against configuration [{cfg.n}]")
    coords = [0] * cfg.d
    for i in elements_of(x.bits):
        g = cfg.generators[i - 1]
        for p in range(cfg.d):
            coords[p] += g[p]
    return Point(coords)


def _side_bits(n: int, d: int) -> tuple[frozenset, frozenset, frozenset]:
    """(front, rear, rim) boundary label masks of Z(n, d); d >= 1."""
    first = 1
    last = 1 << (n - 1)
    rim = set()
    front_only = set()
    rear_only = set()
    if d % 2 == 0:
        h = d // 2
        for k in range(h):
            rim.update(_masks_with_pieces(n, k))
        for m in _masks_with_pieces(n, h):
            has1 = bool(m & first)
            hasn = bool(m & last)
            if has1 and hasn:
                rim.add(m)
            elif has1:
                front_only.add(m)
            elif hasn:
                rear_only.add(m)
    else:
        h = (d - 1) // 2
        for k in range(h):
            rim.update(_masks_with_pieces(n, k))
        for m in _masks_with_pieces(n, h):
            if m & first or m & last:
                rim.add(m)
            else:
                front_only.add(m)
        for m in _masks_with_pieces(n, h + 1):
            if m & first and m & last:
                rear_only.add(m)
    front = frozenset(rim | front_only)
    rear = frozenset(rim | rear_only)
    return front, rear, frozenset(rim)


def boundary_side_spectra(n: int, d: int) -> tuple[Collection, Collection, Collection]:
    """(front, rear, rim) vertex labels of the boundary of Z(n, d).

    front | rear equals the universal subsets and front & rear equals the rim.
    """
    if not 2 <= d <= n:
        raise DimensionOutOfRange(f"need 2 <= d <= n, got d={d}, n={n}")
    front, rear, rim = _side_bits(n, d)
    return (
        Collection.from_masks(n, front),
        Collection.from_masks(n, rear),
        Collection.from_masks(n, rim),
    )


def _bottom_copy_is_front(d: int, position: int) -> bool:
    """Parity rule: the bottom copy of the facet omitting a cube's
    position-th colour (1-based, colours in increasing order) lies on the
    cube's front side exactly when d - position is even."""
    return (d - position) % 2 == 0


def _facet_side_by_sign(cfg: CyclicConfiguration, type_elements, position: int) -> bool:
    """Determinant route for the same classification as the parity rule.

    Evaluate nu(w) = det(remaining type columns in order, w), normalised so
    that nu applied to the omitted generator is positive; the bottom copy is
    on the front side exactly when nu(last-axis unit) > 0.
    """
    elems = list(type_elements)
    omitted = elems[position - 1]
    rest = elems[: position - 1] + elems[position:]
    s = orientation_sign(cfg, rest, omitted)
    t = orientation_sign(cfg, rest, LAST_AXIS)
    if s == 0 or t == 0:
        raise DegenerateInput(f"degenerate facet frame {elems}")
    return s * t > 0


@lru_cache(maxsize=None)
def _parity_rule_checked(d: int) -> bool:
    """One-time cross-check of the parity rule against the sign route."""
    if d > 5:
        return True
    from itertools import combinations

    cfg = CyclicConfiguration(d + 1, d)
    for k in combinations(range(1, d + 2), d):
        for position in range(1, d + 1):
            if _facet_side_by_sign(cfg, k, position) != _bottom_copy_is_front(d, position):
                raise InvariantViolation(
                    f"facet side parity rule fails at d={d}, type {k}, "
                    f"position {position}"
                )
    return True


def facet_side_of_cube(cfg: CyclicConfiguration, cube, omitted_position: int, copy: str) -> str:
    """Classify a facet of a cube as lying on the cube's front or rear side.

    The facet omits the cube's omitted_position-th colour (1-based, colours
    ascending); `copy` selects the bottom or the top translate.
    """
    d = cfg.d
    tmask = cube.type_.bits
    bmask = cube.bottom.bits
    if cube.type_.n != cfg.n:
        raise GroundSetMismatch(
            f"cube over [{cube.type_.n}] against configuration [{cfg.n}]"
        )
    if tmask & bmask or tmask.bit_count() != d:
        raise DegenerateInput("malformed cube: type/bottom overlap or wrong rank")
    if copy not in ("bottom", "top"):
        raise DegenerateInput(f"copy must be 'bottom' or 'top', got {copy!r}")
    if not 1 <= omitted_position <= d:
        raise DegenerateInput(f"facet position {omitted_position} outside [1, {d}]")
    _parity_rule_checked(d)
    front = _bottom_copy_is_front(d, omitted_position)
    if copy == "top":
        front = not front
    return "front" if front else "rear"


def projection_2d(n: int, d: int) -> dict:
    """Vertices of Z(n, d) with their first two coordinates, plus the label
    adjacencies (X, X+{i}) whose two endpoints are both boundary labels.

    Intended for external plotting; the adjacency list is the part of the
    1-skeleton shared by every tiling.
    """
    if not 2 <= d <= n:
        raise DimensionOutOfRange(f"need 2 <= d <= n, got d={d}, n={n}")
    labels = sorted(_universal_bits(n, d), key=lambda b: (b.bit_count(), b))
    label_set = frozenset(labels)
    vertices = []
    for m in labels:
        elems = elements_of(m)
        vertices.append({"set": list(elems), "x1": len(elems), "x2": sum(elems)})
    edges = []
    for m in labels:
        for i in range(1, n + 1):
            bit = 1 << (i - 1)
            if m & bit:
                continue
            m2 = m | bit
            if m2 in label_set:
                edges.append([list(elements_of(m)), list(elements_of(m2))])
    return {"n": n, "d": d, "vertices": vertices, "edges": edges}
