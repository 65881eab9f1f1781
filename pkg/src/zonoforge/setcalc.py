"""Subsets of a ground set as bitmasks, the r-separation predicate, and
audits of inclusion-maximal r-separated collections.

Conventions used throughout the package:

* The ground set [n] is {1, ..., n} with 1 <= n <= 30.  A subset X is an
  n-bit integer mask whose bit i-1 is set exactly when i is in X.
* For subsets A and B, list the elements of the symmetric difference in
  increasing order and label each one by the side it came from (A-B versus
  B-A).  The labelled list splits into maximal same-side runs, called blocks
  here.  A and B are r-separated when there are at most r+1 blocks;
  equivalently, no increasing sequence of r+2 elements alternates between
  the two sides.  A collection is r-separated when every member pair is.
* Subsets that are (d-1)-separated from every subset of [n] are called
  universal for (n, d); they are exactly the vertex labels of the boundary
  of the cyclic zonotope Z(n, d) and belong to every inclusion-maximal
  (d-1)-separated collection.  Maximality audits therefore reduce to a
  maximal-clique census of the separation graph on the remaining subsets.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Optional

from . import config
from .errors import DimensionOutOfRange, GroundSetMismatch, InvariantViolation
from .kernels import enumerate_maximal_cliques

MAX_GROUND = 30


def mask_from_elements(elements: Iterable[int], n: int) -> int:
    mask = 0
    for e in elements:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside ground set [{n}]")
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def bits_of(mask: int) -> Iterator[int]:
    """0-based positions of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SubsetMask:
    """A subset of [n] stored as an n-bit mask (bit i-1 <=> element i)."""

    n: int
    bits: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_GROUND:
            raise ValueError(
                f"ground-set size must be in [1, {MAX_GROUND}], got {self.n}"
            )
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"mask {self.bits:#x} has bits outside [{self.n}]")

    @classmethod
    def from_elements(cls, n: int, elements: Iterable[int]) -> "SubsetMask":
        return cls(n, mask_from_elements(elements, n))

    def elements(self) -> tuple[int, ...]:
        return elements_of(self.bits)

    @property
    def cardinality(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.n and self.bits >> (element - 1) & 1 == 1

    def key(self) -> tuple[int, int]:
        """Canonical sort key: (cardinality, mask value)."""
        return (self.bits.bit_count(), self.bits)

    def __repr__(self):
        if self.n <= 9:
            body = "".join(str(e) for e in self.elements()) or "{}"
        else:
            body = "{" + ",".join(str(e) for e in self.elements()) + "}"
        return f"SubsetMask({self.n}:{body})"


class Collection:
    """A duplicate-free family of subsets of one ground set.

    Members are kept in the canonical order (cardinality, mask value), which
    makes serialization deterministic.
    """

    __slots__ = ("n", "members", "_mask_set")

    def __init__(self, n: int, members: Iterable[SubsetMask]):
        masks = set()
        for m in members:
            if m.n != n:
                raise GroundSetMismatch(
                    f"member over ground [{m.n}] in a collection over [{n}]"
                )
            masks.add(m.bits)
        ordered = sorted(masks, key=lambda b: (b.bit_count(), b))
        self.n = n
        self.members = tuple(SubsetMask(n, b) for b in ordered)
        self._mask_set = frozenset(ordered)

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "Collection":
        return cls(n, [SubsetMask(n, b) for b in masks])

    def masks(self) -> tuple[int, ...]:
        return tuple(m.bits for m in self.members)

    def mask_set(self) -> frozenset:
        return self._mask_set

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, item) -> bool:
        if isinstance(item, SubsetMask):
            return item.n == self.n and item.bits in self._mask_set
        return item in self._mask_set

    def __eq__(self, other):
        return (
            isinstance(other, Collection)
            and self.n == other.n
            and self._mask_set == other._mask_set
        )

    def __hash__(self):
        return hash((self.n, self._mask_set))

    def __repr__(self):
        return f"Collection(n={self.n}, {list(self.members)!r})"

    def union(self, other: "Collection") -> "Collection":
        if other.n != self.n:
            raise GroundSetMismatch("cannot union collections over different grounds")
        return Collection.from_masks(self.n, self._mask_set | other._mask_set)

    def regrounded(self, new_n: int) -> "Collection":
        """Same subsets viewed inside a larger ground set."""
        if new_n < self.n:
            for b in self._mask_set:
                if b >> new_n:
                    raise GroundSetMismatch(
                        f"member uses elements above the new ground size {new_n}"
                    )
        return Collection.from_masks(new_n, self._mask_set)


@dataclass(frozen=True)
class SeparationReport:
    """Outcome of a separation check.

    When ok is False, witness_chain holds r+2 strictly increasing elements
    alternating between the two difference sides (the smallest element of
    each of the first r+2 blocks).
    """

    r: int
    ok: bool
    violating_pair: Optional[tuple[SubsetMask, SubsetMask]] = None
    witness_chain: Optional[tuple[int, ...]] = None


def _blocks_int(a: int, b: int) -> int:
    diff = a ^ b
    blocks = 0
    side = 0
    while diff:
        low = diff & -diff
        cur = 1 if a & low else 2
        if cur != side:
            blocks += 1
            side = cur
        diff ^= low
    return blocks


def _pair_separated(a: int, b: int, r: int) -> bool:
    return _blocks_int(a, b) <= r + 1


def _block_leaders(a: int, b: int) -> list[int]:
    """Smallest element of each block, in block order."""
    diff = a ^ b
    leaders = []
    side = 0
    while diff:
        low = diff & -diff
        cur = 1 if a & low else 2
        if cur != side:
            leaders.append(low.bit_length())
            side = cur
        diff ^= low
    return leaders


def _check_same_ground(a: SubsetMask, b: SubsetMask) -> None:
    if a.n != b.n:
        raise GroundSetMismatch(f"ground sets differ: [{a.n}] vs [{b.n}]")


def alternation_blocks(a: SubsetMask, b: SubsetMask) -> int:
    """Number of maximal same-side runs in the sorted symmetric difference.

    A and B are r-separated exactly when this count is at most r+1.
    """
    _check_same_ground(a, b)
    return _blocks_int(a.bits, b.bits)


def is_r_separated(a: SubsetMask, b: SubsetMask, r: int) -> SeparationReport:
    """Decide r-separation of a pair, with an alternating witness on failure."""
    _check_same_ground(a, b)
    if r < 1:
        raise ValueError(f"separation level must be positive, got {r}")
    leaders = _block_leaders(a.bits, b.bits)
    if len(leaders) <= r + 1:
        return SeparationReport(r, True)
    return SeparationReport(r, False, (a, b), tuple(leaders[: r + 2]))


def is_r_separated_collection(c: Collection, r: int) -> SeparationReport:
    """Decide r-separation of all member pairs; reports the first failure
    in canonical member order."""
    if r < 1:
        raise ValueError(f"separation level must be positive, got {r}")
    members = c.members
    for i in range(len(members)):
        ai = members[i].bits
        for j in range(i + 1, len(members)):
            if not _pair_separated(ai, members[j].bits, r):
                return is_r_separated(members[i], members[j], r)
    return SeparationReport(r, True)


def max_size(n: int, d: int) -> int:
    """Size of every maximal-by-size (d-1)-separated collection in 2^[n]:
    sum of C(n, k) for k = 0..d."""
    if not 1 <= d <= n:
        raise DimensionOutOfRange(f"need 1 <= d <= n, got d={d}, n={n}")
    return sum(comb(n, k) for k in range(d + 1))


def piece_count(mask: int) -> int:
    """Number of maximal runs of consecutive elements (0 for the empty set)."""
    return (mask & ~(mask << 1)).bit_count()


def _masks_with_pieces(n: int, k: int) -> Iterator[int]:
    """All subsets of [n] that are unions of exactly k maximal intervals."""
    if k == 0:
        yield 0
        return

    def place(start: int, left: int, acc: int) -> Iterator[int]:
        # next interval [s..e]; a gap of >= 1 separates consecutive intervals
        for s in range(start, n + 1):
            for e in range(s, n + 1):
                run = ((1 << (e - s + 1)) - 1) << (s - 1)
                if left == 1:
                    yield acc | run
                elif e + 2 <= n:
                    yield from place(e + 2, left - 1, acc | run)

    yield from place(1, k, 0)


def _universal_bits(n: int, d: int) -> frozenset:
    """Masks of the subsets (d-1)-separated from every subset of [n].

    Even d: all (d/2)-piece subsets containing 1 or n, plus every subset with
    fewer pieces.  Odd d: all ((d+1)/2)-piece subsets containing both 1 and
    n, plus every subset with at most (d-1)/2 pieces.
    """
    first = 1
    last = 1 << (n - 1)
    out = set()
    if d % 2 == 0:
        half = d // 2
        for k in range(half):
            out.update(_masks_with_pieces(n, k))
        for m in _masks_with_pieces(n, half):
            if m & first or m & last:
                out.add(m)
    else:
        half = (d - 1) // 2
        for k in range(half + 1):
            out.update(_masks_with_pieces(n, k))
        for m in _masks_with_pieces(n, half + 1):
            if m & first and m & last:
                out.add(m)
    return frozenset(out)


def universal_sets(n: int, d: int) -> Collection:
    """The subsets of [n] that are (d-1)-separated from every subset;
    equivalently the vertex labels of the boundary of Z(n, d)."""
    if not 2 <= d <= n:
        raise DimensionOutOfRange(f"need 2 <= d <= n, got d={d}, n={n}")
    return Collection.from_masks(n, _universal_bits(n, d))


def _separation_graph(n: int, d: int) -> tuple[list[int], list[int]]:
    """Vertices: non-universal subsets in canonical order; adjacency masks
    join (d-1)-separated pairs."""
    universal = _universal_bits(n, d)
    verts = sorted(
        (m for m in range(1 << n) if m not in universal),
        key=lambda b: (b.bit_count(), b),
    )
    r = d - 1
    nv = len(verts)
    adj = [0] * nv
    for i in range(nv):
        vi = verts[i]
        for j in range(i + 1, nv):
            if _pair_separated(vi, verts[j], r):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return verts, adj


def maximal_collections(n: int, d: int) -> list[tuple[int, Collection]]:
    """All inclusion-maximal (d-1)-separated collections in 2^[n], as
    (size, collection) pairs in deterministic order.

    Every such collection contains the universal subsets, so the census
    enumerates maximal cliques of the separation graph on the non-universal
    subsets and prepends the universal part.
    """
    if not 1 <= d <= n:
        raise DimensionOutOfRange(f"need 1 <= d <= n, got d={d}, n={n}")
    config.require_audit(n, "maximality census")
    universal = sorted(_universal_bits(n, d), key=lambda b: (b.bit_count(), b))
    verts, adj = _separation_graph(n, d)
    results = []
    for clique in enumerate_maximal_cliques(adj, len(verts)):
        masks = list(universal)
        masks.extend(verts[v] for v in bits_of(clique))
        coll = Collection.from_masks(n, masks)
        results.append((len(coll), coll))
    results.sort(key=lambda t: (t[0], tuple(m.bits for m in t[1].members)))
    return results


def is_pure(n: int, d: int) -> tuple[bool, Optional[Collection]]:
    """Whether every inclusion-maximal (d-1)-separated collection reaches the
    maximal size; if not, returns a deficient witness collection."""
    results = maximal_collections(n, d)
    s = max_size(n, d)
    if results[-1][0] != s:
        raise InvariantViolation(
            f"census maximum {results[-1][0]} disagrees with the size law {s} "
            f"at (n, d)=({n}, {d})"
        )
    if results[0][0] == s:
        return True, None
    return False, results[0][1]
