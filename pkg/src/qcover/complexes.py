"""Facet-presented simplicial complexes and facet-subset views.

A complex is stored through its facets only (the inclusion-maximal faces),
as an antichain of vertex sets on dense labels 1..n.  Facets are kept both
as frozensets and as bit masks, so intersection tests cost one AND; the
engine caps n at 64 labels, which covers desk scale.

Facet ids are 1-based positions in the canonical facet order (lexicographic
on the sorted vertex lists).  Identical facet collections therefore get
identical ids no matter how the input was ordered, which keeps every report
and witness reproducible.
"""

from __future__ import annotations

from typing import Iterable, Union

from .errors import (
    AntichainViolationError,
    DuplicateFacetError,
    EmptyFacetError,
    EmptySelectionError,
    TooManyVerticesError,
    UncoveredVertexError,
    UnknownFacetIdError,
)

MAX_VERTICES = 64


def _mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


class SimplicialComplex:
    """Validated facet antichain on vertex labels 1..n.

    Instances are immutable after construction and safe to share between
    threads.  Construct via :func:`new_complex` (or directly; the
    constructor performs the same validation).
    """

    __slots__ = ("vertex_count", "facets", "masks")

    def __init__(self, facets: Iterable[Iterable[int]]):
        raw = list(facets)
        if not raw:
            raise EmptySelectionError("a complex needs at least one facet")
        cleaned: list[frozenset[int]] = []
        for idx, f in enumerate(raw):
            fs = frozenset(f)
            if not fs:
                raise EmptyFacetError(f"facet #{idx + 1} is empty")
            for v in fs:
                if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                    raise ValueError(
                        f"facet #{idx + 1} contains {v!r}; vertex labels must be "
                        "positive integers"
                    )
            if fs in cleaned:
                raise DuplicateFacetError(
                    f"facet {sorted(fs)} appears more than once"
                )
            cleaned.append(fs)
        for i, f in enumerate(cleaned):
            for g in cleaned[i + 1:]:
                if f < g or f == g:
                    raise AntichainViolationError(f, g)
                if g < f:
                    raise AntichainViolationError(g, f)

        n = max(max(f) for f in cleaned)
        if n > MAX_VERTICES:
            raise TooManyVerticesError(
                f"{n} vertex labels; the engine supports at most {MAX_VERTICES}"
            )
        covered = frozenset().union(*cleaned)
        missing = [v for v in range(1, n + 1) if v not in covered]
        if missing:
            raise UncoveredVertexError(
                f"labels {missing} belong to no facet (labels must be dense 1..n)"
            )

        self.vertex_count = n
        self.facets = tuple(sorted(cleaned, key=lambda f: tuple(sorted(f))))
        self.masks = tuple(_mask_of(f) for f in self.facets)

    # -- ids and lookups ------------------------------------------------

    @property
    def facet_ids(self) -> range:
        return range(1, len(self.facets) + 1)

    def facet(self, fid: int) -> frozenset[int]:
        if not 1 <= fid <= len(self.facets):
            raise UnknownFacetIdError(f"no facet with id {fid}")
        return self.facets[fid - 1]

    def mask(self, fid: int) -> int:
        if not 1 <= fid <= len(self.facets):
            raise UnknownFacetIdError(f"no facet with id {fid}")
        return self.masks[fid - 1]

    def facet_label(self, fid: int) -> str:
        self.facet(fid)
        return f"F{fid}"

    @property
    def active_vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.vertex_count + 1))

    def vertex_position(self, v: int) -> int:
        if not 1 <= v <= self.vertex_count:
            raise ValueError(f"vertex {v} outside 1..{self.vertex_count}")
        return v - 1

    # -- basic operations --------------------------------------------------

    def dimension(self) -> int:
        """Largest facet cardinality minus one."""
        return max(len(f) for f in self.facets) - 1

    def is_connected(self) -> bool:
        """Connectivity of the facet-overlap graph (edges where F and H meet)."""
        return _overlap_connected(self)

    # -- value semantics ------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        shown = [sorted(f) for f in self.facets]
        return f"SimplicialComplex(n={self.vertex_count}, facets={shown})"


class SmdSubcomplex:
    """View of a parent complex restricted to a subset of its facets.

    The active vertex universe shrinks to the vertices still occurring in a
    selected facet; labels are kept from the parent.  Facet ids are the
    parent's ids, so results on views line up with results on the parent.
    Immutable; construct via :func:`smd`.
    """

    __slots__ = ("parent", "facet_ids", "active_vertices", "_pos")

    def __init__(self, parent: SimplicialComplex, facet_ids: tuple[int, ...]):
        self.parent = parent
        self.facet_ids = facet_ids
        verts: set[int] = set()
        for fid in facet_ids:
            verts |= parent.facet(fid)
        self.active_vertices = tuple(sorted(verts))
        self._pos = {v: i for i, v in enumerate(self.active_vertices)}

    def facet(self, fid: int) -> frozenset[int]:
        if fid not in self.facet_ids:
            raise UnknownFacetIdError(f"facet id {fid} is not part of this subcomplex")
        return self.parent.facet(fid)

    def mask(self, fid: int) -> int:
        if fid not in self.facet_ids:
            raise UnknownFacetIdError(f"facet id {fid} is not part of this subcomplex")
        return self.parent.mask(fid)

    def facet_label(self, fid: int) -> str:
        self.facet(fid)
        return f"F{fid}"

    def vertex_position(self, v: int) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise ValueError(f"vertex {v} is not in this subcomplex") from None

    def dimension(self) -> int:
        return max(len(self.facet(fid)) for fid in self.facet_ids) - 1

    def is_connected(self) -> bool:
        return _overlap_connected(self)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SmdSubcomplex)
            and self.parent == other.parent
            and self.facet_ids == other.facet_ids
        )

    def __hash__(self) -> int:
        return hash((self.parent, self.facet_ids))

    def __repr__(self) -> str:
        return f"SmdSubcomplex(ids={list(self.facet_ids)})"


ComplexLike = Union[SimplicialComplex, SmdSubcomplex]


def new_complex(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Validate and canonicalize a facet list into a complex.

    Raises EmptyFacetError, DuplicateFacetError, AntichainViolationError,
    UncoveredVertexError or TooManyVerticesError on bad input.
    """
    return SimplicialComplex(facets)


def smd(cx: ComplexLike, facet_ids: Iterable[int]) -> SmdSubcomplex:
    """Subcomplex generated by a facet-id subset (a maximal-dimension view).

    Accepts either a complex or another view; views always root at the
    original complex, so ids stay stable under nesting.
    """
    ids = tuple(sorted(set(facet_ids)))
    if not ids:
        raise EmptySelectionError("facet selection must be nonempty")
    available = set(cx.facet_ids)
    for fid in ids:
        if fid not in available:
            raise UnknownFacetIdError(f"facet id {fid} is not in the complex")
    parent = cx.parent if isinstance(cx, SmdSubcomplex) else cx
    return SmdSubcomplex(parent, ids)


def _overlap_connected(cx: ComplexLike) -> bool:
    ids = list(cx.facet_ids)
    if len(ids) <= 1:
        return True
    seen = {ids[0]}
    stack = [ids[0]]
    while stack:
        cur = stack.pop()
        cm = cx.mask(cur)
        for other in ids:
            if other not in seen and cm & cx.mask(other):
                seen.add(other)
                stack.append(other)
    return len(seen) == len(ids)
