"""Named example complexes and a seed-stable random quasi-tree generator."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import SimplicialComplex, new_complex
from .errors import NTooSmallError


def delta_n(n: int) -> SimplicialComplex:
    """Quasi-tree on 2n vertices: a central facet {1..n} and n satellites.

    Satellite i is the center with vertex i swapped for the private tip
    n+i.  Defined for n >= 3; each satellite pair shares n-2 >= 1 center
    vertices, so any three satellites close a special odd cycle and the
    family is never standard graded.  Its maximal generator degree is n-1,
    realized by weight 1 on every center vertex.
    """
    if n < 3:
        raise NTooSmallError(f"the family needs n >= 3, got {n}")
    center = set(range(1, n + 1))
    facets = [center]
    for i in range(1, n + 1):
        facets.append((center - {i}) | {n + i})
    return new_complex(facets)


def double_fan() -> SimplicialComplex:
    """Two triangle fans glued to one central triangle; standard graded.

    Facets {1,2,3}, {1,2,4}, {1,2,5}, {2,3,6}, {2,3,7}: three triangles
    share the edge {1,2} and two share {2,3}.  A handy positive example —
    it is a quasi-tree without a special odd cycle.
    """
    return new_complex([{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {2, 3, 6}, {2, 3, 7}])


@dataclass(frozen=True)
class GeneratorSeed:
    """Deterministic parameters for :func:`random_quasi_tree`."""

    seed: int
    num_facets: int
    max_facet_size: int

    def __post_init__(self) -> None:
        if self.num_facets < 1:
            raise ValueError("num_facets must be at least 1")
        if self.max_facet_size < 1:
            raise ValueError("max_facet_size must be at least 1")
        if self.num_facets > 1 and self.max_facet_size < 2:
            raise ValueError(
                "size-1 facets cannot attach to each other; "
                "num_facets > 1 needs max_facet_size >= 2"
            )


def random_quasi_tree(g: GeneratorSeed) -> SimplicialComplex:
    """Random quasi-tree, identical for identical seeds.

    Randomness comes from numpy's PCG64 stream, so outputs are stable
    across releases.  Construction attaches one facet at a time: the new
    facet intersects the existing complex inside a single existing facet
    (making it a leaf at attach time) and brings at least one fresh vertex
    (keeping the antichain).  The output is a quasi-tree by construction,
    and every facet size is drawn uniformly from 2..max_facet_size.
    """
    rng = np.random.Generator(np.random.PCG64(g.seed))
    lo = min(2, g.max_facet_size)

    def draw_size() -> int:
        return int(rng.integers(lo, g.max_facet_size + 1))

    first = draw_size()
    facets: list[set[int]] = [set(range(1, first + 1))]
    next_label = first + 1
    while len(facets) < g.num_facets:
        host = facets[int(rng.integers(0, len(facets)))]
        size = draw_size()
        t_max = min(len(host) - 1, size - 1)
        t = int(rng.integers(1, t_max + 1))
        host_sorted = sorted(host)
        picked = rng.choice(len(host_sorted), size=t, replace=False)
        inter = {host_sorted[i] for i in sorted(int(x) for x in picked)}
        fresh = set(range(next_label, next_label + (size - t)))
        next_label += size - t
        facets.append(inter | fresh)
    return new_complex(facets)
