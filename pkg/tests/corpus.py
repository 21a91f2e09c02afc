"""Seeded corpora shared by the property and acceptance suites.

All scans are deterministic: seeds are consumed in order and acceptance
depends only on the generated complex, so every run sees the same corpus.
"""

from __future__ import annotations

import itertools

import numpy as np

from qcover import (
    GeneratorSeed,
    find_special_odd_cycle,
    new_complex,
    random_quasi_tree,
)


def build_quasi_tree_corpus(
    count=200, max_facets=6, max_vertices=9, max_facet_size=4, min_with_cycle=8
):
    """Random quasi-trees within the size box, with both verdicts present.

    Complexes containing a special odd cycle are rare under leaf-attachment
    generation (well under 1%), so a second seed stream oversamples them
    until ``min_with_cycle`` positives are in; the equivalence tests still
    run both decision routes on every instance.
    """
    out = []
    for seed in itertools.count():
        num_facets = 1 + seed % max_facets
        cx = random_quasi_tree(GeneratorSeed(seed, num_facets, max_facet_size))
        if cx.vertex_count <= max_vertices:
            out.append(cx)
        if len(out) == count:
            break
    have = sum(1 for cx in out if find_special_odd_cycle(cx) is not None)
    for seed in itertools.count(10_000):
        if have >= min_with_cycle:
            break
        if seed >= 200_000:
            raise RuntimeError("seed scan failed to find cycle-bearing quasi-trees")
        cx = random_quasi_tree(GeneratorSeed(seed, 4 + seed % 3, max_facet_size))
        if cx.vertex_count <= max_vertices and find_special_odd_cycle(cx) is not None:
            out.append(cx)
            have += 1
    return out


def build_small_complex_corpus(count=500, max_facets=5, max_pool=7):
    """Arbitrary small facet antichains, quasi-forests and not.

    Random subsets of a small vertex pool, reduced to their maximal members
    and relabelled densely.
    """
    out = []
    for seed in itertools.count():
        rng = np.random.Generator(np.random.PCG64(seed))
        pool = int(rng.integers(3, max_pool + 1))
        m = int(rng.integers(1, max_facets + 1))
        cand = []
        for _ in range(m):
            size = int(rng.integers(1, min(4, pool) + 1))
            picked = rng.choice(pool, size=size, replace=False)
            cand.append(frozenset(int(v) + 1 for v in picked))
        maximal = [f for f in set(cand) if not any(f < g for g in cand)]
        used = sorted(set().union(*maximal))
        relabel = {v: i + 1 for i, v in enumerate(used)}
        out.append(new_complex([{relabel[v] for v in f} for f in maximal]))
        if len(out) == count:
            return out
