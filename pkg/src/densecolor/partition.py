"""Balanced vertex bipartition with pair-splitting and degree balance.

Properties enforced:
  P.1  |A| = |B|
  P.2  each constraint pair contributes one vertex to each side
  P.3  |d_A(v) - d_B(v)| stays within the profile bound for every v

P.1 and P.2 hold by construction (the constraint pairs are extended to a
perfect pairing of V and each pair is split by a coin flip); P.3 is
verified and retried with derived seeds, then improved by local search.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import PipelineFailure


@dataclass(frozen=True)
class PartitionAB:
    a: tuple
    b: tuple
    pairs: tuple          # the constraint pairs that had to be split
    certificate: int      # max over v of |d_A(v) - d_B(v)|

    def side_of(self, v: int) -> str:
        if v in set(self.a):
            return "A"
        if v in set(self.b):
            return "B"
        raise ValueError(f"vertex {v} not in partition")

    def swapped(self) -> "PartitionAB":
        return PartitionAB(self.b, self.a, self.pairs, self.certificate)


def _certificate(g, a_set):
    worst = 0
    for v in g.vertices:
        da = sum(1 for w in g.neighbor_set(v) if w in a_set)
        worst = max(worst, abs(2 * da - g.degree(v)))
    return worst


def extend_to_perfect_pairing(verts, pairs):
    """Greedily pair up the vertices not covered by the constraint pairs."""
    covered = {v for pr in pairs for v in pr}
    rest = [v for v in verts if v not in covered]
    if len(rest) % 2 != 0:
        raise ValueError("odd number of unconstrained vertices")
    full = [tuple(pr) for pr in pairs]
    for i in range(0, len(rest), 2):
        full.append((rest[i], rest[i + 1]))
    return full


def balanced_partition(g, pairs, profile, seed: int) -> PartitionAB:
    verts = g.vertices
    if len(verts) % 2 != 0:
        raise ValueError(f"odd order {len(verts)}")
    flat = [v for pr in pairs for v in pr]
    if len(set(flat)) != len(flat):
        raise ValueError("constraint pairs are not disjoint")
    vset = set(verts)
    for v in flat:
        if v not in vset:
            raise ValueError(f"pair vertex {v} not in graph")
    n = len(verts) // 2
    bound = profile.partition_bound(n, g.max_degree())
    pairing = extend_to_perfect_pairing(verts, pairs)

    best = None
    for r in range(profile.partition_retries):
        rng = random.Random(seed * 1000003 + r)
        a_set = set()
        for (x, y) in pairing:
            if rng.random() < 0.5:
                a_set.add(x)
            else:
                a_set.add(y)
        cert = _certificate(g, a_set)
        if best is None or cert < best[0]:
            best = (cert, set(a_set))
        if cert <= bound:
            break

    cert, a_set = best
    if cert > bound:
        cert, a_set = _local_search(g, pairing, a_set, bound)
    if cert > bound:
        raise PipelineFailure(
            "balanced_partition",
            f"best certificate {cert} exceeds bound {bound}",
        )
    b_set = vset - a_set
    return PartitionAB(
        a=tuple(sorted(a_set)),
        b=tuple(sorted(b_set)),
        pairs=tuple(tuple(pr) for pr in pairs),
        certificate=_certificate(g, a_set),
    )


def _local_search(g, pairing, a_set, bound, max_passes: int = 60):
    """Flip whole pairs while it strictly lowers the certificate."""
    a_set = set(a_set)
    cert = _certificate(g, a_set)
    for _ in range(max_passes):
        if cert <= bound:
            break
        improved = False
        for (x, y) in pairing:
            inside, outside = (x, y) if x in a_set else (y, x)
            a_set.discard(inside)
            a_set.add(outside)
            trial = _certificate(g, a_set)
            if trial < cert:
                cert = trial
                improved = True
            else:
                a_set.discard(outside)
                a_set.add(inside)
        if not improved:
            break
    return cert, a_set
