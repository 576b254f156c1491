"""Tunable thresholds for the coloring pipeline.

All thresholds are functions of n, the half-order of the input graph
(|V| = 2n).  Two named profiles exist:

* "paper"  -- the literal asymptotic constants.  They only have force for
  astronomically large n; on small instances several of them are vacuous
  or outright infeasible, and this profile fails loudly in those cases.
* "desk"   -- same machinery with slack rescaled so instances with a few
  dozen to a few hundred vertices go through.  This is the default.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class ConstantsProfile:
    name: str
    epsilon: float = 0.2
    strict: bool = False        # enforce literal bounds / fail instead of adapt
    partition_retries: int = 64
    pipeline_retries: int = 8

    # -- literal thresholds ---------------------------------------------

    def s_threshold(self, n: int) -> float:
        """Deficiency above which a vertex joins the augmentation set S."""
        return 7.0 * n ** (2.0 / 3.0)

    def side_relocation_threshold(self, n: int, k: int) -> float:
        """Degree bound below which an S-vertex needs pair relocation."""
        return k - 2.0 * n ** (2.0 / 3.0)

    def good_edge_cap(self, n: int) -> float:
        """Residual-degree bound defining good (safely uncolorable) edges."""
        return n ** (5.0 / 6.0)

    def residual_size_cap(self, n: int) -> float:
        return 12.0 * n ** (5.0 / 3.0)

    def case_threshold(self, n: int) -> float:
        """Splits the driver's two reduction cases (and condition (c))."""
        return n ** (6.0 / 7.0)

    # -- profile-scaled quantities --------------------------------------

    def partition_bound(self, n: int, delta: int) -> int:
        """Max allowed |d_A(v) - d_B(v)| for the balanced partition."""
        literal = math.ceil(n ** (2.0 / 3.0)) - 1
        if self.strict:
            return max(literal, 1)
        concentration = 3 * math.ceil(math.sqrt(max(delta, 1) * math.log(max(2 * n, 2))))
        return max(literal, concentration, 1)

    def matching_cap(self, n: int) -> int:
        """Size cap for each matching in the deficiency-multigraph partition.

        Larger caps mean fewer spanning forests and less degree erosion,
        which is what small instances need; the desk profile therefore
        allows caps up to n/6.
        """
        literal = math.floor(self.epsilon * n / 5.0)
        if self.strict:
            return max(literal, 1)
        return max(literal, 2, n // 6)

    def ell(self, n: int, residual_max_degree: int, headroom: int) -> int:
        """Number of fresh colors for the residual side edges.

        `headroom` is Delta(G*) - k, the colors not yet spoken for.  The
        literal value is ceil(2 n^{5/6}); the desk profile shrinks it to
        what the residual multigraphs actually need, and always leaves at
        least one color for the final bipartite finish.
        """
        literal = math.ceil(2.0 * n ** (5.0 / 6.0))
        if self.strict:
            return literal
        need = max(1, 2 * residual_max_degree - 1)
        return max(1, min(literal, need, headroom - 1))


def paper_profile(epsilon: float = 0.2) -> ConstantsProfile:
    return ConstantsProfile(name="paper", epsilon=epsilon, strict=True)


def desk_profile(epsilon: float = 0.2) -> ConstantsProfile:
    return ConstantsProfile(name="desk", epsilon=epsilon, strict=False)


def get_profile(name: str, epsilon: float = 0.2) -> ConstantsProfile:
    if name == "paper":
        return paper_profile(epsilon)
    if name == "desk":
        return desk_profile(epsilon)
    raise ValueError(f"unknown profile {name!r}")


def with_epsilon(profile: ConstantsProfile, epsilon: float) -> ConstantsProfile:
    return replace(profile, epsilon=epsilon)
