"""Fixed-point predicates, attracting-set component counts, symplectic-leaf
stratum labels and tensor fixed-point splittings for the affine type-A
dictionary between weight data and gauge-theory dimension vectors.

Every operation here is a thin combinatorial layer over the crystal engine:
a fixed point exists iff the weight space is nonzero, attracting components
are counted by the weight multiplicity, leaves are labelled by a dominant
weight kappa between mu and lambda - |k| delta together with a partition k,
and tensor fixed points are the weight splittings with nonzero factors.
Pure functions; determinism is owned by affsat.crystal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from . import crystal
from .cartan import Weight, lowering_vector
from .errors import DomainError


@dataclass(frozen=True)
class Stratum:
    """Label (kappa, k) of one symplectic leaf.

    regular_locus_empty records the level-1 caveat: the regular locus of the
    leaf with kappa != mu is empty when the total framing dimension is 1.
    """

    kappa: Weight
    k: tuple[int, ...]
    regular_locus_empty: bool

    def to_json(self) -> dict:
        return {
            "kappa": self.kappa.to_json(),
            "k": list(self.k),
            "regular_locus_empty": self.regular_locus_empty,
        }


def _partitions_of(size: int):
    """All partitions of `size` as weakly decreasing tuples, lexicographically."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], remaining: int, largest: int):
        if remaining == 0:
            out.append(prefix)
            return
        for p in range(min(remaining, largest), 0, -1):
            rec(prefix + (p,), remaining - p, p)

    rec((), size, size)
    return sorted(out)


def fixed_point_count(lam: Weight, mu: Weight, *, node_cap: Optional[int] = None) -> int:
    """1 when mu is a weight of the module for lambda, else 0."""
    kwargs = {"node_cap": node_cap} if node_cap is not None else {}
    return 1 if crystal.weight_multiplicity(lam, mu, **kwargs) > 0 else 0


def attracting_component_count(lam: Weight, mu: Weight, *, node_cap: Optional[int] = None) -> int:
    """Number of attracting-set components over the fixed point: the weight
    multiplicity."""
    kwargs = {"node_cap": node_cap} if node_cap is not None else {}
    return crystal.weight_multiplicity(lam, mu, **kwargs)


def enumerate_leaves(lam: Weight, mu: Weight, include_empty: bool = False) -> list[Stratum]:
    """All stratum labels (kappa, k) with mu <= kappa <= lambda - |k| delta.

    kappa runs over dominant weights lambda - sum c_i alpha_i with
    0 <= c <= v, and k over partitions with |k| <= min_i c_i.  Strata whose
    regular locus is empty (total framing dimension 1 and kappa != mu) are
    kept only when include_empty is set.  Sorted by height of lambda - kappa,
    then by the lowering vector, then by k.
    """
    if not lam.is_dominant():
        raise DomainError(f"lambda must be dominant: {lam!r}")
    v = lowering_vector(lam, mu)
    if v is None or any(x < 0 for x in v):
        raise DomainError("mu must be lambda lowered by a nonnegative root-lattice vector")
    level_one = lam.level == 1
    strata = []
    for c in product(*(range(x + 1) for x in v)):
        kappa = Weight(lam.n, lam.w, tuple(a + b for a, b in zip(lam.c, c)))
        if not kappa.is_dominant():
            continue
        empty_flag = level_one and c != tuple(v)
        if empty_flag and not include_empty:
            continue
        for size in range(min(c) + 1):
            for k in _partitions_of(size):
                strata.append((sum(c), c, k, Stratum(kappa, k, empty_flag)))
    strata.sort(key=lambda item: item[:3])
    return [item[3] for item in strata]


def tensor_fixed_points(lam1: Weight, lam2: Weight, mu: Weight, *,
                        node_cap: Optional[int] = None) -> list[tuple[Weight, Weight]]:
    """Splittings mu = mu1 + mu2 with both factor multiplicities nonzero.

    Nonempty exactly when mu is a weight of the tensor product.  Sorted by
    the lowering vector of mu1.
    """
    for lam in (lam1, lam2):
        if not lam.is_dominant():
            raise DomainError(f"tensor factors must be dominant: {lam!r}")
    if lam1.n != lam2.n:
        raise DomainError("tensor factors must share the rank")
    u = lowering_vector(lam1 + lam2, mu)
    if u is None or any(x < 0 for x in u):
        return []
    kwargs = {"node_cap": node_cap} if node_cap is not None else {}
    g1 = crystal.generate_crystal(lam1, u, **kwargs)
    g2 = crystal.generate_crystal(lam2, u, **kwargs)
    counts1 = g1.weight_counts()
    counts2 = g2.weight_counts()
    out = []
    for s in product(*(range(x + 1) for x in u)):
        rest = tuple(a - b for a, b in zip(u, s))
        if counts1.get(s, 0) > 0 and counts2.get(rest, 0) > 0:
            mu1 = Weight(lam1.n, lam1.w, tuple(a + b for a, b in zip(lam1.c, s)))
            mu2 = Weight(lam2.n, lam2.w, tuple(a + b for a, b in zip(lam2.c, rest)))
            out.append((mu1, mu2))
    return out


@dataclass(frozen=True)
class BranchRow:
    """One row of the rank-1 multiplicity table at stratum weight kappa'."""

    k: int
    kappa_prime: Weight
    pairing: int
    multiplicity: int


def sheaf_multiplicity_table(lam: Weight, mu: Weight, i: int) -> list[BranchRow]:
    """Levi branching of (lam, mu) at node i, rows labelled by
    kappa' = mu + k alpha_i with the rank-1 weight <kappa', h_i>.

    Tables at mu and mu - alpha_i agree at common kappa' (both count the same
    e_i-killed nodes); that stability is exercised by the test suite.
    """
    i %= lam.n
    table = crystal.levi_branching(lam, mu, i)
    rows = []
    for k in sorted(table):
        kappa_prime = mu.plus_alpha(i, k)
        rows.append(BranchRow(k, kappa_prime, kappa_prime.pairing(i), table[k]))
    return rows
