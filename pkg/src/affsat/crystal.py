"""Higher-level crystals: tensor words of charged partitions, truncated graph
generation, weight multiplicities, Levi branching and tensor decomposition.

A node of the crystal with highest weight lambda = sum w_i Lambda_i is a word
of level(lambda) charged partitions whose charges are the canonical charge
list of lambda (residue i repeated w_i times, increasing).  Raising and
lowering act through the signature rule over the concatenated word: each
factor contributes its unpaired removables then its unpaired addables, blocks
are cancelled addable-then-removable across factor boundaries, lowering acts
on the factor owning the first surviving addable and raising on the factor
owning the last surviving removable.  For a single factor this degenerates to
the level-1 rule in affsat.fock.

Truncation is exact: lowering coefficients only ever grow along f-edges, so
the breadth-first closure under all f_i within a componentwise budget misses
nothing at the weights it covers.

Generation may expand frontiers with a thread pool; results are a
deterministic function of (lambda, budget) regardless of worker count, and a
finished graph is immutable for all practical purposes and safe to share.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from ._backend import kernels
from .cartan import Weight, lowering_vector
from .errors import ConsistencyError, DomainError, NoHighestWeightError, ResourceCapError
from .fock import ChargedPartition

# Pins the signature and tensor conventions; cached graphs are only reused
# when this matches, so changing a convention invalidates old caches.
CONVENTION_ID = "rowscan-ar-cancel.tensor-concat.charges-asc.v1"

DEFAULT_NODE_CAP = 5_000_000

# A factor is (charge, parts); a word is a tuple of factors.
Factor = tuple[int, tuple[int, ...]]
Word = tuple[Factor, ...]


def canonical_charges(lam: Weight) -> tuple[int, ...]:
    """Charge list of lambda: residue i repeated w_i times, increasing."""
    if any(x < 0 for x in lam.w):
        raise DomainError(f"negative w-part, no charge list: {lam!r}")
    charges = tuple(i for i in range(lam.n) for _ in range(lam.w[i]))
    if not charges:
        raise NoHighestWeightError("level-0 weight has no highest-weight crystal")
    return charges


@dataclass(frozen=True)
class CrystalNode:
    """A tensor word of charged partitions."""

    n: int
    word: Word

    @property
    def factors(self) -> tuple[ChargedPartition, ...]:
        return tuple(ChargedPartition(parts, charge, self.n) for charge, parts in self.word)

    def lowering_counts(self) -> tuple[int, ...]:
        counts = [0] * self.n
        for charge, parts in self.word:
            for j, x in enumerate(kernels.residue_counts(parts, charge, self.n)):
                counts[j] += x
        return tuple(counts)

    def to_json(self) -> list:
        return [{"parts": list(parts), "charge": charge} for charge, parts in self.word]


@dataclass(frozen=True)
class TensorEpsPhi:
    """Word-level signature data: totals plus the factor each operator acts in."""

    eps: int
    phi: int
    position_f: Optional[int]
    position_e: Optional[int]


class _TableCache:
    """Memo of per-factor signature tables, keyed by (charge, parts)."""

    def __init__(self, n: int):
        self.n = n
        self.data: dict[Factor, tuple] = {}

    def get(self, factor: Factor):
        table = self.data.get(factor)
        if table is None:
            charge, parts = factor
            table = kernels.signature_scan(parts, charge, self.n)
            self.data[factor] = table
        return table


def _scan_word(word: Word, i: int, cache: _TableCache):
    """Signature rule across the word at residue i.

    Returns (eps, phi, pos_f, pos_e, add_row, rem_row) where pos_* are the
    factor indices where lowering / raising act (-1 when undefined) and
    *_row the good rows inside those factors.
    """
    return kernels.word_scan([cache.get(factor) for factor in word], i)


def tensor_eps_phi(node: CrystalNode, i: int) -> TensorEpsPhi:
    """Totals eps_i, phi_i of a word and where f_i / e_i would act."""
    cache = _TableCache(node.n)
    eps, phi, pos_f, pos_e, _, _ = _scan_word(node.word, i % node.n, cache)
    return TensorEpsPhi(eps, phi, pos_f if pos_f >= 0 else None, pos_e if pos_e >= 0 else None)


def _word_lower(word: Word, i: int, cache: _TableCache) -> Optional[Word]:
    _, phi, pos_f, _, add_row, _ = _scan_word(word, i, cache)
    if phi == 0:
        return None
    charge, parts = word[pos_f]
    return word[:pos_f] + ((charge, kernels.add_cell(parts, add_row)),) + word[pos_f + 1 :]


def _word_raise(word: Word, i: int, cache: _TableCache) -> Optional[Word]:
    eps, _, _, pos_e, _, rem_row = _scan_word(word, i, cache)
    if eps == 0:
        return None
    charge, parts = word[pos_e]
    return word[:pos_e] + ((charge, kernels.remove_cell(parts, rem_row)),) + word[pos_e + 1 :]


def apply_tensor_operator(node: CrystalNode, i: int, direction: str) -> Optional[CrystalNode]:
    """Word-level f_i / e_i; None at a string end."""
    if direction not in ("lower", "raise"):
        raise DomainError(f'direction must be "lower" or "raise", got {direction!r}')
    cache = _TableCache(node.n)
    op = _word_lower if direction == "lower" else _word_raise
    word = op(node.word, i % node.n, cache)
    return None if word is None else CrystalNode(node.n, word)


class CrystalGraph:
    """Truncated crystal graph: nodes reachable from the highest-weight word
    by f-edges whose lowering stays within the budget."""

    def __init__(self, lam: Weight, budget: tuple[int, ...], charges: tuple[int, ...],
                 words: list[Word], cvecs: list[tuple[int, ...]],
                 edges: dict[tuple[int, int], int]):
        self.lam = lam
        self.n = lam.n
        self.budget = budget
        self.charges = charges
        self.words = words
        self.cvecs = cvecs
        self.edges = edges
        self._weight_counts: Optional[dict[tuple[int, ...], int]] = None

    def __len__(self) -> int:
        return len(self.words)

    def node(self, node_id: int) -> CrystalNode:
        return CrystalNode(self.n, self.words[node_id])

    def weight_of(self, node_id: int) -> Weight:
        c = self.cvecs[node_id]
        return Weight(self.n, self.lam.w, tuple(a + b for a, b in zip(self.lam.c, c)))

    def weight_counts(self) -> dict[tuple[int, ...], int]:
        """Node counts per lowering vector (relative to lambda)."""
        if self._weight_counts is None:
            counts: dict[tuple[int, ...], int] = {}
            for c in self.cvecs:
                counts[c] = counts.get(c, 0) + 1
            self._weight_counts = counts
        return self._weight_counts

    def singular_node_ids(self, i: Optional[int] = None) -> list[int]:
        """Nodes killed by e_i (or by every e_j when i is None)."""
        cache = _TableCache(self.n)
        out = []
        residues = range(self.n) if i is None else (i % self.n,)
        for node_id, word in enumerate(self.words):
            if all(_scan_word(word, j, cache)[0] == 0 for j in residues):
                out.append(node_id)
        return out

    # -- canonical serialization ------------------------------------------

    def _canonical_order(self) -> list[int]:
        return sorted(range(len(self.words)), key=lambda k: self.words[k])

    def to_json_obj(self) -> dict:
        order = self._canonical_order()
        relabel = {old: new for new, old in enumerate(order)}
        nodes = []
        for new, old in enumerate(order):
            nodes.append({
                "id": new,
                "word": CrystalNode(self.n, self.words[old]).to_json(),
                "weight": self.weight_of(old).to_json(),
            })
        edges = sorted(
            ({"from": relabel[a], "i": i, "to": relabel[b]} for (a, i), b in self.edges.items()),
            key=lambda e: (e["from"], e["i"]),
        )
        return {
            "lambda": self.lam.to_json(),
            "budget": list(self.budget),
            "nodes": nodes,
            "edges": edges,
        }

    def to_json_str(self) -> str:
        return canonical_dumps(self.to_json_obj())

    def canonical_digest(self) -> str:
        return hashlib.sha256(self.to_json_str().encode()).hexdigest()

    def to_dot(self) -> str:
        palette = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                   "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f")
        order = self._canonical_order()
        relabel = {old: new for new, old in enumerate(order)}
        lines = ["digraph crystal {", "  rankdir=TB;"]
        for new, old in enumerate(order):
            wt = self.weight_of(old)
            lines.append(f'  n{new} [label="c={list(wt.c)}"];')
        for (a, i), b in sorted(self.edges.items(), key=lambda kv: (relabel[kv[0][0]], kv[0][1])):
            color = palette[i % len(palette)]
            lines.append(
                f'  n{relabel[a]} -> n{relabel[b]} [label="{i}", color="{color}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _validate_budget(n: int, budget) -> tuple[int, ...]:
    budget = tuple(int(x) for x in budget)
    if len(budget) != n:
        raise DomainError(f"budget must have length n={n}")
    if any(x < 0 for x in budget):
        raise DomainError("budget entries must be nonnegative")
    return budget


def _require_dominant(lam: Weight) -> None:
    if not lam.is_dominant():
        raise DomainError(f"highest weight must be dominant: {lam!r} has pairings {lam.pairings()}")


def generate_crystal(lam: Weight, budget, *, node_cap: int = DEFAULT_NODE_CAP,
                     workers: int = 1) -> CrystalGraph:
    """Breadth-first closure of the highest-weight word under all f_i within budget.

    The node set and edge map depend only on (lambda, budget); worker count
    affects scheduling, never results.  Exceeding node_cap raises
    ResourceCapError naming the cap.
    """
    _require_dominant(lam)
    n = lam.n
    budget = _validate_budget(n, budget)
    charges = canonical_charges(lam)
    cache = _TableCache(n)

    hw: Word = tuple((ch, ()) for ch in charges)
    zero = (0,) * n
    words: list[Word] = [hw]
    cvecs: list[tuple[int, ...]] = [zero]
    index: dict[Word, int] = {hw: 0}
    edges: dict[tuple[int, int], int] = {}

    table_data = cache.data

    def expand(node_id: int):
        return kernels.expand_node(words[node_id], cvecs[node_id], budget, n, table_data)

    frontier = [0]
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while frontier:
            if pool is not None:
                per_node = pool.map(expand, frontier, chunksize=64)
                flat = [
                    (parent_id, i, child, cc)
                    for parent_id, children in zip(frontier, per_node)
                    for i, child, cc in children
                ]
            else:
                flat = kernels.expand_level(words, cvecs, frontier, budget, n, table_data)
            next_frontier = []
            for parent_id, i, child, cc in flat:
                child_id = index.get(child)
                if child_id is None:
                    child_id = len(words)
                    if child_id >= node_cap:
                        raise ResourceCapError(node_cap, budget, child_id + 1)
                    index[child] = child_id
                    words.append(child)
                    cvecs.append(cc)
                    next_frontier.append(child_id)
                edges[(parent_id, i)] = child_id
            frontier = next_frontier
    finally:
        if pool is not None:
            pool.shutdown(wait=False)

    return CrystalGraph(lam, budget, charges, words, cvecs, edges)


def weight_multiplicity(lam: Weight, mu: Weight, *, node_cap: int = DEFAULT_NODE_CAP,
                        workers: int = 1) -> int:
    """dim of the mu weight space of the highest-weight module for lambda.

    Counts crystal nodes of weight mu in the graph truncated exactly at the
    lowering vector of mu; zero when mu is not below lambda.
    """
    _require_dominant(lam)
    u = lowering_vector(lam, mu)
    if u is None or any(x < 0 for x in u):
        return 0
    graph = generate_crystal(lam, u, node_cap=node_cap, workers=workers)
    return graph.weight_counts().get(u, 0)


def levi_branching(lam: Weight, mu: Weight, i: int, *, node_cap: int = DEFAULT_NODE_CAP,
                   workers: int = 1) -> dict[int, int]:
    """Multiplicities of the rank-1 restriction at node i.

    m_k counts nodes of weight mu + k alpha_i killed by e_i.  The same table
    is recomputed from weight multiplicities via string counting
    (m_k = max(0, mult(mu + k alpha_i) - mult(mu + (k+1) alpha_i))) and the
    two routes must agree; disagreement raises ConsistencyError.
    """
    _require_dominant(lam)
    i %= lam.n
    u = lowering_vector(lam, mu)
    if u is None or any(x < 0 for x in u):
        return {}
    graph = generate_crystal(lam, u, node_cap=node_cap, workers=workers)
    counts = graph.weight_counts()
    cache = _TableCache(lam.n)

    highest: dict[int, int] = {}
    for node_id, c in enumerate(graph.cvecs):
        k = u[i] - c[i]
        if c[:i] == u[:i] and c[i + 1 :] == u[i + 1 :] and k >= 0:
            if _scan_word(graph.words[node_id], i, cache)[0] == 0:
                highest[k] = highest.get(k, 0) + 1

    for k in range(u[i] + 1):
        at_k = counts.get(u[:i] + (u[i] - k,) + u[i + 1 :], 0)
        above = counts.get(u[:i] + (u[i] - k - 1,) + u[i + 1 :], 0) if k < u[i] else 0
        expected = max(0, at_k - above)
        if highest.get(k, 0) != expected:
            raise ConsistencyError(
                f"branching routes disagree at k={k}: highest-node count "
                f"{highest.get(k, 0)} vs string difference {expected}"
            )
    return {k: m for k, m in sorted(highest.items()) if m > 0}


# -- tensor products -------------------------------------------------------


def _tensor_pairs(lam1: Weight, lam2: Weight, budget, *, node_cap: int,
                  workers: int) -> Iterable[tuple[Word, tuple[int, ...]]]:
    """All concatenated words of the truncated tensor crystal, with combined
    lowering vectors: pairs of nodes from each factor whose total stays
    within budget."""
    g1 = generate_crystal(lam1, budget, node_cap=node_cap, workers=workers)
    g2 = generate_crystal(lam2, budget, node_cap=node_cap, workers=workers)
    by_c1: dict[tuple[int, ...], list[Word]] = {}
    for word, c in zip(g1.words, g1.cvecs):
        by_c1.setdefault(c, []).append(word)
    by_c2: dict[tuple[int, ...], list[Word]] = {}
    for word, c in zip(g2.words, g2.cvecs):
        by_c2.setdefault(c, []).append(word)
    for c1, words1 in sorted(by_c1.items()):
        for c2, words2 in sorted(by_c2.items()):
            total = tuple(a + b for a, b in zip(c1, c2))
            if any(t > b for t, b in zip(total, budget)):
                continue
            for w1 in words1:
                for w2 in words2:
                    yield w1 + w2, total


def tensor_highest_weights(lam1: Weight, lam2: Weight, budget, *,
                           node_cap: int = DEFAULT_NODE_CAP,
                           workers: int = 1) -> dict[Weight, int]:
    """Decomposition multiplicities of a two-factor tensor product within a
    truncation: scans every pair of factor nodes with combined lowering inside
    the budget and tallies the weights of words killed by all e_i."""
    for lam in (lam1, lam2):
        _require_dominant(lam)
        if lam.level < 1:
            raise NoHighestWeightError("tensor factors must have level >= 1")
    if lam1.n != lam2.n:
        raise DomainError("tensor factors must share the rank")
    n = lam1.n
    budget = _validate_budget(n, budget)
    base = lam1 + lam2
    cache = _TableCache(n)
    out: dict[Weight, int] = {}
    for word, total in _tensor_pairs(lam1, lam2, budget, node_cap=node_cap, workers=workers):
        if all(_scan_word(word, i, cache)[0] == 0 for i in range(n)):
            kappa = Weight(n, base.w, tuple(a + b for a, b in zip(base.c, total)))
            out[kappa] = out.get(kappa, 0) + 1
    return out


def tensor_weight_multiplicity(lam1: Weight, lam2: Weight, mu: Weight, *,
                               node_cap: int = DEFAULT_NODE_CAP,
                               workers: int = 1) -> int:
    """Weight multiplicity in the tensor product, as a sum over splittings
    mu = mu1 + mu2 of products of factor multiplicities."""
    for lam in (lam1, lam2):
        _require_dominant(lam)
    if lam1.n != lam2.n:
        raise DomainError("tensor factors must share the rank")
    u = lowering_vector(lam1 + lam2, mu)
    if u is None or any(x < 0 for x in u):
        return 0
    g1 = generate_crystal(lam1, u, node_cap=node_cap, workers=workers)
    g2 = generate_crystal(lam2, u, node_cap=node_cap, workers=workers)
    counts1 = g1.weight_counts()
    counts2 = g2.weight_counts()
    total = 0
    for s in product(*(range(x + 1) for x in u)):
        m1 = counts1.get(s, 0)
        if not m1:
            continue
        rest = tuple(a - b for a, b in zip(u, s))
        total += m1 * counts2.get(rest, 0)
    return total
