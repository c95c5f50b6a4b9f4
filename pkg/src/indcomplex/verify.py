"""Exhaustive desk-scale verification sweeps.

Proved statements (the main reduction theorem, the reduced-Euler-
characteristic bound) are hard checks: a failure is an
implementation bug and lands in ``checks_failed``.  Open conjectures run
in report mode: a violation is a research finding, recorded in
``flagged`` with a full counterexample, never masked as a crash.

The labeled-graph space on n vertices is the range of edge bitmasks
[0, 2^C(n,2)); shards split it by fixed ranges and merge by tally
addition, so sweeps parallelize trivially.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from multiprocessing import Pool
from typing import Callable, Iterator, Optional

from .complexes import (graph_betti_vector, independence_complex,
                        lemma_path_matchings, matching_is_valid,
                        collapse_matchings,
                        reduced_euler_characteristic_by_counts)
from .formats import graph_to_graph6
from .graphs import (Graph, PathWitness, bits, complete_bipartite,
                     cycle_graph, popcount)
from .homology import BettiVector, is_sphere_like
from .reduction import reduce_graph, replay_trace

LABELED_SWEEP_CAP = 7
DEDUP_SWEEP_CAP = 8
SUBGRAPH_SWEEP_CAP = 6
KNN_CAP = 4
CYCLE_TABLE_CAP = 14


@dataclass
class SweepReport:
    """Tallies and counterexamples of one (shard of a) verification sweep."""

    kind: str
    n: int
    graphs_examined: int = 0
    class_no_cycle_div3: int = 0
    class_no_induced_cycle_div3: int = 0
    checks_passed: int = 0
    checks_failed: int = 0
    flagged: int = 0
    counterexamples: list = field(default_factory=list)
    seconds: float = 0.0
    details: dict = field(default_factory=dict)

    def merge(self, other: "SweepReport") -> "SweepReport":
        if (self.kind, self.n) != (other.kind, other.n):
            raise ValueError("cannot merge reports of different sweeps")
        self.graphs_examined += other.graphs_examined
        self.class_no_cycle_div3 += other.class_no_cycle_div3
        self.class_no_induced_cycle_div3 += other.class_no_induced_cycle_div3
        self.checks_passed += other.checks_passed
        self.checks_failed += other.checks_failed
        self.flagged += other.flagged
        self.counterexamples += other.counterexamples
        self.seconds += other.seconds
        for k, v in other.details.items():
            self.details.setdefault(k, v)
        return self

    def finish(self) -> "SweepReport":
        self.counterexamples.sort(key=lambda c: c.get("graph6", ""))
        return self

    @property
    def ok(self) -> bool:
        return self.checks_failed == 0 and self.flagged == 0

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "graphs_examined": self.graphs_examined,
            "class_no_cycle_div3": self.class_no_cycle_div3,
            "class_no_induced_cycle_div3": self.class_no_induced_cycle_div3,
            "checks_passed": self.checks_passed,
            "checks_failed": self.checks_failed,
            "flagged": self.flagged,
            "counterexamples": self.counterexamples,
            "seconds": round(self.seconds, 3),
            "details": self.details,
        }


# -- labeled and isomorphism-reduced enumeration -----------------------

def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def _adj_from_mask(n: int, mask: int, pairs: list[tuple[int, int]]) -> list[int]:
    adj = [0] * n
    while mask:
        low = mask & -mask
        i, j = pairs[low.bit_length() - 1]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        mask ^= low
    return adj


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    return Graph.from_adjacency_masks(tuple(_adj_from_mask(n, mask, _pairs(n))))


def edge_mask_of(g: Graph) -> int:
    mask = 0
    for k, (i, j) in enumerate(_pairs(g.n)):
        if g.adj[i] >> j & 1:
            mask |= 1 << k
    return mask


def canonical_edge_mask(n: int, mask: int) -> int:
    """Least edge mask over all vertex relabelings (brute force over n!)."""
    pairs = _pairs(n)
    pair_index = {p: k for k, p in enumerate(pairs)}
    edges = [pairs[b] for b in bits(mask)]
    best = mask
    for perm in permutations(range(n)):
        m = 0
        for i, j in edges:
            a, b = perm[i], perm[j]
            m |= 1 << pair_index[(a, b) if a < b else (b, a)]
        if m < best:
            best = m
    return best


def enumerate_graphs(n: int, dedup: bool = False) -> Iterator[Graph]:
    """All labeled graphs on n vertices, or one per isomorphism class."""
    cap = DEDUP_SWEEP_CAP if dedup else LABELED_SWEEP_CAP
    if n > cap:
        raise ValueError(f"enumeration capped at {cap} vertices (dedup={dedup})")
    pairs = _pairs(n)
    seen: set[int] = set()
    for mask in range(1 << len(pairs)):
        if dedup:
            canon = canonical_edge_mask(n, mask)
            if canon in seen:
                continue
            seen.add(canon)
        yield Graph.from_adjacency_masks(tuple(_adj_from_mask(n, mask, pairs)))


def _has_triangle(adj: list[int]) -> bool:
    for v, m in enumerate(adj):
        rest = m >> (v + 1) << (v + 1)
        while rest:
            low = rest & -rest
            if m & adj[low.bit_length() - 1]:
                return True
            rest ^= low
    return False


# -- sharding / parallel driver ----------------------------------------

def _shard_range(total: int, shards: int, shard: int) -> tuple[int, int]:
    if not 0 <= shard < shards:
        raise ValueError(f"shard {shard} outside 0..{shards - 1}")
    per = -(-total // shards)
    return min(shard * per, total), min((shard + 1) * per, total)


def _run_mask_sweep(scan: Callable[[int, int, int], SweepReport], n: int,
                    shards: int, shard: int, workers: int) -> SweepReport:
    start = time.perf_counter()
    lo, hi = _shard_range(1 << len(_pairs(n)), shards, shard)
    if workers <= 1 or hi - lo < 2 * workers:
        report = scan(n, lo, hi)
    else:
        step = -(-(hi - lo) // workers)
        chunks = [(n, lo + k * step, min(lo + (k + 1) * step, hi))
                  for k in range(workers)]
        with Pool(workers) as pool:
            parts = pool.starmap(scan, chunks)
        report = parts[0]
        for part in parts[1:]:
            report.merge(part)
    report.seconds = time.perf_counter() - start
    return report.finish()


# -- theorem sweep -----------------------------------------------------

def check_engine_against_oracle(g: Graph) -> tuple[bool, dict]:
    """Engine result vs independent homology oracle for one class graph.

    Checks: the engine does not answer Unknown, its type matches the
    Smith-normal-form classification of Ind(g), the reduced Euler
    characteristic agrees with the independent-set count formula, and the
    recorded trace replays to the engine's answer.
    """
    t, trace = reduce_graph(g)
    bv = graph_betti_vector(g)
    cls = is_sphere_like(bv)
    info = {"engine": str(t), "betti": bv.to_dict(), "oracle": cls.kind}
    if t.kind == "unknown":
        return False, {**info, "reason": "engine returned Unknown on a class graph"}
    if t.kind == "contractible":
        ok = cls.kind == "trivial"
        expected_chi = 0
    else:
        ok = cls.kind == "sphere" and cls.dim == t.dim
        expected_chi = -1 if t.dim % 2 else 1
    if not ok:
        return False, {**info, "reason": "engine type disagrees with oracle"}
    if bv.chi != expected_chi:
        return False, {**info, "reason": "betti chi inconsistent with engine type"}
    if reduced_euler_characteristic_by_counts(g) != bv.chi:
        return False, {**info, "reason": "count formula chi disagrees with betti chi"}
    if replay_trace(trace) != t:
        return False, {**info, "reason": "trace does not replay to the result"}
    return True, info


def _theorem_scan(n: int, lo: int, hi: int) -> SweepReport:
    report = SweepReport("theorem", n)
    pairs = _pairs(n)
    for mask in range(lo, hi):
        report.graphs_examined += 1
        adj = _adj_from_mask(n, mask, pairs)
        if _has_triangle(adj):
            continue
        g = Graph.from_adjacency_masks(tuple(adj))
        if g.has_cycle_div3():
            continue
        report.class_no_cycle_div3 += 1
        ok, info = check_engine_against_oracle(g)
        if ok:
            report.checks_passed += 1
        else:
            report.checks_failed += 1
            report.counterexamples.append({"graph6": graph_to_graph6(g), **info})
    return report


def check_theorem(n: int, shards: int = 1, shard: int = 0,
                  workers: int = 1) -> SweepReport:
    """Engine vs oracle over every labeled graph on n vertices in the class."""
    if n > LABELED_SWEEP_CAP:
        raise ValueError(f"theorem sweep capped at {LABELED_SWEEP_CAP} vertices")
    return _run_mask_sweep(_theorem_scan, n, shards, shard, workers)


# -- induced-subgraph conjecture sweeps --------------------------------

def _chi_of_all_induced_subgraphs(n: int, adj: list[int]) -> list[int]:
    """Reduced Euler characteristic of Ind of every induced subgraph.

    Signed independence indicators, then a subset-sum transform: entry S
    is chi-tilde of the subgraph induced on S.
    """
    size = 1 << n
    s = [0] * size
    s[0] = 1
    for mask in range(1, size):
        low = mask & -mask
        prev = mask ^ low
        sp = s[prev]
        if sp and not adj[low.bit_length() - 1] & prev:
            s[mask] = -sp
    for v in range(n):
        bit = 1 << v
        for mask in range(size):
            if mask & bit:
                s[mask] += s[mask ^ bit]
    return [-x for x in s]


def _conjecture2_scan(n: int, lo: int, hi: int) -> SweepReport:
    report = SweepReport("c2", n)
    pairs = _pairs(n)
    for mask in range(lo, hi):
        report.graphs_examined += 1
        adj = _adj_from_mask(n, mask, pairs)
        g = Graph.from_adjacency_masks(tuple(adj))
        has_icd3 = g.has_induced_cycle_div3()
        if not has_icd3:
            report.class_no_induced_cycle_div3 += 1
        chis = _chi_of_all_induced_subgraphs(n, adj)
        bounded = all(-1 <= chi <= 1 for chi in chis)
        if bounded == (not has_icd3):
            report.checks_passed += 1
        else:
            report.checks_failed += 1
            report.counterexamples.append({
                "graph6": graph_to_graph6(g),
                "reason": "chi bound holds" if bounded else "chi bound fails",
                "has_induced_cycle_div3": has_icd3,
            })
    return report


def check_conjecture2(n: int, shards: int = 1, shard: int = 0,
                      workers: int = 1) -> SweepReport:
    """Both directions of the proved reduced-Euler-characteristic bound."""
    if n > SUBGRAPH_SWEEP_CAP:
        raise ValueError(f"induced-subgraph sweeps capped at {SUBGRAPH_SWEEP_CAP}")
    return _run_mask_sweep(_conjecture2_scan, n, shards, shard, workers)


_betti_memo: dict[tuple[int, int], BettiVector] = {}


_BETTI_MEMO_MAX_N = 6  # memo stays small: at most sum of 2^C(k,2), k <= 6


def _betti_by_key(k: int, emask: int) -> BettiVector:
    if k > _BETTI_MEMO_MAX_N:
        return graph_betti_vector(graph_from_edge_mask(k, emask))
    key = (k, emask)
    bv = _betti_memo.get(key)
    if bv is None:
        bv = graph_betti_vector(graph_from_edge_mask(k, emask))
        _betti_memo[key] = bv
    return bv


def _induced_edge_key(adj: list[int], subset: int) -> tuple[int, int]:
    verts = list(bits(subset))
    emask = 0
    k = 0
    for apos in range(len(verts)):
        va = adj[verts[apos]]
        for bpos in range(apos + 1, len(verts)):
            if va >> verts[bpos] & 1:
                emask |= 1 << k
            k += 1
    return len(verts), emask


def _open_conjecture_scan(kind: str, n: int, lo: int, hi: int) -> SweepReport:
    report = SweepReport(kind, n)
    pairs = _pairs(n)
    for mask in range(lo, hi):
        report.graphs_examined += 1
        adj = _adj_from_mask(n, mask, pairs)
        g = Graph.from_adjacency_masks(tuple(adj))
        has_icd3 = g.has_induced_cycle_div3()
        if not has_icd3:
            report.class_no_induced_cycle_div3 += 1
        witness = None
        all_good = True
        for subset in range(1 << n):
            bv = _betti_by_key(*_induced_edge_key(adj, subset))
            if kind == "c3":
                bad = bv.total > 1 or bv.has_torsion
            else:
                bad = is_sphere_like(bv).kind == "other"
            if bad:
                all_good = False
                witness = subset
                break
        if all_good == (not has_icd3):
            report.checks_passed += 1
        else:
            report.flagged += 1
            report.counterexamples.append({
                "graph6": graph_to_graph6(g),
                "has_induced_cycle_div3": has_icd3,
                "violating_subset": sorted(bits(witness)) if witness is not None else None,
            })
    return report


def _conjecture3_scan(n: int, lo: int, hi: int) -> SweepReport:
    return _open_conjecture_scan("c3", n, lo, hi)


def _conjecture4_scan(n: int, lo: int, hi: int) -> SweepReport:
    return _open_conjecture_scan("c4", n, lo, hi)


def check_conjecture3(n: int, shards: int = 1, shard: int = 0,
                      workers: int = 1) -> SweepReport:
    """Total Betti number at most one on all induced subgraphs (open: report mode)."""
    if n > SUBGRAPH_SWEEP_CAP:
        raise ValueError(f"induced-subgraph sweeps capped at {SUBGRAPH_SWEEP_CAP}")
    return _run_mask_sweep(_conjecture3_scan, n, shards, shard, workers)


def check_conjecture4(n: int, shards: int = 1, shard: int = 0,
                      workers: int = 1) -> SweepReport:
    """Sphere-or-contractible on all induced subgraphs (open: report mode).

    Only the homology-level shadow of the statement is machine-checked
    here; the report says so explicitly.
    """
    if n > SUBGRAPH_SWEEP_CAP:
        raise ValueError(f"induced-subgraph sweeps capped at {SUBGRAPH_SWEEP_CAP}")
    report = _run_mask_sweep(_conjecture4_scan, n, shards, shard, workers)
    report.details["evidence"] = ("homology-level evidence only: sphere "
                                  "classification by reduced Betti numbers "
                                  "and torsion, not homotopy type")
    return report


# -- the complete-bipartite face count ---------------------------------

def knn_sphere_count(n: int) -> int:
    """Number of vertex subsets of K_{n,n} inducing sphere homology.

    Matches the face count (2^n - 1)^2 + 1 of the product of two
    simplices: nonempty faces, plus the empty subgraph whose complex is
    the (-1)-sphere.
    """
    if n > KNN_CAP:
        raise ValueError(f"K_nn sweep capped at n={KNN_CAP}")
    g = complete_bipartite(n, n)
    adj = list(g.adj)
    count = 0
    for subset in range(1 << (2 * n)):
        bv = _betti_by_key(*_induced_edge_key(adj, subset))
        if is_sphere_like(bv).kind == "sphere":
            count += 1
    return count


# -- the cycle table ---------------------------------------------------

def cycle_homotopy_table(l_max: int) -> SweepReport:
    """Ind(C_l) for l = 3..l_max: oracle Betti vector, engine type when
    the length is not divisible by three, and the wedge-of-two-spheres
    shape when it is."""
    if l_max > CYCLE_TABLE_CAP:
        raise ValueError(f"cycle table capped at l_max={CYCLE_TABLE_CAP}")
    report = SweepReport("cycles", l_max)
    rows = []
    for length in range(3, l_max + 1):
        g = cycle_graph(length)
        report.graphs_examined += 1
        bv = graph_betti_vector(g)
        row = {"l": length, "betti": bv.to_dict(), "engine": None}
        if length % 3 == 0:
            nz = bv.nonzero()
            ok = (bv.total == 2 and len(nz) == 1 and not bv.has_torsion)
            t, _ = reduce_graph(g)
            row["engine"] = str(t)
            ok = ok and t.kind == "unknown"
        else:
            t, _ = reduce_graph(g)
            row["engine"] = str(t)
            cls = is_sphere_like(bv)
            ok = (t.kind == "sphere" and cls.kind == "sphere"
                  and cls.dim == t.dim)
        ok = ok and reduced_euler_characteristic_by_counts(g) == bv.chi
        if ok:
            report.checks_passed += 1
        else:
            report.checks_failed += 1
            report.counterexamples.append({"graph6": graph_to_graph6(g), **row})
        rows.append(row)
    report.details["rows"] = rows
    return report.finish()


# -- lemma-level property sweeps ---------------------------------------

def _betti_of(g: Graph) -> BettiVector:
    return _betti_by_key(g.n, edge_mask_of(g))


def _torsion_dims(bv: BettiVector) -> set[int]:
    return {i - 1 for i, t in enumerate(bv.torsion) if t}


def _same_homology(a: BettiVector, b: BettiVector) -> bool:
    """Equal reduced homology (the complexes may differ in dimension)."""
    return (dict(a.nonzero()) == dict(b.nonzero())
            and _torsion_dims(a) == _torsion_dims(b))


def _suspension_shift_holds(big: BettiVector, small: BettiVector) -> bool:
    """big equals small shifted up one dimension, torsion included."""
    shifted = {d + 1: b for d, b in small.nonzero()}
    if dict(big.nonzero()) != shifted:
        return False
    return _torsion_dims(big) == {d + 1 for d in _torsion_dims(small)}


def _all_path_witnesses(g: Graph) -> list[PathWitness]:
    out = []
    for b in range(g.n):
        if popcount(g.adj[b]) != 2:
            continue
        for c in bits(g.adj[b] >> (b + 1) << (b + 1)):
            if popcount(g.adj[c]) != 2:
                continue
            a = next(bits(g.adj[b] & ~(1 << c)))
            d = next(bits(g.adj[c] & ~(1 << b)))
            if a == d:
                continue
            out.append(PathWitness(a, b, c, d, bool(g.adj[a] >> d & 1)))
    return out


def _random_graph(rng: random.Random, n: int, p: float) -> list[list[int]]:
    edges = [[u, v] for u, v in combinations(range(n), 2) if rng.random() < p]
    return edges


def _random_fold_instance(rng: random.Random, n: int) -> tuple[Graph, int, int]:
    edges = {tuple(e) for e in _random_graph(rng, n, 0.3)}
    u, v = rng.sample(range(n), 2)
    edges.discard((min(u, v), max(u, v)))
    g0 = Graph(n, edges)
    for w in bits(g0.adj[u]):
        if w != v:
            edges.add((min(v, w), max(v, w)))
    return Graph(n, edges), u, v


def _random_path_instance(rng: random.Random, n: int,
                          ends_adjacent: bool) -> tuple[Graph, PathWitness]:
    base = n - 2
    edges = {tuple(e) for e in _random_graph(rng, base, 0.3)}
    x, y = rng.sample(range(base), 2)
    key = (min(x, y), max(x, y))
    if ends_adjacent:
        edges.add(key)
    else:
        edges.discard(key)
    b, c = base, base + 1
    edges |= {(x, b), (b, c), (c, y)}
    g = Graph(n, edges)
    return g, PathWitness(x, b, c, y, ends_adjacent)


def _lemma_report(kind: str, exhaustive_max: int, samples: int,
                  sample_sizes: tuple[int, ...], seed: int,
                  check: Callable[[Graph], list[tuple[bool, str]]],
                  sample: Callable[[random.Random], Graph | tuple]) -> SweepReport:
    start = time.perf_counter()
    report = SweepReport(kind, exhaustive_max)
    for k in range(exhaustive_max + 1):
        pairs = _pairs(k)
        for mask in range(1 << len(pairs)):
            g = Graph.from_adjacency_masks(tuple(_adj_from_mask(k, mask, pairs)))
            report.graphs_examined += 1
            for ok, reason in check(g):
                if ok:
                    report.checks_passed += 1
                else:
                    report.checks_failed += 1
                    report.counterexamples.append(
                        {"graph6": graph_to_graph6(g), "reason": reason})
    rng = random.Random(seed)
    for _ in range(samples):
        inst = sample(rng)
        g = inst[0] if isinstance(inst, tuple) else inst
        report.graphs_examined += 1
        for ok, reason in (check(g) if not isinstance(inst, tuple)
                           else check(*inst)):
            if ok:
                report.checks_passed += 1
            else:
                report.checks_failed += 1
                report.counterexamples.append(
                    {"graph6": graph_to_graph6(g), "reason": reason})
    report.details["samples"] = samples
    report.details["sample_sizes"] = list(sample_sizes)
    report.seconds = time.perf_counter() - start
    return report.finish()


def check_fold_invariance(exhaustive_max: int = 7, samples: int = 10000,
                          sample_sizes: tuple[int, ...] = (8, 9, 10),
                          seed: int = 20260823) -> SweepReport:
    """Deleting a dominating vertex never changes the Betti vector."""

    def check(g: Graph, u: Optional[int] = None,
              v: Optional[int] = None) -> list[tuple[bool, str]]:
        if u is not None:
            witnesses = [(u, v)]
        else:
            witnesses = [(a, b) for a in range(g.n) for b in range(g.n)
                         if a != b and g.adj[a] & ~g.adj[b] == 0
                         and not g.adj[a] >> b & 1]
        if not witnesses:
            return []
        big = _betti_of(g)
        out = []
        for a, b in witnesses:
            small = _betti_of(g.delete_vertices({b}))
            out.append((_same_homology(big, small),
                        f"fold at ({a},{b}) changed homology"))
        return out

    def sample(rng: random.Random):
        return _random_fold_instance(rng, rng.choice(sample_sizes))

    return _lemma_report("lemma_fold", exhaustive_max, samples, sample_sizes,
                         seed, check, sample)


def _shift_check_factory(ends_adjacent: bool):
    def check(g: Graph, witness: Optional[PathWitness] = None
              ) -> list[tuple[bool, str]]:
        if witness is not None:
            witnesses = [witness]
        else:
            witnesses = [w for w in _all_path_witnesses(g)
                         if w.ends_adjacent == ends_adjacent]
        if not witnesses:
            return []
        big = _betti_of(g)
        out = []
        for w in witnesses:
            if ends_adjacent:
                small = _betti_of(g.delete_vertices(w.vertices))
                name = "square"
            else:
                small = _betti_of(g.contract_path(w))
                name = "path"
            out.append((_suspension_shift_holds(big, small),
                        f"{name} lemma shift fails at {w.vertices}"))
        return out

    return check


def check_path_shift(exhaustive_max: int = 7, samples: int = 10000,
                     sample_sizes: tuple[int, ...] = (8, 9),
                     seed: int = 20260824) -> SweepReport:
    """Contracting a degree-two path with non-adjacent ends shifts homology
    up by exactly one dimension (a suspension)."""

    def sample(rng: random.Random):
        return _random_path_instance(rng, rng.choice(sample_sizes), False)

    return _lemma_report("lemma_path", exhaustive_max, samples, sample_sizes,
                         seed, _shift_check_factory(False), sample)


def check_square_shift(exhaustive_max: int = 7, samples: int = 10000,
                       sample_sizes: tuple[int, ...] = (8, 9),
                       seed: int = 20260825) -> SweepReport:
    """Deleting a degree-two path with adjacent ends shifts homology up by
    exactly one dimension."""

    def sample(rng: random.Random):
        return _random_path_instance(rng, rng.choice(sample_sizes), True)

    return _lemma_report("lemma_square", exhaustive_max, samples, sample_sizes,
                         seed, _shift_check_factory(True), sample)


def check_matching_validity(exhaustive_max: int = 7, samples: int = 10000,
                            sample_sizes: tuple[int, ...] = (8,),
                            seed: int = 20260826,
                            collapse_betti_max: int = 6) -> SweepReport:
    """The two explicit path-rule matchings are valid collapses.

    Checks both matchings for pairwise disjointness, mutual disjointness,
    and downward closure of the remainder; on small instances also that
    removing them preserves the Betti vector.
    """

    def check(g: Graph, witness: Optional[PathWitness] = None
              ) -> list[tuple[bool, str]]:
        witnesses = ([witness] if witness is not None else
                     [w for w in _all_path_witnesses(g) if not w.ends_adjacent])
        if not witnesses:
            return []
        k = independence_complex(g)
        out = []
        for w in witnesses:
            m, nn = lemma_path_matchings(g, w)
            ok = matching_is_valid(k, m) and matching_is_valid(k, nn)
            if ok and m.matched_faces() & nn.matched_faces():
                ok = False
            if ok:
                remainder = collapse_matchings(k, m, nn)
                ok = all(f - {x} in remainder.faces
                         for f in remainder.faces for x in f)
                if ok and g.n <= collapse_betti_max:
                    ok = _same_homology(remainder.betti_vector(), _betti_of(g))
            out.append((ok, f"matching validity fails at {w.vertices}"))
        return out

    def sample(rng: random.Random):
        return _random_path_instance(rng, rng.choice(sample_sizes), False)

    return _lemma_report("lemma_matching", exhaustive_max, samples,
                         sample_sizes, seed, check, sample)
