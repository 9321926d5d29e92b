"""Batch property suites: every theorem-shaped statement in the package,
run exhaustively over S_n (n <= 4) or on seeded samples (n = 5).

Each suite returns a JSON-able report dict with per-property counts, an
explicit failure list (expected empty), and an overall "pass" flag.  The
suites are deterministic: identical (n, sample, seed) inputs give identical
reports, including the randomized functionals, which are seeded per
interval.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from . import exactlp, parabolic, polytopes, rpoly
from .errors import DomainError
from .intervals import (
    all_maximal_chains,
    interval,
    inversion_minimal_transpositions,
)
from .perms import (
    all_perms,
    bruhat_leq,
    descents,
    format_perm,
    identity,
    length,
)

SUITES = ("lifting", "dimension", "faces", "rpoly", "parabolic", "all")


@lru_cache(maxsize=None)
def comparable_pairs(n: int):
    """All (u, v) with u < v in S_n, lexicographic."""
    perms = all_perms(n)
    return tuple(
        (u, v) for u in perms for v in perms if u != v and bruhat_leq(u, v)
    )


def sampled_pairs(n: int, sample: int, seed: int):
    """Deterministic sample of comparable pairs u < v, drawn by seeded
    rejection from S_n x S_n; repeats are discarded."""
    rng = random.Random(seed)
    perms = all_perms(n)
    out = []
    seen = set()
    while len(out) < sample:
        u = rng.choice(perms)
        v = rng.choice(perms)
        if u != v and (u, v) not in seen and bruhat_leq(u, v):
            seen.add((u, v))
            out.append((u, v))
    return tuple(out)


def _report(suite, n, pairs, counts, failures, extra=None):
    doc = {
        "suite": suite,
        "n": n,
        "pairs": len(pairs),
        "counts": counts,
        "failures": failures,
        "pass": not failures,
    }
    if extra:
        doc.update(extra)
    return doc


def _pair_name(u, v):
    return f"[{format_perm(u)},{format_perm(v)}]"


# ---------------------------------------------------------------------------
# per-pair workers (top level so a process pool can pickle them)
# ---------------------------------------------------------------------------


def lifting_pair(pair):
    u, v = pair
    failures = []
    ts = inversion_minimal_transpositions(u, v)
    if not ts:
        failures.append(f"{_pair_name(u, v)}: no inversion-minimal transposition")
    bad = [t for t in ts if not rpoly.lifting_relations_hold(u, v, t)]
    if bad:
        failures.append(f"{_pair_name(u, v)}: lifting fails for {bad}")
    return {"transpositions": len(ts), "failures": failures}


def dimension_pair(pair):
    u, v = pair
    failures = []
    I = interval(u, v)
    blocks = polytopes.block_partition(u, v)

    chains = all_maximal_chains(I)
    graphs = [polytopes.chain_graph(c) for c in chains]
    if any(g.components() != blocks for g in graphs):
        failures.append(f"{_pair_name(u, v)}: chain partition is chain-dependent")

    ag = polytopes.atom_graph(u, v)
    cg = polytopes.coatom_graph(u, v)
    if not (ag.components() == cg.components() == blocks):
        failures.append(f"{_pair_name(u, v)}: atom/coatom partitions differ")
    if not (
        polytopes.increasing_cycle_free(ag)
        and polytopes.increasing_cycle_free(cg)
    ):
        failures.append(f"{_pair_name(u, v)}: atom/coatom graph has an increasing cycle")

    V = polytopes.vertices(u, v)
    if polytopes.dimension(u, v) != exactlp.affine_rank(V):
        failures.append(f"{_pair_name(u, v)}: dimension != affine rank")

    desc = polytopes.bip_inequalities(u, v)
    inside = frozenset(I.elements)
    wrong = [
        w
        for w in all_perms(len(u))
        if desc.satisfied_by(w) != (w in inside)
    ]
    if wrong:
        failures.append(
            f"{_pair_name(u, v)}: inequality description wrong on {len(wrong)} points"
        )
    return {"chains": len(chains), "failures": failures}


def faces_pair(pair):
    u, v = pair
    failures = []
    I = interval(u, v)
    V = polytopes.vertices(u, v)
    els = sorted(I.elements)
    n = len(u)

    lp_tests = 0
    for x in els:
        for y in els:
            if not bruhat_leq(x, y):
                continue
            crit = polytopes.is_face(x, y, u, v)
            lp = exactlp.is_face(polytopes.vertices(x, y), V)
            lp_tests += 1
            if crit != lp:
                failures.append(
                    f"{_pair_name(u, v)}: criterion {crit} vs LP {lp} on {_pair_name(x, y)}"
                )

    # every oracle-found face is an interval with Bruhat min and max
    witnesses = [
        polytopes.normal_cone(x, y, u, v)[2]
        for x, y, _d in polytopes.enumerate_faces(u, v)
    ]
    rng = random.Random(f"faces:{format_perm(u)},{format_perm(v)}")
    witnesses += [
        tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(20)
    ]
    for w in witnesses:
        F = exactlp.face_vertices(w, V)
        try:
            x, y = polytopes.face_min_max(F)
        except DomainError:
            failures.append(f"{_pair_name(u, v)}: face at {w} has no min/max")
            continue
        if set(F) != set(interval(x, y).elements):
            failures.append(f"{_pair_name(u, v)}: face at {w} is not an interval")

    if polytopes.diameter(u, v) != I.rank:
        failures.append(f"{_pair_name(u, v)}: diameter != rank")
    adj = {z: [] for z in els}
    for x, y in polytopes.skeleton_edges(u, v):
        adj[x].append(y)
        adj[y].append(x)
    for z in els:
        ups = any(length(w) > length(z) for w in adj[z])
        downs = any(length(w) < length(z) for w in adj[z])
        if (z != v and not ups) or (z != u and not downs):
            failures.append(f"{_pair_name(u, v)}: vertex {format_perm(z)} misses an edge")

    if I.rank == 3:
        k = polytopes.crown_type(u, v)
        if polytopes.is_toric(u, v) != (k in (3, 4)):
            failures.append(f"{_pair_name(u, v)}: toric vs {k}-crown mismatch")

    return {"lp_tests": lp_tests, "failures": failures}


def rpoly_pair(pair):
    u, v = pair
    failures = []
    ts = inversion_minimal_transpositions(u, v)
    if not all(rpoly.generalized_r_identity(u, v, t) for t in ts):
        failures.append(f"{_pair_name(u, v)}: generalized recurrence fails")

    r_min = rpoly.r_polynomial(u, v, descent_choice=lambda w: min(descents(w)))
    r_max = rpoly.r_polynomial(u, v, descent_choice=lambda w: max(descents(w)))
    if r_min != r_max:
        failures.append(f"{_pair_name(u, v)}: descent-choice dependent")

    d = length(v) - length(u)
    if not (
        r_min.degree == d
        and r_min.coeffs[-1] == 1
        and r_min.coeffs[0] == (-1) ** d
    ):
        failures.append(f"{_pair_name(u, v)}: degree/leading/constant invariant fails")
    if rpoly.r_from_tilde(u, v) != r_min:
        failures.append(f"{_pair_name(u, v)}: tilde substitution mismatch")
    return {"transpositions": len(ts), "failures": failures}


def parabolic_instance(args):
    u, v, J = args
    failures = []
    rep = parabolic.parabolic_faces_check(u, v, J)
    for key in (
        "all_faces_are_interval_sets",
        "zero_cells_match_cosets",
        "edges_are_cover_pairs",
    ):
        if not rep[key]:
            failures.append(f"{_pair_name(u, v)} J={list(J)}: {key} fails")
    return {"faces": rep["faces_found"], "failures": failures}


def minkowski_pair(pair):
    u, v = pair
    return {
        conv: polytopes.minkowski_check(u, v, conv)
        for conv in ("first-values", "top-positions")
    }


def diameter_pair(pair):
    u, v = pair
    failures = []
    if polytopes.diameter(u, v) != length(v) - length(u):
        failures.append(f"{_pair_name(u, v)}: diameter != rank")
    return {"failures": failures}


def dimension_rank_pair(pair):
    u, v = pair
    failures = []
    if polytopes.dimension(u, v) != exactlp.affine_rank(polytopes.vertices(u, v)):
        failures.append(f"{_pair_name(u, v)}: dimension != affine rank")
    return {"failures": failures}


def _map(worker, items, jobs):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(worker, items, chunksize=8))
    return [worker(item) for item in items]


def _collect(suite, n, pairs, results, count_keys, extra=None):
    counts = {key: sum(r.get(key, 0) for r in results) for key in count_keys}
    failures = [f for r in results for f in r["failures"]]
    return _report(suite, n, pairs, counts, failures, extra)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def suite_lifting(n=4, pairs=None, jobs=1):
    pairs = pairs if pairs is not None else comparable_pairs(n)
    return _collect(
        "lifting", n, pairs, _map(lifting_pair, pairs, jobs), ("transpositions",)
    )


def suite_dimension(n=4, pairs=None, jobs=1):
    pairs = pairs if pairs is not None else comparable_pairs(n)
    return _collect(
        "dimension", n, pairs, _map(dimension_pair, pairs, jobs), ("chains",)
    )


def suite_faces(n=4, pairs=None, jobs=1):
    pairs = pairs if pairs is not None else comparable_pairs(n)
    return _collect("faces", n, pairs, _map(faces_pair, pairs, jobs), ("lp_tests",))


def suite_rpoly(n=4, pairs=None, jobs=1):
    pairs = pairs if pairs is not None else comparable_pairs(n)
    return _collect(
        "rpoly", n, pairs, _map(rpoly_pair, pairs, jobs), ("transpositions",)
    )


def _parabolic_subsets(n):
    out = []
    indices = list(range(1, n))
    for mask in range(1, 1 << len(indices)):
        out.append(tuple(j for b, j in enumerate(indices) if mask >> b & 1))
    return sorted(out, key=lambda J: (len(J), J))


def suite_parabolic(n=4, jobs=1):
    e = identity(n)
    instances = []
    for J in _parabolic_subsets(n):
        for u, v in comparable_pairs(n) + tuple((z, z) for z in all_perms(n)):
            if parabolic.is_min_rep(v, J) and bruhat_leq(u, v):
                instances.append((u, v, J))
    results = _map(parabolic_instance, instances, jobs)
    report = _collect("parabolic", n, instances, results, ("faces",))

    # cross-stratum coincidence: distinct intervals, identical point sets
    if n == 4:
        J = (1, 3)
        same = parabolic.parabolic_bip_vertices(e, (4, 2, 3, 1), J) == \
            parabolic.parabolic_bip_vertices((1, 3, 2, 4), (4, 2, 3, 1), J)
        report["counts"]["coincident_pair_equal"] = int(same)
        if not same:
            report["failures"].append("point sets of (e,4231) and (1324,4231) differ")
            report["pass"] = False
    return report


def minkowski_experiment(n=4, jobs=1):
    """Not a pass/fail suite: records, for both matroid conventions, whether
    the Minkowski sum of the interval matroid polytopes recovers the
    interval polytope."""
    pairs = comparable_pairs(n)
    results = _map(minkowski_pair, pairs, jobs)
    summary = {}
    disagreements = []
    examples = {"first-values": [], "top-positions": []}
    for pair, res in zip(pairs, results):
        for conv, ok in res.items():
            bucket = summary.setdefault(conv, {"equal": 0, "unequal": 0})
            bucket["equal" if ok else "unequal"] += 1
            if not ok and len(examples[conv]) < 5:
                examples[conv].append(_pair_name(*pair))
        if res["first-values"] != res["top-positions"]:
            disagreements.append(_pair_name(*pair))
    return {
        "suite": "minkowski-experiment",
        "n": n,
        "pairs": len(pairs),
        "summary": summary,
        "conventions_disagree_on": len(disagreements),
        "disagreement_examples": disagreements[:5],
        "unequal_examples": examples,
        "pass": True,  # reported, not judged
    }


def suite_sampled(n=5, sample=500, seed=7, jobs=1):
    """The sampled large-n suite: lifting, dimension-vs-rank, generalized
    R-recurrence, and diameter on seeded comparable pairs."""
    pairs = sampled_pairs(n, sample, seed)
    parts = [
        _collect("lifting", n, pairs, _map(lifting_pair, pairs, jobs), ("transpositions",)),
        _collect("dimension", n, pairs, _map(dimension_rank_pair, pairs, jobs), ()),
        _collect("rpoly", n, pairs, _map(rpoly_pair, pairs, jobs), ("transpositions",)),
        _collect("diameter", n, pairs, _map(diameter_pair, pairs, jobs), ()),
    ]
    return {
        "suite": "sampled",
        "n": n,
        "sample": sample,
        "seed": seed,
        "pairs": len(pairs),
        "parts": parts,
        "pass": all(p["pass"] for p in parts),
    }


def run_suite(name, n=4, sample=None, seed=7, jobs=1):
    """CLI entry: run one named suite (or all of them) and return the report."""
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if n > 4 and sample is None:
        raise DomainError(f"exhaustive suites are limited to n <= 4; pass --sample for n={n}")
    if sample is not None:
        pairs = sampled_pairs(n, sample, seed)
        if name == "all":
            return suite_sampled(n, sample, seed, jobs)
        if name == "lifting":
            return suite_lifting(n, pairs, jobs)
        if name == "dimension":
            return _collect("dimension", n, pairs, _map(dimension_rank_pair, pairs, jobs), ())
        if name == "faces":
            return _collect("diameter", n, pairs, _map(diameter_pair, pairs, jobs), ())
        if name == "rpoly":
            return suite_rpoly(n, pairs, jobs)
        raise DomainError(f"suite {name!r} has no sampled mode")
    if name == "lifting":
        return suite_lifting(n, jobs=jobs)
    if name == "dimension":
        return suite_dimension(n, jobs=jobs)
    if name == "faces":
        return suite_faces(n, jobs=jobs)
    if name == "rpoly":
        return suite_rpoly(n, jobs=jobs)
    if name == "parabolic":
        return suite_parabolic(n, jobs=jobs)
    parts = [
        suite_lifting(n, jobs=jobs),
        suite_dimension(n, jobs=jobs),
        suite_faces(n, jobs=jobs),
        suite_rpoly(n, jobs=jobs),
        suite_parabolic(n, jobs=jobs),
        minkowski_experiment(n, jobs=jobs),
    ]
    return {
        "suite": "all",
        "n": n,
        "parts": parts,
        "pass": all(p["pass"] for p in parts),
    }
