"""Exhaustive brute-force oracles for structure cuts and g-extra connectivity.

The oracles never answer "no" heuristically: a "no" means every candidate
subset was enumerated. Tripping any budget cap converts the answer into a
partial result carrying the bound proven so far. Subsets are scanned in
canonical lexicographic order over copy indices; with several workers the
scan is statically partitioned by leading index, so the reported witness is
the lexicographically first one regardless of worker count.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .cuts import verify_cut
from .graph import Graph, flood_mask, min_vertex_cut
from .shapes import CutMember, ShapeSpec, StructureCut, enumerate_shape_copies

YES = "yes"
NO = "no"
BUDGET = "budget_exceeded"
NO_CUT = "no_cut_exists"


@dataclass(frozen=True)
class SearchBudget:
    max_members: int = 8
    max_candidates: int = 2_000_000
    max_checks: int = 100_000_000
    time_cap_secs: float = 600.0

    def __post_init__(self) -> None:
        if self.max_members <= 0 or self.max_candidates <= 0 or self.max_checks <= 0:
            raise ValueError("budget caps must be positive")
        if self.time_cap_secs <= 0:
            raise ValueError("time cap must be positive")


def budget_from_env(base: SearchBudget | None = None) -> SearchBudget:
    """Apply the DCN_BUDGET_SECS override to a budget."""
    base = base or SearchBudget()
    secs = os.environ.get("DCN_BUDGET_SECS")
    if secs:
        return SearchBudget(
            base.max_members, base.max_candidates, base.max_checks, float(secs)
        )
    return base


@dataclass
class ScanOutcome:
    status: str
    witness_indices: tuple[int, ...] | None = None
    checks: int = 0
    note: str = ""


@dataclass
class ExistsResult:
    status: str
    witness: StructureCut | None
    checks: int
    copies: int
    note: str = ""


@dataclass
class MinCutResult:
    status: str
    value: int | None
    lower_bound: int
    witness: StructureCut | None
    checks: int
    copies: int
    note: str = ""


@dataclass
class ExtraResult:
    status: str
    value: int | None
    lower_bound: int
    witness: tuple[str, ...] | None
    checks: int
    note: str = ""


@dataclass
class CertifyResult:
    status: str  # certified | refuted | budget_exceeded
    value: int
    lower_bound_proven: int
    witness: StructureCut | None
    checks: int
    note: str = ""


# --- ordinary (single-process) scanning -----------------------------------


def _cuts_after_removal(masks, full: int, removed: int) -> bool:
    alive = full & ~removed
    count = alive.bit_count()
    if count <= 1:
        return True
    seed = alive & -alive
    return flood_mask(masks, alive, seed) != alive


def _extra_after_removal(masks, full: int, removed: int, h: int) -> bool:
    alive = full & ~removed
    if alive == 0:
        return False
    comps = 0
    rest = alive
    while rest:
        seed = rest & -rest
        comp = flood_mask(masks, alive, seed)
        if comp.bit_count() < h + 1:
            return False
        comps += 1
        rest &= ~comp
    return comps >= 2


class _Deadline:
    def __init__(self, seconds: float):
        self.t_end = time.monotonic() + seconds

    def expired(self) -> bool:
        return time.monotonic() > self.t_end


def _scan_size(
    masks,
    full: int,
    unit_masks: list[int],
    size: int,
    mode: str,
    h: int,
    deadline: _Deadline,
    checks_left: int,
    jobs: int,
    progress=None,
) -> ScanOutcome:
    """Scan all index subsets of exactly `size`, lexicographically."""
    n = len(unit_masks)
    if size > n:
        return ScanOutcome(NO, checks=0)
    if jobs > 1 and n - size >= 1 and size >= 2:
        return _scan_size_parallel(
            masks, full, unit_masks, size, mode, h, deadline, checks_left, jobs, progress
        )
    checks = 0
    for combo in combinations(range(n), size):
        removed = 0
        for i in combo:
            removed |= unit_masks[i]
        if mode == "cut":
            hit = _cuts_after_removal(masks, full, removed)
        else:
            hit = _extra_after_removal(masks, full, removed, h)
        checks += 1
        if hit:
            return ScanOutcome(YES, combo, checks)
        if checks >= checks_left:
            return ScanOutcome(BUDGET, None, checks, "check cap reached")
        if checks % 8192 == 0:
            if deadline.expired():
                return ScanOutcome(BUDGET, None, checks, "time cap reached")
            if progress is not None:
                progress(size, checks, comb(n, size))
    return ScanOutcome(NO, None, checks)


def _worker_scan(args) -> tuple[int, tuple[int, ...] | None, int, str]:
    lead, size, checks_cap, t_end = args
    masks = _PAR["masks"]
    full = _PAR["full"]
    unit_masks = _PAR["units"]
    mode = _PAR["mode"]
    h = _PAR["h"]
    n = len(unit_masks)
    base = unit_masks[lead]
    checks = 0
    for combo in combinations(range(lead + 1, n), size - 1):
        removed = base
        for i in combo:
            removed |= unit_masks[i]
        if mode == "cut":
            hit = _cuts_after_removal(masks, full, removed)
        else:
            hit = _extra_after_removal(masks, full, removed, h)
        checks += 1
        if hit:
            return (lead, (lead,) + combo, checks, "")
        if checks >= checks_cap:
            return (lead, None, checks, "check cap reached")
        if checks % 8192 == 0 and time.monotonic() > t_end:
            return (lead, None, checks, "time cap reached")
    return (lead, None, checks, "")


_PAR: dict = {}


def _par_init(masks, full, units, mode, h) -> None:
    _PAR["masks"] = masks
    _PAR["full"] = full
    _PAR["units"] = units
    _PAR["mode"] = mode
    _PAR["h"] = h


def _scan_size_parallel(
    masks, full, unit_masks, size, mode, h, deadline, checks_left, jobs, progress=None
) -> ScanOutcome:
    import multiprocessing as mp

    n = len(unit_masks)
    t_end = deadline.t_end
    tasks = [(lead, size, checks_left, t_end) for lead in range(n - size + 1)]
    total_checks = 0
    witness = None
    note = ""
    ctx = mp.get_context("fork") if hasattr(os, "fork") else mp.get_context()
    with ctx.Pool(jobs, initializer=_par_init, initargs=(masks, full, unit_masks, mode, h)) as pool:
        for lead, combo, checks, wnote in pool.imap(_worker_scan, tasks, chunksize=1):
            total_checks += checks
            if progress is not None:
                progress(size, total_checks, comb(n, size))
            if wnote and not note:
                note = wnote
            if combo is not None:
                witness = combo
                break
            if total_checks >= checks_left:
                note = note or "check cap reached"
                break
            if deadline.expired():
                note = note or "time cap reached"
                break
        pool.terminate()
    if witness is not None:
        return ScanOutcome(YES, witness, total_checks)
    if note:
        return ScanOutcome(BUDGET, None, total_checks, note)
    return ScanOutcome(NO, None, total_checks)


# --- public oracles ---------------------------------------------------------


def _collect_copies(
    g: Graph, shape: ShapeSpec, mode: str, budget: SearchBudget
) -> tuple[list[CutMember], list[int]] | None:
    copies: list[CutMember] = []
    unit_masks: list[int] = []
    for member in enumerate_shape_copies(g, shape, mode):
        copies.append(member)
        m = 0
        for lab in member.vertices:
            m |= 1 << g.id_of(lab)
        unit_masks.append(m)
        if len(copies) > budget.max_candidates:
            return None
    return copies, unit_masks


def exists_cut_of_size(
    g: Graph,
    shape: ShapeSpec,
    mode: str,
    size_bound: int,
    budget: SearchBudget | None = None,
    jobs: int = 1,
    progress=None,
) -> ExistsResult:
    """Is there a cut of at most `size_bound` members? Exhaustive when "no"."""
    from .graph import is_connected

    if not is_connected(g):
        raise ValueError("exists_cut_of_size requires a connected graph")
    if size_bound < 0:
        raise ValueError("size bound must be >= 0")
    budget = budget or SearchBudget()
    if size_bound == 0:
        # the empty set never cuts a connected graph; no enumeration needed
        return ExistsResult(NO, None, 0, 0)
    collected = _collect_copies(g, shape, mode, budget)
    if collected is None:
        return ExistsResult(BUDGET, None, 0, budget.max_candidates, "candidate cap reached")
    copies, unit_masks = collected
    masks = g.adjacency_masks
    full = (1 << g.vertex_count) - 1
    deadline = _Deadline(budget.time_cap_secs)
    total = 0
    for size in range(1, size_bound + 1):
        out = _scan_size(
            masks, full, unit_masks, size, "cut", 0, deadline,
            budget.max_checks - total, jobs, progress,
        )
        total += out.checks
        if out.status == YES:
            members = tuple(copies[i] for i in out.witness_indices)
            return ExistsResult(YES, StructureCut(members, mode), total, len(copies))
        if out.status == BUDGET:
            return ExistsResult(BUDGET, None, total, len(copies), out.note)
    return ExistsResult(NO, None, total, len(copies))


def min_structure_cut(
    g: Graph,
    shape: ShapeSpec,
    mode: str,
    budget: SearchBudget | None = None,
    jobs: int = 1,
    progress=None,
) -> MinCutResult:
    """Smallest cut size, by increasing subset size from 1; witness verified."""
    from .graph import is_connected

    if not is_connected(g):
        raise ValueError("min_structure_cut requires a connected graph")
    budget = budget or SearchBudget()
    collected = _collect_copies(g, shape, mode, budget)
    if collected is None:
        return MinCutResult(BUDGET, None, 0, None, 0, budget.max_candidates,
                            "candidate cap reached")
    copies, unit_masks = collected
    masks = g.adjacency_masks
    full = (1 << g.vertex_count) - 1
    deadline = _Deadline(budget.time_cap_secs)
    total = 0
    for size in range(1, min(budget.max_members, len(copies)) + 1):
        out = _scan_size(
            masks, full, unit_masks, size, "cut", 0, deadline,
            budget.max_checks - total, jobs, progress,
        )
        total += out.checks
        if out.status == YES:
            members = tuple(copies[i] for i in out.witness_indices)
            witness = StructureCut(members, mode)
            report = verify_cut(g, witness, shape, mode)
            if not report.passed:
                raise AssertionError("oracle witness failed independent verification")
            return MinCutResult("certified", size, size, witness, total, len(copies))
        if out.status == BUDGET:
            return MinCutResult(BUDGET, None, size - 1, None, total, len(copies), out.note)
    if budget.max_members >= len(copies):
        return MinCutResult(NO_CUT, None, len(copies), None, total, len(copies),
                            "no subset of all copies disconnects the graph")
    return MinCutResult(BUDGET, None, budget.max_members, None, total, len(copies),
                        "member cap reached")


def certify_min(
    g: Graph,
    shape: ShapeSpec,
    mode: str,
    value: int,
    budget: SearchBudget | None = None,
    witness: StructureCut | None = None,
    jobs: int = 1,
) -> CertifyResult:
    """Certify a predicted minimum: exhaustively refute size value-1, then
    verify a witness of size value (supplied, e.g. a constructed cut, or
    searched)."""
    if value < 1:
        raise ValueError("certified value must be >= 1")
    budget = budget or SearchBudget()
    below = exists_cut_of_size(g, shape, mode, value - 1, budget, jobs)
    if below.status == YES:
        return CertifyResult("refuted", value, 0, below.witness, below.checks,
                             f"found a cut of {len(below.witness.members)} members")
    if below.status == BUDGET:
        return CertifyResult(BUDGET, value, 0, None, below.checks, below.note)
    if witness is None:
        found = exists_cut_of_size(g, shape, mode, value, budget, jobs)
        if found.status == YES:
            witness = found.witness
        elif found.status == BUDGET:
            return CertifyResult(BUDGET, value, value - 1, None,
                                 below.checks + found.checks, found.note)
        else:
            return CertifyResult("refuted", value, value - 1, None,
                                 below.checks + found.checks,
                                 f"no cut of size {value} exists either")
    if len(witness.members) != value:
        return CertifyResult("refuted", value, value - 1, witness, below.checks,
                             f"witness has {len(witness.members)} members, expected {value}")
    report = verify_cut(g, witness, shape, mode)
    if not report.passed:
        return CertifyResult("refuted", value, value - 1, witness, below.checks,
                             "witness failed verification")
    return CertifyResult("certified", value, value - 1, witness, below.checks)


def g_extra_connectivity(
    g: Graph,
    h: int,
    budget: SearchBudget | None = None,
    jobs: int = 1,
    progress=None,
) -> ExtraResult:
    """Minimum |S| with g-S disconnected and every component > h vertices.

    Exhaustive over raw vertex subsets; for h >= 1 sizes start at the
    classical connectivity (any such cut is in particular a vertex cut).
    """
    from .graph import is_connected

    if not is_connected(g):
        raise ValueError("g_extra_connectivity requires a connected graph")
    if h < 0:
        raise ValueError("h must be >= 0")
    budget = budget or SearchBudget()
    n = g.vertex_count
    unit_masks = [1 << i for i in range(n)]
    masks = g.adjacency_masks
    full = (1 << n) - 1
    start = 1 if h == 0 else min_vertex_cut(g)
    deadline = _Deadline(budget.time_cap_secs)
    total = 0
    for size in range(start, n - 1):
        out = _scan_size(
            masks, full, unit_masks, size, "extra", h, deadline,
            budget.max_checks - total, jobs, progress,
        )
        total += out.checks
        if out.status == YES:
            labels = tuple(g.label_of(i) for i in out.witness_indices)
            return ExtraResult("certified", size, size, labels, total)
        if out.status == BUDGET:
            return ExtraResult(BUDGET, None, size - 1, None, total, out.note)
    return ExtraResult(NO_CUT, None, n - 2, None, total,
                       "no qualifying separation exists")
