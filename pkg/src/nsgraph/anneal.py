"""Simulated annealing over connected nested split graphs on ``n`` vertices.

The state is a creation sequence with free bits ``c_2 .. c_{n-1}``. Three
neighbourhoods are available:

``hamming``
    flip any one free bit.
``edge``
    flip a free bit at either end, or one that differs from a neighbour
    (moves a single vertex to an index-adjacent cell).
``move``
    move one vertex from cell ``j`` to a cell at most two positions away,
    or split two vertices off an end cell into a new ``(1, 1)`` pair.
"""
from __future__ import annotations

import csv
import io
import math
import random
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable

from .distance import ENERGIES
from .errors import DisconnectedResult, InvalidSequence, NoEdges, NoNeighbors
from .graph import SimpleGraph
from .sequences import (
    CompactCreationSequence,
    CreationSequence,
    as_compact,
    compact_from_full,
    full_from_compact,
    normalize_cells,
)

SCHEMES = ("hamming", "edge", "move")
TIMELINE_FIELDS = ("step", "temperature", "current_energy", "best_energy", "acceptance_rate", "improvement_rate")


@dataclass(frozen=True)
class AnnealState:
    compact: CompactCreationSequence
    bits: tuple
    energy: float | None = None

    @property
    def n(self) -> int:
        return len(self.bits)

    @classmethod
    def from_bits(cls, bits) -> "AnnealState":
        c = CreationSequence(tuple(bits))
        return cls(compact_from_full(c), c.bits)

    @classmethod
    def from_compact(cls, a) -> "AnnealState":
        a = as_compact(a)
        return cls(a, full_from_compact(a).bits)


@dataclass(frozen=True)
class Schedule:
    t0: float = 1e2
    t1: float = 1e-7
    steps: int = 1_000_000

    def __post_init__(self):
        if not (self.t0 > self.t1 > 0):
            raise ValueError(f"need t0 > t1 > 0, got t0={self.t0}, t1={self.t1}")
        if self.steps < 2:
            raise ValueError(f"need at least 2 steps, got {self.steps}")


def temperature(schedule: Schedule, t: int) -> float:
    """Geometric cooling from ``t0`` at step 0 to ``t1`` at step ``steps - 1``."""
    frac = t / (schedule.steps - 1)
    return math.exp(math.log(schedule.t0) + frac * (math.log(schedule.t1) - math.log(schedule.t0)))


def accept(delta_e: float, temp: float, u: float) -> bool:
    if delta_e < 0:
        return True
    return u < math.exp(-delta_e / temp)


# -- neighbourhoods ---------------------------------------------------------


def flip(state: AnnealState, j: int) -> AnnealState:
    """Flip creation-sequence bit ``j`` (1-based, ``2 <= j <= n - 1``)."""
    if not 2 <= j <= state.n - 1:
        raise ValueError(f"flip position {j} outside 2..{state.n - 1}")
    bits = list(state.bits)
    bits[j - 1] ^= 1
    return AnnealState.from_bits(bits)


def hamming_positions(state: AnnealState) -> list[int]:
    return list(range(2, state.n))


def edge_positions(state: AnnealState) -> list[int]:
    c, n = state.bits, state.n
    if n < 3:
        return []
    legal = {2, n - 1}
    for i in range(3, n - 1):
        if c[i - 1] != c[i - 2] or c[i - 1] != c[i]:
            legal.add(i)
    return sorted(legal)


def hamming_neighbors(state: AnnealState) -> list[AnnealState]:
    return [flip(state, j) for j in hamming_positions(state)]


def edge_neighbors(state: AnnealState) -> list[AnnealState]:
    return [flip(state, j) for j in edge_positions(state)]


def _raw_moves(cells: tuple):
    r = len(cells)
    for j in range(r):
        for k in (j - 2, j - 1, j + 1, j + 2):
            if 0 <= k < r:
                raw = list(cells)
                raw[j] -= 1
                raw[k] += 1
                yield raw
    for j in (0, 1):
        if cells[j] >= 2:
            raw = list(cells)
            raw[j] -= 2
            yield [1, 1] + raw
    for j in (r - 2, r - 1):
        if cells[j] >= 2:
            raw = list(cells)
            raw[j] -= 2
            yield raw + [1, 1]


def move_targets(cells: tuple) -> list[tuple]:
    """Distinct valid cell tuples reachable by one move, in enumeration order.

    Moves that normalise to a disconnected code or back to ``cells`` are
    dropped.
    """
    seen = {}
    for raw in _raw_moves(cells):
        try:
            a = normalize_cells(raw)
        except DisconnectedResult:
            continue
        if a != cells:
            seen[a] = None
    return list(seen)


def move_neighbors(state: AnnealState) -> list[AnnealState]:
    return [AnnealState.from_compact(a) for a in move_targets(state.compact.cells)]


def perturb_hamming(state: AnnealState, rng: random.Random) -> AnnealState:
    if state.n < 3:
        raise NoNeighbors("no free bits to flip when n = 2")
    return flip(state, rng.randrange(2, state.n))


def perturb_edge(state: AnnealState, rng: random.Random) -> AnnealState:
    positions = edge_positions(state)
    if not positions:
        raise NoNeighbors("no legal edge flips when n = 2")
    return flip(state, positions[rng.randrange(len(positions))])


def perturb_move(state: AnnealState, rng: random.Random) -> AnnealState:
    targets = move_targets(state.compact.cells)
    if not targets:
        raise NoNeighbors(f"no valid moves from {state.compact}")
    return AnnealState.from_compact(targets[rng.randrange(len(targets))])


PERTURBATIONS: dict[str, Callable] = {
    "hamming": perturb_hamming,
    "edge": perturb_edge,
    "move": perturb_move,
}
NEIGHBORHOODS: dict[str, Callable] = {
    "hamming": hamming_neighbors,
    "edge": edge_neighbors,
    "move": move_neighbors,
}


def initial_state(n: int, rng: random.Random) -> AnnealState:
    if n < 2:
        raise InvalidSequence(f"need at least 2 vertices, got {n}")
    free = [rng.randrange(2) for _ in range(n - 2)]
    return AnnealState.from_bits([0] + free + [1])


# -- the annealing run ------------------------------------------------------


@dataclass(frozen=True)
class TimelineRecord:
    step: int
    temperature: float
    current_energy: float
    best_energy: float
    acceptance_rate: float
    improvement_rate: float


@dataclass
class Timeline:
    records: list = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(TIMELINE_FIELDS)
        for rec in self.records:
            w.writerow([rec.step] + [repr(float(getattr(rec, f))) for f in TIMELINE_FIELDS[1:]])
        return buf.getvalue()

    def column(self, name: str) -> list:
        return [getattr(rec, name) for rec in self.records]


@dataclass(frozen=True)
class AnnealConfig:
    scheme: str = "hamming"
    distance: str = "spectral"
    schedule: Schedule = field(default_factory=Schedule)
    seed: int = 0
    window: int | None = None

    def __post_init__(self):
        if self.scheme not in PERTURBATIONS:
            raise ValueError(f"unknown perturbation scheme {self.scheme!r}; choose from {SCHEMES}")
        if self.distance not in ENERGIES:
            raise ValueError(f"unknown distance {self.distance!r}; choose from {tuple(ENERGIES)}")
        if self.window is not None and self.window < 1:
            raise ValueError("telemetry window must be positive")

    @property
    def window_size(self) -> int:
        if self.window is not None:
            return self.window
        return max(1, self.schedule.steps // 100)


@dataclass(frozen=True)
class AnnealResult:
    best: CompactCreationSequence
    best_energy: float
    timeline: Timeline
    final: CompactCreationSequence
    final_energy: float
    initial: CompactCreationSequence


def anneal(target: SimpleGraph, config: AnnealConfig, energy_cache: int = 1 << 16) -> AnnealResult:
    """Search for the NSG closest to ``target`` under the configured distance.

    Deterministic for a given seed. Energies of visited states are memoised
    (bounded LRU) since the chain revisits states often at low temperature.
    """
    n = target.n
    if n < 3:
        raise NoNeighbors(f"annealing needs at least 3 vertices, got {n}")
    if config.distance == "walk" and target.m == 0:
        raise NoEdges("walk distance needs a target with at least one edge")
    energy_fn = ENERGIES[config.distance](target)
    energy = lru_cache(maxsize=energy_cache)(lambda cells: energy_fn(CompactCreationSequence(cells)))
    perturb = PERTURBATIONS[config.scheme]
    sched = config.schedule
    steps, window = sched.steps, config.window_size
    log_t0 = math.log(sched.t0)
    log_step = (math.log(sched.t1) - log_t0) / (steps - 1)

    rng = random.Random(config.seed)
    state = initial_state(n, rng)
    current = energy(state.compact.cells)
    state = replace(state, energy=current)
    initial = state.compact
    best, best_e = state, current

    timeline = Timeline()
    accepted = improved = in_window = 0
    for t in range(steps):
        temp = math.exp(log_t0 + t * log_step)
        cand = perturb(state, rng)
        e = energy(cand.compact.cells)
        delta_e = e - current
        u = rng.random()
        if delta_e < 0:
            improved += 1
        if accept(delta_e, temp, u):
            accepted += 1
            state, current = replace(cand, energy=e), e
            if current < best_e:
                best, best_e = state, current
        in_window += 1
        if in_window == window or t == steps - 1:
            timeline.records.append(
                TimelineRecord(t, temp, current, best_e, accepted / in_window, improved / in_window)
            )
            accepted = improved = in_window = 0

    return AnnealResult(best.compact, best_e, timeline, state.compact, current, initial)
