"""Capacity-bounded non-dominated archive with hypercube-grid crowding.

The archive partitions the objective-space bounding box of its members into
an equal-division grid. Leaders are drawn from sparsely populated cells
(roulette weight occupancy^-beta) and, when the archive overflows, a victim
is evicted from a crowded cell (roulette weight occupancy^+gamma). With
large exponents these recover deterministic min/max cell selection.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .dominance import EvaluatedSolution

__all__ = ["Archive", "GridIndex", "InsertOutcome"]

_DEGENERATE_HALF_WIDTH = 1e-9  # stand-in half range for a flat objective


class InsertOutcome(enum.Enum):
    ADDED = "added"
    REJECTED = "rejected"
    ADDED_WITH_EVICTION = "added_with_eviction"


@dataclass(frozen=True)
class GridIndex:
    """Read-only view of the archive's current hypercube grid.

    ``cell_edges`` has one row per objective holding the divisions+1 cell
    boundaries (inflated beyond the member range); ``occupancy`` maps cell
    coordinates to member counts and sums to the archive size.
    """

    divisions_per_objective: int
    inflation: float
    cell_edges: np.ndarray
    occupancy: dict[tuple[int, ...], int]


class Archive:
    """Single-writer repository of mutually non-dominated solutions."""

    def __init__(
        self,
        capacity: int,
        objective_count: int,
        grid_divisions: int = 7,
        grid_inflation: float = 1.0,
        leader_pressure: float = 2.0,
        delete_pressure: float = 2.0,
    ):
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        if objective_count < 2:
            raise ValueError("objective_count must be >= 2")
        if grid_divisions < 1:
            raise ValueError("grid_divisions must be >= 1")
        if grid_inflation < 0:
            raise ValueError("grid_inflation must be >= 0")
        self.capacity = capacity
        self.objective_count = objective_count
        self.grid_divisions = grid_divisions
        self.grid_inflation = grid_inflation
        self.leader_pressure = leader_pressure
        self.delete_pressure = delete_pressure

        # one spare row so an overflowing insert can land before eviction
        rows = capacity + 1
        self._objectives = np.empty((rows, objective_count))
        self._violations = np.empty(rows)
        self._positions: np.ndarray | None = None  # allocated on first insert
        self._cells = np.empty((rows, objective_count), dtype=np.intp)
        self._cell_ids = np.empty(rows, dtype=np.intp)
        self._radix = grid_divisions ** np.arange(objective_count, dtype=np.intp)
        self._cell_counts = np.zeros(grid_divisions ** objective_count, dtype=np.intp)
        self._grid_lo = np.zeros(objective_count)
        self._grid_width = np.ones(objective_count)
        self._size = 0

    def __len__(self) -> int:
        return self._size

    @property
    def members(self) -> list[EvaluatedSolution]:
        """Snapshot of the archive as evaluated solutions."""
        return [self._solution_at(i) for i in range(self._size)]

    def objectives_array(self) -> np.ndarray:
        return self._objectives[: self._size].copy()

    def positions_array(self) -> np.ndarray:
        if self._positions is None:
            return np.empty((0, 0))
        return self._positions[: self._size].copy()

    def violations_array(self) -> np.ndarray:
        return self._violations[: self._size].copy()

    @property
    def grid(self) -> GridIndex:
        edges = self._grid_lo[:, None] + self._grid_width[:, None] * np.arange(
            self.grid_divisions + 1
        )
        occupancy: dict[tuple[int, ...], int] = {}
        for i in range(self._size):
            key = tuple(int(c) for c in self._cells[i])
            occupancy[key] = occupancy.get(key, 0) + 1
        return GridIndex(
            divisions_per_objective=self.grid_divisions,
            inflation=self.grid_inflation,
            cell_edges=edges,
            occupancy=occupancy,
        )

    def rebuild_grid(self) -> GridIndex:
        """Recompute cell edges and member assignments from scratch."""
        if self._size == 0:
            raise ValueError("cannot build a grid over an empty archive")
        self._rebuild()
        return self.grid

    def cell_of(self, objectives) -> tuple[int, ...]:
        """Cell coordinates the given objective vector falls into."""
        f = np.asarray(objectives, dtype=float)
        cell = ((f - self._grid_lo) / self._grid_width).astype(np.intp)
        np.clip(cell, 0, self.grid_divisions - 1, out=cell)
        return tuple(int(c) for c in cell)

    def select_leader(self, rng, pressure: float | None = None) -> EvaluatedSolution:
        """Draw a member, favoring sparsely populated grid cells.

        Cells are chosen by roulette with weight occupancy^-pressure, then a
        member of the winning cell is chosen uniformly.
        """
        if self._size == 0:
            raise ValueError("cannot select a leader from an empty archive")
        beta = self.leader_pressure if pressure is None else pressure
        cid = self._roulette_cell(rng, -float(beta))
        in_cell = np.flatnonzero(self._cell_ids[: self._size] == cid)
        pick = in_cell[rng.integers(in_cell.shape[0])]
        return self._solution_at(int(pick))

    def insert(self, candidate: EvaluatedSolution, rng) -> InsertOutcome:
        """Offer a candidate to the archive.

        Rejected when an existing member constrained-dominates it or an
        identical solution is already stored. Otherwise members it dominates
        are dropped, the candidate is added, and on overflow one member of a
        crowded cell (never the candidate itself) is evicted. The grid is
        rebuilt after every change.
        """
        obj = np.asarray(candidate.objectives, dtype=float)
        pos = np.asarray(candidate.position, dtype=float)
        vio = float(candidate.violation)
        if obj.shape != (self.objective_count,):
            raise ValueError("candidate objective count does not match the archive")

        m = self._size
        if m > 0:
            O = self._objectives[:m]
            V = self._violations[:m]
            P = self._positions[:m]
            duplicate = (O == obj).all(axis=1) & (P == pos).all(axis=1)
            if duplicate.any():
                return InsertOutcome.REJECTED
            feasible = V == 0.0
            if vio == 0.0:
                dominated_by = feasible & (O <= obj).all(axis=1) & (O < obj).any(axis=1)
                if dominated_by.any():
                    return InsertOutcome.REJECTED
                kills = ~feasible | (
                    feasible & (obj <= O).all(axis=1) & (obj < O).any(axis=1)
                )
            else:
                dominated_by = feasible | (V < vio)
                if dominated_by.any():
                    return InsertOutcome.REJECTED
                kills = V > vio
            if kills.any():
                self._compact(~kills)

        self._append(pos, obj, vio)
        self._rebuild()
        if self._size <= self.capacity:
            return InsertOutcome.ADDED
        self._evict(rng, protected=self._size - 1)
        self._rebuild()
        return InsertOutcome.ADDED_WITH_EVICTION

    # -- internals ---------------------------------------------------------

    def _solution_at(self, i: int) -> EvaluatedSolution:
        return EvaluatedSolution(
            position=self._positions[i].copy(),
            objectives=self._objectives[i].copy(),
            violation=float(self._violations[i]),
        )

    def _append(self, pos: np.ndarray, obj: np.ndarray, vio: float) -> None:
        if self._positions is None:
            self._positions = np.empty((self.capacity + 1, pos.shape[0]))
        m = self._size
        self._positions[m] = pos
        self._objectives[m] = obj
        self._violations[m] = vio
        self._size = m + 1

    def _compact(self, keep: np.ndarray) -> None:
        k = int(keep.sum())
        self._positions[:k] = self._positions[: self._size][keep]
        self._objectives[:k] = self._objectives[: self._size][keep]
        self._violations[:k] = self._violations[: self._size][keep]
        self._size = k

    def _rebuild(self) -> None:
        m = self._size
        O = self._objectives[:m]
        mins = O.min(axis=0)
        maxs = O.max(axis=0)
        flat = maxs == mins
        if flat.any():
            mins = np.where(flat, mins - _DEGENERATE_HALF_WIDTH, mins)
            maxs = np.where(flat, maxs + _DEGENERATE_HALF_WIDTH, maxs)
        span = maxs - mins
        margin = self.grid_inflation * span / self.grid_divisions
        lo = mins - margin
        width = (span + 2.0 * margin) / self.grid_divisions
        cells = ((O - lo) / width).astype(np.intp)
        np.clip(cells, 0, self.grid_divisions - 1, out=cells)
        self._grid_lo = lo
        self._grid_width = width
        self._cells[:m] = cells
        ids = cells @ self._radix
        self._cell_ids[:m] = ids
        self._cell_counts = np.bincount(ids, minlength=self._cell_counts.shape[0])

    def _roulette_cell(self, rng, exponent: float, counts: np.ndarray | None = None) -> int:
        if counts is None:
            counts = self._cell_counts
        nonempty = np.flatnonzero(counts)
        if nonempty.shape[0] == 1:
            rng.random()  # keep stream consumption independent of occupancy
            return int(nonempty[0])
        occ = counts[nonempty].astype(float)
        # normalize so every weight is <= 1 and huge pressures cannot overflow
        ref = occ.min() if exponent < 0 else occ.max()
        weights = (occ / ref) ** exponent
        cum = np.cumsum(weights)
        u = rng.random() * cum[-1]
        idx = int(np.searchsorted(cum, u, side="right"))
        return int(nonempty[min(idx, nonempty.shape[0] - 1)])

    def _evict(self, rng, protected: int) -> None:
        m = self._size
        # cells holding only the just-inserted candidate are not targets
        counts = self._cell_counts.copy()
        counts[self._cell_ids[protected]] -= 1
        cid = self._roulette_cell(rng, self.delete_pressure, counts=counts)
        in_cell = np.flatnonzero(self._cell_ids[:m] == cid)
        in_cell = in_cell[in_cell != protected]
        victim = int(in_cell[rng.integers(in_cell.shape[0])])
        keep = np.ones(m, dtype=bool)
        keep[victim] = False
        self._compact(keep)
