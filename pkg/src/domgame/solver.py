"""Exact domination game solver.

Memoized adversarial search over dominated-vertex bitmasks.  Dominator
minimizes and Staller maximizes the total number of moves; every move
must newly dominate at least one vertex.  State is (dominated set, turn)
for a fixed graph, so the memo tables key on the raw bit word.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, bits


class Turn(enum.Enum):
    DOMINATOR = "dominator"
    STALLER = "staller"

    def other(self) -> "Turn":
        return Turn.STALLER if self is Turn.DOMINATOR else Turn.DOMINATOR


@dataclass
class SolverConfig:
    pruning: bool = True
    memo_limit: int = 4_000_000
    vertex_cap: int = 26

    def __post_init__(self):
        if self.memo_limit <= 0:
            raise ValueError("memo_limit must be positive")


class MemoLimitExceeded(RuntimeError):
    pass


class VertexCapExceeded(ValueError):
    pass


def legal_moves(g: Graph, dominated: int) -> int:
    """Bitmask of vertices whose play would newly dominate something."""
    return sum(1 << v for v in range(g.n) if g.closed[v] & ~dominated)


def _search(rows, full, s, dom, memo_d, memo_s, prune, limit):
    if s == full:
        return 0
    memo = memo_d if dom else memo_s
    hit = memo.get(s)
    if hit is not None:
        return hit
    succ = {s | r for r in rows}
    succ.discard(s)
    # Dominator tries big gains first, Staller small ones; the sort also
    # feeds the subset filter below.
    order = sorted(succ, key=int.bit_count, reverse=dom)
    if prune and len(order) > 1:
        # Continuation Principle: a successor set that is contained in
        # another is never better for Dominator, never worse for Staller.
        keep = []
        if dom:
            for t in order:
                if not any(t | u == u for u in keep):
                    keep.append(t)
        else:
            for t in order:
                if not any(t & u == u for u in keep):
                    keep.append(t)
        order = keep
    if dom:
        best = min(_search(rows, full, t, False, memo_d, memo_s, prune, limit)
                   for t in order)
    else:
        best = max(_search(rows, full, t, True, memo_d, memo_s, prune, limit)
                   for t in order)
    value = 1 + best
    memo[s] = value
    if len(memo_d) + len(memo_s) > limit:
        raise MemoLimitExceeded(f"memo table exceeded {limit} entries")
    return value


class Solver:
    """One graph, two memo tables (one per turn).  Not thread-shared."""

    def __init__(self, graph: Graph, config: SolverConfig | None = None):
        self.graph = graph
        self.config = config or SolverConfig()
        if graph.n > self.config.vertex_cap:
            raise VertexCapExceeded(
                f"graph order {graph.n} exceeds solver cap {self.config.vertex_cap}")
        self._memo_d = {}
        self._memo_s = {}

    @property
    def states_explored(self) -> int:
        return len(self._memo_d) + len(self._memo_s)

    def game_value(self, dominated: int = 0, turn: Turn = Turn.DOMINATOR) -> int:
        g = self.graph
        if dominated & ~g.full_mask:
            raise ValueError("dominated set contains ids outside the graph")
        return _search(g.closed, g.full_mask, dominated,
                       turn is Turn.DOMINATOR,
                       self._memo_d, self._memo_s,
                       self.config.pruning, self.config.memo_limit)

    def value_with_forced_first_move(self, v: int, dominated: int = 0,
                                     turn: Turn = Turn.DOMINATOR) -> int:
        g = self.graph
        if not 0 <= v < g.n or not g.closed[v] & ~dominated:
            raise ValueError(f"vertex {v} is not a legal move")
        return 1 + self.game_value(dominated | g.closed[v], turn.other())

    def optimal_first_moves(self, dominated: int = 0,
                            turn: Turn = Turn.DOMINATOR) -> int:
        g = self.graph
        moves = legal_moves(g, dominated)
        if not moves:
            raise ValueError("no legal moves: state is fully dominated")
        target = self.game_value(dominated, turn)
        out = 0
        for v in bits(moves):
            if 1 + self.game_value(dominated | g.closed[v], turn.other()) == target:
                out |= 1 << v
        return out


def game_value(g: Graph, dominated: int = 0, turn: Turn = Turn.DOMINATOR,
               config: SolverConfig | None = None) -> int:
    return Solver(g, config).game_value(dominated, turn)


def optimal_first_moves(g: Graph, dominated: int = 0,
                        turn: Turn = Turn.DOMINATOR,
                        config: SolverConfig | None = None) -> int:
    return Solver(g, config).optimal_first_moves(dominated, turn)


def value_with_forced_first_move(g: Graph, v: int, dominated: int = 0,
                                 turn: Turn = Turn.DOMINATOR,
                                 config: SolverConfig | None = None) -> int:
    return Solver(g, config).value_with_forced_first_move(v, dominated, turn)


def domination_number(g: Graph, vertex_cap: int = 26) -> int:
    """Exact domination number by branch and bound on undominated vertices."""
    if g.n > vertex_cap:
        raise VertexCapExceeded(
            f"graph order {g.n} exceeds cap {vertex_cap}")
    if g.n == 0:
        return 0
    full = g.full_mask
    rows = g.closed

    # Greedy incumbent: repeatedly take the vertex covering the most
    # undominated vertices.
    dominated = 0
    greedy = 0
    while dominated != full:
        v = max(range(g.n), key=lambda u: (rows[u] & ~dominated).bit_count())
        dominated |= rows[v]
        greedy += 1
    best = greedy

    max_cover = max(row.bit_count() for row in rows)

    def bb(dominated: int, used: int):
        nonlocal best
        if dominated == full:
            best = min(best, used)
            return
        remaining = (full & ~dominated).bit_count()
        if used + -(-remaining // max_cover) >= best:
            return
        # Branch on the undominated vertex with the fewest coverers.
        target = min(bits(full & ~dominated),
                     key=lambda u: rows[u].bit_count())
        cands = sorted(bits(rows[target]),
                       key=lambda u: -(rows[u] & ~dominated).bit_count())
        for u in cands:
            bb(dominated | rows[u], used + 1)

    bb(0, 0)
    return best
