"""Independent brute-force oracles used to pin expected values.

These deliberately share no code paths with the library internals they
check: no memoization, no pruning, no bitmask DP.
"""

import itertools

from domgame.graph import Graph


def naive_game_value(g: Graph, dominated: int = 0, dominator_turn: bool = True) -> int:
    """Plain minimax over legal moves; exponential, for tiny graphs only."""
    moves = [v for v in range(g.n) if g.closed[v] & ~dominated]
    if not moves:
        return 0
    vals = [1 + naive_game_value(g, dominated | g.closed[v], not dominator_turn)
            for v in moves]
    return min(vals) if dominator_turn else max(vals)


def naive_domination_number(g: Graph) -> int:
    """Smallest dominating set by exhaustive subset enumeration."""
    full = g.full_mask
    if g.n == 0:
        return 0
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            covered = 0
            for v in combo:
                covered |= g.closed[v]
            if covered == full:
                return size
    raise AssertionError("unreachable: full vertex set always dominates")


def naive_hamiltonian_endpoints(g: Graph):
    """(exists, endpoint mask) by checking every vertex permutation."""
    if g.n == 0:
        return False, 0
    if g.n == 1:
        return True, 1
    endpoints = 0
    for perm in itertools.permutations(range(g.n)):
        if all(g.has_edge(perm[i], perm[i + 1]) for i in range(g.n - 1)):
            endpoints |= (1 << perm[0]) | (1 << perm[-1])
    return endpoints != 0, endpoints
