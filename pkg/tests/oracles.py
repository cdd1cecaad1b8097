"""Slow, independent reference checks used by the tests."""

from itertools import permutations

from linquot.monomial import colon, divides


def pairwise_tables(gens):
    """colon[a][b] = gens[a] : gens[b], and which of those are variables."""
    r = len(gens)
    col = [[colon(gens[a], gens[b]) for b in range(r)] for a in range(r)]
    lin = [[col[a][b].degree == 1 for b in range(r)] for a in range(r)]
    return col, lin


def permutation_is_lq(perm, col, lin):
    """Pairwise criterion on a permutation of generator indices."""
    for pi in range(1, len(perm)):
        i = perm[pi]
        for pj in range(pi):
            j = perm[pj]
            if not any(
                lin[perm[ph]][i] and divides(col[perm[ph]][i], col[j][i]) for ph in range(pi)
            ):
                return False
    return True


def lq_ordering_exists(ideal):
    """Try every permutation of the generators."""
    gens = list(ideal.generators)
    col, lin = pairwise_tables(gens)
    return any(permutation_is_lq(p, col, lin) for p in permutations(range(len(gens))))
