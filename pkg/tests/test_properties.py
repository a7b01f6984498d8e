"""Structural property sweeps: order axioms, graph symmetry, bijections,
enumeration counts. These re-derive everything from first principles rather
than trusting individual functions."""

import itertools
import math

from flagorbits.perms import (
    enumerate_involutions,
    fixed_points,
    involution_count,
    is_involution,
    two_cycles,
    w0,
)
from flagorbits.bruhat import bruhat_leq, interval, max_rank, rank
from flagorbits.orbit_graph import neighbors
from flagorbits.geometry import neighbor_variable, slice_vars


def test_bruhat_is_a_partial_order():
    # reflexive, antisymmetric, transitive — exhaustive over S_m, m <= 5
    for m in range(1, 6):
        perms = list(itertools.permutations(range(1, m + 1)))
        idx = {p: k for k, p in enumerate(perms)}
        up = [0] * len(perms)
        for u in perms:
            bits = 0
            for v in perms:
                if bruhat_leq(u, v):
                    bits |= 1 << idx[v]
            up[idx[u]] = bits
        for u in perms:
            ku = idx[u]
            assert up[ku] >> ku & 1  # reflexive
            for v in perms:
                kv = idx[v]
                if up[ku] >> kv & 1:
                    # transitivity: everything above v is above u
                    assert up[kv] & ~up[ku] == 0
                    if up[kv] >> ku & 1:
                        assert u == v  # antisymmetry


def test_bruhat_extremes():
    for m in range(1, 6):
        ident = tuple(range(1, m + 1))
        top = w0(m)
        for p in itertools.permutations(range(1, m + 1)):
            assert bruhat_leq(ident, p)
            assert bruhat_leq(p, top)


def test_graph_symmetric_and_loop_free():
    for m in range(1, 7):
        nbr = {pi: neighbors(pi).neighbors for pi in enumerate_involutions(m)}
        for pi, ns in nbr.items():
            assert pi not in ns
            for v in ns:
                assert is_involution(v)
                assert pi in nbr[v]


def test_neighbor_variable_is_a_bijection():
    for n in range(1, 5):
        verts = neighbors(w0(2 * n)).neighbors
        image = [neighbor_variable(v, n) for v in sorted(verts)]
        assert len(image) == len(set(image)) == n * n
        assert set(image) == set(slice_vars(n))


def test_involution_enumeration_counts():
    # I(m) = I(m-1) + (m-1) I(m-2), seeded I(0) = I(1) = 1
    counts = [1, 1]
    for m in range(2, 13):
        counts.append(counts[m - 1] + (m - 1) * counts[m - 2])
    for m in range(1, 13):
        assert involution_count(m) == counts[m]
    for m in range(1, 9):
        invs = enumerate_involutions(m)
        assert len(invs) == counts[m]
        assert len(set(invs)) == len(invs)
        assert invs == sorted(invs)
        for pi in invs:
            assert is_involution(pi)


def test_involution_count_against_cycle_type_formula():
    # sum over k pairs of m! / (k! 2^k (m-2k)!)
    for m in range(1, 13):
        total = sum(
            math.factorial(m)
            // (math.factorial(k) * 2**k * math.factorial(m - 2 * k))
            for k in range(m // 2 + 1)
        )
        assert involution_count(m) == total


def test_cycle_decomposition_partitions_positions():
    for m in range(1, 7):
        for pi in enumerate_involutions(m):
            pairs = two_cycles(pi)
            fixed = fixed_points(pi)
            seen = set(fixed)
            for a, b in pairs:
                assert a < b and pi[a - 1] == b and pi[b - 1] == a
                seen |= {a, b}
            assert seen == set(range(1, m + 1))
            assert len(fixed) + 2 * len(pairs) == m


def test_rank_within_bounds_and_top_bottom():
    for m in range(1, 8):
        for pi in enumerate_involutions(m):
            r = rank(pi)
            assert 0 <= r <= max_rank(m)
        assert rank(w0(m)) == 0
        assert rank(tuple(range(1, m + 1))) == max_rank(m)


def test_interval_membership_agrees_with_leq():
    for m in range(1, 6):
        invs = enumerate_involutions(m)
        for pi in invs:
            iv = interval(pi)
            for v in invs:
                assert (v in iv) == bruhat_leq(pi, v)
