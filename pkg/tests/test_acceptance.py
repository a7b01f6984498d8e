"""End-to-end acceptance suite.

Each test covers one numbered criterion and prints a single pass line on
success (visible with ``pytest -s``); a failed assertion marks the criterion
red. Oracles here are written from scratch so they do not share code paths
with the library internals they check.
"""

import itertools
import random
import sys
import time
from fractions import Fraction

from flagorbits.perms import (
    enumerate_involutions,
    format_perm,
    identity,
    parse_perm,
    w0,
)
from flagorbits.bruhat import bruhat_leq, interval, max_rank, rank
from flagorbits.orbit_graph import neighbors, w0_degree
from flagorbits.geometry import (
    attractiveness_check,
    expected_weights,
    flag_matrix,
    monomial_claim,
    neighbor_variable,
    orbit_of_flag,
    slice_gram,
    slice_ideal,
    slice_vars,
    specialize_basis,
    variable_weight,
)
from flagorbits.poly import Poly
from flagorbits.smoothness import (
    RATIONALLY_SINGULAR,
    sweep,
    sweep_records,
    verify_known_cases,
)


def _report(num: int, label: str) -> None:
    print(f"ACCEPTANCE {num} ({label}): pass", file=sys.stderr)


def test_criterion_1_case_regression():
    start = time.perf_counter()
    checklist = verify_known_cases()
    elapsed = time.perf_counter() - start
    failures = [(r.item, r.label) for r in checklist.results if not r.passed]
    assert checklist.all_passed, failures
    assert {r.item for r in checklist.results} == {"a", "b", "c", "d", "e"}
    assert elapsed < 120, f"case regression took {elapsed:.1f}s"
    _report(1, "case regression")


# -- independent oracles for criterion 2 -------------------------------------

def _oracle_leq(u, v):
    su, sv = [], []
    for a, b in zip(u, v):
        su.append(a)
        sv.append(b)
        su.sort()
        sv.sort()
        if any(x > y for x, y in zip(su, sv)):
            return False
    return True


def _oracle_rank(pi):
    m = len(pi)
    total = m * m // 4
    for i in range(1, m + 1):
        j = pi[i - 1]
        if i < j:
            crossing = sum(1 for k in range(i + 1, j) if pi[k - 1] < i)
            total -= (j - i) - crossing
    return total


def _oracle_neighbors(mu):
    m = len(mu)
    out = set()
    for a in range(1, m):
        for b in range(a + 1, m + 1):
            nu = list(mu)
            nu[a - 1], nu[b - 1] = nu[b - 1], nu[a - 1]
            for k in range(m):
                if nu[k] == a:
                    nu[k] = b
                elif nu[k] == b:
                    nu[k] = a
            nu = tuple(nu)
            if nu != mu:
                out.add(nu)
            elif m % 2 == 0:
                swapped = list(mu)
                swapped[a - 1], swapped[b - 1] = swapped[b - 1], swapped[a - 1]
                out.add(tuple(swapped))
    out.discard(mu)
    return out


def test_criterion_2_m4_table():
    start = time.perf_counter()
    expected_rank = {
        "1234": 4, "2134": 3, "1324": 3, "1243": 3, "2143": 2,
        "3214": 2, "1432": 2, "4231": 1, "3412": 1, "4321": 0,
    }
    invs = enumerate_involutions(4)
    assert len(invs) == 10
    singular = []
    for pi in invs:
        assert rank(pi) == _oracle_rank(pi) == expected_rank[format_perm(pi)]
        # interval degree of w0, recomputed from the oracles alone
        members = {v for v in invs if _oracle_leq(pi, v)}
        deg = len(_oracle_neighbors(w0(4)) & members)
        assert deg == w0_degree(pi)
        if deg > _oracle_rank(pi):
            singular.append(format_perm(pi))
    assert singular == ["2143"]
    elapsed = time.perf_counter() - start
    assert elapsed < 1, f"m=4 table took {elapsed:.2f}s"
    _report(2, "exhaustive m=4 table vs oracle")


def test_criterion_3_coherence_sweep():
    for m in (2, 4, 6, 8):
        rep = sweep(m, threads=None)
        assert rep.pattern_singular_degree_smooth == [], (
            m, rep.pattern_singular_degree_smooth)
        if m == 8:
            assert rep.elapsed < 30, f"m=8 sweep took {rep.elapsed:.1f}s"
        if rep.pattern_avoiding_degree_singular:
            # conjecture direction: report, never fail
            names = [format_perm(p) for p in rep.pattern_avoiding_degree_singular]
            print(f"warning: m={m} degree-singular but pattern-avoiding: {names}",
                  file=sys.stderr)
    _report(3, "coherence sweep m in {2,4,6,8}")


def test_criterion_4_graph_endpoints():
    for m in (2, 4, 6, 8):
        assert w0_degree(identity(m)) == (m // 2) ** 2
        assert w0_degree(w0(m)) == 0
    _report(4, "graph endpoint identities")


def test_criterion_5_slice_verification():
    start = time.perf_counter()
    for n in (1, 2, 3):
        m = 2 * n
        g = slice_gram(n)
        for i in range(m):
            for j in range(m):
                assert g[i][j] == g[j][i]
                if i + j + 2 > m + 1:
                    assert g[i][j].is_zero()
                if i + j + 2 == m + 1:
                    assert g[i][j] == Poly.const(1)
        weights = sorted(variable_weight(v, n) for v in slice_vars(n))
        assert weights == expected_weights(n)
        assert len(set(slice_vars(n))) == n * n
        assert attractiveness_check(n)
        for pi in enumerate_involutions(m):
            if w0_degree(pi) != rank(pi):
                continue
            ideal = slice_ideal(pi, n)
            assert len(ideal) == max_rank(m) - rank(pi)
            for v, _poly in ideal:
                assert monomial_claim(pi, v, n)
    ideal = {neighbor_variable(v, 2): poly
             for v, poly in slice_ideal((3, 4, 1, 2), 2)}
    assert set(ideal) == {(1, 4), (1, 3), (2, 3)}
    for var, poly in ideal.items():
        terms = list(poly.terms.items())
        assert len(terms) == 1
        (mono, coeff), = terms
        assert mono == ((var, 1),)
        assert coeff != 0
    elapsed = time.perf_counter() - start
    assert elapsed < 60, f"slice verification took {elapsed:.1f}s"
    _report(5, "slice verification n in {1,2,3}")


def test_criterion_6_flag_orbit_oracle():
    for m in range(2, 9):
        ident = flag_matrix(
            [[1 if i == j else 0 for j in range(m)] for i in range(m)]
        )
        assert orbit_of_flag(ident) == w0(m)
    rng = random.Random(20260824)
    for n in (1, 2, 3):
        hits = 0
        for _ in range(20):
            vals = {
                v: Fraction(rng.randint(1, 40), rng.randint(1, 9))
                for v in slice_vars(n)
            }
            if orbit_of_flag(specialize_basis(n, vals)) == identity(2 * n):
                hits += 1
        assert hits == 20, f"n={n}: only {hits}/20 generic points were open"
    flag = specialize_basis(2, {(3, 4): Fraction(1)})
    assert orbit_of_flag(flag) == (3, 4, 1, 2)
    _report(6, "flag orbit oracle")


def test_criterion_7_property_suites():
    # order axioms, exhaustive through m=5
    for m in range(1, 6):
        perms = list(itertools.permutations(range(1, m + 1)))
        rel = {(u, v) for u in perms for v in perms if bruhat_leq(u, v)}
        for u in perms:
            assert (u, u) in rel
        for u, v in rel:
            if (v, u) in rel:
                assert u == v
            for w in perms:
                if (v, w) in rel:
                    assert (u, w) in rel
    # adjacency symmetry through m=6
    for m in range(1, 7):
        nbr = {pi: neighbors(pi).neighbors for pi in enumerate_involutions(m)}
        for pi, ns in nbr.items():
            assert pi not in ns
            assert all(pi in nbr[v] for v in ns)
    # neighbor/variable bijection through n=4
    for n in range(1, 5):
        verts = neighbors(w0(2 * n)).neighbors
        image = {neighbor_variable(v, n) for v in verts}
        assert len(verts) == n * n and image == set(slice_vars(n))
    # enumeration counts vs the recurrence through m=12
    counts = [1, 1]
    for m in range(2, 13):
        counts.append(counts[m - 1] + (m - 1) * counts[m - 2])
    from flagorbits.perms import involution_count

    for m in range(1, 13):
        assert involution_count(m) == counts[m]
    for m in range(1, 9):
        assert len(enumerate_involutions(m)) == counts[m]
    _report(7, "property suites")


def test_criterion_8_performance_m10():
    rep1 = sweep(10, threads=1)
    assert len(rep1.rows) == 9496
    assert rep1.elapsed < 300, f"m=10 single-thread sweep took {rep1.elapsed:.0f}s"
    rep4 = sweep(10, threads=4)
    assert rep4.elapsed < 300, f"m=10 four-thread sweep took {rep4.elapsed:.0f}s"
    assert sweep_records(rep1) == sweep_records(rep4)
    _report(8, "m=10 performance and thread invariance")
