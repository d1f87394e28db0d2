import random
from fractions import Fraction as F

from conftest import random_interval
from ecluster.clusters import (
    build_projective_cluster,
    build_t_infinity,
    build_t_n,
    descriptions_equal,
    probe_set,
    verify_window,
)
from ecluster.compat import e_compatible_geometric
from ecluster.line import DefaultLadder, IntervalObject as IV


L = DefaultLadder()


def test_projective_cluster_membership():
    P = build_projective_cluster(L)
    assert P.member(IV.proj_open(3))
    assert P.member(IV.proj_closed(-2))
    assert P.member(IV.full_line())
    assert not P.member(IV.singleton(0))
    assert P.find_incompatible(IV.singleton(0)) == IV.proj_open(0)
    assert P.find_incompatible(IV.half_open_left(1, 3)) == IV.proj_closed(1)
    assert P.find_incompatible(IV.proj_closed(2)) is None


def test_t_infinity_membership():
    T = build_t_infinity(L)
    assert T.member(IV.open(F(1, 2), F(7, 12)))  # level-1 dyadic of rung 0
    assert T.member(IV.singleton(F(5, 9)))  # non-dyadic for rung 0
    assert not T.member(IV.singleton(F(7, 12)))  # dyadic grid point
    assert T.member(IV.open(0, 1))
    assert T.member(IV.full_line())
    assert T.member(IV.open(-1, F(-1, 2)))  # level-1 dyadic of integer rung -1
    assert T.member(IV.proj_open(2))  # outside-integer projective (open)
    assert not T.member(IV.proj_closed(2))  # the closed one is adjacent to rung 2
    assert T.find_incompatible(IV.proj_closed(2)) is not None


def test_t_infinity_is_not_itself_maximal():
    # ladder-point pairs spanning several rungs are compatible with the
    # whole set but not members; the A_n/A-infinity completions plug this
    T = build_t_infinity(L)
    gap = IV.open(L.value(0), L.value(5))
    assert not T.member(gap)
    assert T.find_incompatible(gap) is None
    report = verify_window(T, (F(0), F(1)), budget=400, seed=3)
    assert any(r == "compatible non-member" for _, r in report.failures)


def test_t_n_membership():
    T2 = build_t_n(L, 2)
    assert T2.member(IV.open(L.value(-1), L.value(1)))
    assert T2.member(IV.open(L.value(1), L.value(5)))
    assert not T2.member(IV.open(L.value(1), L.value(4)))
    assert T2.member(IV.open(L.lower, L.value(1)))
    assert T2.member(IV.open(L.value(1), L.upper))
    # the T-infinity gap is witnessed once the fans are present
    gap = IV.open(L.value(0), L.value(5))
    w = T2.find_incompatible(gap)
    assert w is not None and T2.member(w) and not e_compatible_geometric(gap, w)


def test_member_excludes_witness():
    rng = random.Random(5)
    for desc in (build_projective_cluster(L), build_t_n(L, 2)):
        for _ in range(300):
            m = random_interval(rng, span=4)
            if desc.member(m):
                assert desc.find_incompatible(m) is None, m


def test_witness_soundness_random():
    rng = random.Random(6)
    for desc in (build_projective_cluster(L), build_t_infinity(L), build_t_n(L, 3)):
        for _ in range(400):
            m = random_interval(rng, span=4)
            w = desc.find_incompatible(m)
            if w is not None:
                assert desc.member(w), (m, w)
                assert not e_compatible_geometric(m, w), (m, w)


def test_builders_pairwise_compatible_sample():
    # spot-check pairwise compatibility of described content by sampling
    # witnesses of members: a member must never be incompatible with the rest
    rng = random.Random(7)
    desc = build_t_n(L, 2)
    pool = []
    for _ in range(5000):
        m = random_interval(rng, span=3)
        if desc.member(m):
            pool.append(m)
        if len(pool) >= 120:
            break
    assert len(pool) >= 60
    for i, v in enumerate(pool):
        for w in pool[i + 1 :]:
            assert e_compatible_geometric(v, w), (v, w)


def test_projective_cluster_window_clean():
    report = verify_window(build_projective_cluster(L), (F(-10), F(10)), budget=2000, seed=1)
    assert report.ok, report.failures[:4]


def test_verify_window_detects_deletion():
    # deleting one dyadic interval leaves a compatible non-member hole
    T = build_t_n(L, 2)
    broken = T.with_exchange(IV.open(F(1, 2), F(7, 12)), IV.open(0, 1))
    report = verify_window(broken, (F(0), F(1)), budget=1500, seed=2)
    assert not report.ok


def test_descriptions_equal_probing():
    t1 = build_t_n(L, 2)
    t2 = build_t_n(L, 2)
    probes = probe_set([t1, t2], (F(0), F(1)))
    assert descriptions_equal(t1, t2, probes)
    t3 = t1.with_exchange(IV.open(F(1, 2), F(7, 12)), IV.open(0, 1))
    assert not descriptions_equal(t1, t3, probes + [IV.open(F(1, 2), F(7, 12))])


def test_diff_normalization():
    T = build_projective_cluster(L)
    step = T.with_exchange(IV.proj_open(1), IV.singleton(1))
    assert step.member(IV.singleton(1)) and not step.member(IV.proj_open(1))
    back = step.with_exchange(IV.singleton(1), IV.proj_open(1))
    assert not back.added and not back.removed
