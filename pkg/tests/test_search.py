import random

import pytest

from relramsey.search import ColoringProblem, find_bad_coloring
from relramsey.verify import PlainInstance, exhaustive_bad_coloring, plain_search_bad_coloring


def random_problem(rng, m=None):
    m = m or rng.randint(2, 9)
    k = rng.choice((2, 3))
    l = rng.choice((1, 1, 2)) if k == 3 else 1
    cands = []
    for _ in range(rng.randint(0, 8)):
        groups = []
        for _ in range(rng.randint(0, 3)):
            groups.append(rng.sample(range(m), rng.randint(1, min(m, 4))))
        cands.append(groups)
    return ColoringProblem.build(m, k, l, cands)


def as_plain(p):
    return PlainInstance(tuple((i,) for i in range(p.n_objects)), p.k, p.l, p.candidates)


def test_build_validates():
    with pytest.raises(ValueError):
        ColoringProblem.build(3, 0, 1, [])
    with pytest.raises(ValueError):
        ColoringProblem.build(3, 2, 0, [])


def test_no_candidates_means_any_colouring_is_bad():
    r = find_bad_coloring(ColoringProblem.build(3, 2, 1, []))
    assert r.status == "bad" and r.coloring == (0, 0, 0)


def test_unkillable_candidate_means_none():
    r = find_bad_coloring(ColoringProblem.build(3, 2, 1, [[[0]]]))
    assert r.status == "none"


def test_random_problems_agree_with_exhaustive():
    rng = random.Random(5)
    for _ in range(400):
        p = random_problem(rng)
        r = find_bad_coloring(p)
        ex = exhaustive_bad_coloring(as_plain(p))
        assert (r.status == "bad") == (ex is not None)
        if r.status == "bad":
            assert p.is_bad(r.coloring)


def test_plain_backtracking_agrees():
    rng = random.Random(6)
    for _ in range(200):
        p = random_problem(rng)
        assert (plain_search_bad_coloring(as_plain(p)) is None) == (exhaustive_bad_coloring(as_plain(p)) is None)


def test_threads_do_not_change_the_answer():
    rng = random.Random(7)
    for _ in range(60):
        p = random_problem(rng, m=rng.randint(6, 12))
        a, b = find_bad_coloring(p, threads=1), find_bad_coloring(p, threads=8)
        assert (a.status, a.coloring) == (b.status, b.coloring)


def test_timeout_is_reported():
    from relramsey.checks import arrow_instance
    from relramsey.structures import linear_order

    inst = arrow_instance(linear_order(16), linear_order(3), linear_order(2), 3)
    r = find_bad_coloring(inst.problem, timeout_ms=200)
    assert r.status in ("timeout", "bad")
