from __future__ import annotations

import pytest

from uhg.codec import encode
from uhg.errors import PreconditionError
from uhg.graphs import degree_set
from uhg.search import (
    SearchSpec,
    WorkUnit,
    merge,
    oracle_search_seeds,
    run_unit,
    search_seeds,
    shard,
)
from uhg.seeds import validate_seed


def lines(result):
    return [encode(s.graph) for s in result.seeds]


def test_ten_seed_search_nonempty_and_valid():
    res = search_seeds(SearchSpec(10, 10))
    assert res.complete
    assert len(res.seeds) == 1  # the ten-vertex ten-seed is unique
    s = res.seeds[0]
    assert validate_seed(s.graph, s.s, s.t, s.d).passed
    assert tuple(degree_set(s.graph)) == (2, 3, 4)


def test_search_profile_infeasible_is_empty():
    assert search_seeds(SearchSpec(8, 10)).seeds == []


def test_spec_validation():
    with pytest.raises(PreconditionError):
        SearchSpec(10, 9)
    with pytest.raises(PreconditionError):
        SearchSpec(10, 2)
    with pytest.raises(PreconditionError):
        SearchSpec(2, 4)


def test_no_small_low_d_seeds():
    # nonexistence prefix at genuinely small scale
    for n in range(4, 12):
        for d in (4, 6, 8):
            assert search_seeds(SearchSpec(n, d)).seeds == [], (n, d)


def test_oracle_agreement_small():
    for n, d in [(9, 10), (10, 10), (11, 10), (10, 12), (11, 12)]:
        got = lines(search_seeds(SearchSpec(n, d)))
        want = lines_oracle = [encode(s.graph) for s in oracle_search_seeds(n, d)]
        assert got == want, (n, d)


def test_oracle_refuses_large_n():
    with pytest.raises(PreconditionError):
        oracle_search_seeds(14, 10)


def test_all_outputs_pass_validation():
    res = search_seeds(SearchSpec(12, 12))
    assert res.complete and len(res.seeds) == 23
    for s in res.seeds:
        assert validate_seed(s.graph, 0, s.n - 1, 12).passed


def test_outputs_are_spine_canonical_and_distinct():
    res = search_seeds(SearchSpec(12, 12))
    from uhg.canon import canonical_form

    forms = {
        canonical_form(s.graph, classes=[[0], [s.n - 1], list(range(1, s.n - 1))])
        for s in res.seeds
    }
    assert len(forms) == len(res.seeds)  # pairwise non-isomorphic as seeds


def test_shard_merge_equivalence():
    spec = SearchSpec(11, 10, split_depth=2)
    whole = search_seeds(spec)
    units = shard(spec, 5)
    assert len(units) >= 5 or len(units) == 1
    parts = [run_unit(u) for u in units]
    merged = merge(parts)
    assert lines(merged) == lines(whole)
    assert merged.complete
    # single shard equals unsharded
    single = merge([run_unit(WorkUnit(spec, (), 0))])
    assert lines(single) == lines(whole)


def test_merge_is_idempotent():
    spec = SearchSpec(10, 10)
    r = search_seeds(spec)
    again = merge([r, r])
    assert lines(again) == lines(r)


def test_worker_counts_do_not_change_results():
    spec = SearchSpec(11, 10)
    baseline = lines(search_seeds(spec, jobs=1))
    for jobs in (2, 4):
        assert lines(search_seeds(spec, jobs=jobs)) == baseline


def test_budget_truncation_flagged():
    res = search_seeds(SearchSpec(12, 10, budget=500))
    assert not res.complete


def test_remark13_closure_small():
    # every 10-seed found at n <= 11 steps up into the (n+2, 12) results
    from uhg.seeds import step_up_triangle, to_spine

    for n in (10, 11):
        tens = search_seeds(SearchSpec(n, 10)).seeds
        twelves = {encode(s.graph) for s in search_seeds(SearchSpec(n + 2, 12)).seeds}
        for s in tens:
            up = to_spine(step_up_triangle(s))
            assert encode(up.graph) in twelves
