import pytest
from loguru import logger

from src.combinatorics import Composition, compositions_up_to, hook_factors_all, iter_nodes, partitions
from src.core import InfeasibleBoundsError
from src.critical import construct_beta, is_critical_pair
from src.jack import JackEngine, xi_specialization_match
from src.oracle import (
    COPRIME,
    NAIVE_MODE,
    NON_COPRIME,
    RANK_MODE,
    PartnerOracle,
    SearchBounds,
    enumerate_partners,
    negative_existence_scan,
    parallel_factor,
    rank_permutation_partners,
    uniqueness_scan,
)

C = Composition.of


def test_bounds_resolve():
    resolved = SearchBounds().resolve(C(1, 0))
    assert (resolved.n_max, resolved.mode, resolved.complete) == (2, RANK_MODE, True)

    clipped = SearchBounds().resolve(C(2, 6, 5, 2))
    assert clipped.n_max == 9 and not clipped.complete

    with pytest.raises(InfeasibleBoundsError):
        SearchBounds(n_max=12).resolve(C(2, 6, 5, 2))
    with pytest.raises(InfeasibleBoundsError):
        SearchBounds(n_max=2).resolve(C(2, 6, 5, 2))
    with pytest.raises(ValueError):
        SearchBounds(mode="exhaustive")
    assert SearchBounds(mode=NAIVE_MODE).cap == 7


def test_limited_search_warns_unless_expected():
    records = []
    sink = logger.add(lambda message: records.append(message.record), level="DEBUG")
    try:
        SearchBounds().resolve(C(2, 6, 5, 2))
        SearchBounds(n_max=5, expect_incomplete=True).resolve(C(2, 6, 5, 2))
        JackEngine().pole_partners(C(2, 0), 2, poles=[(1, 2)])
    finally:
        logger.remove(sink)

    limited = [(r["level"].name, r["message"]) for r in records if "limited" in r["message"]]
    assert [level for level, _ in limited] == ["WARNING", "DEBUG", "DEBUG"]


def test_enumerate_finds_constructed_partner():
    search = enumerate_partners(C(2, 6, 5, 2), 2, 3)
    assert C(5, 3, 5, 2) in search
    assert not search.complete


def test_enumerate_single_box():
    search = enumerate_partners(C(1, 0), 1, 1)
    assert search.partners == [C(0, 1)]
    assert search.complete
    assert search.to_dict()["partners"] == [[0, 1]]


def test_enumerate_extended():
    search = enumerate_partners(C(3, 0), 0, 1, extended=True)
    assert search.bounds.mode == NAIVE_MODE
    assert C(2, 1) in search
    assert C(2, 1) not in enumerate_partners(C(3, 0), 1, 1)
    with pytest.raises(ValueError):
        enumerate_partners(C(3, 0), 0, 1)
    with pytest.raises(ValueError):
        enumerate_partners(C(3, 0), 1, 0)


@pytest.mark.parametrize("alpha", list(compositions_up_to(6, 4)))
def test_modes_agree(alpha):
    n_max = max(min(alpha.length + alpha.weight, SearchBounds.naive_cap), alpha.length)
    for reduced in {f.reduced() for f in hook_factors_all(alpha)}:
        rank = enumerate_partners(alpha, *reduced, SearchBounds(n_max, RANK_MODE))
        naive = enumerate_partners(alpha, *reduced, SearchBounds(n_max, NAIVE_MODE))
        assert rank.keys() == naive.keys()
        for beta in rank:
            assert is_critical_pair(alpha, beta, *reduced) is not None
            assert xi_specialization_match(alpha, beta, *reduced)


@pytest.mark.parametrize("alpha", [a for a in compositions_up_to(6, 4) if a.weight > 0])
def test_oracle_contains_construction(alpha):
    built = {}
    for node in iter_nodes(alpha):
        beta, trace = construct_beta(alpha, node)
        reduced = (trace.m, trace.n)
        built.setdefault(reduced, []).append(beta.trimmed())

    for (m, n), betas in built.items():
        n_max = max([alpha.length] + [beta.length for beta in betas])
        search = enumerate_partners(alpha, m, n, SearchBounds(n_max, factorial_cap=10))
        for beta in betas:
            assert beta in search


def test_parallel_search_matches_serial():
    alpha = C(2, 0, 1).padded(5)
    serial = rank_permutation_partners(alpha, 1, 1, 5)
    parallel = rank_permutation_partners(alpha, 1, 1, 5, num_workers=2)
    assert sorted(b.parts for b in serial) == sorted(b.parts for b in parallel)


def test_uniqueness_scan_partitions():
    corpus = [p for w in range(7) for p in partitions(w, 3)]
    report = uniqueness_scan(corpus)
    assert report.records
    assert all(r.complete for r in report.records)
    assert report.flagged == []
    for record in report.section(COPRIME):
        assert record.count == 1


def test_uniqueness_scan_non_coprime():
    report = uniqueness_scan([C(6, 3, 1, 1)])
    record = report.find(C(6, 3, 1, 1), (2, 3))
    assert record.section == NON_COPRIME
    assert record.factors == [(4, 6)]
    assert record.count >= 2
    assert C(0, 3, 1, 1, 6) in record.partners
    assert not record.flagged


def test_uniqueness_scan_empty():
    report = uniqueness_scan([])
    assert report.records == [] and report.to_records() == []


def test_parallel_factor():
    assert parallel_factor(C(1, 0), C(0, 1)) == (1, 1)
    assert parallel_factor(C(1, 0), C(1, 0)) is None
    assert parallel_factor(C(3, 0), C(2, 1)) == (0, 1)


@pytest.mark.parametrize(
    "corpus",
    [
        [a for a in compositions_up_to(5, 3)],
        [C(1, 0)],
        list(partitions(4)),
    ],
)
def test_negative_existence_scan(corpus):
    report = negative_existence_scan(corpus)
    assert report.ok
    assert report.parallel <= report.checked
    assert report.to_records()[-1]["violations"] == 0


def test_negative_existence_counts():
    report = negative_existence_scan([C(1, 0)])
    assert (report.checked, report.parallel) == (1, 1)


def test_partner_oracle():
    oracle = PartnerOracle(factorial_cap=10)
    search = oracle.enumerate(C(1, 0), 1, 1)
    assert search.partners == [C(0, 1)]
    assert oracle.bounds().factorial_cap == 10
    assert oracle.enumerate(C(1, 0), 1, 1, mode=NAIVE_MODE).keys() == search.keys()
