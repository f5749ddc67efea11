import pytest

from nearfactor.graph import parse_graph
from nearfactor.harness import (
    CSV_COLUMNS,
    EnumerationBoundError,
    VerificationReport,
    _check,
    append_csv,
    enumerate_labeled_graphs,
    random_specs,
    reports_to_csv,
    verify_theorems,
)


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 8), (4, 64)])
def test_labeled_counts(n, count):
    graphs = list(enumerate_labeled_graphs(n))
    assert len(graphs) == count
    assert len({g.edges for g in graphs}) == count


def test_enumeration_bound():
    with pytest.raises(EnumerationBoundError):
        next(enumerate_labeled_graphs(8))
    with pytest.raises(EnumerationBoundError):
        next(enumerate_labeled_graphs(9, allow_large=True))
    assert next(enumerate_labeled_graphs(8, allow_large=True)).m == 0


def test_exhaustive_small_orders():
    reports = verify_theorems(4)
    assert [r.n for r in reports] == [0, 1, 2, 3, 4]
    assert all(not r.mismatches for r in reports)
    assert [r.graphs_checked for r in reports] == [1, 1, 2, 8, 64]


def test_nfc_counts_by_hand():
    by_n = {r.n: r for r in verify_theorems(2)}
    # order 0 is vacuous; on two vertices both K2 and the edgeless graph
    # qualify, since deleting a vertex leaves K1 and the empty matching
    # misses exactly that one vertex
    assert by_n[0].nfc_count == 1
    assert by_n[2].nfc_count == 2
    assert by_n[1].nfc_count == 0


def test_order_four_counts():
    (r,) = verify_theorems(4, n_min=4)
    # 37 labelled graphs on 4 vertices have a perfect matching; the other
    # NFC graphs are the 4 labellings of K1 + K3
    assert (r.nfc_count, r.perfect_matching_count, r.factor_critical_count) == (41, 37, 0)


def test_parity_of_counts():
    for r in verify_theorems(5):
        if r.n % 2 and r.n > 0:
            assert r.nfc_count == 0 and r.perfect_matching_count == 0
        elif r.n > 0:
            assert r.factor_critical_count == 0


def test_random_mode_reproducible():
    a = verify_theorems(9, mode="random", count=60, seed=5)
    b = verify_theorems(9, mode="random", count=60, seed=5)
    assert reports_to_csv(a) == reports_to_csv(b)
    assert sum(r.graphs_checked for r in a) == 60
    assert all(not r.mismatches for r in a)


def test_random_specs_cover_probabilities():
    specs = random_specs(12, 36, 1)
    assert {p for _, p, _ in specs} == {0.2, 0.5, 0.8}
    assert {n for n, _, _ in specs} == set(range(1, 13))
    assert random_specs(12, 36, 1) == specs


def test_jobs_do_not_change_results():
    serial = verify_theorems(6, n_min=6)
    split = verify_theorems(6, n_min=6, jobs=2)
    assert reports_to_csv(serial) == reports_to_csv(split)


def test_mismatch_is_data(monkeypatch):
    import nearfactor.harness as harness

    monkeypatch.setattr(harness, "matching_number", lambda g: -1)
    report = VerificationReport(2)
    _check(parse_graph("2 1\n0 1\n"), report, 6, 16)
    assert report.mismatches == [
        {"check": "oracle", "graph": "2 1\n0 1\n", "engine": -1, "brute": 1}
    ]


def test_csv_output(tmp_path):
    reports = verify_theorems(3)
    text = reports_to_csv(reports)
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[3] == "2,2,2,0,1,0"
    path = tmp_path / "counts.csv"
    append_csv(reports, path)
    append_csv(reports, path)
    rows = path.read_text().splitlines()
    assert rows.count(",".join(CSV_COLUMNS)) == 1
    assert len(rows) == 1 + 2 * len(reports)
