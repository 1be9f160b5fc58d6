import pytest

import diskhop


CHAIN = [(0, 0, 1), (2, 0, 1), (4, 0, 1)]


def test_chain():
    r = diskhop.solve(CHAIN, 0)
    assert r["dist"] == [0, 1, 2]
    assert r["pred"] == [None, 0, 1]
    assert r["layers"] == [[0], [1], [2]]


def test_unreached_is_none():
    r = diskhop.solve([(0, 0, 1), (100, 0, 1)], 0)
    assert r["dist"] == [0, None]


def test_dominated_source():
    r = diskhop.solve([(0, 0, 0.5), (0, 0, 5), (6, 0, 1)], 0)
    assert r["dist"] == [0, 1, 2]
    assert r["anchor"] == 1
    assert r["dominated"] == [True, False, False]


def test_matches_oracle_in_every_order():
    sites, source = diskhop.generate(300, seed=3, radius_dist="bimodal-nesting", nesting=0.2, dominated_source=True)
    assert source == 0
    want = diskhop.oracle_bfs(sites, source)
    for order in ("fifo", "lifo", "random"):
        assert diskhop.solve(sites, source, order=order)["dist"] == want


def test_generate_is_deterministic():
    a, _ = diskhop.generate(50, seed=42, radius_dist="power-law")
    b, _ = diskhop.generate(50, seed=42, radius_dist="power-law")
    assert a == b


def test_verify():
    sites, _ = diskhop.generate(120, seed=8, nesting=0.1)
    checks = diskhop.verify(sites, 4, samples=2000)
    assert all(ok for _, ok, _ in checks), checks


def test_text_formats():
    sites, source = diskhop.read_instance("# source 0\n0 0 1\n2 0 1\n4 0 1\n")
    assert source == 0
    assert diskhop.format_result(sites, source) == "0 0 -\n1 1 0\n2 2 1\n"


def test_errors():
    with pytest.raises(ValueError):
        diskhop.solve(CHAIN, 7)
    with pytest.raises(ValueError):
        diskhop.generate(0)
    with pytest.raises(ValueError):
        diskhop.read_instance("0 zero 1\n")
    with pytest.raises(ValueError):
        diskhop.solve(CHAIN, 0, order="stack")


def test_edge():
    assert diskhop.edge((0, 0, 1), (2, 0, 1))
    assert not diskhop.edge((0, 0, 1), (2.1, 0, 1))
