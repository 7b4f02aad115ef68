import pytest

from condchrom import (
    basic_lower_bound,
    best_lower_bound,
    build,
    check_vset_d2r,
    clique_number,
    cycle,
    max_vset_d2r,
)
from condchrom.errors import ParameterError
from condchrom.graphs import Graph


def test_clique_number_examples():
    g, _ = build("L(fr:2)")
    rep = clique_number(g)
    assert rep.value == 4  # omega(L(F_n)) = 2n
    assert len(rep.certificate) == 4
    assert all(
        g.has_edge(u, v)
        for i, u in enumerate(rep.certificate)
        for v in rep.certificate[i + 1 :]
    )
    assert clique_number(build("M(fr:1)")[0]).value == 3  # 2n+1
    assert clique_number(cycle(5)[0]).value == 2


def test_clique_certificate_is_paper_clique_for_line_friendship():
    # the center-incident edge vertices v_1..v_2n form the maximum clique
    g, prov = build("L(fr:2)")
    expected = {prov.internal_of(i) for i in (1, 2, 3, 4)}
    assert set(clique_number(g).certificate) == expected


def test_clique_size_guard():
    g, _ = build("M(fr:1)")
    with pytest.raises(ParameterError):
        clique_number(g, size_guard=3)


def test_basic_lower_bound():
    g, _ = build("wd:3,2")
    assert basic_lower_bound(g, 5).value == 5  # min{5, 4} + 1
    assert basic_lower_bound(cycle(4)[0], 2).value == 3
    assert basic_lower_bound(cycle(4)[0], 1).value == 2
    with pytest.raises(ParameterError):
        basic_lower_bound(Graph(3, []), 2)


def test_max_vset_line_windmill():
    g, prov = build("L(wd:3,2)")
    r = g.max_degree()
    rep = max_vset_d2r(g, r)
    assert rep.exact
    assert rep.value >= 5
    paper_set = {prov.internal_of(i) for i in (1, 2, 3, 4, 5)}
    assert check_vset_d2r(g, paper_set, r)
    assert check_vset_d2r(g, rep.certificate, r)


def test_max_vset_middle_multipartite():
    g, _ = build("M(kpart:1,1,1)")
    rep = max_vset_d2r(g, g.max_degree())
    assert rep.value >= 6  # k + l


def test_max_vset_singleton_floor():
    g = Graph(2, [(0, 1)])
    assert max_vset_d2r(g, 1).value >= 1


def test_max_vset_budget_flag():
    g, _ = build("M(fr:2)")
    rep = max_vset_d2r(g, g.max_degree(), budget=3)
    assert not rep.exact
    if rep.certificate:
        assert check_vset_d2r(g, rep.certificate, g.max_degree())


def test_max_vset_monotone_in_r(corpus):
    for spec, g in corpus[:8]:
        values = [max_vset_d2r(g, r).value for r in range(1, g.max_degree() + 1)]
        assert values == sorted(values)


def test_best_lower_bound_winners():
    g, _ = build("M(fr:1)")
    rep = best_lower_bound(g, 4)
    assert rep.value == 6 and rep.kind == "vset-d2r"

    g, _ = build("L(fr:2)")
    rep = best_lower_bound(g, 3)
    assert rep.value == 4 and rep.kind == "clique"

    k4, _ = build("wd:4,1")
    assert best_lower_bound(k4, 3).value == 4


def test_certificates_revalidate(corpus):
    for spec, g in corpus[:10]:
        r = g.max_degree()
        rep = best_lower_bound(g, r)
        if rep.kind == "clique":
            cert = rep.certificate
            assert all(
                g.has_edge(u, v)
                for i, u in enumerate(cert)
                for v in cert[i + 1 :]
            )
        elif rep.kind == "vset-d2r":
            assert check_vset_d2r(g, rep.certificate, r)
