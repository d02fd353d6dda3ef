import itertools

import networkx as nx
import pytest

import gallai


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def brute_longest_path(g):
    h = to_nx(g)
    best = 1 if g.order else 0
    for s, t in itertools.combinations(range(g.order), 2):
        for p in nx.all_simple_paths(h, s, t):
            best = max(best, len(p))
    return best


def test_graph6_matches_networkx():
    g = gallai.petersen()
    assert g.to_graph6() == "I?LRCecq?"
    h = nx.from_graph6_bytes(g.to_graph6().encode())
    assert nx.is_isomorphic(h, nx.petersen_graph())
    assert gallai.Graph.from_graph6(g.to_graph6()) == g


def test_invariants_against_networkx():
    g = gallai.petersen()
    h = to_nx(g)
    assert gallai.kappa(g) == nx.node_connectivity(h)
    assert gallai.alpha(g) == max(len(c) for c in nx.find_cliques(nx.complement(h)))
    assert gallai.girth(g) == nx.girth(h)


@pytest.mark.parametrize("seed", range(20))
def test_longest_path_against_enumeration(seed):
    h = nx.connected_watts_strogatz_graph(8, 3, 0.5, seed=seed)
    g = gallai.Graph(8, list(h.edges()))
    assert gallai.longest_path_length(g) == brute_longest_path(g)
    p = gallai.longest_path(g)
    assert len(p) == brute_longest_path(g)
    assert all(h.has_edge(u, v) for u, v in zip(p, p[1:]))


def test_split_petersen_has_no_gallai_vertex():
    g = gallai.split_petersen()
    assert g.order == 12
    assert gallai.gallai_vertices(g) == []
    size, witness = gallai.lpt(g)
    assert size == 2
    assert gallai.validate_transversal(g, "path", witness)


def test_petersen_cycles():
    g = gallai.petersen()
    assert gallai.longest_cycle_length(g) == 9
    assert gallai.lct(g)[0] == 2


def test_menger_duality():
    g = gallai.cycle_graph(6)
    separator, paths = gallai.menger(g, [0, 1], [3, 4])
    assert len(separator) == len(paths) == 2


def test_sublinear_transversal():
    g = gallai.petersen()
    r = gallai.sublinear_transversal(g, "cycle", strict=True)
    assert gallai.validate_transversal(g, "cycle", r["transversal"])
    assert len(r["transversal"]) <= r["bound"]
    assert r["trace"][0]["step"] in "abcde"
    assert gallai.sublinear_bound(10, 2) == r["bound"]  # m counts pattern edges


def test_checks_and_campaigns():
    assert "gallai-exists" in gallai.check_tags()
    out = gallai.run_check(gallai.split_petersen(), "gallai-exists")
    assert out["verdict"] == "fail"
    lines = [gallai.petersen().to_graph6(), gallai.split_petersen().to_graph6(), "bad!"]
    report = gallai.run_campaign(lines, "gallai-exists", filters="connected", jobs=2)
    assert report["totals"]["pass"] == 1
    assert report["totals"]["fail"] == 1
    assert report["totals"]["error"] == 1


def test_errors():
    with pytest.raises(gallai.Graph6Error):
        gallai.Graph.from_graph6("")
    with pytest.raises(gallai.PreconditionError):
        gallai.run_check(gallai.petersen(), "thm13", {"k": "3"})
    with pytest.raises(ValueError):
        gallai.sublinear_transversal(gallai.petersen(), "tree")
