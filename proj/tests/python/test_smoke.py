import networkx as nx
import numpy as np

import spectrajoin as sj


def test_join_matches_networkx_adjacency_spectrum():
    g = sj.join("ns", sj.Graph.parse("K2"), sj.Graph.parse("C4+K1"))
    ref = nx.Graph()
    ref.add_nodes_from(range(g.order()))
    ref.add_edges_from(g.edges())
    expected = np.sort(np.linalg.eigvalsh(nx.to_numpy_array(ref)))
    got = np.sort([v for v, mult, _ in sj.spectrum(g, "A") for _ in range(mult)])
    assert np.allclose(got, expected, atol=1e-8)


def test_charpoly_of_c4_plus_k1():
    assert sj.charpoly(sj.Graph.parse("C4+K1"), "A") == ["0", "0", "0", "-4", "0", "1"]


def test_closed_form_nns_k2_k1():
    values = sorted(v for v, mult, _ in sj.closed_form_spectrum("6.1", sj.Graph.parse("K2"), sj.Graph.parse("K1")) for _ in range(mult))
    assert np.allclose(values, [-1, -1, 0, 0, 2])


def test_isomorphism_and_identity():
    iso, witness = sj.are_isomorphic(sj.Graph.parse("K1,4"), sj.Graph.parse("C4+K1"))
    assert not iso and witness is None
    assert sj.verify_identity("4.2b", sj.Graph.parse("C4+K1"), sj.Graph.parse("K2"))
