import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qorders.link import (
    DiagramError,
    braid_closure,
    cable,
    catalog,
    catalog_names,
    distant_union,
    dump_link,
    homology,
    is_diagonal,
    linking_matrix,
    load_link,
    mirror,
    parse_link,
    reverse_component,
    signature_triple,
    smith_diagonal,
    sublink,
    sublinks,
    unlink,
)

CROSSINGS = {"borromean": 6, "borromean_cable_-2": 11, "borromean_cable_2": 11, "fig3b": 11,
             "hopf": 2, "trefoil_left": 3, "trefoil_right": 3, "unknot": 0, "whitehead": 5}
COMPONENTS = {"borromean": 3, "borromean_cable_-2": 3, "borromean_cable_2": 3, "fig3b": 3,
              "hopf": 2, "trefoil_left": 1, "trefoil_right": 1, "unknot": 1, "whitehead": 2}


def test_catalog_contents():
    assert catalog_names() == sorted(CROSSINGS)
    for name in catalog_names():
        L = catalog(name)
        assert L.name == name
        assert L.n_crossings == CROSSINGS[name]
        assert L.n_components == COMPONENTS[name]
        assert all(a == 0 for a in L.framings)


def test_unknot_family():
    L = catalog("unknot_7")
    assert L.framings == (7,) and L.n_crossings == 0 and L.free_loops == 1
    assert catalog("unknot").h1_bordant_to_unlink
    assert catalog("unknot_0").h1_bordant_to_unlink
    assert not catalog("unknot_3").h1_bordant_to_unlink
    with pytest.raises(KeyError):
        catalog("unknot_x")
    with pytest.raises(KeyError):
        catalog("no_such_link")


@pytest.mark.parametrize("name", sorted(CROSSINGS))
def test_json_round_trip(name):
    L = catalog(name)
    back = parse_link(dump_link(L))
    assert back == L
    assert back.milnor_degree == L.milnor_degree
    assert back.max_cabling_index == L.max_cabling_index


def test_signs_key_only_when_ambiguous():
    assert "signs" in catalog("hopf").to_json()  # two-edge components
    assert "signs" not in catalog("whitehead").to_json()
    data = catalog("hopf").to_json()
    del data["signs"]
    assert parse_link(data).signs == catalog("hopf").signs


def test_milnor_infinity_serialized():
    assert catalog("trefoil_right").to_json()["milnor_degree"] == "inf"
    assert catalog("trefoil_right").milnor_degree == math.inf


@pytest.mark.parametrize("text, message", [
    ("{not json", "invalid JSON"),
    ("[1, 2]", "JSON object"),
    ('{"components": 1, "framings": [0]}', "missing"),
    ('{"components": 1, "pd": [[1, 2, 3]], "framings": [0]}', "4-tuple"),
    ('{"components": 1, "pd": [[1, 1, 2, 3]], "framings": [0]}', "exactly twice"),
    ('{"components": 2, "pd": [], "framings": [0]}', "framings"),
])
def test_parse_errors(text, message):
    with pytest.raises(DiagramError, match=message):
        parse_link(text)


def test_load_link_from_path(tmp_path):
    path = tmp_path / "w.json"
    path.write_text(dump_link(catalog("whitehead")))
    assert load_link(str(path)) == catalog("whitehead")
    with pytest.raises(DiagramError):
        load_link(str(tmp_path / "missing.json"))


def test_linking_numbers():
    assert linking_matrix(catalog("hopf")) == [[0, 1], [1, 0]]
    assert linking_matrix(mirror(catalog("hopf"))) == [[0, -1], [-1, 0]]
    for name in ("whitehead", "borromean", "borromean_cable_2", "fig3b"):
        assert is_diagonal(catalog(name))
    assert not is_diagonal(catalog("hopf"))
    H = reverse_component(catalog("hopf"), 0)
    assert linking_matrix(H)[0][1] == -1


def test_signature_triple():
    assert signature_triple([[0, 1], [1, 0]]) == (1, 1, 0)
    assert signature_triple([[0, 0], [0, 0]]) == (0, 0, 2)
    assert signature_triple([[2, 1], [1, 2]]) == (2, 0, 0)
    assert signature_triple([[-3]]) == (0, 1, 0)
    assert signature_triple([[1, 1], [1, 1]]) == (1, 0, 1)


@settings(max_examples=60)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=3, max_size=3))
def test_signature_matches_eigenvalues(rows):
    import numpy as np

    A = np.array(rows)
    A = A + A.T
    ev = np.linalg.eigvalsh(A.astype(float))
    pos, neg = int((ev > 1e-9).sum()), int((ev < -1e-9).sum())
    assert signature_triple(A.tolist()) == (pos, neg, 3 - pos - neg)


def test_smith_and_homology():
    assert smith_diagonal([[2, 4], [6, 8]]) == [2, 4]
    assert smith_diagonal([[0]]) == [0]
    h = homology([[5]], 5)
    assert (h.betti, h.betti_mod_p, h.torsion_order) == (0, 1, 5)
    h = homology([[0, 0], [0, 0]], 7)
    assert (h.betti, h.betti_mod_p, h.torsion_order) == (2, 2, math.inf)
    h = homology([[0, 1], [1, 0]], 3)
    assert (h.betti, h.betti_mod_p, h.torsion_order) == (0, 0, 1)
    assert homology([], 5).torsion_order == 1


def test_mirror_is_an_involution():
    for name in catalog_names():
        L = catalog(name)
        assert mirror(mirror(L)) == L
        assert mirror(L).signs == tuple(-s for s in L.signs)
    assert catalog("unknot_3").framings == tuple(-a for a in mirror(catalog("unknot_3")).framings)


def test_reverse_keeps_self_writhe():
    W = catalog("whitehead")
    for i in range(2):
        assert reverse_component(W, i).self_writhes() == W.self_writhes()


def test_distant_union():
    L = distant_union(catalog("hopf"), catalog("trefoil_right"))
    assert L.n_components == 3 and L.n_crossings == 5
    assert linking_matrix(L)[0][2] == 0
    U = distant_union(unlink(2), catalog("unknot"))
    assert U.n_components == 3 and U.free_loops == 3


def test_sublinks():
    B = catalog("borromean")
    subs = sublinks(B)
    assert len(subs) == 8
    for idx, S in subs:
        assert S.n_components == len(idx)
        if len(idx) == 2:
            assert S.n_crossings == 2  # two crossings survive on a split pair
            assert linking_matrix(S) == [[0, 0], [0, 0]]
    assert sublink(catalog("hopf"), [1]).n_crossings == 0


@pytest.mark.parametrize("name, c", [
    ("trefoil_right", [3]),
    ("hopf", [2, 2]),
    ("hopf", [1, 3]),
    ("whitehead", [2, 1]),
    ("borromean", [1, 2, 1]),
])
def test_cable_sizes(name, c):
    # each crossing becomes a c_i x c_j grid; a writhe-w component gains |w| full twists
    L = catalog(name)
    expected = sum(c[i] * c[j] for i, j in L.crossing_components())
    expected += sum(abs(w) * k * (k - 1) for w, k in zip(L.self_writhes(), c))
    C = cable(L, c)
    assert C.n_components == sum(c)
    assert C.n_crossings == expected
    assert cable(catalog("trefoil_right"), [3]).n_crossings == 45


def test_cables_are_zero_framed():
    for name in ("trefoil_right", "whitehead", "hopf"):
        L = catalog(name)
        C = cable(L, [2] * L.n_components)
        A = linking_matrix(C)
        for i in range(L.n_components):
            assert A[2 * i][2 * i + 1] == 0  # parallel copies do not link


def test_braid_closure_component_count():
    assert braid_closure(2, [1, 1]).n_components == 2
    assert braid_closure(2, [1, 1, 1]).n_components == 1
    assert braid_closure(3, [1]).n_components == 2  # untouched strand is a free loop
    assert braid_closure(3, [1]).free_loops == 1
    with pytest.raises(DiagramError):
        braid_closure(2, [2])


def test_dump_is_valid_json():
    data = json.loads(dump_link(catalog("borromean")))
    assert data["components"] == 3 and len(data["pd"]) == 6
