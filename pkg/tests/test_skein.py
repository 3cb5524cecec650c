import itertools
import json

import pytest

import tlj.skein as skein
from tlj.errors import EulerMismatch, InvalidDegree, InvalidEdge, LabelOutOfRange, ParseError
from tlj.fusion import sixj
from tlj.linalg import rank
from tlj.scalar import cyclo_ring
from tlj.skein import (
    COMB_E1,
    COMB_E2,
    HIMove,
    apply_hi,
    brute_force_dimension,
    comb_spine,
    enumerate_colorings,
    hi_matrix,
    library,
    load_spine,
    necklace_spine,
    pentagon_paths_agree,
    read_spine,
    spine_isomorphism,
    transport,
    verlinde_dimension,
)


def matmul(A, B, zero):
    out = [[zero] * len(B[0]) for _ in A]
    for i, row in enumerate(A):
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(B[k]):
                    if y:
                        out[i][j] = out[i][j] + x * y
    return out


def is_identity(M, ring):
    return all(M[i][j] == (ring.one if i == j else ring.zero) for i in range(len(M)) for j in range(len(M)))


def test_library_contents():
    names = library()
    for want in ("annulus", "two_holed_dumbbell", "two_holed_theta", "four_point_disk"):
        assert want in names
    for name in names:
        s = read_spine(name)
        assert load_spine(json.dumps(s.to_json())) == s


def test_doubly_holed_disk_spines_are_four_dimensional():
    for name in ("two_holed_dumbbell", "two_holed_theta"):
        s = read_spine(name)
        assert s.holes == 2
        assert enumerate_colorings(s, 3).dimension == 4


def test_dumbbell_colorings_by_hand():
    # middle edge forced to 0 at n = 3, each lollipop label free in {0, 1}
    b = enumerate_colorings(read_spine("two_holed_dumbbell"), 3)
    assert [c.as_tuple() for c in b.colorings] == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1)]


@pytest.mark.parametrize("n", range(3, 7))
def test_annulus(n):
    s = read_spine("annulus")
    b = enumerate_colorings(s, n)
    assert b.dimension == n - 1
    assert [c.as_tuple() for c in b.colorings] == [(x,) for x in range(n - 1)]


@pytest.mark.parametrize("name", library())
@pytest.mark.parametrize("n", [3, 4, 5])
def test_enumeration_matches_brute_force(name, n):
    s = read_spine(name)
    if any(x > n - 2 for x in s.boundary_labels.values()):
        with pytest.raises(LabelOutOfRange):
            brute_force_dimension(s, n)
        return
    assert enumerate_colorings(s, n).dimension == brute_force_dimension(s, n)


def test_rotation_normalized_on_load():
    doc = read_spine("two_holed_theta").to_json()
    v = doc["vertices"][0]["edge_cyclic_order"]
    doc["vertices"][0]["edge_cyclic_order"] = v[1:] + v[:1]
    assert load_spine(doc) == read_spine("two_holed_theta")


# -- load errors --------------------------------------------------------------


def test_load_errors():
    with pytest.raises(ParseError):
        load_spine("{oops")
    with pytest.raises(ParseError):
        load_spine([])
    with pytest.raises(ParseError):
        load_spine({"vertices": [{"kind": "internal", "edge_cyclic_order": [0, 1, 2]}], "edges": [[0, 7]]})
    with pytest.raises(InvalidDegree):
        load_spine(
            {
                "vertices": [
                    {"kind": "internal", "edge_cyclic_order": [0, 1]},
                    {"kind": "internal", "edge_cyclic_order": [2, 3]},
                ],
                "edges": [[0, 2], [1, 3]],
            }
        )
    doc = read_spine("two_holed_theta").to_json()
    doc["holes"] = 3
    with pytest.raises(EulerMismatch):
        load_spine(doc)
    with pytest.raises(EulerMismatch):
        load_spine({"vertices": [], "edges": [], "free_loops": 2})


def test_reversed_rotation_is_not_planar():
    # both theta vertices with the same rotation give a one-face torus graph
    doc = read_spine("two_holed_theta").to_json()
    doc["vertices"][0]["edge_cyclic_order"].reverse()
    with pytest.raises(EulerMismatch):
        load_spine(doc)
    doc = read_spine("three_holed_tetrahedron").to_json()
    doc["vertices"][0]["edge_cyclic_order"].reverse()
    with pytest.raises(EulerMismatch):
        load_spine(doc)


def test_free_loop_beside_graph_rejected():
    doc = read_spine("two_holed_dumbbell").to_json()
    doc["free_loops"] = 1
    doc["holes"] = 3
    with pytest.raises(EulerMismatch):
        load_spine(doc)


# -- boundary labels ----------------------------------------------------------


def test_boundary_labels():
    s = read_spine("four_point_disk")
    edges = s.boundary_edges()
    assert len(edges) == 4
    assert enumerate_colorings(s, 3).dimension == 1
    assert enumerate_colorings(s, 4).dimension == 2
    with pytest.raises(LabelOutOfRange):
        enumerate_colorings(s, 3, {e: 2 for e in edges})
    with pytest.raises(LabelOutOfRange):
        enumerate_colorings(s, 4, {edges[0]: 1})
    zero = enumerate_colorings(s, 4, {e: 0 for e in edges})
    assert zero.dimension == 1
    assert all(x == 0 for x in zero.colorings[0].edge_labels)


def test_boundary_label_on_internal_edge_rejected():
    doc = read_spine("two_holed_dumbbell").to_json()
    doc["boundary_labels"] = {"0": 1}
    with pytest.raises(ParseError):
        load_spine(doc)


def test_marked_lollipop():
    s = read_spine("lollipop_marked")
    assert s.boundary_labels == {0: 2}
    with pytest.raises(LabelOutOfRange):
        enumerate_colorings(s, 3)
    assert enumerate_colorings(s, 4).dimension == brute_force_dimension(s, 4)


# -- HI moves -----------------------------------------------------------------


def test_hi_rejects_loop_and_boundary_edges():
    dumbbell = read_spine("two_holed_dumbbell")
    with pytest.raises(InvalidEdge):
        apply_hi(dumbbell, HIMove(1))
    h = read_spine("four_point_disk")
    for e in h.boundary_edges():
        with pytest.raises(InvalidEdge):
            apply_hi(h, HIMove(e))
    with pytest.raises(InvalidEdge):
        apply_hi(h, HIMove(99))


@pytest.mark.parametrize("name", library())
def test_apply_then_inverse_restores_spine(name):
    s = read_spine(name)
    for e in s.internal_edges():
        for o in (0, 1):
            mv = HIMove(e, o)
            t = apply_hi(s, mv)
            assert t.holes == s.holes
            assert apply_hi(t, mv.inverse()) == s


def test_orientations_give_isomorphic_spines():
    s = read_spine("two_holed_theta")
    for e in s.internal_edges():
        assert spine_isomorphism(apply_hi(s, HIMove(e, 0)), apply_hi(s, HIMove(e, 1))) is not None


def test_dumbbell_to_theta():
    s1, s2 = read_spine("two_holed_dumbbell"), read_spine("two_holed_theta")
    assert s1.internal_edges() == [0]
    assert spine_isomorphism(apply_hi(s1, HIMove(0)), s2) is not None
    assert spine_isomorphism(s1, s2) is None
    m = hi_matrix(s1, HIMove(0), 3)
    assert m.source.dimension == m.target.dimension == 4
    assert rank(m.entries) == 4
    back = hi_matrix(m.target.spine, HIMove(0, 1), 3)
    assert is_identity(matmul(back.entries, m.entries, cyclo_ring(3).zero), cyclo_ring(3))


def test_hi_entries_are_sixj():
    # theta spine: edge 0 joins (a0, b0, c0) and (a1, c1, b1), so the
    # corners read x2 = c, x1 = b, y2 = b, y1 = c
    s = read_spine("two_holed_theta")
    assert s.vertices[0].half_edges == ("a0", "b0", "c0")
    n = 5
    m = hi_matrix(s, HIMove(0), n)
    for ti, tcol in enumerate(m.target.colorings):
        i, bt, ct = tcol.edge_labels
        for si, scol in enumerate(m.source.colorings):
            j, b, c = scol.edge_labels
            want = sixj(c, b, i, b, c, j, n) if (b, c) == (bt, ct) else cyclo_ring(n).zero
            assert m.entries[ti][si] == want


def test_all_zero_move_is_one_by_one_identity():
    s = read_spine("four_point_disk")
    labels = {e: 0 for e in s.boundary_edges()}
    (e,) = s.internal_edges()
    m = hi_matrix(s, HIMove(e), 4, labels)
    assert m.entries == [[cyclo_ring(4).one]]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_hi_forward_backward_identity_on_library(n):
    ring = cyclo_ring(n)
    for name in library():
        s = read_spine(name)
        try:
            enumerate_colorings(s, n)
        except LabelOutOfRange:
            continue
        for e in s.internal_edges():
            for o in (0, 1):
                fwd = hi_matrix(s, HIMove(e, o), n)
                bwd = hi_matrix(fwd.target.spine, HIMove(e, 1 - o), n, fwd.source.boundary_labels)
                assert fwd.source.dimension == fwd.target.dimension
                assert bwd.target.spine == s
                assert is_identity(matmul(bwd.entries, fwd.entries, ring.zero), ring), (name, e, o)


def test_transport_empty_and_reverse():
    n = 4
    ring = cyclo_ring(n)
    s = read_spine("three_holed_tetrahedron")
    end, mat = transport(s, [], n)
    assert end == s and is_identity(mat, ring)
    moves, cur = [], s
    for o in (0, 1, 0):
        mv = HIMove(cur.internal_edges()[-1], o)
        moves.append(mv)
        cur = apply_hi(cur, mv)
    assert cur != s
    back = [m.inverse() for m in reversed(moves)]
    end, mat = transport(s, moves + back, n)
    assert end == s and is_identity(mat, ring)
    # dict form accepted
    end2, mat2 = transport(s, [{"edge": 0, "orient": 0}], n)
    end3, mat3 = transport(s, [HIMove(0, 0)], n)
    assert end2 == end3 and mat2 == mat3


# -- pentagon and Verlinde ----------------------------------------------------


@pytest.mark.parametrize("n", [4, 5])
def test_pentagon_all_boundary_labels(n):
    bigger = 0
    for labels in itertools.product(range(n - 1), repeat=5):
        assert pentagon_paths_agree(labels, n), labels
        bigger += enumerate_colorings(comb_spine(labels), n).dimension > 1
    assert bigger > 0


def test_pentagon_paths_end_at_isomorphic_spines():
    s = comb_spine()
    a = apply_hi(apply_hi(s, HIMove(COMB_E2)), HIMove(COMB_E1))
    b = apply_hi(apply_hi(apply_hi(s, HIMove(COMB_E1)), HIMove(COMB_E2)), HIMove(COMB_E1))
    assert a != b
    assert spine_isomorphism(b, a) is not None


def test_pentagon_detects_a_wrong_coefficient(monkeypatch):
    def bumped(a, b, i, c, d, j, root=None):
        v = sixj(a, b, i, c, d, j, root)
        return v + v if (a, b, i, c, d, j) == (1, 1, 0, 1, 1, 2) else v

    monkeypatch.setattr(skein, "sixj", bumped)
    bad = [t for t in itertools.product(range(3), repeat=5) if not pentagon_paths_agree(t, 4)]
    assert bad


@pytest.mark.parametrize("holes", [1, 2, 3])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_verlinde_matches_enumeration(holes, n):
    s = necklace_spine(holes - 1)
    assert s.holes == holes
    assert verlinde_dimension(holes, n) == brute_force_dimension(s, n)
    assert verlinde_dimension(holes, n) == enumerate_colorings(s, n).dimension


def test_verlinde_two_holes_matches_library():
    for n in range(3, 6):
        want = verlinde_dimension(2, n)
        for name in ("two_holed_dumbbell", "two_holed_theta"):
            assert enumerate_colorings(read_spine(name), n).dimension == want
        assert enumerate_colorings(read_spine("three_holed_tetrahedron"), n).dimension == verlinde_dimension(3, n)
