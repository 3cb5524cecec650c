import itertools
import json

import pytest

from tlj.diagram import (
    Morphism,
    basis,
    cap,
    compose,
    identity,
    tensor,
    trace,
)
from tlj.errors import InvalidDegree, NonPlanarEmbedding, NotAdmissible, ParseError
from tlj.jones_wenzl import jw
from tlj.nets import (
    admissible,
    bubble,
    compile_net,
    evaluate_net,
    fusion_coefficients,
    hom_dimension,
    load_net,
    net_bar,
    net_compose,
    net_merge,
    net_split,
    net_strand,
    net_tensor,
    net_trace,
    net_value_mnl,
    phi_psi_products,
    split_morphism,
    tensor_identity_check,
    theta_by_trace,
    theta_formula,
    theta_net,
    triangle_checks,
    vertex_morphism,
    vertex_params,
)
from tlj.scalar import RatScalar, qint

ONE = RatScalar(1)


def triples(top):
    return [t for t in itertools.product(range(top + 1), repeat=3) if admissible(*t)]


def test_admissible():
    assert admissible(1, 1, 0) and admissible(1, 1, 2) and admissible(2, 2, 2)
    assert not admissible(1, 1, 1)
    assert not admissible(3, 1, 1)
    assert not admissible(-1, 1, 0)
    assert vertex_params(2, 2, 2) == (1, 1, 1)


def test_vertex_examples():
    assert vertex_morphism(1, 1, 0) == cap(1, 2)
    assert vertex_morphism(1, 1, 2) == jw(2)
    with pytest.raises(NotAdmissible):
        vertex_morphism(1, 1, 1)


def test_vertex_morphisms_nonzero_with_unit_skeleton_coefficient():
    for a, b, c in triples(4):
        g = vertex_morphism(a, b, c)
        assert not g.is_zero()
        i, j, k = vertex_params(a, b, c)
        # skeleton: i strands from a, k nested caps a<->b, j strands from b
        pairs = [(t, a + b + t) for t in range(i)]
        pairs += [(a - 1 - s, a + s) for s in range(k)]
        pairs += [(a + k + t, a + b + i + t) for t in range(j)]
        skeleton = [p for p in basis(a + b, c) if sorted(p.pairs) == sorted(pairs)]
        assert len(skeleton) == 1
        assert g.coefficient(skeleton[0]) == ONE


def test_compile_matches_vertex_morphisms():
    for a, b, c in triples(3):
        assert compile_net(net_merge(a, b, c)) == vertex_morphism(a, b, c)
        assert compile_net(net_split(c, a, b)) == split_morphism(c, a, b)


def test_closed_loop_and_empty_net():
    for a in range(6):
        assert evaluate_net(load_net({"vertices": [], "edges": [], "loop_labels": [a]})) == qint(a + 1)
    assert evaluate_net(load_net({"vertices": [], "edges": []})) == ONE


def test_strand_compiles_to_projector():
    for a in range(5):
        assert compile_net(net_strand(a)) == jw(a)


def test_theta_examples():
    for a in range(1, 7):
        assert theta_formula(a, 1, a - 1) == qint(a + 1)
        assert theta_formula(a, 1, a + 1) == qint(a + 2)
    assert theta_formula(1, 1, 0) == qint(2)
    assert net_value_mnl(2, 3, 0) == qint(6)


@pytest.mark.parametrize("t", triples(4))
def test_theta_three_ways(t):
    v = theta_formula(*t)
    assert evaluate_net(theta_net(*t)) == v
    assert theta_by_trace(*t) == v
    for perm in itertools.permutations(t):
        assert theta_formula(*perm) == v


def test_theta_formula_rejects_inadmissible():
    with pytest.raises(NotAdmissible):
        theta_formula(1, 1, 1)


def test_rotating_vertex_tuples_keeps_values():
    # a cyclic rotation of each half-edge tuple describes the same embedding
    for t in [(2, 2, 2), (1, 2, 3), (3, 3, 2)]:
        doc = theta_net(*t).to_json()
        for v in doc["vertices"]:
            hs = v["edge_cyclic_order"]
            v["edge_cyclic_order"] = hs[1:] + hs[:1]
        assert evaluate_net(load_net(doc)) == theta_formula(*t)


def test_nonplanar_theta_rejected():
    doc = theta_net(2, 2, 2).to_json()
    doc["vertices"][0]["edge_cyclic_order"].reverse()
    with pytest.raises(NonPlanarEmbedding):
        evaluate_net(load_net(doc))


def test_swapped_boundary_order_rejected():
    doc = net_merge(1, 2, 1).to_json()
    compile_net(load_net(doc))
    for v in doc["vertices"]:
        if v.get("side") == "bottom":
            v["position"] = 1 - v["position"]
    with pytest.raises(NonPlanarEmbedding):
        compile_net(load_net(doc))


def test_load_net_errors():
    with pytest.raises(ParseError):
        load_net("{not json")
    with pytest.raises(ParseError):
        load_net({"vertices": [{"kind": "internal", "edge_cyclic_order": [0, 1, 2]}], "edges": [[0, 1]]})
    with pytest.raises(InvalidDegree):
        load_net(
            {
                "vertices": [
                    {"kind": "internal", "edge_cyclic_order": [0, 1]},
                    {"kind": "internal", "edge_cyclic_order": [2, 3]},
                ],
                "edges": [[0, 2], [1, 3]],
                "labels": [1, 1],
            }
        )
    doc = theta_net(1, 1, 1 + 1).to_json()
    doc["labels"] = [1, 1, 1]
    with pytest.raises(NotAdmissible):
        evaluate_net(load_net(doc))


def test_json_round_trip():
    net = net_compose(net_split(2, 1, 1), net_merge(1, 1, 2))
    again = load_net(json.dumps(net.to_json()))
    assert compile_net(again) == compile_net(net)


def test_net_algebra_matches_diagram_algebra():
    f = net_tensor(net_strand(1), net_merge(1, 1, 2))
    g = compose(tensor(identity(1), vertex_morphism(1, 1, 2)), tensor(identity(1), identity(2)))
    assert compile_net(f) == g
    h = net_compose(net_split(2, 1, 1), net_merge(1, 1, 2))
    assert compile_net(h) == compose(split_morphism(2, 1, 1), vertex_morphism(1, 1, 2))
    assert compile_net(net_bar(net_merge(2, 1, 3))) == split_morphism(3, 2, 1)
    loop = net_trace(net_strand(3))
    assert evaluate_net(loop) == trace(jw(3))


def test_fusion_coefficient_examples():
    for b in range(5):
        assert fusion_coefficients(0, b) == [(b, ONE)]
    assert fusion_coefficients(1, 1) == [(0, qint(2).inv()), (2, ONE)]


@pytest.mark.parametrize("a,b", [(a, b) for a in range(4) for b in range(4)])
def test_tensor_identity(a, b):
    assert tensor_identity_check(a, b)


@pytest.mark.parametrize("a,b", [(a, b) for a in range(4) for b in range(4)])
def test_phi_psi(a, b):
    ks, square, total = phi_psi_products(a, b)
    assert total == tensor(jw(a), jw(b))
    for r, k in enumerate(ks):
        for s, k2 in enumerate(ks):
            assert square[r][s] == (jw(k) if r == s else Morphism.zero(k2, k))


def test_bubble_examples():
    # (2,1,2) is not admissible, so the bubble through it is zero
    s, survives = bubble(1, 2, 1, 2)
    assert not survives and not s
    for c in range(5):
        s, survives = bubble(0, 0, c, c)
        assert survives and s == qint(c + 1)
    with pytest.raises(NotAdmissible):
        bubble(1, 1, 1, 1)


def test_bubble_grid():
    for a, b, c, d in itertools.product(range(5), repeat=4):
        if not (admissible(a, c, d) and admissible(b, c, d)):
            continue
        s, survives = bubble(a, b, c, d)
        if a == b:
            assert survives and s == theta_formula(a, c, d) / qint(a + 1)
        else:
            assert not survives and not s


def test_triangle_examples():
    # (a, b-1, k) = (2, 1, 2) has odd sum, so (2, 2, 2) is outside the lemma
    with pytest.raises(NotAdmissible):
        triangle_checks(2, 2, 2)
    rep = triangle_checks(2, 3, 2)
    assert rep.plus_applicable and rep.plus_ok
    assert rep.minus_applicable and rep.minus_ok
    # n = (k + b - 1 - a) / 2 = 1
    assert rep.minus_coefficient == -qint(1) / qint(2)
    # n = 0: the coefficient is 1
    rep = triangle_checks(3, 1, 3)
    assert rep.minus_applicable and rep.minus_ok
    assert rep.minus_coefficient == ONE


def test_triangle_grid():
    seen = [0, 0]
    for a, b, k in itertools.product(range(5), range(1, 5), range(5)):
        if not admissible(a, b - 1, k):
            continue
        rep = triangle_checks(a, b, k)
        assert rep.ok, (a, b, k)
        seen[0] += rep.plus_applicable
        seen[1] += rep.minus_applicable
    assert seen[0] > 20 and seen[1] > 20


def test_triangle_rejects_inadmissible():
    with pytest.raises(NotAdmissible):
        triangle_checks(1, 1, 2)


def test_hom_dimension():
    for a, b, c in itertools.product(range(4), repeat=3):
        assert hom_dimension(a, b, c) == (1 if admissible(a, b, c) else 0), (a, b, c)
