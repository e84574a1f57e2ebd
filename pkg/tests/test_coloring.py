import pytest

from p7c4.coloring import (
    ColoringCertificate,
    StructuralContradiction,
    _color,
    _diamond_case,
    _gem_case,
    _kite_case,
    color_diamond_class,
    color_gem_class,
    color_kite_class,
    color_petersen_blowup,
    greedy_extend,
    merge_across_cutset,
    replay_trace,
    validate_certificate,
)
from p7c4.enumerate import canonical_key, class_members
from p7c4.families import g1, g2, graph_f, petersen
from p7c4.graphs import (
    Graph,
    GraphError,
    clique_blowup,
    complete_graph,
    cycle_graph,
    exact_chromatic_number,
    induced_subgraph,
    join_with_clique,
    max_clique_size,
    path_graph,
)
from p7c4.structure import find_clique_cutset, recognize_clique_blowup

COLORERS = {
    "diamond-class": color_diamond_class,
    "kite-class": color_kite_class,
    "gem-class": color_gem_class,
}


def test_examples_diamond():
    cert = color_diamond_class(petersen())
    assert cert.colors_used == 3 and cert.claimed_bound == 3
    cert = color_diamond_class(cycle_graph(7))
    assert cert.colors_used == 3 and cert.claimed_bound == 3
    assert cert.trace[-1]["step"] == "eliminate-vertex"


def test_examples_kite():
    cert = color_kite_class(join_with_clique(petersen(), 2))
    assert cert.colors_used == 5 and cert.claimed_bound == 5
    assert any(s["step"] == "peel" for s in cert.trace)
    assert color_kite_class(Graph(1)).colors_used == 1
    cert = color_kite_class(complete_graph(6))
    assert cert.colors_used == 6 and cert.claimed_bound == 7


def test_examples_gem():
    blown = clique_blowup(petersen(), [2] * 10)
    cert = color_gem_class(blown)
    assert cert.colors_used == 5 and cert.claimed_bound == 7
    assert exact_chromatic_number(blown, 20) == 5
    cert = color_gem_class(cycle_graph(7))
    assert cert.colors_used == 3 and cert.claimed_bound == 3


def test_membership_is_enforced():
    # F and G2 fail class membership, so their colorings are refused
    for g in (graph_f(), g2([2] * 7)):
        for colorer in COLORERS.values():
            with pytest.raises(GraphError):
                colorer(g)


def test_join_identity_for_petersen():
    base_colors = color_kite_class(petersen()).colors_used
    for ell in range(4):
        cert = color_kite_class(join_with_clique(petersen(), ell))
        assert cert.colors_used == ell + base_colors


def test_all_small_members_color_within_bounds():
    bounds = {
        "diamond-class": lambda w: max(3, w),
        "kite-class": lambda w: w + 1,
        "gem-class": lambda w: 2 * w - 1,
    }
    for cls, colorer in COLORERS.items():
        for n in range(1, 8):
            for g in class_members(cls, n):
                cert = colorer(g)
                validate_certificate(g, cert)
                w = max_clique_size(g)
                assert cert.claimed_bound == bounds[cls](w)
                assert exact_chromatic_number(g) <= cert.colors_used <= cert.claimed_bound


def test_coloring_is_deterministic():
    for g in (petersen(), g1(2), cycle_graph(7), path_graph(6)):
        for colorer in (color_gem_class,):
            a = colorer(g)
            b = colorer(g)
            assert a.assignment == b.assignment and a.trace == b.trace


def test_trace_replay_reconstructs():
    cert = color_gem_class(g1(3))
    assert replay_trace(cert.trace) == cert.assignment
    cert = color_kite_class(join_with_clique(petersen(), 1))
    assert replay_trace(cert.trace) == cert.assignment


def test_blowup_coloring_exact_small_totals():
    # every weight vector with total <= 14, one representative per
    # isomorphism class of the blown-up graph
    from itertools import combinations_with_replacement

    p = petersen()
    seen = set()
    for extra in range(0, 5):
        for bump in combinations_with_replacement(range(10), extra):
            sizes = [1] * 10
            for v in bump:
                sizes[v] += 1
            g = clique_blowup(p, sizes)
            key = canonical_key(g)
            if key in seen:
                continue
            seen.add(key)
            cert = color_petersen_blowup(recognize_clique_blowup(g, p))
            validate_certificate(g, cert)
            assert cert.colors_used == exact_chromatic_number(g, 14)
    assert len(seen) > 20


def test_blowup_coloring_examples():
    p = petersen()
    cert = color_petersen_blowup(recognize_clique_blowup(p, p))
    assert cert.colors_used == 3 and cert.claimed_bound == 3
    g = clique_blowup(p, [2] * 10)
    cert = color_petersen_blowup(recognize_clique_blowup(g, p))
    assert cert.colors_used == 5 and cert.claimed_bound == 5
    g = clique_blowup(p, [2] + [1] * 9)
    cert = color_petersen_blowup(recognize_clique_blowup(g, p))
    assert cert.claimed_bound == 4 and cert.colors_used <= 4
    assert cert.colors_used == exact_chromatic_number(g)


def test_blowup_coloring_requires_petersen_base():
    base = cycle_graph(7)
    cert = recognize_clique_blowup(clique_blowup(base, [2] * 7), base)
    with pytest.raises(GraphError):
        color_petersen_blowup(cert)


def test_merge_across_cutset():
    g = path_graph(3)
    split = find_clique_cutset(g)
    block_a = sorted(split.side_a | split.cutset)
    block_b = sorted(split.side_b | split.cutset)
    certs = {}
    for name, block in (("a", block_a), ("b", block_b)):
        sub = induced_subgraph(g, block)
        sub_cert = color_diamond_class(sub)
        assignment = {block[v]: c for v, c in sub_cert.assignment.items()}
        certs[name] = ColoringCertificate(
            assignment=assignment,
            colors_used=sub_cert.colors_used,
            class_name="diamond-class",
            claimed_bound=3,
            trace=(
                {"step": "exceptional-graph", "name": "block", "assignment": sorted(assignment.items())},
            ),
        )
    merged = merge_across_cutset(g, split, certs["a"], certs["b"])
    validate_certificate(g, merged)
    assert merged.colors_used == 2


def test_merge_rejects_improper_blocks():
    g = path_graph(3)
    split = find_clique_cutset(g)
    block_a = sorted(split.side_a | split.cutset)
    bad = ColoringCertificate(
        assignment={v: 1 for v in block_a},
        colors_used=1,
        class_name="diamond-class",
        claimed_bound=3,
        trace=(),
    )
    ok = ColoringCertificate(
        assignment={v: i + 1 for i, v in enumerate(sorted(split.side_b | split.cutset))},
        colors_used=2,
        class_name="diamond-class",
        claimed_bound=3,
        trace=(),
    )
    with pytest.raises(GraphError):
        merge_across_cutset(g, split, bad, ok)


def test_greedy_extend_least_absent():
    g = path_graph(3)
    cert = ColoringCertificate({0: 1, 2: 2}, 2, "diamond-class", 3,
                               ({"step": "exceptional-graph", "name": "block",
                                 "assignment": [(0, 1), (2, 2)]},))
    out = greedy_extend(cert, g, 1, 3)
    assert out.assignment[1] == 3
    cert = ColoringCertificate({0: 2, 2: 3}, 3, "diamond-class", 4,
                               ({"step": "exceptional-graph", "name": "block",
                                 "assignment": [(0, 2), (2, 3)]},))
    out = greedy_extend(cert, g, 1, 4)
    assert out.assignment[1] == 1
    with pytest.raises(GraphError):
        greedy_extend(cert, g, 1, 2)  # degree 2 is not under budget 2


def test_structural_contradiction_surfaces_loudly():
    # G2 fails every class membership, but pushing it through the internal
    # recursions simulates a falsified theorem: each must raise with the
    # offending graph attached rather than miscolor quietly
    g = g2([2] * 7)
    for case in (_diamond_case, _kite_case, _gem_case):
        with pytest.raises(StructuralContradiction) as exc:
            _color(g, tuple(range(g.n)), case)
        assert exc.value.graph6
        assert exc.value.detail


def test_validate_certificate_rejects_bad_bound():
    g = cycle_graph(5)
    cert = color_gem_class(g)
    forged = ColoringCertificate(cert.assignment, cert.colors_used, cert.class_name,
                                 cert.colors_used - 1, cert.trace)
    with pytest.raises(GraphError):
        validate_certificate(g, forged)
