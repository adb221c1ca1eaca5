"""Smoke tests for the Python surface of the compiled core."""

import math

import pytest

import hspace


def test_distance_round_trip():
    space = hspace.euclid_cutoff_space(1)
    a = hspace.CompactSet(space, [[0.0], [1.0]])
    b = hspace.CompactSet(space, [[0.4]])

    assert hspace.directed_hausdorff(b, a) == pytest.approx(0.4)
    d = hspace.hausdorff_distance(a, b)
    assert d == pytest.approx(0.6)
    assert hspace.hausdorff_distance_fast(a, b) == d  # bitwise route agreement
    assert len(a) == 2
    assert a.points == [[0.0], [1.0]]


def test_empty_set_conventions():
    space = hspace.euclid_cutoff_space(2)
    empty = hspace.CompactSet(space, [])
    b = hspace.CompactSet(space, [[0.5, 0.5]])
    assert hspace.directed_hausdorff(empty, b) == 0.0
    assert hspace.hausdorff_distance(empty, b) == 1.0
    assert hspace.hausdorff_distance(empty, empty) == 0.0


def test_matrix_space_and_axioms():
    space = hspace.matrix_space(3, [0.2, 0.4, 0.3], labels=["a", "b", "c"])
    assert space.is_matrix
    assert hspace.verify_metric_axioms(space) == []

    broken = hspace.matrix_space(3, [0.2, 0.9, 0.3])
    violations = hspace.verify_metric_axioms(broken)
    assert violations
    assert violations[0][0] == "triangle"


def test_epsilon_net():
    space = hspace.euclid_cutoff_space(1)
    s = hspace.CompactSet(space, [[0.0], [0.05], [1.0]])
    net = hspace.epsilon_net(s, 0.1)
    assert net.points == [[0.0], [1.0]]
    with pytest.raises(ValueError):
        hspace.epsilon_net(s, 0.0)


def test_small_suites_pass():
    metric = hspace.run_metric_suite(spaces=3, max_points=5)
    assert metric["pass"] is True
    compact = hspace.run_compactness_suite(spaces=3, max_points=5)
    assert compact["pass"] is True
    continuity = hspace.run_continuity_suite(families=3)
    assert continuity["pass"] is True


def test_permutation_quotient_orbits():
    pts = []
    for k in range(8):
        theta = 2.0 * math.pi * k / 8
        pts.append([math.cos(theta), math.sin(theta)])
    space = hspace.matrix_space_from_points(pts)
    table = [(i + 2) % 8 for i in range(8)]

    q = hspace.permutation_quotient(space, [table], eps=0.01, cluster_tol=0.3)
    assert q["classes"] == 2
    assert q["dmat"][0][1] == pytest.approx(2.0 * math.sin(math.pi / 8))


def test_morse_flow_demo():
    q = hspace.morse_flow_demo()
    assert q["classes"] == 2
    assert len(q["class_sets"]) == 2


def test_demo_dicts():
    lines = hspace.demo_example1_lines()
    assert lines["pass"] is True
    assert lines["d_cutoff"] == 1.0

    collision = hspace.demo_collision_family()
    assert collision["pass"] is True
    assert collision["threshold_two"] == 11
    assert collision["limit_gap"] == 0.0


def test_mds_embedding_shape():
    xy = hspace.mds_embed_2d([0.0, 1.0, 1.0, 0.0], 2)
    assert len(xy) == 2
    dist = math.dist(xy[0], xy[1])
    assert dist == pytest.approx(1.0)


def test_bad_point_id_raises():
    space = hspace.matrix_space(2, [0.5])
    with pytest.raises(ValueError):
        hspace.CompactSet(space, [5])
