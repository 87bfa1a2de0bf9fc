"""Planar diagram combinatorics and the twist-box construction templates."""

import pytest

from knotct.diagram import (
    PlanarDiagram,
    double_twist_diagram,
    fig1_left_diagram,
    fig1_right_diagram,
    montesinos_diagram,
    parse_pd,
    pretzel_diagram,
    serialize_pd,
    signature_alternating,
    twist_number,
)
from knotct.errors import MissingProvenance


def trefoil():
    return pretzel_diagram([1, 1, 1])


def test_trefoil_basics():
    d = trefoil()
    assert d.n == 3
    assert d.component_count() == 1
    assert d.is_connected()
    assert d.is_alternating()
    assert d.is_reduced()
    assert abs(d.writhe()) == 3


def test_euler_formula():
    for d in (trefoil(), pretzel_diagram([3, 5, 1]), double_twist_diagram(2, 4)):
        # V - E + F = 2 with V = n, E = 2n
        assert len(d.faces()) == d.n + 2


def test_mirror_flips_signs():
    d = trefoil()
    assert d.mirror().writhe() == -d.writhe()
    assert sorted(d.mirror().signs()) == sorted(-s for s in d.signs())


def test_canonical_key_relabeling_invariant():
    d = pretzel_diagram([3, 1, 1])
    arcs = sorted(d.arcs())
    rotated = arcs[1:] + arcs[:1]
    perm = dict(zip(arcs, rotated))
    assert d.relabeled(perm).canonical_key() == d.canonical_key()


def test_simplify_removes_kinks():
    d = pretzel_diagram([1, 1, -1])  # reducible: opposite strands cancel
    s = d.simplify()
    assert s.n < d.n


def test_switch_and_smooth_counts():
    d = trefoil()
    assert d.switch(0).n == d.n
    assert d.smooth(0).n == d.n - 1
    assert d.smooth(0).component_count() == 2


def test_linking_number_hopf():
    d = double_twist_diagram(2, 0).simplify()
    # two clasp crossings survive; smoothing one gives a two-component link
    d2 = pretzel_diagram([1, 1, 1]).smooth(0)
    assert abs(d2.linking_number(0, 1)) == 1


def test_signature_alternating_trefoil():
    d = trefoil()
    assert abs(signature_alternating(d)) == 2
    assert signature_alternating(d.mirror()) == -signature_alternating(d)


def test_pd_text_round_trip():
    d = pretzel_diagram([3, 5, -2])
    back = parse_pd(serialize_pd(d))
    assert back.canonical_key() == d.canonical_key()


def test_twist_number_of_templates():
    assert twist_number(pretzel_diagram([3, 5, 7])) == 3
    assert twist_number(double_twist_diagram(4, 6)) == 2
    with pytest.raises(MissingProvenance):
        crossings = pretzel_diagram([1, 1, 1]).crossings
        over = pretzel_diagram([1, 1, 1]).over_entry
        twist_number(PlanarDiagram(crossings, over, provenance=None))


def test_montesinos_template_alternating():
    from fractions import Fraction

    d = montesinos_diagram([Fraction(1, 2), Fraction(1, 3), Fraction(1, 3)], 0)
    assert d.component_count() == 1
    assert d.is_alternating()


def test_fig1_templates():
    dl = fig1_left_diagram(1, 1, 1, 1, 1, 1)
    dr = fig1_right_diagram(1, 1, 1, 1, 1, 1)
    assert dl.component_count() == 1
    assert dr.component_count() == 1
