"""Montesinos normal forms, family specs, parsing, and genus formulas."""

from fractions import Fraction

import pytest

from knotct.errors import InvalidInput, NotAKnot, ParseError, ValidationError
from knotct.montesinos import (
    FAMILY_NAMES,
    FamilySpec,
    MontesinosSpec,
    enumerate_family,
    family_to_montesinos,
    genus,
    is_alternating_presentation,
    parse_spec,
)


def test_normalization_truncates_and_shifts():
    # 7/3 = 2 + 1/3: the integer part moves into gamma
    m = MontesinosSpec([Fraction(7, 3), Fraction(1, 2), Fraction(1, 3)], 0)
    assert all(abs(f) < 1 for f in m.tangles)
    assert m.gamma == 2


def test_gamma_shift_identity():
    # M(f - 1 | gamma + 1) and M(f | gamma) name the same knot: the total
    # fraction gamma + sum(tangles) is preserved by normalization
    a = MontesinosSpec([Fraction(1, 3) - 1, Fraction(1, 2), Fraction(1, 3)], 1)
    b = MontesinosSpec([Fraction(1, 3), Fraction(1, 2), Fraction(1, 3)], 0)
    assert a.gamma + sum(a.tangles) == b.gamma + sum(b.tangles)
    assert genus(a).genus == genus(b).genus


def test_unknot_rejected():
    with pytest.raises(InvalidInput):
        MontesinosSpec([Fraction(-1), Fraction(1), Fraction(1)], 0)


def test_two_even_denominators_rejected():
    with pytest.raises(NotAKnot):
        MontesinosSpec([Fraction(1, 2), Fraction(1, 2), Fraction(1, 3)], 0)


def test_alternating_presentation():
    assert is_alternating_presentation(
        MontesinosSpec([Fraction(1, 2), Fraction(1, 3), Fraction(1, 3)], 0)
    )
    assert not is_alternating_presentation(
        MontesinosSpec([Fraction(1, 2), Fraction(1, 3), Fraction(-1, 3)], 0)
    )


@pytest.mark.parametrize("family", FAMILY_NAMES)
def test_enumerated_specs_have_genus_two(family):
    specs = list(enumerate_family(family, 1)) or list(enumerate_family(family, 2))
    assert specs, f"family {family} enumerates nothing at bound 2"
    for f in specs:
        m = family_to_montesinos(f)
        assert genus(m).genus == 2, str(f)


def test_enumerate_includes_mirrors():
    specs = list(enumerate_family("e3", 1))
    assert any(f.mirror for f in specs)
    assert any(not f.mirror for f in specs)


def test_family_constraints():
    with pytest.raises(ValidationError):
        FamilySpec("o3", dict(a=1, b=1, c=1), sign_variant=1)  # needs |a| >= 2
    with pytest.raises(ValidationError):
        FamilySpec("o1p", dict(a=-1, b=1, c=2, d=2), sign_variant=1)
    with pytest.raises(ValidationError):
        FamilySpec("e2", dict(a=0, b=1, c=1))


def test_parse_spec_forms():
    assert parse_spec("P(3,5,-2)").family == "pretzel"
    assert parse_spec("DT(2,4)").family == "double_twist"
    assert parse_spec("F1L(1,1,1,1,1,1)").family == "fig1_left"
    assert parse_spec("F1R(0,1,0,1,0,1)").family == "fig1_right"
    f = parse_spec("FAM:o1(a=1,b=1,c=1,d=1,e=1)")
    assert f.family == "o1" and dict(f.params)["a"] == 1
    m = parse_spec("M(1/2,1/3,1/3)")
    assert isinstance(m, MontesinosSpec)


def test_parse_spec_rejects_garbage():
    for bad in ("", "Q(1,2)", "P(1,", "FAM:nope(a=1)", "M(1/0)"):
        with pytest.raises((ParseError, ValidationError, InvalidInput)):
            parse_spec(bad)


def test_spec_string_round_trip():
    for text in ("P(3,5,-2)", "DT(2,4)", "FAM:e3(a=1,mirror=1)"):
        f = parse_spec(text)
        again = parse_spec(str(f))
        assert str(again) == str(f)


def test_genus_breakdown_fields():
    m = MontesinosSpec([Fraction(1, 2), Fraction(1, 3), Fraction(1, 3)], 0)
    g = genus(m)
    assert g.genus >= 1
    assert isinstance(g.type, str) and g.type
    assert len(g.per_tangle) == len(m.tangles)


def test_diagram_matches_spec():
    d = parse_spec("M(1/2,1/3,1/3)").diagram()
    assert d.component_count() == 1
