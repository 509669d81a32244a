from fractions import Fraction

import pytest

from helpers import tree
from rpbis.logic import (TOP, And, Diamond, LogicId, Neg, Or, bounds,
                         conjoin, depth, disjoin, extension, formula_key,
                         in_fragment, is_connective_free, operands, sat_state,
                         sat_tree, skeleton)
from rpbis.parser import parse_formula
from rpbis.rpt import unfold

B1 = Diamond("b", Fraction(1))
C1 = Diamond("c", Fraction(1))


class TestFormula:

    def test_bound_range(self):
        with pytest.raises(ValueError):
            Diamond("a", Fraction(3, 2))

    def test_depth(self):
        assert depth(TOP) == 0
        assert depth(parse_formula("<a>1 !<c>1")) == 2
        assert depth(parse_formula("<a>1 | <b>1 <c>1")) == 2
        assert depth(parse_formula("!(<a>1 & <b>1)")) == 1

    def test_fragments(self):
        f = parse_formula("<a>1/2 (!<b>1 & !<c>1)")
        assert in_fragment(f, LogicId.PML_NEG_AND)
        assert not in_fragment(f, LogicId.PML_AND)
        assert not in_fragment(f, LogicId.PML_NEG_OR)
        g = parse_formula("<a>1 (<b>1 | <c>1)")
        assert in_fragment(g, LogicId.PML_OR)
        assert in_fragment(g, LogicId.PML_NEG_OR)
        assert not in_fragment(g, LogicId.PML_AND)
        # Diamonds alone belong to every fragment
        assert all(in_fragment(parse_formula("<a>1 <b>1/2"), logic) for logic in LogicId)

    def test_logic_names(self):
        assert LogicId.from_name("neg-and") is LogicId.PML_NEG_AND
        assert LogicId.from_name("PML_OR") is LogicId.PML_OR
        with pytest.raises(ValueError):
            LogicId.from_name("xor")

    def test_canonical_connectives(self):
        assert conjoin([C1, B1]) == conjoin([B1, C1, B1]) == And(B1, C1)
        assert disjoin([]) is TOP
        assert disjoin([C1]) is C1
        nested = disjoin([Or(C1, B1), B1])
        assert nested == Or(B1, C1)
        assert operands(nested, Or) == [B1, C1]

    def test_bounds_and_skeleton(self):
        f = parse_formula("<a>1/4 <b>1")
        g = parse_formula("<a>1/2 <b>1")
        assert bounds(f) == (Fraction(1, 4), Fraction(1))
        assert skeleton(f) == skeleton(g)
        assert skeleton(f) != skeleton(parse_formula("<a>1/4 <c>1"))
        assert is_connective_free(f)
        assert not is_connective_free(parse_formula("<a>1 (<b>1 | <c>1)"))

    def test_formula_key_is_total(self):
        fs = [parse_formula(t) for t in ("<b>1", "<a>1", "<a>1/2", "!<a>1", "<a>1 & <b>1")]
        keys = sorted(fs, key=formula_key)
        assert len(set(map(formula_key, keys))) == len(fs)


class TestSemantics:

    def test_fixture_a_separating_formulas(self, fixture_a):
        conj = parse_formula("<a>1/2 (<b>1 & <c>1)")
        disj = parse_formula("<a>1 (<b>1 | <c>1)")
        assert sat_state(fixture_a, "t1", conj)
        assert not sat_state(fixture_a, "t2", conj)
        assert not sat_state(fixture_a, "t1", disj)
        assert sat_state(fixture_a, "t2", disj)

    def test_top_and_unknown_action(self, fixture_a):
        assert sat_state(fixture_a, "u_nil", TOP)
        assert not sat_state(fixture_a, "t1", parse_formula("<z>0"))
        # Bound zero only asks for the action
        assert sat_state(fixture_a, "t1", parse_formula("<a>0 <z>1"))

    def test_extension(self, fixture_c):
        ext = extension(fixture_c, parse_formula("<a>1/2 <b>1"))
        assert ext == frozenset({"t6"})
        assert extension(fixture_c, Neg(TOP)) == frozenset()

    def test_tree_matches_state(self, fixture_e):
        for text in ("<a>3/5 (<b>1 | <c>1)", "<a>1/2 <b>1", "<a>1/2 (<b>1 & <c>1)", "!<a>1"):
            f = parse_formula(text)
            for state in ("t9", "t10"):
                assert sat_tree(tree(fixture_e, state), f) == sat_state(fixture_e, state, f)

    def test_depth_warning_example(self, fixture_g):
        level1 = unfold(fixture_g, "s1", 1), unfold(fixture_g, "s2", 1)
        level2 = unfold(fixture_g, "s1", 2), unfold(fixture_g, "s2", 2)

        neg = parse_formula("<a>1 !<c>1")
        assert sat_tree(level1[0], neg) and not sat_tree(level1[1], neg)
        assert not sat_tree(level2[0], neg) and not sat_tree(level2[1], neg)

        disj = parse_formula("<a>1 | <b>1 <c>1")
        assert sat_tree(level1[0], disj) and not sat_tree(level1[1], disj)

        derived = parse_formula("<a>1 | <b>1")
        assert sat_tree(level1[0], derived) and sat_tree(level1[1], derived)
