from fractions import Fraction

import pytest

from helpers import child_with, tree
from rpbis.parser import parse_system
from rpbis.rpt import (NIL, RAW_NIL, RawTree, Rpt, check_tree, collapse,
                       first_difference, prune, render_dot, render_tree,
                       rpt_equal, semantic_eq, truncate, unfold, unfold_raw)

HALF = Fraction(1, 2)


class TestRpt:

    def test_hash_consing(self):
        leaf_b = Rpt.make({"b": [(NIL, Fraction(1))]})
        again = Rpt.make({"b": [(NIL, Fraction(1))]})
        assert leaf_b is again
        assert hash(leaf_b) == hash(again)

    def test_collapse_merges_siblings(self):
        t = Rpt.make({"a": [(NIL, HALF), (NIL, HALF)]})
        assert t.successors("a") == ((NIL, Fraction(1)),)
        assert t is Rpt.make({"a": [(NIL, Fraction(1))]})

    def test_child_order_is_canonical(self):
        leaf_b = Rpt.make({"b": [(NIL, Fraction(1))]})
        t1 = Rpt.make({"a": [(leaf_b, HALF), (NIL, HALF)]})
        t2 = Rpt.make({"a": [(NIL, HALF), (leaf_b, HALF)]})
        assert t1 is t2
        assert t1.successors("a")[0][0] is NIL

    def test_invalid_weights(self):
        with pytest.raises(ValueError):
            Rpt.make({"a": [(NIL, HALF)]})
        with pytest.raises(ValueError):
            Rpt.make({"a": [(NIL, Fraction(0)), (NIL, Fraction(1))]})

    def test_accessors(self):
        leaf_b = Rpt.make({"b": [(NIL, Fraction(1))]})
        t = Rpt.make({"a": [(leaf_b, HALF), (NIL, HALF)], "c": [(NIL, Fraction(1))]})
        assert t.init() == ("a", "c")
        assert t.height == 2
        assert NIL.height == 0 and NIL.is_nil
        assert t.weight("a", leaf_b) == HALF
        assert t.weight("c", leaf_b) == 0
        assert t.successors("z") == ()
        assert check_tree(t) is t


class TestPruning:

    def test_unfold_level_zero_is_nil(self, fixture_a):
        assert unfold(fixture_a, "t1", 0) is NIL

    def test_fixture_a_levels(self, fixture_a):
        assert unfold(fixture_a, "t1", 1) is unfold(fixture_a, "t2", 1)
        assert unfold(fixture_a, "t1", 2) is not unfold(fixture_a, "t2", 2)
        assert first_difference(fixture_a, "t1", "t2") == 2

    def test_truncate_then_collapse(self, fixture_a):
        t1 = tree(fixture_a, "t1")
        raw = truncate(t1, 1)
        assert isinstance(raw, RawTree)
        # Two children of weight 1/2 become one nil child of weight 1
        assert len(raw.successors("a")) == 2
        assert collapse(raw) is Rpt.make({"a": [(NIL, Fraction(1))]})
        assert prune(t1, 1) is collapse(raw)

    def test_prune_above_height_is_identity(self, fixture_a):
        t1 = tree(fixture_a, "t1")
        assert t1.height == 2
        assert prune(t1, 5) is t1
        assert truncate(t1, 0) is RAW_NIL

    def test_unfold_raw_shares_nodes(self):
        system = parse_system("s -a-> { 1/2: s, 1/2: t }\nt -b-> { 1: s }")
        raw = unfold_raw(system, "s", 4)
        first, second = raw.successors("a")
        # (s, 2) is reached both through s and through t
        assert first[0].successors("a")[0][0] is second[0].successors("b")[0][0]

    def test_prunings_commute_with_unfold(self, fixture_e):
        for n in range(4):
            assert prune(tree(fixture_e, "t10"), n) is unfold(fixture_e, "t10", n)

    def test_bisimilar_states_share_a_tree(self):
        system = parse_system("""
            s -a-> { 1/2: u, 1/2: v }
            t -a-> { 1: w }
            u -b-> { 1: nil }
            v -b-> { 1: nil }
            w -b-> { 1: nil }
        """)
        assert semantic_eq(system, "s", "t")
        assert rpt_equal(tree(system, "s"), tree(system, "t"))
        assert first_difference(system, "s", "t") is None

    def test_loops_unfold_to_finite_trees(self):
        system = parse_system("s -a-> { 1: s }")
        t = unfold(system, "s", 3)
        assert t.height == 3
        check_tree(t)

    def test_unfold_negative_depth(self, fixture_a):
        with pytest.raises(ValueError):
            unfold(fixture_a, "t1", -1)

    def test_fixture_g_differs_at_level_one(self, fixture_g):
        assert first_difference(fixture_g, "s1", "s2") == 1

    def test_children_of_fixture_a(self, fixture_a):
        t1 = tree(fixture_a, "t1")
        both = child_with(t1, "a", "b", "c")
        assert both.successors("b") == ((NIL, Fraction(1)),)


class TestRender:

    def test_render_tree(self, fixture_d):
        text = render_tree(tree(fixture_d, "t7"))
        assert text.splitlines() == [
            "*",
            "  -a-> 1: *",
            "      -b-> 1: nil",
        ]
        assert render_tree(NIL) == "nil"

    def test_render_decimal(self, fixture_c):
        text = render_tree(tree(fixture_c, "t5"), decimal=True)
        assert "-a-> 0.25: *" in text
        assert "-a-> 0.5: nil" in text

    def test_render_dot(self, fixture_d):
        dot = render_dot(tree(fixture_d, "t8"))
        assert dot.startswith("digraph rpt {")
        assert dot.rstrip().endswith("}")
        assert dot.count("->") == 3
        assert 'label="c 1"' in dot
