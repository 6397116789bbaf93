"""Completion engine: overlaps, reduction, completion, dimensions, oracles."""

import os

import pytest

from syncalg.freealg import Alphabet, DegLexOrder, Poly, generator, parse_poly
from syncalg.games import game_ideal, lc_ideal
from syncalg.graphs import complete_graph, coloring_game, cycle_graph
from syncalg.ncgb import (
    BasisStatus,
    GroebnerBasis,
    RewriteRule,
    basis_from_text,
    basis_to_text,
    complete,
    confluence_report,
    find_overlaps,
    interreduce,
    is_member,
    linalg_membership,
    normal_form,
    normal_words,
    quotient_dimension,
    s_polynomial,
)

GOLD = os.path.join(os.path.dirname(__file__), "golden")


def _complete_ideal(g, colors, flavor="plain", max_degree=12):
    game = coloring_game(g, colors)
    spec = game_ideal(game) if flavor == "plain" else lc_ideal(game)
    order = DegLexOrder(spec.alphabet)
    return complete(spec.generators, order, max_degree), spec


def test_overlap_patterns():
    kinds = lambda ovs: sorted(o.kind for o in ovs)
    assert kinds(find_overlaps("aa", "aa")) == ["contains", "left-overlap"]
    assert kinds(find_overlaps("ab", "ba")) == ["left-overlap", "right-overlap"]
    assert kinds(find_overlaps("abab", "ab")) == ["contains", "contains"]
    assert find_overlaps("ab", "cd") == []
    for o in find_overlaps("ab", "ba"):
        assert o.lcm in ("aba", "bab")


def test_s_polynomial_cancels_leads():
    a = Alphabet(1, 2)
    order = DegLexOrder(a)
    x = a.letter(0, 0)
    y = a.letter(0, 1)
    p = RewriteRule.from_poly(parse_poly("x[0,0]*x[0,1] - x[0,0]", a), order)
    q = RewriteRule.from_poly(parse_poly("x[0,1]*x[0,0] - x[0,1]", a), order)
    for o in find_overlaps(p.lead, q.lead):
        s = s_polynomial(p, q, o)
        if s:
            lead, _ = s.leading_term(order)
            assert order.compare(lead, o.lcm) < 0


def test_s_polynomial_rejects_misaligned_overlap():
    a = Alphabet(1, 2)
    order = DegLexOrder(a)
    p = RewriteRule.from_poly(parse_poly("x[0,0]*x[0,1]", a), order)
    q = RewriteRule.from_poly(parse_poly("x[0,1]*x[0,0]", a), order)
    bad = find_overlaps("ba", "ab")  # overlaps of the wrong pair of leads
    with pytest.raises(ValueError, match="malformed overlap"):
        s_polynomial(p, q, bad[0])


def test_normal_form_leftmost_earliest_rule():
    a = Alphabet(1, 2)
    order = DegLexOrder(a)
    x = generator(a, 0, 0)
    rules = [x * x - x]
    p = x * x * x
    assert normal_form(p, rules, order) == x


def test_normal_form_is_linear_and_idempotent():
    gb, spec = _complete_ideal(complete_graph(3), 3)
    a = spec.alphabet
    p = parse_poly("x[0,0]*x[1,1] + 2*x[2,2]", a)
    q = parse_poly("x[1,1]*x[0,0] - 1/3", a)
    np, nq = gb.normal_form(p), gb.normal_form(q)
    assert gb.normal_form(np) == np
    assert gb.normal_form(p + q) == np + nq


def test_complete_empty_and_bad_arguments():
    order = DegLexOrder(Alphabet(1, 1))
    with pytest.raises(ValueError):
        complete([], order)
    x = generator(Alphabet(1, 1), 0, 0)
    with pytest.raises(ValueError):
        complete([x * x - x], order, max_degree=1)
    with pytest.raises(ValueError):
        complete([x * x - x], order, max_degree=12, threads=0)


def test_complete_two_point_one_color_basis():
    # one vertex, two colors: the completed basis is the sum rule and one
    # idempotent; the quotient has dimension 2
    gb, spec = _complete_ideal(complete_graph(1), 2)
    texts = sorted(basis_to_text(gb).splitlines()[3:])
    assert texts == ["x[0,0]*x[0,0] - x[0,0]", "x[0,1] + x[0,0] - 1"]
    dim = quotient_dimension(gb)
    assert (dim.kind, dim.count) == ("finite", 2)


def test_unit_ideal_collapses_to_single_rule():
    gb, _ = _complete_ideal(complete_graph(4), 3)
    assert gb.contains_unit()
    assert len(gb.rules) == 1
    assert gb.rules[0].poly == Poly.one()
    assert quotient_dimension(gb).count == 0


def test_two_coloring_odd_cycle_is_unit_even_cycle_is_not():
    gb_odd, _ = _complete_ideal(cycle_graph(5), 2)
    assert gb_odd.contains_unit()
    gb_even, _ = _complete_ideal(cycle_graph(4), 2)
    assert not gb_even.contains_unit()
    assert quotient_dimension(gb_even).count == 2


def test_three_color_triangle_basis_oracle():
    gb, _ = _complete_ideal(complete_graph(3), 3)
    assert str(gb.status) == "complete"
    assert len(gb.rules) == 20
    dim = quotient_dimension(gb)
    assert (dim.kind, dim.count) == ("finite", 6)
    total, failures = confluence_report(gb.rules, gb.order)
    assert failures == []
    assert total == 56


def test_four_color_k4_plain_is_infinite():
    gb, _ = _complete_ideal(complete_graph(4), 4)
    assert str(gb.status) == "complete"
    assert len(gb.rules) == 124
    assert quotient_dimension(gb).kind == "infinite"


def test_membership_decisions():
    gb, spec = _complete_ideal(complete_graph(3), 3)
    g0 = spec.generators[0]
    assert is_member(g0, gb).kind == "member"
    x = generator(spec.alphabet, 0, 0)
    v = is_member(x, gb)
    assert v.kind == "non-member"
    bounded = GroebnerBasis(gb.order, gb.rules, BasisStatus("bounded", 3))
    assert is_member(x, bounded).kind == "unknown"


def test_interreduce_produces_reduced_basis():
    a = Alphabet(1, 2)
    order = DegLexOrder(a)
    x = generator(a, 0, 0)
    y = generator(a, 0, 1)
    red = interreduce([x * x - x, x * x - x, y + x - Poly.one()], order)
    assert len(red) == 2
    leads = [r.lead for r in red]
    assert leads == sorted(leads, key=order.key)
    # no rule's tail word contains another rule's lead
    for r in red:
        for w in r.poly.words():
            for s in red:
                if s.lead != r.lead:
                    assert s.lead not in w


def test_normal_word_counts_and_closure():
    gb, _ = _complete_ideal(complete_graph(3), 3)
    nw = normal_words(gb, 4)
    assert nw.counts[0] == 1
    assert nw.total >= 6
    assert not nw.advisory


def test_linalg_membership_agrees_with_completion():
    _, spec = _complete_ideal(complete_graph(2), 3)
    g = spec.generators[0]
    order = DegLexOrder(spec.alphabet)
    assert linalg_membership(g, spec.generators, 2, order) == "member"
    x = generator(spec.alphabet, 0, 0)
    assert linalg_membership(x, spec.generators, 3, order) == "unknown"


def test_linalg_row_cap_raises():
    _, spec = _complete_ideal(complete_graph(3), 3)
    order = DegLexOrder(spec.alphabet)
    with pytest.raises(ValueError, match="truncation too large"):
        linalg_membership(spec.generators[0], spec.generators, 5, order, max_rows=100)


def test_basis_text_round_trip_and_golden():
    gb, _ = _complete_ideal(complete_graph(3), 3)
    text = basis_to_text(gb)
    again = basis_from_text(text)
    assert basis_to_text(again) == text
    assert [r.poly for r in again.rules] == [r.poly for r in gb.rules]
    with open(os.path.join(GOLD, "k3_3colors_plain.gb"), encoding="utf-8") as fh:
        assert fh.read() == text


def test_basis_text_rejects_bad_lines():
    with pytest.raises(ValueError, match="line 1"):
        basis_from_text("wrong: header\n")
    good, _ = _complete_ideal(complete_graph(1), 2)
    lines = basis_to_text(good).splitlines()
    lines.append("2*x[0,0]")
    with pytest.raises(ValueError, match="non-monic"):
        basis_from_text("\n".join(lines) + "\n")


def test_ranking_header_round_trip():
    a = Alphabet(1, 2)
    order = DegLexOrder(a, ranking=[1, 0])
    x = generator(a, 0, 0)
    gb = complete([x * x - x], order, 12)
    text = basis_to_text(gb)
    assert "ranking: 1 0" in text.splitlines()[1]
    again = basis_from_text(text)
    assert again.order == order


def test_thread_counts_agree_on_complete_runs():
    spec = game_ideal(coloring_game(complete_graph(3), 3))
    order = DegLexOrder(spec.alphabet)
    ref = complete(spec.generators, order, 12, threads=1)
    for t in (2, 3):
        alt = complete(spec.generators, order, 12, threads=t)
        assert [r.poly for r in alt.rules] == [r.poly for r in ref.rules]
