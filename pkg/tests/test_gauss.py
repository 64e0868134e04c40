import random

import pytest
from hypothesis import given, settings

from welded.freegroup import MalformedInput
from welded.gauss import (
    COMPOSITE,
    Arrow,
    GaussDiagram,
    Move,
    NotSelfArrow,
    PatternNotFound,
    R3ConditionViolated,
    applicable_moves,
    apply_move,
    apply_script,
    delete_self_arrows,
    delete_strand,
    emit,
    expand,
    is_ascending,
    is_horizontal,
    parse,
    random_additive_moves,
    random_diagram,
    stack,
    validate,
)

from conftest import diagrams

R3_TEXT = """gd 3
arrow + 3.1 2.2
arrow + 3.2 1.2
arrow + 2.1 1.1
"""


def test_empty_is_valid_and_trivially_normal():
    g = GaussDiagram.empty(2)
    assert validate(g) == []
    assert is_horizontal(g) and is_ascending(g)


def test_validate_reports_gap_and_collision():
    bad = GaussDiagram(2, [Arrow(1, (1, 1), (2, 3))])
    assert any("contiguous" in e for e in validate(bad))
    clash = GaussDiagram(2, [Arrow(1, (1, 1), (2, 1)), Arrow(1, (1, 1), (2, 2))])
    assert any("shares slot" in e for e in validate(clash))


def test_parse_rejects_malformed():
    with pytest.raises(MalformedInput):
        parse("arrow + 1.1 2.1\n")
    with pytest.raises(MalformedInput):
        parse("gd 2\narrow * 1.1 2.1\n")
    with pytest.raises(MalformedInput):
        parse("gd 2\narrow + 1.2 2.1\n")


def test_parse_ignores_comments_and_blank_lines():
    g = parse("# H\ngd 2\n\narrow - 2.1 1.1  # the only arrow\n")
    assert g.arrows == (Arrow(-1, (2, 1), (1, 1)),)


def test_self_arrow_predicates():
    g = parse("gd 1\narrow + 1.1 1.2\n")
    assert not is_horizontal(g)
    assert is_ascending(g)
    assert len(delete_self_arrows(g)) == 0


def test_order_cycle_is_not_horizontal():
    # strand 1 sees a before b, strand 2 sees b before a
    g = parse("gd 2\narrow + 1.1 2.2\narrow + 2.1 1.2\n")
    assert not is_horizontal(g)
    assert not is_ascending(parse("gd 2\narrow + 1.2 2.1\narrow + 2.2 1.1\n"))


def test_stack_ranks_and_unit(H):
    g = stack(H, H)
    assert g.slot_counts() == (2, 2)
    assert g.arrows[1] == Arrow(-1, (2, 2), (1, 2))
    assert stack(H, GaussDiagram.empty(2)) == H
    assert stack(GaussDiagram.empty(2), H) == H


def test_delete_strand(H, B):
    assert len(delete_strand(H, 2)) == 0 and delete_strand(H, 2).n == 1
    assert delete_strand(GaussDiagram.empty(3), 1) == GaussDiagram.empty(2)
    assert [len(delete_strand(B, i)) for i in (1, 2, 3)] == [2, 2, 0]
    with pytest.raises(MalformedInput):
        delete_strand(H, 3)


def test_tc_swaps_tails():
    g = parse("gd 2\narrow + 1.1 2.1\narrow - 1.2 2.2\n")
    h = apply_move(g, Move("TC", (0, 1)))
    assert h.arrows[0].tail == (1, 2) and h.arrows[1].tail == (1, 1)


def test_r2_del_and_add():
    g = parse("gd 2\narrow + 1.1 2.1\narrow - 1.2 2.2\n")
    assert len(apply_move(g, Move("R2-del", (0, 1)))) == 0
    back = apply_move(GaussDiagram.empty(2), Move("R2-add", strand=1, gap=0, strand2=2, gap2=0, sign=1))
    assert back == g


def test_r3_and_sign_condition():
    g = parse(R3_TEXT)
    h = apply_move(g, Move("R3", (0, 1, 2)))
    assert emit(h) == "gd 3\narrow + 3.2 2.1\narrow + 3.1 1.1\narrow + 2.2 1.2\n"
    assert apply_move(h, Move("R3", (0, 1, 2))) == g
    bad = parse(R3_TEXT.replace("arrow + 3.2", "arrow - 3.2"))
    with pytest.raises(R3ConditionViolated):
        apply_move(bad, Move("R3", (0, 1, 2)))


def test_sa_errors(H):
    with pytest.raises(NotSelfArrow):
        apply_move(H, Move("SA-del", (0,)))
    with pytest.raises(PatternNotFound):
        apply_move(H, Move("TC", (0, 0)))


def test_c3_1_adds_two_arrows():
    g = parse("gd 3\narrow + 1.1 2.1\narrow + 2.2 3.1\n")
    h = apply_move(g, Move("C3-1", (0, 1)))
    assert len(h) == 4
    assert validate(h) == []
    assert [k for _, k in h.sequences()[1]] == ["T", "H"]


def test_random_diagram_deterministic():
    assert random_diagram(3, 5, 11) == random_diagram(3, 5, 11)
    assert len(random_diagram(2, 0, 4)) == 0
    assert validate(random_diagram(3, 5, 2)) == []
    g = random_diagram(3, 20, 1, self_arrows=False)
    assert not any(a.is_self for a in g.arrows)


@given(diagrams())
def test_emit_parse_round_trip(g):
    assert parse(emit(g)) == g


@given(diagrams(), diagrams(), diagrams())
def test_stack_associative(a, b, c):
    if not a.n == b.n == c.n:
        return
    assert stack(stack(a, b), c) == stack(a, stack(b, c))


@settings(max_examples=60)
@given(diagrams())
def test_moves_keep_validity_and_composites_expand(g):
    moves = applicable_moves(g) + random_additive_moves(g, random.Random(len(g)), 2)
    for m in moves:
        h = apply_move(g, m)
        assert validate(h) == []
        if m.kind in COMPOSITE:
            script = expand(g, m)
            assert all(s.kind not in COMPOSITE for s in script)
            assert apply_script(g, script) == h
