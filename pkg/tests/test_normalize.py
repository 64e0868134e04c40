from hypothesis import given, settings

from welded.coloring import phi_g_to_a
from welded.gauss import GaussDiagram, is_ascending, is_horizontal, parse
from welded.normalize import ascending_form, conjugation_diagram, horizontal_form, realize
from welded.freegroup import Word
from welded.reduced import ConjAut

from conftest import conj_auts, diagrams


def test_fixed_points(H, B):
    assert ascending_form(B) == B
    assert horizontal_form(H) == H
    assert ascending_form(GaussDiagram.empty(2)) == GaussDiagram.empty(2)


def test_self_arrow_disappears():
    g = parse("gd 1\narrow - 1.2 1.1\n")
    assert len(horizontal_form(g)) == 0
    assert len(ascending_form(g)) == 0


def test_ascending_of_descent():
    # head of 0 directly below tail of 1 on strand 2
    g = parse("gd 3\narrow + 1.1 2.1\narrow + 2.2 3.1\n")
    a = ascending_form(g)
    assert is_ascending(a)
    assert len(a) == 4


def test_horizontal_of_cycle():
    g = parse("gd 2\narrow + 1.1 2.2\narrow + 2.1 1.2\n")
    h = horizontal_form(g)
    assert is_horizontal(h)
    assert phi_g_to_a(h) == phi_g_to_a(g)


def test_conjugation_diagram():
    d = conjugation_diagram(3, 3, Word.parse("x1 x2^-1", 3))
    assert phi_g_to_a(d) == ConjAut(["", "", "x1 x2^-1"], 3)


@settings(max_examples=80)
@given(diagrams())
def test_ascending_form_property(g):
    a = ascending_form(g, certify=False)
    assert is_ascending(a)
    assert not any(x.is_self for x in a.arrows)
    assert phi_g_to_a(a) == phi_g_to_a(g)


@settings(max_examples=80)
@given(diagrams())
def test_horizontal_form_property(g):
    h = horizontal_form(g, certify=False)
    assert is_horizontal(h)
    assert phi_g_to_a(h) == phi_g_to_a(g)


@settings(max_examples=40)
@given(conj_auts())
def test_realize(f):
    g = realize(f)
    assert is_horizontal(g)
    assert phi_g_to_a(g) == f
