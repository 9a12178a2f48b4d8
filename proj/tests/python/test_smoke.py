import pytest

import otype


def test_counterexample():
    assert str(otype.eval("ord(w+1) . antichain(2)")) == "w*2+2"
    base = otype.Ordinal("w+1")
    assert base * 2 == otype.Ordinal("w*2+1")
    assert otype.nat_prod(base, 2) == otype.Ordinal("w*2+2")


def test_decompose():
    d = otype.decompose("ord(w) + chain(3)")
    assert (str(d.delta), d.m, d.k) == ("w", 3, 1)
    assert d.valid()


def test_ordinal_arithmetic():
    w = otype.Ordinal.omega()
    assert 1 + w == w
    assert w + 1 > w
    assert otype.nat_sum(1, w) == otype.Ordinal("w+1")
    assert otype.split_delta_m("w*2+3") == (otype.Ordinal("w*2"), 3)
    big = otype.Ordinal(10**30)
    assert big.terms == [(otype.Ordinal(0), 10**30)]


def test_poset_and_formula():
    n = otype.FinitePoset(4, [(0, 2), (1, 2), (1, 3)])
    assert otype.maximal_elements(n) == [2, 3]
    assert otype.count_linear_extensions(n) == 5
    assert otype.proof_trace_o("w+1", n) == otype.vialard("w+1", otype.DeltaMK(0, 4, 2))


def test_witness():
    segments, claimed = otype.witness_product_antichain("w+1", 2)
    assert str(claimed) == "w*2+2"
    term = otype.WpoTerm.parse("ord(w+1) . antichain(2)")
    assert otype.validate_witness(segments, term, 20)["passed"]
    assert not otype.validate_witness(list(reversed(segments)), term)["passed"]


def test_suite():
    r = otype.run_suite("k0-law", seed=3, cases=50)
    assert r["passed"] and r["cases"] == 50


def test_errors():
    with pytest.raises(ValueError):
        otype.Ordinal("w*0")
    with pytest.raises(ValueError):
        otype.eval("chain(2) + foo(1)")
    with pytest.raises(RuntimeError):
        otype.linear_extensions(otype.FinitePoset.antichain(11))
