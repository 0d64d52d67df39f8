"""Characteristic morphisms, traces, cocycles and cup products."""

import pytest

from hopfcyclic import (QQ, alpha, beta, xi, star, invariant_traces,
                        cyclic_cocycles, from_cyclic_cocycle,
                        classes_from_cohomology, cup_with_trace,
                        crossed_cup_with_trace, crossed_cocup_with_invariant,
                        cm_char_map, pullback, diag_tensor_epi_check,
                        coefficient_complex, modular_pair_module,
                        NotCocycle, HypothesisFailure, NotEquivariant)
from hopfcyclic.pairings import CochainClass
from hopfcyclic.cyclic import ModuleMorphism
from hopfcyclic import fixtures as fx


@pytest.fixture(scope="module")
def pairing(kz2):
    return fx.action_pairing(fx.regular_module_coalgebra(kz2),
                             fx.dual_numbers_module_algebra(kz2))


@pytest.fixture(scope="module")
def alpha_mor(pairing, pair_triv):
    return alpha(pairing, pair_triv, 3)


@pytest.fixture(scope="module")
def xi_mor(kz2, pair_triv):
    zc = fx.function_comodule_coalgebra(kz2)
    mc = fx.regular_module_coalgebra(kz2)
    return xi(zc, mc, pair_triv, 3)


def test_alpha_commutes_with_all_structure_maps(alpha_mor):
    assert alpha_mor.verify() == []


def test_alpha_rejects_non_equivariant_pairings(kz2, pair_triv):
    from hopfcyclic.hopf import EquivariantPairing
    mc = fx.regular_module_coalgebra(kz2)
    ma = fx.dual_numbers_module_algebra(kz2)
    f = QQ
    # phi(c, a) = a ignores c entirely and is not multiplicative
    phi = {(c, a): {a: f.one} for c in range(2) for a in range(2)}
    bad = EquivariantPairing(mc, ma, phi)
    with pytest.raises(NotEquivariant):
        alpha(bad, pair_triv, 2)


def test_beta_commutes_with_all_structure_maps(kz2, pair_triv):
    ma = fx.dual_numbers_module_algebra(kz2)
    ca = fx.regular_comodule_algebra(kz2)
    bm = beta(ma, ca, pair_triv, 3)
    assert bm.verify() == []


def test_xi_commutes_with_all_structure_maps(xi_mor):
    assert xi_mor.verify() == []


def test_xi_with_twisted_coefficients(kz2, pair_g):
    zc = fx.function_comodule_coalgebra(kz2)
    mc = fx.regular_module_coalgebra(kz2)
    xm = xi(zc, mc, pair_g, 2)
    assert xm.verify() == []


def test_xi_over_kz3(kz3):
    zc = fx.function_comodule_coalgebra(kz3)
    mc = fx.regular_module_coalgebra(kz3)
    m = modular_pair_module(kz3, fx.trivial_modular_pair(kz3))
    xm = xi(zc, mc, m, 2)
    assert xm.verify() == []


def test_xi_trivial_hopf_reduction(triv_hopf):
    """Over the trivial Hopf algebra both twisted forms collapse to the
    plain pairing map and still agree and commute."""
    zc = fx.function_comodule_coalgebra(triv_hopf, 1)
    mc = fx.regular_module_coalgebra(triv_hopf)
    m = fx.trivial_modcomodule(triv_hopf)
    xm = xi(zc, mc, m, 3)
    assert xm.verify() == []


def test_star_commutes_and_needs_commutativity(kz2, sweedler, pair_triv):
    zc = fx.function_comodule_coalgebra(kz2)
    st = star(zc, zc, pair_triv, pair_triv, 2)
    assert st.verify() == []
    z_sw = fx.trivial_comodule_coalgebra(sweedler, sweedler.coalgebra)
    m_sw = fx.trivial_modcomodule(sweedler)
    with pytest.raises(HypothesisFailure):
        star(z_sw, z_sw, m_sw, m_sw, 2)


def test_invariant_trace_is_unique_here(alpha_mor):
    traces = invariant_traces(alpha_mor.target.meta["y"])
    assert len(traces) == 1
    assert traces[0].t0 == {0: QQ.one}


def test_trace_is_a_degree_zero_cyclic_cocycle(alpha_mor):
    y = alpha_mor.target.meta["y"]
    tr = invariant_traces(y)[0]
    assert tr.as_class().is_cocycle()
    # the extension through the zeroth face stays nonzero and tau-shaped
    for p in (1, 2):
        ext = tr.extended(p)
        assert ext
        assert y.tau(0).transpose().apply(tr.extended(0)) == tr.extended(0)


def test_cyclic_cocycle_counts_on_crossed_coalgebra(xi_mor):
    counts = [len(cyclic_cocycles(xi_mor.source, p)) for p in (0, 1, 2)]
    assert counts == [1, 3, 4]


def test_from_cyclic_cocycle_rejects_garbage(alpha_mor):
    x = alpha_mor.target.meta["x"]
    f = x.field
    with pytest.raises(NotCocycle):
        from_cyclic_cocycle(x, 1, {0: f.one})


def test_char_map_routes_agree_and_match_cup(pairing, alpha_mor):
    x = alpha_mor.target.meta["x"]
    trace = invariant_traces(alpha_mor.target.meta["y"])[0]
    for p in (0, 1):
        for cls in cyclic_cocycles(x, p):
            gamma = cm_char_map(trace, pairing, cls, alpha_mor=alpha_mor)
            cup = cup_with_trace(cls, trace, alpha_mor)
            assert gamma == cup
            assert gamma.is_cocycle()


def test_char_map_scales_bilinearly(pairing, alpha_mor):
    x = alpha_mor.target.meta["x"]
    trace = invariant_traces(alpha_mor.target.meta["y"])[0]
    cls = next(c for p in (0, 1, 2) for c in cyclic_cocycles(x, p))
    f = x.field
    doubled = cm_char_map(trace, pairing, cls.scaled(f(2)),
                          alpha_mor=alpha_mor)
    single = cm_char_map(trace, pairing, cls, alpha_mor=alpha_mor)
    assert doubled == single.scaled(f(2))


def test_pullback_along_identity_is_identity(alpha_mor):
    y = alpha_mor.target.meta["y"]
    f = y.field
    from hopfcyclic.linalg import Matrix
    ident = ModuleMorphism(y, y, {n: Matrix.identity(f, y.spaces[n])
                                  for n in y.spaces})
    cls = cyclic_cocycles(y, 0)[0]
    assert pullback(ident, cls) == cls


def test_crossed_cup_with_trace(kz2, pair_triv):
    ma = fx.dual_numbers_module_algebra(kz2)
    ca = fx.regular_comodule_algebra(kz2)
    bm = beta(ma, ca, pair_triv, 2)
    trace = invariant_traces(bm.target.meta["y"])[0]
    cls = cyclic_cocycles(bm.source, 0)[0]
    out = crossed_cup_with_trace(cls, trace, bm)
    assert out.is_cocycle()
    assert out.degree == 0


def test_crossed_cocup_with_invariant(xi_mor):
    f = QQ
    reps = {}
    for p in (0, 2):
        cls = cyclic_cocycles(xi_mor.source, p)[0]
        out = crossed_cocup_with_invariant(cls, {0: f.one}, xi_mor)
        assert out.is_cocycle()
        reps[p] = out.representative
    assert reps[0] == {0: f(2)}
    assert reps[2] == {3: f(2)}


def test_cocup_rejects_non_invariant_seed(xi_mor):
    x = xi_mor.target.meta["x"]
    f = x.field
    cls = cyclic_cocycles(xi_mor.source, 0)[0]
    # a vector moved by tau_0 cannot seed the evaluation
    seed = None
    for i in range(x.spaces[0]):
        v = {i: f.one}
        if x.tau(0).apply(v) != v:
            seed = v
            break
    if seed is not None:
        with pytest.raises(NotCocycle):
            crossed_cocup_with_invariant(cls, seed, xi_mor)


def test_classes_from_cohomology_are_cocycles(kz2_hopf_complex):
    for model in ("mixed", "bicomplex"):
        classes = classes_from_cohomology(kz2_hopf_complex, 2, model=model)
        for cls in classes:
            assert cls.is_cocycle()


def test_diag_tensor_epi_check(kz2, pair_triv):
    ma = fx.dual_numbers_module_algebra(kz2)
    rep = diag_tensor_epi_check(ma, ma, pair_triv, pair_triv, 1)
    assert rep["surjective"] and rep["descends"]
    bad = diag_tensor_epi_check(ma, ma, pair_triv, pair_triv, 1,
                                drop_factor=True)
    assert not bad["surjective"]


def test_coefficient_complex_levels(kz2, pair_g):
    mc = fx.regular_module_coalgebra(kz2)
    t = coefficient_complex(mc, pair_g, 3, level="T")
    q = coefficient_complex(mc, pair_g, 3, level="Q")
    c = coefficient_complex(mc, pair_g, 3, level="C")
    assert t.dims() == {n: 2 ** (n + 1) for n in range(4)}
    assert q.dims() == c.dims() == {n: 2 ** n for n in range(4)}


def test_cochain_class_differential_detects_non_cocycles(alpha_mor):
    x = alpha_mor.target.meta["x"]
    f = x.field
    probe = CochainClass(x, 1, {1: {0: f.one}})
    if not probe.is_cocycle():
        assert probe.differential().components
