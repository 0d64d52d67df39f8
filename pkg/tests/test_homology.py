"""Cohomology tables, the two total-complex models, and their identities."""

import pytest

from hopfcyclic import (QQ, GF, Matrix, cyc_algebra, cohomology_table,
                        hochschild_table, compare_models, AlgebraData)
from hopfcyclic.homology import (mixed_of_cyclic, cyclic_bicomplex,
                                 transpose_module, MixedComplex,
                                 IdentityFailure, hochschild_b)
from hopfcyclic import fixtures as fx


def unit_algebra(field=QQ):
    return AlgebraData(field, 1, {(0, 0): {0: field.one}}, {0: field.one},
                       labels=["1"])


def test_cyclic_cohomology_of_the_ground_field():
    x = cyc_algebra(unit_algebra(), 4)
    t = cohomology_table(x, "mixed", 2)
    assert [t.degrees[n] for n in (0, 1, 2)] == [1, 0, 1]


def test_cyclic_cohomology_of_kz2_group_algebra(kz2):
    x = cyc_algebra(kz2.algebra, 4)
    t = cohomology_table(x, "mixed", 2)
    assert [t.degrees[n] for n in (0, 1, 2)] == [2, 0, 2]


def test_cyclic_cohomology_of_product_field():
    x = cyc_algebra(fx.product_field_algebra(), 4)
    t = cohomology_table(x, "bicomplex", 2)
    # two points: HC of each summand adds up
    assert [t.degrees[n] for n in (0, 1, 2)] == [2, 0, 2]


def test_hochschild_of_dual_numbers():
    x = cyc_algebra(fx.dual_numbers_algebra(), 5)
    t = hochschild_table(x, 3)
    assert [t.degrees[n] for n in (0, 1, 2, 3)] == [2, 1, 1, 1]


def test_hochschild_of_ground_field_vanishes_positively():
    x = cyc_algebra(unit_algebra(), 4)
    t = hochschild_table(x, 2)
    assert [t.degrees[n] for n in (0, 1, 2)] == [1, 0, 0]


def test_models_agree_on_fixtures(kz2, kz2_hopf_complex):
    for x in (cyc_algebra(unit_algebra(), 4),
              cyc_algebra(fx.dual_numbers_algebra(), 4),
              cyc_algebra(kz2.algebra, 4),
              kz2_hopf_complex):
        rep = compare_models(x)
        assert rep["agree"], getattr(x, "name", x)
        assert rep["stable_range"] == x.N - 2


def test_models_agree_over_prime_field():
    x = cyc_algebra(fx.group_algebra(GF(3), 2).algebra, 4)
    assert compare_models(x)["agree"]


def test_hopf_cyclic_cohomology_of_kz2(kz2, kz2_hopf_complex):
    # twisted coefficients (sigma = g) kill everything; the trivial pair
    # reproduces the cohomology of the ground field
    t = cohomology_table(kz2_hopf_complex, "mixed", 2)
    assert [t.degrees[n] for n in (0, 1, 2)] == [0, 0, 0]
    from hopfcyclic import hopf_cyclic_complex
    mc = fx.regular_module_coalgebra(kz2)
    c_triv = hopf_cyclic_complex(mc, fx.trivial_modcomodule(kz2), 4)
    t2 = cohomology_table(c_triv, "mixed", 2)
    assert [t2.degrees[n] for n in (0, 1, 2)] == [1, 0, 1]


def test_mixed_complex_identities_hold(kz2_hopf_complex):
    mixed = mixed_of_cyclic(transpose_module(kz2_hopf_complex))
    assert mixed.violations() == []


def test_bicomplex_identities_hold(kz2_hopf_complex):
    bic = cyclic_bicomplex(kz2_hopf_complex)
    assert bic.violations() == []


def test_corrupted_b_operator_is_named():
    x = cyc_algebra(fx.dual_numbers_algebra(), 4)
    mixed = mixed_of_cyclic(transpose_module(x))
    n = sorted(mixed.B)[1]
    bad_B = dict(mixed.B)
    bad_B[n] = Matrix.zero(mixed.field, bad_B[n].rows, bad_B[n].cols)
    broken = MixedComplex(mixed.field, mixed.orientation, mixed.spaces,
                          mixed.b, bad_B, check=False)
    report = broken.violations()
    assert report
    assert any("bB + Bb != 0" in line or "B^2 != 0" in line
               for line in report)


def test_mixed_complex_constructor_rejects_corruption():
    x = cyc_algebra(fx.dual_numbers_algebra(), 4)
    mixed = mixed_of_cyclic(transpose_module(x))
    n = sorted(mixed.b)[1]
    bad_b = dict(mixed.b)
    bad_b[n] = Matrix.zero(mixed.field, bad_b[n].rows, bad_b[n].cols)
    with pytest.raises(IdentityFailure):
        MixedComplex(mixed.field, mixed.orientation, mixed.spaces,
                     bad_b, mixed.B)


def test_hochschild_b_squares_to_zero(kz2_hopf_complex):
    x = kz2_hopf_complex
    # cochain b raises degree, so compose upward
    for n in range(1, x.N):
        b_lo = hochschild_b(x, n - 1)
        b_hi = hochschild_b(x, n)
        if b_lo is not None and b_hi is not None:
            assert (b_hi * b_lo).is_zero()


def test_table_text_and_dict():
    x = cyc_algebra(unit_algebra(), 4)
    t = cohomology_table(x, "mixed", 3)
    d = t.as_dict()
    assert d["model"] == "mixed" and d["degrees"]["0"] == 1
    text = t.text()
    assert "degree" in text and "truncation-affected" in text


def test_tables_compare_over_common_stable_range():
    x = cyc_algebra(unit_algebra(), 5)
    t_long = cohomology_table(x, "mixed", 3)
    t_short = cohomology_table(cyc_algebra(unit_algebra(), 4), "bicomplex", 2)
    assert t_long == t_short
