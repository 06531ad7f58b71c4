"""Tests for cyclotomic stripping, Salem/Pisot classification, convergence."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chebsalem import (
    FamilySpec,
    IntPoly,
    SalemAnalysis,
    classify_salem,
    cyclotomic_poly,
    lift,
    pisot_check,
    poly_of,
    salem_convergence_study,
    strip_cyclotomic,
)
from chebsalem.errors import NotApplicable, UncertifiedRoots
from chebsalem.families import closed_form_z, q_poly
from chebsalem.salem import totient

LEHMER = IntPoly((1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1))

# z^2 - z - 1, z^2 - 3z + 1, Lehmer: all free of cyclotomic factors.
CYCLOTOMIC_FREE = [
    IntPoly((-1, -1, 1)),
    IntPoly((1, -3, 1)),
    LEHMER,
]


# ---------------------------------------------------------------------------
# totient / cyclotomic_poly
# ---------------------------------------------------------------------------


def test_totient_small_values():
    assert [totient(d) for d in range(1, 13)] == [
        1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4,
    ]


def test_totient_rejects_nonpositive():
    with pytest.raises(ValueError):
        totient(0)


CYCLOTOMIC_KNOWN = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    5: (1, 1, 1, 1, 1),
    6: (1, -1, 1),
    7: (1, 1, 1, 1, 1, 1, 1),
    8: (1, 0, 0, 0, 1),
    9: (1, 0, 0, 1, 0, 0, 1),
    10: (1, -1, 1, -1, 1),
    12: (1, 0, -1, 0, 1),
}


@pytest.mark.parametrize("d", sorted(CYCLOTOMIC_KNOWN))
def test_cyclotomic_poly_known(d):
    assert cyclotomic_poly(d).coeffs == CYCLOTOMIC_KNOWN[d]


def test_cyclotomic_poly_degree_is_totient():
    for d in range(1, 40):
        assert cyclotomic_poly(d).degree == totient(d)


def test_cyclotomic_product_over_divisors():
    # prod_{d | n} Phi_d = z^n - 1
    for n in (6, 12, 30):
        prod = IntPoly.one()
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic_poly(d)
        assert prod == IntPoly.monomial(1, n) - IntPoly.one()


def test_cyclotomic_poly_rejects_nonpositive():
    with pytest.raises(ValueError):
        cyclotomic_poly(0)


# ---------------------------------------------------------------------------
# strip_cyclotomic
# ---------------------------------------------------------------------------


def test_strip_known_product():
    core = IntPoly((1, -3, 1))
    prod = core * cyclotomic_poly(1) * cyclotomic_poly(6) ** 2
    analysis = strip_cyclotomic(prod)
    assert analysis.cyclotomic_factors == ((1, 1), (6, 2))
    assert analysis.core == core
    assert analysis.classification is None
    assert analysis.reconstruct() == prod


def test_strip_pure_cyclotomic_leaves_constant_core():
    analysis = strip_cyclotomic(cyclotomic_poly(5) * cyclotomic_poly(8))
    assert analysis.cyclotomic_factors == ((5, 1), (8, 1))
    assert analysis.core.degree == 0


def test_strip_cyclotomic_free_is_identity():
    analysis = strip_cyclotomic(LEHMER)
    assert analysis.cyclotomic_factors == ()
    assert analysis.core == LEHMER


def test_strip_rejects_zero():
    with pytest.raises(ValueError):
        strip_cyclotomic(IntPoly(()))


@settings(max_examples=60, deadline=None)
@given(
    core_index=st.integers(min_value=0, max_value=len(CYCLOTOMIC_FREE) - 1),
    mults=st.fixed_dictionaries(
        {d: st.integers(min_value=0, max_value=2) for d in (1, 2, 3, 4, 6)}
    ),
)
def test_strip_reconstruct_roundtrip(core_index, mults):
    core = CYCLOTOMIC_FREE[core_index]
    prod = core
    for d, m in mults.items():
        prod = prod * cyclotomic_poly(d) ** m
    analysis = strip_cyclotomic(prod)
    assert analysis.core == core
    expected = tuple(sorted((d, m) for d, m in mults.items() if m))
    assert analysis.cyclotomic_factors == expected
    assert analysis.reconstruct() == prod


# ---------------------------------------------------------------------------
# classify_salem
# ---------------------------------------------------------------------------


def test_classify_lehmer_salem_like():
    analysis = classify_salem(LEHMER)
    assert analysis.classification == "SalemLike"
    assert analysis.cyclotomic_factors == ()
    assert analysis.core == LEHMER
    lo, hi = analysis.tau_enclosure
    assert Fraction("1.17628") < lo < hi < Fraction("1.17629")
    assert hi - lo < Fraction(1, 10**10)
    assert float(lo) == pytest.approx(1.1762808182593, abs=1e-12)


def test_classify_lehmer_times_cyclotomics_same_tau():
    prod = LEHMER * cyclotomic_poly(1) * cyclotomic_poly(4)
    analysis = classify_salem(prod)
    assert analysis.classification == "SalemLike"
    assert analysis.cyclotomic_factors == ((1, 1), (4, 1))
    assert analysis.core == LEHMER


def test_classify_two_param_product_negative_salem():
    product = closed_form_z(FamilySpec.two(1, 2, 2)).lhs.to_int()
    analysis = classify_salem(product)
    assert analysis.classification == "NegativeSalemLike"
    lo, hi = analysis.tau_enclosure
    assert hi < -1
    assert float(lo) == pytest.approx(-2.7193389006, abs=1e-9)


def test_classify_minus1_product_core():
    product = closed_form_z(FamilySpec.minus1(0, 2)).lhs.to_int()
    analysis = classify_salem(product)
    assert analysis.classification == "SalemLike"
    # z^6 - z^5 - z^3 - z + 1
    assert analysis.core == IntPoly((1, -1, 0, -1, 0, -1, 1))
    assert analysis.cyclotomic_factors == ((1, 1), (2, 1))
    lo, hi = analysis.tau_enclosure
    assert float(lo) == pytest.approx(1.5061356795, abs=1e-9)


def test_classify_kronecker_family_member():
    member = lift(poly_of(FamilySpec.an(4))).inner
    assert classify_salem(member).classification == "Kronecker"


def test_classify_pure_cyclotomic_is_kronecker():
    assert classify_salem(cyclotomic_poly(5)).classification == "Kronecker"


@pytest.mark.parametrize(
    "poly",
    [
        IntPoly((2, 1)),  # non-palindromic core
        IntPoly.one(),  # degree zero
        IntPoly((1, -3, 1)),  # palindromic but degree < 4
    ],
)
def test_classify_other(poly):
    assert classify_salem(poly).classification == "Other"


def test_classify_refine_to_narrows_enclosure():
    wide = classify_salem(LEHMER, refine_to=Fraction(1, 2**20))
    tight = classify_salem(LEHMER, refine_to=Fraction(1, 2**100))
    w_lo, w_hi = wide.tau_enclosure
    t_lo, t_hi = tight.tau_enclosure
    assert t_hi - t_lo <= Fraction(1, 2**100)
    assert w_lo <= t_lo and t_hi <= w_hi


def test_analysis_to_json_shape():
    payload = classify_salem(LEHMER).to_json()
    assert set(payload) == {"cyclotomic", "core", "class", "tau"}
    assert payload["class"] == "SalemLike"
    assert payload["cyclotomic"] == []
    assert payload["core"]["coeffs"][0] == "1"
    lo, hi = (Fraction(v) for v in payload["tau"])
    assert lo < hi


def test_analysis_to_json_no_tau():
    payload = classify_salem(cyclotomic_poly(5)).to_json()
    assert payload["tau"] is None
    assert payload["class"] == "Kronecker"


# ---------------------------------------------------------------------------
# pisot_check
# ---------------------------------------------------------------------------


def test_pisot_golden_ratio():
    assert pisot_check(IntPoly((-1, -1, 1))) == "PisotLike"


def test_pisot_linear_sides():
    assert pisot_check(IntPoly((-2, 1))) == "PisotLike"
    assert pisot_check(IntPoly((2, 1))) == "NegativePisotLike"


def test_pisot_no_when_two_roots_outside():
    assert pisot_check(IntPoly((-4, 0, 1))) == "No"


def test_pisot_no_for_constant():
    assert pisot_check(IntPoly((5,))) == "No"


def test_pisot_raises_near_circle():
    with pytest.raises(UncertifiedRoots):
        pisot_check(IntPoly((-1, 1)) * IntPoly((-2, 1)))


def test_pisot_rejects_wrong_type():
    with pytest.raises(TypeError):
        pisot_check([1, 2, 3])


def test_pisot_two_param_combination():
    # h2 odd keeps Q integral; h2 even gives half-integer coefficients.
    assert pisot_check(q_poly(FamilySpec.two(1, 3, 2))) == "NegativePisotLike"
    assert pisot_check(q_poly(FamilySpec.two(2, 4, 2))) == "ExtendedNegativePisotLike"


def test_pisot_three_param_combination():
    result = pisot_check(q_poly(FamilySpec.three(1, 2, 3, 1)))
    assert result == "ExtendedNegativePisotLike"


# ---------------------------------------------------------------------------
# salem_convergence_study
# ---------------------------------------------------------------------------


def test_convergence_minus1_k0_toward_sqrt5():
    rows = salem_convergence_study(FamilySpec.minus1(0, 1), range(2, 7))
    assert [row.n for row in rows] == [2, 3, 4, 5, 6]
    lo, hi = rows[0].root_enclosure
    assert float(lo) == pytest.approx(2.17008648663, abs=1e-10)
    # distances strictly decrease, certified interval against interval
    for earlier, later in zip(rows, rows[1:]):
        assert later.distance[1] < earlier.distance[0]
    # target is sqrt(5): the final root enclosure must sit below it
    assert rows[-1].root_enclosure[1] ** 2 < 5


def test_convergence_two_param_toward_limit_poly_root():
    rows = salem_convergence_study(FamilySpec.two(1, 2, 1), range(1, 5))
    for earlier, later in zip(rows, rows[1:]):
        assert later.distance[1] < earlier.distance[0]
    for row in rows:
        assert row.distance[0] >= 0
        assert row.root_enclosure[1] < -2


def test_convergence_rejects_kronecker_families():
    with pytest.raises(NotApplicable):
        salem_convergence_study(FamilySpec.an(3), range(2, 4))


def test_convergence_rows_sorted_by_n():
    rows = salem_convergence_study(FamilySpec.minus1(1, 1), [4, 2, 3])
    assert [row.n for row in rows] == [2, 3, 4]
