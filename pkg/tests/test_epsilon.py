import math
from fractions import Fraction

import pytest

from birdtracks.coefficients import rf
from birdtracks.diagrams import compose
from birdtracks.epsilon import (
    TransientParams,
    baryon_equivalence_report,
    epsilon_tensor,
    leibniz_translate,
    lr_decomposition,
    lr_pair_projector,
    pieri_add_antifundamental,
    shape_dimension,
    transient_singlet_params,
    transient_singlet_projector,
    verify_baryon_equivalence,
)
from birdtracks.errors import BadBlockSize, DimensionMismatch, OutOfRange
from birdtracks.numeric import ExactTensor, evaluate
from birdtracks.symmetrizers import antisymmetrizer
from birdtracks.tracebasis import adjoint_pair_diagram, pair_singlet_projector


def test_epsilon_symbol_rank_two():
    eps = epsilon_tensor(2)
    assert eps.shape == (2, 2)
    assert eps.entries == {(0, 1): Fraction(1), (1, 0): Fraction(-1)}


def test_epsilon_pair_contraction_counts_permutations():
    for n in (2, 3, 4):
        eps = epsilon_tensor(n)
        total = sum(v * v for v in eps.entries.values())
        assert total == math.factorial(n)


def test_epsilon_pair_is_the_antisymmetrizer():
    # eps outer eps, divided by N!, is the full antisymmetric projector
    for n in (2, 3, 4):
        eps = epsilon_tensor(n)
        scale = Fraction(1, math.factorial(n))
        paired = {}
        for ko, vo in eps.entries.items():
            for ki, vi in eps.entries.items():
                paired[ko + ki] = vo * vi * scale
        want = evaluate(antisymmetrizer(range(1, n + 1), n), n)
        assert paired == want.entries


def test_epsilon_rejects_small_rank():
    with pytest.raises(OutOfRange):
        epsilon_tensor(1)


def test_pieri_three_branch_example():
    grown = pieri_add_antifundamental("[2,1]", 4)
    assert [s.to_text() for s in grown] == ["[3,2,1]", "[3,1,1,1]", "[2,2,1,1]"]


def test_pieri_from_empty_shape_is_one_column():
    for n in (2, 3, 5):
        grown = pieri_add_antifundamental(None, n)
        assert len(grown) == 1
        assert grown[0].rows == (1,) * (n - 1)


def test_pieri_single_box_has_two_positions():
    grown = pieri_add_antifundamental("[1]", 2)
    assert [s.rows for s in grown] == [(2,), (1, 1)]


def test_pieri_rejects_overdeep_shape():
    with pytest.raises(OutOfRange):
        pieri_add_antifundamental("[1,1,1]", 2)
    with pytest.raises(OutOfRange):
        pieri_add_antifundamental("[2,1]", 1)


def test_lr_decomposition_examples():
    assert [s.rows for s in lr_decomposition(1, 0, 3)] == [(1,)]
    assert shape_dimension("[1]", 3) == 3

    two_quarks = lr_decomposition(2, 0, 3)
    assert [s.rows for s in two_quarks] == [(2,), (1, 1)]
    assert [shape_dimension(s, 3) for s in two_quarks] == [6, 3]

    pair = lr_decomposition(1, 1, 4)
    assert [s.rows for s in pair] == [(2, 1, 1), (1, 1, 1, 1)]
    assert [shape_dimension(s, 4) for s in pair] == [15, 1]


def test_lr_dimension_conservation():
    for m, n in ((1, 1), (2, 1), (2, 2)):
        for n_param in (3, 4):
            shapes = lr_decomposition(m, n, n_param)
            total = sum(shape_dimension(s, n_param) for s in shapes)
            assert total == n_param ** (m + n)


def test_lr_decomposition_empty_product():
    assert lr_decomposition(0, 0, 3) == []


def test_shape_dimension_strips_full_columns():
    # a full height-N column is a determinant factor, not content
    assert shape_dimension("[2,1,1]", 3) == shape_dimension("[1]", 3) == 3
    assert shape_dimension("[1,1,1]", 3) == 1
    assert shape_dimension("[2,2,2]", 3) == 1
    with pytest.raises(OutOfRange):
        shape_dimension("[1,1,1]", 2)


def test_transient_params_baryon_families():
    for n in (3, 4, 5):
        assert transient_singlet_params(n, 0, n) == [
            TransientParams(1, 0, 0, n - 1)]
    assert transient_singlet_params(3, 0, 3) == [TransientParams(1, 0, 0, 2)]
    assert transient_singlet_params(1, 0, 3) == []
    assert transient_singlet_params(3, 0, 4) == []
    assert transient_singlet_params(4, 1, 3) == [TransientParams(1, 0, 1, 3)]


def test_transient_params_consistency():
    for n_param in (3, 4):
        for m in range(7):
            for n in range(7):
                for p in transient_singlet_params(m, n, n_param):
                    assert p.a >= 0 and p.b >= 0 and p.k >= 0
                    assert p.a + p.b >= 1
                    assert m - p.a * n_param == p.k
                    assert n - p.b * n_param == p.k
                    assert p.alpha == (p.a + p.b) * (n_param - 1) + p.k
                    assert p.alpha >= p.k


def test_transient_params_validation():
    with pytest.raises(OutOfRange):
        transient_singlet_params(3, 0, 1)
    with pytest.raises(OutOfRange):
        transient_singlet_params(-1, 0, 3)


def test_transient_params_json_round_trip():
    p = TransientParams(1, 0, 1, 3)
    assert TransientParams.from_json(p.to_json()) == p


def _tensor_matrix_square(t: ExactTensor) -> list[list[Fraction]]:
    half = len(t.shape) // 2
    mat = t.matrix_rows(half)
    size = len(mat)
    out = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for k in range(size):
            if mat[i][k]:
                for j in range(size):
                    if mat[k][j]:
                        out[i][j] += mat[i][k] * mat[k][j]
    return out


def test_transient_projector_baryon_case():
    proj = transient_singlet_projector(TransientParams(1, 0, 0, 2), 3)
    t = evaluate(proj, 3)
    assert t.trace() == 1
    assert _tensor_matrix_square(t) == t.matrix_rows(4)


def test_transient_projector_spot_check_with_generic_pairs():
    proj = transient_singlet_projector(TransientParams(1, 0, 1, 3), 3)
    assert evaluate(proj, 3).trace() == 1


def test_transient_projector_rejects_generic_layout():
    with pytest.raises(OutOfRange):
        transient_singlet_projector(TransientParams(0, 0, 2, 2), 3)
    with pytest.raises(OutOfRange):
        transient_singlet_projector(TransientParams(1, 0, 0, 5), 3)


def test_leibniz_restricted_epsilon_orthogonality():
    # one epsilon against another over their shared N-1 legs: the leftover
    # pair of indices is (N-1)! times the identity line
    translated, count = leibniz_translate(epsilon_tensor(3), 1)
    assert count == 2
    assert translated.shape == (3, 3)
    assert translated.entries == {(i, i): Fraction(2) for i in range(3)}


def test_leibniz_block_size_validation():
    eps = epsilon_tensor(3)
    with pytest.raises(BadBlockSize):
        leibniz_translate(eps, 0)
    with pytest.raises(BadBlockSize):
        leibniz_translate(eps, 3)
    skinny = ExactTensor((3,), entries={(0,): Fraction(1)})
    with pytest.raises(BadBlockSize):
        leibniz_translate(skinny, 1)
    ragged = ExactTensor((3, 2), entries={})
    with pytest.raises(DimensionMismatch):
        leibniz_translate(ragged, 1)
    with pytest.raises(OutOfRange):
        leibniz_translate(ExactTensor.from_array([[0.0, 1.0], [-1.0, 0.0]]), 1)


def test_lr_pair_projector_singlet_matches_trace_pair():
    for n in (2, 3, 4):
        assert lr_pair_projector("singlet", n) == evaluate(
            pair_singlet_projector(), n)


def test_lr_pair_projector_adjoint_matches_fierz_form():
    for n in (2, 3, 4):
        assert lr_pair_projector("adjoint", n) == evaluate(
            adjoint_pair_diagram(), n)


def test_lr_pair_projector_unknown_kind():
    with pytest.raises(ValueError):
        lr_pair_projector("octet", 3)


def test_baryon_equivalence_holds_at_three():
    report = baryon_equivalence_report(3)
    assert report == {
        "transient_exists": True,
        "pairing_matches_antisymmetrizer": True,
        "untwisted_variant_matches": True,
        "correlator_coincidence": True,
    }
    assert verify_baryon_equivalence(3)


def test_baryon_equivalence_fails_off_three():
    # at N=4 the three-box column is binomial(4,3) = 4 dimensional, so the
    # three-quark operator has no singlet partner to be equivalent to
    assert shape_dimension("[1,1,1]", 4) == 4
    report = baryon_equivalence_report(4)
    assert not report["transient_exists"]
    assert not verify_baryon_equivalence(4)


def test_untwisted_translation_flips_one_sign():
    state = antisymmetrizer([1, 2], 2).bend()
    st = evaluate(state, 3)
    main, _ = leibniz_translate(st.permuted((2, 3, 0, 1)), 1)
    swapped, _ = leibniz_translate(st.permuted((3, 2, 0, 1)), 1)
    assert swapped.entries == {k: -v for k, v in main.entries.items()}


def test_partial_trace_prefactor_at_boundary():
    # closing p - k legs of the length-p antisymmetrizer leaves the
    # length-k one, scaled by (N-k)! k! / ((N-p)! p!); checked at N = p
    # where the symbol would otherwise be on the edge of vanishing
    for p, k in ((3, 1), (3, 2), (4, 2)):
        asym = antisymmetrizer(range(1, p + 1), p)
        closed = asym.partial_trace(range(k, p))
        factor = Fraction(math.factorial(p - k) * math.factorial(k),
                          math.factorial(p))
        want = antisymmetrizer(range(1, k + 1), k).scaled(rf([factor]))
        assert evaluate(closed, p) == evaluate(want, p)


def test_antisymmetrizer_absorption_numeric():
    for short, long in ((2, 3), (3, 4)):
        inner = antisymmetrizer(range(1, short + 1), long)
        outer = antisymmetrizer(range(1, long + 1), long)
        for n in (3, 4, 5):
            assert evaluate(compose(outer, inner), n) == evaluate(outer, n)
