import random

from fractions import Fraction

import pytest

from birdtracks.coefficients import N, ONE, RadicalCoefficient, rf, sqrt
from birdtracks.diagrams import (
    InvariantElement,
    Signature,
    compose,
    format_cycles,
    identity,
    inner_product,
    ketbra,
    ket_signature,
    operator_signature,
    parse_cycles,
    permutation_element,
    tensor,
    zero,
)
from birdtracks.errors import (
    MixedRoleTensor,
    OrientationViolation,
    OutOfRange,
    SignatureMismatch,
)


def perm_op(orients, text):
    sig = Signature(orients)
    return permutation_element(sig, parse_cycles(text, len(orients)))


def rc(num, den=(1,)):
    return RadicalCoefficient.from_rational(rf(num, den))


def random_perm(rng, size):
    perm = list(range(size))
    rng.shuffle(perm)
    return tuple(perm)


def test_cycle_parser_round_trip():
    assert parse_cycles("(1 2 3)", 4) == (1, 2, 0, 3)
    assert parse_cycles("(1 3)(2 4)", 4) == (2, 3, 0, 1)
    assert parse_cycles("e", 3) == (0, 1, 2)
    assert format_cycles((1, 2, 0, 3)) == "(1 2 3)"
    assert format_cycles((0, 1, 2)) == "e"
    rng = random.Random(11)
    for _ in range(30):
        perm = random_perm(rng, 6)
        assert parse_cycles(format_cycles(perm), 6) == perm


def test_cycle_parser_rejects_garbage():
    with pytest.raises(OutOfRange):
        parse_cycles("(1 2", 3)
    with pytest.raises(OutOfRange):
        parse_cycles("(1 5)", 3)
    with pytest.raises(OutOfRange):
        parse_cycles("(1 2)(2 3)", 3)


def test_compose_matches_permutation_product_on_fundamentals():
    # left-to-right gluing acts as "left after right"
    a = perm_op("qqq", "(1 2)")
    b = perm_op("qqq", "(1 3 2)")
    assert compose(a, b) == perm_op("qqq", "(1 3)")
    rng = random.Random(23)
    sig = Signature("qqqqq")
    for _ in range(25):
        s = random_perm(rng, 5)
        t = random_perm(rng, 5)
        st = tuple(s[t[x]] for x in range(5))
        lhs = compose(permutation_element(sig, s), permutation_element(sig, t))
        assert lhs == permutation_element(sig, st)


def test_mixed_composition_produces_loop_factor():
    # on V(x)V(x)V* the permutation images of (1 2 3) and (1 3 2) compose
    # to N times the image of (1 3): one closed loop appears
    a = perm_op("qqb", "(1 2 3)")
    b = perm_op("qqb", "(1 3 2)")
    expected = perm_op("qqb", "(1 3)").scaled(N)
    assert compose(a, b) == expected


def test_identity_is_neutral():
    rng = random.Random(5)
    for orients in ("qqq", "qqb", "qbqb", "bbq"):
        sig = Signature(orients)
        e = identity(sig)
        for _ in range(5):
            d = permutation_element(sig, random_perm(rng, len(orients)))
            assert compose(e, d) == d
            assert compose(d, e) == d


def test_trace_counts_cycles():
    assert perm_op("qqq", "e").trace() == rc([0, 0, 0, 1])
    assert perm_op("qqq", "(1 2)").trace() == rc([0, 0, 1])
    assert perm_op("qqq", "(1 2 3)").trace() == rc([0, 1])
    # mixed signature: same rule through the orientation swap
    assert perm_op("qb", "(1 2)").trace() == rc([0, 1])
    assert perm_op("qb", "e").trace() == rc([0, 0, 1])


def test_trace_is_cyclic():
    rng = random.Random(31)
    sig = Signature("qbqb")
    for _ in range(20):
        a = permutation_element(sig, random_perm(rng, 4))
        b = permutation_element(sig, random_perm(rng, 4))
        assert compose(a, b).trace() == compose(b, a).trace()


def test_dagger_is_antihomomorphic_involution():
    rng = random.Random(17)
    sig = Signature("qqbb")
    for _ in range(20):
        a = permutation_element(sig, random_perm(rng, 4))
        b = permutation_element(sig, random_perm(rng, 4))
        assert a.dagger().dagger() == a
        assert compose(a, b).dagger() == compose(b.dagger(), a.dagger())


def test_dagger_fixes_symmetrizer_style_sums():
    sig = Signature("qq")
    s = (identity(sig) + perm_op("qq", "(1 2)")).scaled(Fraction(1, 2))
    assert s.dagger() == s


def test_linear_structure():
    sig = Signature("qq")
    e = identity(sig)
    x = perm_op("qq", "(1 2)")
    combo = e.scaled(2) + x - x
    assert combo == e.scaled(2)
    assert (x - x).is_zero()
    assert zero(sig) + x == x
    assert (x / 2).scaled(2) == x
    with pytest.raises(SignatureMismatch):
        e + identity(Signature("qb"))


def test_partial_trace_of_identity():
    sig = Signature("qqb")
    out = identity(sig).partial_trace([2])
    assert out == identity(Signature("qq")).scaled(N)
    # tracing every level reproduces the full trace
    full = identity(sig).partial_trace([0, 1, 2])
    (diag, coeff), = full.terms.items()
    assert diag.perm == ()
    assert coeff == identity(sig).trace()


def test_partial_trace_of_trace_pair():
    # the swap image on V(x)V* is the trace pair; closing its V line
    # leaves the identity on V* with no loop factor
    t = perm_op("qb", "(1 2)")
    assert t.partial_trace([0]) == identity(Signature("b"))
    assert t.partial_trace([1]) == identity(Signature("q"))


def test_partial_trace_agrees_with_full_trace():
    rng = random.Random(41)
    sig = Signature("qbqb")
    for _ in range(15):
        a = permutation_element(sig, random_perm(rng, 4))
        b = permutation_element(sig, random_perm(rng, 4))
        el = a + b.scaled(rf([1], [0, 1]))
        stepped = el.partial_trace([1, 3]).partial_trace([0, 1])
        (diag, coeff), = stepped.terms.items()
        assert coeff == el.trace()


def test_tensor_multiplies_traces():
    rng = random.Random(59)
    for _ in range(10):
        a = permutation_element(Signature("qq"), random_perm(rng, 2))
        b = permutation_element(Signature("qb"), random_perm(rng, 2))
        t = tensor(a, b)
        assert t.sig.orientations == "qqqb"
        assert t.trace() == a.trace() * b.trace()
    with pytest.raises(MixedRoleTensor):
        tensor(identity(Signature("q")), perm_op("qb", "e").bend())


def test_tensor_respects_composition():
    rng = random.Random(61)
    for _ in range(10):
        a = permutation_element(Signature("qb"), random_perm(rng, 2))
        b = permutation_element(Signature("qb"), random_perm(rng, 2))
        c = permutation_element(Signature("qq"), random_perm(rng, 2))
        d = permutation_element(Signature("qq"), random_perm(rng, 2))
        assert compose(tensor(a, c), tensor(b, d)) == tensor(
            compose(a, b), compose(c, d))


def test_bend_of_identity_links_matched_legs():
    ket = identity(Signature("qq")).bend()
    assert ket.sig == ket_signature(2, 2)
    (diag, coeff), = ket.terms.items()
    assert diag.perm == (0, 1)
    assert coeff == ONE


def test_bend_is_an_isometry():
    rng = random.Random(73)
    for orients in ("qqq", "qqb", "qbqb", "bb"):
        sig = Signature(orients)
        k = len(orients)
        for _ in range(10):
            a = permutation_element(sig, random_perm(rng, k))
            b = permutation_element(sig, random_perm(rng, k))
            lhs = inner_product(a.bend(), b.bend())
            rhs = compose(a.dagger(), b).trace()
            assert lhs == rhs


def test_ket_inner_product_counts_joint_cycles():
    s12 = perm_op("qqq", "(1 2)").bend()
    s13 = perm_op("qqq", "(1 3)").bend()
    assert inner_product(s12, s12) == rc([0, 0, 0, 1])   # N^3
    assert inner_product(s12, s13) == rc([0, 1])         # (1 2)(1 3) is a 3-cycle


def test_operator_applied_to_ket():
    # (|u><v|) |w> = <v|w> |u>
    rng = random.Random(97)
    sig = ket_signature(2, 2)
    for _ in range(15):
        u = InvariantElement.from_perm(sig, random_perm(rng, 2))
        v = InvariantElement.from_perm(sig, random_perm(rng, 2))
        w = InvariantElement.from_perm(sig, random_perm(rng, 2))
        op = ketbra(u, v)
        assert compose(op, w) == u.scaled(inner_product(v, w))


def test_ketbra_trace_is_inner_product():
    rng = random.Random(101)
    sig = ket_signature(3, 3)
    for _ in range(15):
        u = InvariantElement.from_perm(sig, random_perm(rng, 3))
        v = InvariantElement.from_perm(sig, random_perm(rng, 3))
        assert ketbra(u, v).trace() == inner_product(v, u)


def test_ketbra_composition_is_rank_one():
    rng = random.Random(103)
    sig = ket_signature(2, 2)
    for _ in range(10):
        u = InvariantElement.from_perm(sig, random_perm(rng, 2))
        v = InvariantElement.from_perm(sig, random_perm(rng, 2))
        w = InvariantElement.from_perm(sig, random_perm(rng, 2))
        x = InvariantElement.from_perm(sig, random_perm(rng, 2))
        lhs = compose(ketbra(u, v), ketbra(w, x))
        rhs = ketbra(u, x).scaled(inner_product(v, w))
        assert lhs == rhs


def test_reorder_legs_round_trip():
    el = perm_op("qbq", "(1 3)")
    moved = el.reorder_legs([0, 2, 1])
    assert moved.sig.orientations == "qqb"
    back = moved.reorder_legs([0, 2, 1])
    assert back == el
    with pytest.raises(OrientationViolation):
        el.reorder_legs([0, 0, 1])


def test_reorder_legs_preserves_inner_products():
    rng = random.Random(113)
    sig = ket_signature(2, 2)
    order = [2, 0, 3, 1]
    for _ in range(10):
        u = InvariantElement.from_perm(sig, random_perm(rng, 2))
        v = InvariantElement.from_perm(sig, random_perm(rng, 2))
        assert inner_product(u, v) == inner_product(
            u.reorder_legs(order), v.reorder_legs(order))


def test_radical_coefficients_flow_through():
    el = perm_op("qq", "(1 2)").scaled(sqrt(rf([0, 1])))   # sqrt(N) (1 2)
    sq = compose(el, el)
    assert sq == identity(Signature("qq")).scaled(rf([0, 1]))


def test_json_round_trip():
    el = perm_op("qqb", "(1 2 3)").scaled(sqrt(Fraction(4, 3))) + perm_op(
        "qqb", "e").scaled(rf([1, 1], [0, 0, 2]))
    blob = el.to_json()
    assert blob["signature"] == {"orientations": "qqb", "role": "operator"}
    assert InvariantElement.from_json(blob) == el
    ket = perm_op("qb", "(1 2)").bend()
    assert InvariantElement.from_json(ket.to_json()) == ket


def test_signature_validation():
    with pytest.raises(OutOfRange):
        Signature("qxq")
    with pytest.raises(OutOfRange):
        Signature("qq", role="bra")
    ket = perm_op("qq", "e").bend()
    with pytest.raises(SignatureMismatch):
        compose(ket, ket)
    with pytest.raises(SignatureMismatch):
        ket.trace()
    with pytest.raises(SignatureMismatch):
        ket.dagger()


def test_operator_signature_helper():
    assert operator_signature(2, 1).orientations == "qqb"
    assert ket_signature(1, 1).role == "ket"
