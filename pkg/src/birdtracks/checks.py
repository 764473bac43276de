"""Named verification suite shared by the command line and the tests.

Every check is self-contained and returns a plain bool, so the caller can
print a full table even when something breaks halfway through.  Exact
comparisons stay exact; floats appear only where sampled unitaries do.
"""

from fractions import Fraction

import numpy as np

from .coefficients import RadicalCoefficient, rf
from .coefficients import sqrt as sqrt_coeff
from .diagrams import (
    compose,
    inner_product,
    operator_signature,
    parse_cycles,
    permutation_element,
)
from .epsilon import (
    lr_decomposition,
    lr_pair_projector,
    pieri_add_antifundamental,
    shape_dimension,
    verify_baryon_equivalence,
)
from .numeric import (
    apply_per_leg,
    evaluate,
    evaluate_float,
    exact_rank,
    sample_special_unitary,
    state_matrix_rows,
)
from .singlets import rank_one_product, singlet_count, singlet_table
from .symmetrizers import builtin_orthogonal_basis
from .tracebasis import (
    adjoint_pair_diagram,
    normalized_trace_basis,
    pair_singlet_projector,
    raw_trace_states,
    trace_basis_state,
)

_CHI_INVERSE = (
    rf([0, 2, 3, 1], [6]),    # (N+2)(N+1)N / 6
    rf([0, -1, 0, 1], [3]),   # N(N^2-1) / 3
    rf([0, 2, -3, 1], [6]),   # (N-2)(N-1)N / 6
)

_XI_INVERSE_SQUARED = (
    rf([0, 0, 0, 1]),             # N^3
    rf([0, -1, 0, 1]),            # N(N^2-1)
    rf([0, -2, 0, 2]),            # 2N(N^2-1)
    rf([8, 0, -10, 0, 2], [0, 1]),  # 2(N^2-4)(N^2-1)/N
)


def _rc(value) -> RadicalCoefficient:
    return RadicalCoefficient.from_rational(value)


def check_chi_constants() -> bool:
    """Bent three-strand basis elements have the advertised squared norms."""
    bent = [element.bend() for element in builtin_orthogonal_basis(3)]
    pattern = (0, 1, 1, 1, 1, 2)
    return all(inner_product(state, state) == _rc(_CHI_INVERSE[which])
               for state, which in zip(bent, pattern))


def check_xi_constants() -> bool:
    """Orthogonalized k=3 trace states have the advertised squared norms."""
    basis = normalized_trace_basis(3)
    pattern = (0, 1, 1, 1, 2, 3)
    if not all(inner_product(op.ket, op.ket) == _rc(_XI_INVERSE_SQUARED[w])
               for op, w in zip(basis, pattern)):
        return False
    # the raw three-cycle states are not orthogonal; their overlap is what
    # forces the plus/minus combinations above
    overlap = inner_product(trace_basis_state("(1 2 3)"),
                            trace_basis_state("(1 3 2)"))
    return overlap == _rc(rf([2, 0, -2], [0, 1]))


def check_operator_algebra() -> bool:
    """The 36 three-strand operators close under composition row-on-column."""
    table = singlet_table(3, "builtin")
    size = len(table)
    for i in range(size):
        for j in range(size):
            if table[i][j].dagger() != table[j][i]:
                return False
            for k in range(size):
                for l in range(size):
                    product = rank_one_product(table[i][j], table[k][l])
                    if j == k:
                        if product != table[i][l].expand():
                            return False
                    elif not product.is_zero():
                        return False
    return True


def check_singlet_counts() -> bool:
    """Exact Gram ranks, cross-checked against flattened-state ranks."""
    expected = {
        (1, 1): 1, (1, 2): 1, (1, 3): 1,
        (2, 1): 1, (2, 2): 2, (2, 3): 2, (2, 4): 2,
        (3, 1): 1, (3, 2): 5, (3, 3): 6, (3, 4): 6, (3, 5): 6,
    }
    for (k, n), count in expected.items():
        if singlet_count(k, n, "trace") != count:
            return False
        oracle = exact_rank(state_matrix_rows(raw_trace_states(k), n))
        if oracle != count:
            return False
    return True


def check_loop_factor() -> bool:
    """Closed interface loops pay a factor N; plain gluing does not."""
    mixed = operator_signature(2, 1)
    left = permutation_element(mixed, parse_cycles("(1 2 3)", 3))
    right = permutation_element(mixed, parse_cycles("(1 3 2)", 3))
    target = permutation_element(mixed, parse_cycles("(1 3)", 3),
                                 rf([0, 1]))
    if compose(left, right) != target:
        return False
    plain = operator_signature(3, 0)
    swap = permutation_element(plain, parse_cycles("(1 2)", 3))
    cycle = permutation_element(plain, parse_cycles("(1 3 2)", 3))
    return compose(swap, cycle) == permutation_element(
        plain, parse_cycles("(1 3)", 3))


def check_lr_projectors() -> bool:
    """Epsilon-translated column projectors land on the Fierz pair."""
    for n in (3, 4):
        if lr_pair_projector("singlet", n) != evaluate(
                pair_singlet_projector(), n):
            return False
        if lr_pair_projector("adjoint", n) != evaluate(
                adjoint_pair_diagram(), n):
            return False
    return True


def check_baryon_equivalence() -> bool:
    """Three quarks match the balanced pair at N=3 and nowhere nearby."""
    return verify_baryon_equivalence(3) and not verify_baryon_equivalence(4)


def check_pieri_dimensions() -> bool:
    """The worked Pieri branching plus dimension conservation."""
    grown = [s.rows for s in pieri_add_antifundamental("[2,1]", 4)]
    if grown != [(3, 2, 1), (3, 1, 1, 1), (2, 2, 1, 1)]:
        return False
    for m, n in ((1, 1), (2, 1), (2, 2)):
        for n_param in (3, 4):
            shapes = lr_decomposition(m, n, n_param)
            total = sum(shape_dimension(s, n_param) for s in shapes)
            if total != n_param ** (m + n):
                return False
    return True


def check_unitary_invariance() -> bool:
    """Sampled group elements fix every k <= 3 trace state to 1e-10."""
    for k in (1, 2, 3):
        states = raw_trace_states(k)
        for n in (2, 3):
            vecs = [evaluate_float(s, n) for s in states]
            for seed in range(5):
                u = sample_special_unitary(n, seed)
                legs = [u] * k + [np.conj(u)] * k
                for vec in vecs:
                    moved = apply_per_leg(vec, legs)
                    if np.max(np.abs(moved - vec)) >= 1e-10:
                        return False
    return True


def _radical_parts(element):
    """Split an element as sum over radicands d of sqrt(d) * rational part."""
    from .diagrams import InvariantElement

    grouped = {}
    for diag, coeff in element.terms.items():
        for key, mult in coeff.terms.items():
            grouped.setdefault(key, {})[diag] = _rc(mult)
    return [(sqrt_coeff(rf(list(key))),
             InvariantElement(element.sig, terms))
            for key, terms in sorted(grouped.items())]


def _radical_dot(a, b, n):
    """Exact <a|b> at N=n by direct index contraction, radicals allowed.

    The same {squarefree radicand: rational} layout RadicalCoefficient
    evaluation produces, so results compare exactly.
    """
    out = {}
    for root_a, part_a in _radical_parts(a):
        left = evaluate(part_a, n).entries
        for root_b, part_b in _radical_parts(b):
            right = evaluate(part_b, n).entries
            total = Fraction(0)
            for key, val in left.items():
                other = right.get(key)
                if other is not None:
                    total += val * other
            if not total:
                continue
            for d, w in (root_a * root_b).eval_at(n).items():
                out[d] = out.get(d, Fraction(0)) + total * w
    return {d: v for d, v in out.items() if v != 0}


def check_symbolic_numeric_agreement() -> bool:
    """Symbolic norms and overlaps specialize to the numeric oracle."""
    bent = [element.bend() for element in builtin_orthogonal_basis(3)]
    trace = [op.ket for op in normalized_trace_basis(3)]
    cycles = (trace_basis_state("(1 2 3)"), trace_basis_state("(1 3 2)"))
    pairs = ([(s, s) for s in bent] + [(s, s) for s in trace]
             + [cycles, (cycles[0], cycles[0])])
    for left, right in pairs:
        symbolic = inner_product(left, right)
        for n in (2, 3, 4, 5):
            if symbolic.eval_at(n) != _radical_dot(left, right, n):
                return False
    return True


CHECKS = (
    ("chi-constants", check_chi_constants),
    ("xi-constants", check_xi_constants),
    ("operator-algebra", check_operator_algebra),
    ("singlet-counts", check_singlet_counts),
    ("loop-factor", check_loop_factor),
    ("lr-projectors", check_lr_projectors),
    ("baryon-equivalence", check_baryon_equivalence),
    ("pieri-dimensions", check_pieri_dimensions),
    ("unitary-invariance", check_unitary_invariance),
    ("symbolic-numeric", check_symbolic_numeric_agreement),
)


def run_checks(names=None) -> list[tuple[str, bool]]:
    """Run the named checks (all of them by default), in table order."""
    known = dict(CHECKS)
    if names:
        missing = [name for name in names if name not in known]
        if missing:
            raise KeyError(f"unknown checks: {', '.join(missing)}")
        selected = [(name, known[name]) for name in names]
    else:
        selected = list(CHECKS)
    return [(name, bool(fn())) for name, fn in selected]
