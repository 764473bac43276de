"""Singlet states on Mixed(k,k) built from permutation cycle structure.

A permutation of k objects, written in disjoint cycle form, labels a
product of traces of fundamental-representation generators: each cycle
(c1 c2 ... cl) stands for Tr(t^{a1} t^{a2} ... t^{al}) with the generator
t^{as} attached to the (V, V*) pair c_s.  Eliminating every generator
line through the Fierz identity (with Tr(t^a t^b) = delta^{ab}) turns the
whole expression into a sum of Kronecker-delta diagrams with rational
coefficients in N.  This module builds those states, the d/f-type
combinations that appear at k = 3, and normalized projector families.
"""

import itertools
from fractions import Fraction

from .coefficients import RadicalCoefficient, RationalFunction, rf
from .diagrams import (
    InvariantElement,
    PrimitiveDiagram,
    identity,
    inner_product,
    ket_signature,
    operator_signature,
    permutation_element,
)
from .errors import InvalidDecomposition, OutOfRange


class CycleDecomposition:
    """A permutation of 1..k in canonical disjoint cycle form.

    Every element appears exactly once, fixed points included.  Each cycle
    is rotated so its smallest element comes first, and the cycles are
    sorted by their smallest elements.
    """

    __slots__ = ("k", "cycles")

    def __init__(self, cycles, k=None):
        flat = []
        raw = [tuple(int(x) for x in c) for c in cycles]
        for c in raw:
            if not c:
                raise InvalidDecomposition("empty cycle")
            flat.extend(c)
        if flat and min(flat) < 1:
            raise InvalidDecomposition("cycle entries must be positive")
        if len(set(flat)) != len(flat):
            raise InvalidDecomposition("cycles are not disjoint")
        size = max(flat) if flat else 0
        if k is None:
            k = size
        elif k < size:
            raise InvalidDecomposition(f"entry {size} exceeds k={k}")
        if k < 1:
            raise InvalidDecomposition("k must be at least 1")
        missing = set(range(1, k + 1)) - set(flat)
        raw.extend((p,) for p in missing)
        canon = []
        for c in raw:
            low = c.index(min(c))
            canon.append(c[low:] + c[:low])
        canon.sort(key=lambda c: c[0])
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "cycles", tuple(canon))

    def __setattr__(self, name, value):
        raise AttributeError("CycleDecomposition is immutable")

    @classmethod
    def from_text(cls, text: str, k: int | None = None) -> "CycleDecomposition":
        """Parse notation like "(1 2 3)" or "(1 2)(3)"; "e" is the identity.

        Unlisted elements of 1..k become explicit fixed points.
        """
        text = text.strip()
        if text in ("e", "id", "()", ""):
            if k is None:
                raise InvalidDecomposition("identity shorthand needs k")
            return cls([], k)
        if text.count("(") != text.count(")") or not text.startswith("("):
            raise InvalidDecomposition(f"malformed cycle notation {text!r}")
        cycles = []
        for chunk in text.replace(")", ")\n").split("\n"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if not (chunk.startswith("(") and chunk.endswith(")")):
                raise InvalidDecomposition(f"malformed cycle {chunk!r}")
            body = chunk[1:-1].replace(",", " ").split()
            try:
                cycles.append(tuple(int(x) for x in body))
            except ValueError:
                raise InvalidDecomposition(f"non-integer entry in {chunk!r}")
        return cls(cycles, k)

    @classmethod
    def from_permutation(cls, perm) -> "CycleDecomposition":
        """Build from a 0-based one-line permutation tuple."""
        perm = tuple(perm)
        if sorted(perm) != list(range(len(perm))):
            raise InvalidDecomposition(f"{perm!r} is not a permutation")
        cycles = []
        seen = set()
        for start in range(len(perm)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = perm[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = perm[j]
            cycles.append(tuple(x + 1 for x in cyc))
        return cls(cycles, len(perm))

    def to_permutation(self) -> tuple[int, ...]:
        """The 0-based one-line form."""
        perm = list(range(self.k))
        for c in self.cycles:
            for i, p in enumerate(c):
                perm[p - 1] = c[(i + 1) % len(c)] - 1
        return tuple(perm)

    def to_text(self) -> str:
        return "".join("(" + " ".join(str(x) for x in c) + ")"
                       for c in self.cycles)

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths, longest first."""
        return tuple(sorted((len(c) for c in self.cycles), reverse=True))

    def is_derangement(self) -> bool:
        return all(len(c) > 1 for c in self.cycles)

    def __eq__(self, other):
        if not isinstance(other, CycleDecomposition):
            return NotImplemented
        return self.k == other.k and self.cycles == other.cycles

    def __hash__(self):
        return hash((self.k, self.cycles))

    def __repr__(self):
        return f"CycleDecomposition({self.to_text()!r}, k={self.k})"


def _neg_inv_n_power(j: int) -> RationalFunction:
    # (-1/N)^j
    return rf([(-1) ** j], [0] * j + [1])


def _cycle_terms(cycle: tuple[int, ...]):
    """Delta-diagram expansion of one generator trace cycle.

    Returns (partial pair-map, rational weight) terms.  The map sends each
    pair label of the cycle to the pair label its antifundamental leg
    connects to on the fundamental side; unlisted connections are within
    the pair itself.

    A length-l cycle expands, after Fierz elimination of the l adjoint
    lines, into one term per subset of at least two pairs threaded in the
    cycle's own cyclic order with weight (-1/N)^(l-|subset|), the removed
    pairs closing into deltas, plus (l-1)(-1/N)^(l-1) times all deltas.
    """
    ell = len(cycle)
    terms = []
    for size in range(2, ell + 1):
        weight = _neg_inv_n_power(ell - size)
        for subset in itertools.combinations(cycle, size):
            part = {p: p for p in cycle}
            for i, p in enumerate(subset):
                part[p] = subset[(i + 1) % size]
            terms.append((part, weight))
    all_deltas = {p: p for p in cycle}
    terms.append((all_deltas, _neg_inv_n_power(ell - 1) * rf([ell - 1])))
    return terms


def trace_basis_state(rho) -> InvariantElement:
    """The generator-trace singlet ket on Mixed(k,k) labeled by rho.

    rho may be a CycleDecomposition or cycle text.  Fixed points
    contribute a bare delta pair; longer cycles contribute their full
    Fierz expansion.  Coefficients are rational functions of N.
    """
    if isinstance(rho, str):
        rho = CycleDecomposition.from_text(rho)
    if not isinstance(rho, CycleDecomposition):
        raise InvalidDecomposition(f"cannot interpret {rho!r}")
    k = rho.k
    sig = ket_signature(k, k)
    per_cycle = []
    for cycle in rho.cycles:
        if len(cycle) == 1:
            per_cycle.append([({cycle[0]: cycle[0]}, rf([1]))])
        else:
            per_cycle.append(_cycle_terms(cycle))
    out = {}
    for combo in itertools.product(*per_cycle):
        links = {}
        weight = rf([1])
        for part, w in combo:
            links.update(part)
            weight = weight * w
        perm = tuple(links[p] - 1 for p in range(1, k + 1))
        diag = PrimitiveDiagram(sig, perm)
        coeff = RadicalCoefficient.from_rational(weight)
        cur = out.get(diag)
        out[diag] = coeff if cur is None else cur + coeff
    return InvariantElement(sig, out)


def pair_singlet_projector(k: int = 1, pair: int = 1) -> InvariantElement:
    """Projector of one (V, V*) pair of Mixed(k,k) onto its singlet.

    Acts as (1/N) |delta><delta| on the chosen pair and as the identity
    on every other pair.
    """
    if not 1 <= pair <= k:
        raise OutOfRange(f"pair {pair} outside 1..{k}")
    sig = operator_signature(k, k)
    perm = list(range(2 * k))
    perm[pair - 1], perm[k + pair - 1] = perm[k + pair - 1], perm[pair - 1]
    return permutation_element(sig, perm, rf([1], [0, 1]))


def adjoint_pair_diagram(k: int = 1, pair: int = 1) -> InvariantElement:
    """Projector of one (V, V*) pair of Mixed(k,k) onto its adjoint part.

    The Fierz identity splits the pair identity into singlet plus
    adjoint, so this is the identity minus the pair singlet projector.
    It is idempotent and at k = 1 has trace N^2 - 1.
    """
    return identity(operator_signature(k, k)) - pair_singlet_projector(k, pair)


def df_states():
    """Symmetric and antisymmetric halves of the two 3-cycle states.

    Returns (d_state, f_state) on Mixed(3,3): the half-sum and
    half-difference of the (1 2 3) and (1 3 2) trace states.  They are
    orthogonal; the d state is dimensionally null below N = 3.
    """
    s123 = trace_basis_state("(1 2 3)")
    s132 = trace_basis_state("(1 3 2)")
    half = Fraction(1, 2)
    return (s123 + s132).scaled(half), (s123 - s132).scaled(half)


def all_decompositions(k: int):
    """Every CycleDecomposition on 1..k in a fixed deterministic order.

    The identity comes first, then fewer moved points before more, then
    coarser cycle type, then one-line lexicographic order.
    """
    if k < 1:
        raise OutOfRange("k must be at least 1")
    items = [CycleDecomposition.from_permutation(p)
             for p in itertools.permutations(range(k))]

    def key(rho):
        perm = rho.to_permutation()
        moved = sum(1 for i, x in enumerate(perm) if x != i)
        return (moved, rho.cycle_type(), perm)

    items.sort(key=key)
    return items


def derangement_states(k: int):
    """Trace states of the fixed-point-free permutations of 1..k.

    There are subfactorial(k) of them.  Every pair of such a state sits
    entirely inside a generator trace, so projecting any single pair onto
    its singlet annihilates the state.
    """
    if k < 2:
        raise OutOfRange("derangements need k of at least 2")
    return [trace_basis_state(rho) for rho in all_decompositions(k)
            if rho.is_derangement()]


def raw_trace_states(k: int):
    """All k! trace states in the order of all_decompositions(k)."""
    return [trace_basis_state(rho) for rho in all_decompositions(k)]


def normalized_trace_basis(k: int):
    """k! singlet projectors built from orthogonalized trace states.

    For k = 3 the two 3-cycle states are replaced by their sum and
    difference, reproducing the xi-pattern normalizations (the other
    states are orthogonal as constructed).  For any other k the states
    are Gram-Schmidt orthogonalized in all_decompositions order.
    """
    from .singlets import SingletOperator
    from .symmetrizers import gram_schmidt

    states = raw_trace_states(k)
    if k == 3:
        s123, s132 = states[4], states[5]
        states[4] = s123 - s132
        states[5] = s123 + s132
    else:
        states, dropped = gram_schmidt(states)
        if dropped:
            raise InvalidDecomposition(
                "trace states are linearly dependent over Q(N)")
    ops = []
    for i, ket in enumerate(states):
        norm = inner_product(ket, ket)
        beta = RadicalCoefficient.zero() if norm.is_zero() else 1 / norm
        ops.append(SingletOperator(ket=ket, bra=ket, normalization=beta,
                                   kind="projector", labels=(i,)))
    return ops
