"""Singlet projectors and transition operators on Mixed(k,k).

Bending an invariant operator on a tensor power of V turns it into a
state on a mixed space with equally many fundamental and antifundamental
legs, and every such state is invariant under the simultaneous group
action.  Distinct invariant operators bend into states of the same
single isotypic block, so between any two nonzero bent states there is a
transition operator, and every bent state normalizes into a projector.
This module keeps those operators in rank-one form, multiplies them
without ever expanding, counts how many survive at a given integer N,
and spots states that are dimensionally null.
"""

from dataclasses import dataclass, field

from .coefficients import RadicalCoefficient, sqrt
from .diagrams import (
    InvariantElement,
    inner_product,
    ketbra,
    zero,
)
from .errors import OutOfRange
from .numeric import exact_rank
from .symmetrizers import builtin_orthogonal_basis
from .tracebasis import normalized_trace_basis, raw_trace_states

PROJECTOR = "projector"
TRANSITION = "transition"


@dataclass(frozen=True)
class SingletOperator:
    """A normalization times |ket><bra| between singlet states.

    The bra is stored as a ket and daggered on use.  Projectors have
    ket == bra and normalization 1/<ket|ket>, making them idempotent;
    transitions carry the geometric mean of the two projector
    normalizations.  A normalization of zero marks the zero operator,
    which stands in for states that vanish identically.
    """

    ket: InvariantElement = field(repr=False)
    bra: InvariantElement = field(repr=False)
    normalization: RadicalCoefficient
    kind: str
    labels: tuple = ()

    def is_zero(self) -> bool:
        return self.normalization.is_zero()

    def dagger(self) -> "SingletOperator":
        return SingletOperator(ket=self.bra, bra=self.ket,
                               normalization=self.normalization,
                               kind=self.kind,
                               labels=tuple(reversed(self.labels)))

    def expand(self) -> InvariantElement:
        """The full diagram operator on Mixed(k,k)."""
        op = ketbra(self.ket, self.bra)
        if self.is_zero():
            return zero(op.sig)
        return op.scaled(self.normalization)

    def to_json(self) -> dict:
        return {"kind": self.kind, "labels": list(self.labels),
                "normalization": self.normalization.to_json(),
                "ket": self.ket.to_json(), "bra": self.bra.to_json()}

    @classmethod
    def from_json(cls, data) -> "SingletOperator":
        return cls(ket=InvariantElement.from_json(data["ket"]),
                   bra=InvariantElement.from_json(data["bra"]),
                   normalization=RadicalCoefficient.from_json(
                       data["normalization"]),
                   kind=data["kind"], labels=tuple(data["labels"]))


def singlet_state(operator: InvariantElement) -> InvariantElement:
    """Bend an invariant operator into its singlet ket."""
    return operator.bend()


def _norm(ket: InvariantElement) -> RadicalCoefficient:
    return inner_product(ket, ket)


def singlet_projector(operator: InvariantElement,
                      labels: tuple = ()) -> SingletOperator:
    """The normalized projector onto the bent image of an operator.

    A state with identically zero norm produces the zero operator.
    """
    ket = operator.bend()
    norm = _norm(ket)
    beta = RadicalCoefficient.zero() if norm.is_zero() else 1 / norm
    return SingletOperator(ket=ket, bra=ket, normalization=beta,
                           kind=PROJECTOR, labels=labels)


def transition_operator(op_from: InvariantElement, op_to: InvariantElement,
                        labels: tuple = ()) -> SingletOperator:
    """The unique transition operator between two bent states.

    Maps the bent image of op_to onto the bent image of op_from; zero if
    either state vanishes identically.
    """
    ket = op_from.bend()
    bra = op_to.bend()
    n_ket, n_bra = _norm(ket), _norm(bra)
    if n_ket.is_zero() or n_bra.is_zero():
        weight = RadicalCoefficient.zero()
    else:
        product = (1 / n_ket) * (1 / n_bra)
        weight = sqrt(product.rational_part())
    return SingletOperator(ket=ket, bra=bra, normalization=weight,
                           kind=TRANSITION, labels=labels)


def rank_one_product(a: SingletOperator, b: SingletOperator) -> InvariantElement:
    """Compose two rank-one operators without expanding them.

    The result is <bra_a|ket_b> times the outer product of a's ket with
    b's bra, carrying both normalizations.
    """
    weight = a.normalization * b.normalization * inner_product(a.bra, b.ket)
    op = ketbra(a.ket, b.bra)
    if weight.is_zero():
        return zero(op.sig)
    return op.scaled(weight)


SOURCES = ("builtin", "trace", "trace+orthogonalize")


def singlet_basis(k: int, source: str = "builtin"):
    """All k! singlet operators of Mixed(k,k) from the chosen source.

    builtin bends the hard-coded orthogonal symmetry-type elements
    (k up to 3); trace uses the generator-trace states as they come, so
    for k of 3 or more some pairs are not orthogonal;
    trace+orthogonalize post-processes them into an orthogonal family.
    """
    if source == "builtin":
        ops = builtin_orthogonal_basis(k)
        return [singlet_projector(op, labels=(i,))
                for i, op in enumerate(ops)]
    if source == "trace":
        out = []
        for i, ket in enumerate(raw_trace_states(k)):
            norm = _norm(ket)
            beta = RadicalCoefficient.zero() if norm.is_zero() else 1 / norm
            out.append(SingletOperator(ket=ket, bra=ket, normalization=beta,
                                       kind=PROJECTOR, labels=(i,)))
        return out
    if source == "trace+orthogonalize":
        return normalized_trace_basis(k)
    raise ValueError(f"unknown source {source!r}")


def basis_states(k: int, source: str = "builtin"):
    """The bent kets behind singlet_basis, in the same order."""
    return [op.ket for op in singlet_basis(k, source)]


def singlet_table(k: int = 3, source: str = "builtin"):
    """The full table of projectors and transitions over one basis.

    Entry [i][j] is the projector for i == j and the transition operator
    from state j to state i otherwise.
    """
    basis = singlet_basis(k, source)
    table = []
    for i, row_op in enumerate(basis):
        row = []
        for j, col_op in enumerate(basis):
            if i == j:
                row.append(SingletOperator(
                    ket=row_op.ket, bra=row_op.ket,
                    normalization=row_op.normalization,
                    kind=PROJECTOR, labels=(i, i)))
                continue
            n_i, n_j = _norm(row_op.ket), _norm(col_op.ket)
            if n_i.is_zero() or n_j.is_zero():
                weight = RadicalCoefficient.zero()
            else:
                weight = sqrt(((1 / n_i) * (1 / n_j)).rational_part())
            row.append(SingletOperator(ket=row_op.ket, bra=col_op.ket,
                                       normalization=weight,
                                       kind=TRANSITION, labels=(i, j)))
        table.append(row)
    return table


def gram_matrix(states):
    """Matrix of pairwise inner products <i|j> of a shared-signature family."""
    return [[inner_product(a, b) for b in states] for a in states]


def is_dimensionally_null(state: InvariantElement, n: int) -> bool:
    """Whether a ket vanishes at N = n.

    The inner product is positive definite at integer N >= 1, so the
    state is the zero tensor exactly when its norm evaluates to zero.
    """
    if n < 1:
        raise OutOfRange("N must be a positive integer")
    parts = inner_product(state, state).eval_at(n)
    return all(value == 0 for value in parts.values())


def singlet_count(k: int, n: int, source: str = "trace") -> int:
    """Number of independent singlet states of Mixed(k,k) at N = n.

    Exact rank of the Gram matrix of the source states specialized at n.
    """
    if n < 1:
        raise OutOfRange("N must be a positive integer")
    states = basis_states(k, source)
    gram = gram_matrix(states)
    rows = [[entry.eval_rational(n) for entry in row] for row in gram]
    return exact_rank(rows)
