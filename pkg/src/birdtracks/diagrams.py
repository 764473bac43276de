"""Primitive invariant diagrams on mixed tensor powers and their algebra.

An operator on V^(x)m (x) V*^(x)n is spanned by primitive diagrams: perfect
matchings of delta lines between 2(m+n) endpoints.  Each diagram is stored
through the one-to-one correspondence with a permutation of the m+n levels:
start from the permutation's all-fundamental diagram (a strand from right
endpoint a to left endpoint perm[a]) and swap the left and right endpoints
of every antifundamental level.

Kets (invariant states, all legs outgoing) use the same class with a ket
signature; their linking permutation pairs the j-th antifundamental leg with
the perm[j]-th fundamental leg, counting each orientation in slot order.

Composition glues diagrams endpoint to endpoint; every closed loop created
by the gluing contributes a factor N.  The convention is fixed so that
compose(A, B) acts as "A after B", matching left-to-right concatenation of
the pictures: composing the permutation operators (12) and (132) on V^(x)3
yields (13).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .coefficients import (
    RadicalCoefficient,
    RationalFunction,
    _as_radical,
)
from .errors import (
    MixedRoleTensor,
    OrientationViolation,
    OutOfRange,
    SignatureMismatch,
)

FUND = "q"
ANTI = "b"

OPERATOR = "operator"
KET = "ket"


@dataclass(frozen=True)
class Signature:
    """Orientation string ('q' fundamental / 'b' antifundamental) plus role."""

    orientations: str
    role: str = OPERATOR

    def __post_init__(self):
        if self.role not in (OPERATOR, KET):
            raise OutOfRange(f"unknown role {self.role!r}")
        if set(self.orientations) - {FUND, ANTI}:
            raise OutOfRange(f"bad orientation string {self.orientations!r}")

    @property
    def n_slots(self) -> int:
        return len(self.orientations)

    @property
    def n_fund(self) -> int:
        return self.orientations.count(FUND)

    @property
    def n_anti(self) -> int:
        return self.orientations.count(ANTI)

    def is_operator(self) -> bool:
        return self.role == OPERATOR

    def to_json(self) -> dict:
        return {"orientations": self.orientations, "role": self.role}

    @classmethod
    def from_json(cls, data: Mapping) -> "Signature":
        return cls(data["orientations"], data["role"])


def operator_signature(m: int, n: int) -> Signature:
    """The canonical operator signature on Mixed(m, n): m 'q' then n 'b'."""
    return Signature(FUND * m + ANTI * n, OPERATOR)


def ket_signature(m: int, n: int) -> Signature:
    return Signature(FUND * m + ANTI * n, KET)


@dataclass(frozen=True)
class PrimitiveDiagram:
    """One delta-line matching, encoded by a signature and a permutation.

    perm is 0-based.  For operators, perm maps each level to its image in
    the underlying all-fundamental permutation.  For kets, perm maps the
    rank of each antifundamental leg to the rank of its fundamental partner.
    """

    sig: Signature
    perm: tuple[int, ...]

    def __post_init__(self):
        size = self.sig.n_slots if self.sig.is_operator() else self.sig.n_anti
        if not self.sig.is_operator() and self.sig.n_fund != self.sig.n_anti:
            raise SignatureMismatch(
                f"ket diagram needs equal leg counts, got {self.sig.orientations!r}")
        if sorted(self.perm) != list(range(size)):
            raise OutOfRange(f"{self.perm} is not a permutation of 0..{size - 1}")

    def matching(self) -> dict[int, int]:
        """The physical endpoint pairing, as a symmetric dict.

        Operators: endpoints 0..k-1 are the left side, k..2k-1 the right.
        Kets: endpoints are the slots themselves.
        """
        if self.sig.is_operator():
            return _operator_matching(self.sig.orientations, self.perm)
        return _ket_matching(self.sig.orientations, self.perm)


def _operator_matching(orients: str, perm: tuple[int, ...]) -> dict[int, int]:
    k = len(orients)
    pairs = {}
    for a in range(k):
        src = k + a if orients[a] == FUND else a          # P(a)
        b = perm[a]
        dst = b if orients[b] == FUND else k + b          # Q(perm[a])
        pairs[src] = dst
        pairs[dst] = src
    return pairs


def _ket_matching(orients: str, perm: tuple[int, ...]) -> dict[int, int]:
    fund_slots = [i for i, o in enumerate(orients) if o == FUND]
    anti_slots = [i for i, o in enumerate(orients) if o == ANTI]
    pairs = {}
    for j, a_slot in enumerate(anti_slots):
        f_slot = fund_slots[perm[j]]
        pairs[a_slot] = f_slot
        pairs[f_slot] = a_slot
    return pairs


def _matching_to_ket_perm(orients: str, pairs: Mapping[int, int]) -> tuple[int, ...]:
    fund_rank = {s: r for r, s in
                 enumerate(i for i, o in enumerate(orients) if o == FUND)}
    anti_slots = [i for i, o in enumerate(orients) if o == ANTI]
    return tuple(fund_rank[pairs[a]] for a in anti_slots)


def _matching_to_op_perm(orients: str, pairs: Mapping[int, int]) -> tuple[int, ...]:
    k = len(orients)
    perm = []
    for a in range(k):
        src = k + a if orients[a] == FUND else a
        dst = pairs[src]
        b = dst % k
        expected = b if orients[b] == FUND else k + b
        if dst != expected:
            raise SignatureMismatch("matching is not orientation-consistent")
        perm.append(b)
    return tuple(perm)


def _cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    count = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        count += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return count


def _perm_inverse(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for a, b in enumerate(perm):
        inv[b] = a
    return tuple(inv)


@lru_cache(maxsize=None)
def _n_power(k: int) -> RationalFunction:
    coeffs = [Fraction(0)] * k + [Fraction(1)]
    return RationalFunction.from_coeff_lists(coeffs)


class InvariantElement:
    """A finite linear combination of primitive diagrams on one signature."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig: Signature,
                 terms: Mapping[PrimitiveDiagram, RadicalCoefficient] | None = None):
        cleaned = {}
        if terms:
            for diag, coeff in terms.items():
                if diag.sig != sig:
                    raise SignatureMismatch(
                        f"term signature {diag.sig} != element signature {sig}")
                if not coeff.is_zero():
                    cleaned[diag] = coeff
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("InvariantElement is immutable")

    # -- construction helpers -----------------------------------------------

    @classmethod
    def from_perm(cls, sig: Signature, perm: Iterable[int],
                  coeff=1) -> "InvariantElement":
        diag = PrimitiveDiagram(sig, tuple(perm))
        return cls(sig, {diag: _as_radical(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def n_terms(self) -> int:
        return len(self.terms)

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "InvariantElement") -> "InvariantElement":
        if self.sig != other.sig:
            raise SignatureMismatch(f"{self.sig} + {other.sig}")
        merged = dict(self.terms)
        for diag, coeff in other.terms.items():
            cur = merged.get(diag)
            merged[diag] = coeff if cur is None else cur + coeff
        return InvariantElement(self.sig, merged)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return InvariantElement(self.sig, {d: -c for d, c in self.terms.items()})

    def scaled(self, factor) -> "InvariantElement":
        factor = _as_radical(factor)
        return InvariantElement(
            self.sig, {d: c * factor for d, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, InvariantElement):
            return compose(self, other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def __truediv__(self, other):
        return self.scaled(RadicalCoefficient.one() / _as_radical(other))

    def __eq__(self, other):
        if not isinstance(other, InvariantElement):
            return NotImplemented
        return self.sig == other.sig and self.terms == other.terms

    def __hash__(self):
        return hash((self.sig, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"<zero element on {self.sig.orientations!r}>"
        bits = []
        for diag in sorted(self.terms, key=lambda d: d.perm):
            bits.append(f"({self.terms[diag]!r}) {format_cycles(diag.perm)}")
        return " + ".join(bits)

    # -- diagram operations ---------------------------------------------------

    def dagger(self) -> "InvariantElement":
        """Flip about the vertical axis and reverse arrows (operator adjoint)."""
        if not self.sig.is_operator():
            raise SignatureMismatch("dagger is defined on operators")
        out = {}
        for diag, coeff in self.terms.items():
            flipped = PrimitiveDiagram(self.sig, _perm_inverse(diag.perm))
            out[flipped] = coeff  # coefficients are real
        return InvariantElement(self.sig, out)

    def trace(self) -> RadicalCoefficient:
        """Full trace; each primitive contributes N^(cycle count)."""
        if not self.sig.is_operator():
            raise SignatureMismatch("trace is defined on operators")
        total = RadicalCoefficient.zero()
        for diag, coeff in self.terms.items():
            total = total + coeff * _n_power(_cycle_count(diag.perm))
        return total

    def partial_trace(self, levels: Iterable[int]) -> "InvariantElement":
        """Glue left to right endpoints on the given levels (0-based)."""
        if not self.sig.is_operator():
            raise SignatureMismatch("partial trace is defined on operators")
        glued = sorted(set(levels))
        k = self.sig.n_slots
        if glued and (glued[0] < 0 or glued[-1] >= k):
            raise OutOfRange(f"levels {glued} outside 0..{k - 1}")
        keep = [a for a in range(k) if a not in set(glued)]
        new_sig = Signature("".join(self.sig.orientations[a] for a in keep),
                            OPERATOR)
        new_of_old = {a: i for i, a in enumerate(keep)}
        glue = set(glued)
        out: dict[PrimitiveDiagram, RadicalCoefficient] = {}
        for diag, coeff in self.terms.items():
            pairs = diag.matching()
            # walk from each kept endpoint; hop L<->R across glued levels
            def step(e: int) -> int:
                nxt = pairs[e]
                while nxt % k in glue:
                    nxt = pairs[nxt + k if nxt < k else nxt - k]
                return nxt
            new_pairs = {}
            for a in keep:
                for e in (a, k + a):
                    new_pairs[e] = step(e)
            loops = _count_loops_within(pairs, k, glue)
            reduced = {}
            for e, f in new_pairs.items():
                e2 = new_of_old[e % k] + (0 if e < k else len(keep))
                f2 = new_of_old[f % k] + (0 if f < k else len(keep))
                reduced[e2] = f2
            perm = _matching_to_op_perm(new_sig.orientations, reduced)
            new_diag = PrimitiveDiagram(new_sig, perm)
            term = coeff * _n_power(loops)
            cur = out.get(new_diag)
            out[new_diag] = term if cur is None else cur + term
        return InvariantElement(new_sig, out)

    def bend(self) -> "InvariantElement":
        """Reshape an operator into a ket on Mixed(k, k), k = m + n.

        Output legs keep their orientation; input legs flip.  The canonical
        leg order puts all fundamental legs first, then all antifundamental
        ones, each block preserving the original level order with the left
        (output) side before the right (input) side.
        """
        if not self.sig.is_operator():
            raise SignatureMismatch("bend is defined on operators")
        orients = self.sig.orientations
        k = len(orients)
        # endpoint -> bent slot; endpoints: left a, right k + a
        fund_src = ([a for a in range(k) if orients[a] == FUND]
                    + [k + a for a in range(k) if orients[a] == ANTI])
        anti_src = ([a for a in range(k) if orients[a] == ANTI]
                    + [k + a for a in range(k) if orients[a] == FUND])
        fund_rank = {e: r for r, e in enumerate(fund_src)}
        anti_rank = {e: r for r, e in enumerate(anti_src)}
        new_sig = ket_signature(k, k)
        out = {}
        for diag, coeff in self.terms.items():
            pairs = diag.matching()
            linking = [0] * k
            for a in range(k):
                src = k + a if orients[a] == FUND else a    # P(a): anti leg
                linking[anti_rank[src]] = fund_rank[pairs[src]]
            out[PrimitiveDiagram(new_sig, tuple(linking))] = coeff
        return InvariantElement(new_sig, out)

    def reorder_legs(self, order: Iterable[int]) -> "InvariantElement":
        """Relabel slots so that new slot j is old slot order[j]."""
        order = tuple(order)
        n = self.sig.n_slots
        if sorted(order) != list(range(n)):
            raise OrientationViolation(
                f"{order} is not a permutation of the {n} slots")
        new_orients = "".join(self.sig.orientations[o] for o in order)
        new_sig = Signature(new_orients, self.sig.role)
        pos = {old: new for new, old in enumerate(order)}
        out = {}
        for diag, coeff in self.terms.items():
            pairs = diag.matching()
            if self.sig.is_operator():
                perm = tuple(pos[diag.perm[order[j]]] for j in range(n))
                new_diag = PrimitiveDiagram(new_sig, perm)
            else:
                moved = {pos[a]: pos[b] for a, b in pairs.items()}
                new_diag = PrimitiveDiagram(
                    new_sig, _matching_to_ket_perm(new_orients, moved))
            cur = out.get(new_diag)
            out[new_diag] = coeff if cur is None else cur + coeff
        return InvariantElement(new_sig, out)

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        rows = []
        for diag in sorted(self.terms, key=lambda d: d.perm):
            rows.append({"perm": [p + 1 for p in diag.perm],
                         "coeff": self.terms[diag].to_json()})
        return {"signature": self.sig.to_json(), "terms": rows}

    @classmethod
    def from_json(cls, data: Mapping) -> "InvariantElement":
        sig = Signature.from_json(data["signature"])
        terms = {}
        for row in data["terms"]:
            diag = PrimitiveDiagram(sig, tuple(p - 1 for p in row["perm"]))
            terms[diag] = RadicalCoefficient.from_json(row["coeff"])
        return cls(sig, terms)


def _count_loops_within(pairs: Mapping[int, int], k: int,
                        glue: set[int]) -> int:
    """Closed loops of a partial trace: components living on glued levels."""
    interior = {e for e in pairs if e % k in glue}
    seen = set()
    loops = 0
    for start in interior:
        if start in seen:
            continue
        e = start
        closed = True
        trail = []
        while True:
            trail.append(e)
            nxt = pairs[e]
            if nxt % k not in glue:
                closed = False
                break
            trail.append(nxt)
            e = nxt + k if nxt < k else nxt - k
            if e == start:
                break
            if e in seen:
                # marked by an earlier probe, and closed components are
                # always swept whole on first visit: this one is open
                closed = False
                break
        seen.update(trail)
        if closed and trail:
            loops += 1
    return loops


# ---------------------------------------------------------------------------
# Binary operations
# ---------------------------------------------------------------------------

def identity(sig: Signature) -> InvariantElement:
    if not sig.is_operator():
        raise SignatureMismatch("identity needs an operator signature")
    return InvariantElement.from_perm(sig, range(sig.n_slots))


def zero(sig: Signature) -> InvariantElement:
    return InvariantElement(sig, {})


def permutation_element(sig: Signature, perm: Iterable[int],
                        coeff=1) -> InvariantElement:
    return InvariantElement.from_perm(sig, perm, coeff)


def compose(a: InvariantElement, b: InvariantElement) -> InvariantElement:
    """Glue a's input side to b's output side: the result acts as a after b.

    b may be a ket with matching orientations, in which case the result is
    the ket a|b>.
    """
    if not a.sig.is_operator():
        raise SignatureMismatch("left factor of compose must be an operator")
    if a.sig.orientations != b.sig.orientations:
        raise SignatureMismatch(
            f"{a.sig.orientations!r} cannot act on {b.sig.orientations!r}")
    if b.sig.is_operator():
        return _compose_ops(a, b)
    return _apply_to_ket(a, b)


def _compose_ops(a: InvariantElement, b: InvariantElement) -> InvariantElement:
    orients = a.sig.orientations
    k = len(orients)
    sig = a.sig
    out: dict[PrimitiveDiagram, RadicalCoefficient] = {}
    b_items = [(diag.matching(), coeff) for diag, coeff in b.terms.items()]
    for da, ca in a.terms.items():
        ma = da.matching()
        for mb, cb in b_items:
            perm, loops = _glue_operator_pair(ma, mb, orients, k)
            diag = PrimitiveDiagram(sig, perm)
            term = ca * cb * _n_power(loops) if loops else ca * cb
            cur = out.get(diag)
            out[diag] = term if cur is None else cur + term
    return InvariantElement(sig, out)


def _glue_operator_pair(ma, mb, orients: str, k: int):
    """Trace strands through A's right side glued to B's left side.

    Endpoint spaces: A endpoints as-is; the result's left side is A's left,
    its right side is B's right.  Returns (result perm, closed loop count).
    """
    new_pairs = {}
    visited = set()  # interface endpoints seen during open walks

    def walk(space, e):
        # follow matching edges, hopping across the interface, until the
        # walk exits at an outer endpoint
        while True:
            e = (ma if space == 0 else mb)[e]
            if space == 0:
                if e < k:               # A left: outer
                    return 0, e
                visited.add((0, e))
                visited.add((1, e - k))
                space, e = 1, e - k     # hop to B left
            else:
                if e >= k:              # B right: outer
                    return 1, e
                visited.add((1, e))
                visited.add((0, e + k))
                space, e = 0, e + k     # hop to A right

    for a in range(k):
        src_left = orients[a] != FUND
        space, e = (0, a) if src_left else (1, k + a)
        _, t_e = walk(space, e)
        # outer labels coincide with result labels: A left is 0..k-1 and
        # B right is k..2k-1, exactly the result's own endpoint numbering
        res_src = a if src_left else k + a
        new_pairs[res_src] = t_e
        new_pairs[t_e] = res_src

    loops = 0
    for a in range(k):
        for node in ((0, k + a), (1, a)):
            if node in visited:
                continue
            # closed loop through the interface
            loops += 1
            space, e = node
            while (space, e) not in visited:
                visited.add((space, e))
                other = (1, e - k) if space == 0 else (0, e + k)
                visited.add(other)
                space, e = other
                e = (ma if space == 0 else mb)[e]
                if (space == 0) == (e < k):
                    raise AssertionError("loop escaped to outer endpoint")
    perm = _matching_to_op_perm(orients, new_pairs)
    return perm, loops


def _apply_to_ket(a: InvariantElement, b: InvariantElement) -> InvariantElement:
    orients = a.sig.orientations
    k = len(orients)
    sig = b.sig
    out: dict[PrimitiveDiagram, RadicalCoefficient] = {}
    b_items = [(diag.matching(), coeff) for diag, coeff in b.terms.items()]
    for da, ca in a.terms.items():
        ma = da.matching()
        for mb, cb in b_items:
            pairs, loops = _glue_op_ket(ma, mb, k)
            perm = _matching_to_ket_perm(orients, pairs)
            diag = PrimitiveDiagram(sig, perm)
            term = ca * cb * _n_power(loops) if loops else ca * cb
            cur = out.get(diag)
            out[diag] = term if cur is None else cur + term
    return InvariantElement(sig, out)


def _glue_op_ket(ma, mb, k: int):
    """Glue operator right endpoints to ket legs; result matches left side."""
    new_pairs = {}
    visited = set()
    for start in range(k):
        if start in new_pairs:
            continue
        e = ma[start]          # from left endpoint into the operator
        while e >= k:          # crossed to the right side: enter the ket
            leg = e - k
            visited.add(leg)
            leg2 = mb[leg]
            visited.add(leg2)
            e = ma[k + leg2]
        new_pairs[start] = e
        new_pairs[e] = start
    loops = 0
    for leg in range(k):
        if leg in visited:
            continue
        loops += 1
        cur = leg
        while cur not in visited:
            visited.add(cur)
            nxt = mb[cur]
            visited.add(nxt)
            follow = ma[k + nxt]
            if follow < k:
                raise AssertionError("loop escaped to outer endpoint")
            cur = follow - k
    return new_pairs, loops


def inner_product(a: InvariantElement, b: InvariantElement) -> RadicalCoefficient:
    """<a|b>: Tr(a^dagger b) for operators, full leg gluing for kets.

    Coefficients are real, so conjugation is the identity on them.
    """
    if a.sig != b.sig:
        raise SignatureMismatch(f"{a.sig} vs {b.sig}")
    if a.sig.is_operator():
        return compose(a.dagger(), b).trace()
    total = RadicalCoefficient.zero()
    b_items = [(diag.matching(), coeff) for diag, coeff in b.terms.items()]
    n = a.sig.n_slots
    for da, ca in a.terms.items():
        ma = da.matching()
        for mb, cb in b_items:
            loops = 0
            seen = [False] * n
            for start in range(n):
                if seen[start]:
                    continue
                loops += 1
                cur = start
                while not seen[cur]:
                    seen[cur] = True
                    step = ma[cur]
                    seen[step] = True
                    cur = mb[step]
            total = total + ca * cb * _n_power(loops)
    return total


def tensor(a: InvariantElement, b: InvariantElement) -> InvariantElement:
    """Place b's slots after a's; no lines are glued."""
    if a.sig.role != b.sig.role:
        raise MixedRoleTensor(f"{a.sig.role} (x) {b.sig.role}")
    orients = a.sig.orientations + b.sig.orientations
    sig = Signature(orients, a.sig.role)
    out = {}
    if a.sig.is_operator():
        ka = a.sig.n_slots
        for da, ca in a.terms.items():
            for db, cb in b.terms.items():
                perm = da.perm + tuple(p + ka for p in db.perm)
                diag = PrimitiveDiagram(sig, perm)
                coeff = ca * cb
                cur = out.get(diag)
                out[diag] = coeff if cur is None else cur + coeff
    else:
        fa = a.sig.n_fund
        for da, ca in a.terms.items():
            for db, cb in b.terms.items():
                perm = da.perm + tuple(p + fa for p in db.perm)
                diag = PrimitiveDiagram(sig, perm)
                coeff = ca * cb
                cur = out.get(diag)
                out[diag] = coeff if cur is None else cur + coeff
    return InvariantElement(sig, out)


def ketbra(ket: InvariantElement, bra_ket: InvariantElement) -> InvariantElement:
    """|u><v| as an operator whose levels carry the kets' slot orientations."""
    if ket.sig != bra_ket.sig or ket.sig.is_operator():
        raise SignatureMismatch("ketbra needs two kets on one signature")
    orients = ket.sig.orientations
    sig = Signature(orients, OPERATOR)
    out = {}
    for du, cu in ket.terms.items():
        mu = du.matching()
        for dv, cv in bra_ket.terms.items():
            mv = dv.matching()
            perm = tuple(mv[a] if o == FUND else mu[a]
                         for a, o in enumerate(orients))
            diag = PrimitiveDiagram(sig, perm)
            coeff = cu * cv
            cur = out.get(diag)
            out[diag] = coeff if cur is None else cur + coeff
    return InvariantElement(sig, out)


# ---------------------------------------------------------------------------
# Cycle-notation text I/O (1-based)
# ---------------------------------------------------------------------------

def parse_cycles(text: str, size: int) -> tuple[int, ...]:
    """Parse disjoint cycle notation like "(1 2 3)(4)" into a 0-based perm.

    "e", "id" and "()" all denote the identity.  Commas are accepted as
    separators inside a cycle.
    """
    text = text.strip()
    perm = list(range(size))
    if text in ("e", "id", "()", ""):
        return tuple(perm)
    if text.count("(") != text.count(")") or not text.startswith("("):
        raise OutOfRange(f"malformed cycle notation {text!r}")
    seen = set()
    for chunk in text.replace(")", ")\n").split("\n"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise OutOfRange(f"malformed cycle {chunk!r}")
        body = chunk[1:-1].replace(",", " ").split()
        entries = [int(x) for x in body]
        if any(e < 1 or e > size for e in entries):
            raise OutOfRange(f"cycle entry outside 1..{size} in {chunk!r}")
        if len(set(entries)) != len(entries) or seen & set(entries):
            raise OutOfRange(f"repeated entry in {text!r}")
        seen |= set(entries)
        for i, e in enumerate(entries):
            perm[e - 1] = entries[(i + 1) % len(entries)] - 1
    return tuple(perm)


def format_cycles(perm: tuple[int, ...]) -> str:
    """Format a 0-based permutation in 1-based disjoint cycle notation."""
    out = []
    seen = set()
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            seen.add(start)
            continue
        cyc = [start]
        seen.add(start)
        j = perm[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        out.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
    return "".join(out) if out else "e"
