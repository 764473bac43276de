"""Exact fixed-N realization of invariant elements, plus float-mode checks.

Everything rank- or nullity-shaped runs in exact rational arithmetic; floats
appear only where unitary matrices do (sampled group elements, correlators).
Index placement: a fundamental leg transforms with U, an antifundamental leg
with the complex conjugate matrix, so a ket on Mixed(k, k) is invariant
under U applied to every leg this way.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .diagrams import FUND, InvariantElement
from .errors import DimensionMismatch, OutOfRange, RadicalComparisonUnsupported

DENSE_CAP = 10 ** 6


class ExactTensor:
    """A dense-shape tensor stored sparsely (exact) or densely (float).

    mode is sticky: exact tensors hold Fraction entries and never degrade;
    float tensors wrap a complex ndarray from the unitary-sampling path.
    """

    __slots__ = ("shape", "mode", "entries", "array")

    def __init__(self, shape, mode="exact", entries=None, array=None):
        self.shape = tuple(shape)
        self.mode = mode
        if mode == "exact":
            self.entries = {k: v for k, v in (entries or {}).items() if v}
            self.array = None
        elif mode == "float":
            self.entries = None
            self.array = np.asarray(array, dtype=complex)
        else:
            raise OutOfRange(f"unknown tensor mode {mode!r}")

    @classmethod
    def from_array(cls, array) -> "ExactTensor":
        array = np.asarray(array, dtype=complex)
        return cls(array.shape, mode="float", array=array)

    def to_array(self) -> np.ndarray:
        if self.mode == "float":
            return self.array
        out = np.zeros(self.shape, dtype=complex)
        for idx, val in self.entries.items():
            out[idx] = float(val)
        return out

    def matrix_rows(self, row_axes: int) -> list[list[Fraction]]:
        """Flatten to a matrix of Fractions, first row_axes axes as rows."""
        if self.mode != "exact":
            raise OutOfRange("matrix_rows needs an exact tensor")
        row_dims = self.shape[:row_axes]
        col_dims = self.shape[row_axes:]
        n_rows = math.prod(row_dims) if row_dims else 1
        n_cols = math.prod(col_dims) if col_dims else 1
        rows = [[Fraction(0)] * n_cols for _ in range(n_rows)]
        for idx, val in self.entries.items():
            r = _flatten(idx[:row_axes], row_dims)
            c = _flatten(idx[row_axes:], col_dims)
            rows[r][c] = val
        return rows

    def permuted(self, order) -> "ExactTensor":
        """Reorder axes so that new axis i is old axis order[i]."""
        order = tuple(order)
        if sorted(order) != list(range(len(self.shape))):
            raise DimensionMismatch(f"{order} is not an axis permutation")
        shape = tuple(self.shape[o] for o in order)
        if self.mode == "float":
            return ExactTensor(shape, mode="float",
                               array=np.transpose(self.array, order))
        entries = {tuple(idx[o] for o in order): v
                   for idx, v in self.entries.items()}
        return ExactTensor(shape, entries=entries)

    def trace(self) -> Fraction:
        """Matrix trace, pairing axis i with axis rank/2 + i."""
        if self.mode != "exact":
            raise OutOfRange("exact trace needs an exact tensor")
        half = len(self.shape) // 2
        if self.shape[:half] != self.shape[half:]:
            raise DimensionMismatch(f"non-square shape {self.shape}")
        total = Fraction(0)
        for idx, val in self.entries.items():
            if idx[:half] == idx[half:]:
                total += val
        return total

    def __eq__(self, other):
        if not isinstance(other, ExactTensor):
            return NotImplemented
        if self.mode != other.mode or self.shape != other.shape:
            return False
        if self.mode == "exact":
            return self.entries == other.entries
        return bool(np.array_equal(self.array, other.array))


def _flatten(idx: tuple[int, ...], dims: tuple[int, ...]) -> int:
    flat = 0
    for i, d in zip(idx, dims):
        flat = flat * d + i
    return flat


def _eval_coeff_rational(coeff, n: int) -> Fraction:
    values = coeff.eval_at(n)
    for key in values:
        if key != 1:
            raise RadicalComparisonUnsupported(
                "irrational coefficient in exact evaluation; "
                "compare squared quantities instead")
    return values.get(1, Fraction(0))


def _element_axes(element: InvariantElement) -> int:
    k = element.sig.n_slots
    return 2 * k if element.sig.is_operator() else k


def _check_cap(n: int, axes: int):
    if n ** axes > DENSE_CAP:
        raise OutOfRange(
            f"dense realization of {n}^{axes} entries exceeds cap {DENSE_CAP}")


def _diagram_strands(diag) -> list[tuple[int, int]]:
    # operator endpoints are already axis labels: left a -> output axis a,
    # right k+a -> input axis k+a; ket legs are their own axes
    pairs = diag.matching()
    return [(a, b) for a, b in pairs.items() if a < b]


def evaluate(element: InvariantElement, n: int) -> ExactTensor:
    """The exact tensor of an element at integer N = n.

    Operators come out with output axes first, then input axes, so the
    matrix view is matrix_rows(k).  Coefficients must evaluate rationally.
    """
    if n < 1:
        raise OutOfRange(f"need n >= 1, got {n}")
    axes = _element_axes(element)
    _check_cap(n, axes)
    k = element.sig.n_slots
    entries: dict[tuple[int, ...], Fraction] = {}
    for diag, coeff in element.terms.items():
        value = _eval_coeff_rational(coeff, n)
        if value == 0:
            continue
        strands = _diagram_strands(diag)
        for assign in _index_assignments(len(strands), n):
            idx = [0] * axes
            for (a, b), v in zip(strands, assign):
                idx[a] = v
                idx[b] = v
            key = tuple(idx)
            cur = entries.get(key)
            total = value if cur is None else cur + value
            if total:
                entries[key] = total
            elif cur is not None:
                del entries[key]
    return ExactTensor((n,) * axes, entries=entries)


def _index_assignments(strand_count: int, n: int):
    if strand_count == 0:
        yield ()
        return
    assign = [0] * strand_count
    while True:
        yield tuple(assign)
        pos = strand_count - 1
        while pos >= 0:
            assign[pos] += 1
            if assign[pos] < n:
                break
            assign[pos] = 0
            pos -= 1
        if pos < 0:
            return


def evaluate_float(element: InvariantElement, n: int) -> np.ndarray:
    """Dense complex tensor of an element at N = n; radicals allowed."""
    if n < 1:
        raise OutOfRange(f"need n >= 1, got {n}")
    axes = _element_axes(element)
    _check_cap(n, axes)
    out = np.zeros((n,) * axes, dtype=complex)
    for diag, coeff in element.terms.items():
        value = coeff.eval_float(n)
        if value == 0.0:
            continue
        strands = _diagram_strands(diag)
        for assign in _index_assignments(len(strands), n):
            idx = [0] * axes
            for (a, b), v in zip(strands, assign):
                idx[a] = v
                idx[b] = v
            out[tuple(idx)] += value
    return out


def exact_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of an exact rational matrix by Gaussian elimination."""
    m = [list(map(Fraction, row)) for row in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(n_cols):
        pivot = None
        for r in range(row, n_rows):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(n_rows):
            if r != row and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == n_rows:
            break
    return rank


def sample_special_unitary(n: int, seed: int) -> np.ndarray:
    """A deterministic pseudo-random SU(n) matrix for the given seed.

    QR of a complex Gaussian sample, phases fixed so R has positive
    diagonal, then a global phase division to reach det = 1.
    """
    if n < 2:
        raise OutOfRange(f"need n >= 2, got {n}")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    q = q * (d / np.abs(d))
    det = np.linalg.det(q)
    q = q / det ** (1.0 / n)
    return q


def unitary_action(u: np.ndarray, orientations: str) -> np.ndarray:
    """The matrix of ⊗slots (U on 'q', conj(U) on 'b') in slot order."""
    out = np.eye(1, dtype=complex)
    for o in orientations:
        out = np.kron(out, u if o == FUND else np.conj(u))
    return out


def apply_per_leg(tensor: np.ndarray,
                  matrices: Sequence[np.ndarray]) -> np.ndarray:
    """Contract matrix i into axis i of the tensor, for every axis."""
    if len(matrices) != tensor.ndim:
        raise DimensionMismatch(
            f"{len(matrices)} matrices for {tensor.ndim} axes")
    out = tensor
    for axis, mat in enumerate(matrices):
        out = np.tensordot(mat, out, axes=([1], [axis]))
        out = np.moveaxis(out, 0, axis)
    return out


def correlator_matrix(states: Sequence[InvariantElement],
                      leg_matrices: Sequence[np.ndarray],
                      n: int) -> np.ndarray:
    """Entries <state_i| (⊗ per-leg matrices) |state_j> at N = n.

    Fundamental legs expect the sampled U itself, antifundamental legs its
    complex conjugate; callers pass exactly what each leg should receive.
    """
    if not states:
        return np.zeros((0, 0), dtype=complex)
    sig = states[0].sig
    if sig.is_operator():
        raise DimensionMismatch("correlator states must be kets")
    if len(leg_matrices) != sig.n_slots:
        raise DimensionMismatch(
            f"{len(leg_matrices)} matrices for {sig.n_slots} legs")
    for s in states:
        if s.sig != sig:
            raise DimensionMismatch("correlator states on mixed signatures")
    vecs = [evaluate_float(s, n) for s in states]
    moved = [apply_per_leg(v, leg_matrices) for v in vecs]
    size = len(states)
    out = np.zeros((size, size), dtype=complex)
    for i in range(size):
        for j in range(size):
            out[i, j] = np.sum(np.conj(vecs[i]) * moved[j])
    return out


def generalized_gell_mann(n: int) -> list[np.ndarray]:
    """Traceless Hermitian generators of su(n) with Tr(t^a t^b) = delta^ab."""
    gens = []
    root_half = 1.0 / math.sqrt(2.0)
    for i in range(n):
        for j in range(i + 1, n):
            sym = np.zeros((n, n), dtype=complex)
            sym[i, j] = sym[j, i] = root_half
            gens.append(sym)
            anti = np.zeros((n, n), dtype=complex)
            anti[i, j] = -1j * root_half
            anti[j, i] = 1j * root_half
            gens.append(anti)
    for m in range(1, n):
        diag = np.zeros((n, n), dtype=complex)
        for i in range(m):
            diag[i, i] = 1.0
        diag[m, m] = -m
        diag /= math.sqrt(m * (m + 1))
        gens.append(diag)
    return gens


def state_matrix_rows(states: Iterable[InvariantElement],
                      n: int) -> list[list[Fraction]]:
    """Each state flattened to one exact row vector; rank gives counts."""
    rows = []
    for s in states:
        t = evaluate(s, n)
        size = math.prod(t.shape) if t.shape else 1
        row = [Fraction(0)] * size
        for idx, val in t.entries.items():
            row[_flatten(idx, t.shape)] = val
        rows.append(row)
    return rows
