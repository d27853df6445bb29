"""Exact scalars, dense matrices, tensor-index conventions and check reports.

Everything else in the package builds on the conventions pinned here, once:

* scalars are arbitrary-precision rationals, always stored reduced with a
  positive denominator.  The backend is ``gmpy2.mpq`` when available and
  ``fractions.Fraction`` otherwise; set ``HOMTWIST_RATIONAL=fraction`` (or
  ``gmpy2``) to force one.  Both are exact; no floating point exists anywhere.
* tensor factors flatten row-major, zero-based and left-associatively:
  ``(i, j) -> i*dimB + j``, extended as ``((i, j), k) -> (i*dimB + j)*dimC + k``
  for three or more factors.
* a matrix ``M`` acts on column coordinate vectors: the linear map it
  represents sends basis element ``e_c`` to ``sum_r M[r, c] e_r``.
"""

import os
import re
from dataclasses import dataclass

from .errors import DimensionMismatch, MalformedRational, NotInvertible, ZeroDenominator

_BACKEND_CHOICE = os.environ.get("HOMTWIST_RATIONAL", "auto").strip().lower()

if _BACKEND_CHOICE in ("auto", "gmpy2"):
    try:
        from gmpy2 import mpq as Q

        BACKEND = "gmpy2"
    except ImportError:
        if _BACKEND_CHOICE == "gmpy2":
            raise
        from fractions import Fraction as Q

        BACKEND = "fraction"
elif _BACKEND_CHOICE == "fraction":
    from fractions import Fraction as Q

    BACKEND = "fraction"
else:
    raise ValueError(
        f"HOMTWIST_RATIONAL must be 'gmpy2' or 'fraction', got {_BACKEND_CHOICE!r}"
    )

ZERO = Q(0)
ONE = Q(1)

_RAT_RE = re.compile(r"-?[0-9]+(?:/[0-9]+)?\Z")


def rat_parse(text):
    """Parse the scalar literal syntax ``-?digits(/digits)?`` into a reduced rational."""
    if not isinstance(text, str) or _RAT_RE.match(text) is None:
        raise MalformedRational(f"not a rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ZeroDenominator(f"zero denominator in {text!r}")
        return Q(int(num), int(den))
    return Q(int(text))


def rat_str(x):
    """Inverse of rat_parse; both backends print ``p/q`` reduced or a bare integer."""
    return str(x)


def as_scalar(x):
    """Coerce ints, backend rationals or literal strings to the scalar type."""
    if isinstance(x, str):
        return rat_parse(x)
    return Q(x)


# ---------------------------------------------------------------------------
# tensor index flattening
# ---------------------------------------------------------------------------


def flatten_index(dims, multi):
    """Row-major, left-associative flattening of a multi-index."""
    if len(dims) != len(multi):
        raise DimensionMismatch(f"index {multi} does not match dims {dims}")
    flat = 0
    for d, i in zip(dims, multi):
        if not 0 <= i < d:
            raise DimensionMismatch(f"index {multi} out of range for dims {dims}")
        flat = flat * d + i
    return flat


def unflatten_index(dims, flat):
    """Inverse of flatten_index."""
    total = 1
    for d in dims:
        total *= d
    if not 0 <= flat < total:
        raise DimensionMismatch(f"flat index {flat} out of range for dims {dims}")
    out = []
    for d in reversed(dims):
        flat, r = divmod(flat, d)
        out.append(r)
    return tuple(reversed(out))


# ---------------------------------------------------------------------------
# dense exact matrices
# ---------------------------------------------------------------------------


class Matrix:
    """Immutable dense matrix of exact rationals."""

    __slots__ = ("rows", "cols", "data", "_coldata")

    def __init__(self, data):
        data = tuple(tuple(as_scalar(x) for x in row) for row in data)
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != self.cols:
                raise DimensionMismatch("ragged rows in matrix literal")
        self.data = data
        self._coldata = None

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, rows, cols):
        return cls(tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def from_columns(cls, columns):
        rows = len(columns[0]) if columns else 0
        return cls(tuple(tuple(col[r] for col in columns) for r in range(rows)))

    def __getitem__(self, rc):
        r, c = rc
        return self.data[r][c]

    def row(self, r):
        return self.data[r]

    def col(self, c):
        if self._coldata is None:
            self._coldata = tuple(
                tuple(self.data[r][j] for r in range(self.rows)) for j in range(self.cols)
            )
        return self._coldata[c]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"Matrix({[[str(x) for x in row] for row in self.data]})"

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        return NotImplemented

    def transpose(self):
        return Matrix(tuple(self.col(c) for c in range(self.cols)))

    def is_identity(self):
        return self.rows == self.cols and all(
            self.data[r][c] == (ONE if r == c else ZERO)
            for r in range(self.rows)
            for c in range(self.cols)
        )

    def apply(self, vec):
        """Apply to a column coordinate vector; skips zero input entries."""
        if len(vec) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vec)} vs {self.cols} columns")
        out = [ZERO] * self.rows
        for c, xc in enumerate(vec):
            if not xc:
                continue
            col = self.col(c)
            for r, m in enumerate(col):
                if m:
                    out[r] = out[r] + m * xc
        return out


def mat_mul(a, b):
    """Exact matrix product."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for r in range(a.rows):
        arow = a.data[r]
        orow = [ZERO] * b.cols
        for k, ak in enumerate(arow):
            if not ak:
                continue
            brow = b.data[k]
            for c, bk in enumerate(brow):
                if bk:
                    orow[c] = orow[c] + ak * bk
        out.append(tuple(orow))
    return Matrix(out)


def mat_inv(a):
    """Exact inverse by Gauss-Jordan elimination; NotInvertible on rank deficiency."""
    if a.rows != a.cols:
        raise DimensionMismatch(f"cannot invert non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    m = [list(a.data[r]) + [ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise NotInvertible(f"exact rank deficiency at column {col}")
        m[col], m[pivot] = m[pivot], m[col]
        inv_p = ONE / m[col][col]
        m[col] = [x * inv_p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return Matrix(tuple(tuple(m[r][n:]) for r in range(n)))


def kron(a, b):
    """Kronecker product consistent with flatten_index: out[(i,j),(p,q)] = a[i,p]*b[j,q]."""
    out = []
    for i in range(a.rows):
        for j in range(b.rows):
            row = []
            arow = a.data[i]
            brow = b.data[j]
            for p in range(a.cols):
                ap = arow[p]
                if ap:
                    row.extend(ap * bq for bq in brow)
                else:
                    row.extend((ZERO,) * b.cols)
            out.append(tuple(row))
    return Matrix(out)


# ---------------------------------------------------------------------------
# vectors (plain lists of scalars)
# ---------------------------------------------------------------------------


def vec_zero(n):
    return [ZERO] * n


def basis_vec(n, i):
    v = [ZERO] * n
    v[i] = ONE
    return v


def tensor2(u, v):
    """u tensor v as a dense vector over the flattened product space."""
    n = len(v)
    out = [ZERO] * (len(u) * n)
    for i, ui in enumerate(u):
        if not ui:
            continue
        base = i * n
        for j, vj in enumerate(v):
            if vj:
                out[base + j] = ui * vj
    return out


# ---------------------------------------------------------------------------
# check reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Failure:
    """One failed equation instance: which identity, at which basis tuple."""

    equation: str
    basis: tuple
    lhs: tuple
    rhs: tuple

    def __str__(self):
        lhs = "[" + ", ".join(str(x) for x in self.lhs) + "]"
        rhs = "[" + ", ".join(str(x) for x in self.rhs) + "]"
        return f"{self.equation} at {self.basis}: lhs={lhs} rhs={rhs}"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an exhaustive axiom scan.

    `passed` reflects the full scan even when the recorded failure list was
    capped.  Failures appear in scan (lexicographic) order.
    """

    passed: bool
    failures: tuple = ()

    def __bool__(self):
        return self.passed


DEFAULT_FAILURE_CAP = 16


class Scan:
    """Accumulator for axiom scans; records at most `cap` witnesses.

    `passed` always reflects the full scan; the cap only bounds the recorded
    witness list.  Pass cap explicitly or rebind DEFAULT_FAILURE_CAP.
    """

    def __init__(self, cap=None):
        self.cap = DEFAULT_FAILURE_CAP if cap is None else cap
        self.passed = True
        self.failures = []

    def eq(self, equation, basis, lhs, rhs):
        if list(lhs) != list(rhs):
            self.passed = False
            if len(self.failures) < self.cap:
                self.failures.append(Failure(equation, tuple(basis), tuple(lhs), tuple(rhs)))

    def absorb(self, prefix, report):
        if not report.passed:
            self.passed = False
            for f in report.failures:
                if len(self.failures) >= self.cap:
                    break
                eq = f"{prefix}:{f.equation}" if prefix else f.equation
                self.failures.append(Failure(eq, f.basis, f.lhs, f.rhs))

    def done(self):
        return CheckReport(self.passed, tuple(self.failures))
