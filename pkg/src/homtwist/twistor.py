"""Operators on D(x)D and D(x)D(x)D: twistors, pseudotwistors and their
Hom- and alpha- variants, plus the deformation constructor.

All axiom families are evaluated per basis tuple (never as one giant
dim^3 x dim^3 matrix equality) so failures come with a witness tuple and the
memory stays bounded.
"""

from dataclasses import dataclass

from .algebra import (
    HomAlgebra,
    check_associative,
    check_hom_algebra,
    multiplicativity_scan,
    yau_twist_algebra,
)
from .errors import DimensionMismatch, NotMultiplicative, PreconditionFailure
from .exact import Matrix, Scan, ZERO, kron, tensor2


@dataclass(frozen=True)
class Operator2:
    """Linear operator on D(x)D as a dim^2 x dim^2 matrix."""

    dim: int
    matrix: Matrix

    def __post_init__(self):
        n = self.dim * self.dim
        if self.matrix.rows != n or self.matrix.cols != n:
            raise DimensionMismatch(f"operator matrix must be {n}x{n}")

    @classmethod
    def identity(cls, dim):
        return cls(dim, Matrix.identity(dim * dim))


@dataclass(frozen=True)
class Operator3:
    """Linear operator on D(x)D(x)D as a dim^3 x dim^3 matrix."""

    dim: int
    matrix: Matrix

    def __post_init__(self):
        n = self.dim ** 3
        if self.matrix.rows != n or self.matrix.cols != n:
            raise DimensionMismatch(f"operator matrix must be {n}x{n}")

    @classmethod
    def identity(cls, dim):
        return cls(dim, Matrix.identity(dim ** 3))


def lift_13(op):
    """Lift an Operator2 to act on factors 1 and 3 of D(x)D(x)D."""
    d = op.dim
    n3 = d ** 3
    columns = []
    for i in range(d):
        for j in range(d):
            for k in range(d):
                t = op.matrix.col(i * d + k)
                col = [ZERO] * n3
                for p in range(d):
                    base_t = p * d
                    base_o = (p * d + j) * d
                    for r in range(d):
                        v = t[base_t + r]
                        if v:
                            col[base_o + r] = v
                columns.append(col)
    return Operator3(d, Matrix.from_columns(columns))


# ---------------------------------------------------------------------------
# sparse-aware appliers used by every checker
# ---------------------------------------------------------------------------


def _spread_t_left(op, i, j, k, d):
    """(T (x) id) applied to e_i (x) e_j (x) e_k."""
    t = op.matrix.col(i * d + j)
    out = [ZERO] * d ** 3
    for pq, v in enumerate(t):
        if v:
            out[pq * d + k] = v
    return out


def _spread_t_right(op, i, j, k, d):
    """(id (x) T) applied to e_i (x) e_j (x) e_k."""
    t = op.matrix.col(j * d + k)
    out = [ZERO] * d ** 3
    base = i * d * d
    for qr, v in enumerate(t):
        if v:
            out[base + qr] = v
    return out


def apply_t12(op, x3):
    d = op.dim
    out = [ZERO] * d ** 3
    for idx, v in enumerate(x3):
        if not v:
            continue
        ij, k = divmod(idx, d)
        t = op.matrix.col(ij)
        for pq, w in enumerate(t):
            if w:
                out[pq * d + k] = out[pq * d + k] + v * w
    return out


def apply_t23(op, x3):
    d = op.dim
    d2 = d * d
    out = [ZERO] * d ** 3
    for idx, v in enumerate(x3):
        if not v:
            continue
        i, jk = divmod(idx, d2)
        t = op.matrix.col(jk)
        base = i * d2
        for qr, w in enumerate(t):
            if w:
                out[base + qr] = out[base + qr] + v * w
    return out


def apply_t13(op, x3):
    d = op.dim
    out = [ZERO] * d ** 3
    for idx, v in enumerate(x3):
        if not v:
            continue
        ij, k = divmod(idx, d)
        i, j = divmod(ij, d)
        t = op.matrix.col(i * d + k)
        for pr, w in enumerate(t):
            if not w:
                continue
            p, r = divmod(pr, d)
            o = (p * d + j) * d + r
            out[o] = out[o] + v * w
    return out


def _apply_mu2(algebra, x2):
    """mu: D(x)D -> D on a dense square vector."""
    d = algebra.dim
    out = [ZERO] * d
    for idx, v in enumerate(x2):
        if not v:
            continue
        i, j = divmod(idx, d)
        for k, c in enumerate(algebra.mul[i][j]):
            if c:
                out[k] = out[k] + v * c
    return out


def _apply_map_mu(algebra, f, x3):
    """(f (x) mu): D^3 -> D^2 with f a matrix on D."""
    d = algebra.dim
    out = [ZERO] * (d * d)
    for idx, v in enumerate(x3):
        if not v:
            continue
        ij, k = divmod(idx, d)
        i, j = divmod(ij, d)
        fcol = f.col(i)
        row = algebra.mul[j][k]
        for r, fr in enumerate(fcol):
            if not fr:
                continue
            w = v * fr
            base = r * d
            for s, c in enumerate(row):
                if c:
                    out[base + s] = out[base + s] + w * c
    return out


def _apply_mu_map(algebra, f, x3):
    """(mu (x) f): D^3 -> D^2."""
    d = algebra.dim
    out = [ZERO] * (d * d)
    for idx, v in enumerate(x3):
        if not v:
            continue
        ij, k = divmod(idx, d)
        i, j = divmod(ij, d)
        fcol = f.col(k)
        row = algebra.mul[i][j]
        for r, c in enumerate(row):
            if not c:
                continue
            w = v * c
            base = r * d
            for s, fs in enumerate(fcol):
                if fs:
                    out[base + s] = out[base + s] + w * fs
    return out


def _check_shapes(algebra, *ops):
    for op in ops:
        if op.dim != algebra.dim:
            raise DimensionMismatch("operator dimension does not match the algebra")


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------


def check_pseudotwistor(algebra, op, comp1, comp2):
    """Classical pseudotwistor equations on an associative algebra."""
    _check_shapes(algebra, op, comp1, comp2)
    if not algebra.is_classical():
        raise PreconditionFailure("pseudotwistor base algebra must have identity structure map")
    rep = check_associative(algebra)
    if not rep.passed:
        raise PreconditionFailure("check_associative", report=rep)
    d = algebra.dim
    ident = Matrix.identity(d)
    scan = Scan()
    for i in range(d):
        for j in range(d):
            for k in range(d):
                x2 = [ZERO] * (d * d)
                base = i * d
                for s, c in enumerate(algebra.mul[j][k]):
                    if c:
                        x2[base + s] = c
                lhs = op.matrix.apply(x2)
                rhs = _apply_map_mu(
                    algebra, ident, comp1.matrix.apply(_spread_t_left(op, i, j, k, d))
                )
                scan.eq("pseudotwistor_1", (i, j, k), lhs, rhs)

                x2 = [ZERO] * (d * d)
                for r, c in enumerate(algebra.mul[i][j]):
                    if c:
                        x2[r * d + k] = c
                lhs = op.matrix.apply(x2)
                rhs = _apply_mu_map(
                    algebra, ident, comp2.matrix.apply(_spread_t_right(op, i, j, k, d))
                )
                scan.eq("pseudotwistor_2", (i, j, k), lhs, rhs)

                lhs = comp1.matrix.apply(apply_t12(op, _spread_t_right(op, i, j, k, d)))
                rhs = comp2.matrix.apply(apply_t23(op, _spread_t_left(op, i, j, k, d)))
                scan.eq("pseudotwistor_interchange", (i, j, k), lhs, rhs)
    return scan.done()


def check_twistor(algebra, op):
    """Classical twistor equations; companions are fixed to the 1-3 lift."""
    _check_shapes(algebra, op)
    if not algebra.is_classical():
        raise PreconditionFailure("twistor base algebra must have identity structure map")
    rep = check_associative(algebra)
    if not rep.passed:
        raise PreconditionFailure("check_associative", report=rep)
    d = algebra.dim
    ident = Matrix.identity(d)
    scan = Scan()
    for i in range(d):
        for j in range(d):
            for k in range(d):
                x2 = [ZERO] * (d * d)
                base = i * d
                for s, c in enumerate(algebra.mul[j][k]):
                    if c:
                        x2[base + s] = c
                lhs = op.matrix.apply(x2)
                rhs = _apply_map_mu(
                    algebra, ident, apply_t13(op, _spread_t_left(op, i, j, k, d))
                )
                scan.eq("twistor_1", (i, j, k), lhs, rhs)

                x2 = [ZERO] * (d * d)
                for r, c in enumerate(algebra.mul[i][j]):
                    if c:
                        x2[r * d + k] = c
                lhs = op.matrix.apply(x2)
                rhs = _apply_mu_map(
                    algebra, ident, apply_t13(op, _spread_t_right(op, i, j, k, d))
                )
                scan.eq("twistor_2", (i, j, k), lhs, rhs)

                lhs = apply_t12(op, _spread_t_right(op, i, j, k, d))
                rhs = apply_t23(op, _spread_t_left(op, i, j, k, d))
                scan.eq("twistor_commute", (i, j, k), lhs, rhs)
    return scan.done()


def _alpha_square_commutes(algebra_alpha, op, scan, equation):
    d = op.dim
    aa = kron(algebra_alpha, algebra_alpha)
    for i in range(d):
        for j in range(d):
            idx = i * d + j
            lhs = aa.apply(op.matrix.col(idx))
            rhs = op.matrix.apply(aa.col(idx))
            scan.eq(equation, (i, j), lhs, rhs)


def check_hom_pseudotwistor(algebra, op, comp1, comp2):
    """Hom-pseudotwistor equations on a Hom-associative algebra."""
    _check_shapes(algebra, op, comp1, comp2)
    rep = check_hom_algebra(algebra)
    if not rep.passed:
        raise PreconditionFailure("check_hom_algebra", report=rep)
    d = algebra.dim
    alpha = algebra.alpha
    scan = Scan()
    _alpha_square_commutes(alpha, op, scan, "commutes_with_alpha")
    acol = [alpha.col(i) for i in range(d)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = op.matrix.apply(tensor2(acol[i], algebra.mul[j][k]))
                rhs = _apply_map_mu(
                    algebra, alpha, comp1.matrix.apply(_spread_t_left(op, i, j, k, d))
                )
                scan.eq("hom_pseudotwistor_1", (i, j, k), lhs, rhs)

                lhs = op.matrix.apply(tensor2(algebra.mul[i][j], acol[k]))
                rhs = _apply_mu_map(
                    algebra, alpha, comp2.matrix.apply(_spread_t_right(op, i, j, k, d))
                )
                scan.eq("hom_pseudotwistor_2", (i, j, k), lhs, rhs)

                lhs = comp1.matrix.apply(apply_t12(op, _spread_t_right(op, i, j, k, d)))
                rhs = comp2.matrix.apply(apply_t23(op, _spread_t_left(op, i, j, k, d)))
                scan.eq("hom_pseudotwistor_interchange", (i, j, k), lhs, rhs)
    return scan.done()


def check_hom_twistor(algebra, op):
    """Hom-twistor equations; companions are the 1-3 lift of the operator."""
    _check_shapes(algebra, op)
    rep = check_hom_algebra(algebra)
    if not rep.passed:
        raise PreconditionFailure("check_hom_algebra", report=rep)
    d = algebra.dim
    alpha = algebra.alpha
    scan = Scan()
    _alpha_square_commutes(alpha, op, scan, "commutes_with_alpha")
    acol = [alpha.col(i) for i in range(d)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = op.matrix.apply(tensor2(acol[i], algebra.mul[j][k]))
                rhs = _apply_map_mu(
                    algebra, alpha, apply_t13(op, _spread_t_left(op, i, j, k, d))
                )
                scan.eq("hom_twistor_1", (i, j, k), lhs, rhs)

                lhs = op.matrix.apply(tensor2(algebra.mul[i][j], acol[k]))
                rhs = _apply_mu_map(
                    algebra, alpha, apply_t13(op, _spread_t_right(op, i, j, k, d))
                )
                scan.eq("hom_twistor_2", (i, j, k), lhs, rhs)

                lhs = apply_t12(op, _spread_t_right(op, i, j, k, d))
                rhs = apply_t23(op, _spread_t_left(op, i, j, k, d))
                scan.eq("hom_twistor_commute", (i, j, k), lhs, rhs)
    return scan.done()


def check_alpha_pseudotwistor(algebra, alpha, op, comp1, comp2):
    """alpha-pseudotwistor equations on an associative algebra with endomorphism alpha."""
    _check_shapes(algebra, op, comp1, comp2)
    if not algebra.is_classical():
        raise PreconditionFailure("base algebra must have identity structure map")
    rep = check_associative(algebra)
    if not rep.passed:
        raise PreconditionFailure("check_associative", report=rep)
    rep = multiplicativity_scan(algebra, alpha)
    if not rep.passed:
        raise NotMultiplicative(
            f"alpha is not multiplicative; witness {rep.failures[0].basis}",
            witness=rep.failures[0].basis,
        )
    d = algebra.dim
    ident = Matrix.identity(d)
    scan = Scan()
    _alpha_square_commutes(alpha, op, scan, "commutes_with_alpha")
    acol = [alpha.col(i) for i in range(d)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                x2 = [ZERO] * (d * d)
                base = i * d
                for s, c in enumerate(algebra.mul[j][k]):
                    if c:
                        x2[base + s] = c
                lhs = op.matrix.apply(x2)
                rhs = _apply_map_mu(
                    algebra, ident, comp1.matrix.apply(_spread_t_left(op, i, j, k, d))
                )
                scan.eq("alpha_pseudotwistor_1", (i, j, k), lhs, rhs)

                x2 = [ZERO] * (d * d)
                for r, c in enumerate(algebra.mul[i][j]):
                    if c:
                        x2[r * d + k] = c
                lhs = op.matrix.apply(x2)
                rhs = _apply_mu_map(
                    algebra, ident, comp2.matrix.apply(_spread_t_right(op, i, j, k, d))
                )
                scan.eq("alpha_pseudotwistor_2", (i, j, k), lhs, rhs)

                # interchange: C1 o (T (x) id) o (alpha (x) T) = C2 o (id (x) T) o (T (x) alpha)
                t = op.matrix.col(j * d + k)
                x3 = [ZERO] * d ** 3
                for p, ap in enumerate(acol[i]):
                    if not ap:
                        continue
                    base3 = p * d * d
                    for qr, w in enumerate(t):
                        if w:
                            x3[base3 + qr] = ap * w
                lhs = comp1.matrix.apply(apply_t12(op, x3))

                t = op.matrix.col(i * d + j)
                x3 = [ZERO] * d ** 3
                for pq, w in enumerate(t):
                    if not w:
                        continue
                    base3 = pq * d
                    for r, ar in enumerate(acol[k]):
                        if ar:
                            x3[base3 + r] = w * ar
                rhs = comp2.matrix.apply(apply_t23(op, x3))
                scan.eq("alpha_pseudotwistor_interchange", (i, j, k), lhs, rhs)
    return scan.done()


# ---------------------------------------------------------------------------
# deformation and the Yau operator triple
# ---------------------------------------------------------------------------


def deform(algebra, op, verified="unverified"):
    """Replace the multiplication by mu o T; records which axiom set was verified."""
    _check_shapes(algebra, op)
    d = algebra.dim
    new_mul = tuple(
        tuple(tuple(_apply_mu2(algebra, op.matrix.col(i * d + j))) for j in range(d))
        for i in range(d)
    )
    return HomAlgebra(
        d, new_mul, algebra.alpha, algebra.provenance + (f"deform:{verified}",)
    )


def deform_with_alpha(algebra, alpha, op, verified="unverified"):
    """mu o T on an associative algebra, with alpha installed as the structure map."""
    _check_shapes(algebra, op)
    if not algebra.is_classical():
        raise PreconditionFailure("base algebra must have identity structure map")
    rep = multiplicativity_scan(algebra, alpha)
    if not rep.passed:
        raise NotMultiplicative(
            f"alpha is not multiplicative; witness {rep.failures[0].basis}",
            witness=rep.failures[0].basis,
        )
    d = algebra.dim
    new_mul = tuple(
        tuple(tuple(_apply_mu2(algebra, op.matrix.col(i * d + j))) for j in range(d))
        for i in range(d)
    )
    return HomAlgebra(d, new_mul, alpha, algebra.provenance + (f"deform:{verified}",))


def yau_operator(alpha):
    """The operator triple (alpha (x) alpha, id (x) id (x) alpha, alpha (x) id (x) id)."""
    if alpha.rows != alpha.cols:
        raise DimensionMismatch("alpha must be square")
    d = alpha.rows
    ident2 = Matrix.identity(d * d)
    return (
        Operator2(d, kron(alpha, alpha)),
        Operator3(d, kron(ident2, alpha)),
        Operator3(d, kron(alpha, ident2)),
    )


def check_yau_compat(algebra, alpha, op, comp1, comp2):
    """Pseudotwistor vs Yau-twist compatibility: the deformations commute."""
    if not algebra.is_classical():
        raise PreconditionFailure("associative input required (identity structure map)")
    rep = check_associative(algebra)
    if not rep.passed:
        raise PreconditionFailure("check_associative", report=rep)
    rep = check_pseudotwistor(algebra, op, comp1, comp2)
    if not rep.passed:
        raise PreconditionFailure("check_pseudotwistor", report=rep)
    probe = Scan()
    _alpha_square_commutes(alpha, op, probe, "commutes_with_alpha")
    if not probe.passed:
        raise PreconditionFailure("alpha_commutes_with_operator", report=probe.done())
    rep = multiplicativity_scan(algebra, alpha)
    if not rep.passed:
        raise PreconditionFailure("alpha_multiplicative_for_base", report=rep)
    deformed = deform(algebra, op, verified="pseudotwistor")
    rep = multiplicativity_scan(deformed, alpha)
    if not rep.passed:
        raise PreconditionFailure("alpha_multiplicative_for_deformed", report=rep)

    twisted = yau_twist_algebra(algebra, alpha)
    scan = Scan()
    scan.absorb("hom_pseudotwistor_on_twist", check_hom_pseudotwistor(twisted, op, comp1, comp2))
    twist_then_deform = deform(twisted, op, verified="hom_pseudotwistor")
    deform_then_twist = yau_twist_algebra(deformed, alpha)
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            scan.eq(
                "structure_constants",
                (i, j),
                twist_then_deform.mul[i][j],
                deform_then_twist.mul[i][j],
            )
    return scan.done()
