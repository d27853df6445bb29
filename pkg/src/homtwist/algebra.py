"""Finite-dimensional (Hom-)associative algebras given by structure constants.

An algebra is a triple (dim, mul, alpha): ``mul[i][j][k]`` is the coefficient
of ``e_k`` in ``e_i e_j`` and ``alpha`` is the structure map as a matrix.  A
plain associative algebra is the same record with ``alpha`` the identity.  No
axiom is assumed at construction; the checkers decide status.  Algebras are
nonunital throughout.
"""

from dataclasses import dataclass, field

from .errors import DimensionMismatch, NotMultiplicative, PreconditionFailure
from .exact import Matrix, Scan, ZERO, as_scalar, basis_vec, kron, mat_inv, mat_mul


def _normalize_constants(dim, mul):
    mul = tuple(tuple(tuple(as_scalar(x) for x in row) for row in plane) for plane in mul)
    if len(mul) != dim or any(
        len(plane) != dim or any(len(row) != dim for row in plane) for plane in mul
    ):
        raise DimensionMismatch(f"structure constants are not {dim}^3 shaped")
    return mul


@dataclass(frozen=True)
class HomAlgebra:
    """Structure-constant algebra with a structure map; immutable."""

    dim: int
    mul: tuple
    alpha: Matrix
    provenance: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "mul", _normalize_constants(self.dim, self.mul))
        if self.alpha.rows != self.dim or self.alpha.cols != self.dim:
            raise DimensionMismatch(
                f"alpha is {self.alpha.rows}x{self.alpha.cols}, expected {self.dim}x{self.dim}"
            )

    def product(self, u, v):
        """Bilinear extension of the structure constants to coefficient vectors."""
        out = [ZERO] * self.dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            plane = self.mul[i]
            for j, vj in enumerate(v):
                if not vj:
                    continue
                w = ui * vj
                for k, c in enumerate(plane[j]):
                    if c:
                        out[k] = out[k] + w * c
        return out

    def alpha_col(self, i):
        return self.alpha.col(i)

    def is_classical(self):
        return self.alpha.is_identity()

    def with_provenance(self, *tags):
        return HomAlgebra(self.dim, self.mul, self.alpha, self.provenance + tags)


def hom_algebra(dim, mul, alpha=None, provenance=()):
    """Convenience constructor; alpha defaults to the identity."""
    if alpha is None:
        alpha = Matrix.identity(dim)
    elif not isinstance(alpha, Matrix):
        alpha = Matrix(alpha)
    return HomAlgebra(dim, mul, alpha, tuple(provenance))


def zero_algebra(dim):
    z = tuple(tuple((ZERO,) * dim for _ in range(dim)) for _ in range(dim))
    return hom_algebra(dim, z)


def same_structure(a, b):
    """Entry-wise equality of dimension, structure constants and structure maps."""
    return a.dim == b.dim and a.mul == b.mul and a.alpha == b.alpha


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------


def check_hom_algebra(algebra):
    """Scan multiplicativity of alpha and Hom-associativity over all basis tuples."""
    d = algebra.dim
    scan = Scan()
    acol = [algebra.alpha_col(i) for i in range(d)]
    for i in range(d):
        for j in range(d):
            lhs = algebra.alpha.apply(algebra.mul[i][j])
            rhs = algebra.product(acol[i], acol[j])
            scan.eq("multiplicativity", (i, j), lhs, rhs)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = algebra.product(acol[i], algebra.mul[j][k])
                rhs = algebra.product(algebra.mul[i][j], acol[k])
                scan.eq("hom_associativity", (i, j, k), lhs, rhs)
    return scan.done()


def check_associative(algebra):
    """Plain associativity scan; the structure map is ignored."""
    d = algebra.dim
    scan = Scan()
    for i in range(d):
        ei = basis_vec(d, i)
        for j in range(d):
            for k in range(d):
                lhs = algebra.product(algebra.mul[i][j], basis_vec(d, k))
                rhs = algebra.product(ei, algebra.mul[j][k])
                scan.eq("associativity", (i, j, k), lhs, rhs)
    return scan.done()


def multiplicativity_scan(algebra, endo):
    """Does `endo` satisfy endo(e_i e_j) = endo(e_i) endo(e_j) for algebra.mul?"""
    d = algebra.dim
    scan = Scan()
    for i in range(d):
        for j in range(d):
            lhs = endo.apply(algebra.mul[i][j])
            rhs = algebra.product(endo.col(i), endo.col(j))
            scan.eq("multiplicativity", (i, j), lhs, rhs)
    return scan.done()


def check_algebra_morphism(f, source, target):
    """f is a morphism iff it intertwines structure maps and is multiplicative."""
    if f.cols != source.dim or f.rows != target.dim:
        raise DimensionMismatch(
            f"map is {f.rows}x{f.cols}, expected {target.dim}x{source.dim}"
        )
    scan = Scan()
    left = mat_mul(target.alpha, f)
    right = mat_mul(f, source.alpha)
    for i in range(source.dim):
        scan.eq("intertwines_alpha", (i,), left.col(i), right.col(i))
    for i in range(source.dim):
        for j in range(source.dim):
            lhs = f.apply(source.mul[i][j])
            rhs = target.product(f.col(i), f.col(j))
            scan.eq("multiplicative", (i, j), lhs, rhs)
    return scan.done()


def check_lemma_four_elements(algebra):
    """(ab)(cd) = alpha(a)(alpha^{-1}(bc) d) over all basis quadruples."""
    rep = check_hom_algebra(algebra)
    if not rep.passed:
        raise PreconditionFailure("check_hom_algebra", report=rep)
    inv = mat_inv(algebra.alpha)  # NotInvertible propagates
    d = algebra.dim
    acol = [algebra.alpha_col(i) for i in range(d)]
    scan = Scan()
    for a in range(d):
        for b in range(d):
            for c in range(d):
                mid = inv.apply(algebra.mul[b][c])
                for e in range(d):
                    lhs = algebra.product(algebra.mul[a][b], algebra.mul[c][e])
                    rhs = algebra.product(acol[a], algebra.product(mid, basis_vec(d, e)))
                    scan.eq("four_elements", (a, b, c, e), lhs, rhs)
    return scan.done()


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def yau_twist_algebra(algebra, alpha):
    """Twist a plain associative algebra: new multiplication alpha o mul."""
    if alpha.rows != algebra.dim or alpha.cols != algebra.dim:
        raise DimensionMismatch("alpha shape does not match the algebra")
    if not algebra.is_classical():
        raise PreconditionFailure("yau twist input must have identity structure map")
    rep = multiplicativity_scan(algebra, alpha)
    if not rep.passed:
        raise NotMultiplicative(
            f"alpha is not multiplicative; witness pair {rep.failures[0].basis}",
            witness=rep.failures[0].basis,
        )
    new_mul = tuple(
        tuple(tuple(alpha.apply(algebra.mul[i][j])) for j in range(algebra.dim))
        for i in range(algebra.dim)
    )
    return HomAlgebra(algebra.dim, new_mul, alpha, algebra.provenance + ("yau_twist",))


def tensor_algebra(a, b):
    """Componentwise tensor product algebra with structure map alphaA (x) alphaB."""
    da, db = a.dim, b.dim
    dim = da * db
    mul = []
    for i in range(da):
        for j in range(db):
            plane = []
            for k in range(da):
                for l in range(db):
                    row = [ZERO] * dim
                    arow = a.mul[i][k]
                    brow = b.mul[j][l]
                    for p, ap in enumerate(arow):
                        if not ap:
                            continue
                        base = p * db
                        for q, bq in enumerate(brow):
                            if bq:
                                row[base + q] = ap * bq
                    plane.append(tuple(row))
            mul.append(tuple(plane))
    return HomAlgebra(
        dim, tuple(mul), kron(a.alpha, b.alpha), ("tensor_algebra",)
    )
