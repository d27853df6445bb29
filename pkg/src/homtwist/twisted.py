"""Twisting maps, (Hom-/alpha-)twisted tensor products, iterated products and
the Clifford process.

A TwistingMapR represents R: B (x) A -> A (x) B.  Input coordinates flatten as
(b-index, a-index) and output coordinates as (a-index, b-index), both
row-major.  This is the single most error-prone convention in Sweedler
notation, so it is pinned here and reused by the manifest format.
"""

from dataclasses import dataclass

from .algebra import (
    HomAlgebra,
    check_associative,
    check_hom_algebra,
    multiplicativity_scan,
    tensor_algebra,
    yau_twist_algebra,
)
from .errors import (
    BraidViolation,
    CommutationFailure,
    DimensionMismatch,
    NotCommutingWithAlpha,
    NotInvolutive,
    NotMultiplicative,
    ParamConstraintViolation,
    PreconditionFailure,
)
from .exact import (
    Matrix,
    Scan,
    ZERO,
    as_scalar,
    flatten_index,
    kron,
    mat_inv,
    mat_mul,
    unflatten_index,
    vec_zero,
)
from .twistor import Operator2, Operator3, deform_with_alpha, lift_13


@dataclass(frozen=True)
class TwistingMapR:
    """Linear map R: B (x) A -> A (x) B by its matrix; no axiom assumed."""

    dim_a: int
    dim_b: int
    matrix: Matrix

    def __post_init__(self):
        n = self.dim_a * self.dim_b
        if self.matrix.rows != n or self.matrix.cols != n:
            raise DimensionMismatch(f"twisting map matrix must be {n}x{n}")

    def components(self, b, a):
        """Iterate R(e_b (x) e_a) as (a-index, b-index, coefficient) triples."""
        col = self.matrix.col(b * self.dim_a + a)
        for idx, w in enumerate(col):
            if w:
                yield idx // self.dim_b, idx % self.dim_b, w


def flip(dim_a, dim_b):
    """The flip b (x) a -> a (x) b as a permutation twisting map."""
    n = dim_a * dim_b
    columns = []
    for b in range(dim_b):
        for a in range(dim_a):
            col = vec_zero(n)
            col[a * dim_b + b] = as_scalar(1)
            columns.append(col)
    return TwistingMapR(dim_a, dim_b, Matrix.from_columns(columns))


# ---------------------------------------------------------------------------
# appliers on dense tensors with explicit factor dims
# ---------------------------------------------------------------------------


def _prod(dims):
    total = 1
    for d in dims:
        total *= d
    return total


def _basis_tensor(dims, multi):
    v = vec_zero(_prod(dims))
    v[flatten_index(dims, multi)] = as_scalar(1)
    return v


def _apply_r_at(rmap, x, dims, pos):
    """Apply R to factors (pos, pos+1); they must be (B, A) and become (A, B)."""
    if dims[pos] != rmap.dim_b or dims[pos + 1] != rmap.dim_a:
        raise DimensionMismatch(
            f"factors at {pos} have dims {dims[pos]}x{dims[pos + 1]}, "
            f"expected {rmap.dim_b}x{rmap.dim_a}"
        )
    new_dims = list(dims)
    new_dims[pos], new_dims[pos + 1] = rmap.dim_a, rmap.dim_b
    out = vec_zero(_prod(new_dims))
    for idx, v in enumerate(x):
        if not v:
            continue
        multi = list(unflatten_index(dims, idx))
        col = rmap.matrix.col(multi[pos] * rmap.dim_a + multi[pos + 1])
        for oidx, w in enumerate(col):
            if not w:
                continue
            multi[pos], multi[pos + 1] = divmod(oidx, rmap.dim_b)
            o = flatten_index(new_dims, multi)
            out[o] = out[o] + v * w
    return out, new_dims


def _apply_mu_at(algebra, x, dims, pos):
    """Multiply factors (pos, pos+1), both copies of the algebra, into one."""
    if dims[pos] != algebra.dim or dims[pos + 1] != algebra.dim:
        raise DimensionMismatch("factor dims do not match the algebra")
    new_dims = dims[:pos] + [algebra.dim] + dims[pos + 2 :]
    out = vec_zero(_prod(new_dims))
    for idx, v in enumerate(x):
        if not v:
            continue
        multi = list(unflatten_index(dims, idx))
        row = algebra.mul[multi[pos]][multi[pos + 1]]
        new_multi = multi[:pos] + [0] + multi[pos + 2 :]
        for k, c in enumerate(row):
            if not c:
                continue
            new_multi[pos] = k
            o = flatten_index(new_dims, new_multi)
            out[o] = out[o] + v * c
    return out, new_dims


def _apply_map_at(m, x, dims, pos):
    """Apply a square matrix to factor pos."""
    if m.rows != dims[pos] or m.cols != dims[pos]:
        raise DimensionMismatch("map shape does not match the factor")
    out = vec_zero(len(x))
    for idx, v in enumerate(x):
        if not v:
            continue
        multi = list(unflatten_index(dims, idx))
        col = m.col(multi[pos])
        for r, w in enumerate(col):
            if not w:
                continue
            multi[pos] = r
            o = flatten_index(dims, multi)
            out[o] = out[o] + v * w
    return out


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------


def _check_r_dims(a, b, rmap):
    if rmap.dim_a != a.dim or rmap.dim_b != b.dim:
        raise DimensionMismatch(
            f"twisting map is ({rmap.dim_a},{rmap.dim_b}), algebras are ({a.dim},{b.dim})"
        )


def check_twisting_map(a, b, rmap):
    """Classical twisting map equations over associative algebras."""
    _check_r_dims(a, b, rmap)
    for alg, name in ((a, "A"), (b, "B")):
        if not alg.is_classical():
            raise PreconditionFailure(f"{name} must have identity structure map")
        rep = check_associative(alg)
        if not rep.passed:
            raise PreconditionFailure(f"check_associative:{name}", report=rep)
    da, db = a.dim, b.dim
    scan = Scan()
    for bb in range(db):
        for a1 in range(da):
            for a2 in range(da):
                x2 = vec_zero(db * da)
                base = bb * da
                for k, c in enumerate(a.mul[a1][a2]):
                    if c:
                        x2[base + k] = c
                lhs, _ = _apply_r_at(rmap, x2, [db, da], 0)
                x, dims = _basis_tensor([db, da, da], (bb, a1, a2)), [db, da, da]
                x, dims = _apply_r_at(rmap, x, dims, 0)
                x, dims = _apply_r_at(rmap, x, dims, 1)
                rhs, _ = _apply_mu_at(a, x, dims, 0)
                scan.eq("twisting_map_1", (bb, a1, a2), lhs, rhs)
    for b1 in range(db):
        for b2 in range(db):
            for aa in range(da):
                x2 = vec_zero(db * da)
                for k, c in enumerate(b.mul[b1][b2]):
                    if c:
                        x2[k * da + aa] = c
                lhs, _ = _apply_r_at(rmap, x2, [db, da], 0)
                x, dims = _basis_tensor([db, db, da], (b1, b2, aa)), [db, db, da]
                x, dims = _apply_r_at(rmap, x, dims, 1)
                x, dims = _apply_r_at(rmap, x, dims, 0)
                rhs, _ = _apply_mu_at(b, x, dims, 1)
                scan.eq("twisting_map_2", (b1, b2, aa), lhs, rhs)
    return scan.done()


def check_hom_twisting_map(a, b, rmap):
    """Hom-twisting map equations over Hom-associative algebras."""
    _check_r_dims(a, b, rmap)
    for alg, name in ((a, "A"), (b, "B")):
        rep = check_hom_algebra(alg)
        if not rep.passed:
            raise PreconditionFailure(f"check_hom_algebra:{name}", report=rep)
    da, db = a.dim, b.dim
    scan = Scan()
    for bb in range(db):
        for aa in range(da):
            out = list(rmap.matrix.col(bb * da + aa))
            out = _apply_map_at(a.alpha, out, [da, db], 0)
            lhs = _apply_map_at(b.alpha, out, [da, db], 1)
            x = _basis_tensor([db, da], (bb, aa))
            x = _apply_map_at(b.alpha, x, [db, da], 0)
            x = _apply_map_at(a.alpha, x, [db, da], 1)
            rhs, _ = _apply_r_at(rmap, x, [db, da], 0)
            scan.eq("hom_twisting_map_0", (bb, aa), lhs, rhs)
    for bb in range(db):
        bcol = b.alpha.col(bb)
        for a1 in range(da):
            for a2 in range(da):
                x2 = vec_zero(db * da)
                arow = a.mul[a1][a2]
                for p, bp in enumerate(bcol):
                    if not bp:
                        continue
                    base = p * da
                    for k, c in enumerate(arow):
                        if c:
                            x2[base + k] = bp * c
                lhs, _ = _apply_r_at(rmap, x2, [db, da], 0)
                x, dims = _basis_tensor([db, da, da], (bb, a1, a2)), [db, da, da]
                x, dims = _apply_r_at(rmap, x, dims, 0)
                x, dims = _apply_r_at(rmap, x, dims, 1)
                x, dims = _apply_mu_at(a, x, dims, 0)
                rhs = _apply_map_at(b.alpha, x, dims, 1)
                scan.eq("hom_twisting_map_1", (bb, a1, a2), lhs, rhs)
    for b1 in range(db):
        for b2 in range(db):
            brow = b.mul[b1][b2]
            for aa in range(da):
                acolv = a.alpha.col(aa)
                x2 = vec_zero(db * da)
                for k, c in enumerate(brow):
                    if not c:
                        continue
                    base = k * da
                    for p, ap in enumerate(acolv):
                        if ap:
                            x2[base + p] = c * ap
                lhs, _ = _apply_r_at(rmap, x2, [db, da], 0)
                x, dims = _basis_tensor([db, db, da], (b1, b2, aa)), [db, db, da]
                x, dims = _apply_r_at(rmap, x, dims, 1)
                x, dims = _apply_r_at(rmap, x, dims, 0)
                x, dims = _apply_mu_at(b, x, dims, 1)
                rhs = _apply_map_at(a.alpha, x, dims, 0)
                scan.eq("hom_twisting_map_2", (b1, b2, aa), lhs, rhs)
    return scan.done()


def check_braid(r1, r2, r3):
    """Hexagon compatibility of R1: B(x)A, R2: C(x)B, R3: C(x)A."""
    da, db = r1.dim_a, r1.dim_b
    dc = r2.dim_b
    if r2.dim_a != db or r3.dim_a != da or r3.dim_b != dc:
        raise DimensionMismatch("braid triple dimensions are inconsistent")
    scan = Scan()
    for c in range(dc):
        for b in range(db):
            for a in range(da):
                x, dims = _basis_tensor([dc, db, da], (c, b, a)), [dc, db, da]
                x, dims = _apply_r_at(r1, x, dims, 1)
                x, dims = _apply_r_at(r3, x, dims, 0)
                lhs, _ = _apply_r_at(r2, x, dims, 1)
                x, dims = _basis_tensor([dc, db, da], (c, b, a)), [dc, db, da]
                x, dims = _apply_r_at(r2, x, dims, 0)
                x, dims = _apply_r_at(r3, x, dims, 1)
                rhs, _ = _apply_r_at(r1, x, dims, 0)
                scan.eq("braid", (c, b, a), lhs, rhs)
    return scan.done()


# ---------------------------------------------------------------------------
# twisted tensor products
# ---------------------------------------------------------------------------


def _twisted_mul(a, b, rmap):
    """Structure constants of (a (x) b)(a' (x) b') = a a'_R (x) b_R b'."""
    da, db = a.dim, b.dim
    n = da * db
    mul = []
    for i in range(da):
        for j in range(db):
            plane = []
            for k in range(da):
                for l in range(db):
                    row = vec_zero(n)
                    for p, q, w in rmap.components(j, k):
                        arow = a.mul[i][p]
                        brow = b.mul[q][l]
                        for rr, ar in enumerate(arow):
                            if not ar:
                                continue
                            war = w * ar
                            base = rr * db
                            for ss, bs in enumerate(brow):
                                if bs:
                                    row[base + ss] = row[base + ss] + war * bs
                    plane.append(tuple(row))
            mul.append(tuple(plane))
    return tuple(mul)


def ttp(a, b, rmap):
    """Classical twisted tensor product; requires a verified twisting map."""
    rep = check_twisting_map(a, b, rmap)
    if not rep.passed:
        raise PreconditionFailure("check_twisting_map", report=rep)
    n = a.dim * b.dim
    return HomAlgebra(n, _twisted_mul(a, b, rmap), Matrix.identity(n), ("ttp",))


def hom_ttp(a, b, rmap):
    """Hom-twisted tensor product; requires a verified Hom-twisting map."""
    rep = check_hom_twisting_map(a, b, rmap)
    if not rep.passed:
        raise PreconditionFailure("check_hom_twisting_map", report=rep)
    n = a.dim * b.dim
    return HomAlgebra(
        n, _twisted_mul(a, b, rmap), kron(a.alpha, b.alpha), ("hom_ttp",)
    )


def _twistor_matrix(a, b, rmap):
    """T((a (x) b) (x) (a' (x) b')) = (a (x) b_R) (x) (a'_R (x) b')."""
    da, db = a.dim, b.dim
    n = da * db
    columns = []
    for i in range(da):
        for j in range(db):
            for k in range(da):
                for l in range(db):
                    col = vec_zero(n * n)
                    for p, q, w in rmap.components(j, k):
                        col[(i * db + q) * n + (p * db + l)] = w
                    columns.append(col)
    return Operator2(n, Matrix.from_columns(columns))


def twistor_from_R(a, b, rmap):
    """The twistor on A (x) B induced by a classical twisting map."""
    rep = check_twisting_map(a, b, rmap)
    if not rep.passed:
        raise PreconditionFailure("check_twisting_map", report=rep)
    return _twistor_matrix(a, b, rmap)


def hom_twistor_from_R(a, b, rmap):
    """The Hom-twistor on A (x) B induced by a Hom-twisting map."""
    rep = check_hom_twisting_map(a, b, rmap)
    if not rep.passed:
        raise PreconditionFailure("check_hom_twisting_map", report=rep)
    return _twistor_matrix(a, b, rmap)


# ---------------------------------------------------------------------------
# iterated products
# ---------------------------------------------------------------------------


def iterated_ttp(a, b, c, r1, r2, r3):
    """Both bracketings of the iterated Hom-twisted tensor product.

    Returns (algebra, P1, P2) where P1 twists (A (x) B) with C and P2 twists A
    with (B (x) C); the two bracketings are compared entry-wise.
    """
    for rmap, left, right, name in (
        (r1, a, b, "R1"),
        (r2, b, c, "R2"),
        (r3, a, c, "R3"),
    ):
        rep = check_hom_twisting_map(left, right, rmap)
        if not rep.passed:
            raise PreconditionFailure(f"check_hom_twisting_map:{name}", report=rep)
    rep = check_braid(r1, r2, r3)
    if not rep.passed:
        raise BraidViolation(
            f"braid condition fails; witness {rep.failures[0].basis}",
            witness=rep.failures[0].basis,
        )
    da, db, dc = a.dim, b.dim, c.dim

    columns = []
    for cc in range(dc):
        for aa in range(da):
            for bb in range(db):
                x, dims = _basis_tensor([dc, da, db], (cc, aa, bb)), [dc, da, db]
                x, dims = _apply_r_at(r3, x, dims, 0)
                x, dims = _apply_r_at(r2, x, dims, 1)
                columns.append(x)
    p1 = TwistingMapR(da * db, dc, Matrix.from_columns(columns))

    columns = []
    for bb in range(db):
        for cc in range(dc):
            for aa in range(da):
                x, dims = _basis_tensor([db, dc, da], (bb, cc, aa)), [db, dc, da]
                x, dims = _apply_r_at(r3, x, dims, 1)
                x, dims = _apply_r_at(r1, x, dims, 0)
                columns.append(x)
    p2 = TwistingMapR(da, db * dc, Matrix.from_columns(columns))

    left_first = hom_ttp(hom_ttp(a, b, r1), c, p1)
    right_first = hom_ttp(a, hom_ttp(b, c, r2), p2)
    if left_first.mul != right_first.mul or left_first.alpha != right_first.alpha:
        raise BraidViolation("bracketings disagree despite a passing braid check")
    return left_first.with_provenance("iterated_ttp"), p1, p2


# ---------------------------------------------------------------------------
# Clifford process
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CliffordParams:
    """q and the involution sigma for doubling along k[v]/(v^2 = q)."""

    q: object
    sigma: Matrix

    def __post_init__(self):
        object.__setattr__(self, "q", as_scalar(self.q))
        if not self.q:
            raise ParamConstraintViolation("q must be nonzero")
        if self.sigma.rows != self.sigma.cols:
            raise DimensionMismatch("sigma must be square")
        if mat_mul(self.sigma, self.sigma) != Matrix.identity(self.sigma.rows):
            raise NotInvolutive("sigma squared is not the identity")


def clifford_algebra(q):
    """C(k, q) = k[v]/(v^2 = q) with basis (1, v) and identity structure map."""
    q = as_scalar(q)
    one = as_scalar(1)
    mul = (
        ((one, ZERO), (ZERO, one)),
        ((ZERO, one), (q, ZERO)),
    )
    return HomAlgebra(2, mul, Matrix.identity(2), ("clifford_factor",))


def clifford(a, params):
    """Clifford process: double A along C(k, q) with the sigma-twisting map."""
    if params.sigma.rows != a.dim:
        raise DimensionMismatch("sigma shape does not match the algebra")
    rep = multiplicativity_scan(a, params.sigma)
    if not rep.passed:
        raise NotMultiplicative(
            f"sigma is not multiplicative; witness {rep.failures[0].basis}",
            witness=rep.failures[0].basis,
        )
    if mat_mul(params.sigma, a.alpha) != mat_mul(a.alpha, params.sigma):
        raise NotCommutingWithAlpha("sigma does not commute with the structure map")
    bcq = clifford_algebra(params.q)
    da = a.dim
    columns = []
    for bb in range(2):
        for aa in range(da):
            col = vec_zero(da * 2)
            if bb == 0:
                col[aa * 2] = as_scalar(1)
            else:
                for p, s in enumerate(params.sigma.col(aa)):
                    if s:
                        col[p * 2 + 1] = s
            columns.append(col)
    rmap = TwistingMapR(da, 2, Matrix.from_columns(columns))
    return hom_ttp(a, bcq, rmap).with_provenance("clifford"), rmap


# ---------------------------------------------------------------------------
# compatibility with Yau twisting, and the alpha variants
# ---------------------------------------------------------------------------


def check_deform_compat_ttp(a, b, alpha_a, alpha_b, pmap):
    """Twisting then Yau-deforming equals Yau-deforming then twisting."""
    rep = check_twisting_map(a, b, pmap)
    if not rep.passed:
        raise PreconditionFailure("check_twisting_map", report=rep)
    left = mat_mul(kron(alpha_a, alpha_b), pmap.matrix)
    right = mat_mul(pmap.matrix, kron(alpha_b, alpha_a))
    if left != right:
        raise CommutationFailure(
            "(alpha_A (x) alpha_B) o P differs from P o (alpha_B (x) alpha_A)"
        )
    at = yau_twist_algebra(a, alpha_a)
    bt = yau_twist_algebra(b, alpha_b)
    scan = Scan()
    scan.absorb("hom_twisting_map_on_twists", check_hom_twisting_map(at, bt, pmap))
    twisted_classical = yau_twist_algebra(ttp(a, b, pmap), kron(alpha_a, alpha_b))
    hom_side = hom_ttp(at, bt, pmap)
    for i in range(twisted_classical.dim):
        for j in range(twisted_classical.dim):
            scan.eq(
                "structure_constants", (i, j), twisted_classical.mul[i][j], hom_side.mul[i][j]
            )
    return scan.done()


def check_alphaAB_twisting_map(a, b, alpha_a, alpha_b, rmap):
    """(alpha_A, alpha_B)-twisting map equations over associative algebras."""
    _check_r_dims(a, b, rmap)
    for alg, endo, name in ((a, alpha_a, "A"), (b, alpha_b, "B")):
        if not alg.is_classical():
            raise PreconditionFailure(f"{name} must have identity structure map")
        rep = check_associative(alg)
        if not rep.passed:
            raise PreconditionFailure(f"check_associative:{name}", report=rep)
        rep = multiplicativity_scan(alg, endo)
        if not rep.passed:
            raise NotMultiplicative(
                f"alpha_{name} is not multiplicative; witness {rep.failures[0].basis}",
                witness=rep.failures[0].basis,
            )
    inv_a = mat_inv(alpha_a)  # NotInvertible propagates
    inv_b = mat_inv(alpha_b)
    da, db = a.dim, b.dim
    scan = Scan()
    for bb in range(db):
        for aa in range(da):
            out = list(rmap.matrix.col(bb * da + aa))
            out = _apply_map_at(alpha_a, out, [da, db], 0)
            lhs = _apply_map_at(alpha_b, out, [da, db], 1)
            x = _basis_tensor([db, da], (bb, aa))
            x = _apply_map_at(alpha_b, x, [db, da], 0)
            x = _apply_map_at(alpha_a, x, [db, da], 1)
            rhs, _ = _apply_r_at(rmap, x, [db, da], 0)
            scan.eq("alpha_twisting_map_0", (bb, aa), lhs, rhs)
    for bb in range(db):
        for a1 in range(da):
            for a2 in range(da):
                x2 = vec_zero(db * da)
                base = bb * da
                for k, c in enumerate(a.mul[a1][a2]):
                    if c:
                        x2[base + k] = c
                lhs, _ = _apply_r_at(rmap, x2, [db, da], 0)
                x, dims = _basis_tensor([db, da, da], (bb, a1, a2)), [db, da, da]
                x, dims = _apply_r_at(rmap, x, dims, 0)
                x = _apply_map_at(inv_b, x, dims, 1)
                x, dims = _apply_r_at(rmap, x, dims, 1)
                rhs, _ = _apply_mu_at(a, x, dims, 0)
                scan.eq("alpha_twisting_map_1", (bb, a1, a2), lhs, rhs)
    for b1 in range(db):
        for b2 in range(db):
            for aa in range(da):
                x2 = vec_zero(db * da)
                for k, c in enumerate(b.mul[b1][b2]):
                    if c:
                        x2[k * da + aa] = c
                lhs, _ = _apply_r_at(rmap, x2, [db, da], 0)
                x, dims = _basis_tensor([db, db, da], (b1, b2, aa)), [db, db, da]
                x, dims = _apply_r_at(rmap, x, dims, 1)
                x = _apply_map_at(inv_a, x, dims, 1)
                x, dims = _apply_r_at(rmap, x, dims, 0)
                rhs, _ = _apply_mu_at(b, x, dims, 1)
                scan.eq("alpha_twisting_map_2", (b1, b2, aa), lhs, rhs)
    return scan.done()


def alphaAB_ttp(a, b, alpha_a, alpha_b, rmap):
    """The (alpha_A, alpha_B)-twisted tensor product with its operator triple.

    Returns (algebra, T, C1, C2); the algebra is the deformation of A (x) B by
    T with structure map alpha_A (x) alpha_B.
    """
    rep = check_alphaAB_twisting_map(a, b, alpha_a, alpha_b, rmap)
    if not rep.passed:
        raise PreconditionFailure("check_alphaAB_twisting_map", report=rep)
    da, db = a.dim, b.dim
    n = da * db
    columns = []
    for i in range(da):
        acol = alpha_a.col(i)
        for j in range(db):
            for k in range(da):
                for l in range(db):
                    bcol = alpha_b.col(l)
                    col = vec_zero(n * n)
                    for p, q, w in rmap.components(j, k):
                        for r, ar in enumerate(acol):
                            if not ar:
                                continue
                            war = w * ar
                            ridx = (r * db + q) * n
                            for s, bs in enumerate(bcol):
                                if bs:
                                    col[ridx + p * db + s] = war * bs
                    columns.append(col)
    top = Operator2(n, Matrix.from_columns(columns))

    inv_ab = kron(mat_inv(alpha_a), mat_inv(alpha_b))
    ident = Matrix.identity(n * n)
    lifted = lift_13(top).matrix
    comp1 = Operator3(n, mat_mul(lifted, kron(inv_ab, ident)))
    comp2 = Operator3(n, mat_mul(lifted, kron(ident, inv_ab)))

    base = tensor_algebra(a, b)
    algebra = deform_with_alpha(
        base, kron(alpha_a, alpha_b), top, verified="alpha_pseudotwistor"
    ).with_provenance("alphaAB_ttp")
    return algebra, top, comp1, comp2


def alphaAB_from_classical(pmap, alpha_a, alpha_b):
    """Lift a classical twisting map to the alpha setting: R = (alpha_A (x) alpha_B) o P."""
    if alpha_a.rows != pmap.dim_a or alpha_b.rows != pmap.dim_b:
        raise DimensionMismatch("alpha shapes do not match the twisting map")
    left = mat_mul(kron(alpha_a, alpha_b), pmap.matrix)
    right = mat_mul(pmap.matrix, kron(alpha_b, alpha_a))
    if left != right:
        raise CommutationFailure(
            "(alpha_A (x) alpha_B) o P differs from P o (alpha_B (x) alpha_A)"
        )
    return TwistingMapR(pmap.dim_a, pmap.dim_b, left)
