"""Parameterized constructors for the named example families and presets.

Each gallery bundle carries fully-built objects ready for the checkers, with
each coefficient formula written down exactly once so tests and the
acceptance suite share a single source.  Bundles are plain dicts;
``provenance`` distinguishes the core example families (``paper``) from the
auxiliary presets this package adds (``auxiliary``).
"""

from dataclasses import dataclass, field

from .algebra import hom_algebra, yau_twist_algebra
from .coalgebra import HomBialgebra, hom_coalgebra
from .errors import ParamConstraintViolation
from .exact import Matrix, ONE, ZERO, as_scalar, kron, mat_mul
from .modsmash import LEFT, RIGHT, ActionTable, CoactionTable
from .twisted import CliffordParams, TwistingMapR, clifford, clifford_algebra, flip
from .twistor import Operator2
from .uqsl2 import UqParams

GALLERY_NAMES = frozenset(
    {
        "ttp_k2_lambda",
        "homalg_2dim",
        "homtwistor_2dim",
        "homtwist_R1",
        "homtwist_R2",
        "homtwist_Dk2",
        "clifford",
        "sweedler_h4",
        "group_algebra",
        "uq_setup",
        "alpha_ttp_flip",
        "alpha_ttp_clifford",
    }
)


@dataclass(frozen=True)
class GalleryKey:
    name: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in GALLERY_NAMES:
            raise ParamConstraintViolation(f"unknown gallery name {self.name!r}")
        object.__setattr__(
            self, "params", {k: as_scalar(v) for k, v in self.params.items()}
        )


def _require(key, *names):
    missing = [n for n in names if n not in key.params]
    if missing:
        raise ParamConstraintViolation(f"{key.name} needs parameters {missing}")
    extra = sorted(set(key.params) - set(names) - {"l2"})
    if extra:
        raise ParamConstraintViolation(f"{key.name} got unknown parameters {extra}")
    return [key.params[n] for n in names]


def k2_algebra():
    """k^2 with e_i e_j = delta_ij e_i and identity structure map."""
    mul = (
        ((ONE, ZERO), (ZERO, ZERO)),
        ((ZERO, ZERO), (ZERO, ONE)),
    )
    return hom_algebra(2, mul)


def swap_matrix():
    return Matrix(((ZERO, ONE), (ONE, ZERO)))


def _two_dim_algebra(a, l1, l2):
    if l2 == 1:
        raise ParamConstraintViolation("l2 must differ from 1")
    if not a:
        raise ParamConstraintViolation("a must be nonzero")
    one_m = ONE - l2
    mul = (
        ((a, ZERO), (l1 * a, l2 * a)),
        (
            (l1 * a, l2 * a),
            (l1 * l1 * (ONE - 2 * l2) * a / (one_m * one_m), 2 * l1 * l2 * a / one_m),
        ),
    )
    alpha = Matrix(((ONE, l1), (ZERO, l2)))
    return hom_algebra(2, mul, alpha)


def _two_dim_twistor(l1, l2):
    c = l1 / (ONE - l2)
    rows = [[ZERO] * 4 for _ in range(4)]
    rows[0][0] = ONE  # T(e1 (x) e1) = e1 (x) e1
    rows[0][1] = c  # T(e1 (x) e2) = c e1 (x) e1
    rows[2][2] = ONE  # T(e2 (x) e1) = e2 (x) e1
    rows[2][3] = c  # T(e2 (x) e2) = c e2 (x) e1
    return Operator2(2, Matrix(rows))


def _two_dim_deformed_mul(a, l1, l2):
    c = l1 * a / (ONE - l2)
    return (
        ((a, ZERO), (c, ZERO)),
        ((l1 * a, l2 * a), (c * l1, c * l2)),
    )


def _ttp_k2_table(lam):
    one_m = ONE - lam
    lam_m = lam - ONE
    rows = {
        0: ((lam, 0), (lam, 1), (one_m, 0), (-lam, 1)),
        1: ((one_m, 0), (one_m, 1), (lam_m, 0), (lam, 1)),
        2: ((lam, 2), (lam_m, 3), (one_m, 2), (one_m, 3)),
        3: ((-lam, 2), (one_m, 3), (lam, 2), (lam, 3)),
    }
    mul = []
    for i in range(4):
        plane = []
        for j in range(4):
            coeff, target = rows[i][j]
            row = [ZERO] * 4
            row[target] = as_scalar(coeff)
            plane.append(tuple(row))
        mul.append(tuple(plane))
    return tuple(mul)


def _ttp_k2_map(lam):
    one_m = ONE - lam
    lam_m = lam - ONE
    columns = [
        (lam, lam, lam, lam_m),  # R(e1 (x) e1)
        (one_m, -lam, one_m, one_m),  # R(e1 (x) e2)
        (one_m, one_m, -lam, one_m),  # R(e2 (x) e1)
        (lam_m, lam, lam, lam),  # R(e2 (x) e2)
    ]
    return TwistingMapR(2, 2, Matrix.from_columns(columns))


def _r1_map(l1, a1, a2, a3, a4, a5):
    half = ONE / (2 * l1)
    col0 = (ZERO, ZERO, ZERO, ZERO)
    col1 = (a1, a2, -(a2 + a1 / l1), ZERO)
    col2 = (
        a3,
        -half * (a1 + a3 - a4 + a5 + 2 * a2 * l1),
        half * (a1 - a3 - a4 + a5 + 2 * a2 * l1),
        ZERO,
    )
    col3 = (
        l1 / 2 * (a1 + a3 - a4 - a5),
        a4,
        a5,
        -half * (a1 + a3 + a4 + a5),
    )
    return TwistingMapR(2, 2, Matrix.from_columns([col0, col1, col2, col3]))


def _r2_map(l1, a1, a2, a3, a4, a5):
    half = ONE / (2 * l1)
    col0 = (ONE, ZERO, ZERO, ZERO)
    col1 = (a1, a2, ONE - a2 - a1 / l1, ZERO)
    col2 = (
        a3,
        -half * (a1 + a3 - a4 + a5 + 2 * a2 * l1 - 2 * l1),
        half * (a1 - a3 - a4 + a5 + 2 * a2 * l1),
        ZERO,
    )
    col3 = (
        l1 / 2 * (a1 + a3 - a4 - a5),
        a4,
        a5,
        -half * (a1 + a3 + a4 + a5 - 2 * l1),
    )
    return TwistingMapR(2, 2, Matrix.from_columns([col0, col1, col2, col3]))


def _dk2_map(l1, a1, a2):
    col0 = (ZERO, ZERO, ZERO, ZERO)  # R(f1 (x) e1)
    col1 = (a1, a2, -a1 / l1, -a2 / l1)  # R(f1 (x) e2)
    col2 = (ZERO, ZERO, ZERO, ZERO)  # R(f2 (x) e1)
    col3 = (a1 * l1, a2 * l1, -a1, -a2)  # R(f2 (x) e2)
    return TwistingMapR(2, 2, Matrix.from_columns([col0, col1, col2, col3]))


def _check_l2_zero(key):
    l2 = key.params.get("l2", ZERO)
    if l2 != 0:
        raise ParamConstraintViolation("this family is defined for l2 = 0")


def sweedler_h4():
    """Sweedler's 4-dimensional Hopf algebra as a classical bialgebra.

    Basis order (1, g, x, gx) with g^2 = 1, x^2 = 0, x g = -g x,
    Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x.
    """
    d = 4
    one, g, x, gx = 0, 1, 2, 3
    mul = [[[ZERO] * d for _ in range(d)] for _ in range(d)]

    def put(i, j, k, v=ONE):
        mul[i][j][k] = as_scalar(v)

    for i in range(d):
        put(one, i, i)
        if i != one:
            put(i, one, i)
    put(g, g, one)
    put(g, x, gx)
    put(g, gx, x)
    put(x, g, gx, -ONE)
    put(gx, g, x, -ONE)
    # x x = x gx = gx x = gx gx = 0
    comul = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
    comul[one][one][one] = ONE
    comul[g][g][g] = ONE
    comul[x][x][one] = ONE
    comul[x][g][x] = ONE
    comul[gx][gx][g] = ONE
    comul[gx][one][gx] = ONE
    algebra = hom_algebra(d, tuple(tuple(tuple(r) for r in p) for p in mul))
    coalgebra = hom_coalgebra(d, tuple(tuple(tuple(r) for r in p) for p in comul))
    return HomBialgebra(algebra, coalgebra)


def group_algebra(n):
    """Group algebra of the cyclic group C_n with the group-like coproduct."""
    n = int(n)
    if n not in (2, 3):
        raise ParamConstraintViolation("group_algebra supports n in {2, 3}")
    mul = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    comul = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        comul[i][i][i] = ONE
        for j in range(n):
            mul[i][j][(i + j) % n] = ONE
    algebra = hom_algebra(n, tuple(tuple(tuple(r) for r in p) for p in mul))
    coalgebra = hom_coalgebra(n, tuple(tuple(tuple(r) for r in p) for p in comul))
    return HomBialgebra(algebra, coalgebra)


def dual_numbers():
    """k[y]/(y^2) with basis (1, y); the canonical H4 module algebra carrier."""
    mul = (
        ((ONE, ZERO), (ZERO, ONE)),
        ((ZERO, ONE), (ZERO, ZERO)),
    )
    return hom_algebra(2, mul)


def h4_left_action():
    """g acts as the parity automorphism, x as the sigma-derivation with x.y = 1."""
    z = ZERO
    table = (
        ((ONE, z), (z, ONE)),  # 1 . (1, y)
        ((ONE, z), (z, -ONE)),  # g
        ((z, z), (ONE, z)),  # x: x.1 = 0, x.y = 1
        ((z, z), (ONE, z)),  # gx: gx.1 = 0, gx.y = g.(x.y) = 1
    )
    return ActionTable(LEFT, 4, 2, table, Matrix.identity(2))


def h4_right_action():
    """Right-module-algebra mirror on k[z]/(z^2): z.g = -z, z.x = 1, z.gx = -1."""
    z = ZERO
    table = (
        ((ONE, z), (z, ONE)),  # . 1
        ((ONE, z), (z, -ONE)),  # . g
        ((z, z), (ONE, z)),  # . x
        ((z, z), (-ONE, z)),  # . gx, via c.(gx) = (c.g).x
    )
    return ActionTable(RIGHT, 4, 2, table, Matrix.identity(2))


def h4_twists(c):
    """The intertwining-balanced endomorphism pair alpha_H: x -> c x, alpha_A: y -> y/c."""
    c = as_scalar(c)
    if not c:
        raise ParamConstraintViolation("twist scale must be nonzero")
    alpha_h = Matrix(
        (
            (ONE, ZERO, ZERO, ZERO),
            (ZERO, ONE, ZERO, ZERO),
            (ZERO, ZERO, c, ZERO),
            (ZERO, ZERO, ZERO, c),
        )
    )
    alpha_a = Matrix(((ONE, ZERO), (ZERO, ONE / c)))
    return alpha_h, alpha_a


def c2_trivial_yd():
    """k[C2] with the trivial action and trivial coaction on k[y]/(y^2)."""
    bi = group_algebra(2)
    module = dual_numbers()
    ident = Matrix.identity(2)
    act = ActionTable(
        LEFT, 2, 2, (((ONE, ZERO), (ZERO, ONE)), ((ONE, ZERO), (ZERO, ONE))), ident
    )
    co_table = []
    for m in range(2):
        plane = [[ZERO] * 2 for _ in range(2)]
        plane[0][m] = ONE  # e (x) e_m
        co_table.append(tuple(tuple(r) for r in plane))
    co = CoactionTable(LEFT, 2, 2, tuple(co_table), ident)
    return bi, module, act, co


def build(key):
    """Construct the named bundle; raises ParamConstraintViolation on bad parameters."""
    name = key.name
    if name == "ttp_k2_lambda":
        (lam,) = _require(key, "lam")
        a = k2_algebra()
        return {
            "provenance": "paper",
            "A": a,
            "B": k2_algebra(),
            "R": _ttp_k2_map(lam),
            "expected_mul": _ttp_k2_table(lam),
        }
    if name == "homalg_2dim":
        a, l1, l2 = _require(key, "a", "l1", "l2")
        return {"provenance": "paper", "D": _two_dim_algebra(a, l1, l2)}
    if name == "homtwistor_2dim":
        a, l1, l2 = _require(key, "a", "l1", "l2")
        return {
            "provenance": "paper",
            "D": _two_dim_algebra(a, l1, l2),
            "T": _two_dim_twistor(l1, l2),
            "expected_mul": _two_dim_deformed_mul(a, l1, l2),
        }
    if name in ("homtwist_R1", "homtwist_R2"):
        a, l1, a1, a2, a3, a4, a5 = _require(key, "a", "l1", "a1", "a2", "a3", "a4", "a5")
        _check_l2_zero(key)
        if not l1:
            raise ParamConstraintViolation("l1 must be nonzero")
        d = _two_dim_algebra(a, l1, ZERO)
        rmap = (
            _r1_map(l1, a1, a2, a3, a4, a5)
            if name == "homtwist_R1"
            else _r2_map(l1, a1, a2, a3, a4, a5)
        )
        return {"provenance": "paper", "A": d, "B": d, "R": rmap}
    if name == "homtwist_Dk2":
        a, l1, a1, a2 = _require(key, "a", "l1", "a1", "a2")
        _check_l2_zero(key)
        if not l1:
            raise ParamConstraintViolation("l1 must be nonzero")
        return {
            "provenance": "paper",
            "A": _two_dim_algebra(a, l1, ZERO),
            "B": k2_algebra(),
            "R": _dk2_map(l1, a1, a2),
        }
    if name == "clifford":
        (q,) = _require(key, "q")
        a = yau_twist_algebra(k2_algebra(), swap_matrix())
        params = CliffordParams(q, swap_matrix())
        abar, rmap = clifford(a, params)
        return {
            "provenance": "paper",
            "A": a,
            "params": params,
            "Abar": abar,
            "R": rmap,
        }
    if name == "sweedler_h4":
        _require(key)
        return {"provenance": "auxiliary", "H": sweedler_h4()}
    if name == "group_algebra":
        (n,) = _require(key, "n")
        return {"provenance": "auxiliary", "H": group_algebra(n)}
    if name == "uq_setup":
        q, lam, xi, l = _require(key, "q", "lam", "xi", "l")
        if l != int(l):
            raise ParamConstraintViolation("l must be an integer")
        return {"provenance": "paper", "params": UqParams(q, lam, xi, int(l))}
    if name == "alpha_ttp_flip":
        _require(key)
        alpha = swap_matrix()
        rmat = mat_mul(kron(alpha, alpha), flip(2, 2).matrix)
        return {
            "provenance": "paper",
            "A": k2_algebra(),
            "B": k2_algebra(),
            "alphaA": alpha,
            "alphaB": alpha,
            "R": TwistingMapR(2, 2, rmat),
        }
    if name == "alpha_ttp_clifford":
        (q,) = _require(key, "q")
        sigma = swap_matrix()
        cols = []
        for b in range(2):
            for a_idx in range(2):
                col = [ZERO] * 4
                if b == 0:
                    for p, s in enumerate(sigma.col(a_idx)):
                        if s:
                            col[p * 2] = s  # sigma(a) (x) 1
                else:
                    col[a_idx * 2 + 1] = ONE  # a (x) v
                cols.append(col)
        return {
            "provenance": "paper",
            "A": k2_algebra(),
            "B": clifford_algebra(q),
            "alphaA": sigma,
            "alphaB": Matrix.identity(2),
            "sigma": sigma,
            "q": as_scalar(q),
            "R": TwistingMapR(2, 2, Matrix.from_columns(cols)),
        }
    raise ParamConstraintViolation(f"unknown gallery name {name!r}")
