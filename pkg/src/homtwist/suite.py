"""The one-command acceptance matrix: every numbered criterion as a function.

Each criterion returns (passed, detail); the runner prints one PASS/FAIL line
per criterion with wall time.  A shared recorder collects every object built
by a constructor during the run and criterion 9 replays the matching
brute-force scanner over all of them.
"""

import json
import random
import time

from . import manifest as manifest_mod
from .algebra import (
    check_associative,
    check_hom_algebra,
    hom_algebra,
    same_structure,
    tensor_algebra,
    yau_twist_algebra,
)
from .exact import Matrix, ONE, Q, ZERO, basis_vec, kron
from .gallery import (
    GalleryKey,
    build,
    c2_trivial_yd,
    dual_numbers,
    h4_left_action,
    h4_right_action,
    h4_twists,
    k2_algebra,
    sweedler_h4,
    swap_matrix,
)
from .modsmash import (
    LEFT,
    RIGHT,
    check_bicomodule,
    check_comodule,
    check_comodule_hom_algebra,
    check_module_hom_algebra,
    check_smash_twist_compat,
    check_yetter_drinfeld,
    coaction_lambda_right_smash,
    coaction_lambda_smash,
    coaction_rho_smash,
    smash_left,
    smash_right,
    smash_two_sided,
    yau_twist_module_algebra,
)
from .twisted import (
    TwistingMapR,
    alphaAB_ttp,
    check_braid,
    check_hom_twisting_map,
    check_twisting_map,
    clifford_algebra,
    flip,
    hom_ttp,
    iterated_ttp,
    ttp,
)
from .twistor import (
    check_alpha_pseudotwistor,
    check_hom_twistor,
    deform,
    deform_with_alpha,
    yau_operator,
)
from .uqsl2 import (
    E,
    F,
    GENERATORS,
    K,
    KINV,
    MON_E,
    MON_F,
    MON_K,
    MON_KINV,
    QPlaneElement,
    UqElement,
    UqParams,
    check_uq_module_hom_algebra,
    pbw_normalize,
    rho_generator_formula,
    rho_l,
    uq_alpha,
    uq_coproduct,
    uq_mul,
    verify_smash_closed_forms,
)


class Recorder:
    """Constructed objects awaiting re-validation by criterion 9."""

    def __init__(self):
        self.entries = []

    def record(self, label, thunk):
        self.entries.append((label, thunk))


def _rand_rat(rng):
    return Q(rng.randint(-6, 6), rng.randint(1, 4))


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------


def criterion_1_ttp_table(rec, bounds):
    """The k2 (x) k2 twisted multiplication table for lambda in {0, 1, 2, -1}."""
    checked = 0
    for lam in (0, 1, 2, -1):
        bundle = build(GalleryKey("ttp_k2_lambda", {"lam": lam}))
        a, b, rmap = bundle["A"], bundle["B"], bundle["R"]
        if not check_twisting_map(a, b, rmap).passed:
            return False, f"R_lambda fails the twisting axioms at lambda={lam}"
        product = ttp(a, b, rmap)
        rec.record(f"ttp(k2,k2,R_{lam})", lambda p=product: check_associative(p))
        if product.mul != bundle["expected_mul"]:
            return False, f"table mismatch at lambda={lam}"
        checked += 16
    return True, f"{checked} table entries match at lambda in {{0, 1, 2, -1}}"


def criterion_2_two_dim_algebra(rec, bounds):
    """The 2-dimensional Hom-algebra, its twistor and the deformed table."""
    cases = ((1, 1, 2), (2, 3, -1), (1, 2, Q(1, 2)))
    for a, l1, l2 in cases:
        bundle = build(GalleryKey("homtwistor_2dim", {"a": a, "l1": l1, "l2": l2}))
        d, t = bundle["D"], bundle["T"]
        if not check_hom_algebra(d).passed:
            return False, f"check_hom_algebra fails at {(a, l1, l2)}"
        if check_associative(d).passed:
            return False, f"unexpectedly associative at {(a, l1, l2)}"
        if not check_hom_twistor(d, t).passed:
            return False, f"check_hom_twistor fails at {(a, l1, l2)}"
        deformed = deform(d, t, verified="hom_twistor")
        rec.record(f"deform(D,{(a, l1, l2)})", lambda p=deformed: check_hom_algebra(p))
        if deformed.mul != bundle["expected_mul"]:
            return False, f"deformed table mismatch at {(a, l1, l2)}"
        if deformed.mul[0][1] == deformed.mul[1][0]:
            return False, f"deformed multiplication is commutative at {(a, l1, l2)}"
        assoc_case = build(GalleryKey("homalg_2dim", {"a": a, "l1": l1, "l2": 0}))["D"]
        if not check_associative(assoc_case).passed:
            return False, f"lambda2=0 case not associative at {(a, l1)}"
    return True, f"{len(cases)} parameter tuples verified, plus the lambda2=0 degenerations"


def criterion_3_hom_twisting_families(rec, bounds):
    """R1/R2 families and the D-k2 family pass the Hom-twisting axioms."""
    rng = random.Random(20240229)
    witness = None
    for name in ("homtwist_R1", "homtwist_R2"):
        for l1 in (1, 3):
            for sample in range(10):
                params = {"a": 1, "l1": l1}
                params.update({f"a{i}": _rand_rat(rng) for i in range(1, 6)})
                bundle = build(GalleryKey(name, params))
                if not check_hom_twisting_map(bundle["A"], bundle["B"], bundle["R"]).passed:
                    return False, f"{name} fails Hom-twisting at l1={l1} sample {sample}"
                if name == "homtwist_R1" and witness is None:
                    plain = hom_algebra(2, bundle["A"].mul)
                    rep = check_twisting_map(plain, plain, bundle["R"])
                    if not rep.passed:
                        witness = (params, rep.failures[0])
    for sample in range(10):
        params = {"a": 1, "l1": 2, "a1": _rand_rat(rng), "a2": _rand_rat(rng)}
        bundle = build(GalleryKey("homtwist_Dk2", params))
        if not check_hom_twisting_map(bundle["A"], bundle["B"], bundle["R"]).passed:
            return False, f"D-k2 family fails Hom-twisting at sample {sample}"
    product = hom_ttp(bundle["A"], bundle["B"], bundle["R"])
    rec.record("hom_ttp(D,k2,R)", lambda p=product: check_hom_algebra(p))
    if witness is None:
        return False, "no sampled R1 tuple fails the classical twisting axioms"
    params, failure = witness
    shown = {k: str(v) for k, v in params.items()}
    return True, f"50 tuples pass; R1 classical-axiom witness at {shown}: {failure}"


def criterion_4_clifford(rec, bounds):
    """Clifford process on yau_twist(k2, swap) for q in {1, 2, -3}."""
    for q in (1, 2, -3):
        bundle = build(GalleryKey("clifford", {"q": q}))
        a, abar, rmap, params = bundle["A"], bundle["Abar"], bundle["R"], bundle["params"]
        if q == 1:
            rec.record("yau_twist(k2, swap)", lambda p=a: check_hom_algebra(p))
        if not check_hom_twisting_map(a, clifford_algebra(q), rmap).passed:
            return False, f"Clifford R fails Hom-twisting at q={q}"
        if not check_hom_algebra(abar).passed:
            return False, f"Abar fails check_hom_algebra at q={q}"
        rec.record(f"clifford(q={q})", lambda p=abar: check_hom_algebra(p))
        sigma = params.sigma
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    for l in range(2):
                        u = [ZERO] * 4
                        u[i * 2] = u[i * 2] + ONE
                        u[j * 2 + 1] = u[j * 2 + 1] + ONE
                        v = [ZERO] * 4
                        v[k * 2] = v[k * 2] + ONE
                        v[l * 2 + 1] = v[l * 2 + 1] + ONE
                        got = abar.product(u, v)
                        ac = a.product(basis_vec(2, i), basis_vec(2, k))
                        bsd = a.product(basis_vec(2, j), list(sigma.col(l)))
                        ad = a.product(basis_vec(2, i), basis_vec(2, l))
                        bsc = a.product(basis_vec(2, j), list(sigma.col(k)))
                        expected = [ZERO] * 4
                        for p in range(2):
                            expected[p * 2] = ac[p] + params.q * bsd[p]
                            expected[p * 2 + 1] = ad[p] + bsc[p]
                        if got != expected:
                            return False, f"closed form mismatch at q={q}, basis {(i, j, k, l)}"
    return True, "3 q-values verified against the closed doubling formula (16 quadruples each)"


def criterion_5_iterated(rec, bounds):
    """Braid condition and coinciding bracketings for the smash triple and flips."""
    h4 = sweedler_h4()
    a = dual_numbers()
    c = dual_numbers()
    r1, _ = smash_left(a, h4, h4_left_action())
    r2, _ = smash_right(h4, c, h4_right_action())
    r3 = flip(2, 2)
    if not check_braid(r1, r2, r3).passed:
        return False, "smash-derived triple fails the braid condition"
    product, p1, p2 = iterated_ttp(a, h4.algebra, c, r1, r2, r3)
    rec.record("iterated_ttp(smash triple)", lambda p=product: check_hom_algebra(p))
    ab = hom_ttp(a, h4.algebra, r1)
    bc = hom_ttp(h4.algebra, c, r2)
    rec.record("iterated P1", lambda: check_hom_twisting_map(ab, c, p1))
    rec.record("iterated P2", lambda: check_hom_twisting_map(a, bc, p2))
    two_sided = smash_two_sided(a, h4, c, h4_left_action(), h4_right_action())
    if product.mul != two_sided.mul:
        return False, "iterated product differs from the two-sided smash"
    d = build(GalleryKey("homalg_2dim", {"a": 1, "l1": 1, "l2": 2}))["D"]
    k2 = k2_algebra()
    flips = (flip(2, 2), flip(2, 2), flip(2, 2))
    product2, _, _ = iterated_ttp(d, k2, k2, *flips)
    rec.record("iterated_ttp(all flips)", lambda p=product2: check_hom_algebra(p))
    if product2.mul != tensor_algebra(tensor_algebra(d, k2), k2).mul:
        return False, "all-flip iterated product is not the plain triple tensor product"
    return True, "smash triple braid + both bracketings coincide; all-flip triple reduces to A(x)B(x)C"


def criterion_6_smash_suite(rec, bounds):
    """Left/right smashes, twist compatibility, comodule structures, YD instance."""
    h4 = sweedler_h4()
    a = dual_numbers()
    act_l = h4_left_action()
    act_r = h4_right_action()
    alpha_h, alpha_a = h4_twists(2)
    variants = [("identity", h4, a, act_l, h4, a, act_r)]
    ht, at, act_lt = yau_twist_module_algebra(LEFT, h4, a, act_l, alpha_h, alpha_a)
    ht2, ct, act_rt = yau_twist_module_algebra(RIGHT, h4, a, act_r, alpha_h, alpha_a)
    rec.record("yau_twist_bialgebra(H4)", lambda: check_hom_bialgebra(ht))
    rec.record("yau_twist_module_algebra(left)", lambda: check_module_hom_algebra(LEFT, ht, at, act_lt))
    rec.record("yau_twist_module_algebra(right)", lambda: check_module_hom_algebra(RIGHT, ht2, ct, act_rt))
    variants.append(("twisted", ht, at, act_lt, ht2, ct, act_rt))
    for tag, bh, alg_a, al, bh2, alg_c, ar in variants:
        rmap, smash = smash_left(alg_a, bh, al)
        if not check_hom_twisting_map(alg_a, bh.algebra, rmap).passed:
            return False, f"left smash R fails Hom-twisting ({tag})"
        if not check_hom_algebra(smash).passed:
            return False, f"left smash algebra fails ({tag})"
        rec.record(f"smash_left({tag})", lambda p=smash: check_hom_algebra(p))
        rho = coaction_rho_smash(alg_a, bh, al)
        if not check_comodule(RIGHT, bh.coalgebra, rho).passed:
            return False, f"rho comodule axioms fail ({tag})"
        if not check_comodule_hom_algebra(RIGHT, bh, smash, rho).passed:
            return False, f"rho multiplicativity fails ({tag})"
        rmap2, smash2 = smash_right(bh2, alg_c, ar)
        if not check_hom_twisting_map(bh2.algebra, alg_c, rmap2).passed:
            return False, f"right smash R fails Hom-twisting ({tag})"
        if not check_hom_algebra(smash2).passed:
            return False, f"right smash algebra fails ({tag})"
        rec.record(f"smash_right({tag})", lambda p=smash2: check_hom_algebra(p))
        lam2 = coaction_lambda_right_smash(bh2, alg_c, ar)
        if not check_comodule(LEFT, bh2.coalgebra, lam2).passed:
            return False, f"right-smash lambda comodule axioms fail ({tag})"
        if not check_comodule_hom_algebra(LEFT, bh2, smash2, lam2).passed:
            return False, f"right-smash lambda multiplicativity fails ({tag})"
    if not check_smash_twist_compat(LEFT, h4, a, act_l, alpha_h, alpha_a).passed:
        return False, "left smash twist compatibility fails"
    if not check_smash_twist_compat(RIGHT, h4, a, act_r, alpha_h, alpha_a).passed:
        return False, "right smash twist compatibility fails"
    bi, mod, act, co = c2_trivial_yd()
    if not check_yetter_drinfeld(bi, act, co).passed:
        return False, "trivial-coaction k[C2] instance fails Yetter-Drinfeld"
    lam = coaction_lambda_smash(mod, bi, act, co)
    rho = coaction_rho_smash(mod, bi, act)
    _, smash3 = smash_left(mod, bi, act)
    if not check_comodule_hom_algebra(LEFT, bi, smash3, lam).passed:
        return False, "lambda on the YD smash is not multiplicative"
    if not check_bicomodule(bi.coalgebra, lam, rho).passed:
        return False, "bicomodule interchange fails on the YD smash"
    return True, "both alphas variants pass all smash, coaction and YD checks"


def criterion_7_alpha_pseudotwistor(rec, bounds):
    """Yau operator triple, alphaAB flip lift and the Clifford alpha variant."""
    d0 = build(GalleryKey("homalg_2dim", {"a": 1, "l1": 2, "l2": 0}))["D"]
    cases = [(hom_algebra(2, d0.mul), d0.alpha, "Example algebra, l2=0")]
    cases.append((k2_algebra(), swap_matrix(), "k2 with swap"))
    for algebra_, alpha, tag in cases:
        op, c1, c2 = yau_operator(alpha)
        if not check_alpha_pseudotwistor(algebra_, alpha, op, c1, c2).passed:
            return False, f"yau_operator rejected on {tag}"
        deformed = deform_with_alpha(algebra_, alpha, op, verified="alpha_pseudotwistor")
        rec.record(f"deform_with_alpha({tag})", lambda p=deformed: check_hom_algebra(p))
        if not same_structure(deformed, yau_twist_algebra(algebra_, alpha)):
            return False, f"A^T_alpha differs from A_alpha on {tag}"
    bundle = build(GalleryKey("alpha_ttp_flip", {}))
    alg, op, c1, c2 = alphaAB_ttp(
        bundle["A"], bundle["B"], bundle["alphaA"], bundle["alphaB"], bundle["R"]
    )
    rec.record("alphaAB_ttp(flip lift)", lambda p=alg: check_hom_algebra(p))
    base = tensor_algebra(bundle["A"], bundle["B"])
    twist = kron(bundle["alphaA"], bundle["alphaB"])
    if not check_alpha_pseudotwistor(base, twist, op, c1, c2).passed:
        return False, "flip-lift operator triple rejected"
    if not same_structure(alg, yau_twist_algebra(base, twist)):
        return False, "flip lift does not equal the Yau twist of the tensor product"
    q = Q(2)
    bundle = build(GalleryKey("alpha_ttp_clifford", {"q": q}))
    alg, op, c1, c2 = alphaAB_ttp(
        bundle["A"], bundle["B"], bundle["alphaA"], bundle["alphaB"], bundle["R"]
    )
    rec.record("alphaAB_ttp(clifford)", lambda p=alg: check_hom_algebra(p))
    base = tensor_algebra(bundle["A"], bundle["B"])
    if not check_alpha_pseudotwistor(
        base, kron(bundle["alphaA"], bundle["alphaB"]), op, c1, c2
    ).passed:
        return False, "Clifford alpha operator triple rejected"
    sigma = bundle["sigma"]
    columns = []
    for b in range(2):
        for a_idx in range(2):
            col = [ZERO] * 4
            if b == 0:
                col[a_idx * 2] = ONE
            else:
                for p, s in enumerate(sigma.col(a_idx)):
                    if s:
                        col[p * 2 + 1] = s
            columns.append(col)
    classical_r = TwistingMapR(2, 2, Matrix.from_columns(columns))
    abar = ttp(bundle["A"], clifford_algebra(q), classical_r)
    rec.record("classical clifford ttp", lambda p=abar: check_associative(p))
    sigma_bar = kron(sigma, Matrix.identity(2))
    if not same_structure(alg, yau_twist_algebra(abar, sigma_bar)):
        return False, "Clifford alpha variant does not equal (Abar)_sigmabar"
    return True, "Yau operator, flip lift and Clifford alpha variant all coincide as stated"


def criterion_8_quantum(rec, bounds):
    """PBW relations, structural invariants, the rho oracle and the closed formulas."""
    bound_mod = 3 if bounds is None else min(3, bounds)
    bound_32 = 2 if bounds is None else min(2, bounds)
    bound_rho = 4 if bounds is None else min(4, bounds + 2)
    word_len = 6 if bounds is None else min(6, bounds + 3)
    rng = random.Random(987654)

    for q in (Q(2), Q(3)):
        got = pbw_normalize([K, E], q)
        if got != UqElement({(0, 1, 1): q * q}):
            return False, f"KE relation broken at q={q}"
        got = pbw_normalize([K, F], q)
        if got != UqElement({(1, 0, 1): 1 / (q * q)}):
            return False, f"KF relation broken at q={q}"
        inv = ONE / (q - 1 / q)
        got = pbw_normalize([E, F], q)
        if got != UqElement({(1, 1, 0): ONE, (0, 0, 1): inv, (0, 0, -1): -inv}):
            return False, f"EF relation broken at q={q}"
        if pbw_normalize([K, KINV], q) != UqElement.unit():
            return False, f"K Kinv relation broken at q={q}"

    for q, lam in ((Q(2), Q(3)), (Q(3), Q(1, 2))):
        words = [()]
        all_words = []
        for _ in range(word_len):
            words = [w + (g,) for w in words for g in GENERATORS]
            all_words.extend(words)
        for w in all_words:
            if pbw_normalize(w, q, "leftmost") != pbw_normalize(w, q, "rightmost"):
                return False, f"confluence broken on {w} at q={q}"
        monos = [
            (a, b, c) for a in range(3) for b in range(3) for c in range(-2, 3)
        ]
        for _ in range(30):
            u, v, w = (UqElement.monomial(rng.choice(monos)) for _ in range(3))
            if uq_mul(uq_mul(u, v, q), w, q) != uq_mul(u, uq_mul(v, w, q), q):
                return False, f"associativity broken at q={q}"
        small = [m for m in monos if m[0] + m[1] + abs(m[2]) <= 3]
        for m1 in small:
            u = UqElement.monomial(m1)
            au = uq_alpha(u, 1, lam)
            if uq_coproduct(au, q) != _tensor_alpha(uq_coproduct(u, q), lam):
                return False, f"alpha is not a coalgebra map on {m1}"
            for m2 in small:
                v = UqElement.monomial(m2)
                lhs = uq_coproduct(uq_mul(u, v, q), q)
                rhs = uq_coproduct(u, q).mul(uq_coproduct(v, q), q)
                if lhs != rhs:
                    return False, f"Delta not multiplicative on {m1}, {m2}"
                if uq_alpha(uq_mul(u, v, q), 1, lam) != uq_mul(au, uq_alpha(v, 1, lam), q):
                    return False, f"alpha not multiplicative on {m1}, {m2}"

    gen_map = ((E, MON_E), (F, MON_F), (K, MON_K), (KINV, MON_KINV))
    for l in (0, 1, 2):
        params = UqParams(2, 3, 5, l)
        for gen, mon in gen_map:
            for m in range(bound_rho + 1):
                for n in range(bound_rho + 1):
                    got = rho_l(UqElement.monomial(mon), QPlaneElement.monomial((m, n)), params)
                    if got != rho_generator_formula(gen, m, n, params):
                        return False, f"rho oracle mismatch at l={l}, {gen}, ({m}, {n})"

    for tup in ((2, 3, 5), (3, Q(1, 2), 2)):
        for l in (0, 1, 2):
            params = UqParams(tup[0], tup[1], tup[2], l)
            if not check_uq_module_hom_algebra(params, bound_mod).passed:
                return False, f"module Hom-algebra check fails at {tup}, l={l}"
        params = UqParams(tup[0], tup[1], tup[2], 0)
        if not verify_smash_closed_forms(params, bound_32).passed:
            return False, f"closed smash formulas fail at {tup}"
    return True, (
        f"relations, confluence (words <= {word_len}), invariants, rho oracle "
        f"(degrees <= {bound_rho}), module check (bound {bound_mod}) and closed "
        f"formulas (bounds {bound_32}) at two parameter tuples"
    )


def _tensor_alpha(t, lam):
    from .uqsl2 import UqTensor

    out = UqTensor({})
    for (m1, m2), c in t.terms.items():
        scale = lam ** ((m1[1] - m1[0]) + (m2[1] - m2[0]))
        out.add_term((m1, m2), c * scale)
    return out


def criterion_9_closure(rec, bounds):
    """Re-validate every recorded constructor output with its axiom scanner."""
    failed = []
    for label, thunk in rec.entries:
        report = thunk()
        if not report.passed:
            failed.append(label)
    if failed:
        return False, f"closure failures: {failed}"
    return True, f"{len(rec.entries)} constructed objects re-validated, 100% pass"


GOLDEN_MANIFEST = {
    "objects": {
        "D": {
            "kind": "hom_algebra",
            "dim": 2,
            "mul": [[[1, 0], [1, 2]], [[1, 2], ["-3", "-4"]]],
            "alpha": [[1, 1], [0, 2]],
        },
        "C2": {
            "kind": "hom_coalgebra",
            "dim": 2,
            "comul": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]],
            "alpha": [[1, 0], [0, 1]],
        },
        "H": {
            "kind": "hom_bialgebra",
            "dim": 2,
            "mul": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
            "comul": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]],
            "alpha": [[1, 0], [0, 1]],
        },
        "idmap": {
            "kind": "linear_map",
            "source_dim": 2,
            "target_dim": 2,
            "matrix": [[1, 0], [0, 1]],
        },
        "T": {
            "kind": "operator2",
            "dim": 2,
            "matrix": [
                [1, "-1", 0, 0],
                [0, 0, 0, 0],
                [0, 0, 1, "-1"],
                [0, 0, 0, 0],
            ],
        },
        "T3": {
            "kind": "operator3",
            "dim": 2,
            "matrix": [[1 if i == j else 0 for j in range(8)] for i in range(8)],
        },
        "Rflip": {
            "kind": "twisting_map",
            "dim_a": 2,
            "dim_b": 2,
            "matrix": [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
        },
        "act": {
            "kind": "action",
            "side": "left",
            "acting_dim": 2,
            "module_dim": 2,
            "table": [[[1, 0], [0, 1]], [[1, 0], [0, 1]]],
            "alpha_m": [[1, 0], [0, 1]],
        },
        "co": {
            "kind": "coaction",
            "side": "left",
            "coalgebra_dim": 2,
            "module_dim": 2,
            "table": [[[1, 0], [0, 0]], [[0, 1], [0, 0]]],
            "alpha_m": [[1, 0], [0, 1]],
        },
        "g": {
            "kind": "gallery",
            "name": "homtwistor_2dim",
            "params": {"a": "1", "l1": "1", "l2": "2"},
        },
    },
    "tasks": [
        {"op": "check_hom_algebra", "args": ["D"], "expect": "pass"},
        {"op": "check_associative", "args": ["D"], "expect": "fail"},
        {"op": "check_hom_coalgebra", "args": ["C2"], "expect": "pass"},
        {"op": "check_hom_bialgebra", "args": ["H"], "expect": "pass"},
        {"op": "check_algebra_morphism", "args": ["idmap", "D", "D"], "expect": "pass"},
        {"op": "check_twistor", "args": ["H", "T"], "expect": "pass"},
        {"op": "check_hom_twistor", "args": ["g.D", "g.T"], "expect": "pass"},
        {"op": "lift_13", "args": ["g.T"], "as": "L", "expect": "pass"},
        {"op": "check_hom_pseudotwistor", "args": ["g.D", "g.T", "L", "L"], "expect": "pass"},
        {"op": "check_hom_pseudotwistor", "args": ["g.D", "g.T", "T3", "T3"], "expect": "fail"},
        {"op": "check_twisting_map", "args": ["H", "H", "Rflip"], "expect": "pass"},
        {"op": "check_module", "args": ["H", "act"], "expect": "pass"},
        {"op": "check_comodule", "args": ["C2", "co"], "expect": "pass"},
        {"op": "ttp", "args": ["H", "H", "Rflip"], "as": "P", "expect": "pass"},
        {"op": "check_associative", "args": ["P"], "expect": "pass"},
        {"op": "deform", "args": ["g.D", "g.T"], "as": "DT", "expect": "pass"},
        {"op": "check_hom_algebra", "args": ["DT"], "expect": "pass"},
    ],
}


def criterion_10_cli(rec, bounds):
    """Manifest round-trip and the three CLI exit paths."""
    text = json.dumps(GOLDEN_MANIFEST)
    parsed = manifest_mod.parse_manifest(text)
    if manifest_mod.parse_manifest(manifest_mod.serialize_manifest(parsed)) != parsed:
        return False, "parse/serialize round-trip is not stable"
    code, _report = manifest_mod.run(parsed)
    if code != manifest_mod.EXIT_OK:
        return False, f"golden manifest exited {code}, expected 0"
    broken = text[: len(text) // 2]
    try:
        manifest_mod.parse_manifest(broken)
        return False, "truncated manifest unexpectedly parsed"
    except manifest_mod.ManifestSyntaxError as exc:
        if exc.line < 1 or exc.col < 1:
            return False, "syntax error lacks line/column"
    failing = json.loads(text)
    failing["tasks"] = [{"op": "check_associative", "args": ["D"], "expect": "pass"}]
    code, _report = manifest_mod.run(manifest_mod.parse_manifest(json.dumps(failing)))
    if code != manifest_mod.EXIT_EXPECTATION:
        return False, f"expected-pass-but-failing task exited {code}, expected 1"
    return True, "golden manifest exit 0, syntax error carries line/column, expectation failure exit 1"


CRITERIA = (
    ("1-k2-ttp-table", criterion_1_ttp_table),
    ("2-two-dim-hom-algebra", criterion_2_two_dim_algebra),
    ("3-hom-twisting-families", criterion_3_hom_twisting_families),
    ("4-clifford", criterion_4_clifford),
    ("5-iterated-products", criterion_5_iterated),
    ("6-smash-suite", criterion_6_smash_suite),
    ("7-alpha-pseudotwistor", criterion_7_alpha_pseudotwistor),
    ("8-uq-quantum-suite", criterion_8_quantum),
    ("9-oracle-closure", criterion_9_closure),
    ("10-cli", criterion_10_cli),
)


def paper_suite(filter_substr=None, bounds=None, out=None):
    """Run the acceptance matrix; returns 0 iff every selected criterion passes."""
    emit = out if out is not None else print
    recorder = Recorder()
    all_passed = True
    total = 0.0
    for cid, fn in CRITERIA:
        if filter_substr and filter_substr not in cid:
            continue
        start = time.perf_counter()
        try:
            passed, detail = fn(recorder, bounds)
        except Exception as exc:  # a crash is a failure, not a missing line
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - start
        total += elapsed
        all_passed = all_passed and passed
        emit(f"{'PASS' if passed else 'FAIL'}  {cid:<26} ({elapsed:6.2f}s)  {detail}")
    emit(f"{'ALL CRITERIA PASS' if all_passed else 'SOME CRITERIA FAILED'}  (total {total:.2f}s)")
    return 0 if all_passed else 1
