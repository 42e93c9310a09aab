from typing import Callable, Dict, List, Tuple
from dataclasses import dataclass, field
import math

import numpy as np

from core import (
    Bicomplex,
    ConjugationKind,
    ModulusKind,
    Hyperbolic,
    NullConeBreakdown,
    add,
    mul,
    mul_idempotent,
    conj,
    modulus_sq,
    euclid_norm,
    euclid_norm_idempotent,
    to_idempotent,
    from_idempotent,
    project,
    inverse,
    is_null_cone,
    nth_root,
    in_D_plus,
    ONE,
    ZERO,
    I1,
    I2,
    J,
    E1,
    E2,
)
from hilbert import (
    Ket,
    ScalarProductSpec,
    ket_split,
    scalar_product,
    induced_norm,
    nondegeneracy_constant,
)
from orthonormal import (
    CoefficientList,
    gram_schmidt,
    gram_schmidt_by_components,
    orthonormality_defect,
    fourier_coefficients,
    expand,
    best_approximation,
    residual_curve,
)
from sequences import (
    BicomplexSequence,
    RieszFischerMap,
    l2_norm,
    l2_norm_from_split,
    partial_sums,
    tail_norms,
    rf_forward,
    rf_inverse,
    rf_component,
)
from .sampling import (
    SamplingParams,
    random_bicomplex,
    random_ket,
    random_space,
    random_basis,
    random_coefficients,
    random_null_cone_scalar,
    shared_basis,
)

ALL = "all"
SQRT2 = math.sqrt(2.0)
# violation reported when a qualitative property (membership, an expected error) fails outright
FAILED = 1.0


@dataclass(frozen=True)
class TrialContext:
    rng: np.random.Generator
    dim: int
    params: SamplingParams
    seed: int
    index: int


@dataclass(frozen=True)
class FixedCheck:
    """A deterministic check run once per suite, with its own tolerance key."""

    name: str
    check: Callable[[int], float]
    tolerance_key: str


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    trial: Callable[[TrialContext], float]
    fixed_checks: Tuple[FixedCheck, ...] = field(default=())


SUITES: Dict[str, Suite] = {}


def register(name: str, description: str, fixed_checks: Tuple[FixedCheck, ...] = ()):
    def decorator(trial: Callable[[TrialContext], float]) -> Callable[[TrialContext], float]:
        SUITES[name] = Suite(name, description, trial, fixed_checks)
        return trial

    return decorator


def suite_names() -> List[str]:
    return list(SUITES)


def _dist(a: Bicomplex, b: Bicomplex) -> float:
    return euclid_norm(a - b)


def _ket_euclid(ket: Ket) -> float:
    return float(np.sqrt(np.sum(np.abs(ket.z1) ** 2 + np.abs(ket.z2) ** 2)))


def _ket_dist(a: Ket, b: Ket) -> float:
    return _ket_euclid(a - b)


def _seq_dist(a: BicomplexSequence, b: BicomplexSequence) -> float:
    return _ket_dist(a.as_ket(), b.as_ket())


def _ratio(diff: float, scale: float) -> float:
    # scale-free violation; a zero scale leaves the absolute value
    return diff / scale if scale > 0 else diff


def _excess(lhs: float, rhs: float, scale: float) -> float:
    """How far lhs <= rhs fails, relative to scale (0 when it holds)."""
    return _ratio(max(0.0, lhs - rhs), scale)


def _positive(w: Bicomplex) -> bool:
    """Whether w lies in D+; a value that is not hyperbolic at all is not positive."""
    try:
        return in_D_plus(Hyperbolic.from_bicomplex(w))
    except ValueError:
        return False


# ---------------------------------------------------------------- bicomplex_core


def _identity_defects(dim: int) -> float:
    checks = [
        (mul(E1, E1), E1),
        (mul(E2, E2), E2),
        (add(E1, E2), ONE),
        (mul(E1, E2), ZERO),
        (conj(E1, ConjugationKind.DAG3), E1),
        (conj(E2, ConjugationKind.DAG3), E2),
        (mul(I1, I2), J),
        (mul(I1, J), -I2),
        (mul(I2, J), -I1),
        (mul(J, J), ONE),
        (mul(I1, I1), -ONE),
        (mul(I2, I2), -ONE),
    ]
    return max(_dist(lhs, rhs) for lhs, rhs in checks)


@register("core-identities", "idempotent and unit-product identities, exact for the dyadic constants")
def core_identities(ctx: TrialContext) -> float:
    # the constants are dyadic, so every product below is exact
    w = random_bicomplex(ctx.rng, ctx.params)
    exact = max(
        _dist(mul(w, ONE), w),
        _dist(add(w, ZERO), w),
        _dist(conj(conj(w, ConjugationKind.DAG3), ConjugationKind.DAG3), w),
    )
    return max(_identity_defects(ctx.dim), exact)


@register("conjugations", "involution, additivity and multiplicativity of the three conjugations")
def conjugations(ctx: TrialContext) -> float:
    s, t = random_bicomplex(ctx.rng, ctx.params), random_bicomplex(ctx.rng, ctx.params)
    scale = euclid_norm(s) * euclid_norm(t)
    worst = 0.0
    for kind in ConjugationKind:
        worst = max(
            worst,
            _ratio(_dist(conj(conj(s, kind), kind), s), euclid_norm(s)),
            _ratio(
                _dist(conj(s + t, kind), conj(s, kind) + conj(t, kind)),
                euclid_norm(s) + euclid_norm(t),
            ),
            _ratio(_dist(conj(mul(s, t), kind), mul(conj(s, kind), conj(t, kind))), scale),
        )
    return worst


@register("moduli", "multiplicativity of the three moduli and w * w^dag3 in D+")
def moduli(ctx: TrialContext) -> float:
    s, t = random_bicomplex(ctx.rng, ctx.params), random_bicomplex(ctx.rng, ctx.params)
    scale = (euclid_norm(s) * euclid_norm(t)) ** 2
    worst = 0.0
    for kind in ModulusKind:
        lhs = modulus_sq(mul(s, t), kind)
        rhs = mul(modulus_sq(s, kind), modulus_sq(t, kind))
        worst = max(worst, _ratio(_dist(lhs, rhs), scale))
    for w in (s, t):
        if not _positive(modulus_sq(w, ModulusKind.J)):
            worst = max(worst, FAILED)
    return worst


def _norm_witness(dim: int) -> float:
    # |e1 * e1| = 1/sqrt(2) = sqrt(2) * |e1|^2 is the equality case of the product bound
    return abs(euclid_norm(mul(E1, E1)) - SQRT2 * euclid_norm(E1) ** 2)


@register(
    "norms",
    "triangle inequality, |s t| <= sqrt(2)|s||t| and the idempotent form of |w|",
    (FixedCheck("equality witness s = t = e1", _norm_witness, "norms-witness"),),
)
def norms(ctx: TrialContext) -> float:
    s, t = random_bicomplex(ctx.rng, ctx.params), random_bicomplex(ctx.rng, ctx.params)
    ns, nt = euclid_norm(s), euclid_norm(t)
    return max(
        _excess(euclid_norm(s + t), ns + nt, ns + nt),
        _excess(euclid_norm(mul(s, t)), SQRT2 * ns * nt, ns * nt),
        _ratio(abs(euclid_norm_idempotent(s) - ns), ns),
    )


@register("projectors", "P_k ring morphisms, P1 e1 + P2 e2 = Id, and Cartesian vs idempotent products")
def projectors(ctx: TrialContext) -> float:
    s, t = random_bicomplex(ctx.rng, ctx.params), random_bicomplex(ctx.rng, ctx.params)
    ns, nt = euclid_norm(s), euclid_norm(t)
    worst = _ratio(_dist(mul(s, t), mul_idempotent(s, t)), ns * nt)
    for k in (1, 2):
        worst = max(
            worst,
            _ratio(abs(project(s + t, k) - project(s, k) - project(t, k)), ns + nt),
            _ratio(abs(project(mul(s, t), k) - project(s, k) * project(t, k)), ns * nt),
        )
    recombined = mul(Bicomplex(project(s, 1)), E1) + mul(Bicomplex(project(s, 2)), E2)
    worst = max(worst, _ratio(_dist(recombined, s), ns))
    return max(worst, _ratio(_dist(from_idempotent(to_idempotent(s)), s), ns))


@register("inverse-roots", "w * w^-1 = 1 off the null cone and nth_root(w, n)^n = w for n = 2, 3, 4")
def inverse_roots(ctx: TrialContext) -> float:
    w = random_bicomplex(ctx.rng, ctx.params)
    nw = euclid_norm(w)
    worst = 0.0
    if not is_null_cone(w):
        worst = _dist(mul(w, inverse(w)), ONE)
    for n in (2, 3, 4):
        worst = max(worst, _ratio(_dist(nth_root(w, n) ** n, w), nw))
    return worst


# ---------------------------------------------------------------- hilbert_module


@register("scalar-axioms", "scalar-product axioms 1-4, the dag3 rule and hyperbolic positivity")
def scalar_axioms(ctx: TrialContext) -> float:
    space = random_space(ctx.rng, ctx.dim, ctx.params)
    psi, phi, chi = (random_ket(ctx.rng, ctx.dim, ctx.params) for _ in range(3))
    s = random_bicomplex(ctx.rng, ctx.params)
    n_psi, n_phi, n_chi = (induced_norm(space, k) for k in (psi, phi, chi))
    ns = euclid_norm(s)
    base = scalar_product(space, psi, phi)

    # |<x, y>| <= sqrt(2) ||x|| ||y||, which sets the natural scale of every identity below
    worst = max(
        _ratio(
            _dist(scalar_product(space, psi, phi + chi), base + scalar_product(space, psi, chi)),
            n_psi * (n_phi + n_chi),
        ),
        _ratio(_dist(scalar_product(space, psi, phi.scale(s)), mul(s, base)), ns * n_psi * n_phi),
        _ratio(
            _dist(base, conj(scalar_product(space, phi, psi), ConjugationKind.DAG3)),
            n_psi * n_phi,
        ),
        _ratio(
            _dist(scalar_product(space, psi.scale(s), phi), mul(conj(s, ConjugationKind.DAG3), base)),
            ns * n_psi * n_phi,
        ),
    )

    self_product = scalar_product(space, psi, psi)
    if not _positive(self_product):
        worst = max(worst, FAILED)
    # nondegeneracy: every coefficient is bounded by c * ||psi||
    largest = max(euclid_norm(c) for c in psi.coeffs)
    bound = nondegeneracy_constant(space) * n_psi
    worst = max(worst, _excess(largest, bound, bound))
    if induced_norm(space, Ket.zeros(ctx.dim)) != 0.0:
        worst = max(worst, FAILED)
    return worst


@register("schwarz", "bicomplex Schwarz inequality |<psi, phi>| <= sqrt(2) ||psi|| ||phi||")
def schwarz(ctx: TrialContext) -> float:
    space = random_space(ctx.rng, ctx.dim, ctx.params)
    psi, phi = random_ket(ctx.rng, ctx.dim, ctx.params), random_ket(ctx.rng, ctx.dim, ctx.params)
    # half of the trials use a V_1-only ket, where the bound is closest to tight
    if ctx.rng.random() < 0.5:
        psi = ket_split(psi, 1)
    bound = SQRT2 * induced_norm(space, psi) * induced_norm(space, phi)
    return _excess(euclid_norm(scalar_product(space, psi, phi)), bound, bound)


@register("continuity", "continuity bound for <psi_n, phi_n> - <psi, phi> on perturbed kets")
def continuity(ctx: TrialContext) -> float:
    space = random_space(ctx.rng, ctx.dim, ctx.params)
    psi, phi, d_psi, d_phi = (random_ket(ctx.rng, ctx.dim, ctx.params) for _ in range(4))
    eps_psi, eps_phi = 10.0 ** -ctx.rng.uniform(0, ctx.params.perturbation_decades, size=2)
    d_psi, d_phi = d_psi * eps_psi, d_phi * eps_phi
    psi_n, phi_n = psi + d_psi, phi + d_phi

    lhs = euclid_norm(scalar_product(space, psi_n, phi_n) - scalar_product(space, psi, phi))
    n_dpsi, n_dphi = induced_norm(space, d_psi), induced_norm(space, d_phi)
    n_psi, n_phi = induced_norm(space, psi), induced_norm(space, phi)
    rhs = SQRT2 * (n_dpsi * n_dphi + n_dpsi * n_phi + n_psi * n_dphi)
    # rounding in the two products is proportional to their size, not to the (small) bound
    scale = max(rhs, induced_norm(space, psi_n) * induced_norm(space, phi_n))
    return _excess(lhs, rhs, scale)


@register("module-norm", "M(2)-norm axioms, ||w psi|| <= sqrt(2)|w| ||psi|| and ||psi|| = |sqrt(<psi, psi>)|")
def module_norm(ctx: TrialContext) -> float:
    space = random_space(ctx.rng, ctx.dim, ctx.params)
    psi, phi = random_ket(ctx.rng, ctx.dim, ctx.params), random_ket(ctx.rng, ctx.dim, ctx.params)
    w = random_bicomplex(ctx.rng, ctx.params)
    c = complex(*ctx.rng.uniform(-1, 1, size=2))
    n_psi, n_phi = induced_norm(space, psi), induced_norm(space, phi)

    root = nth_root(scalar_product(space, psi, psi), 2)
    # equality witness: w = e1 and a ket with no V_2 part
    psi_1 = ket_split(psi, 1)
    witness = abs(induced_norm(space, psi_1.scale(E1)) - SQRT2 * euclid_norm(E1) * induced_norm(space, psi_1))
    return max(
        _excess(induced_norm(space, psi + phi), n_psi + n_phi, n_psi + n_phi),
        _ratio(abs(induced_norm(space, psi * c) - abs(c) * n_psi), abs(c) * n_psi),
        _excess(induced_norm(space, psi.scale(w)), SQRT2 * euclid_norm(w) * n_psi, euclid_norm(w) * n_psi),
        _ratio(abs(euclid_norm(root) - n_psi), n_psi),
        _ratio(witness, induced_norm(space, psi_1)),
    )


# ---------------------------------------------------------------- orthonormalization


def _breakdown_on_null_cone(dim: int) -> float:
    space = ScalarProductSpec.standard(dim)
    ket = Ket.from_coeffs([E1] + [ZERO] * (dim - 1))
    try:
        gram_schmidt(space, [ket])
    except NullConeBreakdown as e:
        return 0.0 if e.index == 0 else FAILED
    return FAILED


@register(
    "gram-schmidt",
    "orthonormality of Gram-Schmidt output and agreement with per-component classical Gram-Schmidt",
    (FixedCheck("null-cone input (e1, 0, ...) breaks down at 0", _breakdown_on_null_cone, "gram-schmidt"),),
)
def gram_schmidt_suite(ctx: TrialContext) -> float:
    space = random_space(ctx.rng, ctx.dim, ctx.params)
    kets = [random_ket(ctx.rng, ctx.dim, ctx.params) for _ in range(ctx.dim)]
    try:
        system = gram_schmidt(space, kets)
        reference = gram_schmidt_by_components(space, kets)
    except NullConeBreakdown:
        return FAILED
    agreement = max(_ket_dist(a, b) for a, b in zip(system.kets, reference.kets))
    return max(float(np.max(orthonormality_defect(system))), agreement)


@register("best-approx", "best-approximation inequality for every prefix, monotone residuals, orthogonal residuals")
def best_approx(ctx: TrialContext) -> float:
    space = random_space(ctx.rng, ctx.dim, ctx.params)
    system = random_basis(ctx.rng, space, ctx.params)
    psi = random_ket(ctx.rng, ctx.dim, ctx.params)
    n_psi = induced_norm(space, psi)
    curve = residual_curve(system, psi)
    coefficients = fourier_coefficients(system, psi)

    worst = 0.0
    for n in range(system.size + 1):
        prefix = system.prefix(n)
        projection, residual = best_approximation(system, psi, n)
        alpha = CoefficientList(tuple(random_coefficients(ctx.rng, n, ctx.params)))
        other = induced_norm(space, psi - expand(prefix, alpha))
        exact = induced_norm(space, psi - expand(prefix, CoefficientList(coefficients.values[:n])))
        worst = max(
            worst,
            _excess(residual, other, n_psi),
            _ratio(abs(exact - residual), n_psi),
            _ratio(abs(curve[n] - residual), n_psi),
        )
        for m in prefix.kets:
            worst = max(worst, _ratio(euclid_norm(scalar_product(space, m, psi - projection)), n_psi))
    monotone = max(curve[n + 1] - curve[n] for n in range(system.size))
    # a full basis reproduces psi
    return max(worst, _ratio(max(monotone, 0.0), n_psi), _ratio(curve[-1], n_psi))


# ---------------------------------------------------------------- l2_space


@register("l2-norm-equality", "||s||_2 equals the M(2)-norm built from the idempotent split")
def l2_norm_equality(ctx: TrialContext) -> float:
    ket = random_ket(ctx.rng, ctx.dim, ctx.params)
    s = BicomplexSequence(ket.z1, ket.z2)
    norm = l2_norm(s)
    sums, tails = partial_sums(s), tail_norms(s)
    return max(
        _ratio(abs(norm - l2_norm_from_split(s)), norm),
        _ratio(abs(math.sqrt(sums[-1]) - norm), norm),
        _ratio(abs(tails[0] - norm), norm),
        _ratio(max(0.0, float(np.max(np.diff(tails), initial=0.0))), norm),
    )


def _rf_map(ctx: TrialContext, suite: str) -> RieszFischerMap:
    basis = shared_basis(ctx.seed, suite, ctx.dim, ctx.index % ctx.params.rf_bases, ctx.params)
    return RieszFischerMap(basis)


@register("rf-isometry", "Riesz-Fischer isometry, round trips, injectivity and T_k(psi) = T(e_k psi)")
def rf_isometry(ctx: TrialContext) -> float:
    rf_map = _rf_map(ctx, "rf-isometry")
    space = rf_map.domain.space
    psi = random_ket(ctx.rng, ctx.dim, ctx.params)
    drawn = random_ket(ctx.rng, ctx.dim, ctx.params)
    s = BicomplexSequence(drawn.z1, drawn.z2)
    n_psi = induced_norm(space, psi)
    t_psi = rf_forward(rf_map, psi)

    worst = max(
        _ratio(abs(l2_norm(t_psi) - n_psi), n_psi),
        _ratio(_ket_dist(rf_inverse(rf_map, t_psi), psi), _ket_euclid(psi)),
        _ratio(_seq_dist(rf_forward(rf_map, rf_inverse(rf_map, s)), s), l2_norm(s)),
    )
    for k in (1, 2):
        split = _seq_dist(rf_component(rf_map, psi, k), rf_forward(rf_map, ket_split(psi, k)))
        worst = max(worst, _ratio(split, n_psi))
    # injectivity proxy: a tiny image forces a tiny preimage
    tiny = psi * 1e-9
    image = l2_norm(rf_forward(rf_map, tiny))
    worst = max(worst, _excess(induced_norm(space, tiny), image, induced_norm(space, tiny)))
    return worst


@register("rf-linearity", "bicomplex linearity of T, including zero-divisor scalars")
def rf_linearity(ctx: TrialContext) -> float:
    rf_map = _rf_map(ctx, "rf-linearity")
    space = rf_map.domain.space
    psi, phi = random_ket(ctx.rng, ctx.dim, ctx.params), random_ket(ctx.rng, ctx.dim, ctx.params)
    alpha, beta = random_null_cone_scalar(ctx.rng, ctx.params), random_null_cone_scalar(ctx.rng, ctx.params)
    lhs = rf_forward(rf_map, psi.scale(alpha) + phi.scale(beta))
    rhs = rf_forward(rf_map, psi).scale(alpha) + rf_forward(rf_map, phi).scale(beta)
    scale = euclid_norm(alpha) * induced_norm(space, psi) + euclid_norm(beta) * induced_norm(space, phi)
    return _ratio(_seq_dist(lhs, rhs), scale)
