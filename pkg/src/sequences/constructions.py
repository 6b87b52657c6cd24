"""
Multivariable-function constructions.

* IGC code sets: codes C_{s,t} whose rows are ψ(a_{s,t}^γ), a = R_t^γ + T_s.
* Golay complementary pairs from the quadratic path functions over Z_2^m.
* 2-D Z-complementary array codes K^γ = {F_d : d ∈ Z_2^m} and the array code
  sets indexed by a family Λ of quadruples (s1, s2, t1, t2).

All polynomials are built on the domain Π Z_{p_α}^{m_α−1} × Π Z_{p_α} (× Z_2
for F_d) laid out as in src.core.algebra, so the appended label variables v'
and the array variable v'' are the most significant digits.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Sequence

import numpy as np

from src.core.algebra import (
    Domain,
    MixedRadixIndex,
    MultivarPoly,
    PhaseArray2D,
    PhaseCode,
    PhaseSequence,
    RadixProfile,
    VariableBlock,
    eval_poly,
    materialize_array,
    materialize_sequence,
    to_mixed_radix,
)
from src.core.errors import ParameterError
from src.sequences.correlation import CorrelationValue, accf

logger = logging.getLogger(__name__)


# ==================== PARAMETERS ==================== #

def _check_permutation(perm: Sequence[int], size: int, what: str) -> tuple[int, ...]:
    perm = tuple(int(x) for x in perm)
    if sorted(perm) != list(range(1, size + 1)):
        raise ParameterError(f"{what} must be a permutation of 1..{size}, got {perm}")
    return perm


@dataclass(frozen=True)
class IgcParams:
    """
    Free choices of the code construction for one RadixProfile.

    perms[α] permutes {1..m_α−1} (1-based, as π_α), lin_coeffs[α][β] is
    c_{α,β+1} and consts[α] is c_α. Missing entries default to identity / 0.
    """
    profile: RadixProfile
    perms: tuple[tuple[int, ...], ...] = ()
    lin_coeffs: tuple[tuple[int, ...], ...] = ()
    consts: tuple[int, ...] = ()

    def __post_init__(self):
        sizes = [m - 1 for m in self.profile.exponents]
        k, lam = self.profile.k, self.profile.modulus

        perms = self.perms or tuple(tuple(range(1, n + 1)) for n in sizes)
        lin = self.lin_coeffs or tuple((0,) * n for n in sizes)
        consts = self.consts or (0,) * k
        if not len(perms) == len(lin) == len(consts) == k:
            raise ParameterError(f"need one permutation, coefficient row and constant per factor (k={k})")

        perms = tuple(_check_permutation(p, n, f"π_{a + 1}") for a, (p, n) in enumerate(zip(perms, sizes)))
        lin_rows = []
        for a, (row, n) in enumerate(zip(lin, sizes)):
            if len(row) != n:
                raise ParameterError(f"factor {a + 1} needs {n} linear coefficients, got {len(row)}")
            lin_rows.append(tuple(int(c) % lam for c in row))

        object.__setattr__(self, "perms", perms)
        object.__setattr__(self, "lin_coeffs", tuple(lin_rows))
        object.__setattr__(self, "consts", tuple(int(c) % lam for c in consts))

    @classmethod
    def random(cls, profile: RadixProfile, seed: int) -> IgcParams:
        """Random permutations and Z_λ coefficients drawn from a seeded generator."""
        rng = np.random.default_rng(seed)
        perms, lin, consts = [], [], []
        for m in profile.exponents:
            perms.append(tuple(int(x) + 1 for x in rng.permutation(m - 1)))
            lin.append(tuple(int(x) for x in rng.integers(0, profile.modulus, m - 1)))
            consts.append(int(rng.integers(0, profile.modulus)))
        return cls(profile, tuple(perms), tuple(lin), tuple(consts))


@dataclass(frozen=True)
class GroupLabel:
    """s, t, γ ∈ Π Z_{p_α}."""
    s: tuple[int, ...]
    t: tuple[int, ...]
    gamma: tuple[int, ...] = ()

    def __post_init__(self):
        for name in ("s", "t", "gamma"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))

    def validate(self, profile: RadixProfile) -> None:
        for name in ("s", "t", "gamma"):
            vec = getattr(self, name)
            if name == "gamma" and not vec:
                continue
            if len(vec) != profile.k or any(not 0 <= x < p for x, p in zip(vec, profile.primes)):
                raise ParameterError(f"{name}={vec} is not a vector of Π Z_p for primes {profile.primes}")


@dataclass(frozen=True)
class GcpParams:
    """Quadratic path function over Z_2^m and its pair offsets e, e'."""
    m: int
    modulus: int
    pi: tuple[int, ...] = ()
    g: tuple[int, ...] = ()
    e: int = 0
    e_prime: int = 0

    def __post_init__(self):
        if self.m < 1:
            raise ParameterError(f"m must be >= 1, got {self.m}")
        if self.modulus < 2 or self.modulus % 2:
            raise ParameterError(f"λ must be even, got {self.modulus}")
        pi = _check_permutation(self.pi or range(1, self.m + 1), self.m, "π")
        g = tuple(int(x) % self.modulus for x in (self.g or (0,) * self.m))
        if len(g) != self.m:
            raise ParameterError(f"g needs {self.m} entries, got {len(g)}")
        object.__setattr__(self, "pi", pi)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "e", int(self.e) % self.modulus)
        object.__setattr__(self, "e_prime", int(self.e_prime) % self.modulus)

    @classmethod
    def random(cls, m: int, modulus: int, seed: int) -> GcpParams:
        rng = np.random.default_rng(seed)
        return cls(
            m,
            modulus,
            pi=tuple(int(x) + 1 for x in rng.permutation(m)),
            g=tuple(int(x) for x in rng.integers(0, modulus, m)),
            e=int(rng.integers(0, modulus)),
            e_prime=int(rng.integers(0, modulus)),
        )


@dataclass(frozen=True)
class ZetaQuad:
    """(s1, s2, t1, t2) with t1 ≠ t2."""
    s1: tuple[int, ...]
    s2: tuple[int, ...]
    t1: tuple[int, ...]
    t2: tuple[int, ...]

    def __post_init__(self):
        for name in ("s1", "s2", "t1", "t2"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))
        if self.t1 == self.t2:
            raise ParameterError(f"t1 and t2 must differ, both are {self.t1}")


class LambdaStrategy(str, Enum):
    """How to pick Λ: consecutive t pairs or a seeded shuffle."""
    CONSECUTIVE = "consecutive"
    RANDOM = "random"


# ==================== 1-D CODES ==================== #

def _scale(profile: RadixProfile, alpha: int) -> int:
    return profile.modulus // profile.primes[alpha]


def build_f_alpha(params: IgcParams, alpha: int) -> MultivarPoly:
    """
    f_α over Z_{p_α}^{m_α−1} (alpha is 1-based):

        (λ/p_α) Σ_β v_{π(β)} v_{π(β+1)} + Σ_β c_{α,β} v_β + c_α
    """
    profile = params.profile
    if not 1 <= alpha <= profile.k:
        raise ParameterError(f"alpha must lie in [1, {profile.k}], got {alpha}")
    a = alpha - 1
    p, m = profile.factors[a]
    lam = profile.modulus
    domain = Domain.of((p, m - 1))
    perm = params.perms[a]
    scale = _scale(profile, a)

    poly = MultivarPoly.constant(domain, lam, params.consts[a])
    for beta in range(m - 2):
        poly = poly + MultivarPoly.monomial(domain, lam, {perm[beta] - 1: 1, perm[beta + 1] - 1: 1}, scale)
    for beta, c in enumerate(params.lin_coeffs[a]):
        poly = poly + MultivarPoly.variable(domain, lam, beta, c)
    return poly


def build_f(params: IgcParams) -> MultivarPoly:
    """f = Σ_α f_α on Π Z_{p_α}^{m_α−1}."""
    domain = params.profile.r_domain()
    return sum(
        (build_f_alpha(params, a + 1).embed(domain, domain.block_offset(a)) for a in range(params.profile.k)),
        MultivarPoly.zero(domain, params.profile.modulus),
    )


def build_r(params: IgcParams, t: Sequence[int], gamma: Sequence[int]) -> MultivarPoly:
    """R_t^γ = f + Σ (λ/p_α) v_{π_α(1)} γ_α + Σ (λ/p_α) v_{π_α(m_α−1)} t_α."""
    profile = params.profile
    GroupLabel(s=t, t=t, gamma=gamma).validate(profile)
    domain = profile.r_domain()
    poly = build_f(params)
    for a in range(profile.k):
        offset = domain.block_offset(a)
        perm = params.perms[a]
        scale = _scale(profile, a)
        poly = poly + MultivarPoly.variable(domain, profile.modulus, offset + perm[0] - 1, scale * gamma[a])
        poly = poly + MultivarPoly.variable(domain, profile.modulus, offset + perm[-1] - 1, scale * t[a])
    return poly


def build_t(params: IgcParams, s: Sequence[int]) -> MultivarPoly:
    """T_s = Σ (λ/p_α) v'_α s_α on Π Z_{p_α}."""
    profile = params.profile
    GroupLabel(s=s, t=s).validate(profile)
    domain = profile.label_domain()
    poly = MultivarPoly.zero(domain, profile.modulus)
    for a in range(profile.k):
        poly = poly + MultivarPoly.variable(domain, profile.modulus, a, _scale(profile, a) * s[a])
    return poly


def build_a(params: IgcParams, label: GroupLabel) -> MultivarPoly:
    """a_{s,t}^γ = R_t^γ + T_s on Π Z_{p_α}^{m_α−1} × Π Z_{p_α}."""
    profile = params.profile
    label.validate(profile)
    gamma = label.gamma or (0,) * profile.k
    domain = profile.code_domain()
    r_vars = profile.r_domain().num_variables
    return build_r(params, label.t, gamma).embed(domain, 0) + build_t(params, label.s).embed(domain, r_vars)


def build_code(params: IgcParams, s: Sequence[int], t: Sequence[int]) -> PhaseCode:
    """C_{s,t}: row i is a_{s,t}^{(i)_γ} materialized."""
    profile = params.profile
    rows = [
        materialize_sequence(build_a(params, GroupLabel(s, t, gamma))).phases
        for gamma in profile.labels()
    ]
    return PhaseCode(profile.modulus, np.stack(rows), GroupLabel(s, t))


def build_igc_codeset(params: IgcParams) -> tuple[PhaseCode, ...]:
    """
    All K = M² codes C_{s,t}, ordered group by group: index = M·idx(t) + idx(s).
    Group I^t holds the codes sharing t.
    """
    profile = params.profile
    labels = profile.labels()
    codes = tuple(build_code(params, s, t) for t in labels for s in labels)
    logger.info(
        "IGC set built: K=%d M=%d L=%d Z=%d λ=%d",
        len(codes), profile.radix_product, profile.length, profile.zcz_width, profile.modulus,
    )
    return codes


def code_groups(codes: Sequence[PhaseCode]) -> dict[tuple[int, ...], list[int]]:
    """Indices of the codes of each group I^t, keyed by t (codes without label form their own group)."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for i, code in enumerate(codes):
        key = code.label.t if code.label is not None else (-1 - i,)
        groups.setdefault(key, []).append(i)
    return groups


def r_set_correlation(params: IgcParams, t1: Sequence[int], t2: Sequence[int], tau: int) -> CorrelationValue:
    """Σ_γ C(ψ(R_{t1}^γ), ψ(R_{t2}^γ))(τ)."""
    profile = params.profile
    total = CorrelationValue.zero(profile.modulus)
    for gamma in profile.labels():
        total = total + accf(
            materialize_sequence(build_r(params, t1, gamma)),
            materialize_sequence(build_r(params, t2, gamma)),
            tau,
        )
    return total


def t_correlation(params: IgcParams, s1: Sequence[int], s2: Sequence[int], tau: int = 0) -> CorrelationValue:
    """C(ψ(T_{s1}), ψ(T_{s2}))(τ)."""
    return accf(materialize_sequence(build_t(params, s1)), materialize_sequence(build_t(params, s2)), tau)


# ==================== GOLAY PAIRS ==================== #

def paterson_functions(gp: GcpParams) -> tuple[MultivarPoly, MultivarPoly]:
    """
    a = f + e and b = f + (λ/2) x_{π(1)} + e' over Z_2^m, with
    f = (λ/2) Σ x_{π(β)} x_{π(β+1)} + Σ g_β x_β.
    """
    domain = Domain((VariableBlock(2, gp.m),))
    lam, half = gp.modulus, gp.modulus // 2
    f = MultivarPoly.zero(domain, lam)
    for beta in range(gp.m - 1):
        f = f + MultivarPoly.monomial(domain, lam, {gp.pi[beta] - 1: 1, gp.pi[beta + 1] - 1: 1}, half)
    for beta, g in enumerate(gp.g):
        f = f + MultivarPoly.variable(domain, lam, beta, g)
    a = f + gp.e
    b = f + MultivarPoly.variable(domain, lam, gp.pi[0] - 1, half) + gp.e_prime
    return a, b


def paterson_pair(gp: GcpParams) -> tuple[PhaseSequence, PhaseSequence]:
    """Golay complementary pair of length 2^m."""
    a, b = paterson_functions(gp)
    return materialize_sequence(a), materialize_sequence(b)


# ==================== 2-D ARRAYS ==================== #

def array_domain(profile: RadixProfile) -> Domain:
    """Π Z_{p_α}^{m_α−1} × Π Z_{p_α} × Z_2; the last variable is v''."""
    return profile.code_domain().concat(Domain.of((2, 1)))


def _check_compatible(params: IgcParams, gp: GcpParams) -> None:
    if params.profile.modulus != gp.modulus:
        raise ParameterError(f"λ differs between code ({params.profile.modulus}) and pair ({gp.modulus}) parameters")


def build_F_d(
    params: IgcParams,
    gp: GcpParams,
    quad: ZetaQuad,
    gamma: Sequence[int],
    d: Sequence[int],
) -> MultivarPoly:
    """
    F_d = (1 − v''){a_{s1,t1}^γ + a(d)} + v''{a_{s2,t2}^γ + b(d)}.

    Restricted to v'' = 0 it is a_{s1,t1}^γ + a(d); to v'' = 1, a_{s2,t2}^γ + b(d).
    """
    _check_compatible(params, gp)
    profile = params.profile
    a_fn, b_fn = paterson_functions(gp)
    point = MixedRadixIndex(tuple(d), a_fn.domain)

    low = build_a(params, GroupLabel(quad.s1, quad.t1, gamma)) + eval_poly(a_fn, point)
    high = build_a(params, GroupLabel(quad.s2, quad.t2, gamma)) + eval_poly(b_fn, point)

    domain = array_domain(profile)
    v2 = MultivarPoly.variable(domain, profile.modulus, domain.num_variables - 1)
    low_full = low.embed(domain, 0)
    # (1 − v'')·low + v''·high = low + v''·(high − low)
    return low_full + v2 * (high.embed(domain, 0) - low_full)


def build_zcac(params: IgcParams, gp: GcpParams, quad: ZetaQuad) -> tuple[PhaseArray2D, ...]:
    """
    X^γ = Ψ(K^γ) for every γ ∈ Π Z_{p_α}; row d of K^γ is F_d (d ∈ Z_2^m in
    mixed-radix order). Each array is 2^m × 2Π p^{m_α}.
    """
    _check_compatible(params, gp)
    profile = params.profile
    for t in (quad.t1, quad.t2, quad.s1, quad.s2):
        GroupLabel(t, t).validate(profile)
    d_vectors = [to_mixed_radix(i, Domain.of((2, gp.m))).digits for i in range(2**gp.m)]
    arrays = tuple(
        materialize_array([build_F_d(params, gp, quad, gamma, d) for d in d_vectors], profile.modulus)
        for gamma in profile.labels()
    )
    logger.debug("ZCAC built for %s: %d arrays of %s", quad, len(arrays), arrays[0].shape)
    return arrays


def enumerate_lambda_set(
    profile: RadixProfile,
    strategy: LambdaStrategy | str = LambdaStrategy.CONSECUTIVE,
    seed: int = 0,
) -> tuple[ZetaQuad, ...]:
    """
    Λ with pairwise-distinct t components: t-indices paired (0,1), (2,3), ...
    (shuffled first for the random strategy), s1 = s2 = 0. |Λ| = ⌊M/2⌋.
    """
    strategy = LambdaStrategy(strategy)
    labels = profile.labels()
    if len(labels) < 2:
        raise ParameterError("Λ needs M = Π p_α >= 2")
    order = list(range(len(labels)))
    if strategy is LambdaStrategy.RANDOM:
        order = [int(i) for i in np.random.default_rng(seed).permutation(len(labels))]
    zero = (0,) * profile.k
    return tuple(
        ZetaQuad(zero, zero, labels[order[2 * j]], labels[order[2 * j + 1]])
        for j in range(len(labels) // 2)
    )


def check_lambda_set(quads: Sequence[ZetaQuad]) -> None:
    """Every t1, t2 across Λ must be distinct."""
    ts = [q.t1 for q in quads] + [q.t2 for q in quads]
    if len(set(ts)) != len(ts):
        raise ParameterError("t components of Λ are not all distinct")


def build_zcacs(
    params: IgcParams, gp: GcpParams, quads: Sequence[ZetaQuad]
) -> tuple[tuple[PhaseArray2D, ...], ...]:
    """One ZCAC per ζ ∈ Λ."""
    check_lambda_set(quads)
    codesets = tuple(build_zcac(params, gp, q) for q in quads)
    logger.info(
        "ZCACS built: %d sets × %d arrays of %s",
        len(codesets), len(codesets[0]) if codesets else 0, codesets[0][0].shape if codesets else None,
    )
    return codesets


def default_lambda(factors: Sequence[tuple[int, int]] | Sequence[int], need_even: bool = False) -> int:
    """Least λ divisible by every p_α (and by 2 when need_even)."""
    primes = [f[0] if isinstance(f, (tuple, list)) else int(f) for f in factors]
    lam = reduce(math.lcm, primes, 1)
    if need_even and lam % 2:
        lam *= 2
    return lam

