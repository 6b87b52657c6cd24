"""
Mixed-radix indexing, Z_λ phase containers and multivariable polynomials.

Variables are laid out block by block in declaration order. When a domain is
enumerated the earlier blocks vary fastest, and inside a block Z_p^m the first
digit is the least significant one, i.e. i = Σ p^(γ−1) i_γ. This is the only
ordering under which ψ(a) = ψ(T) ⊗ ψ(R) holds for the code construction, so
every materialization in the package goes through `Domain.digit_table`.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping, Sequence

import numpy as np
from sympy import isprime

from src.core.errors import DomainError, ParameterError, RangeError

if TYPE_CHECKING:
    from src.sequences.constructions import GroupLabel

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]


# ==================== DOMAINS ==================== #

@dataclass(frozen=True)
class VariableBlock:
    """`multiplicity` variables, each taking values in Z_radix."""
    radix: int
    multiplicity: int = 1

    def __post_init__(self):
        if self.radix < 2:
            raise ParameterError(f"radix must be >= 2, got {self.radix}")
        if self.multiplicity < 1:
            raise ParameterError(f"block multiplicity must be >= 1, got {self.multiplicity}")

    @property
    def size(self) -> int:
        return self.radix**self.multiplicity


@dataclass(frozen=True)
class Domain:
    """Ordered product of variable blocks Z_{r1}^{m1} × Z_{r2}^{m2} × ..."""
    blocks: tuple[VariableBlock, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> Domain:
        """Domain.of((2, 2), (3, 2)) is Z_2^2 × Z_3^2."""
        return cls(tuple(VariableBlock(r, m) for r, m in pairs))

    @cached_property
    def radices(self) -> tuple[int, ...]:
        return tuple(b.radix for b in self.blocks for _ in range(b.multiplicity))

    @property
    def num_variables(self) -> int:
        return len(self.radices)

    @cached_property
    def size(self) -> int:
        return math.prod(self.radices)

    @cached_property
    def weights(self) -> tuple[int, ...]:
        """Positional weight of each variable (product of all earlier radices)."""
        out, acc = [], 1
        for r in self.radices:
            out.append(acc)
            acc *= r
        return tuple(out)

    def block_offset(self, block: int) -> int:
        """Index of the first variable of `block`."""
        return sum(b.multiplicity for b in self.blocks[:block])

    def concat(self, other: Domain) -> Domain:
        return Domain(self.blocks + other.blocks)

    @cached_property
    def _digit_table(self) -> np.ndarray:
        index = np.arange(self.size, dtype=np.int64)
        table = np.empty((self.size, self.num_variables), dtype=np.int64)
        for v, (r, w) in enumerate(zip(self.radices, self.weights)):
            table[:, v] = (index // w) % r
        table.setflags(write=False)
        return table

    def digit_table(self) -> np.ndarray:
        """Row j holds the digits of to_mixed_radix(j) (read-only)."""
        return self._digit_table

    def points(self) -> Iterator[MixedRadixIndex]:
        for j in range(self.size):
            yield to_mixed_radix(j, self)


@dataclass(frozen=True)
class MixedRadixIndex:
    """A point of a domain, one digit per variable."""
    digits: tuple[int, ...]
    domain: Domain

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))
        if len(self.digits) != self.domain.num_variables:
            raise DomainError(
                f"{len(self.digits)} digits given for a domain with {self.domain.num_variables} variables"
            )
        for d, r in zip(self.digits, self.domain.radices):
            if not 0 <= d < r:
                raise DomainError(f"digit {d} outside Z_{r}")


def to_mixed_radix(index: int, domain: Domain) -> MixedRadixIndex:
    """Vector representation of `index`, earliest variable least significant."""
    if not 0 <= index < domain.size:
        raise RangeError(f"index {index} outside [0, {domain.size})")
    digits = []
    for r in domain.radices:
        index, d = divmod(index, r)
        digits.append(d)
    return MixedRadixIndex(tuple(digits), domain)


def from_mixed_radix(point: MixedRadixIndex) -> int:
    """Inverse of to_mixed_radix."""
    total = 0
    for d, r, w in zip(point.digits, point.domain.radices, point.domain.weights):
        if not 0 <= d < r:
            raise DomainError(f"digit {d} outside Z_{r}")
        total += d * w
    return total


# ==================== RADIX PROFILE ==================== #

@dataclass(frozen=True)
class RadixProfile:
    """
    Primes and exponents (p_α, m_α) of a code length L = Π p_α^{m_α}, with the
    phase modulus λ.
    """
    factors: tuple[tuple[int, int], ...]
    modulus: int

    def __post_init__(self):
        factors = tuple((int(p), int(m)) for p, m in self.factors)
        object.__setattr__(self, "factors", factors)
        if not factors:
            raise ParameterError("a radix profile needs at least one factor")
        primes = [p for p, _ in factors]
        if len(set(primes)) != len(primes):
            raise ParameterError(f"primes must be distinct, got {primes}")
        for p, m in factors:
            if not isprime(p):
                raise ParameterError(f"{p} is not prime")
            if m < 2:
                raise ParameterError(f"exponent for p={p} must be >= 2, got {m}")
            if self.modulus < 1 or self.modulus % p:
                raise ParameterError(f"p={p} does not divide λ={self.modulus}")

    @property
    def k(self) -> int:
        return len(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.factors)

    @property
    def length(self) -> int:
        """L = Π p^m."""
        return math.prod(p**m for p, m in self.factors)

    @property
    def zcz_width(self) -> int:
        """Z = N = Π p^(m−1)."""
        return math.prod(p ** (m - 1) for p, m in self.factors)

    @property
    def radix_product(self) -> int:
        """M = Π p: rows per code, number of groups, codes per group."""
        return math.prod(self.primes)

    @property
    def code_count(self) -> int:
        """K = M²."""
        return self.radix_product**2

    def label_domain(self) -> Domain:
        """Π Z_{p_α}, the range of s, t and γ."""
        return Domain.of(*((p, 1) for p in self.primes))

    def r_domain(self) -> Domain:
        """Π Z_{p_α}^{m_α−1}, the domain of f and R_t^γ."""
        return Domain.of(*((p, m - 1) for p, m in self.factors))

    def code_domain(self) -> Domain:
        """Π Z_{p_α}^{m_α−1} × Π Z_{p_α}, the domain of a_{s,t}^γ."""
        return self.r_domain().concat(self.label_domain())

    def labels(self) -> tuple[tuple[int, ...], ...]:
        """Every vector of Π Z_{p_α} in mixed-radix order."""
        return tuple(p.digits for p in self.label_domain().points())


# ==================== POLYNOMIALS ==================== #

class MultivarPoly:
    """
    Z_λ-linear combination of monomials over a Domain.

    Terms are stored sparsely as exponent vector -> coefficient. Exponents of a
    variable with radix p must lie in {0..p−1}; they are never reduced.
    """

    __slots__ = ("_domain", "_modulus", "_terms")

    def __init__(
        self,
        domain: Domain,
        modulus: int,
        terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = (),
    ):
        if modulus < 1:
            raise ParameterError(f"modulus must be positive, got {modulus}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for mono, coeff in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != domain.num_variables:
                raise DomainError(
                    f"monomial {mono} has {len(mono)} exponents, domain has {domain.num_variables} variables"
                )
            for e, r in zip(mono, domain.radices):
                if not 0 <= e < r:
                    raise DomainError(f"exponent {e} outside {{0..{r - 1}}}")
            acc[mono] = (acc.get(mono, 0) + int(coeff)) % modulus
        self._domain = domain
        self._modulus = modulus
        self._terms = MappingProxyType({m: c for m, c in sorted(acc.items()) if c})

    # Constructores

    @classmethod
    def zero(cls, domain: Domain, modulus: int) -> MultivarPoly:
        return cls(domain, modulus)

    @classmethod
    def constant(cls, domain: Domain, modulus: int, value: int) -> MultivarPoly:
        return cls(domain, modulus, {(0,) * domain.num_variables: value})

    @classmethod
    def monomial(
        cls, domain: Domain, modulus: int, exponents: Mapping[int, int], coefficient: int = 1
    ) -> MultivarPoly:
        """coefficient · Π v_i^{exponents[i]}, variables given by global index."""
        mono = [0] * domain.num_variables
        for var, e in exponents.items():
            if not 0 <= var < domain.num_variables:
                raise RangeError(f"variable index {var} outside [0, {domain.num_variables})")
            mono[var] += e
        return cls(domain, modulus, {tuple(mono): coefficient})

    @classmethod
    def variable(cls, domain: Domain, modulus: int, index: int, coefficient: int = 1) -> MultivarPoly:
        return cls.monomial(domain, modulus, {index: 1}, coefficient)

    # Propiedades

    @property
    def domain(self) -> Domain:
        return self._domain

    @property
    def modulus(self) -> int:
        return self._modulus

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def order(self) -> int:
        """Highest total degree among nonzero terms (0 for constants and zero)."""
        return max((sum(m) for m in self._terms), default=0)

    # Aritmética

    def _check_compatible(self, other: MultivarPoly) -> None:
        if other.domain != self.domain or other.modulus != self.modulus:
            raise DomainError("polynomials live on different domains or moduli")

    def __add__(self, other: MultivarPoly | int) -> MultivarPoly:
        if isinstance(other, (int, np.integer)):
            other = MultivarPoly.constant(self.domain, self.modulus, other)
        self._check_compatible(other)
        return MultivarPoly(self.domain, self.modulus, [*self._terms.items(), *other.terms.items()])

    __radd__ = __add__

    def __neg__(self) -> MultivarPoly:
        return MultivarPoly(self.domain, self.modulus, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: MultivarPoly | int) -> MultivarPoly:
        return self + (-other)

    def __mul__(self, other: MultivarPoly | int) -> MultivarPoly:
        if isinstance(other, (int, np.integer)):
            return MultivarPoly(self.domain, self.modulus, {m: c * other for m, c in self._terms.items()})
        self._check_compatible(other)
        out: list[tuple[Monomial, int]] = []
        for m1, c1 in self._terms.items():
            for m2, c2 in other.terms.items():
                out.append((tuple(a + b for a, b in zip(m1, m2)), c1 * c2))
        return MultivarPoly(self.domain, self.modulus, out)

    __rmul__ = __mul__

    def embed(self, target: Domain, offset: int = 0) -> MultivarPoly:
        """Same polynomial with its variables placed at target[offset:offset+n]."""
        n = self.domain.num_variables
        if target.radices[offset:offset + n] != self.domain.radices:
            raise DomainError("target domain does not contain this polynomial's variables at the offset")
        pad_after = target.num_variables - offset - n
        return MultivarPoly(
            target,
            self.modulus,
            {(0,) * offset + m + (0,) * pad_after: c for m, c in self._terms.items()},
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultivarPoly):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.modulus == other.modulus
            and dict(self._terms) == dict(other.terms)
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.modulus, tuple(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return f"MultivarPoly(0 mod {self.modulus})"
        parts = []
        for mono, coeff in self._terms.items():
            factors = [f"v{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(mono) if e]
            parts.append("*".join([str(coeff), *factors]) if factors else str(coeff))
        return f"MultivarPoly({' + '.join(parts)} mod {self.modulus})"


def eval_poly(poly: MultivarPoly, point: MixedRadixIndex) -> int:
    """Value of `poly` at `point` in Z_λ."""
    if point.domain != poly.domain:
        raise DomainError("point and polynomial have different domains")
    total = 0
    for mono, coeff in poly.terms.items():
        term = coeff
        for d, e in zip(point.digits, mono):
            if e:
                term *= d**e
        total += term
    return total % poly.modulus


# ==================== PHASE CONTAINERS ==================== #

def _phase_array(values, modulus: int, ndim: int) -> np.ndarray:
    if modulus < 1:
        raise ParameterError(f"modulus must be positive, got {modulus}")
    arr = np.array(values, dtype=np.int64)
    if arr.ndim != ndim:
        raise DomainError(f"expected a {ndim}-D phase array, got {arr.ndim}-D")
    if arr.size and (arr.min() < 0 or arr.max() >= modulus):
        raise DomainError(f"phases must lie in [0, {modulus})")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PhaseSequence:
    """Z_λ-valued sequence; its complex image is ψ (entries ω_λ^phase)."""
    modulus: int
    phases: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "phases", _phase_array(self.phases, self.modulus, 1))

    @classmethod
    def from_values(cls, values: Sequence[int], modulus: int) -> PhaseSequence:
        """Reduces arbitrary integers mod λ."""
        return cls(modulus, np.mod(np.asarray(values, dtype=np.int64), modulus))

    def __len__(self) -> int:
        return len(self.phases)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PhaseSequence):
            return NotImplemented
        return self.modulus == other.modulus and np.array_equal(self.phases, other.phases)

    def __hash__(self) -> int:
        return hash((self.modulus, self.phases.tobytes()))

    def rotated(self, offset: int) -> PhaseSequence:
        """Multiply every entry by ω^offset."""
        return PhaseSequence(self.modulus, (self.phases + offset) % self.modulus)

    def to_complex(self) -> np.ndarray:
        return np.exp(2j * np.pi * self.phases / self.modulus)

    def tolist(self) -> list[int]:
        return self.phases.tolist()


@dataclass(frozen=True, eq=False)
class PhaseArray2D:
    """L1 × L2 matrix of Z_λ phases; its complex image is Ψ."""
    modulus: int
    phases: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "phases", _phase_array(self.phases, self.modulus, 2))

    @property
    def shape(self) -> tuple[int, int]:
        return self.phases.shape

    def row(self, i: int) -> PhaseSequence:
        return PhaseSequence(self.modulus, self.phases[i])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PhaseArray2D):
            return NotImplemented
        return self.modulus == other.modulus and np.array_equal(self.phases, other.phases)

    def __hash__(self) -> int:
        return hash((self.modulus, self.shape, self.phases.tobytes()))

    def to_complex(self) -> np.ndarray:
        return np.exp(2j * np.pi * self.phases / self.modulus)

    def tolist(self) -> list[list[int]]:
        return self.phases.tolist()


@dataclass(frozen=True, eq=False)
class PhaseCode:
    """M' × L matrix of phases: one row per sequence of a code."""
    modulus: int
    rows: np.ndarray
    label: GroupLabel | None = None

    def __post_init__(self):
        object.__setattr__(self, "rows", _phase_array(self.rows, self.modulus, 2))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows.shape

    def row(self, i: int) -> PhaseSequence:
        return PhaseSequence(self.modulus, self.rows[i])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PhaseCode):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.label == other.label
            and np.array_equal(self.rows, other.rows)
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.label, self.rows.tobytes()))

    def to_complex(self) -> np.ndarray:
        return np.exp(2j * np.pi * self.rows / self.modulus)

    def tolist(self) -> list[list[int]]:
        return self.rows.tolist()


# ==================== MATERIALIZATION ==================== #

def materialize_sequence(poly: MultivarPoly) -> PhaseSequence:
    """phases[j] = poly(to_mixed_radix(j)) for every j of the domain."""
    domain, modulus = poly.domain, poly.modulus
    table = domain.digit_table()
    acc = np.zeros(domain.size, dtype=np.int64)
    for mono, coeff in poly.terms.items():
        term = np.full(domain.size, coeff, dtype=np.int64)
        for var, e in enumerate(mono):
            if e:
                lut = np.array([pow(d, e, modulus) for d in range(domain.radices[var])], dtype=np.int64)
                term = (term * lut[table[:, var]]) % modulus
        acc = (acc + term) % modulus
    return PhaseSequence(modulus, acc)


def materialize_array(rows: Sequence[MultivarPoly], modulus: int) -> PhaseArray2D:
    """Row i of the array is the sequence of rows[i]."""
    if not rows:
        raise DomainError("an array needs at least one row polynomial")
    domain = rows[0].domain
    for poly in rows:
        if poly.domain != domain or poly.modulus != modulus:
            raise DomainError("row polynomials must share one domain and modulus")
    return PhaseArray2D(modulus, np.stack([materialize_sequence(p).phases for p in rows]))


def kronecker_phase(a: PhaseSequence, b: PhaseSequence) -> PhaseSequence:
    """Phase form of ψ(a) ⊗ ψ(b): result[i·|b| + j] = a[i] + b[j] mod λ."""
    if a.modulus != b.modulus:
        raise DomainError(f"moduli differ: {a.modulus} != {b.modulus}")
    out = (a.phases[:, None] + b.phases[None, :]) % a.modulus
    return PhaseSequence(a.modulus, out.ravel())
