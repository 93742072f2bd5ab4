"""
Splitting data: characters, the triviality subgroup and case flags.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from sympy import gcdex

from ..forms import FormLabel, IndexSet
from ..scalar import ZERO, GaussianRational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Character:
    """``exp(hol·z + antihol·z̄)`` on the base ℂⁿ."""

    hol: tuple[GaussianRational, ...]
    antihol: tuple[GaussianRational, ...]

    @classmethod
    def holomorphic(cls, coefficients: Sequence) -> "Character":
        hol = tuple(GaussianRational.coerce(c) for c in coefficients)
        return cls(hol, tuple(ZERO for _ in hol))

    @classmethod
    def antiholomorphic(cls, coefficients: Sequence) -> "Character":
        antihol = tuple(GaussianRational.coerce(c) for c in coefficients)
        return cls(tuple(ZERO for _ in antihol), antihol)

    @property
    def n(self) -> int:
        return len(self.hol)

    def conjugate(self) -> "Character":
        return Character(
            tuple(c.conjugate() for c in self.antihol),
            tuple(c.conjugate() for c in self.hol),
        )


class TrivialitySubgroup:
    """A subgroup of ℤ^N kept in Hermite echelon form.

    Rows are inserted one vector at a time by extended-gcd row reduction, so
    membership is an exact reduction against the pivots.
    """

    __slots__ = ("dimension", "basis", "pivots")

    def __init__(self, dimension: int, generators: Iterable[Sequence[int]] = ()):
        self.dimension = dimension
        self.basis: list[list[int]] = []
        self.pivots: list[int] = []
        for vector in generators:
            self.add_vector(vector)

    @classmethod
    def full(cls, dimension: int) -> "TrivialitySubgroup":
        return cls(
            dimension,
            [[1 if i == j else 0 for i in range(dimension)] for j in range(dimension)],
        )

    def copy(self) -> "TrivialitySubgroup":
        other = TrivialitySubgroup(self.dimension)
        other.basis = [row.copy() for row in self.basis]
        other.pivots = self.pivots.copy()
        return other

    @property
    def rank(self) -> int:
        return len(self.basis)

    def _pivot_row(self, column: int) -> Optional[int]:
        try:
            return self.pivots.index(column)
        except ValueError:
            return None

    def __contains__(self, vector: Sequence[int]) -> bool:
        if len(vector) != self.dimension:
            raise ValueError(f"expected a vector of length {self.dimension}")
        vec = list(vector)
        for j in range(self.dimension):
            if not vec[j]:
                continue
            p = self._pivot_row(j)
            if p is None:
                return False
            row = self.basis[p]
            if vec[j] % row[j]:
                return False
            q = vec[j] // row[j]
            for jj in range(j, self.dimension):
                vec[jj] -= q * row[jj]
        return True

    def add_vector(self, vector: Sequence[int]) -> None:
        if len(vector) != self.dimension:
            raise ValueError(f"expected a vector of length {self.dimension}")
        vec = [int(x) for x in vector]
        for j in range(self.dimension):
            if not vec[j]:
                continue
            p = self._pivot_row(j)
            if p is None:
                where = sum(1 for c in self.pivots if c < j)
                if vec[j] < 0:
                    vec = [-x for x in vec]
                self.basis.insert(where, vec)
                self.pivots.insert(where, j)
                self._reduce_above(where)
                return
            row = self.basis[p]
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                vec = [v - q * r for v, r in zip(vec, row)]
                continue
            x, y, g = (int(v) for v in gcdex(a, b))
            new_row = [x * r + y * v for r, v in zip(row, vec)]
            vec = [(-b // g) * r + (a // g) * v for r, v in zip(row, vec)]
            if new_row[j] < 0:
                new_row = [-x for x in new_row]
            self.basis[p] = new_row
            self._reduce_above(p)

    def _reduce_above(self, index: int) -> None:
        """Keep entries above each pivot in ``[0, pivot)``."""
        column = self.pivots[index]
        pivot = self.basis[index][column]
        for i in range(index):
            q = self.basis[i][column] // pivot
            if q:
                self.basis[i] = [a - q * b for a, b in zip(self.basis[i], self.basis[index])]

    def generators(self) -> list[tuple[int, ...]]:
        return [tuple(row) for row in self.basis]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TrivialitySubgroup):
            return NotImplemented
        return (
            self.dimension == other.dimension
            and all(tuple(v) in other for v in self.basis)
            and all(tuple(v) in self for v in other.basis)
        )

    def __repr__(self) -> str:
        return f"TrivialitySubgroup({self.dimension}, {self.generators()})"


@dataclass(frozen=True)
class CaseFlags:
    """Which of β₁, γ₁, β₁γ₁ and β₁γ₁⁻¹ restrict to 1 on the lattice."""

    beta1_trivial: bool = False
    gamma1_trivial: bool = False
    beta1gamma1_trivial: bool = False
    beta1gamma1inv_trivial: bool = False

    # exponent vectors over (β₁, γ₁)
    VECTORS = {
        "beta1_trivial": (1, 0),
        "gamma1_trivial": (0, 1),
        "beta1gamma1_trivial": (1, 1),
        "beta1gamma1inv_trivial": (1, -1),
    }

    def as_dict(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in self.VECTORS}

    def subgroup(self) -> TrivialitySubgroup:
        """Subgroup of ℤ² generated by the trivial characters."""
        return TrivialitySubgroup(
            2, [vector for name, vector in self.VECTORS.items() if getattr(self, name)]
        )

    @property
    def is_consistent(self) -> bool:
        group = self.subgroup()
        return all((vector in group) == getattr(self, name) for name, vector in self.VECTORS.items())

    @classmethod
    def from_subgroup(cls, group: TrivialitySubgroup) -> "CaseFlags":
        return cls(**{name: vector in group for name, vector in cls.VECTORS.items()})


@dataclass(frozen=True)
class Generator:
    """A basis monomial of B: fiber weights plus holomorphic/antiholomorphic indices."""

    weights: tuple[int, ...]
    I: IndexSet
    K: IndexSet
    label: FormLabel = field(compare=False)


@dataclass
class SplittingData:
    """Data of ℂⁿ ⋉ ℂᵐ with diagonal action and a lattice.

    Fiber coordinates are ``1..m`` and base coordinates ``m+1..m+n``.
    ``b_factors[j]`` is the holomorphic multiplier carried by ``dz_{j+1}``
    inside B; ``bbar_factors[j]`` the antiholomorphic one carried by
    ``dz̄_{j+1}`` inside B̄.
    """

    n: int
    m: int
    b_factors: tuple[Character, ...]
    bbar_factors: tuple[Character, ...]
    triviality: TrivialitySubgroup
    family: str = "custom"
    case: str = ""
    t: Optional[GaussianRational] = None

    def __post_init__(self):
        if len(self.b_factors) != self.m or len(self.bbar_factors) != self.m:
            raise ValueError("need one character per fiber coordinate")
        for character in self.b_factors:
            if character.n != self.n or any(character.antihol):
                raise ValueError("b_factors must be holomorphic characters on ℂⁿ")
        for character in self.bbar_factors:
            if character.n != self.n or any(character.hol):
                raise ValueError("bbar_factors must be antiholomorphic characters on ℂⁿ")
        if self.triviality.dimension != 2 * self.m:
            raise ValueError("triviality subgroup must live in ℤ^{2m}")

    @property
    def dimension(self) -> int:
        return self.n + self.m

    @property
    def fiber(self) -> IndexSet:
        return tuple(range(1, self.m + 1))

    @property
    def base(self) -> IndexSet:
        return tuple(range(self.m + 1, self.m + self.n + 1))

    def weight_of(self, I: IndexSet, K: IndexSet) -> tuple[int, ...]:
        fiber = set(self.fiber)
        return tuple(1 if j in I and j in fiber else 0 for j in self.fiber) + tuple(
            1 if j in K and j in fiber else 0 for j in self.fiber
        )

    def generators(self) -> list[Generator]:
        """All monomials of B, those whose weight lies in the triviality subgroup."""
        indices = tuple(range(1, self.dimension + 1))
        result = []
        for hol_mask in product((0, 1), repeat=self.dimension):
            I = tuple(i for i, bit in zip(indices, hol_mask) if bit)
            for antihol_mask in product((0, 1), repeat=self.dimension):
                K = tuple(i for i, bit in zip(indices, antihol_mask) if bit)
                weights = self.weight_of(I, K)
                if weights not in self.triviality:
                    continue
                result.append(Generator(weights, I, K, self.label_for(I, K, weights)))
        return result

    def label_for(self, I: IndexSet, K: IndexSet, weights: tuple[int, ...]) -> FormLabel:
        lam = [ZERO] * self.n
        for j, active in enumerate(weights[: self.m]):
            if active:
                lam = [a + b for a, b in zip(lam, self.b_factors[j].hol)]
        for j, active in enumerate(weights[self.m :]):
            if active:
                lam = [a + b.conjugate() for a, b in zip(lam, self.bbar_factors[j].antihol)]
        return FormLabel(tuple(lam), tuple(ZERO for _ in lam), I, K, weights)
