"""
Lattice cases of the families g1, g2^α and g8.

Each family is ℂ ⋉ ℂ² with n = 1, m = 2. The transcendental structure
constant is replaced by a Gaussian rational with the same vanishing pattern;
which characters restrict trivially to the lattice is decided by exact
rational arithmetic and encoded as a triviality subgroup of ℤ⁴ over the
exponents (β₁, β₂, γ₁, γ₂).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from ..core.errors import ErrorCode
from ..core.exceptions import (
    InternalInconsistencyException,
    InvalidCaseException,
    UndecidedCaseException,
)
from ..scalar import ZERO, GaussianRational
from .splitting import Character, CaseFlags, SplittingData, TrivialitySubgroup

logger = logging.getLogger(__name__)

FAMILIES = ("g1", "g2", "g8")
FAMILY_ALIASES = {
    "g1": "g1",
    "g2": "g2",
    "g2_alpha0": "g2",
    "g2_alpha_pos": "g2",
    "g8": "g8",
}

G8_CASES = ("i", "ii", "iii", "iv", "v", "vi", "vii")
G1_CASES = ("i", "ii", "iii")
G2_CASES = ("alpha0-pi2", "alpha0-other", "odd", "even", "generic")
X3_VALUES = ("pi/2", "pi/3", "pi/4", "pi/6")

# c₁, the coefficient of z₃ in the multiplier of dz₁ inside B
C1 = {
    "g1": GaussianRational(-2),
    "g2_alpha_pos": GaussianRational(-2),
    "g2_alpha0": ZERO,
    "g8": GaussianRational(0, -2),
    "g8_v": GaussianRational(2, -2),
}

# triviality subgroup over (β₁, γ₁) for each g8 case
G8_SUBGROUPS: dict[str, tuple[tuple[int, int], ...]] = {
    "i": (),
    "ii": ((1, 0),),
    "iii": ((0, 1),),
    "iv": ((1, -1),),
    "v": ((1, 1),),
    "vi": ((1, 1), (1, -1)),
    "vii": ((1, 0), (0, 1)),
}

G1_TO_G8 = {"i": "vii", "ii": "vi", "iii": "iv"}
G2_TO_G8 = {"odd": "vii", "even": "vi", "generic": "iv", "alpha0-pi2": "vi", "alpha0-other": "v"}


@dataclass(frozen=True)
class LatticeDescriptor:
    """Symbolic value of F_A(n): ``l`` with Re F = π/(l·Im A), and whether a log part appears."""

    l: Optional[int]
    has_log: bool

    @property
    def is_rational(self) -> bool:
        return self.l is not None and not self.has_log


def _l_value(n: int) -> Optional[int]:
    if n <= -2:
        return 2
    return {-1: 3, 0: 4, 1: 6}.get(n)


def is_lattice_compatible(n: int) -> tuple[bool, LatticeDescriptor]:
    """Whether F_A(n) can generate a lattice direction, with its descriptor."""
    if n == 2:
        return False, LatticeDescriptor(None, False)
    return True, LatticeDescriptor(_l_value(n), abs(n) >= 3)


def flags_to_case(flags: CaseFlags) -> str:
    """The g8 case whose subgroup the flags describe."""
    group = flags.subgroup()
    for case, generators in G8_SUBGROUPS.items():
        if group == TrivialitySubgroup(2, generators):
            return case
    raise InvalidCaseException("g8", f"inconsistent character flags {flags.as_dict()}")


def _is_integer(value: Fraction) -> bool:
    return value.denominator == 1


def classify_g8(A, n: int, nprime: int) -> CaseFlags:
    """Decide which characters are trivial on Γ' = F_A(n)ℤ ⊕ F_A(n')ℤ."""
    A = GaussianRational.coerce(A)
    if A.im == 0:
        raise InvalidCaseException("g8", "Im(A) must be nonzero")
    if A.re not in (0, 1):
        raise InvalidCaseException("g8", f"Re(A) = {A.re} is not supported, use 0 or 1")
    if n == nprime:
        raise InvalidCaseException("g8", "n and n' must differ")
    descriptors = []
    for value in (n, nprime):
        compatible, descriptor = is_lattice_compatible(value)
        if not compatible:
            raise InvalidCaseException("g8", f"F_A({value}) = 0 does not span a lattice")
        descriptors.append(descriptor)

    t = A.im
    if A.re == 0:
        logs = [d.has_log for d in descriptors]
        if not any(logs):
            raise InvalidCaseException("g8", "both generators are real, Γ' is not a lattice")
        if all(d.l is None for d in descriptors):
            raise InvalidCaseException("g8", "both generators are imaginary, Γ' is not a lattice")
        # only Re F matters; l = ∞ means Re F = 0 and imposes nothing
        finite = [d.l for d in descriptors if d.l is not None]
        flags = CaseFlags(
            beta1_trivial=all(_is_integer((1 + t) / (l * t)) for l in finite),
            gamma1_trivial=all(_is_integer((1 - t) / (l * t)) for l in finite),
            beta1gamma1_trivial=all(_is_integer(Fraction(2) / (l * t)) for l in finite),
            beta1gamma1inv_trivial=all(l in (1, 2) for l in finite),
        )
    else:
        rational = [d.l for d in descriptors if d.is_rational]
        has_log = any(d.has_log for d in descriptors)
        decided = {
            "beta1_trivial": all(_is_integer((2 + t) / (l * t)) for l in rational),
            "gamma1_trivial": all(_is_integer((t - 2) / (l * t)) for l in rational),
            "beta1gamma1_trivial": all(_is_integer(Fraction(4) / (l * t)) for l in rational),
        }
        if has_log:
            open_flags = [name for name, value in decided.items() if value]
            if open_flags:
                raise UndecidedCaseException(
                    str(A),
                    n,
                    nprime,
                    f"{', '.join(open_flags)} depend on the log part of F_A; needs Im(A) choice",
                )
        flags = CaseFlags(
            beta1gamma1inv_trivial=all(l in (1, 2) for l in rational), **decided
        )

    if not flags.is_consistent:
        raise InternalInconsistencyException(
            f"character flags {flags.as_dict()} are not a subgroup"
        )
    logger.debug(f"classified g8 A={A} n={n} n'={nprime}: {flags_to_case(flags)}")
    return flags


def _parse_rational(value: Union[str, int, Fraction], family: str) -> Optional[Fraction]:
    if isinstance(value, str):
        token = value.strip().lower()
        if token == "generic":
            return None
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidCaseException(family, f"expected a rational or 'generic', got {value!r}") from e
    return Fraction(value)


def classify_g2(q: Union[str, int, Fraction]) -> CaseFlags:
    """g2^α with α > 0; ``q`` is b in units of π/(2 Re A_n)."""
    value = _parse_rational(q, "g2")
    if value == 0:
        raise InvalidCaseException("g2", "q = 0 does not give a lattice")
    integer = value is not None and _is_integer(value)
    odd = integer and value.numerator % 2 == 1
    return CaseFlags(
        beta1_trivial=odd,
        gamma1_trivial=odd,
        beta1gamma1_trivial=integer,
        beta1gamma1inv_trivial=True,
    )


def classify_g1(r: Union[str, int, Fraction]) -> CaseFlags:
    """g1; ``r`` is b in units of π/2."""
    value = _parse_rational(r, "g1")
    integer = value is not None and _is_integer(value)
    even = integer and value.numerator % 2 == 0
    return CaseFlags(
        beta1_trivial=even,
        gamma1_trivial=even,
        beta1gamma1_trivial=integer,
        beta1gamma1inv_trivial=True,
    )


def classify_g2_alpha0(x3: str) -> CaseFlags:
    token = x3.strip().lower().replace("π", "pi")
    if token not in X3_VALUES:
        raise InvalidCaseException("g2", f"x3 must be one of {', '.join(X3_VALUES)}")
    return CaseFlags(beta1gamma1_trivial=True, beta1gamma1inv_trivial=token == "pi/2")


def g1_case(r) -> str:
    return {"vii": "i", "vi": "ii", "iv": "iii"}[flags_to_case(classify_g1(r))]


def g2_case(q) -> str:
    return {"vii": "odd", "vi": "even", "iv": "generic"}[flags_to_case(classify_g2(q))]


# -- presets --------------------------------------------------------------


def subgroup_from_flags(flags: CaseFlags) -> TrivialitySubgroup:
    """Lift the (β₁, γ₁) subgroup to ℤ⁴ and add β₁β₂ = γ₁γ₂ = 1."""
    group = TrivialitySubgroup(4, [(1, 1, 0, 0), (0, 0, 1, 1)])
    for s, t in flags.subgroup().generators():
        group.add_vector((s, 0, t, 0))
    return group


def splitting_data(c1: GaussianRational, flags: CaseFlags, family: str, case: str) -> SplittingData:
    c2 = -c1
    data = SplittingData(
        n=1,
        m=2,
        b_factors=(Character.holomorphic([c1]), Character.holomorphic([c2])),
        bbar_factors=(
            Character.antiholomorphic([c1.conjugate()]),
            Character.antiholomorphic([c2.conjugate()]),
        ),
        triviality=subgroup_from_flags(flags),
        family=family,
        case=case,
        t=-c1 if c1 else None,
    )
    check_genericity(data, c1)
    return data


def check_genericity(data: SplittingData, c: GaussianRational) -> None:
    """Every multiplier coefficient is k·c and vanishes exactly when k = 0."""
    for generator in data.generators():
        s = generator.weights
        k = (s[0] - s[1]) + (s[2] - s[3])
        expected = c * k
        actual = generator.label.lam[0]
        if actual != expected or (c and bool(actual) != bool(k)):
            raise InternalInconsistencyException(
                f"substitution collapses the multiplier of {generator.label}"
            )


def preset(family: str, token: Union[str, CaseFlags, None] = None, **params) -> SplittingData:
    """Splitting data for a catalogue case or for explicit lattice parameters.

    ``token`` is a case token (``"v"``, ``"odd"``, ...) or precomputed flags.
    Keyword parameters ``A``/``n``/``nprime`` (g8), ``q`` or ``x3`` (g2) and
    ``r`` (g1) classify the lattice first.
    """
    key = FAMILY_ALIASES.get(family)
    if key is None:
        raise InvalidCaseException(family, error_code=ErrorCode.CAS001)

    if key == "g8":
        return _preset_g8(token, params)
    if key == "g1":
        return _preset_g1(token, params)
    return _preset_g2(family, token, params)


def _preset_g8(token, params) -> SplittingData:
    if isinstance(token, CaseFlags):
        case = flags_to_case(token)
    elif token is not None:
        case = str(token).strip().lower()
        if case not in G8_SUBGROUPS:
            raise InvalidCaseException("g8", f"unknown case {token!r}, expected one of {', '.join(G8_CASES)}")
    elif {"A", "n", "nprime"} <= params.keys():
        A = GaussianRational.coerce(params["A"])
        case = flags_to_case(classify_g8(A, int(params["n"]), int(params["nprime"])))
        c1 = _g8_constant(A)
        return splitting_data(c1, _flags_for("g8", case), "g8", case)
    else:
        raise InvalidCaseException("g8", "give a case token or A, n and n'")
    c1 = C1["g8_v"] if case == "v" else C1["g8"]
    return splitting_data(c1, _flags_for("g8", case), "g8", case)


def _g8_constant(A: GaussianRational) -> GaussianRational:
    """c₁ = A + Ā − 2i, from β₁ω¹ = e^{(A+Ā−2i)z₃}dz₁."""
    return A + A.conjugate() - GaussianRational(0, 2)


def _preset_g1(token, params) -> SplittingData:
    if isinstance(token, CaseFlags):
        case = {"vii": "i", "vi": "ii", "iv": "iii"}.get(flags_to_case(token))
        if case is None:
            raise InvalidCaseException("g1", "flags do not describe a g1 lattice")
    elif token is not None:
        case = str(token).strip().lower()
        if case not in G1_CASES:
            raise InvalidCaseException("g1", f"unknown case {token!r}, expected i, ii or iii")
    elif "r" in params:
        case = g1_case(params["r"])
    else:
        raise InvalidCaseException("g1", "give a case token or r")
    return splitting_data(C1["g1"], _flags_for("g8", G1_TO_G8[case]), "g1", case)


def _preset_g2(family, token, params) -> SplittingData:
    if isinstance(token, CaseFlags):
        target = flags_to_case(token)
        alpha0 = family == "g2_alpha0"
        options = {"vi": "alpha0-pi2", "v": "alpha0-other"} if alpha0 else {
            "vii": "odd",
            "vi": "even",
            "iv": "generic",
        }
        case = options.get(target)
        if case is None:
            raise InvalidCaseException("g2", "flags do not describe a g2 lattice")
    elif token is not None:
        case = str(token).strip().lower()
        if case not in G2_CASES:
            raise InvalidCaseException("g2", f"unknown case {token!r}, expected one of {', '.join(G2_CASES)}")
    elif "x3" in params:
        flags = classify_g2_alpha0(str(params["x3"]))
        case = "alpha0-pi2" if flags.beta1gamma1inv_trivial else "alpha0-other"
    elif "q" in params:
        case = g2_case(params["q"])
    else:
        raise InvalidCaseException("g2", "give a case token, q or x3")
    c1 = C1["g2_alpha0"] if case.startswith("alpha0") else C1["g2_alpha_pos"]
    return splitting_data(c1, _flags_for("g8", G2_TO_G8[case]), "g2", case)


def _flags_for(family: str, case: str) -> CaseFlags:
    return CaseFlags.from_subgroup(TrivialitySubgroup(2, G8_SUBGROUPS[case]))


@dataclass(frozen=True)
class CatalogueCase:
    family: str
    case: str
    ddbar: bool

    @property
    def key(self) -> str:
        return f"{self.family}-{self.case}"

    def data(self) -> SplittingData:
        return preset(self.family, self.case)


CATALOGUE: tuple[CatalogueCase, ...] = (
    CatalogueCase("g1", "i", False),
    CatalogueCase("g1", "ii", False),
    CatalogueCase("g1", "iii", True),
    CatalogueCase("g2", "alpha0-pi2", True),
    CatalogueCase("g2", "alpha0-other", True),
    CatalogueCase("g2", "odd", False),
    CatalogueCase("g2", "even", False),
    CatalogueCase("g2", "generic", True),
    CatalogueCase("g8", "i", True),
    CatalogueCase("g8", "ii", False),
    CatalogueCase("g8", "iii", False),
    CatalogueCase("g8", "iv", True),
    CatalogueCase("g8", "v", False),
    CatalogueCase("g8", "vi", False),
    CatalogueCase("g8", "vii", False),
)


def catalogue_case(family: str, case: str) -> CatalogueCase:
    key = FAMILY_ALIASES.get(family, family)
    for entry in CATALOGUE:
        if entry.family == key and entry.case == case:
            return entry
    raise InvalidCaseException(family, f"no catalogue case {case!r}")
