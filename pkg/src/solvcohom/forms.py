"""
Exterior-algebra bookkeeping for wedge monomials.

A basis form is ``f · dz_I ∧ dz̄_K`` where ``f = exp(Λ·z_base + M·z̄_base)``
and ``I``/``K`` are strictly increasing index tuples. Holomorphic differentials
always precede antiholomorphic ones. The module computes Koszul signs for
merging index sets, the two differentials of a monomial, wedge products,
conjugation, and renders/parses the ``T^{-2}dz_{131̄}`` notation.
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Optional, Union

from sympy.combinatorics import Permutation

from .core.errors import ErrorCode
from .core.exceptions import ParseException
from .scalar import ONE, ZERO, GaussianRational

logger = logging.getLogger(__name__)

IndexSet = tuple[int, ...]

MACRON = "\u0304"


def is_index_set(indices: IndexSet) -> bool:
    return all(a < b for a, b in zip(indices, indices[1:]))


def merge_with_sign(a: IndexSet, b: IndexSet) -> Optional[tuple[IndexSet, int]]:
    """Sorted union of ``a`` and ``b`` with the sign of ``dz_a ∧ dz_b``.

    Returns ``None`` when the sets overlap, since the wedge then vanishes.
    """
    if set(a) & set(b):
        return None
    merged = list(a) + list(b)
    return tuple(sorted(merged)), sort_sign(merged)


def insert_with_sign(k: int, a: IndexSet) -> Optional[tuple[IndexSet, int]]:
    return merge_with_sign((k,), a)


def sort_sign(sequence: list) -> int:
    """Sign of the permutation sorting ``sequence`` (entries must be distinct)."""
    order = sorted(range(len(sequence)), key=sequence.__getitem__)
    if len(order) < 2:
        return 1
    return -1 if Permutation(order).parity() else 1


@dataclass(frozen=True)
class FormLabel:
    """Label of ``exp(Λ·z + M·z̄) dz_hol ∧ dz̄_antihol``.

    ``weights`` records the exponent tuple of the twisting characters and is
    not part of equality.
    """

    lam: tuple[GaussianRational, ...]
    mu: tuple[GaussianRational, ...]
    hol: IndexSet
    antihol: IndexSet
    weights: tuple[int, ...] = field(default=(), compare=False)

    @property
    def bidegree(self) -> tuple[int, int]:
        return (len(self.hol), len(self.antihol))

    @property
    def is_untwisted(self) -> bool:
        return not any(self.lam) and not any(self.mu)

    def sort_key(self) -> tuple:
        return (
            0,
            self.hol,
            self.antihol,
            tuple(x.sort_key() for x in self.lam),
            tuple(x.sort_key() for x in self.mu),
        )

    def conjugate(self) -> tuple["FormLabel", int]:
        """conj(f dz_I dz̄_K) = f̄ dz̄_I dz_K = (−1)^{|I||K|} f̄ dz_K dz̄_I."""
        sign = -1 if (len(self.hol) * len(self.antihol)) % 2 else 1
        label = FormLabel(
            lam=tuple(x.conjugate() for x in self.mu),
            mu=tuple(x.conjugate() for x in self.lam),
            hol=self.antihol,
            antihol=self.hol,
            weights=self.weights,
        )
        return label, sign

    def __str__(self) -> str:
        return render_label(self)


@dataclass(frozen=True)
class SyntheticLabel:
    """Opaque basis label for complexes not built from forms."""

    name: str
    conjugated: bool = False

    def sort_key(self) -> tuple:
        return (1, self.name, self.conjugated)

    def conjugate(self) -> tuple["SyntheticLabel", int]:
        return SyntheticLabel(self.name, not self.conjugated), 1

    def __str__(self) -> str:
        return f"conj({self.name})" if self.conjugated else self.name


Label = Union[FormLabel, SyntheticLabel]


def label_sort_key(label: Label) -> tuple:
    return label.sort_key()


# -- differentials --------------------------------------------------------


def del_terms(
    label: FormLabel, base: IndexSet
) -> list[tuple[GaussianRational, FormLabel]]:
    """∂(f dz_I dz̄_K) = Σ_k Λ_k f dz_{b_k} ∧ dz_I ∧ dz̄_K."""
    terms = []
    for k, coefficient in zip(base, label.lam):
        if not coefficient:
            continue
        merged = insert_with_sign(k, label.hol)
        if merged is None:
            continue
        hol, sign = merged
        terms.append((coefficient * sign, _with_indices(label, hol, label.antihol)))
    return terms


def delbar_terms(
    label: FormLabel, base: IndexSet
) -> list[tuple[GaussianRational, FormLabel]]:
    """∂̄(f dz_I dz̄_K) = Σ_k M_k f (−1)^{|I|} dz_I ∧ dz̄_{b_k} ∧ dz̄_K."""
    crossing = -1 if len(label.hol) % 2 else 1
    terms = []
    for k, coefficient in zip(base, label.mu):
        if not coefficient:
            continue
        merged = insert_with_sign(k, label.antihol)
        if merged is None:
            continue
        antihol, sign = merged
        terms.append(
            (coefficient * (sign * crossing), _with_indices(label, label.hol, antihol))
        )
    return terms


def _with_indices(label: FormLabel, hol: IndexSet, antihol: IndexSet) -> FormLabel:
    return FormLabel(label.lam, label.mu, hol, antihol, label.weights)


def wedge_labels(a: FormLabel, b: FormLabel) -> Optional[tuple[int, FormLabel]]:
    """(f dz_I dz̄_K)∧(g dz_J dz̄_L) = ± fg dz_{I∪J} dz̄_{K∪L}, or None if zero."""
    hol = merge_with_sign(a.hol, b.hol)
    if hol is None:
        return None
    antihol = merge_with_sign(a.antihol, b.antihol)
    if antihol is None:
        return None
    crossing = -1 if (len(a.antihol) * len(b.hol)) % 2 else 1
    weights = ()
    if a.weights and b.weights and len(a.weights) == len(b.weights):
        weights = tuple(x + y for x, y in zip(a.weights, b.weights))
    label = FormLabel(
        lam=tuple(x + y for x, y in zip(a.lam, b.lam)),
        mu=tuple(x + y for x, y in zip(a.mu, b.mu)),
        hol=hol[0],
        antihol=antihol[0],
        weights=weights,
    )
    return crossing * hol[1] * antihol[1], label


# -- rendering ------------------------------------------------------------


@dataclass(frozen=True)
class Notation:
    """How multipliers print: as powers of ``T = exp(t·z_base)``."""

    t: Optional[GaussianRational] = None
    base: IndexSet = (3,)

    def power(self, exponent: GaussianRational, scale: Optional[GaussianRational]):
        if not exponent:
            return 0
        if scale is None or not scale:
            return None
        k = exponent / scale
        if k.im == 0 and k.re.denominator == 1:
            return int(k.re)
        return None


DEFAULT_NOTATION = Notation()


def _power_text(symbol: str, k: int, style: str) -> str:
    if k == 1:
        return symbol
    if style == "ascii":
        return f"{symbol}^{k}"
    return f"{symbol}^{{{k}}}"


def _exponential_text(coefficients, base: IndexSet, bar: bool, style: str) -> str:
    terms = []
    for k, c in zip(base, coefficients):
        if not c:
            continue
        if style == "latex":
            var = f"\\bar{{z}}_{{{k}}}" if bar else f"z_{{{k}}}"
        elif style == "ascii":
            var = f"zb{k}" if bar else f"z{k}"
        else:
            var = f"z{MACRON}{k}" if bar else f"z{k}"
        terms.append(f"({c}){var}")
    body = "+".join(terms)
    return f"e^({body})" if style == "ascii" else f"e^{{{body}}}"


def _multiplier_text(label: FormLabel, notation: Notation, style: str) -> list[str]:
    parts = []
    n = len(label.lam)
    scalar_power = n == 1
    t = notation.t
    t_bar = t.conjugate() if t is not None else None
    k = notation.power(label.lam[0], t) if scalar_power else None
    if any(label.lam):
        if k is None:
            parts.append(_exponential_text(label.lam, notation.base, False, style))
        else:
            parts.append(_power_text("T", k, style))
    k_bar = notation.power(label.mu[0], t_bar) if scalar_power else None
    if any(label.mu):
        symbol = {"latex": "\\bar{T}", "ascii": "Tbar"}.get(style, "T" + MACRON)
        if k_bar is None:
            parts.append(_exponential_text(label.mu, notation.base, True, style))
        else:
            parts.append(_power_text(symbol, k_bar, style))
    return parts


def _indices_text(label: FormLabel, style: str) -> str:
    wide = any(i > 9 for i in label.hol + label.antihol)
    tokens = [str(i) for i in label.hol]
    for i in label.antihol:
        if style == "latex":
            tokens.append(f"\\bar{{{i}}}")
        elif style == "ascii":
            tokens.append(f"{i}b")
        else:
            tokens.append(f"{i}{MACRON}")
    separator = "," if wide or style == "ascii" else ""
    return separator.join(tokens)


def render_label(
    label: Label, notation: Notation = DEFAULT_NOTATION, style: str = "unicode"
) -> str:
    """Render a label as ``T^{-2}dz_{131̄}`` (unicode), ascii or LaTeX."""
    if isinstance(label, SyntheticLabel):
        return str(label)
    parts = _multiplier_text(label, notation, style)
    if label.hol or label.antihol:
        form = f"dz_{{{_indices_text(label, style)}}}"
    else:
        form = "" if parts else "1"
    joiner = "*" if style == "ascii" else " "
    prefix = joiner.join(parts)
    if prefix and form:
        if style == "ascii":
            return f"{prefix}*{form}"
        # "T dz_{32̄}" but "T^{-2}dz_{131̄}"
        return f"{prefix}{form}" if prefix.endswith("}") else f"{prefix} {form}"
    return prefix or form


# -- parsing --------------------------------------------------------------

_FACTOR = re.compile(
    r"(?P<sym>\\bar\{T\}|Tbar|T" + MACRON + r"|T)(?:\^(?:\{(?P<b>[+-]?\d+)\}|(?P<p>[+-]?\d+)))?"
)
_INDEX = re.compile(r"\\bar\{(?P<lb>\d+)\}|(?P<d>\d+)(?P<bar>" + MACRON + r"|b)?")


def parse_monomial(
    text: str, notation: Notation = DEFAULT_NOTATION, dimension: Optional[int] = None
) -> tuple[GaussianRational, FormLabel]:
    """Parse a monomial such as ``T^{-2}dz_{131̄}`` into ``(sign, label)``.

    The sign accounts for a leading minus and for differentials written out
    of canonical order.
    """
    source = text.strip()
    pos = 0
    sign = ONE
    if source.startswith("-"):
        sign, pos = -ONE, 1
    elif source.startswith("+"):
        pos = 1

    t_power = 0
    tbar_power = 0
    hol: list[int] = []
    antihol: list[int] = []
    written: list[tuple[int, int]] = []
    seen_form = False

    def fail(column: int, reason: str):
        return ParseException(
            ErrorCode.PRS002,
            text=text,
            column=column + 1,
            context={"reason": reason},
        )

    while pos < len(source):
        ch = source[pos]
        if ch.isspace() or ch in "*·":
            pos += 1
            continue
        if source.startswith("dz", pos):
            if seen_form:
                raise fail(pos, "differential part given twice")
            seen_form = True
            pos += 2
            if pos >= len(source) or source[pos] != "_":
                raise fail(pos, "expected '_' after dz")
            pos += 1
            if pos < len(source) and source[pos] == "{":
                # \bar{..} inside the braces has its own closing braces
                depth, close = 0, -1
                for j in range(pos, len(source)):
                    if source[j] == "{":
                        depth += 1
                    elif source[j] == "}":
                        depth -= 1
                        if depth == 0:
                            close = j
                            break
                if close < 0:
                    raise fail(pos, "unclosed index braces")
                body, body_start = source[pos + 1 : close], pos + 1
                pos = close + 1
            else:
                match = re.compile(r"\d" + MACRON + r"?").match(source, pos)
                if not match:
                    raise fail(pos, "expected an index")
                body, body_start = match.group(0), pos
                pos = match.end()
            _parse_indices(body, body_start, written, fail)
            continue
        if ch == "1" and not seen_form:
            seen_form = True
            pos += 1
            continue
        match = _FACTOR.match(source, pos)
        if not match:
            raise fail(pos, f"unexpected character {ch!r}")
        exponent = int(match.group("b") or match.group("p") or 1)
        if match.group("sym") == "T":
            t_power += exponent
        else:
            tbar_power += exponent
        pos = match.end()

    if not seen_form and not (t_power or tbar_power):
        raise fail(0, "empty monomial")

    for kind, index in written:
        if dimension is not None and not 1 <= index <= dimension:
            raise ParseException(
                ErrorCode.PRS005,
                text=text,
                context={"index": index, "bound": dimension},
            )
        (antihol if kind else hol).append(index)
    if len(set(hol)) != len(hol) or len(set(antihol)) != len(antihol):
        raise fail(0, "repeated differential, the form vanishes")
    sign = sign * sort_sign(written)

    n = len(notation.base)
    if (t_power or tbar_power) and (notation.t is None or n != 1):
        raise fail(0, "T powers need a notation with a single base coordinate")
    lam = [ZERO] * n
    mu = [ZERO] * n
    if t_power:
        lam[0] = notation.t * t_power
    if tbar_power:
        mu[0] = notation.t.conjugate() * tbar_power
    label = FormLabel(tuple(lam), tuple(mu), tuple(sorted(hol)), tuple(sorted(antihol)))
    return sign, label


def _parse_indices(body: str, offset: int, written: list, fail) -> None:
    items = body.split(",") if "," in body else None
    if items is not None:
        cursor = offset
        for item in items:
            token = item.strip()
            match = re.fullmatch(r"\\bar\{(\d+)\}|(\d+)(" + MACRON + r"|b)?", token)
            if not match:
                raise fail(cursor, f"bad index {token!r}")
            if match.group(1):
                written.append((1, int(match.group(1))))
            else:
                written.append((1 if match.group(3) else 0, int(match.group(2))))
            cursor += len(item) + 1
        return
    pos = 0
    while pos < len(body):
        if body[pos].isspace():
            pos += 1
            continue
        match = _INDEX.match(body, pos)
        if not match:
            raise fail(offset + pos, f"bad index character {body[pos]!r}")
        if match.group("lb"):
            written.append((1, int(match.group("lb"))))
            pos = match.end()
            continue
        # single digits without commas
        digits = match.group("d")
        for j, digit in enumerate(digits):
            last = j == len(digits) - 1
            barred = last and match.group("bar") is not None
            written.append((1 if barred else 0, int(digit)))
        pos = match.end()
