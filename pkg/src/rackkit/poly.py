"""Two-variable polynomial invariants of finite racks.

For each element x and depth d two counts are tracked:

* column count col[d][x]: how many y satisfy y ▷ x ... ▷ x = y (d copies),
  i.e. the number of fixed points of the d-th power of x's column action;
* row count row[d][x]: how many y satisfy x ▷ y ... ▷ y = x (d copies).

The rack polynomial at depths (m, n) sums one monomial s^e t^f per element.
Two published conventions disagree on which count feeds which variable, so
the convention is an explicit argument everywhere:

* "def" (default): e = row[m][x], f = col[n][x];
* "prop3": e = col[m][x], f = row[n][x].
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import RackError, RackTable

__all__ = [
    "CONVENTIONS",
    "ExponentProfile",
    "TwoVarPoly",
    "enumerate_subracks",
    "exponent_profile",
    "format_monomial",
    "is_subrack",
    "rack_polynomial",
    "subrack_polynomial",
]

CONVENTIONS = ("def", "prop3")


def _check_convention(convention: str) -> None:
    if convention not in CONVENTIONS:
        raise RackError(
            f"unknown convention {convention!r}; expected one of {CONVENTIONS}")


def format_monomial(coeff: int, factors: Iterable[tuple[str, object]]) -> str:
    """Render ``coeff * var1^exp1 * ...`` with unit parts elided.

    Exponent 0 drops the factor, exponent 1 drops the caret, string
    exponents are wrapped in braces.  A unit coefficient is dropped unless
    nothing else remains.
    """
    parts: list[str] = []
    for var, exp in factors:
        if isinstance(exp, str):
            parts.append(f"{var}^{{{exp}}}")
        elif exp == 0:
            continue
        elif exp == 1:
            parts.append(var)
        else:
            parts.append(f"{var}^{exp}")
    if coeff != 1 or not parts:
        parts.insert(0, str(coeff))
    return "*".join(parts)


@dataclass(frozen=True)
class TwoVarPoly:
    """Polynomial in s and t with integer coefficients.

    Terms are (s_exp, t_exp, coeff), kept sorted ascending by exponent pair
    with no zero coefficients and no duplicate exponent pairs, so equal
    polynomials compare equal as dataclasses.
    """

    terms: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        keys = [(s, t) for s, t, _ in self.terms]
        if keys != sorted(keys):
            raise ValueError("terms must be sorted by (s_exp, t_exp)")
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate exponent pair")
        for s, t, c in self.terms:
            if s < 0 or t < 0:
                raise ValueError(f"negative exponent in term ({s}, {t}, {c})")
            if c == 0:
                raise ValueError("zero coefficient term")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "TwoVarPoly":
        """Sum of one monomial s^a t^b per pair (a, b)."""
        counts = Counter(pairs)
        return cls(tuple((s, t, c) for (s, t), c in sorted(counts.items())))

    @classmethod
    def from_dict(cls, coeffs: Mapping[tuple[int, int], int]) -> "TwoVarPoly":
        return cls(tuple((s, t, c) for (s, t), c in sorted(coeffs.items()) if c != 0))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(s, t): c for s, t, c in self.terms}

    @property
    def coefficient_sum(self) -> int:
        return sum(c for _, _, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            format_monomial(c, [("s", s), ("t", t)]) for s, t, c in self.terms)


def _iterated_fix_counts(table: RackTable,
                         depth: int) -> tuple[dict[int, tuple[int, ...]],
                                              dict[int, tuple[int, ...]]]:
    """Column and row counts for every element at every depth 0..depth.

    Returns (col, row) where col[d][x-1] counts fixed points of the d-th
    power of x's column and row[d][x-1] counts y with x ▷ y^(d) = x.
    """
    table.require_rack()
    n = table.n
    base = [tuple(table.entries[i][j] for i in range(n)) for j in range(n)]
    col: dict[int, tuple[int, ...]] = {}
    row: dict[int, tuple[int, ...]] = {}
    # current[j] is the j-th column action iterated d times, as an image tuple
    current = [tuple(range(1, n + 1))] * n
    for d in range(depth + 1):
        col[d] = tuple(
            sum(1 for i in range(n) if current[x][i] == i + 1)
            for x in range(n))
        row[d] = tuple(
            sum(1 for j in range(n) if current[j][x] == x + 1)
            for x in range(n))
        if d < depth:
            current = [tuple(base[j][v - 1] for v in cur)
                       for j, cur in enumerate(current)]
    return col, row


@dataclass(frozen=True)
class ExponentProfile:
    """Per-element count pairs (col[m][x], row[n][x]) at depths (m, n)."""

    m: int
    n: int
    pairs: tuple[tuple[int, int], ...]

    def pair(self, x: int) -> tuple[int, int]:
        return self.pairs[x - 1]


def _check_depths(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise RackError(f"depths must be at least 1, got ({m}, {n})")


def exponent_profile(table: RackTable, m: int, n: int) -> ExponentProfile:
    _check_depths(m, n)
    col, row = _iterated_fix_counts(table, max(m, n))
    pairs = tuple(zip(col[m], row[n]))
    return ExponentProfile(m, n, pairs)


def _convention_pairs(col: Mapping[int, tuple[int, ...]],
                      row: Mapping[int, tuple[int, ...]],
                      m: int, n: int, convention: str) -> list[tuple[int, int]]:
    if convention == "def":
        return list(zip(row[m], col[n]))
    return list(zip(col[m], row[n]))


def rack_polynomial(table: RackTable, m: int, n: int,
                    convention: str = "def") -> TwoVarPoly:
    """Two-variable polynomial at depths (m, n); see the module docstring."""
    _check_convention(convention)
    _check_depths(m, n)
    col, row = _iterated_fix_counts(table, max(m, n))
    return TwoVarPoly.from_pairs(_convention_pairs(col, row, m, n, convention))


def closure(table: RackTable, seed: Iterable[int]) -> tuple[int, ...]:
    """Smallest ▷-closed subset containing the seed, as a sorted tuple."""
    table.require_rack()
    current = set(int(v) for v in seed)
    for v in current:
        table._check_element(v)
    while True:
        new = {table.op(x, y) for x in current for y in current} - current
        if not new:
            return tuple(sorted(current))
        current |= new


def is_subrack(table: RackTable, subset: Iterable[int]) -> bool:
    """Whether the subset is closed under the operation (nonempty required)."""
    table.require_rack()
    elems = set(int(v) for v in subset)
    if not elems:
        return False
    for v in elems:
        table._check_element(v)
    return all(table.op(x, y) in elems for x in elems for y in elems)


def enumerate_subracks(table: RackTable) -> tuple[tuple[int, ...], ...]:
    """All ▷-closed nonempty subsets, sorted by size then lexicographically.

    Every closed subset is a union of singleton closures and is reached by
    repeatedly joining two known closed sets and closing, so saturating
    that join operation from the singleton closures finds them all.
    """
    table.require_rack()
    atoms = {closure(table, (x,)) for x in table.elements}
    found = set(atoms)
    frontier = list(atoms)
    while frontier:
        nxt = []
        for a in frontier:
            for b in found.copy():
                joined = closure(table, set(a) | set(b))
                if joined not in found:
                    found.add(joined)
                    nxt.append(joined)
        frontier = nxt
    return tuple(sorted(found, key=lambda s: (len(s), s)))


def subrack_polynomial(table: RackTable, subset: Iterable[int], m: int, n: int,
                       convention: str = "def") -> TwoVarPoly:
    """Rack polynomial terms of the ambient table restricted to a subrack.

    Counts still range over the whole ambient rack; only the outer sum is
    restricted to the subset.
    """
    _check_convention(convention)
    _check_depths(m, n)
    table.require_rack()
    elems = sorted(set(int(v) for v in subset))
    if not elems:
        raise RackError("subset is empty")
    for v in elems:
        table._check_element(v)
    for x in elems:
        for y in elems:
            p = table.op(x, y)
            if p not in elems:
                raise RackError(f"not a subrack: {x}▷{y}={p} escapes the subset")
    col, row = _iterated_fix_counts(table, max(m, n))
    pairs = _convention_pairs(col, row, m, n, convention)
    return TwoVarPoly.from_pairs(pairs[x - 1] for x in elems)
