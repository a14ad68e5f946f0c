"""Finite racks and quandles as explicit operation tables.

A table of size n stores the products of {1..n}: entry (x, y) is x ▷ y.
The first rack axiom makes every column of the table a permutation, the
second is right self-distributivity.  Parsing and validation are kept
separate so that broken tables can still be loaded and reported on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "AxiomViolation",
    "CongruenceError",
    "NotARackError",
    "Permutation",
    "PropertyReport",
    "RackError",
    "RackTable",
    "TableFormatError",
    "column_order_lcm",
    "diagonal_perm",
    "dual",
    "format_rack_table",
    "operator_equivalence_quotient",
    "parse_rack_table",
    "properties_report",
    "quotient_by",
    "rack_op_iter",
    "rack_rank",
    "validate_rack",
]


class RackError(ValueError):
    """Domain error raised by rack operations."""


class TableFormatError(RackError):
    """Malformed rack table text or entries."""


class NotARackError(RackError):
    """A valid rack was required but some axiom fails."""


class CongruenceError(RackError):
    """A partition fails the congruence condition; carries a witness."""

    def __init__(self, x: int, x_prime: int, y: int, y_prime: int,
                 left: int, right: int):
        self.witness = (x, x_prime, y, y_prime)
        self.products = (left, right)
        super().__init__(
            f"not a congruence: {x}~{x_prime} and {y}~{y_prime}, "
            f"but {x}▷{y}={left} and {x_prime}▷{y_prime}={right} "
            f"fall in different classes")


@dataclass(frozen=True)
class Permutation:
    """Bijection on {1..n}; ``images[i-1]`` is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise ValueError("permutation must act on at least one point")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection on 1..{n}: {images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for cycle in cycles:
            cycle = tuple(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def inverse(self) -> "Permutation":
        images = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            images[y - 1] = x
        return Permutation(tuple(images))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: ``self.compose(other)(x) == self(other(x))``."""
        return Permutation(tuple(self.images[y - 1] for y in other.images))

    def power(self, k: int) -> "Permutation":
        k %= self.order
        result = Permutation.identity(self.n)
        for _ in range(k):
            result = self.compose(result)
        return result

    def conjugated_by(self, tau: "Permutation") -> "Permutation":
        """tau ∘ self ∘ tau⁻¹: the same permutation on relabeled points."""
        inv = tau.inverse()
        return Permutation(tuple(tau(self(inv(x))) for x in range(1, self.n + 1)))

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles including fixed points, each starting at its least element."""
        seen = [False] * self.n
        out = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            x = self(start)
            while x != start:
                cycle.append(x)
                seen[x - 1] = True
                x = self(x)
            out.append(tuple(cycle))
        return tuple(out)

    @cached_property
    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths, largest first; a partition of n."""
        return tuple(sorted((len(c) for c in self.cycles), reverse=True))

    @cached_property
    def order(self) -> int:
        return math.lcm(*self.cycle_type)

    @property
    def fixed_count(self) -> int:
        return sum(1 for x, y in enumerate(self.images, start=1) if x == y)

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images, start=1))


@dataclass(frozen=True)
class AxiomViolation:
    """Concrete witness against one rack axiom.

    axiom "bijectivity": witness (x1, x2, y) with x1 != x2 and x1▷y == x2▷y.
    axiom "distributivity": witness (x, y, z) with (x▷y)▷z != (x▷z)▷(y▷z).
    """

    axiom: str
    witness: tuple[int, int, int]


@dataclass(frozen=True)
class PropertyReport:
    is_rack: bool
    is_quandle: bool
    is_crossed_set: bool
    is_abelian: bool
    is_latin: bool
    axiom_violations: tuple[AxiomViolation, ...] = ()


@dataclass(frozen=True)
class RackTable:
    """Operation table on {1..n}; ``entries[x-1][y-1]`` is x ▷ y.

    Construction checks only shape and entry range, never the rack axioms;
    use validate_rack for those.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n == 0:
            raise TableFormatError("empty table")
        for row in rows:
            if len(row) != n:
                raise TableFormatError(
                    f"expected an {n}x{n} table, got a row of length {len(row)}")
            for v in row:
                if not 1 <= v <= n:
                    raise TableFormatError(f"entry {v} out of range 1..{n}")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def elements(self) -> range:
        return range(1, self.n + 1)

    def _check_element(self, x: int) -> None:
        if not 1 <= x <= self.n:
            raise RackError(f"element {x} out of range 1..{self.n}")

    def op(self, x: int, y: int) -> int:
        self._check_element(x)
        self._check_element(y)
        return self.entries[x - 1][y - 1]

    def op_inv(self, x: int, y: int) -> int:
        """The unique z with z ▷ y = x."""
        self._check_element(x)
        self._check_element(y)
        return self._inverse_columns[y - 1][x - 1]

    @cached_property
    def _array(self) -> np.ndarray:
        arr = np.array(self.entries, dtype=np.int64) - 1
        arr.flags.writeable = False
        return arr

    @cached_property
    def columns(self) -> tuple[Permutation, ...]:
        """Column actions x ↦ x ▷ y, one per y; requires bijective columns."""
        try:
            return tuple(
                Permutation(tuple(self.entries[i][j] for i in range(self.n)))
                for j in range(self.n))
        except ValueError as exc:
            raise NotARackError(f"column is not a bijection: {exc}") from None

    def column(self, y: int) -> Permutation:
        self._check_element(y)
        return self.columns[y - 1]

    @cached_property
    def _inverse_columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c.inverse().images for c in self.columns)

    @cached_property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.n))

    @cached_property
    def report(self) -> PropertyReport:
        return _analyze(self)

    def require_rack(self) -> None:
        report = self.report
        if report.is_rack:
            return
        shown = [f"{v.axiom} fails at {v.witness}"
                 for v in report.axiom_violations[:3]]
        more = len(report.axiom_violations) - 3
        if more > 0:
            shown.append(f"and {more} more violations")
        raise NotARackError("not a rack: " + "; ".join(shown))

    def subtable(self, elements: Iterable[int]) -> "RackTable":
        """Restriction to a ▷-closed subset, relabeled 1..k in sorted order."""
        elems = sorted(set(int(v) for v in elements))
        for v in elems:
            self._check_element(v)
        index = {v: i + 1 for i, v in enumerate(elems)}
        rows = []
        for x in elems:
            row = []
            for y in elems:
                p = self.op(x, y)
                if p not in index:
                    raise RackError(f"not closed: {x}▷{y}={p} escapes the subset")
                row.append(index[p])
            rows.append(tuple(row))
        return RackTable(tuple(rows))

    def to_text(self) -> str:
        lines = [str(self.n)]
        lines.extend(" ".join(str(v) for v in row) for row in self.entries)
        return "\n".join(lines) + "\n"


def _analyze(table: RackTable) -> PropertyReport:
    n = table.n
    a = table._array
    idx = np.arange(n)
    violations: list[AxiomViolation] = []

    columns_ok = bool((np.sort(a, axis=0) == idx[:, None]).all())
    if not columns_ok:
        for j in range(n):
            first: dict[int, int] = {}
            for i in range(n):
                k = int(a[i, j])
                if k in first:
                    violations.append(
                        AxiomViolation("bijectivity", (first[k] + 1, i + 1, j + 1)))
                else:
                    first[k] = i

    # left[x,y,z] = (x▷y)▷z, right[x,y,z] = (x▷z)▷(y▷z)
    left = a[a]
    right = a[a[:, None, :], a[None, :, :]]
    mismatches = np.argwhere(left != right)
    for x, y, z in mismatches:
        violations.append(
            AxiomViolation("distributivity", (int(x) + 1, int(y) + 1, int(z) + 1)))

    is_rack = columns_ok and mismatches.size == 0
    is_quandle = is_rack and bool((np.diag(a) == idx).all())
    is_latin = bool((np.sort(a, axis=1) == idx[None, :]).all())

    fixes_right = a == idx[:, None]  # [x, y] holds iff x ▷ y = x
    is_crossed = is_quandle and bool((fixes_right == fixes_right.T).all())

    is_abelian = False
    if is_rack:
        lhs = a[a[:, :, None, None], a[None, None, :, :]]
        rhs = a[a[:, None, :, None], a[None, :, None, :]]
        is_abelian = bool((lhs == rhs).all())

    return PropertyReport(is_rack, is_quandle, is_crossed, is_abelian,
                          is_latin, tuple(violations))


def parse_rack_table(text: str) -> RackTable:
    """Read the plain text table format.

    First token is n, followed by n*n entries; blank lines and lines
    starting with ``#`` are ignored.
    """
    tokens: list[str] = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens.extend(stripped.split())
    if not tokens:
        raise TableFormatError("empty input")
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise TableFormatError(f"non-integer token {tok!r}") from None
    n = values[0]
    if n < 1:
        raise TableFormatError(f"cardinality must be positive, got {n}")
    body = values[1:]
    if len(body) != n * n:
        raise TableFormatError(
            f"expected {n * n} entries for n={n}, got {len(body)}")
    rows = tuple(tuple(body[i * n:(i + 1) * n]) for i in range(n))
    return RackTable(rows)


def format_rack_table(table: RackTable) -> str:
    return table.to_text()


def validate_rack(table: RackTable) -> PropertyReport:
    """Full axiom and property analysis; never raises on bad tables."""
    return table.report


def properties_report(table: RackTable) -> PropertyReport:
    """Same flags as validate_rack but the table must be a rack."""
    table.require_rack()
    return table.report


def rack_op_iter(table: RackTable, x: int, y: int, i: int) -> int:
    """x ▷ y iterated i times on the right; negative i uses the dual operation.

    The iterate is reduced modulo the order of y's column, so any integer i
    is accepted.
    """
    table.require_rack()
    table._check_element(x)
    return table.column(y).power(i)(x)


def dual(table: RackTable) -> RackTable:
    """The rack with every column action inverted."""
    table.require_rack()
    inv = table._inverse_columns
    rows = tuple(tuple(inv[j][i] for j in range(table.n)) for i in range(table.n))
    return RackTable(rows)


def diagonal_perm(table: RackTable) -> Permutation:
    """The map x ↦ x ▷ x, which is a bijection for racks (checked)."""
    table.require_rack()
    diag = table.diagonal
    if sorted(diag) != list(table.elements):
        raise NotARackError(f"diagonal {diag} is not a bijection")
    return Permutation(diag)


def rack_rank(table: RackTable) -> int:
    """Order of the diagonal map; equals 1 exactly for quandles."""
    return diagonal_perm(table).order


def column_order_lcm(table: RackTable) -> int:
    """lcm of the orders of all column actions; the period of iterated products."""
    table.require_rack()
    return math.lcm(*(c.order for c in table.columns))


def _normalize_partition(n: int,
                         partition: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    blocks = []
    seen: set[int] = set()
    for block in partition:
        b = tuple(sorted(set(int(v) for v in block)))
        if not b:
            raise RackError("partition has an empty block")
        for v in b:
            if not 1 <= v <= n:
                raise RackError(f"element {v} out of range 1..{n}")
            if v in seen:
                raise RackError(f"element {v} appears in two blocks")
            seen.add(v)
        blocks.append(b)
    if len(seen) != n:
        raise RackError(f"partition does not cover 1..{n}")
    return tuple(sorted(blocks))


def quotient_by(table: RackTable,
                partition: Iterable[Iterable[int]]) -> RackTable:
    """Quotient by a congruence; classes are labeled 1..k by least member.

    Raises CongruenceError with a concrete witness when the partition does
    not respect the operation.  Checking the two one-variable conditions is
    enough: x~x' and y~y' chain through x▷y ~ x'▷y ~ x'▷y'.
    """
    table.require_rack()
    blocks = _normalize_partition(table.n, partition)
    cls = {x: i + 1 for i, block in enumerate(blocks) for x in block}
    op = table.op
    for y in table.elements:
        for block in blocks:
            for x, x2 in combinations(block, 2):
                if cls[op(x, y)] != cls[op(x2, y)]:
                    raise CongruenceError(x, x2, y, y, op(x, y), op(x2, y))
    for x in table.elements:
        for block in blocks:
            for y, y2 in combinations(block, 2):
                if cls[op(x, y)] != cls[op(x, y2)]:
                    raise CongruenceError(x, x, y, y2, op(x, y), op(x, y2))
    reps = [b[0] for b in blocks]
    rows = tuple(tuple(cls[op(rx, ry)] for ry in reps) for rx in reps)
    quotient = RackTable(rows)
    quotient.require_rack()
    return quotient


def operator_equivalence_quotient(
        table: RackTable) -> tuple[tuple[tuple[int, ...], ...], RackTable, bool]:
    """Quotient by "acts identically": x ~ y when z ▷ x = z ▷ y for all z.

    Returns (partition, quotient, quotient_is_quandle).  Both the
    congruence property and the quandle claim are checked, not assumed.
    """
    table.require_rack()
    groups: dict[tuple[int, ...], list[int]] = {}
    for y in table.elements:
        key = tuple(table.entries[i][y - 1] for i in range(table.n))
        groups.setdefault(key, []).append(y)
    partition = tuple(sorted(tuple(g) for g in groups.values()))
    quotient = quotient_by(table, partition)
    return partition, quotient, quotient.report.is_quandle
