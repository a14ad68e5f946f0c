"""Rack isomorphism testing and polynomial-family comparison."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .core import Permutation, RackError, RackTable, column_order_lcm
from .generators import constant_action
from .poly import (CONVENTIONS, TwoVarPoly, _check_convention,
                   _convention_pairs, _iterated_fix_counts)

__all__ = [
    "ClassificationReport",
    "DistinctTypeCheck",
    "IsoResult",
    "PolyDifference",
    "RpFamilyScan",
    "SameTypeCheck",
    "isomorphic",
    "partitions",
    "permutation_of_type",
    "rp_family_scan",
    "verify_constant_action_classification",
]


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    witness: Permutation | None = None


def _invariant_keys(table: RackTable) -> list[tuple]:
    """Per-element keys preserved by isomorphism, used to prune the search."""
    col, row = _iterated_fix_counts(table, 1)
    keys = []
    for x in table.elements:
        sq = table.op(x, x)
        keys.append((
            table.column(x).cycle_type,
            col[1][x - 1],
            row[1][x - 1],
            table.column(sq).cycle_type,
        ))
    return keys


def _is_morphism(a: RackTable, b: RackTable, images: list[int]) -> bool:
    for x in a.elements:
        fx = images[x - 1]
        for y in a.elements:
            if b.op(fx, images[y - 1]) != images[a.op(x, y) - 1]:
                return False
    return True


def isomorphic(a: RackTable, b: RackTable) -> IsoResult:
    """Search for a bijection carrying one table to the other.

    Candidate images are restricted by cheap isomorphism invariants and
    partial products are checked during the search, but a full morphism
    check still runs at every leaf: a partial check can miss a constraint
    whose product is mapped only later in the assignment order.
    """
    a.require_rack()
    b.require_rack()
    if a.n != b.n:
        return IsoResult(False)
    n = a.n
    keys_a = _invariant_keys(a)
    keys_b = _invariant_keys(b)
    if sorted(keys_a) != sorted(keys_b):
        return IsoResult(False)
    candidates = [
        [y for y in b.elements if keys_b[y - 1] == keys_a[x - 1]]
        for x in a.elements]
    order = sorted(range(1, n + 1), key=lambda x: len(candidates[x - 1]))
    images = [0] * n
    used = [False] * n

    def feasible(x: int) -> bool:
        fx = images[x - 1]
        for y in order:
            fy = images[y - 1]
            if fy == 0:
                continue
            p = images[a.op(x, y) - 1]
            if p and b.op(fx, fy) != p:
                return False
            q = images[a.op(y, x) - 1]
            if q and b.op(fy, fx) != q:
                return False
        return True

    def search(pos: int) -> bool:
        if pos == n:
            return _is_morphism(a, b, images)
        x = order[pos]
        for y in candidates[x - 1]:
            if used[y - 1]:
                continue
            images[x - 1] = y
            used[y - 1] = True
            if feasible(x) and search(pos + 1):
                return True
            images[x - 1] = 0
            used[y - 1] = False
        return False

    if search(0):
        witness = Permutation(tuple(images))
        if not _is_morphism(a, b, images):
            raise RackError("internal error: witness failed verification")
        return IsoResult(True, witness)
    return IsoResult(False)


@dataclass(frozen=True)
class PolyDifference:
    m: int
    n: int
    left: TwoVarPoly
    right: TwoVarPoly


@dataclass(frozen=True)
class RpFamilyScan:
    """Comparison of two racks' polynomials over a grid of depth pairs.

    Depths run over 1..bound in each slot.  When bound covers the period
    of both tables' iterated products (the lcm of all column orders),
    complete_bound is true and an empty scan certifies agreement at every
    depth pair, since counts at depth d only depend on d mod the period.
    """

    bound: int
    complete_bound: bool
    differences: tuple[PolyDifference, ...]

    @property
    def is_empty(self) -> bool:
        return not self.differences

    def first_difference(self) -> PolyDifference | None:
        return self.differences[0] if self.differences else None

    def lines(self) -> list[str]:
        return [f"({d.m},{d.n}): {d.left} != {d.right}"
                for d in self.differences]


def rp_family_scan(a: RackTable, b: RackTable, bound: int | None = None,
                   convention: str = "def",
                   stop_at_first: bool = False) -> RpFamilyScan:
    """Compare polynomials of two racks at all depth pairs up to a bound.

    Pairs are scanned with the second depth outermost, so the reported
    first difference minimizes n before m.  Default bound is the lcm of
    both tables' column orders, which makes the scan a complete
    certificate by periodicity.
    """
    _check_convention(convention)
    a.require_rack()
    b.require_rack()
    period = max(column_order_lcm(a), column_order_lcm(b))
    if bound is None:
        bound = period
    if bound < 1:
        raise RackError(f"bound must be at least 1, got {bound}")
    complete = bound >= period
    col_a, row_a = _iterated_fix_counts(a, bound)
    col_b, row_b = _iterated_fix_counts(b, bound)
    diffs = []
    for n in range(1, bound + 1):
        for m in range(1, bound + 1):
            pa = Counter(_convention_pairs(col_a, row_a, m, n, convention))
            pb = Counter(_convention_pairs(col_b, row_b, m, n, convention))
            if pa != pb:
                diffs.append(PolyDifference(
                    m, n,
                    TwoVarPoly.from_dict(pa),
                    TwoVarPoly.from_dict(pb)))
                if stop_at_first:
                    return RpFamilyScan(bound, complete, tuple(diffs))
    return RpFamilyScan(bound, complete, tuple(diffs))


@lru_cache(maxsize=None)
def partitions(k: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of k as descending tuples, in ascending lex order."""
    if k < 0:
        raise RackError("cannot partition a negative integer")

    def gen(remaining: int, cap: int) -> list[tuple[int, ...]]:
        if remaining == 0:
            return [()]
        out = []
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                out.append((first,) + rest)
        return out

    return tuple(sorted(gen(k, k)))


def permutation_of_type(cycle_type: tuple[int, ...],
                        shuffle_seed: int | None = None) -> Permutation:
    """A permutation with the given cycle type.

    Without a seed, cycles are laid out on consecutive integers; with a
    seed, the result is conjugated by a seeded random relabeling, giving a
    different-looking permutation of the same type deterministically.
    """
    k = sum(cycle_type)
    images = list(range(1, k + 1))
    start = 1
    for length in cycle_type:
        cycle = list(range(start, start + length))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a - 1] = b
        start += length
    perm = Permutation(tuple(images))
    if shuffle_seed is None:
        return perm
    rng = random.Random(shuffle_seed)
    relabel = list(range(1, k + 1))
    rng.shuffle(relabel)
    return perm.conjugated_by(Permutation(tuple(relabel)))


@dataclass(frozen=True)
class SameTypeCheck:
    cycle_type: tuple[int, ...]
    iso: bool
    scan_empty: bool
    scan_bound: int


@dataclass(frozen=True)
class DistinctTypeCheck:
    left_type: tuple[int, ...]
    right_type: tuple[int, ...]
    iso: bool
    first_difference: PolyDifference | None


@dataclass(frozen=True)
class ClassificationReport:
    """Constant-action racks of one size: same type ⇔ isomorphic ⇔ equal polys."""

    k: int
    convention: str
    same_type: tuple[SameTypeCheck, ...]
    distinct_type: tuple[DistinctTypeCheck, ...]

    @property
    def consistent(self) -> bool:
        return (all(c.iso and c.scan_empty for c in self.same_type)
                and all((not c.iso) and c.first_difference is not None
                        for c in self.distinct_type))

    def lines(self) -> list[str]:
        out = []
        for c in self.same_type:
            out.append(
                f"type {c.cycle_type}: isomorphic={c.iso} "
                f"polys_agree_to_{c.scan_bound}={c.scan_empty}")
        for c in self.distinct_type:
            d = c.first_difference
            where = f"({d.m},{d.n})" if d else "nowhere"
            out.append(
                f"types {c.left_type} vs {c.right_type}: isomorphic={c.iso} "
                f"first_poly_difference={where}")
        return out


def verify_constant_action_classification(
        k: int, convention: str = "def") -> ClassificationReport:
    """Check the constant-action classification empirically at size k.

    For each cycle type, one canonical and one relabeled representative
    must be isomorphic with identical polynomial families; for each pair
    of distinct types, the representatives must be non-isomorphic with
    some polynomial difference.
    """
    _check_convention(convention)
    if not 1 <= k <= 9:
        raise RackError(f"size must be between 1 and 9, got {k}")
    types = partitions(k)
    reps = {ct: constant_action(permutation_of_type(ct)) for ct in types}
    same = []
    for index, ct in enumerate(types):
        other = constant_action(
            permutation_of_type(ct, shuffle_seed=k * 1000 + index))
        iso = isomorphic(reps[ct], other).isomorphic
        scan = rp_family_scan(reps[ct], other, convention=convention)
        same.append(SameTypeCheck(ct, iso, scan.is_empty, scan.bound))
    distinct = []
    for i, ct1 in enumerate(types):
        for ct2 in types[i + 1:]:
            iso = isomorphic(reps[ct1], reps[ct2]).isomorphic
            scan = rp_family_scan(reps[ct1], reps[ct2],
                                  convention=convention, stop_at_first=True)
            distinct.append(DistinctTypeCheck(
                ct1, ct2, iso, scan.first_difference()))
    return ClassificationReport(k, convention, tuple(same), tuple(distinct))
