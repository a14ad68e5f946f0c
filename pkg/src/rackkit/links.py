"""Oriented link diagrams, rack colorings, and framed counting invariants.

A diagram is a set of crossings over numbered arcs.  Arcs follow the usual
convention: a strand is cut at each undercrossing, so a crossing names the
arc passing over, the arc entering underneath, and the arc leaving
underneath.  A closed component that never passes under anything is a
single free arc.  Seams are bookkeeping joints produced when a twist is
added to a free loop; they glue two arcs of the same strand and force
equal colors.  Parsing never produces seams.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping, Sequence

from .core import RackTable, rack_rank
from .poly import TwoVarPoly, _check_convention, closure, subrack_polynomial

__all__ = [
    "Crossing",
    "DiagramError",
    "DiagramFormatError",
    "EnhancedInvariant",
    "LinkDiagram",
    "add_kinks",
    "components_and_writhe",
    "counting_polynomial_string",
    "enhanced_invariant",
    "enumerate_colorings",
    "image_subrack",
    "parse_diagram",
    "rack_counting",
]


class DiagramError(ValueError):
    """Domain error raised by diagram operations."""


class DiagramFormatError(DiagramError):
    """Malformed diagram text."""


@dataclass(frozen=True)
class Crossing:
    """One crossing: ``under_in`` passes under ``over`` and leaves as ``under_out``."""

    sign: int
    over: int
    under_in: int
    under_out: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise DiagramError(f"sign must be 1 or -1, got {self.sign!r}")
        for name in ("over", "under_in", "under_out"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise DiagramError(f"{name} must be a positive integer, got {v!r}")


@dataclass(frozen=True)
class LinkDiagram:
    """Validated collection of crossings, free loops, and seams.

    Every arc that takes part in a strand (as an under-arc or a seam
    endpoint) must terminate exactly once and originate exactly once, so
    strands close up into loops.  Over references may point at strand arcs
    or at free arcs, nothing else.
    """

    crossings: tuple[Crossing, ...]
    free_arcs: tuple[int, ...] = ()
    seams: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "crossings", tuple(self.crossings))
        free = tuple(int(a) for a in self.free_arcs)
        object.__setattr__(self, "free_arcs", free)
        seams = tuple((int(a), int(b)) for a, b in self.seams)
        object.__setattr__(self, "seams", seams)

        for a in free:
            if a < 1:
                raise DiagramError(f"free arc ids must be positive, got {a}")
        if len(set(free)) != len(free):
            raise DiagramError("duplicate free arc")
        term: dict[int, int] = {}
        orig: dict[int, int] = {}
        for cr in self.crossings:
            term[cr.under_in] = term.get(cr.under_in, 0) + 1
            orig[cr.under_out] = orig.get(cr.under_out, 0) + 1
        for a, b in seams:
            if a < 1 or b < 1:
                raise DiagramError("seam arc ids must be positive")
            term[a] = term.get(a, 0) + 1
            orig[b] = orig.get(b, 0) + 1
        covered = set(term) | set(orig)
        for a in sorted(covered):
            t, o = term.get(a, 0), orig.get(a, 0)
            if t != 1 or o != 1:
                raise DiagramError(
                    f"arc {a} has {t} terminations and {o} originations; "
                    f"each strand arc needs exactly one of each")
        for a in free:
            if a in covered:
                raise DiagramError(f"free arc {a} appears in a crossing or seam")
        known = covered | set(free)
        for cr in self.crossings:
            if cr.over not in known:
                raise DiagramError(f"unknown arc reference: {cr.over}")

    @cached_property
    def arcs(self) -> tuple[int, ...]:
        ids = set(self.free_arcs)
        for cr in self.crossings:
            ids.update((cr.over, cr.under_in, cr.under_out))
        for a, b in self.seams:
            ids.update((a, b))
        return tuple(sorted(ids))

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Arcs grouped by strand, each group sorted, groups ordered by least arc."""
        parent = {a: a for a in self.arcs}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> None:
            parent[find(x)] = find(y)

        for cr in self.crossings:
            union(cr.under_in, cr.under_out)
        for a, b in self.seams:
            union(a, b)
        groups: dict[int, list[int]] = {}
        for a in self.arcs:
            groups.setdefault(find(a), []).append(a)
        return tuple(sorted(tuple(sorted(g)) for g in groups.values()))


def parse_diagram(text: str) -> LinkDiagram:
    """Read a diagram from JSON with keys ``crossings`` and ``free_arcs``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise DiagramFormatError("top level must be an object")
    extra = set(data) - {"crossings", "free_arcs"}
    if extra:
        raise DiagramFormatError(f"unknown keys: {sorted(extra)}")
    raw_crossings = data.get("crossings", [])
    if not isinstance(raw_crossings, list):
        raise DiagramFormatError("crossings must be a list")
    fields = {"sign", "over", "under_in", "under_out"}
    crossings = []
    for i, obj in enumerate(raw_crossings):
        if not isinstance(obj, dict):
            raise DiagramFormatError(f"crossing {i} must be an object")
        if set(obj) != fields:
            raise DiagramFormatError(
                f"crossing {i} must have exactly the keys "
                f"sign, over, under_in, under_out")
        for key in fields:
            v = obj[key]
            if isinstance(v, bool) or not isinstance(v, int):
                raise DiagramFormatError(f"crossing {i}: {key} must be an integer")
        crossings.append(Crossing(obj["sign"], obj["over"],
                                  obj["under_in"], obj["under_out"]))
    raw_free = data.get("free_arcs", [])
    if not isinstance(raw_free, list):
        raise DiagramFormatError("free_arcs must be a list")
    for v in raw_free:
        if isinstance(v, bool) or not isinstance(v, int):
            raise DiagramFormatError(f"free_arcs entry {v!r} must be an integer")
    return LinkDiagram(tuple(crossings), tuple(raw_free))


def components_and_writhe(
        diagram: LinkDiagram) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Components plus each component's self-writhe.

    A crossing counts toward the self-writhe only when its over arc and its
    under arcs belong to the same component.
    """
    comps = diagram.components
    comp_of = {a: i for i, comp in enumerate(comps) for a in comp}
    writhes = [0] * len(comps)
    for cr in diagram.crossings:
        if comp_of[cr.over] == comp_of[cr.under_in]:
            writhes[comp_of[cr.under_in]] += cr.sign
    return comps, tuple(writhes)


def add_kinks(diagram: LinkDiagram, counts: Sequence[int]) -> LinkDiagram:
    """Insert positive twists, counts[i] of them on the i-th component.

    Each twist is anchored at the component's least arc: the anchor now
    passes under itself first and continues as a fresh arc, and whatever
    used to consume the anchor consumes the fresh arc instead.  A free
    loop's first twist has no consumer to redirect, so the fresh arc is
    seamed back onto the anchor.
    """
    comps = diagram.components
    if len(counts) != len(comps):
        raise DiagramError(
            f"expected {len(comps)} kink counts, got {len(counts)}")
    crossings = list(diagram.crossings)
    free = set(diagram.free_arcs)
    seams = list(diagram.seams)
    next_arc = max(diagram.arcs, default=0) + 1
    for comp, k in zip(comps, counts):
        if k < 0:
            raise DiagramError(f"kink count must be nonnegative, got {k}")
        anchor = comp[0]
        for _ in range(k):
            fresh = next_arc
            next_arc += 1
            redirected = False
            for idx, cr in enumerate(crossings):
                if cr.under_in == anchor:
                    crossings[idx] = Crossing(cr.sign, cr.over, fresh, cr.under_out)
                    redirected = True
                    break
            if not redirected:
                for idx, (src, dst) in enumerate(seams):
                    if src == anchor:
                        seams[idx] = (fresh, dst)
                        redirected = True
                        break
            if not redirected:
                seams.append((fresh, anchor))
                free.discard(anchor)
            crossings.append(Crossing(1, anchor, anchor, fresh))
    return LinkDiagram(tuple(crossings), tuple(sorted(free)), tuple(seams))


def enumerate_colorings(diagram: LinkDiagram,
                        table: RackTable) -> tuple[dict[int, int], ...]:
    """All rack colorings of the diagram's arcs.

    At a positive crossing the outgoing under-arc carries under_in ▷ over;
    at a negative crossing the inverse operation applies; seamed arcs match.
    Constraint propagation runs to a fixpoint between branchings on the
    lowest-numbered uncolored arc.
    """
    table.require_rack()
    arcs = diagram.arcs
    crossings = diagram.crossings
    seams = diagram.seams

    def propagate(colors: dict[int, int]) -> bool:
        changed = True
        while changed:
            changed = False
            for cr in crossings:
                ci = colors.get(cr.under_in)
                co = colors.get(cr.over)
                cu = colors.get(cr.under_out)
                if co is None:
                    continue
                if ci is not None:
                    out = (table.op(ci, co) if cr.sign == 1
                           else table.op_inv(ci, co))
                    if cu is None:
                        colors[cr.under_out] = out
                        changed = True
                    elif cu != out:
                        return False
                elif cu is not None:
                    inn = (table.op_inv(cu, co) if cr.sign == 1
                           else table.op(cu, co))
                    colors[cr.under_in] = inn
                    changed = True
            for a, b in seams:
                ca, cb = colors.get(a), colors.get(b)
                if ca is not None and cb is None:
                    colors[b] = ca
                    changed = True
                elif cb is not None and ca is None:
                    colors[a] = cb
                    changed = True
                elif ca is not None and ca != cb:
                    return False
        return True

    results: list[dict[int, int]] = []

    def extend(colors: dict[int, int]) -> None:
        if not propagate(colors):
            return
        uncolored = [a for a in arcs if a not in colors]
        if not uncolored:
            results.append(colors)
            return
        branch = uncolored[0]
        for v in table.elements:
            nxt = dict(colors)
            nxt[branch] = v
            extend(nxt)

    extend({})
    results.sort(key=lambda c: tuple(c[a] for a in arcs))
    return tuple(results)


def image_subrack(table: RackTable,
                  coloring: Mapping[int, int]) -> tuple[int, ...]:
    """Closure of the set of colors a coloring actually uses."""
    used = set(coloring.values())
    if not used:
        return ()
    return closure(table, used)


def counting_polynomial_string(per_class: Mapping[tuple[int, ...], int]) -> str:
    """Render per-framing-class counts as a polynomial in q1..qc."""
    from .poly import format_monomial
    parts = []
    for label, count in sorted(per_class.items()):
        if count == 0:
            continue
        factors = [(f"q{i + 1}", e) for i, e in enumerate(label)]
        parts.append(format_monomial(count, factors))
    return " + ".join(parts) if parts else "0"


def rack_counting(diagram: LinkDiagram,
                  table: RackTable) -> tuple[int, dict[tuple[int, ...], int]]:
    """Coloring counts over one full framing sweep.

    The diagram is retwisted with every kink vector in {0..N-1}^c, N being
    the order of the diagonal map; each count lands in the framing class
    (self_writhe + kinks) mod N, componentwise.  Returns the grand total
    and the per-class counts.
    """
    table.require_rack()
    big_n = rack_rank(table)
    comps, writhes = components_and_writhe(diagram)
    c = len(comps)
    per_class: dict[tuple[int, ...], int] = {}
    total = 0
    for d in product(range(big_n), repeat=c):
        kinked = add_kinks(diagram, d)
        count = len(enumerate_colorings(kinked, table))
        label = tuple((writhes[i] + d[i]) % big_n for i in range(c))
        per_class[label] = per_class.get(label, 0) + count
        total += count
    return total, dict(sorted(per_class.items()))


@dataclass(frozen=True)
class EnhancedInvariant:
    """Framing-class coloring counts refined by image subrack polynomials.

    ``pairs`` holds (framing label, subrack polynomial of the coloring
    image, multiplicity) and refines the plain counts; dropping the labels
    gives the unframed refinement, dropping the polynomials gives the
    counting polynomial back.
    """

    m: int
    n: int
    convention: str
    rack_rank: int
    component_count: int
    pairs: tuple[tuple[tuple[int, ...], TwoVarPoly, int], ...]
    image_multiplicities: tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]

    @property
    def total(self) -> int:
        return sum(mult for _, _, mult in self.pairs)

    def class_counts(self) -> dict[tuple[int, ...], int]:
        # the framing sweep reaches every label vector, so empty classes
        # are reported with an explicit zero
        out = {
            label: 0
            for label in product(range(self.rack_rank), repeat=self.component_count)
        }
        for label, _, mult in self.pairs:
            out[label] += mult
        return dict(sorted(out.items()))

    def counting_string(self) -> str:
        return counting_polynomial_string(self.class_counts())

    def enhanced_string(self, with_framing: bool = True) -> str:
        from .poly import format_monomial
        if with_framing:
            parts = [
                format_monomial(
                    mult,
                    [(f"q{i + 1}", e) for i, e in enumerate(label)]
                    + [("z", str(poly))])
                for label, poly, mult in self.pairs]
            return " + ".join(parts) if parts else "0"
        agg: dict[str, int] = {}
        for _, poly, mult in self.pairs:
            key = str(poly)
            agg[key] = agg.get(key, 0) + mult
        parts = [format_monomial(mult, [("z", key)])
                 for key, mult in sorted(agg.items())]
        return " + ".join(parts) if parts else "0"


def enhanced_invariant(diagram: LinkDiagram, table: RackTable,
                       m: int = 1, n: int = 1,
                       convention: str = "def") -> EnhancedInvariant:
    """Sweep framings as in rack_counting, recording each coloring's image.

    Every coloring contributes the two-variable polynomial of its image
    subrack (counts taken in the ambient rack) tagged with its framing
    class.
    """
    _check_convention(convention)
    table.require_rack()
    big_n = rack_rank(table)
    comps, writhes = components_and_writhe(diagram)
    c = len(comps)
    poly_cache: dict[tuple[int, ...], TwoVarPoly] = {}
    pair_counts: dict[tuple[tuple[int, ...], TwoVarPoly], int] = {}
    image_counts: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    for d in product(range(big_n), repeat=c):
        kinked = add_kinks(diagram, d)
        label = tuple((writhes[i] + d[i]) % big_n for i in range(c))
        for coloring in enumerate_colorings(kinked, table):
            image = image_subrack(table, coloring)
            poly = poly_cache.get(image)
            if poly is None:
                if image:
                    poly = subrack_polynomial(table, image, m, n, convention)
                else:
                    poly = TwoVarPoly(())
                poly_cache[image] = poly
            pair_counts[(label, poly)] = pair_counts.get((label, poly), 0) + 1
            image_counts[(label, image)] = image_counts.get((label, image), 0) + 1
    pairs = tuple(sorted(
        ((label, poly, mult) for (label, poly), mult in pair_counts.items()),
        key=lambda item: (item[0], str(item[1]))))
    images = tuple(sorted(
        (label, image, mult) for (label, image), mult in image_counts.items()))
    return EnhancedInvariant(m, n, convention, big_n, c, pairs, images)
