"""Independent brute force reference implementations.

Everything here recomputes results from raw table entries with nested
loops, on purpose; nothing calls the library's counting, closure, or
coloring code.  Expected values frozen into the test suite were produced
by these functions and cross-checked against the library.
"""

from itertools import product


def op(entries, x, y):
    return entries[x - 1][y - 1]


def op_inv(entries, x, y):
    n = len(entries)
    for z in range(1, n + 1):
        if op(entries, z, y) == x:
            return z
    raise ValueError(f"no z with z op {y} = {x}")


def op_iter(entries, x, y, d):
    step = op if d >= 0 else op_inv
    for _ in range(abs(d)):
        x = step(entries, x, y)
    return x


def is_rack(entries):
    n = len(entries)
    for y in range(1, n + 1):
        column = sorted(op(entries, x, y) for x in range(1, n + 1))
        if column != list(range(1, n + 1)):
            return False
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            for z in range(1, n + 1):
                left = op(entries, op(entries, x, y), z)
                right = op(entries, op(entries, x, z), op(entries, y, z))
                if left != right:
                    return False
    return True


def is_quandle(entries):
    n = len(entries)
    return is_rack(entries) and all(op(entries, x, x) == x for x in range(1, n + 1))


def col_count(entries, d, x):
    """How many y return to themselves after d right-products by x."""
    n = len(entries)
    return sum(1 for y in range(1, n + 1) if op_iter(entries, y, x, d) == y)


def row_count(entries, d, x):
    """How many y leave x unchanged after d right-products by y."""
    n = len(entries)
    return sum(1 for y in range(1, n + 1) if op_iter(entries, x, y, d) == x)


def poly_terms(entries, m, n_depth, convention, subset=None):
    """Exponent-pair multiset of the rack polynomial as a dict."""
    n = len(entries)
    elements = subset if subset is not None else range(1, n + 1)
    terms = {}
    for x in elements:
        if convention == "def":
            key = (row_count(entries, m, x), col_count(entries, n_depth, x))
        else:
            key = (col_count(entries, m, x), row_count(entries, n_depth, x))
        terms[key] = terms.get(key, 0) + 1
    return terms


def closure(entries, seed):
    current = set(seed)
    while True:
        grown = {op(entries, x, y) for x in current for y in current}
        if grown <= current:
            return tuple(sorted(current))
        current |= grown


def subracks(entries):
    """Every nonempty closed subset, found by checking all 2^n subsets."""
    n = len(entries)
    out = []
    for mask in range(1, 1 << n):
        subset = [i + 1 for i in range(n) if mask >> i & 1]
        if all(op(entries, x, y) in subset for x in subset for y in subset):
            out.append(tuple(subset))
    return sorted(out, key=lambda s: (len(s), s))


def colorings(entries, arcs, crossings, seams=()):
    """Check every assignment of colors to arcs against every rule.

    crossings are (sign, over, under_in, under_out) tuples, seams are
    (a, b) color-equality pairs.
    """
    n = len(entries)
    arcs = sorted(arcs)
    found = []
    for assignment in product(range(1, n + 1), repeat=len(arcs)):
        colors = dict(zip(arcs, assignment))
        ok = True
        for sign, over, under_in, under_out in crossings:
            if sign == 1:
                expected = op(entries, colors[under_in], colors[over])
            else:
                expected = op_inv(entries, colors[under_in], colors[over])
            if colors[under_out] != expected:
                ok = False
                break
        if ok and any(colors[a] != colors[b] for a, b in seams):
            ok = False
        if ok:
            found.append(colors)
    return found


def diagonal_order(entries):
    n = len(entries)
    images = [op(entries, x, x) for x in range(1, n + 1)]
    order = 1
    current = list(images)
    while current != list(range(1, n + 1)):
        current = [images[v - 1] for v in current]
        order += 1
    return order
