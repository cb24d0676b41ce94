"""Cartan matrices, root systems, Weyl groups and root-set combinatorics.

Simple roots are numbered in the Bourbaki convention for every family; in
G2 the first simple root is the short one.  Roots are integer coefficient
tuples over the simple roots.  Positive roots are totally ordered by height
and then lexicographically with alpha_1 major, and that order is the one
every sign convention downstream is pinned to.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    ConstructionError,
    DependentRootsError,
    EnumerationTooLargeError,
    InvalidTypeError,
    WeylTooLargeError,
)

Root = tuple[int, ...]

_WEYL_ORDERS = {
    "A": lambda n: _factorial(n + 1),
    "B": lambda n: 2**n * _factorial(n),
    "C": lambda n: 2**n * _factorial(n),
    "D": lambda n: 2 ** (n - 1) * _factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


@dataclass(frozen=True)
class CartanMatrix:
    """A finite-type indecomposable Cartan matrix with symmetrizing weights."""

    family: str
    rank: int
    entries: tuple[tuple[int, ...], ...]
    sym: tuple[int, ...]  # relatively prime positive d_i with diag(d) @ entries symmetric

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan(family: str, rank: int) -> CartanMatrix:
    """Build and validate the Cartan matrix of a finite type."""
    family = family.upper()
    limits = {"A": (1, None), "B": (2, None), "C": (2, None), "D": (4, None),
              "E": (6, 8), "F": (4, 4), "G": (2, 2)}
    if family not in limits:
        raise InvalidTypeError(f"unknown family {family!r}")
    lo, hi = limits[family]
    if rank < lo or (hi is not None and rank > hi):
        raise InvalidTypeError(f"rank {rank} is not valid for family {family}")

    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def edge(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if family in "ABC":
        for i in range(rank - 1):
            edge(i, i + 1)
        if family == "B" and rank >= 2:
            a[rank - 1][rank - 2] = -2  # last root short
        if family == "C" and rank >= 2:
            a[rank - 2][rank - 1] = -2  # last root long
    elif family == "D":
        for i in range(rank - 2):
            edge(i, i + 1)
        edge(rank - 3, rank - 1)
    elif family == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        for x, y in zip(chain, chain[1:]):
            edge(x, y)
        edge(1, 3)
    elif family == "F":
        edge(0, 1)
        edge(1, 2, aij=-1, aji=-2)
        edge(2, 3)
    elif family == "G":
        edge(0, 1, aij=-3, aji=-1)

    entries = tuple(tuple(row) for row in a)
    return CartanMatrix(family, rank, entries, _symmetrizer(entries))


def _symmetrizer(entries: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    n = len(entries)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if i != j and entries[i][j] != 0:
                val = d[i] * Fraction(entries[i][j], entries[j][i])
                if d[j] is None:
                    d[j] = val
                    todo.append(j)
                elif d[j] != val:
                    raise InvalidTypeError("matrix is not symmetrizable")
    if any(x is None for x in d):
        raise InvalidTypeError("matrix is not indecomposable")
    mult = 1
    for x in d:
        mult = mult * x.denominator // gcd(mult, x.denominator)
    ints = [int(x * mult) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if any(x <= 0 for x in ints):
        raise InvalidTypeError("matrix is not of finite type")
    _check_positive_definite(entries, ints)
    return tuple(ints)


def _check_positive_definite(entries, d):
    n = len(entries)
    sym = [[Fraction(d[i] * entries[i][j]) for j in range(n)] for i in range(n)]
    # leading principal minors via fraction-free-ish Gaussian elimination
    m = [row[:] for row in sym]
    for k in range(n):
        if m[k][k] <= 0:
            raise InvalidTypeError("symmetrization is not positive definite")
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]


def _root_key(root: Root) -> tuple:
    return (sum(root), tuple(-c for c in root))


class RootSystem:
    """The root system generated by a Cartan matrix, with its fixed order."""

    def __init__(self, cm: CartanMatrix):
        self.cartan = cm
        self.rank = cm.rank
        self.positive: tuple[Root, ...] = self._generate()
        self.all: tuple[Root, ...] = self.positive + tuple(
            tuple(-c for c in r) for r in self.positive
        )
        self.index = {r: k for k, r in enumerate(self.all)}
        self._dval = {r: self._d_value(r) for r in self.all}

    def _generate(self) -> tuple[Root, ...]:
        n = self.rank
        simples = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        known: set[Root] = set(simples)
        level = list(simples)
        while level:
            nxt: set[Root] = set()
            for beta in level:
                for i, alpha in enumerate(simples):
                    p = 0
                    cur = tuple(b - a for b, a in zip(beta, alpha))
                    while cur in known:
                        p += 1
                        cur = tuple(b - a for b, a in zip(cur, alpha))
                    if p - self.pairing(beta, alpha) > 0:
                        cand = tuple(b + a for b, a in zip(beta, alpha))
                        if cand not in known:
                            nxt.add(cand)
            known |= nxt
            level = sorted(nxt)
        pos = tuple(sorted(known, key=_root_key))
        self._cross_validate(pos, simples)
        return pos

    def _cross_validate(self, pos, simples):
        full = set(pos) | {tuple(-c for c in r) for r in pos}
        for beta in full:
            for alpha in simples:
                img = tuple(
                    b - self.pairing(beta, alpha) * a for b, a in zip(beta, alpha)
                )
                if img not in full:
                    raise ConstructionError(
                        f"root set not reflection-closed at {beta} / {alpha}"
                    )
        heights = [sum(r) for r in pos]
        if heights.count(max(heights)) != 1:
            raise ConstructionError("highest root is not unique")

    # -- bilinear data -------------------------------------------------

    def inner(self, b: Root, c: Root) -> int:
        """The Euclidean product (b, c), integral by the d-normalization."""
        a = self.cartan.entries
        d = self.cartan.sym
        total = 0
        for i, bi in enumerate(b):
            if bi:
                for j, cj in enumerate(c):
                    if cj:
                        total += bi * cj * d[i] * a[i][j]
        return total

    def _d_value(self, r: Root) -> int:
        q, rem = divmod(self.inner(r, r), 2)
        if rem:
            raise ConstructionError(f"odd square length for {r}")
        return q

    def d_value(self, r: Root) -> int:
        """Half the square length (the d_i of a conjugate simple root)."""
        return self._dval[r] if r in self._dval else self._d_value(r)

    def pairing(self, b: Root, a: Root) -> int:
        """The integral Cartan pairing 2(b,a)/(a,a)."""
        num = 2 * self.inner(b, a)
        den = self.inner(a, a)
        q, rem = divmod(num, den)
        if rem:
            raise ConstructionError(f"non-integral pairing of {b} and {a}")
        return q

    # -- membership and simple operations ------------------------------

    def is_root(self, v: Root) -> bool:
        return v in self.index

    def is_positive(self, v: Root) -> bool:
        return self.index[v] < len(self.positive)

    def simple(self, i: int) -> Root:
        return tuple(1 if k == i else 0 for k in range(self.rank))

    @staticmethod
    def height(v: Root) -> int:
        return sum(v)

    @staticmethod
    def negate(v: Root) -> Root:
        return tuple(-c for c in v)

    def root_sum(self, a: Root, b: Root) -> Root | None:
        s = tuple(x + y for x, y in zip(a, b))
        return s if s in self.index else None

    def reflect(self, a: Root, b: Root) -> Root:
        """The reflection s_a applied to b."""
        img = tuple(bc - self.pairing(b, a) * ac for bc, ac in zip(b, a))
        if img not in self.index:
            raise ConstructionError(f"reflection left the root system: {a}, {b}")
        return img

    def alpha_chain(self, a: Root, b: Root) -> tuple[int, int]:
        """Largest (p, q) with b - p*a, ..., b, ..., b + q*a all roots."""
        if _collinear(a, b):
            raise DependentRootsError(f"{a} and {b} are dependent")
        p = 0
        cur = tuple(x - y for x, y in zip(b, a))
        while cur in self.index:
            p += 1
            cur = tuple(x - y for x, y in zip(cur, a))
        q = 0
        cur = tuple(x + y for x, y in zip(b, a))
        while cur in self.index:
            q += 1
            cur = tuple(x + y for x, y in zip(cur, a))
        return p, q

    def highest_root(self) -> Root:
        return self.positive[-1]


def _collinear(a: Root, b: Root) -> bool:
    n = len(a)
    return all(a[i] * b[j] == a[j] * b[i] for i in range(n) for j in range(i + 1, n))


# -- Weyl group ---------------------------------------------------------


@dataclass(frozen=True)
class WeylWord:
    """A Weyl group element: a reduced word and its root-lattice matrix."""

    word: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def apply(self, root: Root) -> Root:
        return tuple(
            sum(mrow[c] * root[c] for c in range(len(root))) for mrow in self.matrix
        )


def simple_reflection_matrix(cm: CartanMatrix, i: int) -> tuple[tuple[int, ...], ...]:
    """Matrix of s_i on root coordinates: alpha_j -> alpha_j - a_ij alpha_i."""
    n = cm.rank
    rows = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    for c in range(n):
        rows[i][c] -= cm.entries[i][c]
    return tuple(tuple(r) for r in rows)


def _mat_mul_int(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def weyl_enumerate(
    cm: CartanMatrix, max_size: int = 10**6, generators: tuple[int, ...] | None = None
) -> list[WeylWord]:
    """All Weyl group elements as reduced words, BFS over the generators.

    Restricting `generators` enumerates the standard parabolic subgroup.
    """
    n = cm.rank
    gens = {i: simple_reflection_matrix(cm, i) for i in (generators or range(n))}
    ident = tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))
    seen = {ident: ()}
    frontier = [ident]
    order = [WeylWord((), ident)]
    while frontier:
        new_frontier = []
        for m in frontier:
            word = seen[m]
            for i, g in gens.items():
                m2 = _mat_mul_int(m, g)
                if m2 not in seen:
                    if len(seen) >= max_size:
                        raise WeylTooLargeError(
                            f"Weyl group exceeds guard of {max_size}"
                        )
                    seen[m2] = word + (i,)
                    new_frontier.append(m2)
                    order.append(WeylWord(word + (i,), m2))
        frontier = new_frontier
    order.sort(key=lambda w: (len(w.word), w.word))
    return order


def weyl_order(cm: CartanMatrix) -> int:
    """Closed-form order of the Weyl group."""
    return _WEYL_ORDERS[cm.family](cm.rank)


def longest_element(cm: CartanMatrix, max_size: int = 10**6) -> WeylWord:
    elements = weyl_enumerate(cm, max_size)
    top = max(len(w.word) for w in elements)
    longest = [w for w in elements if len(w.word) == top]
    if len(longest) != 1:
        raise ConstructionError("longest element is not unique")
    return longest[0]


def opposite_involution(cm: CartanMatrix, max_size: int = 10**6) -> tuple[int, ...]:
    """The diagram symmetry induced by -w0: returns the permutation of {0..n-1}."""
    w0 = longest_element(cm, max_size)
    n = cm.rank
    perm = []
    for i in range(n):
        img = tuple(-c for c in w0.apply(_unit(n, i)))
        hits = [j for j in range(n) if img == _unit(n, j)]
        if len(hits) != 1:
            raise ConstructionError("-w0 does not permute the simple roots")
        perm.append(hits[0])
    return tuple(perm)


def _unit(n: int, i: int) -> Root:
    return tuple(1 if k == i else 0 for k in range(n))


def inversion_roots(rs: RootSystem, w: WeylWord) -> tuple[Root, ...]:
    """Positive roots a with w^{-1} a < 0, in the fixed positive order."""
    inv = _invert_word(rs.cartan, w)
    return tuple(a for a in rs.positive if sum(inv.apply(a)) < 0)


def _invert_word(cm: CartanMatrix, w: WeylWord) -> WeylWord:
    word = tuple(reversed(w.word))
    m = tuple(tuple(1 if r == c else 0 for c in range(cm.rank)) for r in range(cm.rank))
    for i in word:
        m = _mat_mul_int(m, simple_reflection_matrix(cm, i))
    return WeylWord(word, m)


# -- closed subsets and parabolic combinatorics -------------------------


def closed_subsets_max(
    rs: RootSystem, limit: int = 24
) -> tuple[int, list[tuple[Root, ...]]]:
    """Maximum size of a closed subset S of the roots with S and -S disjoint,
    together with every maximizer.  Exhaustive, guarded by `limit` on |Phi|."""
    roots = rs.all
    m = len(roots)
    if m > limit:
        raise EnumerationTooLargeError(f"|Phi| = {m} exceeds guard {limit}")
    npos = len(rs.positive)
    neg_of = [rs.index[rs.negate(r)] for r in roots]
    sum_of = [[-1] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            s = rs.root_sum(roots[i], roots[j])
            if s is not None:
                sum_of[i][j] = rs.index[s]

    pairs = [(k, neg_of[k]) for k in range(npos)]
    best_size = 0
    best: list[int] = []  # bitmasks

    def closure_add(r: int, in_mask: int, out_mask: int, members: list[int]):
        # include root r; propagate closure and exclusion, or return None
        stack = [r]
        while stack:
            x = stack.pop()
            bx = 1 << x
            if in_mask & bx:
                continue
            if out_mask & bx:
                return None
            nx = neg_of[x]
            if in_mask & (1 << nx):
                return None
            out_mask |= 1 << nx
            for y in members:
                for u, v in ((x, y), (y, x)):
                    t = sum_of[u][v]
                    if t >= 0:
                        bt = 1 << t
                        if out_mask & bt:
                            return None
                        if not (in_mask & bt):
                            stack.append(t)
            in_mask |= bx
            members = members + [x]
        return in_mask, out_mask, members

    def rec(pi: int, in_mask: int, out_mask: int, members: list[int]):
        nonlocal best_size, best
        if len(members) + (len(pairs) - pi) < best_size:
            return
        if pi == len(pairs):
            size = len(members)
            if size > best_size:
                best_size = size
                best = [in_mask]
            elif size == best_size:
                best.append(in_mask)
            return
        a, b = pairs[pi]
        ba, bb = 1 << a, 1 << b
        for choice in (a, b, None):
            if choice is None:
                if (in_mask & ba) or (in_mask & bb):
                    continue
                rec(pi + 1, in_mask, out_mask | ba | bb, members)
            else:
                other = b if choice == a else a
                if (out_mask & (1 << choice)) or (in_mask & (1 << other)):
                    continue
                res = closure_add(choice, in_mask, out_mask, members)
                if res is not None:
                    rec(pi + 1, *res)

    rec(0, 0, 0, [])
    subsets = sorted(
        tuple(roots[k] for k in range(m) if mask & (1 << k)) for mask in set(best)
    )
    return best_size, subsets


def support(root: Root) -> frozenset[int]:
    return frozenset(i for i, c in enumerate(root) if c)


def root_subsystem(rs: RootSystem, J) -> tuple[Root, ...]:
    """All roots supported on the simple-root subset J."""
    jset = set(J)
    return tuple(r for r in rs.all if support(r) <= jset)


def is_distinguished(rs: RootSystem, J) -> bool:
    """Level criterion: n + |Phi_J| equals the number of level-one positive roots."""
    jset = set(J)
    levi_dim = rs.rank + len(root_subsystem(rs, jset))
    level_one = sum(
        1
        for r in rs.positive
        if sum(c for i, c in enumerate(r) if i not in jset) == 1
    )
    return levi_dim == level_one


def all_subsets(n: int):
    """All subsets of range(n) in deterministic (size, lexicographic) order."""
    for size in range(n + 1):
        yield from itertools.combinations(range(n), size)
