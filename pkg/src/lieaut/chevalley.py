"""The simple Lie algebra over a cyclotomic field, in a Chevalley basis.

The basis is h_1..h_n (fundamental coroots) followed by the root vectors
e_alpha, positive roots first, each block in the fixed root order.  The
signed structure constants are integers, built from extraspecial pairs: the
pair (alpha, beta) with alpha minimal among all positive decompositions of
alpha + beta gets the positive sign, and every other constant follows from
the standard two- and four-root identities.  A full Jacobi sweep is the
consistency check; any failure there is a bug, never a valid state.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .cyclotomic import Cyc, CyclotomicField
from .errors import ConstructionError
from .rootsystem import CartanMatrix, Root, RootSystem, cartan


class LieAlgebra:
    """A finite-dimensional simple Lie algebra with exact scalars."""

    def __init__(self, cm: CartanMatrix | RootSystem, field: CyclotomicField | None = None):
        self.roots = cm if isinstance(cm, RootSystem) else RootSystem(cm)
        self.cartan = self.roots.cartan
        self.field = field if field is not None else CyclotomicField(24)
        self.rank = self.cartan.rank
        self.dim = self.rank + len(self.roots.all)
        self.nconst, self.extraspecial = _structure_constants(self.roots)
        self._coroot_ints = {
            r: _coroot_coeffs(self.roots, r) for r in self.roots.all
        }
        self._build_bracket_table()
        self._caches: dict = {}

    def __repr__(self):
        return f"LieAlgebra({self.cartan}, N={self.field.order})"

    # -- basis bookkeeping ----------------------------------------------

    def e_index(self, root: Root) -> int:
        return self.rank + self.roots.index[root]

    def basis_label(self, k: int) -> str:
        if k < self.rank:
            return f"h{k + 1}"
        root = self.roots.all[k - self.rank]
        return "e(" + _root_str(root) + ")"

    def zero(self) -> "LieVec":
        return LieVec(self, (self.field.zero,) * self.dim)

    def basis_vector(self, k: int) -> "LieVec":
        coords = [self.field.zero] * self.dim
        coords[k] = self.field.one
        return LieVec(self, tuple(coords))

    def h(self, i: int) -> "LieVec":
        return self.basis_vector(i)

    def e(self, root: Root) -> "LieVec":
        return self.basis_vector(self.e_index(root))

    def vec(self, coords: Iterable[Cyc]) -> "LieVec":
        t = tuple(coords)
        if len(t) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates")
        return LieVec(self, t)

    def cartan_vec(self, coeffs: Sequence) -> "LieVec":
        """Element of the Cartan subalgebra from rational h-coordinates."""
        coords = [self.field.rational(c) if not isinstance(c, Cyc) else c
                  for c in coeffs]
        coords += [self.field.zero] * (self.dim - self.rank)
        return self.vec(coords)

    # -- bracket --------------------------------------------------------

    def _build_bracket_table(self):
        rs = self.roots
        n = self.rank
        table: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
        for i in range(n):
            for j, root in enumerate(rs.all):
                ej = n + j
                val = sum(root[t] * self.cartan.entries[i][t] for t in range(n))
                entry = ((ej, val),) if val else ()
                table[(i, ej)] = entry
                table[(ej, i)] = tuple((k, -v) for k, v in entry)
        for ia, a in enumerate(rs.all):
            for ib, b in enumerate(rs.all):
                if ia == ib:
                    continue
                key = (n + ia, n + ib)
                if b == rs.negate(a):
                    co = self._coroot_ints[a]
                    table[key] = tuple((i, c) for i, c in enumerate(co) if c)
                else:
                    s = rs.root_sum(a, b)
                    table[key] = (
                        ((self.e_index(s), self.nconst[(a, b)]),) if s is not None else ()
                    )
        self._table = table

    def bracket_basis(self, i: int, j: int) -> tuple[tuple[int, int], ...]:
        """Sparse integer bracket of two basis elements."""
        if i == j or (i < self.rank and j < self.rank):
            return ()
        return self._table[(i, j)]

    def bracket(self, x: "LieVec", y: "LieVec") -> "LieVec":
        acc = [self.field.zero] * self.dim
        xs = [(i, c) for i, c in enumerate(x.coords) if not c.is_zero()]
        ys = [(j, c) for j, c in enumerate(y.coords) if not c.is_zero()]
        for i, xc in xs:
            for j, yc in ys:
                ent = self.bracket_basis(i, j)
                if ent:
                    f = xc * yc
                    for k, v in ent:
                        acc[k] = acc[k] + f * v
        return LieVec(self, tuple(acc))

    def coroot(self, root: Root) -> "LieVec":
        """h_beta = [e_beta, e_{-beta}], with integer Cartan coordinates."""
        return self.bracket(self.e(root), self.e(self.roots.negate(root)))

    def jacobi_check(self) -> bool:
        """Exact Jacobi identity on all basis triples (integer arithmetic)."""
        dim = self.dim

        def br(items, k):
            out: dict[int, int] = {}
            for i, c in items:
                for t, v in self.bracket_basis(i, k):
                    out[t] = out.get(t, 0) + c * v
            return out

        for i in range(dim):
            for j in range(i + 1, dim):
                bij = self.bracket_basis(i, j)
                for k in range(j + 1, dim):
                    acc: dict[int, int] = {}
                    for t, v in br(bij, k).items():
                        acc[t] = acc.get(t, 0) + v
                    for t, v in br(self.bracket_basis(j, k), i).items():
                        acc[t] = acc.get(t, 0) + v
                    for t, v in br(self.bracket_basis(k, i), j).items():
                        acc[t] = acc.get(t, 0) + v
                    if any(acc.values()):
                        return False
        return True

    # -- distinguished subspaces -----------------------------------------

    def n_plus(self) -> "Subspace":
        if "n_plus" not in self._caches:
            self._caches["n_plus"] = span(
                self, [self.e(r) for r in self.roots.positive]
            )
        return self._caches["n_plus"]

    def n_minus(self) -> "Subspace":
        if "n_minus" not in self._caches:
            self._caches["n_minus"] = span(
                self, [self.e(self.roots.negate(r)) for r in self.roots.positive]
            )
        return self._caches["n_minus"]

    # -- pinning ----------------------------------------------------------

    def constants_json(self) -> str:
        """Canonical JSON of the positive-pair constants, for regression pins."""
        rs = self.roots
        pairs = sorted(
            (rs.index[a], rs.index[b], v)
            for (a, b), v in self.nconst.items()
            if rs.is_positive(a) and rs.is_positive(b)
        )
        payload = {
            "family": self.cartan.family,
            "rank": self.cartan.rank,
            "d": list(self.cartan.sym),
            "positive_roots": [list(r) for r in rs.positive],
            "constants": [
                [list(rs.all[ia]), list(rs.all[ib]), v] for ia, ib, v in pairs
            ],
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    def constants_digest(self) -> str:
        return hashlib.sha1(self.constants_json().encode()).hexdigest()


def build(family: str, rank: int, field: CyclotomicField | None = None) -> LieAlgebra:
    """Convenience constructor from a type label."""
    return LieAlgebra(cartan(family, rank), field)


def _root_str(root: Root) -> str:
    parts = []
    for i, c in enumerate(root):
        if not c:
            continue
        mono = f"a{i + 1}"
        if c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append(f"-{mono}")
        else:
            parts.append(f"{c}{mono}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else f"+{p}"
    return out


def _coroot_coeffs(rs: RootSystem, root: Root) -> tuple[int, ...]:
    d = rs.cartan.sym
    dr = rs.d_value(root)
    out = []
    for i, m in enumerate(root):
        num = m * d[i]
        q, rem = divmod(num, dr)
        if rem:
            raise ConstructionError(f"non-integral coroot for {root}")
        out.append(q)
    return tuple(out)


def _structure_constants(rs: RootSystem):
    """All N_{a,b} with a + b a root, plus the extraspecial pair per root."""
    pos = rs.positive
    pos_index = {r: k for k, r in enumerate(pos)}
    neg = rs.negate

    def chain_p(a: Root, b: Root) -> int:
        p = 0
        cur = tuple(x - y for x, y in zip(b, a))
        while cur in rs.index:
            p += 1
            cur = tuple(x - y for x, y in zip(cur, a))
        return p

    npos: dict[tuple[Root, Root], int] = {}

    def n_signed(a: Root, b: Root) -> int:
        # lookup over positive pairs, both orders
        v = npos.get((a, b))
        if v is None:
            v = -npos[(b, a)]
        return v

    def n_full(a: Root, b: Root) -> Fraction:
        apos, bpos = rs.is_positive(a), rs.is_positive(b)
        if apos and bpos:
            return Fraction(n_signed(a, b))
        if not apos and not bpos:
            return -Fraction(n_signed(neg(a), neg(b)))
        if not apos:
            return -n_full(b, a)
        s = tuple(x + y for x, y in zip(a, b))
        if rs.is_positive(s):
            return -Fraction(rs.d_value(s), rs.d_value(a)) * n_signed(neg(b), s)
        return Fraction(rs.d_value(s), rs.d_value(b)) * n_signed(neg(s), a)

    extraspecial: dict[Root, tuple[Root, Root]] = {}
    for gamma in pos:
        if sum(gamma) < 2:
            continue
        pairs = []
        for a in pos:
            b = tuple(x - y for x, y in zip(gamma, a))
            if b in pos_index and pos_index[a] < pos_index[b]:
                pairs.append((a, b))
        if not pairs:
            raise ConstructionError(f"no positive decomposition of {gamma}")
        a0, b0 = pairs[0]  # minimal first component: the extraspecial pair
        extraspecial[gamma] = (a0, b0)
        npos[(a0, b0)] = chain_p(a0, b0) + 1
        dg = rs.d_value(gamma)
        for x, y in pairs[1:]:
            total = Fraction(0)
            r1 = tuple(u - v for u, v in zip(b0, x))
            if r1 in rs.index:
                total += (
                    n_full(b0, neg(x)) * n_full(a0, neg(y)) / rs.d_value(r1)
                )
            r2 = tuple(u - v for u, v in zip(a0, x))
            if r2 in rs.index:
                total += (
                    n_full(neg(x), a0) * n_full(b0, neg(y)) / rs.d_value(r2)
                )
            val = dg * total / npos[(a0, b0)]
            if val.denominator != 1 or val == 0:
                raise ConstructionError(
                    f"constant for ({x}, {y}) came out as {val}"
                )
            npos[(x, y)] = int(val)

    # expand to every sign combination
    nconst: dict[tuple[Root, Root], int] = {}
    for a in rs.all:
        for b in rs.all:
            s = rs.root_sum(a, b)
            if s is None:
                continue
            v = n_full(a, b)
            if v.denominator != 1 or v == 0:
                raise ConstructionError(f"constant for ({a}, {b}) came out as {v}")
            nconst[(a, b)] = int(v)
            if abs(nconst[(a, b)]) != chain_p(a, b) + 1:
                raise ConstructionError(
                    f"|N| != p+1 for ({a}, {b}): {nconst[(a, b)]}"
                )
    return nconst, extraspecial


class LieVec:
    """An element of the algebra: exact coordinates over the Chevalley basis."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: LieAlgebra, coords: tuple[Cyc, ...]):
        self.algebra = algebra
        self.coords = coords

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def h_part(self) -> tuple[Cyc, ...]:
        return self.coords[: self.algebra.rank]

    def e_part(self) -> tuple[Cyc, ...]:
        return self.coords[self.algebra.rank :]

    def e_coeff(self, root: Root) -> Cyc:
        return self.coords[self.algebra.e_index(root)]

    def in_cartan(self) -> bool:
        return all(c.is_zero() for c in self.e_part())

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, c in enumerate(self.coords) if not c.is_zero())

    def __add__(self, other: "LieVec") -> "LieVec":
        return LieVec(
            self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: "LieVec") -> "LieVec":
        return LieVec(
            self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> "LieVec":
        return LieVec(self.algebra, tuple(-a for a in self.coords))

    def scale(self, c) -> "LieVec":
        if not isinstance(c, Cyc):
            c = self.algebra.field.rational(c)
        return LieVec(self.algebra, tuple(c * a for a in self.coords))

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return (
            isinstance(other, LieVec)
            and other.algebra is self.algebra
            and other.coords == self.coords
        )

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coords):
            if c.is_zero():
                continue
            label = self.algebra.basis_label(k)
            if c.is_one():
                parts.append(label)
            elif c == -1:
                parts.append(f"-{label}")
            else:
                cs = str(c)
                if ("+" in cs[1:]) or ("-" in cs[1:]) or " " in cs:
                    cs = f"({cs})"
                parts.append(f"{cs}*{label}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"LieVec({self})"


class Subspace:
    """A subspace in reduced row echelon form; equality is structural."""

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(self, field: CyclotomicField, ambient: int, rows, pivots):
        self.field = field
        self.ambient = ambient
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, vec: LieVec | Sequence[Cyc]) -> bool:
        v = list(vec.coords) if isinstance(vec, LieVec) else list(vec)
        for row, pc in zip(self.rows, self.pivots):
            f = v[pc]
            if not f.is_zero():
                v = [x - f * y for x, y in zip(v, row)]
        return all(x.is_zero() for x in v)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and other.ambient == self.ambient
            and other.rows == self.rows
        )

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def span(algebra: LieAlgebra, vectors: Sequence[LieVec]) -> Subspace:
    """Row-echelon span of the given elements."""
    field = algebra.field
    if not vectors:
        return Subspace(field, algebra.dim, (), ())
    rows = [list(v.coords) for v in vectors]
    red, pivots = linalg.rref(field, rows)
    return Subspace(field, algebra.dim, red, pivots)


def span_rows(field: CyclotomicField, ambient: int, rows) -> Subspace:
    if not rows:
        return Subspace(field, ambient, (), ())
    red, pivots = linalg.rref(field, [list(r) for r in rows])
    return Subspace(field, ambient, red, pivots)


def member(s: Subspace, x: LieVec) -> bool:
    return s.contains(x)


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    return span_rows(s1.field, s1.ambient, list(s1.rows) + list(s2.rows))


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """Exact intersection via the nullspace of the stacked bases."""
    if s1.dim == 0 or s2.dim == 0:
        return Subspace(s1.field, s1.ambient, (), ())
    field = s1.field
    stacked = list(s1.rows) + list(s2.rows)
    # columns of the system are the stacked coefficients
    system = [[stacked[c][r] for c in range(len(stacked))] for r in range(s1.ambient)]
    vectors = []
    for coeffs in linalg.nullspace(field, system):
        vec = [field.zero] * s1.ambient
        for c, row in zip(coeffs[: s1.dim], s1.rows):
            if not c.is_zero():
                for t in range(s1.ambient):
                    vec[t] = vec[t] + c * row[t]
        vectors.append(vec)
    return span_rows(field, s1.ambient, vectors)


def image(m, s: Subspace) -> Subspace:
    """Image of a subspace under a matrix (rows attribute or row sequence)."""
    rows = getattr(m, "rows", m)
    out = []
    for base in s.rows:
        out.append(linalg.mat_vec(rows, list(base)))
    return span_rows(s.field, s.ambient, out)


def line(algebra: LieAlgebra, v: LieVec) -> Subspace:
    return span(algebra, [v])
