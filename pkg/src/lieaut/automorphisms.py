"""Automorphisms of the algebra as exact matrices in the Chevalley basis.

Every constructor returns a :class:`LinMap` carrying an optional trace, a
list of named generator factors that multiply back to the matrix.  Traces
are what witness certificates are made of: each factor can be rebuilt from
its parameters alone, so a trace is an independently checkable recipe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import linalg
from .chevalley import LieAlgebra, LieVec, Subspace, image, span_rows
from .cyclotomic import Cyc
from .errors import (
    BadSupportError,
    ExtensionError,
    NonIntegralSpectrumError,
    NotASymmetryError,
    NotInCartanError,
    NotNilpotentError,
)
from .rootsystem import Root, WeylWord, inversion_roots


@dataclass(frozen=True)
class Factor:
    """A named automorphism generator with its parameters."""

    kind: str
    data: tuple

    def matrix(self, algebra: LieAlgebra) -> list[list[Cyc]]:
        if self.kind == "exp_ad":
            x, t = self.data
            return _exp_ad_rows(algebra, x, t)
        if self.kind == "weyl":
            return _weyl_rows(algebra, self.data[0])
        if self.kind == "torus":
            return _torus_rows(algebra, self.data[0])
        if self.kind == "grading":
            h, lam = self.data
            return _grading_rows(algebra, h, lam)
        if self.kind == "involution":
            return _involution_rows(algebra)
        if self.kind == "graph":
            return _graph_rows(algebra, self.data[0])
        raise ValueError(f"unknown factor kind {self.kind!r}")

    def describe(self) -> dict:
        if self.kind == "exp_ad":
            x, t = self.data
            return {"kind": "exp_ad", "x": str(x), "t": str(t)}
        if self.kind == "weyl":
            return {"kind": "weyl", "word": [i + 1 for i in self.data[0]]}
        if self.kind == "torus":
            return {"kind": "torus", "values": [str(v) for v in self.data[0]]}
        if self.kind == "grading":
            h, lam = self.data
            return {"kind": "grading", "h": str(h), "lambda": str(lam)}
        if self.kind == "involution":
            return {"kind": "involution"}
        if self.kind == "graph":
            return {"kind": "graph", "perm": [i + 1 for i in self.data[0]]}
        raise ValueError(f"unknown factor kind {self.kind!r}")


class LinMap:
    """An exact linear endomorphism in the Chevalley basis."""

    __slots__ = ("algebra", "rows", "trace")

    def __init__(self, algebra: LieAlgebra, rows, trace: tuple[Factor, ...] | None = None):
        self.algebra = algebra
        self.rows = tuple(tuple(r) for r in rows)
        self.trace = trace

    def __call__(self, x: LieVec) -> LieVec:
        return self.algebra.vec(linalg.mat_vec(self.rows, list(x.coords)))

    def compose(self, other: "LinMap") -> "LinMap":
        """self after other; traces concatenate in application order."""
        rows = linalg.mat_mul(self.algebra.field, self.rows, other.rows)
        trace = None
        if self.trace is not None and other.trace is not None:
            trace = self.trace + other.trace
        return LinMap(self.algebra, rows, trace)

    def __matmul__(self, other: "LinMap") -> "LinMap":
        return self.compose(other)

    def inverse(self) -> "LinMap":
        inv = linalg.inverse(self.algebra.field, self.rows)
        if inv is None:
            raise ZeroDivisionError("map is singular")
        return LinMap(self.algebra, inv)

    def on_subspace(self, s: Subspace) -> Subspace:
        return image(self.rows, s)

    def is_identity(self) -> bool:
        return all(
            (x.is_one() if i == j else x.is_zero())
            for i, row in enumerate(self.rows)
            for j, x in enumerate(row)
        )

    def __eq__(self, other):
        return isinstance(other, LinMap) and other.rows == self.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        names = [f.kind for f in self.trace] if self.trace is not None else "?"
        return f"LinMap({self.algebra.cartan}, trace={names})"


def identity_map(algebra: LieAlgebra) -> LinMap:
    return LinMap(algebra, linalg.identity(algebra.field, algebra.dim), ())


def ad(algebra: LieAlgebra, x: LieVec) -> LinMap:
    """Matrix of y -> [x, y].  Not an automorphism; carries no trace."""
    f = algebra.field
    rows = linalg.zeros(f, algebra.dim, algebra.dim)
    for i, xc in enumerate(x.coords):
        if xc.is_zero():
            continue
        for j in range(algebra.dim):
            for k, v in algebra.bracket_basis(i, j):
                rows[k][j] = rows[k][j] + xc * v
    return LinMap(algebra, rows)


def _exp_ad_rows(algebra: LieAlgebra, x: LieVec, t: Cyc) -> list[list[Cyc]]:
    f = algebra.field
    a = [list(r) for r in ad(algebra, x).rows]
    out = linalg.identity(f, algebra.dim)
    power = a
    factorial = 1
    r = 1
    tpow = t
    while not linalg.mat_is_zero(power):
        if r > algebra.dim:
            raise NotNilpotentError("exp of a non-nilpotent adjoint")
        coeff = tpow * f.rational(1, factorial)
        if not coeff.is_zero():
            for i in range(algebra.dim):
                prow = power[i]
                orow = out[i]
                for j in range(algebra.dim):
                    if not prow[j].is_zero():
                        orow[j] = orow[j] + coeff * prow[j]
        power = linalg.mat_mul(f, power, a)
        r += 1
        factorial *= r
        tpow = tpow * t
    return out


def exp_ad(algebra: LieAlgebra, x: LieVec, t=1) -> LinMap:
    """Exponential of t * ad(x) for ad-nilpotent x; exact, finite sum."""
    if not isinstance(t, Cyc):
        t = algebra.field.rational(t)
    rows = _exp_ad_rows(algebra, x, t)
    return LinMap(algebra, rows, (Factor("exp_ad", (x, t)),))


def _simple_rep_rows(algebra: LieAlgebra, i: int) -> list[list[Cyc]]:
    key = ("nrep", i)
    if key not in algebra._caches:
        f = algebra.field
        rs = algebra.roots
        alpha = rs.simple(i)
        one = f.one
        e_plus = _exp_ad_rows(algebra, algebra.e(alpha), one)
        e_minus = _exp_ad_rows(algebra, algebra.e(rs.negate(alpha)), -one)
        rows = linalg.mat_mul(f, linalg.mat_mul(f, e_plus, e_minus), e_plus)
        algebra._caches[key] = rows
    return algebra._caches[key]


def _weyl_rows(algebra: LieAlgebra, word: tuple[int, ...]) -> list[list[Cyc]]:
    rows = linalg.identity(algebra.field, algebra.dim)
    for i in word:
        rows = linalg.mat_mul(algebra.field, rows, _simple_rep_rows(algebra, i))
    return rows


def weyl_rep(algebra: LieAlgebra, w: WeylWord | Sequence[int]) -> LinMap:
    """The integral representative of a Weyl element on the algebra."""
    word = tuple(w.word if isinstance(w, WeylWord) else w)
    return LinMap(algebra, _weyl_rows(algebra, word), (Factor("weyl", (word,)),))


def _torus_rows(algebra: LieAlgebra, values: tuple[Cyc, ...]) -> list[list[Cyc]]:
    f = algebra.field
    rows = linalg.identity(f, algebra.dim)
    inv = [v.inv() for v in values]
    for root in algebra.roots.all:
        k = algebra.e_index(root)
        scale = f.one
        for i, m in enumerate(root):
            if m > 0:
                scale = scale * values[i] ** m
            elif m < 0:
                scale = scale * inv[i] ** (-m)
        rows[k][k] = scale
    return rows


def torus_aut(algebra: LieAlgebra, values: Sequence) -> LinMap:
    """Diagonal automorphism scaling e_alpha by the alpha-monomial in values."""
    vals = tuple(
        v if isinstance(v, Cyc) else algebra.field.rational(v) for v in values
    )
    if len(vals) != algebra.rank:
        raise ValueError(f"expected {algebra.rank} torus values")
    if any(v.is_zero() for v in vals):
        raise ValueError("torus values must be nonzero")
    return LinMap(algebra, _torus_rows(algebra, vals), (Factor("torus", (vals,)),))


def _grading_weights(algebra: LieAlgebra, h: LieVec) -> list[int]:
    if not h.in_cartan():
        raise NotInCartanError("grading element must lie in the Cartan subalgebra")
    weights = []
    hp = h.h_part()
    for root in algebra.roots.all:
        w = algebra.field.zero
        for i, c in enumerate(hp):
            if not c.is_zero():
                pair = sum(
                    root[t] * algebra.cartan.entries[i][t] for t in range(algebra.rank)
                )
                w = w + c * pair
        if not w.is_integer():
            raise NonIntegralSpectrumError(f"weight {w} on {root} is not an integer")
        weights.append(int(w.rational_value()))
    return weights


def _grading_rows(algebra: LieAlgebra, h: LieVec, lam: Cyc) -> list[list[Cyc]]:
    f = algebra.field
    weights = _grading_weights(algebra, h)
    rows = linalg.identity(f, algebra.dim)
    lam_inv = None
    for root, m in zip(algebra.roots.all, weights):
        k = algebra.e_index(root)
        if m >= 0:
            rows[k][k] = lam**m
        else:
            if lam_inv is None:
                lam_inv = lam.inv()
            rows[k][k] = lam_inv ** (-m)
    return rows


def grading_aut(algebra: LieAlgebra, h: LieVec, lam) -> LinMap:
    """Scale the ad(h)-eigenspace of integer eigenvalue m by lam^m."""
    if not isinstance(lam, Cyc):
        lam = algebra.field.rational(lam)
    if lam.is_zero():
        raise ValueError("grading scalar must be nonzero")
    return LinMap(
        algebra, _grading_rows(algebra, h, lam), (Factor("grading", (h, lam)),)
    )


def _graph_signs(algebra: LieAlgebra, perm: tuple[int, ...]) -> dict[Root, int]:
    """Signs sigma with e_gamma -> sigma * e_{perm(gamma)}, by bracket words."""
    rs = algebra.roots
    signs: dict[Root, int] = {}
    for i in range(algebra.rank):
        signs[rs.simple(i)] = 1
        signs[rs.negate(rs.simple(i))] = 1
    for gamma in rs.positive:
        if sum(gamma) < 2:
            continue
        a, b = algebra.extraspecial[gamma]
        for sign in (1, -1):
            ga = tuple(sign * c for c in a)
            gb = tuple(sign * c for c in b)
            ggamma = tuple(sign * c for c in gamma)
            num = algebra.nconst[(_permute(ga, perm), _permute(gb, perm))]
            den = algebra.nconst[(ga, gb)]
            if num % den:
                raise ExtensionError("constant ratio is not a unit")
            signs[ggamma] = signs[ga] * signs[gb] * (num // den)
    return signs


def _permute(root: Root, perm: tuple[int, ...]) -> Root:
    out = [0] * len(root)
    for i, c in enumerate(root):
        out[perm[i]] = c
    return tuple(out)


def _graph_rows(algebra: LieAlgebra, perm: tuple[int, ...]) -> list[list[Cyc]]:
    f = algebra.field
    rows = linalg.zeros(f, algebra.dim, algebra.dim)
    for i in range(algebra.rank):
        rows[perm[i]][i] = f.one
    signs = _graph_signs(algebra, perm)
    for root in algebra.roots.all:
        tgt = _permute(root, perm)
        rows[algebra.e_index(tgt)][algebra.e_index(root)] = f.rational(signs[root])
    return rows


def graph_aut(algebra: LieAlgebra, perm: Sequence[int]) -> LinMap:
    """The graph automorphism attached to a diagram symmetry.

    The symmetry is checked against the Cartan pairings.  The extension to
    non-simple root vectors is computed through the pinned bracket words; if
    that map fails the homomorphism test, a sign-correcting torus twist is
    searched for, and failure to find one is an error.
    """
    perm = tuple(perm)
    a = algebra.cartan.entries
    n = algebra.rank
    if sorted(perm) != list(range(n)):
        raise NotASymmetryError("not a permutation of the nodes")
    for i in range(n):
        for j in range(n):
            if a[perm[i]][perm[j]] != a[i][j]:
                raise NotASymmetryError("permutation does not preserve the pairings")
    base = LinMap(algebra, _graph_rows(algebra, perm), (Factor("graph", (perm,)),))
    if is_automorphism(algebra, base):
        return base
    for flips in itertools.product((1, -1), repeat=n):
        if all(v == 1 for v in flips):
            continue
        candidate = torus_aut(algebra, flips).compose(base)
        if is_automorphism(algebra, candidate):
            return candidate
    raise ExtensionError("no sign twist extends the diagram symmetry")


def _involution_rows(algebra: LieAlgebra) -> list[list[Cyc]]:
    f = algebra.field
    rows = linalg.zeros(f, algebra.dim, algebra.dim)
    minus_one = f.rational(-1)
    for i in range(algebra.rank):
        rows[i][i] = minus_one
    for root in algebra.roots.all:
        src = algebra.e_index(root)
        tgt = algebra.e_index(algebra.roots.negate(root))
        rows[tgt][src] = minus_one
    return rows


def chevalley_involution(algebra: LieAlgebra) -> LinMap:
    """The order-two automorphism with h -> -h and e_alpha -> -e_{-alpha}."""
    return LinMap(algebra, _involution_rows(algebra), (Factor("involution", ()),))


def is_automorphism(algebra: LieAlgebra, m: LinMap) -> bool:
    """Exact test: invertible and bracket-preserving on all basis pairs."""
    f = algebra.field
    dim = algebra.dim
    if linalg.rank(f, [list(r) for r in m.rows]) != dim:
        return False
    cols = [[m.rows[i][j] for i in range(dim)] for j in range(dim)]
    colvecs = [algebra.vec(c) for c in cols]
    for i in range(dim):
        for j in range(i + 1, dim):
            lhs = algebra.bracket(colvecs[i], colvecs[j])
            rhs = [f.zero] * dim
            for k, v in algebra.bracket_basis(i, j):
                ck = cols[k]
                for t in range(dim):
                    if not ck[t].is_zero():
                        rhs[t] = rhs[t] + v * ck[t]
            if list(lhs.coords) != rhs:
                return False
    return True


def semilinear_af(algebra: LieAlgebra, k: int, x: LieVec) -> LieVec:
    """Coefficient-wise Galois twist; the Chevalley basis is fixed."""
    return algebra.vec(algebra.field.galois(k, c) for c in x.coords)


def semilinear_subspace(algebra: LieAlgebra, k: int, s: Subspace) -> Subspace:
    rows = [[algebra.field.galois(k, c) for c in row] for row in s.rows]
    return span_rows(algebra.field, s.ambient, rows)


@dataclass(frozen=True)
class NilradicalDesc:
    """Bruhat data (w, u) for a Borel nilradical: a Weyl element plus
    unipotent parameters keyed by the inversion roots of w."""

    w: WeylWord
    u_params: tuple[tuple[Root, Cyc], ...]

    @staticmethod
    def make(w: WeylWord, params: Mapping[Root, Cyc] | None = None) -> "NilradicalDesc":
        items = tuple(sorted((params or {}).items(), key=lambda kv: kv[0]))
        return NilradicalDesc(w, items)


def nilradical(algebra: LieAlgebra, desc: NilradicalDesc) -> Subspace:
    """The nilradical Ad(u w).n for Bruhat data (w, u)."""
    rs = algebra.roots
    inv_set = inversion_roots(rs, desc.w)
    params = dict(desc.u_params)
    if set(params) != set(inv_set):
        raise BadSupportError(
            f"parameters must be keyed by the inversion set {sorted(inv_set)}"
        )
    m = weyl_rep(algebra, desc.w)
    for alpha in reversed(inv_set):  # fixed root order, leftmost factor first
        t = params[alpha]
        if not isinstance(t, Cyc):
            t = algebra.field.rational(t)
        m = exp_ad(algebra, algebra.e(alpha), t).compose(m)
    return m.on_subspace(algebra.n_plus())
