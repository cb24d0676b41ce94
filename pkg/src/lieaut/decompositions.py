"""Element-level structure theory: nilpotency and semisimplicity tests,
the additive Jordan decomposition, sl2-triples, and centralizer Levis.

The Jordan split avoids factoring: the semisimple part of ad(x) is found
by Newton iteration against the radical of the characteristic polynomial
(exact convergence in at most ceil(log2 dim) + 1 steps), then pulled back
through the injective adjoint map by an exact linear solve.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, log2

from . import linalg
from .automorphisms import ad
from .chevalley import LieAlgebra, LieVec, Subspace, span
from .cyclotomic import Cyc
from .errors import NotInCartanError, NotNilpotentError, SolveError
from .rootsystem import Root, support


def is_nilpotent(algebra: LieAlgebra, x: LieVec) -> bool:
    """ad(x)^dim = 0, decided by repeated squaring."""
    f = algebra.field
    power = [list(r) for r in ad(algebra, x).rows]
    exponent = 1
    while exponent < algebra.dim:
        if linalg.mat_is_zero(power):
            return True
        power = linalg.mat_mul(f, power, power)
        exponent *= 2
    return linalg.mat_is_zero(power)


def is_semisimple(algebra: LieAlgebra, x: LieVec) -> bool:
    """The minimal polynomial of ad(x) is squarefree."""
    f = algebra.field
    m = linalg.minpoly(f, [list(r) for r in ad(algebra, x).rows])
    g = linalg.pgcd(m, linalg.pderiv(m))
    return linalg.pdeg(g) == 0


def ad_predicates(algebra: LieAlgebra, x: LieVec) -> tuple[bool, bool]:
    """(nilpotent, semisimple) from one minimal-polynomial computation.

    Agrees with is_nilpotent and is_semisimple: nilpotency is the minimal
    polynomial being a power of the variable, semisimplicity its
    squarefreeness.
    """
    f = algebra.field
    m = linalg.minpoly(f, [list(r) for r in ad(algebra, x).rows])
    nilp = all(c.is_zero() for c in m[:-1])
    g = linalg.pgcd(m, linalg.pderiv(m))
    return nilp, linalg.pdeg(g) == 0


@dataclass(frozen=True)
class JordanPair:
    """x = semisimple + nilpotent with the two parts commuting."""

    semisimple: LieVec
    nilpotent: LieVec


def _solve_ad_preimage(algebra: LieAlgebra, target) -> LieVec:
    """The unique y with ad(y) equal to the given matrix (ad is injective)."""
    f = algebra.field
    dim = algebra.dim
    rows = []
    rhs = []
    for j in range(dim):
        seen: dict[int, list[Cyc]] = {}
        for k in range(dim):
            for i, v in algebra.bracket_basis(k, j):
                seen.setdefault(i, [f.zero] * dim)[k] = f.rational(v)
        for i in range(dim):
            entry = target[i][j]
            if i in seen:
                rows.append(seen[i])
                rhs.append(entry)
            elif not entry.is_zero():
                raise SolveError("matrix is outside the image of ad")
    sol = linalg.solve(f, rows, rhs)
    if sol is None:
        raise SolveError("matrix is outside the image of ad")
    y = algebra.vec(sol)
    if not linalg.mat_eq(ad(algebra, y).rows, target):
        raise SolveError("preimage does not reproduce the matrix")
    return y


def jordan(algebra: LieAlgebra, x: LieVec) -> JordanPair:
    """Additive Jordan decomposition, exact.

    Newton iteration drives ad(x) to a root of the radical of its
    characteristic polynomial; the limit is the semisimple part, a
    polynomial in ad(x), and the corresponding element is recovered by a
    linear solve.  All claimed invariants are re-verified before return.
    """
    f = algebra.field
    a = [list(r) for r in ad(algebra, x).rows]
    p = linalg.charpoly(f, a)
    rad = linalg.psquarefree(p)
    if linalg.pdeg(rad) == linalg.pdeg(p):
        s_mat = a  # squarefree annihilator: ad(x) is already semisimple
    else:
        deriv = linalg.pderiv(rad)
        u = _poly_bezout_inverse(rad, deriv)
        s_mat = a
        for _ in range(ceil(log2(algebra.dim)) + 1):
            f_of = linalg.peval_matrix(f, rad, s_mat)
            if linalg.mat_is_zero(f_of):
                break
            u_of = linalg.peval_matrix(f, u, s_mat)
            step = linalg.mat_mul(f, f_of, u_of)
            s_mat = linalg.mat_sub(s_mat, step)
        if not linalg.mat_is_zero(linalg.peval_matrix(f, rad, s_mat)):
            raise SolveError("Newton iteration did not converge exactly")
    s = _solve_ad_preimage(algebra, s_mat)
    e = x - s
    pair = JordanPair(s, e)
    if not algebra.bracket(s, e).is_zero():
        raise SolveError("Jordan parts do not commute")
    if not is_nilpotent(algebra, e):
        raise SolveError("nilpotent part is not nilpotent")
    if not is_semisimple(algebra, s):
        raise SolveError("semisimple part is not semisimple")
    return pair


def _poly_bezout_inverse(rad, deriv):
    """The u with u * deriv = 1 (mod rad), by extended Euclid."""
    f = rad[0].field
    r0, r1 = list(rad), list(deriv)
    s0, s1 = [], [f.one]
    while r1:
        q, r2 = linalg.pdivmod(r0, r1)
        s2 = linalg.psub(s0, linalg.pmul(q, s1))
        r0, r1, s0, s1 = r1, r2, s1, s2
    if linalg.pdeg(r0) != 0:
        raise SolveError("radical and derivative are not coprime")
    return linalg.pscale(s0, r0[0].inv())


@dataclass(frozen=True)
class Sl2Triple:
    """(e, h, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h."""

    e: LieVec
    h: LieVec
    f: LieVec


def jacobson_morozov(algebra: LieAlgebra, e: LieVec) -> Sl2Triple:
    """Complete a nonzero nilpotent to an sl2-triple.

    h is found inside the image of ad(e) by solving ad(e)^2 z = -2e, then f
    from the stacked system [e,f] = h, [h,f] = -2f.  The underdetermined
    solves are made deterministic by zeroing the free variables.
    """
    if e.is_zero():
        raise ValueError("zero element has no sl2-triple")
    if not is_nilpotent(algebra, e):
        raise NotNilpotentError("element is not nilpotent")
    f = algebra.field
    a = [list(r) for r in ad(algebra, e).rows]
    a2 = linalg.mat_mul(f, a, a)
    target = [-(c + c) for c in e.coords]
    z = linalg.solve(f, a2, target)
    if z is None:
        raise SolveError("no h with [h,e] = 2e inside [e, g]")
    h = algebra.bracket(e, algebra.vec(z))
    adh = [list(r) for r in ad(algebra, h).rows]
    two = f.rational(2)
    system = [row[:] for row in a]
    rhs = list(h.coords)
    for i, row in enumerate(adh):
        shifted = row[:]
        shifted[i] = shifted[i] + two
        system.append(shifted)
        rhs.append(f.zero)
    fsol = linalg.solve(f, system, rhs)
    if fsol is None:
        raise SolveError("no f completing the sl2-triple")
    fvec = algebra.vec(fsol)
    triple = Sl2Triple(e, h, fvec)
    if algebra.bracket(h, e) != e.scale(2):
        raise SolveError("sl2 relation [h,e] = 2e failed")
    if algebra.bracket(h, fvec) != fvec.scale(-2):
        raise SolveError("sl2 relation [h,f] = -2f failed")
    if algebra.bracket(e, fvec) != h:
        raise SolveError("sl2 relation [e,f] = h failed")
    return triple


@dataclass(frozen=True)
class CentralizerLevi:
    """Root data and subspace of the centralizer of a Cartan element."""

    simple_support: tuple[int, ...] | None  # set when the vanishing roots form a standard Levi
    root_basis: tuple[Root, ...]
    space: Subspace


def centralizer_levi(algebra: LieAlgebra, s: LieVec) -> CentralizerLevi:
    """Centralizer of a semisimple element of the Cartan subalgebra."""
    if not s.in_cartan():
        raise NotInCartanError("element must lie in the Cartan subalgebra")
    f = algebra.field
    hp = s.h_part()
    vanishing = []
    for root in algebra.roots.all:
        val = f.zero
        for i, c in enumerate(hp):
            if not c.is_zero():
                pair = sum(
                    root[t] * algebra.cartan.entries[i][t]
                    for t in range(algebra.rank)
                )
                val = val + c * pair
        if val.is_zero():
            vanishing.append(root)
    simple_nodes = tuple(
        i for i in range(algebra.rank) if algebra.roots.simple(i) in vanishing
    )
    node_set = set(simple_nodes)
    standard = all(support(r) <= node_set for r in vanishing)
    positives = [r for r in vanishing if algebra.roots.is_positive(r)]
    pos_set = set(positives)
    indecomposable = tuple(
        r
        for r in positives
        if not any(
            tuple(x - y for x, y in zip(r, q)) in pos_set for q in positives if q != r
        )
    )
    vectors = [algebra.h(i) for i in range(algebra.rank)]
    vectors += [algebra.e(r) for r in vanishing]
    return CentralizerLevi(
        simple_support=simple_nodes if standard else None,
        root_basis=indecomposable,
        space=span(algebra, vectors),
    )
