"""Dense exact linear algebra and polynomial helpers over a cyclotomic field.

Matrices are lists of row lists of field elements.  Everything is exact;
there is no pivoting heuristic beyond first-nonzero and no tolerance
anywhere.  Polynomials are coefficient lists, constant term first, with no
trailing zeros (the zero polynomial is the empty list).
"""

from __future__ import annotations

from typing import Sequence

from .cyclotomic import Cyc, CyclotomicField

Matrix = list[list[Cyc]]
Vector = list[Cyc]


def zeros(field: CyclotomicField, r: int, c: int) -> Matrix:
    z = field.zero
    return [[z] * c for _ in range(r)]


def identity(field: CyclotomicField, n: int) -> Matrix:
    m = zeros(field, n, n)
    for k in range(n):
        m[k][k] = field.one
    return m


def mat_copy(a) -> Matrix:
    return [list(row) for row in a]


def mat_mul(field: CyclotomicField, a, b) -> Matrix:
    n, mid = len(a), len(b)
    c = len(b[0]) if mid else 0
    out = zeros(field, n, c)
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for k in range(mid):
            aik = arow[k]
            if aik.is_zero():
                continue
            brow = b[k]
            for j in range(c):
                bkj = brow[j]
                if not bkj.is_zero():
                    orow[j] = orow[j] + aik * bkj
    return out

def mat_add(a, b) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c: Cyc) -> Matrix:
    return [[c * x for x in row] for row in a]


def mat_vec(a, v: Sequence[Cyc]) -> Vector:
    out = []
    for row in a:
        acc = None
        for x, y in zip(row, v):
            if x.is_zero() or y.is_zero():
                continue
            term = x * y
            acc = term if acc is None else acc + term
        out.append(acc if acc is not None else row[0].field.zero)
    return out


def mat_is_zero(a) -> bool:
    return all(x.is_zero() for row in a for x in row)


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def trace(a) -> Cyc:
    acc = a[0][0]
    for k in range(1, len(a)):
        acc = acc + a[k][k]
    return acc


def transpose(a) -> Matrix:
    return [list(col) for col in zip(*a)]


def rref(field: CyclotomicField, rows) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns.  Input is not mutated."""
    m = mat_copy(rows)
    nr = len(m)
    nc = len(m[0]) if nr else 0
    pivots = []
    r = 0
    for c in range(nc):
        pr = None
        for i in range(r, nr):
            if not m[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c].inv()
        if not inv.is_one():
            m[r] = [inv * x for x in m[r]]
        for i in range(nr):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return m[:r], pivots


def rank(field: CyclotomicField, rows) -> int:
    return len(rref(field, rows)[0])


def nullspace(field: CyclotomicField, rows) -> list[Vector]:
    """Canonical basis of the right nullspace (free variable = 1, others 0)."""
    nc = len(rows[0]) if rows else 0
    red, pivots = rref(field, rows)
    pivot_set = set(pivots)
    basis = []
    for f in range(nc):
        if f in pivot_set:
            continue
        v = [field.zero] * nc
        v[f] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][f]
        basis.append(v)
    return basis


def solve(field: CyclotomicField, a, b: Sequence[Cyc]) -> Vector | None:
    """One exact solution of a x = b (free variables zero), or None."""
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    red, pivots = rref(field, aug)
    nc = len(a[0]) if a else 0
    sol = [field.zero] * nc
    for r, pc in enumerate(pivots):
        if pc == nc:
            return None  # pivot in the constant column: inconsistent
        sol[pc] = red[r][nc]
    return sol


def inverse(field: CyclotomicField, a) -> Matrix | None:
    n = len(a)
    aug = [list(row) + ident_row for row, ident_row in zip(a, identity(field, n))]
    red, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in red[:n]]


def charpoly(field: CyclotomicField, a) -> list[Cyc]:
    """Characteristic polynomial (monic, constant first), Faddeev-LeVerrier."""
    n = len(a)
    mk = identity(field, n)
    cs = [field.one]
    for k in range(1, n + 1):
        am = mat_mul(field, a, mk)
        c = -(trace(am) / k)
        cs.append(c)
        if k < n:
            for t in range(n):
                am[t][t] = am[t][t] + c
            mk = am
    return list(reversed(cs))


# -- polynomials over the field, coefficient lists (constant term first) --


def pnorm(p: list[Cyc]) -> list[Cyc]:
    d = len(p)
    while d > 0 and p[d - 1].is_zero():
        d -= 1
    return p[:d]


def pdeg(p: list[Cyc]) -> int:
    return len(p) - 1


def padd(a: list[Cyc], b: list[Cyc]) -> list[Cyc]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return pnorm(out)


def psub(a: list[Cyc], b: list[Cyc]) -> list[Cyc]:
    return padd(a, [-c for c in b])


def pscale(a: list[Cyc], c: Cyc) -> list[Cyc]:
    if c.is_zero():
        return []
    return [c * x for x in a]


def pmul(a: list[Cyc], b: list[Cyc]) -> list[Cyc]:
    if not a or not b:
        return []
    field = a[0].field
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            if not bj.is_zero():
                out[i + j] = out[i + j] + ai * bj
    return pnorm(out)


def pmonic(p: list[Cyc]) -> list[Cyc]:
    if not p:
        return p
    lead = p[-1]
    if lead.is_one():
        return list(p)
    inv = lead.inv()
    return [inv * c for c in p]


def pdivmod(a: list[Cyc], b: list[Cyc]) -> tuple[list[Cyc], list[Cyc]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    field = b[-1].field
    r = list(a)
    db = len(b) - 1
    lead_inv = b[-1].inv()
    q = [field.zero] * max(len(a) - db, 1)
    while len(pnorm(r)) - 1 >= db:
        r = pnorm(r)
        dr = len(r) - 1
        c = r[-1] * lead_inv
        q[dr - db] = c
        for j in range(db + 1):
            r[dr - db + j] = r[dr - db + j] - c * b[j]
    return pnorm(q), pnorm(r)


def pgcd(a: list[Cyc], b: list[Cyc]) -> list[Cyc]:
    a, b = pnorm(list(a)), pnorm(list(b))
    while b:
        a, b = b, pdivmod(a, b)[1]
    return pmonic(a)


def plcm(a: list[Cyc], b: list[Cyc]) -> list[Cyc]:
    if not a or not b:
        return []
    g = pgcd(a, b)
    q, _ = pdivmod(pmul(a, b), g)
    return pmonic(q)


def pderiv(p: list[Cyc]) -> list[Cyc]:
    return pnorm([c * k for k, c in enumerate(p)][1:])


def psquarefree(p: list[Cyc]) -> list[Cyc]:
    """The radical p / gcd(p, p'), monic."""
    g = pgcd(p, pderiv(p))
    q, _ = pdivmod(p, g)
    return pmonic(q)


def peval_matrix(field: CyclotomicField, p: list[Cyc], a) -> Matrix:
    """Evaluate the polynomial at a square matrix (Horner)."""
    n = len(a)
    out = zeros(field, n, n)
    for c in reversed(p):
        out = mat_mul(field, out, a)
        if not c.is_zero():
            for t in range(n):
                out[t][t] = out[t][t] + c
    return out


def minpoly(field: CyclotomicField, a) -> list[Cyc]:
    """Minimal polynomial via Krylov iteration, lcm over basis seeds.

    Seeds already inside the span of previously annihilated vectors are
    skipped: the running lcm annihilates that whole span.
    """
    n = len(a)
    result = [field.one]
    seen: list[tuple[int, Vector]] = []  # global echelon of annihilated vectors

    def global_reduce(v: Vector) -> Vector:
        v = list(v)
        for pc, bv in seen:
            f = v[pc]
            if not f.is_zero():
                v = [x - f * y for x, y in zip(v, bv)]
        return v

    def global_add(v: Vector):
        w = global_reduce(v)
        piv = next((k for k, x in enumerate(w) if not x.is_zero()), None)
        if piv is not None:
            inv = w[piv].inv()
            seen.append((piv, [inv * x for x in w]))

    for seed in range(n):
        if pdeg(result) == n:
            break
        v = [field.zero] * n
        v[seed] = field.one
        if all(x.is_zero() for x in global_reduce(v)):
            continue
        combo = [field.one]
        ech: list[tuple[int, Vector, list[Cyc]]] = []  # (pivot, vector, combo)
        while True:
            w = list(v)
            cw = list(combo)
            for pc, bv, bc in ech:
                f = w[pc]
                if f.is_zero():
                    continue
                w = [x - f * y for x, y in zip(w, bv)]
                cw = psub(cw, pscale(bc, f))
            piv = next((k for k, x in enumerate(w) if not x.is_zero()), None)
            if piv is None:
                ann = pmonic(pnorm(cw))
                result = plcm(result, ann)
                break
            inv = w[piv].inv()
            wn = [inv * x for x in w]
            ech.append((piv, wn, pscale(cw, inv)))
            global_add(wn)
            v = mat_vec(a, v)
            combo = [field.zero] + combo
    return result
