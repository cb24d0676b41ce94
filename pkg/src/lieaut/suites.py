"""Verification suites: negation witnesses, the scalar test, the Borel
line-identity suite, the nilpotent-subspace bound, and the parabolic
opposition check.

Everything here is exact.  A suite never raises on a failing case; it
records the case with reproduction data and the caller inspects the
report.  Preconditions (rank, enumeration guards) do raise.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from . import linalg
from .automorphisms import (
    LinMap,
    NilradicalDesc,
    chevalley_involution,
    exp_ad,
    grading_aut,
    identity_map,
    is_automorphism,
    nilradical,
    semilinear_af,
    torus_aut,
    weyl_rep,
)
from .chevalley import LieAlgebra, LieVec, Subspace, intersect, line, span
from .cyclotomic import Cyc
from .decompositions import jacobson_morozov, jordan
from .errors import (
    NotApplicableError,
    NotNormalFormError,
    UnrepresentableScalarError,
)
from .rootsystem import (
    Root,
    WeylWord,
    all_subsets,
    closed_subsets_max,
    is_distinguished,
    longest_element,
    opposite_involution,
    weyl_enumerate,
)


@dataclass
class CaseResult:
    case_id: str
    inputs: str
    passed: bool
    detail: dict = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "id": self.case_id,
            "input": self.inputs,
            "pass": self.passed,
            "detail": self.detail,
        }


@dataclass
class SuiteReport:
    suite: str
    cases: list[CaseResult] = dc_field(default_factory=list)

    def add(self, case_id: str, inputs: str, passed: bool, **detail) -> CaseResult:
        case = CaseResult(case_id, inputs, passed, dict(detail))
        self.cases.append(case)
        return case

    @property
    def total(self) -> int:
        return len(self.cases)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.passed)

    def all_passed(self) -> bool:
        return self.passed == self.total

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": [c.to_dict() for c in self.cases],
            "summary": {"total": self.total, "passed": self.passed},
        }


# -- negation witnesses --------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """An automorphism certified to send the target to its negative."""

    target: LieVec
    map: LinMap

    def verify(self, algebra: LieAlgebra) -> bool:
        if self.map.trace is None:
            return False
        rebuilt = linalg.identity(algebra.field, algebra.dim)
        for factor in self.map.trace:
            rebuilt = linalg.mat_mul(algebra.field, rebuilt, factor.matrix(algebra))
        if not linalg.mat_eq(rebuilt, self.map.rows):
            return False
        if self.map(self.target) != -self.target:
            return False
        return is_automorphism(algebra, self.map)

    def describe(self) -> dict:
        return {
            "target": str(self.target),
            "trace": [f.describe() for f in self.map.trace or ()],
        }


def minus_witness_nilpotent(algebra: LieAlgebra, e: LieVec) -> Witness:
    """Witness for a nonzero nilpotent via its sl2 grading: the grading
    automorphism with scalar i acts by i^2 = -1 on the weight-2 space."""
    triple = jacobson_morozov(algebra, e)
    return Witness(e, grading_aut(algebra, triple.h, algebra.field.i))


def minus_witness_normal_form(
    algebra: LieAlgebra, s: LieVec, jprime: Sequence[int]
) -> Witness:
    """Witness for s + sum of e_{alpha_j} over j in jprime, with s in the
    Cartan subalgebra vanishing on those simple roots.

    Composition: a sign-fixing torus, after the longest element of the
    subsystem Weyl group (which fixes s), after the Chevalley involution.
    """
    rs = algebra.roots
    f = algebra.field
    jprime = tuple(sorted(jprime))
    if not s.in_cartan():
        raise NotNormalFormError("semisimple part must lie in the Cartan subalgebra")
    x = s
    for j in jprime:
        x = x + algebra.e(rs.simple(j))
    for j in jprime:
        val = _cartan_eval(algebra, s, rs.simple(j))
        if not val.is_zero():
            raise NotNormalFormError(
                f"semisimple part does not vanish on simple root {j + 1}"
            )
    omega = chevalley_involution(algebra)
    if not jprime:
        return Witness(x, omega)
    w0j = longest_element_of_subset(algebra, jprime)
    ww = weyl_rep(algebra, w0j)
    stage = ww.compose(omega)
    values = [f.one] * algebra.rank
    for j in jprime:
        img = stage(algebra.e(rs.simple(j)))
        coeff = img.e_coeff(rs.simple(_target_node(rs, w0j, j)))
        # stage sends e_j to (sign) e_{j'}; the torus must flip it to -e_{j'}
        if coeff.is_zero():
            raise UnrepresentableScalarError("unexpected zero image coefficient")
        need = -(coeff.inv())
        if not need.is_rational() or abs(need.rational_value()) != 1:
            raise UnrepresentableScalarError(
                f"required torus value {need} is not a sign"
            )
        values[_target_node(rs, w0j, j)] = need
    tor = torus_aut(algebra, values)
    return Witness(x, tor.compose(stage))


def _target_node(rs, w0j: WeylWord, j: int) -> int:
    img = rs.negate(w0j.apply(rs.simple(j)))
    for i in range(rs.rank):
        if img == rs.simple(i):
            return i
    raise NotNormalFormError("subsystem longest element did not permute the simples")


def longest_element_of_subset(algebra: LieAlgebra, jset: Sequence[int]) -> WeylWord:
    """Longest element of the parabolic subgroup generated by the given nodes."""
    elements = weyl_enumerate(algebra.cartan, generators=tuple(jset))
    top = max(len(w.word) for w in elements)
    longest = [w for w in elements if len(w.word) == top]
    assert len(longest) == 1
    return longest[0]


def _cartan_eval(algebra: LieAlgebra, s: LieVec, root: Root) -> Cyc:
    """alpha(s) for s in the Cartan subalgebra."""
    val = algebra.field.zero
    for i, c in enumerate(s.h_part()):
        if not c.is_zero():
            pair = sum(
                root[t] * algebra.cartan.entries[i][t] for t in range(algebra.rank)
            )
            val = val + c * pair
    return val


def minus_witness(algebra: LieAlgebra, x: LieVec) -> Witness:
    """Dispatch on the Jordan decomposition.

    Pure nilpotents go through the sl2 grading; elements in normal form
    (Cartan semisimple part plus unit coefficients on vanishing simple
    roots) through the involution composition.  Anything else is outside
    the witness corpus and raises.
    """
    if x.is_zero():
        return Witness(x, identity_map(algebra))
    pair = jordan(algebra, x)
    s, e = pair.semisimple, pair.nilpotent
    if s.is_zero():
        return minus_witness_nilpotent(algebra, e)
    if not s.in_cartan():
        raise NotNormalFormError(
            "semisimple part is outside the Cartan subalgebra; conjugate first"
        )
    jprime = []
    rs = algebra.roots
    for k, c in enumerate(e.coords):
        if c.is_zero():
            continue
        if k < algebra.rank:
            raise NotNormalFormError("nilpotent part has Cartan coordinates")
        root = rs.all[k - algebra.rank]
        if not rs.is_positive(root) or sum(root) != 1 or not c.is_one():
            raise NotNormalFormError(
                "nilpotent part must be a unit sum of simple root vectors"
            )
        jprime.append(root.index(1))
    return minus_witness_normal_form(algebra, s, jprime)


# -- scalar maps ----------------------------------------------------------


def scalar_local_test(algebra: LieAlgebra, c: Cyc | int) -> bool:
    """Whether c * identity agrees with some automorphism at the probe
    coroot: true exactly when c * h_{alpha_1} is again a signed coroot."""
    if not isinstance(c, Cyc):
        c = algebra.field.rational(c)
    if c.is_zero():
        raise ValueError("scalar must be nonzero")
    return _is_coroot_multiple(algebra, c, algebra.roots.simple(0))


def _is_coroot_multiple(algebra: LieAlgebra, c: Cyc, probe: Root) -> bool:
    target = tuple((c * v for v in algebra.coroot(probe).coords))
    candidates = {algebra.coroot(b).coords for b in algebra.roots.all}
    return target in candidates


def scalari_suite(algebra: LieAlgebra, scalars: Sequence[Cyc] | None = None) -> SuiteReport:
    """The scalar test over a standard sample, plus the coroot-orbit
    consistency of the Weyl representatives the test relies on."""
    f = algebra.field
    if scalars is None:
        scalars = [
            f.one,
            f.rational(-1),
            f.rational(2),
            f.rational(1, 2),
            f.rational(3),
            f.rational(-2),
            f.i,
            f.zeta(1),
            f.one + f.i,
        ]
    report = SuiteReport("scalari")
    probes = [algebra.roots.simple(0)]
    if algebra.rank <= 2:
        probes = list(algebra.roots.all)
    for c in scalars:
        expected = c.is_rational() and abs(c.rational_value()) == 1
        for probe in probes:
            got = _is_coroot_multiple(algebra, c, probe)
            report.add(
                f"scalar[{c}]@h({_root_label(probe)})",
                f"c = {c}",
                got == expected,
                accepted=got,
                expected=expected,
            )
    # the representatives realize the reflection action on coroots
    elements = weyl_enumerate(algebra.cartan, max_size=200000)
    sample = elements if len(elements) <= 16 else elements[:8] + elements[-8:]
    alpha1 = algebra.roots.simple(0)
    candidates = {algebra.coroot(b).coords for b in algebra.roots.all}
    for w in sample:
        img = weyl_rep(algebra, w)(algebra.coroot(alpha1))
        ok = img.coords == algebra.coroot(w.apply(alpha1)).coords
        report.add(
            f"orbit[{'s' + 's'.join(str(i + 1) for i in w.word) if w.word else 'e'}]",
            "Ad(w).h_alpha1",
            ok and img.coords in candidates,
        )
    return report


def _root_label(root: Root) -> str:
    from .chevalley import _root_str

    return _root_str(root)


# -- the Borel line-identity suite ---------------------------------------


def campo_suite(
    algebra: LieAlgebra, sample_ks: Sequence[Cyc] | None = None
) -> SuiteReport:
    """Exact verification of the displayed line identities.

    (a) intersection lines at the simple reflections, (b) every root line
    from a translated pair of nilradicals, (c) the generic unipotent line,
    (d) the binomial chain expansion with nonvanishing coefficients,
    (e) the diagonal-map constraint system collapsing to the scalars,
    (f) each nontrivial Galois twist breaking a generic line.
    """
    if algebra.rank < 2:
        raise NotApplicableError("the line identities need rank at least 2")
    f = algebra.field
    rs = algebra.roots
    if sample_ks is None:
        sample_ks = [f.one, f.rational(-1), f.rational(2), f.rational(1, 2), f.zeta(1)]
    report = SuiteReport("campo")
    npos_space = algebra.n_plus()
    nneg_space = algebra.n_minus()
    classes = _UnionFind(algebra.dim)

    def note_line(vec: LieVec):
        sup = vec.support()
        for a, b in zip(sup, sup[1:]):
            classes.union(a, b)

    # (a) simple-reflection intersection lines
    for i in range(algebra.rank):
        si = weyl_rep(algebra, (i,))
        plus = intersect(si.on_subspace(nneg_space), npos_space)
        minus = intersect(si.on_subspace(npos_space), nneg_space)
        ok_plus = plus == line(algebra, algebra.e(rs.simple(i)))
        ok_minus = minus == line(algebra, algebra.e(rs.negate(rs.simple(i))))
        report.add(
            f"(a)i={i + 1}",
            "Ad(s_i) nilradical intersections",
            ok_plus and ok_minus,
            plus_dim=plus.dim,
            minus_dim=minus.dim,
        )

    # (b) every root line arises from translated nilradicals
    elements = weyl_enumerate(algebra.cartan, max_size=200000)
    for alpha in rs.all:
        found = None
        for w in elements:
            for i in range(algebra.rank):
                if w.apply(rs.simple(i)) == alpha:
                    found = (w, i)
                    break
            if found:
                break
        w, i = found
        lhs = intersect(
            weyl_rep(algebra, w.word + (i,)).on_subspace(nneg_space),
            weyl_rep(algebra, w).on_subspace(npos_space),
        )
        expected = line(algebra, algebra.e(alpha))
        report.add(
            f"(b)root={_root_label(alpha)}",
            f"w = {list(w.word)}, i = {i + 1}",
            lhs == expected,
        )
        if lhs == expected:
            note_line(algebra.e(alpha))

    # (c) the generic line at each sampled parameter
    for i in range(algebra.rank):
        alpha = rs.simple(i)
        e_plus = algebra.e(alpha)
        e_minus = algebra.e(rs.negate(alpha))
        h_alpha = algebra.coroot(alpha)
        si = weyl_rep(algebra, (i,))
        for k in sample_ks:
            xk = exp_ad(algebra, e_plus, k)
            lhs = intersect(
                xk.compose(si).on_subspace(npos_space),
                xk.on_subspace(nneg_space),
            )
            vec = e_minus + k * h_alpha - (k * k) * e_plus
            ok = lhs == line(algebra, vec)
            report.add(
                f"(c)i={i + 1},k={k}",
                f"unipotent parameter {k}",
                ok,
            )
            if ok:
                note_line(vec)

    # (d) chain expansion with binomial coefficients, all nonzero
    for alpha in rs.all:
        xmat = exp_ad(algebra, algebra.e(alpha), f.one)
        for beta in rs.all:
            if beta == alpha or beta == rs.negate(alpha):
                continue
            p, q = rs.alpha_chain(alpha, beta)
            img = xmat(algebra.e(beta))
            ok = True
            expected_support = set()
            for r in range(q + 1):
                shifted = tuple(b + r * a for a, b in zip(alpha, beta))
                expected_support.add(algebra.e_index(shifted))
                coeff = img.e_coeff(shifted)
                if coeff.is_zero():
                    ok = False
                    continue
                val = coeff.rational_value() if coeff.is_rational() else None
                if r == 0:
                    ok = ok and coeff.is_one()
                elif val is None or abs(val) != math.comb(p + r, r):
                    ok = False
            ok = ok and set(img.support()) == expected_support
            report.add(
                f"(d)a={_root_label(alpha)},b={_root_label(beta)}",
                f"chain p={p}, q={q}",
                ok,
            )
            if ok:
                note_line(img)

    # (e) the collected line constraints pin a single scaling constant
    monochrome = classes.class_count() == 1
    report.add(
        "(e)diagonal-constraints",
        "solution space of the line constraints",
        monochrome,
        classes=classes.class_count(),
    )

    # (f) every nontrivial Galois index breaks some sampled generic line
    alpha1 = rs.simple(0)
    base_vecs = []
    for k in sample_ks:
        vec = (
            algebra.e(rs.negate(alpha1))
            + k * algebra.coroot(alpha1)
            - (k * k) * algebra.e(alpha1)
        )
        base_vecs.append((k, vec))
    for g in algebra.field.units():
        if g == 1:
            continue
        broken = None
        for k, vec in base_vecs:
            if algebra.field.galois(g, k) != k:
                twisted = semilinear_af(algebra, g, vec)
                if not line(algebra, vec).contains(twisted):
                    broken = k
                    break
        report.add(
            f"(f)galois={g}",
            f"zeta -> zeta^{g}",
            broken is not None,
            broken_at=str(broken),
        )
    return report


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def class_count(self) -> int:
        return len({self.find(a) for a in range(len(self.parent))})


# -- nilpotent subspace bound ---------------------------------------------


def dkk_suite(algebra: LieAlgebra, limit: int = 24) -> SuiteReport:
    """Exhaustive check of the nilpotent-subspace dimension bound and the
    identification of the maximizers with the Borel nilradicals."""
    rs = algebra.roots
    report = SuiteReport("dkk")
    bound, maximizers = closed_subsets_max(rs, limit)
    half = (algebra.dim - algebra.rank) // 2
    report.add(
        "bound",
        f"max closed |S| with S, -S disjoint",
        bound == len(rs.positive) == half,
        bound=bound,
        expected=half,
    )
    elements = weyl_enumerate(algebra.cartan, max_size=200000)
    weyl_images = {}
    for w in elements:
        img = tuple(sorted((w.apply(a) for a in rs.positive), key=rs.index.get))
        weyl_images[img] = w
    report.add(
        "maximizers=weyl-orbit",
        "maximizer set vs {w(positive)}",
        set(maximizers) == set(weyl_images) and len(weyl_images) == len(elements),
        count=len(maximizers),
        weyl_order=len(elements),
    )
    for subset in maximizers:
        w = weyl_images.get(subset)
        label = ",".join(_root_label(r) for r in subset)
        if w is None:
            report.add(f"maximizer[{label}]", "matches a nilradical", False)
            continue
        space = span(algebra, [algebra.e(r) for r in subset])
        desc = NilradicalDesc.make(w, {a: algebra.field.zero for a in
                                       _inversion(rs, w)})
        ok_nil = space == nilradical(algebra, desc)
        ok_closed = _is_nilpotent_subalgebra(algebra, subset, space)
        report.add(
            f"maximizer[{label}]",
            f"w = {list(w.word)}",
            ok_nil and ok_closed,
        )
    return report


def _inversion(rs, w):
    from .rootsystem import inversion_roots

    return inversion_roots(rs, w)


def _is_nilpotent_subalgebra(algebra: LieAlgebra, subset, space: Subspace) -> bool:
    """Bracket closure, vanishing lower central series, nilpotent probe sum."""
    from .decompositions import is_nilpotent

    vectors = [algebra.e(r) for r in subset]
    for a in vectors:
        for b in vectors:
            if not space.contains(algebra.bracket(a, b)):
                return False
    current = list(space.rows)
    for _ in range(len(subset) + 1):
        if not current:
            break
        nxt = []
        for va in current:
            for vb in space.rows:
                nxt.append(
                    algebra.bracket(algebra.vec(va), algebra.vec(vb)).coords
                )
        from .chevalley import span_rows

        current = list(span_rows(algebra.field, algebra.dim, nxt).rows)
    if current:
        return False
    probe = algebra.zero()
    for v in vectors:
        probe = probe + v
    return is_nilpotent(algebra, probe)


# -- parabolic opposition ---------------------------------------------------


def opposite_suite(cm) -> SuiteReport:
    """For every distinguished standard parabolic: its root set is sent to
    the opposite one by w0, equivalently its node set is fixed by the
    opposite involution."""
    from .rootsystem import RootSystem, root_subsystem

    rs = RootSystem(cm) if not isinstance(cm, RootSystem) else cm
    report = SuiteReport("opposite")
    w0 = longest_element(rs.cartan)
    theta = opposite_involution(rs.cartan)
    minus_one = all(
        w0.apply(rs.simple(i)) == rs.negate(rs.simple(i)) for i in range(rs.rank)
    )
    distinguished = []
    for jset in all_subsets(rs.rank):
        if not is_distinguished(rs, jset):
            continue
        distinguished.append(jset)
        theta_fixed = set(theta[j] for j in jset) == set(jset)
        par_roots = set(root_subsystem(rs, jset)) | set(rs.positive)
        opp_roots = set(root_subsystem(rs, jset)) | {
            rs.negate(r) for r in rs.positive
        }
        moved = {w0.apply(r) for r in par_roots}
        ok = theta_fixed and moved == opp_roots
        label = "{" + ",".join(str(j + 1) for j in jset) + "}"
        report.add(
            f"J={label}",
            "distinguished parabolic vs w0",
            ok,
            theta_fixed=theta_fixed,
            blanket_minus_one=minus_one,
        )
    report.add(
        "inventory",
        "distinguished node sets",
        True,
        sets=["{" + ",".join(str(j + 1) for j in js) + "}" for js in distinguished],
    )
    return report


# -- the witness corpus ------------------------------------------------------


def corpus_elements(algebra: LieAlgebra, mixed_cap: int = 25) -> list[tuple[str, LieVec]]:
    """The negation-witness corpus: unit sums of simple root vectors, the
    subregular element in G2, Cartan grid elements, and mixed normal forms."""
    rs = algebra.roots
    n = algebra.rank
    out: list[tuple[str, LieVec]] = []
    seen = set()

    def push(label: str, x: LieVec):
        if x.coords not in seen:
            seen.add(x.coords)
            out.append((label, x))

    for jset in all_subsets(n):
        x = algebra.zero()
        for j in jset:
            x = x + algebra.e(rs.simple(j))
        push(f"nilpotent[{','.join(str(j + 1) for j in jset)}]", x)
    if algebra.cartan.family == "G" and n == 2:
        sub = algebra.e((0, 1)) + algebra.e((3, 1))
        push("nilpotent[subregular]", sub)
    grid = range(-2, 3) if n <= 2 else range(-1, 2)
    for coeffs in itertools.product(grid, repeat=n):
        push(
            f"semisimple[{','.join(str(c) for c in coeffs)}]",
            algebra.cartan_vec(coeffs),
        )
    for jset in all_subsets(n):
        if not jset:
            continue
        count = 0
        for coeffs in itertools.product(grid, repeat=n):
            s = algebra.cartan_vec(coeffs)
            if any(
                not _cartan_eval(algebra, s, rs.simple(j)).is_zero() for j in jset
            ):
                continue
            x = s
            for j in jset:
                x = x + algebra.e(rs.simple(j))
            push(
                f"mixed[{','.join(str(c) for c in coeffs)}"
                f"|{','.join(str(j + 1) for j in jset)}]",
                x,
            )
            count += 1
            if count >= mixed_cap:
                break
    return out


def inversa_corpus_suite(algebra: LieAlgebra, max_rank: int = 4) -> SuiteReport:
    """Run the negation-witness construction over the whole corpus; every
    case must produce a trace-verified automorphism sending x to -x."""
    if algebra.rank > max_rank:
        raise NotApplicableError(f"corpus guard: rank {algebra.rank} > {max_rank}")
    report = SuiteReport("inversa")
    for label, x in corpus_elements(algebra):
        try:
            witness = minus_witness(algebra, x)
            ok = witness.verify(algebra)
            detail = {"trace": [f.kind for f in witness.map.trace or ()]}
        except Exception as exc:  # a failing construction is a failing case
            ok = False
            detail = {"error": f"{type(exc).__name__}: {exc}"}
        report.add(label, str(x), ok, **detail)
    return report


# -- automorphism closure ----------------------------------------------------


def sample_automorphisms(algebra: LieAlgebra, count: int, rng) -> list[LinMap]:
    """Deterministic mixed-generator automorphism samples."""
    f = algebra.field
    rs = algebra.roots
    t_choices = [f.one, f.rational(-1), f.rational(2), f.rational(1, 2)]
    v_choices = [f.one, f.rational(-1), f.rational(2), f.rational(1, 2), f.i]
    out = []
    for _ in range(count):
        m = identity_map(algebra)
        for _ in range(rng.randint(1, 3)):
            pick = rng.randrange(5)
            if pick == 0:
                root = rs.all[rng.randrange(len(rs.all))]
                m = exp_ad(algebra, algebra.e(root), rng.choice(t_choices)).compose(m)
            elif pick == 1:
                word = tuple(
                    rng.randrange(algebra.rank) for _ in range(rng.randint(1, 4))
                )
                m = weyl_rep(algebra, word).compose(m)
            elif pick == 2:
                values = [rng.choice(v_choices) for _ in range(algebra.rank)]
                m = torus_aut(algebra, values).compose(m)
            elif pick == 3:
                root = rs.positive[rng.randrange(len(rs.positive))]
                m = grading_aut(algebra, algebra.coroot(root), f.i).compose(m)
            else:
                m = chevalley_involution(algebra).compose(m)
        out.append(m)
    return out


def sample_elements(algebra: LieAlgebra, count: int, rng) -> list[LieVec]:
    """Stratified element samples: Cartan, positive-nilpotent, generic."""
    f = algebra.field
    rs = algebra.roots
    out = []
    for idx in range(count):
        stratum = idx % 3
        if stratum == 0:
            out.append(
                algebra.cartan_vec([rng.randint(-2, 2) for _ in range(algebra.rank)])
            )
        elif stratum == 1:
            x = algebra.zero()
            for r in rs.positive:
                if rng.randint(0, 1):
                    x = x + algebra.e(r).scale(rng.randint(-2, 2))
            out.append(x)
        else:
            out.append(
                algebra.vec([f.rational(rng.randint(-2, 2)) for _ in range(algebra.dim)])
            )
    return out


def closure_suite(
    algebra: LieAlgebra, n_autos: int = 10, n_elements: int = 10, seed: int = 7091
) -> SuiteReport:
    """Sampled invariance of nilpotency and semisimplicity under
    automorphisms, and conjugation closure of negation witnesses."""
    import random

    from .decompositions import ad_predicates

    families = "ABCDEFG"
    rng = random.Random(
        seed * 1009 + families.index(algebra.cartan.family) * 31 + algebra.cartan.rank
    )
    report = SuiteReport("closure")
    autos = sample_automorphisms(algebra, n_autos, rng)
    elements = sample_elements(algebra, n_elements, rng)
    preds = [ad_predicates(algebra, x) for x in elements]
    for ai, m in enumerate(autos):
        for xi, x in enumerate(elements):
            mx = m(x)
            got = ad_predicates(algebra, mx)
            report.add(
                f"invariance[{ai},{xi}]",
                "nilpotency and semisimplicity preserved",
                got == preds[xi],
                before=list(preds[xi]),
                after=list(got),
            )
    if algebra.rank <= 4:
        for ci, (label, x) in enumerate(corpus_elements(algebra)[:3]):
            m = autos[ci % len(autos)]
            try:
                witness = minus_witness(algebra, x)
                conj = m.compose(witness.map).compose(m.inverse())
                mx = m(x)
                ok = conj(mx) == -mx and is_automorphism(algebra, conj)
            except Exception as exc:
                ok = False
                report.add(f"conjugation[{label}]", str(x), ok,
                           error=f"{type(exc).__name__}: {exc}")
                continue
            report.add(f"conjugation[{label}]", str(x), ok)
    return report


# -- construction self-check -------------------------------------------------


def jacobi_suite(algebra: LieAlgebra) -> SuiteReport:
    """Jacobi sweep plus the chain-length and sign relations on constants."""
    rs = algebra.roots
    report = SuiteReport("jacobi")
    report.add("jacobi", "all basis triples", algebra.jacobi_check())
    ok_signs = True
    ok_chain = True
    for (a, b), v in algebra.nconst.items():
        if algebra.nconst[(b, a)] != -v:
            ok_signs = False
        if algebra.nconst[(rs.negate(a), rs.negate(b))] != -v:
            ok_signs = False
        p, _ = rs.alpha_chain(a, b)
        if abs(v) != p + 1:
            ok_chain = False
    report.add("antisymmetry", "N(b,a) = -N(a,b), N(-a,-b) = -N(a,b)", ok_signs)
    report.add("chain-lengths", "|N(a,b)| = p + 1", ok_chain)
    half = (algebra.dim - algebra.rank) // 2
    report.add(
        "nilradical-dim",
        "dim n = (dim g - rank)/2",
        len(rs.positive) == half,
    )
    return report
