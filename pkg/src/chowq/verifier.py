"""Splitting-principle checks of the characteristic-class identities.

A :class:`SplitModel` is the polynomial ring on Chern roots ``y1..yn`` (plus
``l = c1(V)`` in odd rank) of a bundle ``V = L1 + ... + Ln + Ln* + ... + L1*``
(``+ M`` in odd rank).  A maximal isotropic subbundle is named by the set of
indices whose roots are negated.  Every check returns a :class:`Report`.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .catalog import RingKind, make_ring
from .polynomials import (GeneratorTable, Polynomial, elementary_symmetric_all,
                          graded_component, series_inverse, substitute, truncate)
from .report import FAIL, PASS, SAT, UNSAT, Report
from .rings import comparison_embed, normal_form, point_degree, pushforward
from .scalars import Variant

HALF = Fraction(1, 2)


class Parity(str, enum.Enum):
    EVEN = "even"
    ODD = "odd"


class Role(str, enum.Enum):
    E = "E"
    F = "F"
    V = "V"
    V_MOD_E = "V_MOD_E"
    V_MOD_F = "V_MOD_F"
    E_DUAL = "E_DUAL"
    F_DUAL = "F_DUAL"


class BoundTooLarge(ValueError):
    code = "BOUND_TOO_LARGE"


@dataclass(frozen=True)
class SplitModel:
    n: int
    parity: Parity = Parity.EVEN
    variant: Variant = Variant.INT

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a split model needs n >= 1")
        object.__setattr__(self, "parity", Parity(self.parity))

    @property
    def odd(self) -> bool:
        return self.parity is Parity.ODD

    @property
    def rank(self) -> int:
        return 2 * self.n + (1 if self.odd else 0)

    @property
    def table(self) -> GeneratorTable:
        gens = [(f"y{i}", 1) for i in range(1, self.n + 1)]
        return GeneratorTable(gens + [("l", 1)] if self.odd else gens)

    def gen(self, name: str) -> Polynomial:
        return Polynomial.gen(self.table, name, self.variant)

    def const(self, c) -> Polynomial:
        return Polynomial.constant(self.table, c, self.variant)

    def roots(self, flips=frozenset()) -> list[Polynomial]:
        """Chern roots of the isotropic subbundle with the given flip set."""
        return [-self.gen(f"y{i}") if i in flips else self.gen(f"y{i}")
                for i in range(1, self.n + 1)]

    def l(self) -> Polynomial:
        return self.gen("l") if self.odd else Polynomial.zero(self.table, self.variant)


@dataclass(frozen=True)
class SubbundleSpec:
    flips: frozenset = frozenset()
    role: Role = Role.E

    def __post_init__(self):
        object.__setattr__(self, "flips", frozenset(self.flips))
        object.__setattr__(self, "role", Role(self.role))

    @property
    def family(self) -> int:
        return len(self.flips) % 2


def _total(model: SplitModel, roots) -> Polynomial:
    return reduce(lambda acc, r: acc * (model.const(1) + r), roots, model.const(1))


def split_chern(model: SplitModel, spec: SubbundleSpec, bound: int) -> Polynomial:
    """Total Chern class of ``spec`` in ``model``, truncated above ``bound``.

    Quotients ``V/E`` are computed from the complementary roots, which agrees
    with ``c(V) * series_inverse(c(E))`` in every degree.
    """
    if bound > 2 * model.rank:
        raise BoundTooLarge(f"bound {bound} exceeds 2*rank = {2 * model.rank}")
    for i in spec.flips:
        if not 1 <= i <= model.n:
            raise ValueError(f"flip index {i} outside 1..{model.n}")
    roots = model.roots(spec.flips)
    role = spec.role
    if role in (Role.E, Role.F):
        factors = roots
    elif role in (Role.E_DUAL, Role.F_DUAL):
        factors = [-r for r in roots]
    elif role is Role.V:
        factors = roots + [-r for r in roots]
    else:
        factors = [-r for r in roots]
    if model.odd and role in (Role.V, Role.V_MOD_E, Role.V_MOD_F):
        factors = factors + [model.l()]
    return truncate(_total(model, factors), bound)


def chern_pieces(total: Polynomial, top: int) -> list[Polynomial]:
    return [graded_component(total, d) for d in range(top + 1)]


def _halve(p: Polynomial) -> Polynomial:
    return p.to_variant(Variant.DYADIC).scale(HALF)


def _flip_label(s) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


# -- Chern classes of isotropic subbundles ----------------------------------------------

def fulton_check(n: int, parity=Parity.EVEN, s_e=frozenset(), s_f=frozenset()) -> Report:
    model = SplitModel(n, parity)
    s_e, s_f = frozenset(s_e), frozenset(s_f)
    rep = Report("fulton", {"n": n, "parity": model.parity.value,
                            "S_E": _flip_label(s_e), "S_F": _flip_label(s_f)})
    d = n + (1 if model.odd else 0)
    bound = d
    ce = chern_pieces(split_chern(model, SubbundleSpec(s_e, Role.E), bound), n)
    cf = chern_pieces(split_chern(model, SubbundleSpec(s_f, Role.F), bound), n)
    qe = chern_pieces(split_chern(model, SubbundleSpec(s_e, Role.V_MOD_E), bound), d)
    qf = chern_pieces(split_chern(model, SubbundleSpec(s_f, Role.V_MOD_F), bound), d)
    for i in range(1, n + 1):
        diff = (ce[i] - cf[i]).to_variant(Variant.MOD2)
        if diff:
            rep.fail(part="mod2", degree=i, value=diff.to_text())
        half = _halve(ce[i] + cf[i])
        if not half.is_integral():
            rep.fail(part="c_half", degree=i, value=half.to_text())
    for i in range(1, d + 1):
        half = _halve(qe[i] + qf[i])
        if not half.is_integral():
            rep.fail(part="d_half", degree=i, value=half.to_text())
    sign = -1 if len(s_e ^ s_f) % 2 else 1
    if not model.odd and ce[n] != cf[n].scale(sign):
        rep.fail(part="top_sign", degree=n, value=(ce[n] - cf[n].scale(sign)).to_text())
    if qe[d] != qf[d].scale(sign):
        rep.fail(part="quotient_sign", degree=d, value=(qe[d] - qf[d].scale(sign)).to_text())
    if rep.ok:
        top = "c_{d}(V/F) = {s}c_{d}(V/E)" if model.odd else "c_{d}(F) = {s}c_{d}(E)"
        rep.witness = top.format(d=d if model.odd else n, s="+" if sign > 0 else "-")
    return rep


def fulton_suite(n: int, parity=Parity.EVEN, all_pairs: bool = False) -> Report:
    """fulton_check over every flip set (against E = the unflipped subbundle, or all pairs)."""
    subsets = [frozenset(c) for k in range(n + 1)
               for c in itertools.combinations(range(1, n + 1), k)]
    pairs = [(a, b) for a in subsets for b in subsets] if all_pairs else \
        [(frozenset(), b) for b in subsets]
    rep = Report("fulton_suite", {"n": n, "parity": Parity(parity).value, "pairs": len(pairs)})
    for a, b in pairs:
        sub = fulton_check(n, parity, a, b)
        for r in sub.residuals:
            rep.fail(S_E=_flip_label(a), S_F=_flip_label(b), **r)
    return rep


def whitney_invariance_check(n: int, parity=Parity.EVEN) -> Report:
    model = SplitModel(n, parity, Variant.MOD2)
    rep = Report("whitney_invariance", {"n": n, "parity": model.parity.value})
    l = model.l()

    def classes(flips):
        roots = model.roots(flips)
        out = [elementary_symmetric_all(roots, model.table, model.variant)]
        if model.odd:
            out.append(elementary_symmetric_all([r + l for r in roots], model.table, model.variant))
        return out

    ref = classes(frozenset())
    for k in range(1, n + 1):
        for flips in itertools.combinations(range(1, n + 1), k):
            for which, (got, want) in enumerate(zip(classes(frozenset(flips)), ref)):
                for i in range(1, n + 1):
                    if got[i] != want[i]:
                        rep.fail(flips=_flip_label(flips), degree=i,
                                 shifted=bool(which), value=(got[i] - want[i]).to_text())
    return rep


def odd_chern_identity_check(n: int) -> Report:
    """c(E*) + c(F*) = (c(V/E) + c(V/F))/(1 + l), with integral half classes."""
    model = SplitModel(n, Parity.ODD)
    rep = Report("odd_chern_identity", {"n": n})
    bound = 2 * n + 1
    inv = series_inverse(model.const(1) + model.l(), bound)
    e_dual = split_chern(model, SubbundleSpec(frozenset(), Role.E_DUAL), bound)
    q_e = split_chern(model, SubbundleSpec(frozenset(), Role.V_MOD_E), bound)
    for k in range(n + 1):
        for flips in itertools.combinations(range(1, n + 1), k):
            flips = frozenset(flips)
            f_dual = split_chern(model, SubbundleSpec(flips, Role.F_DUAL), bound)
            q_f = split_chern(model, SubbundleSpec(flips, Role.V_MOD_F), bound)
            lhs = e_dual + f_dual
            rhs = truncate((q_e + q_f) * inv, bound)
            for d in range(bound + 1):
                diff = graded_component(lhs - rhs, d)
                if diff:
                    rep.fail(S_F=_flip_label(flips), degree=d, value=diff.to_text())
            halves = _halve(rhs)
            if not halves.is_integral():
                rep.fail(S_F=_flip_label(flips), part="integrality", value=halves.to_text())
    return rep


# -- Euler classes and the quadric tower -----------------------------------------------------

def euler_axioms_check(n: int) -> Report:
    if not 2 <= n <= 5:
        raise ValueError("euler_axioms_check needs 2 <= n <= 5")
    rep = Report("euler_axioms", {"n": n})
    tower = make_ring(RingKind.FLAG_TOWER, n)
    hs = [tower.gen("h1")] + [tower.gen(f"h{k}") for k in range(2, n + 1)]
    prod_h = reduce(lambda a, b: a * b, hs)
    xn = tower.gen("xn")
    # (i) top Chern class of V from the top-level quadric relation
    h = tower.gen(f"h{n}")
    c2n = h ** (2 * n)
    for j in range(1, n):
        c2n = c2n + tower.gen(f"c{2 * j}V") * h ** (2 * n - 2 * j)
    c2n = -c2n
    lhs = normal_form(tower, prod_h * prod_h)
    if lhs != normal_form(tower, c2n.scale((-1) ** n)):
        rep.fail(part="square", value=(lhs - normal_form(tower, c2n.scale((-1) ** n))).to_text())
    if lhs != normal_form(tower, xn * xn):
        rep.fail(part="square_vs_euler", value=(lhs - normal_form(tower, xn * xn)).to_text())
    # (ii) h_k x_(k-1) = x_k at every level, and in the single quadric ring
    for k in range(2, n + 1):
        xk = xn if k == n else tower.gen(f"x{k}")
        res = normal_form(tower, tower.gen(f"h{k}") * tower.gen(f"x{k - 1}") - xk)
        if res:
            rep.fail(part="recursion", level=k, value=res.to_text())
    quad = make_ring(RingKind.QUADRIC_HALVES, n)
    res = normal_form(quad, quad.gen("h") * quad.gen("x") - quad.gen("xn"))
    if res:
        rep.fail(part="recursion", level="quadric", value=res.to_text())
    # (iii) over a point x restricts to -(orientation)(e - f)
    src = make_ring(RingKind.QUADRIC_INTEGRAL_EVEN, n, point=True)
    tgt = make_ring(RingKind.QUADRIC_HALVES, n, point=True)
    e = src("gamma")
    f = src(f"h^{n - 1} - gamma")
    x = tgt("x")
    for o in (1, -1):
        img = comparison_embed(e - f, o, tgt)
        if img != x.scale(-o):
            rep.fail(part="fiber_restriction", orientation=o, value=img.to_text())
    dx = point_degree(tgt, x * x)
    def_ = point_degree(src, (e - f) * (e - f))
    if dx.raw() != def_.raw():
        rep.fail(part="fiber_degree", value=f"deg x^2 = {dx}, deg (e-f)^2 = {def_}")
    # (iv) y_n = f_*(s * h1...hn) = 2^(n-1) xn, pulling back to 2^(n-1) h1...hn
    s_elem = tower.basis_element(tower.notes["s"])
    factor = 2 ** (n - 1)
    y_n = pushforward(tower, s_elem * normal_form(tower, prod_h))
    want = Polynomial.gen(tower.base, "xn", tower.variant).scale(factor)
    if y_n != want:
        rep.fail(part="y_n", value=y_n.to_text())
    pulled = normal_form(tower, y_n.retable(tower.full))
    if pulled != normal_form(tower, prod_h.scale(factor)):
        rep.fail(part="y_n_pullback", value=pulled.to_text())
    if rep.ok:
        rep.witness = {"y_n": y_n.to_text(), "deg x^2": str(dx)}
    return rep


def pushpull_check(n: int) -> Report:
    if not 2 <= n <= 4:
        raise ValueError("pushpull_check needs 2 <= n <= 4")
    tower = make_ring(RingKind.FLAG_TOWER, n)
    rep = Report("pushpull", {"n": n, "factor": 2 ** (n - 1)})
    s_elem = tower.basis_element(tower.notes["s"])
    for name, alpha in _test_classes(tower):
        got = pushforward(tower, s_elem.times_base(alpha))
        if got != alpha.scale(2 ** (n - 1)):
            rep.fail(alpha=name, value=got.to_text())
    return rep


def _test_classes(ring) -> list:
    """1, every base generator and every product of two base generators."""
    gens = [(g, Polynomial.gen(ring.base, g, ring.variant)) for g in ring.base.names]
    out = [("1", Polynomial.one(ring.base, ring.variant))] + gens
    for (a, pa), (b, pb) in itertools.combinations_with_replacement(gens, 2):
        out.append((f"{a}*{b}", pa * pb))
    return out


def projection_formula_check(kind, n: int) -> Report:
    """f_*(b * f^*alpha) = f_*(b) * alpha for every basis monomial b."""
    ring = make_ring(kind, n)
    rep = Report("projection_formula", {"kind": ring.kind, "n": n})
    classes = _test_classes(ring)
    for b in ring.basis:
        el = ring.basis_element(b)
        pushed = pushforward(ring, el)
        for name, alpha in classes:
            pulled = normal_form(ring, alpha.retable(ring.full))
            got = pushforward(ring, pulled * el)
            if got != pushed * alpha:
                rep.fail(monomial=ring.fiber.monomial_text(b) or "1", alpha=name,
                         value=(got - pushed * alpha).to_text())
    rep.witness = {"monomials": len(ring.basis), "classes": len(classes)}
    return rep


# -- oracle substitution ------------------------------------------------------------------

def _exact_half(p: Polynomial) -> Polynomial:
    """p/2 for an integer polynomial whose coefficients are all even."""
    terms = {}
    for m, c in p.terms.items():
        if c % 2:
            raise ArithmeticError(f"{p.to_text()} is not divisible by 2")
        terms[m] = c // 2
    return Polynomial(p.table, p.variant, terms)


def _mod_2l(p: Polynomial, l_name: str = "l") -> Polynomial:
    li = p.table.index(l_name)
    return Polynomial(p.table, p.variant,
                      {m: (c % 2 if m[li] else c) for m, c in p.terms.items()})


def _tower_images(ring, n, table, variant):
    """h_k -> t_k, x_k -> t_1...t_k, c_2jV -> e_j(-t^2), xn -> t_1...t_n."""
    ts = [Polynomial.gen(table, f"t{i}", variant) for i in range(1, n + 1)]
    negsq = elementary_symmetric_all([-(t * t) for t in ts], table, variant)
    prods = [Polynomial.one(table, variant)]
    for t in ts:
        prods.append(prods[-1] * t)
    images = {f"c{2 * j}V": negsq[j] for j in range(1, n)}
    images["xn"] = prods[n]
    for k in range(2, n + 1):
        images[f"h{k}"] = ts[k - 1]
        images[f"x{k - 1}"] = prods[k - 1]
    return images, ts, prods


def _roots_table(n, extra=()):
    return GeneratorTable([(f"t{i}", 1) for i in range(1, n + 1)] + list(extra))


def _vanish(rep, ring, images, table, post=None, **ctx):
    for label, poly in ring.relations:
        val = substitute(ring.lift_poly(poly), images, target=table)
        if post is not None:
            val = post(val)
        if val:
            rep.fail(relation=label, value=val.to_text(), **ctx)


def oracle_relations_check(kind, n: int) -> Report:
    kind = RingKind(kind)
    rep = Report("oracle_relations", {"kind": kind.value, "n": n})
    ring = make_ring(kind, n)
    if kind is RingKind.FLAG_TOWER:
        table = _roots_table(n)
        images, _, _ = _tower_images(ring, n, table, ring.variant)
        _vanish(rep, ring, images, table)
    elif kind is RingKind.QUADRIC_HALVES:
        table = _roots_table(n)
        images, ts, prods = _tower_images(ring, n, table, ring.variant)
        images = {k: v for k, v in images.items() if k in ring.base}
        images.update(h=ts[n - 1], x=prods[n - 1])
        _vanish(rep, ring, images, table)
    elif kind is RingKind.QUADRIC_INTEGRAL_EVEN:
        _oracle_integral_even(rep, ring, n)
    elif kind in (RingKind.FLAG_DN, RingKind.FLAG_BN):
        _oracle_flag(rep, ring, n, kind is RingKind.FLAG_BN)
    else:
        raise ValueError(f"no oracle for {kind.value}")
    return rep


def _oracle_flag(rep, ring, n, odd):
    """Split substitution for the flag presentations.

    D_n: x_i -> t_i, y_i -> +-t_i, c_i -> (e_i(x) + e_i(y))/2.  B_n works in the
    split model of V (x) M, whose roots are z_i = x_i + l; there x_i -> t_i - l,
    y_i -> +-t_i - l (so y_i = +-x_i modulo 2l) and c_i -> (e_i(t) + e_i(+-t))/2.
    """
    table = _roots_table(n, [("l", 1)] if odd else [])
    v = ring.variant
    one = Polynomial.one(table, v)
    ts = [Polynomial.gen(table, f"t{i}", v) for i in range(1, n + 1)]
    l = Polynomial.gen(table, "l", v) if odd else Polynomial.zero(table, v)
    flip_sets = [frozenset(c) for k in range(n + 1)
                 for c in itertools.combinations(range(1, n + 1), k)
                 if odd or k % 2 == 1]          # D_n needs c_n = 0, i.e. opposite families
    ncs = n if odd else n - 1
    et = elementary_symmetric_all(ts, table, v)

    def total(roots):
        return reduce(lambda a, r: a * (one + r), roots, one)

    for flips in flip_sets:
        ws = [-t if i + 1 in flips else t for i, t in enumerate(ts)]
        ew = elementary_symmetric_all(ws, table, v)
        images = {f"x{i}": ts[i - 1] - l for i in range(1, n + 1)}
        images.update({f"y{i}": ws[i - 1] - l for i in range(1, n + 1)})
        images.update({f"c{i}": _exact_half(et[i] + ew[i]) for i in range(1, ncs + 1)})
        if odd:
            images["l"] = l
            # c(E (x) M)c(E* (x) M) = c(F (x) M)c(F* (x) M), formally in t and l
            lhs = total([t + l for t in ts]) * total([-t + l for t in ts])
            rhs = total([w + l for w in ws]) * total([-w + l for w in ws])
            if lhs != rhs:
                rep.fail(relation="c(E x M)c(E* x M) = c(F x M)c(F* x M)",
                         flips=_flip_label(flips), value=(lhs - rhs).to_text())
        _vanish(rep, ring, images, table, post=_mod_2l if odd else None,
                flips=_flip_label(flips))


def _oracle_integral_even(rep, ring, n):
    """gamma = [P(F)] written in the half-integer quadric ring over a split base."""
    halves = make_ring(RingKind.QUADRIC_HALVES, n)
    table = _roots_table(n)
    v = Variant.DYADIC
    images, ts, prods = _tower_images(halves, n, table, v)
    split = halves.base_change({g: images[g] for g in halves.base.names}, table)
    h = Polynomial.gen(split.full, "h", v)
    x = Polynomial.gen(split.full, "x", v)
    for k in range(n + 1):
        for flips in itertools.combinations(range(1, n + 1), k):
            roots = [-t if i + 1 in flips else t for i, t in enumerate(ts)]
            cf = [c.retable(split.full) for c in elementary_symmetric_all(roots, table, v)]
            eps = (-1) ** (n + k)
            poly = Polynomial.zero(split.full, v)
            for i in range(n):
                poly = poly + cf[n - 1 - i] * h ** i * (-1) ** (n - 1 - i)
            gamma = (poly + x.scale(eps)).scale(HALF)
            imgs = {"h": h, "gamma": gamma}
            imgs.update({f"c{i}F": cf[i] for i in range(1, n + 1)})
            for label, rel in ring.relations:
                val = normal_form(split, substitute(ring.lift_poly(rel).to_variant(v), imgs,
                                                    target=split.full))
                if val:
                    rep.fail(relation=label, flips=_flip_label(flips), value=val.to_text())


# -- the quadric fourfold example -----------------------------------------------------------

def no_subbundle_check(perturbed: bool = False) -> Report:
    """Search for c(E) = 1 + a*h + x on the quadric fourfold with c(E)c(E*) = c(V_2).

    V_2 has total Chern class 1 + h^2 + h^4.  Writing the product as
    A0^2 - a^2 A1^2 with A0 = 1 + x and A1 = h, each basis coefficient gives
    an equation c0 + c2*a^2 = 0 over the integers.
    """
    ring = make_ring(RingKind.QUADRIC_HALVES, 3, point=True)
    rep = Report("no_subbundle", {"ring": "quadric_halves(3) over a point",
                                  "perturbed": perturbed})
    a0, a1 = ring("1 + x"), ring("h")
    target = ring("(1 + h + x)*(1 - h + x)") if perturbed else ring("1 + h^2 + h^4")
    part0 = a0 * a0 - target
    part1 = a0 * a1 - a1 * a0
    part2 = -(a1 * a1)
    equations = []
    for b in sorted(part0.support() | part1.support() | part2.support(), key=ring.order_key):
        coeffs = [p.coefficient(b).constant_term() for p in (part0, part1, part2)]
        coeffs = [Fraction(c) for c in coeffs]
        if any(coeffs):
            equations.append((ring.fiber.monomial_text(b) or "1", ring.fiber.degree(b), coeffs))
    solution = _solve_in_integers([c for _, _, c in equations])
    rendered = [{"monomial": m, "degree": d, "equation": _equation_text(c)}
                for m, d, c in equations]
    if solution is None:
        rep.status = UNSAT
        rep.witness = {"system": [r for r in rendered if r["degree"] == 2] or rendered}
    else:
        rep.status = SAT
        rep.witness = {"a": solution, "system": rendered}
    return rep


def _equation_text(c) -> str:
    parts = []
    for k, coef in ((2, c[2]), (1, c[1]), (0, c[0])):
        if coef:
            mono = {2: "a^2", 1: "a", 0: ""}[k]
            num = str(coef) if coef.denominator == 1 else f"({coef})"
            if mono:
                num = "" if coef == 1 else "-" if coef == -1 else f"{num}*"
            parts.append(f"{num}{mono}")
    text = " + ".join(parts).replace("+ -", "- ")
    return f"{text} = 0"


def _solve_in_integers(system):
    """An integer a solving every c0 + c1 a + c2 a^2 = 0, or None."""
    candidates = None
    for c0, c1, c2 in system:
        if not c1 and not c2:
            if c0:
                return None
            continue
        roots = set()
        bound = int(abs(c0)) + 1
        for a in range(-bound, bound + 1):
            if c0 + c1 * a + c2 * a * a == 0:
                roots.add(a)
        candidates = roots if candidates is None else candidates & roots
        if not candidates:
            return None
    if candidates is None:
        return 0
    return min(candidates, key=lambda a: (abs(a), a))


# -- the odd integral quadric ---------------------------------------------------------------

def integral_odd_diagnostic(n: int) -> Report:
    """Rank bookkeeping for the odd-rank integral quadric presentation.

    Counts normal-form monomials in degrees up to the fiber dimension and
    looks for base-linear dependencies among them over a point, by mapping
    gamma to the class e of the point quadric.  The outcome is informational.
    """
    ring = make_ring(RingKind.QUADRIC_INTEGRAL_ODD, n)
    dim = ring.notes["fiber_dimension"]
    reachable = [b for b in ring.basis if ring.fiber.degree(b) <= dim]
    point = make_ring(RingKind.QUADRIC_POINT_ODD, n)
    h, e = point.gen("h"), point.gen("e")
    images = []
    for b in reachable:
        poly = h ** b[0] * e ** b[1]
        images.append(normal_form(point, poly))
    kernel = _integer_kernel(images, point)
    rep = Report("integral_odd_diagnostic", {"n": n})
    rep.witness = {
        "reachable_monomials": len(reachable),
        "irreducible_monomials": len(ring.basis),
        "expected_rank": 2 * n,
        "dependencies": [_combination_text(vec, [ring.fiber.monomial_text(b) or "1"
                                                 for b in reachable]) for vec in kernel],
    }
    return rep


def _combination_text(vec, names) -> str:
    out = ""
    for c, name in zip(vec, names):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        out += f" {sign} {mag}{name}" if out else f"{'-' if c < 0 else ''}{mag}{name}"
    return out or "0"


def _integer_kernel(elements, ring) -> list[list[int]]:
    """Primitive integer vectors spanning the rational kernel of the map to the basis."""
    cols = sorted({b for el in elements for b in el.support()}, key=ring.order_key)
    rows = [[Fraction(el.coefficient(b).constant_term()) if b in el.support() else
             Fraction(0) for b in cols] for el in elements]
    # kernel of M^T where M has one row per element: solve sum_i v_i row_i = 0
    m = len(rows)
    mat = [[rows[i][j] for i in range(m)] for j in range(len(cols))]
    pivots, r = [], 0
    for c in range(m):
        p = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        piv = mat[r][c]
        mat[r] = [x / piv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(m) if c not in pivots]
    out = []
    for fc in free:
        vec = [Fraction(0)] * m
        vec[fc] = Fraction(1)
        for row, pc in enumerate(pivots):
            vec[pc] = -mat[row][fc]
        den = 1
        for x in vec:
            den = den * x.denominator // math.gcd(den, x.denominator)
        ints = [int(x * den) for x in vec]
        g = reduce(math.gcd, (abs(x) for x in ints if x), 0) or 1
        ints = [x // g for x in ints]
        if next(x for x in ints if x) < 0:
            ints = [-x for x in ints]
        out.append(ints)
    return out



def comparison_check(n: int) -> Report:
    """The comparison map over a point is multiplicative and preserves degrees."""
    src = make_ring(RingKind.QUADRIC_INTEGRAL_EVEN, n, point=True)
    tgt = make_ring(RingKind.QUADRIC_HALVES, n, point=True)
    rep = Report("comparison", {"n": n})
    top = src.top_degree()
    basis = [src.basis_element(b) for b in src.basis]
    for o in (1, -1):
        images = [comparison_embed(b, o, tgt) for b in basis]
        for (i, a), (j, b) in itertools.combinations_with_replacement(enumerate(basis), 2):
            prod = a * b
            img = comparison_embed(prod, o, tgt)
            if img != images[i] * images[j]:
                rep.fail(part="multiplicative", orientation=o,
                         pair=f"{a.to_text()}, {b.to_text()}")
            if prod and prod.degrees() == {top}:
                if point_degree(src, prod).raw() != point_degree(tgt, img).raw():
                    rep.fail(part="degree", orientation=o, pair=f"{a.to_text()}, {b.to_text()}")
    rep.witness = {"pairs": len(basis) * (len(basis) + 1) // 2}
    return rep
