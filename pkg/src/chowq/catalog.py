"""Factories for every ring presentation the engine knows about.

Each factory returns a :class:`~chowq.rings.RingPresentation` whose rewrite
rules, declared basis and pushforward data encode one Chow ring:
point quadrics, projective bundles, quadric bundles with integral or
half-integral coefficients, and the isotropic flag bundles (as an iterated
quadric tower and in the D_n / B_n presentations).

Generator naming: ``h``, ``e``, ``gamma``, ``x`` for quadric fibers; ``H``
for projective bundles; ``h2..hn``, ``x1..x{n-1}`` in the tower; ``x1..xn``,
``c1..`` for flag bundles.  Base symbols: ``c{i}V``, ``c{i}F``, ``c{i}Q``
(``Q`` is V/F), ``xn``, ``l``, ``y1..yn``.
"""
from __future__ import annotations

import enum
import math
from fractions import Fraction

from .polynomials import (GeneratorTable, Polynomial, complete_symmetric,
                          elementary_symmetric_all, series_inverse, truncate)
from .rings import RingPresentation, Rule
from .scalars import Variant

MAX_N = 8


class UnsupportedParameter(ValueError):
    pass


class RingKind(str, enum.Enum):
    QUADRIC_POINT_EVEN = "quadric_point_even"
    QUADRIC_POINT_ODD = "quadric_point_odd"
    PROJECTIVE_BUNDLE = "projective_bundle"
    QUADRIC_HALVES = "quadric_halves"
    QUADRIC_ODD_INTEGRAL_PLAIN = "quadric_odd_integral_plain"
    FLAG_TOWER = "flag_tower"
    QUADRIC_INTEGRAL_EVEN = "quadric_integral_even"
    QUADRIC_INTEGRAL_ODD = "quadric_integral_odd"
    FLAG_DN = "flag_dn"
    FLAG_BN = "flag_bn"


# smallest parameter for which the presentation has positive-degree generators
MIN_N = {
    RingKind.QUADRIC_POINT_EVEN: 2,
    RingKind.QUADRIC_POINT_ODD: 1,
    RingKind.PROJECTIVE_BUNDLE: 2,
    RingKind.QUADRIC_HALVES: 2,
    RingKind.QUADRIC_ODD_INTEGRAL_PLAIN: 1,
    RingKind.FLAG_TOWER: 2,
    RingKind.QUADRIC_INTEGRAL_EVEN: 2,
    RingKind.QUADRIC_INTEGRAL_ODD: 1,
    RingKind.FLAG_DN: 1,
    RingKind.FLAG_BN: 1,
}


def expected_rank(kind, n: int) -> int:
    kind = RingKind(kind)
    if kind is RingKind.PROJECTIVE_BUNDLE:
        return n
    if kind in (RingKind.FLAG_TOWER, RingKind.FLAG_DN):
        return 2 ** (n - 1) * math.factorial(n)
    if kind is RingKind.FLAG_BN:
        return 2 ** n * math.factorial(n)
    if kind is RingKind.QUADRIC_ODD_INTEGRAL_PLAIN:
        return 2 * n + 1
    if kind is RingKind.QUADRIC_INTEGRAL_ODD:
        return 2 * n + 2
    return 2 * n


class _Builder:
    """Small helper bundling the generator tables of one presentation."""

    def __init__(self, fiber, base, variant=Variant.INT):
        self.fiber = GeneratorTable(fiber)
        self.base = GeneratorTable(base)
        self.full = self.fiber + self.base
        self.variant = variant

    def __getitem__(self, name) -> Polynomial:
        return Polynomial.gen(self.full, name, self.variant)

    def const(self, c) -> Polynomial:
        return Polynomial.constant(self.full, c, self.variant)

    def zero(self) -> Polynomial:
        return Polynomial.zero(self.full, self.variant)

    def exps(self, **powers) -> tuple:
        e = [0] * len(self.fiber)
        for name, k in powers.items():
            e[self.fiber.index(name)] = k
        return tuple(e)

    def bconst(self, c) -> Polynomial:
        return Polynomial.constant(self.base, c, self.variant)

    def cls(self, template: str, i: int) -> Polynomial:
        """A base Chern symbol; index 0 is 1 and out-of-range indices vanish."""
        if i == 0:
            return self.const(1)
        name = template.format(i)
        return self[name] if name in self.full else self.zero()

    def ring(self, kind, n, rules, basis, **kw) -> RingPresentation:
        return RingPresentation(kind=kind.value, n=n, variant=self.variant,
                                fiber=self.fiber, base=self.base, rules=tuple(rules),
                                basis=tuple(basis), **kw)


def make_ring(kind, n: int, point: bool = False) -> RingPresentation:
    """Build the presentation for ``kind`` at parameter ``n``.

    With ``point=True`` every base generator is specialised to zero.
    """
    try:
        kind = RingKind(kind)
    except ValueError:
        raise UnsupportedParameter(f"unknown ring kind {kind!r}") from None
    if not isinstance(n, int) or not MIN_N[kind] <= n <= MAX_N:
        raise UnsupportedParameter(
            f"{kind.value} needs {MIN_N[kind]} <= n <= {MAX_N}, got {n!r}")
    ring = _FACTORIES[kind](n)
    return ring.over_point() if point else ring


# -- point quadrics -------------------------------------------------------------------

def _quadric_point_even(n):
    b = _Builder([("h", 1), ("e", n - 1)], [])
    h, e = b["h"], b["e"]
    pt = h ** (n - 1) * e
    rules = []
    if n % 2:
        # h^n e = 2 h e^2 = 2 h^n e forces h^n e = 0; without it rewriting cycles
        rules.append(Rule(b.exps(h=n, e=1), b.zero(), "h^n*e -> 0 (derived)"))
    rules.append(Rule(b.exps(h=n), (h * e).scale(2), "h^n -> 2*h*e"))
    esq = pt if n % 2 else b.zero()
    rules.append(Rule(b.exps(e=2), esq, "e^2 -> " + ("h^(n-1)*e" if n % 2 else "0")))
    basis = [b.exps(h=i) for i in range(n)] + [b.exps(h=i, e=1) for i in range(n)]
    f = h ** (n - 1) - e
    relations = [
        ("h^n = 2he", h ** n - (h * e).scale(2)),
        ("e^2 = f^2", e * e - f * f),
        ("e^2", e * e - esq),
        ("ef", e * f - (b.zero() if n % 2 else pt)),
    ]
    push = {bm: b.bconst(0) for bm in basis}
    push[b.exps(h=n - 1, e=1)] = b.bconst(1)
    return b.ring(RingKind.QUADRIC_POINT_EVEN, n, rules, basis, pushforward_data=push,
                  point=True, relations=tuple(relations), named={"f": f})


def _quadric_point_odd(n):
    b = _Builder([("h", 1), ("e", n)], [])
    h, e = b["h"], b["e"]
    rules = [Rule(b.exps(h=n), e.scale(2), "h^n -> 2*e"),
             Rule(b.exps(e=2), b.zero(), "e^2 -> 0")]
    basis = [b.exps(h=i) for i in range(n)] + [b.exps(h=i, e=1) for i in range(n)]
    push = {bm: b.bconst(0) for bm in basis}
    push[b.exps(h=n - 1, e=1)] = b.bconst(1)
    relations = [("h^n = 2e", h ** n - e.scale(2)), ("e^2", e * e)]
    return b.ring(RingKind.QUADRIC_POINT_ODD, n, rules, basis, pushforward_data=push,
                  point=True, relations=tuple(relations))


# -- projective bundle ----------------------------------------------------------------

def _projective_bundle(N):
    b = _Builder([("H", 1)], [(f"c{i}V", i) for i in range(1, N + 1)])
    H = b["H"]
    tail = b.zero()
    for i in range(1, N + 1):
        tail = tail + b[f"c{i}V"] * H ** (N - i)
    rules = [Rule(b.exps(H=N), -tail, "H^N -> -sum c_i(V) H^(N-i)")]
    basis = [b.exps(H=i) for i in range(N)]
    push = {bm: b.bconst(0) for bm in basis}
    push[b.exps(H=N - 1)] = b.bconst(1)
    return b.ring(RingKind.PROJECTIVE_BUNDLE, N, rules, basis, pushforward_data=push,
                  relations=(("sum c_i(V) H^(N-i)", H ** N + tail),))


# -- quadric bundles, half-integer coefficients -----------------------------------------

def _halves_rules(b, h, x, euler_above, chern, k):
    """Rules for the quadric of a rank-2k bundle.

    ``chern[j]`` is c_{2j} of the bundle (j = 0..k-1) and ``euler_above`` the
    Euler class of that bundle, both as polynomials over the full table.
    """
    sq = b.zero()
    for j in range(k):
        sq = sq + chern[j] * h ** (2 * k - 2 - 2 * j)
    sign = -1 if k % 2 == 0 else 1            # (-1)^(k-1)
    top = (euler_above * x).scale(sign)
    for j in range(1, k):
        top = top - chern[j] * h ** (2 * k - 1 - 2 * j)
    hn, xn = b.fiber.index(h_name(h, b)), b.fiber.index(x_name(x, b))
    e_hx = [0] * len(b.fiber)
    e_hx[hn] = e_hx[xn] = 1
    e_xx = [0] * len(b.fiber)
    e_xx[xn] = 2
    e_top = [0] * len(b.fiber)
    e_top[hn] = 2 * k - 1
    return [
        Rule(tuple(e_hx), euler_above, f"{x_name(x, b)}*{h_name(h, b)} -> euler"),
        Rule(tuple(e_xx), sq.scale(sign), f"{x_name(x, b)}^2 -> (-1)^(k-1) c_(2k-2)(V')"),
        Rule(tuple(e_top), top, f"{h_name(h, b)}^{2 * k - 1} -> (derived)"),
    ], sq.scale(sign)


def h_name(poly, b):
    (m,) = poly.terms
    return b.full.names[m.index(1)]


x_name = h_name


def _quadric_halves(n):
    base = [(f"c{2 * j}V", 2 * j) for j in range(1, n)] + [("xn", n)]
    b = _Builder([("h", 1), ("x", n - 1)], base, Variant.DYADIC)
    h, x, xn = b["h"], b["x"], b["xn"]
    chern = [b.cls("c{}V", 2 * j) for j in range(n)]
    rules, xsq = _halves_rules(b, h, x, xn, chern, n)
    basis = [b.exps(h=i) for i in range(2 * n - 1)] + [b.exps(x=1)]
    push = {bm: b.bconst(0) for bm in basis}
    push[b.exps(h=2 * n - 2)] = b.bconst(2)
    top_class = (xn * xn).scale((-1) ** n)           # c_2n(V) = (-1)^n x_n^2
    remark = top_class
    for j in range(n):
        remark = remark + chern[j] * h ** (2 * n - 2 * j)
    relations = (
        ("h*x = xn", h * x - xn),
        ("x^2 = (-1)^(n-1) c_(2n-2)(V_(n-1))", x * x - xsq),
        ("sum c_2j(V) h^(2n-2j) = 0", remark),
    )
    return b.ring(RingKind.QUADRIC_HALVES, n, rules, basis, pushforward_data=push,
                  relations=relations, named={f"c{2 * n}V": top_class})


def _quadric_odd_integral_plain(n):
    b = _Builder([("h", 1)], [(f"c{2 * j}V", 2 * j) for j in range(1, n + 1)])
    h = b["h"]
    tail = b.zero()
    for j in range(1, n + 1):
        tail = tail + b[f"c{2 * j}V"] * h ** (2 * n + 1 - 2 * j)
    rules = [Rule(b.exps(h=2 * n + 1), -tail, "h^(2n+1) -> -sum c_2j(V) h^(2n+1-2j)")]
    basis = [b.exps(h=i) for i in range(2 * n + 1)]
    push = {bm: b.bconst(0) for bm in basis}
    push[b.exps(h=2 * n - 1)] = b.bconst(2)
    return b.ring(RingKind.QUADRIC_ODD_INTEGRAL_PLAIN, n, rules, basis, pushforward_data=push,
                  relations=(("h^(2n+1) + ... + c_2n(V) h", h ** (2 * n + 1) + tail),))


def tower_chern_classes(b, n):
    """c(V_k) for k = n..1 as total classes over the tower table.

    c(V_n) is the base class; c(V_(k-1)) = c(V_k)/(1 - h_k^2) truncated at 2k-2.
    """
    total = {n: b.const(1)}
    for j in range(1, n):
        total[n] = total[n] + b[f"c{2 * j}V"]
    for k in range(n, 1, -1):
        hk = b[f"h{k}"]
        inv = series_inverse(b.const(1) - hk * hk, 2 * k - 2)
        total[k - 1] = truncate(total[k] * inv, 2 * k - 2)
    return total


def graded_pieces(p: Polynomial, top: int) -> list:
    from .polynomials import graded_component
    return [graded_component(p, d) for d in range(top + 1)]


def _flag_tower(n):
    fiber = []
    for k in range(2, n + 1):
        fiber += [(f"h{k}", 1), (f"x{k - 1}", k - 1)]
    base = [(f"c{2 * j}V", 2 * j) for j in range(1, n)] + [("xn", n)]
    b = _Builder(fiber, base, Variant.DYADIC)
    totals = tower_chern_classes(b, n)
    rules, relations = [], []
    euler = {k: b[f"x{k}"] for k in range(1, n)}
    euler[n] = b["xn"]
    for k in range(2, n + 1):
        chern = graded_pieces(totals[k], 2 * k)
        chern = [chern[2 * j] for j in range(k)]
        lvl, xsq = _halves_rules(b, b[f"h{k}"], euler[k - 1], euler[k], chern, k)
        rules += lvl
        relations += [
            (f"h{k}*x{k - 1} = x{k}", b[f"h{k}"] * euler[k - 1] - euler[k]),
            (f"x{k - 1}^2 = (-1)^{k - 1} c_{2 * k - 2}(V_{k - 1})",
             euler[k - 1] * euler[k - 1] - xsq),
        ]
    hs = {1: b["x1"]}
    hs.update({k: b[f"h{k}"] for k in range(2, n + 1)})
    prod_h = b.const(1)
    prod_quad = b.const(1)
    for k in range(1, n + 1):
        prod_h = prod_h * hs[k]
        prod_quad = prod_quad * (b.const(1) - hs[k] * hs[k])
    top_class = (b["xn"] * b["xn"]).scale((-1) ** n)
    cV = totals[n] + top_class
    relations += [("prod(1 - h_i^2) = f^*c(V)", prod_quad - cV),
                  ("h1 h2 ... hn = xn", prod_h - b["xn"])]
    # basis: product of level bases
    basis = [()]
    for k in range(2, n + 1):
        level = [{f"h{k}": i} for i in range(2 * k - 1)] + [{f"x{k - 1}": 1}]
        basis = [prev + tuple(lv.items()) for prev in basis for lv in level]
    basis = [b.exps(**{name: e for name, e in mono}) for mono in basis]
    s_exps = b.exps(**{f"h{k}": 2 * k - 2 for k in range(2, n + 1)})
    push = {bm: b.bconst(0) for bm in basis}
    push[s_exps] = b.bconst(2 ** (n - 1))
    named = {"h1": b["x1"], f"x{n}": b["xn"], f"c{2 * n}V": top_class}
    ring = b.ring(RingKind.FLAG_TOWER, n, rules, basis, pushforward_data=push,
                  relations=tuple(relations), named=named)
    ring.notes["chern_classes"] = totals
    ring.notes["s"] = s_exps
    return ring


# -- quadric bundles, integral coefficients ------------------------------------------

def _quadric_integral_even(n):
    b = _Builder([("h", 1), ("gamma", n - 1)], [(f"c{i}F", i) for i in range(1, n + 1)])
    h, g = b["h"], b["gamma"]
    c = [b.cls("c{}F", i) for i in range(n + 1)]
    R = b.zero()
    for i in range(1, n + 1):
        R = R + c[i] * h ** (n - i) * (-1) ** (i - 1)
    G = b.zero()
    for j in range((n - 1) // 2 + 1):
        G = G + c[n - 1 - 2 * j] * h ** (2 * j)
    G = G.scale((-1) ** (n - 1))
    rules = []
    if n % 2:
        Gp = G - h ** (n - 1)
        rules.append(Rule(b.exps(h=n, gamma=1), -((h * Gp).scale(2) + R) * g,
                          "h^n*gamma -> (derived)"))
    rules += [Rule(b.exps(h=n), (h * g).scale(2) + R, "h^n -> 2*h*gamma + ..."),
              Rule(b.exps(gamma=2), G * g, "gamma^2 -> G*gamma")]
    basis = [b.exps(h=i) for i in range(n)] + [b.exps(h=i, gamma=1) for i in range(n)]
    push = {bm: b.bconst(0) for bm in basis}
    push[b.exps(h=n - 1, gamma=1)] = b.bconst(1)
    alt = b.zero()
    for i in range(n + 1):
        alt = alt + c[i] * h ** (n - i) * (-1) ** i
    relations = (("2h*gamma = h^n - c1(F)h^(n-1) + ...", (h * g).scale(2) - alt),
                 ("gamma^2 = (-1)^(n-1)(c_(n-1)(F) + ...)gamma", g * g - G * g))
    return b.ring(RingKind.QUADRIC_INTEGRAL_EVEN, n, rules, basis, pushforward_data=push,
                  relations=relations)


def _quadric_integral_odd(n):
    b = _Builder([("h", 1), ("gamma", n)], [(f"c{i}Q", i) for i in range(1, n + 2)])
    h, g = b["h"], b["gamma"]
    c = [b.cls("c{}Q", i) for i in range(n + 2)]
    R = b.zero()
    for i in range(1, n + 2):
        R = R - c[i] * h ** (n + 1 - i)
    G = b.zero()
    for j in range(n // 2 + 1):
        G = G + c[n - 2 * j] * h ** (2 * j)
    rules = []
    if n % 2 == 0:
        Gp = G - h ** n
        rules.append(Rule(b.exps(h=n + 1, gamma=1), -((h * Gp).scale(2) + R) * g,
                          "h^(n+1)*gamma -> (derived)"))
    rules += [Rule(b.exps(h=n + 1), (h * g).scale(2) + R, "h^(n+1) -> 2*h*gamma - ..."),
              Rule(b.exps(gamma=2), G * g, "gamma^2 -> G*gamma")]
    basis = [b.exps(h=i) for i in range(n + 1)] + [b.exps(h=i, gamma=1) for i in range(n + 1)]
    full = b.zero()
    for i in range(n + 2):
        full = full + c[i] * h ** (n + 1 - i)
    relations = (("2h*gamma = h^(n+1) + c1(V/F)h^n + ...", (h * g).scale(2) - full),
                 ("gamma^2 = (c_n(V/F) + ...)gamma", g * g - G * g))
    ring = b.ring(RingKind.QUADRIC_INTEGRAL_ODD, n, rules, basis, relations=relations)
    ring.notes["fiber_dimension"] = 2 * n - 1
    return ring


# -- flag bundles, integral presentations --------------------------------------------

def _flag_x_rules(b, xs, values, n):
    """Gröbner rules x_i^(n-i+1) -> ... for the ideal (e_j(x) - values[j])."""
    rules = []
    for i in range(1, n + 1):
        m = n - i + 1
        g = b.zero()
        for j in range(m + 1):
            if j > n:
                break
            g = g + values[j] * complete_symmetric(m - j, xs[:i], b.full, b.variant) * (-1) ** j
        lead = xs[i - 1] ** m
        rules.append(Rule(b.exps(**{f"x{i}": m}), lead - g, f"x{i}^{m} -> (symmetric reduction)"))
    return rules


def _c_square_rules(b, cs, gminus, n, top):
    """c_p^2 rules from [C C^-]_{2p} = [C G^-]_{2p}; cs[k] = 0 for k > top."""
    def c(k):
        return cs[k] if 0 <= k <= top else b.zero()

    def gm(j):
        return gminus[j] if j < len(gminus) else b.zero()

    rules = []
    for p in range(1, top + 1):
        rhs = b.zero()
        for j in range(2 * p + 1):
            rhs = rhs + c(2 * p - j) * gm(j)
        for j in range(1, p + 1):
            rhs = rhs - (c(p - j) * c(p + j)).scale(2 * (-1) ** (p - j))
        rules.append(Rule(b.exps(**{f"c{p}": 2}), rhs.scale((-1) ** p), f"c{p}^2 -> (spread)"))
    return rules


def _quadratic_relation(b, cs, evals, p, top):
    """[C C^-]_{2p} - sum_j (-1)^j c_(2p-j) e_j, i.e. the quadratic relation as stated."""
    def c(k):
        return cs[k] if 0 <= k <= top else b.zero()
    lhs = (c(p) * c(p)).scale((-1) ** p)
    for j in range(1, p + 1):
        lhs = lhs + (c(p - j) * c(p + j)).scale(2 * (-1) ** (p - j))
    rhs = b.zero()
    for j in range(2 * p + 1):
        if j < len(evals):
            rhs = rhs + c(2 * p - j) * evals[j] * (-1) ** j
    return lhs - rhs


def _staircase_basis(b, n, ncs):
    out = []
    ranges = [range(n - i + 1) for i in range(1, n + 1)]
    import itertools
    for a in itertools.product(*ranges):
        for alpha in itertools.product((0, 1), repeat=ncs):
            powers = {f"x{i + 1}": a[i] for i in range(n)}
            powers.update({f"c{k + 1}": alpha[k] for k in range(ncs)})
            out.append(b.exps(**powers))
    return out


def _flag_order(nx):
    def key(m):
        return (tuple(reversed(m[:nx])), sum((i + 1) * e for i, e in enumerate(m[nx:])),
                tuple(m[nx:]))
    return key


def _flag_dn(n):
    fiber = [(f"x{i}", 1) for i in range(1, n + 1)] + [(f"c{i}", i) for i in range(1, n)]
    b = _Builder(fiber, [(f"y{i}", 1) for i in range(1, n + 1)])
    xs = [b[f"x{i}"] for i in range(1, n + 1)]
    ys = [b[f"y{i}"] for i in range(1, n + 1)]
    cs = [b.const(1)] + [b[f"c{i}"] for i in range(1, n)]
    ey = elementary_symmetric_all(ys, b.full, b.variant)
    ex = elementary_symmetric_all(xs, b.full, b.variant)
    # value of e_j(x) forced by 2c_j = e_j(x) + e_j(y), with c_j = 0 for j >= n
    values = [b.const(1)] + [(cs[j].scale(2) if j < n else b.zero()) - ey[j]
                             for j in range(1, n + 1)]
    rules = _flag_x_rules(b, xs, values, n)
    gminus = [ey[j] * (-1) ** j for j in range(n + 1)]
    rules += _c_square_rules(b, cs, gminus, n, n - 1)
    negsq_x = elementary_symmetric_all([-(x * x) for x in xs], b.full, b.variant)
    negsq_y = elementary_symmetric_all([-(y * y) for y in ys], b.full, b.variant)
    named = {f"c{2 * i}V": negsq_y[i] for i in range(1, n + 1)}
    relations = []
    for i in range(1, n + 1):
        relations.append((f"e_{i}(-x^2) = c_{2 * i}(V)", negsq_x[i] - negsq_y[i]))
    for p in range(1, n + 1):
        relations.append((f"quadratic relation p={p}",
                          _quadratic_relation(b, cs, ex, p, n - 1)))
    for i in range(1, n + 1):
        ci = cs[i] if i < n else b.zero()
        relations.append((f"2c_{i} = e_{i}(x) + e_{i}(y)", ci.scale(2) - ex[i] - ey[i]))
    ring = b.ring(RingKind.FLAG_DN, n, rules, _staircase_basis(b, n, n - 1),
                  relations=tuple(relations), named=named, order_key=_flag_order(n))
    return ring


def _mod_2l(l_index):
    """Reduce base coefficients in Z[y, l]/(2l): monomials containing l keep a bit."""
    def reduce(d: dict) -> dict:
        out = {}
        for m, c in d.items():
            if m[l_index]:
                c %= 2
            if c:
                out[m] = c
        return out
    return reduce


def _flag_bn(n):
    fiber = [(f"x{i}", 1) for i in range(1, n + 1)] + [(f"c{i}", i) for i in range(1, n + 1)]
    base = [(f"y{i}", 1) for i in range(1, n + 1)] + [("l", 1)]
    b = _Builder(fiber, base)
    xs = [b[f"x{i}"] for i in range(1, n + 1)]
    ys = [b[f"y{i}"] for i in range(1, n + 1)]
    l = b["l"]
    cs = [b.const(1)] + [b[f"c{i}"] for i in range(1, n + 1)]
    exl = elementary_symmetric_all([x + l for x in xs], b.full, b.variant)
    eyl = elementary_symmetric_all([y + l for y in ys], b.full, b.variant)
    ex = elementary_symmetric_all(xs, b.full, b.variant)
    # e_i(x + l) = sum_k C(n-k, i-k) l^(i-k) e_k(x) = 2c_i - e_i(y + l); solve for e_i(x)
    values = [b.const(1)]
    for i in range(1, n + 1):
        v = cs[i].scale(2) - eyl[i]
        for k in range(i):
            v = v - values[k] * l ** (i - k) * math.comb(n - k, i - k)
        values.append(v)
    rules = _flag_x_rules(b, xs, values, n)
    gminus = [eyl[j] * (-1) ** j for j in range(n + 1)]
    rules += _c_square_rules(b, cs, gminus, n, n)
    negsq_x = elementary_symmetric_all([-(x * x) for x in xs], b.full, b.variant)
    negsq_y = elementary_symmetric_all([-(y * y) for y in ys], b.full, b.variant)
    named = {"c1V": l}
    for i in range(1, n + 1):
        named[f"c{2 * i}V"] = negsq_y[i]
        named[f"c{2 * i + 1}V"] = l * negsq_y[i]
    relations = []
    for i in range(1, n + 1):
        relations.append((f"e_{i}(-x^2) = c_{2 * i}(V)", negsq_x[i] - negsq_y[i]))
        relations.append((f"l e_{i}(-x^2) = c_{2 * i + 1}(V)", l * negsq_x[i] - l * negsq_y[i]))
    for i in range(1, n + 1):
        relations.append((f"2c_{i} = e_{i}(x+l) + e_{i}(y+l)",
                          cs[i].scale(2) - exl[i] - eyl[i]))
    for p in range(1, n + 1):
        relations.append((f"quadratic relation p={p}", _quadratic_relation(b, cs, exl, p, n)))
    ring = b.ring(RingKind.FLAG_BN, n, rules, _staircase_basis(b, n, n),
                  relations=tuple(relations), named=named, order_key=_flag_order(n),
                  base_reduce=_mod_2l(b.base.index("l")))
    ring.notes["e_x"] = ex
    ring.notes["two_torsion"] = "l"
    return ring


_FACTORIES = {
    RingKind.QUADRIC_POINT_EVEN: _quadric_point_even,
    RingKind.QUADRIC_POINT_ODD: _quadric_point_odd,
    RingKind.PROJECTIVE_BUNDLE: _projective_bundle,
    RingKind.QUADRIC_HALVES: _quadric_halves,
    RingKind.QUADRIC_ODD_INTEGRAL_PLAIN: _quadric_odd_integral_plain,
    RingKind.FLAG_TOWER: _flag_tower,
    RingKind.QUADRIC_INTEGRAL_EVEN: _quadric_integral_even,
    RingKind.QUADRIC_INTEGRAL_ODD: _quadric_integral_odd,
    RingKind.FLAG_DN: _flag_dn,
    RingKind.FLAG_BN: _flag_bn,
}
