"""Quotient rings given by rewrite rules over a formal base ring.

A :class:`RingPresentation` is a free module over a polynomial base ring
(the Chow ring of the base, modelled by formal Chern symbols) with a
declared monomial basis in the fiber generators.  Rewrite rules replace a
leading fiber monomial by a polynomial in fiber and base generators;
:func:`normal_form` applies them until only basis monomials remain.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .polynomials import GeneratorTable, Polynomial, TableMismatch, substitute, _reduce
from .scalars import Coefficient, Variant

DEFAULT_STEP_BUDGET = 10 ** 6


class NonterminationGuard(RuntimeError):
    """The rewrite budget ran out; the rule set is broken, not the input."""


class RingMismatch(ValueError):
    pass


class NoPushforwardData(ValueError):
    pass


class NotTopDegree(ValueError):
    pass


class NotPointRing(ValueError):
    pass


class BaseNotTrivial(ValueError):
    pass


def step_budget() -> int:
    env = os.environ.get("CHOWQ_STEP_BUDGET")
    return int(env) if env else DEFAULT_STEP_BUDGET


# -- raw base-polynomial helpers (dict exps -> number) ------------------------

def _badd(acc: dict, other: dict, scale, variant):
    for m, c in other.items():
        s = _reduce(variant, acc.get(m, 0) + c * scale)
        if s:
            acc[m] = s
        else:
            acc.pop(m, None)


def _bmul(p: dict, q: dict, variant) -> dict:
    if len(p) == 1 and len(q) == 1:
        (m1, c1), = p.items()
        (m2, c2), = q.items()
        c = _reduce(variant, c1 * c2)
        return {tuple(a + b for a, b in zip(m1, m2)): c} if c else {}
    out: dict = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return {m: r for m, c in out.items() if (r := _reduce(variant, c))}


def _divides(lhs, m):
    return all(a <= b for a, b in zip(lhs, m))


@dataclass(frozen=True)
class Rule:
    lhs: tuple
    rhs: Polynomial            # over fiber + base
    label: str = ""


@dataclass
class RingPresentation:
    kind: str
    n: int
    variant: Variant
    fiber: GeneratorTable
    base: GeneratorTable
    rules: tuple
    basis: tuple
    pushforward_data: dict | None = None
    point: bool = False
    relations: tuple = ()
    named: dict = field(default_factory=dict)
    base_reduce: Callable[[dict], dict] | None = None
    order_key: Callable | None = None
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        self.full = self.fiber + self.base
        self._nf = len(self.fiber)
        self.basis = tuple(tuple(b) for b in self.basis)
        self._basis_set = frozenset(self.basis)
        self._compiled = [(r.lhs, self._split(r.rhs)) for r in self.rules]
        self._cache: dict = {}
        if self.order_key is None:
            self.order_key = self.fiber.order_key
        self.base_zero = (0,) * len(self.base)

    # -- plumbing -------------------------------------------------------------
    def _split(self, poly: Polynomial) -> list:
        """Polynomial over the full table -> [(fiber exps, base dict)]."""
        poly = self.lift_poly(poly)
        nf = self._nf
        grouped: dict = {}
        for m, c in poly.terms.items():
            grouped.setdefault(m[:nf], {})[m[nf:]] = c
        if self.base_reduce:
            grouped = {f: self.base_reduce(b) for f, b in grouped.items()}
        return [(f, b) for f, b in grouped.items() if b]

    def lift_poly(self, poly: Polynomial) -> Polynomial:
        if poly.table != self.full:
            poly = poly.retable(self.full)
        if poly.variant is not self.variant:
            poly = poly.to_variant(self.variant)
        return poly

    def gen(self, name: str) -> Polynomial:
        """A generator or named element as a polynomial over fiber + base."""
        if name in self.named:
            return self.named[name]
        return Polynomial.gen(self.full, name, self.variant)

    def base_poly(self, terms: Mapping) -> Polynomial:
        return Polynomial(self.base, self.variant, dict(terms), _trusted=True)

    @property
    def name(self) -> str:
        return f"{self.kind}({self.n})" + (" over a point" if self.point else "")

    def basis_degree(self, b) -> int:
        return self.fiber.degree(b)

    def __hash__(self):
        return id(self)

    def __eq__(self, other):
        return self is other

    # -- reduction ---------------------------------------------------------------
    def _mono_nf(self, mono: tuple, budget: list) -> dict:
        """Normal form of a single fiber monomial: basis exps -> base dict."""
        hit = self._cache.get(mono)
        if hit is not None:
            return hit
        variant = self.variant
        key = self.order_key
        result: dict = {}
        work: dict = {mono: {self.base_zero: 1}}
        while work:
            f = max(work, key=key)
            coeff = work.pop(f)
            if f in self._basis_set:
                _merge(result, f, coeff, variant)
                continue
            cached = self._cache.get(f)
            if cached is not None:
                for b, c in cached.items():
                    _merge(result, b, _bmul(coeff, c, variant), variant)
                continue
            for lhs, rhs in self._compiled:
                if _divides(lhs, f):
                    break
            else:
                raise ValueError(f"{self.fiber.monomial_text(f)} is irreducible "
                                 f"but not a declared basis monomial of {self.name}")
            budget[0] -= 1
            if budget[0] < 0:
                raise NonterminationGuard(f"rewrite budget exhausted in {self.name}")
            q = tuple(a - b for a, b in zip(f, lhs))
            for rf, rb in rhs:
                nf = tuple(a + b for a, b in zip(rf, q))
                prod = _bmul(coeff, rb, variant)
                if self.base_reduce:
                    prod = self.base_reduce(prod)
                if prod:
                    slot = work.setdefault(nf, {})
                    _badd(slot, prod, 1, variant)
                    if not slot:
                        del work[nf]
        if self.base_reduce:
            result = {b: r for b, c in result.items() if (r := self.base_reduce(c))}
        self._cache[mono] = result
        return result

    def _combine(self, pieces, budget) -> dict:
        """pieces: iterable of (fiber exps, base dict) -> normal-form dict."""
        variant = self.variant
        out: dict = {}
        for f, b in pieces:
            for bm, c in self._mono_nf(f, budget).items():
                _merge(out, bm, _bmul(b, c, variant), variant)
        if self.base_reduce:
            out = {b: r for b, c in out.items() if (r := self.base_reduce(c))}
        return out

    def element(self, terms: dict) -> "RingElement":
        return RingElement(self, terms)

    def zero(self) -> "RingElement":
        return RingElement(self, {})

    def one(self) -> "RingElement":
        return normal_form(self, Polynomial.one(self.full, self.variant))

    def basis_element(self, b) -> "RingElement":
        return RingElement(self, {tuple(b): {self.base_zero: 1}})

    def __call__(self, expr) -> "RingElement":
        """Normal form of a polynomial, generator name, or parsable string."""
        if isinstance(expr, RingElement):
            return expr
        if isinstance(expr, str):
            from .expr import parse_expr, evaluate
            return normal_form(self, evaluate(parse_expr(expr, self), self))
        if isinstance(expr, (int, Fraction)):
            expr = Polynomial.constant(self.full, expr, self.variant)
        return normal_form(self, expr)

    # -- base change -------------------------------------------------------------
    def base_change(self, images: Mapping[str, Polynomial], new_base: GeneratorTable,
                    point: bool | None = None, kind_suffix: str = "") -> "RingPresentation":
        """Same fiber presentation over another base, via a map of base generators."""
        full_new = self.fiber + new_base
        maps = {g: Polynomial.gen(full_new, g, self.variant) for g in self.fiber.names}
        for g in self.base.names:
            maps[g] = images[g].to_variant(self.variant).retable(full_new)

        def move(p):
            return substitute(self.lift_poly(p), maps, target=full_new)

        rules = tuple(Rule(r.lhs, move(r.rhs), r.label) for r in self.rules)
        push = None
        if self.pushforward_data is not None:
            push = {b: substitute(v, {g: images[g].to_variant(self.variant)
                                      for g in self.base.names}, target=new_base)
                    if v.terms else Polynomial.zero(new_base, self.variant)
                    for b, v in self.pushforward_data.items()}
        return RingPresentation(
            kind=self.kind + kind_suffix, n=self.n, variant=self.variant, fiber=self.fiber,
            base=new_base, rules=rules, basis=self.basis, pushforward_data=push,
            point=(len(new_base) == 0) if point is None else point,
            relations=tuple((lab, move(p)) for lab, p in self.relations),
            named={k: move(v) for k, v in self.named.items()},
            base_reduce=None, order_key=self.order_key, notes=dict(self.notes))

    def over_point(self) -> "RingPresentation":
        empty = GeneratorTable([])
        zero = Polynomial.zero(empty, self.variant)
        return self.base_change({g: zero for g in self.base.names}, empty, point=True)

    def top_degree(self) -> int:
        return max(self.fiber.degree(b) for b in self.basis)


def _merge(acc: dict, key, bdict: dict, variant):
    if not bdict:
        return
    slot = acc.get(key)
    if slot is None:
        acc[key] = dict(bdict)
        return
    _badd(slot, bdict, 1, variant)
    if not slot:
        del acc[key]


class RingElement:
    """Normal form: declared basis monomial -> nonzero base polynomial."""

    __slots__ = ("ring", "_c")

    def __init__(self, ring: RingPresentation, raw: dict):
        self.ring = ring
        self._c = {b: c for b, c in raw.items() if c}

    # -- access --------------------------------------------------------------------
    def items(self):
        order = self.ring.order_key
        for b in sorted(self._c, key=order, reverse=True):
            yield b, self.ring.base_poly(self._c[b])

    def coefficient(self, b) -> Polynomial:
        return self.ring.base_poly(self._c.get(tuple(b), {}))

    def support(self):
        return set(self._c)

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def degrees(self) -> set:
        fdeg, bdeg = self.ring.fiber.degree, self.ring.base.degree
        return {fdeg(b) + bdeg(m) for b, c in self._c.items() for m in c}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def lift(self) -> Polynomial:
        r = self.ring
        terms = {}
        for b, c in self._c.items():
            for m, v in c.items():
                terms[b + m] = v
        return Polynomial(r.full, r.variant, terms, _trusted=True)

    # -- arithmetic ---------------------------------------------------------------------
    def _same(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return self.ring(other)
        if not isinstance(other, RingElement) or other.ring is not self.ring:
            raise RingMismatch("elements of different rings")
        return other

    def __add__(self, other):
        other = self._same(other)
        v = self.ring.variant
        out = {b: dict(c) for b, c in self._c.items()}
        for b, c in other._c.items():
            _merge(out, b, c, v)
        return RingElement(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        return ring_mul(self.ring, self, self._same(other))

    __rmul__ = __mul__

    def __pow__(self, k):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def scale(self, value) -> "RingElement":
        v = self.ring.variant
        return RingElement(self.ring, {b: {m: r for m, x in c.items() if (r := _reduce(v, x * value))}
                                       for b, c in self._c.items()})

    def times_base(self, alpha: Polynomial) -> "RingElement":
        """Multiply by the pullback of a base class."""
        a = alpha.retable(self.ring.base).to_variant(self.ring.variant).terms
        v = self.ring.variant
        out = {b: _bmul(c, a, v) for b, c in self._c.items()}
        if self.ring.base_reduce:
            out = {b: self.ring.base_reduce(c) for b, c in out.items()}
        return RingElement(self.ring, out)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return other.ring is self.ring and self._c == other._c

    def __hash__(self):
        return hash(frozenset((b, frozenset(c.items())) for b, c in self._c.items()))

    # -- output ------------------------------------------------------------------------------
    def to_text(self) -> str:
        if not self._c:
            return "0"
        pieces = []
        for i, (b, coeff) in enumerate(self.items()):
            mono = self.ring.fiber.monomial_text(b)
            ctext = coeff.to_text()
            single = len(coeff.terms) == 1
            neg = single and ctext.startswith("-")
            if neg:
                ctext = ctext[1:]
            if not mono:
                body = ctext
            elif single and ctext == "1":
                body = mono
            elif single:
                body = f"{ctext}*{mono}"
            else:
                body = f"({ctext})*{mono}"
            if i == 0:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    __str__ = to_text

    def __repr__(self):
        return f"<{self.ring.name}: {self.to_text()}>"

    def to_json(self) -> dict:
        r = self.ring
        return {
            "ring": {"kind": r.kind, "n": r.n},
            "terms": [{"basis": dict(zip(r.fiber.names, b)), "coeff": c.to_json()}
                      for b, c in self.items()],
        }


# -- operations ----------------------------------------------------------------------------

def normal_form(ring: RingPresentation, raw: Polynomial) -> RingElement:
    try:
        pieces = ring._split(raw)
    except TableMismatch as exc:
        raise TableMismatch(f"expression uses generators outside {ring.name}: {exc}") from None
    budget = [step_budget()]
    return RingElement(ring, ring._combine(pieces, budget))


def ring_mul(ring: RingPresentation, a: RingElement, b: RingElement) -> RingElement:
    if a.ring is not ring or b.ring is not ring:
        raise RingMismatch("operands do not belong to this ring")
    v = ring.variant
    pieces: dict = {}
    for ma, ca in a._c.items():
        for mb, cb in b._c.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            _merge(pieces, m, _bmul(ca, cb, v), v)
    return RingElement(ring, ring._combine(pieces.items(), [step_budget()]))


def pushforward(ring: RingPresentation, a: RingElement) -> Polynomial:
    if ring.pushforward_data is None:
        raise NoPushforwardData(f"{ring.name} carries no pushforward data")
    if a.ring is not ring:
        raise RingMismatch("element does not belong to this ring")
    out = Polynomial.zero(ring.base, ring.variant)
    for b, c in a._c.items():
        img = ring.pushforward_data.get(b)
        if img is not None and img.terms:
            out = out + ring.base_poly(c) * img
    return out


def point_degree(ring: RingPresentation, a: RingElement) -> Coefficient:
    if not ring.point:
        raise NotPointRing(f"{ring.name} is not a ring over a point")
    if a.ring is not ring:
        raise RingMismatch("element does not belong to this ring")
    top = ring.top_degree()
    if not a.is_zero() and a.degrees() != {top}:
        raise NotTopDegree(f"degree {sorted(a.degrees())} but the point class has degree {top}")
    val = pushforward(ring, a)
    return val.coeff(())


def comparison_embed(source: RingElement, orientation: int = 1,
                     target: RingPresentation | None = None) -> RingElement:
    """Send h -> h and gamma -> (h^(n-1) - orientation*x)/2 over a point.

    ``source`` lives in the integral even-rank quadric ring over a point; the
    image lives in the half-integer ring of the same quadric.
    """
    from .catalog import make_ring
    ring = source.ring
    if ring.kind != "quadric_integral_even":
        raise ValueError("comparison_embed needs a quadric_integral_even element")
    if not ring.point:
        raise BaseNotTrivial("the comparison map is only provided over a point")
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 or -1")
    n = ring.n
    if target is None:
        target = make_ring("quadric_halves", n, point=True)
    h = Polynomial.gen(target.full, "h", Variant.DYADIC)
    x = Polynomial.gen(target.full, "x", Variant.DYADIC)
    gamma = (h ** (n - 1) - x.scale(orientation)).scale(Fraction(1, 2))
    images = {"h": h, "gamma": gamma}
    lifted = source.lift().to_variant(Variant.DYADIC)
    return normal_form(target, substitute(lifted, images, target=target.full))
