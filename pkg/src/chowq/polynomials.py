"""Sparse graded polynomials over an exact coefficient ring.

A :class:`Polynomial` is a dict from exponent tuples to raw coefficients
(``int`` for INT and MOD2, ``int``/``Fraction`` for DYADIC) tied to a
:class:`GeneratorTable` that names the generators and fixes their degrees.
Raw values are wrapped into :class:`~chowq.scalars.Coefficient` only at the
API surface; the inner loops stay on Python numbers.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .scalars import Coefficient, Variant


class TableMismatch(ValueError):
    pass


class IndexOutOfRange(ValueError):
    pass


class NotAUnit(ValueError):
    pass


class MissingImage(KeyError):
    pass


class GeneratorTable:
    """Ordered generator names with positive degrees."""

    __slots__ = ("names", "degrees", "_index", "_hash")

    def __init__(self, gens: Iterable[tuple[str, int]]):
        gens = list(gens)
        self.names = tuple(g for g, _ in gens)
        self.degrees = tuple(int(d) for _, d in gens)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate generator names in {self.names}")
        if any(d < 1 for d in self.degrees):
            raise ValueError("generator degrees must be >= 1")
        self._index = {g: i for i, g in enumerate(self.names)}
        self._hash = hash((self.names, self.degrees))

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return (isinstance(other, GeneratorTable) and self.names == other.names
                and self.degrees == other.degrees)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "GeneratorTable(%s)" % ", ".join(
            f"{n}:{d}" for n, d in zip(self.names, self.degrees))

    def index(self, name: str) -> int:
        return self._index[name]

    def degree(self, exps: Sequence[int]) -> int:
        return sum(e * d for e, d in zip(exps, self.degrees))

    def items(self):
        return zip(self.names, self.degrees)

    def __add__(self, other: "GeneratorTable") -> "GeneratorTable":
        return GeneratorTable(list(self.items()) + list(other.items()))

    def monomial_text(self, exps: Sequence[int]) -> str:
        parts = []
        for name, e in zip(self.names, exps):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def order_key(self, exps: Sequence[int]):
        """Graded-lex key: degree first, then exponents in table order."""
        return (self.degree(exps), tuple(exps))


def _reduce(variant: Variant, value):
    if variant is Variant.MOD2:
        return value % 2
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def _check_raw(variant: Variant, value):
    if variant is Variant.DYADIC:
        den = Fraction(value).denominator
        if den & (den - 1):
            raise ValueError(f"{value} is not a dyadic rational")
    elif isinstance(value, Fraction) and value.denominator != 1:
        raise ValueError(f"{value} is not an integer")
    return _reduce(variant, value)


class Polynomial:
    __slots__ = ("table", "variant", "terms")

    def __init__(self, table: GeneratorTable, variant: Variant = Variant.INT,
                 terms: Mapping[tuple, object] | None = None, _trusted=False):
        self.table = table
        self.variant = variant
        if _trusted:
            self.terms = terms
            return
        clean = {}
        n = len(table)
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or min(exps, default=0) < 0:
                raise ValueError(f"bad exponent vector {exps} for {table}")
            if isinstance(c, Coefficient):
                c = c.raw()
            c = _check_raw(variant, c)
            if c:
                clean[exps] = _reduce(variant, clean.get(exps, 0) + c)
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean

    # constructors -----------------------------------------------------------
    @classmethod
    def zero(cls, table, variant=Variant.INT):
        return cls(table, variant, {}, _trusted=True)

    @classmethod
    def constant(cls, table, value, variant=Variant.INT):
        return cls(table, variant, {(0,) * len(table): value})

    @classmethod
    def one(cls, table, variant=Variant.INT):
        return cls.constant(table, 1, variant)

    @classmethod
    def gen(cls, table, name, variant=Variant.INT):
        exps = [0] * len(table)
        exps[table.index(name)] = 1
        return cls(table, variant, {tuple(exps): 1}, _trusted=True)

    @classmethod
    def monomial(cls, table, exps, coeff=1, variant=Variant.INT):
        return cls(table, variant, {tuple(exps): coeff})

    def _new(self, terms):
        return Polynomial(self.table, self.variant, terms, _trusted=True)

    # arithmetic --------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.table != self.table or other.variant is not self.variant:
                raise TableMismatch(
                    f"{self.table}/{self.variant.name} vs {other.table}/{other.variant.name}")
            return other
        if isinstance(other, Coefficient):
            other = other.raw()
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.table, other, self.variant)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        v = self.variant
        for m, c in other.terms.items():
            s = _reduce(v, out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        if self.variant is Variant.MOD2:
            return self
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        v = self.variant
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return self._new({m: _reduce(v, c) for m, c in out.items() if _reduce(v, c)})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial.one(self.table, self.variant)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, value):
        v = self.variant
        return self._new({m: _reduce(v, c * value) for m, c in self.terms.items()
                          if _reduce(v, c * value)})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.table, other, self.variant)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.table == other.table and self.variant is other.variant
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.table, self.variant, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # queries -------------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def coeff(self, exps) -> Coefficient:
        return Coefficient.from_raw(self.variant, self.terms.get(tuple(exps), 0))

    def sorted_terms(self):
        """Terms in canonical order: largest monomial (degree, then lex) first."""
        key = self.table.order_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def degrees(self) -> set[int]:
        return {self.table.degree(m) for m in self.terms}

    def top_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def constant_term(self):
        return self.terms.get((0,) * len(self.table), 0)

    def is_integral(self) -> bool:
        """True when every coefficient is denominator-free."""
        return all(Coefficient.from_raw(self.variant, c).is_integral()
                   for c in self.terms.values())

    def variables(self) -> set[str]:
        used = set()
        for m in self.terms:
            used.update(n for n, e in zip(self.table.names, m) if e)
        return used

    # conversions ------------------------------------------------------------------
    def to_variant(self, variant: Variant) -> "Polynomial":
        if variant is self.variant:
            return self
        if self.variant is Variant.MOD2 and variant is not Variant.MOD2:
            raise ValueError("cannot lift mod-2 coefficients")
        return Polynomial(self.table, variant, dict(self.terms))

    def retable(self, table: GeneratorTable) -> "Polynomial":
        """Re-express over ``table``, which must contain every used generator."""
        if table == self.table:
            return self
        pos = []
        for name in self.table.names:
            pos.append(table.index(name) if name in table else None)
        out = {}
        for m, c in self.terms.items():
            new = [0] * len(table)
            for i, e in enumerate(m):
                if e:
                    if pos[i] is None:
                        raise TableMismatch(f"{self.table.names[i]} missing from {table}")
                    new[pos[i]] = e
            out[tuple(new)] = c
        return Polynomial(table, self.variant, out, _trusted=True)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            coeff = Coefficient.from_raw(self.variant, c)
            neg = coeff.num < 0
            mag = -coeff if neg else coeff
            mono = self.table.monomial_text(m)
            mag_text = str(mag) if self.variant is not Variant.MOD2 else "1"
            if mono and mag_text == "1":
                body = mono
            elif mono:
                body = f"{mag_text}*{mono}"
            else:
                body = mag_text
            if i == 0:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def to_json(self) -> list:
        return [{"exps": list(m), "coeff": str(Coefficient.from_raw(self.variant, c))}
                for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, table, variant, data) -> "Polynomial":
        from .scalars import parse_scalar
        return cls(table, variant,
                   {tuple(t["exps"]): parse_scalar(t["coeff"], variant) for t in data})


def poly_arith(op: str, p: Polynomial, q: Polynomial) -> Polynomial:
    if not isinstance(q, Polynomial) or p.table != q.table or p.variant is not q.variant:
        raise TableMismatch("operands live in different polynomial rings")
    if op.upper() == "ADD":
        return p + q
    if op.upper() == "MUL":
        return p * q
    raise ValueError(f"unknown op {op}")


def elementary_symmetric(i: int, vars: Sequence, table: GeneratorTable | None = None,
                         variant: Variant = Variant.INT) -> Polynomial:
    """The ``i``-th elementary symmetric polynomial of ``vars``.

    ``vars`` holds generator names (resolved against ``table``) or arbitrary
    polynomials, so shifted or negated roots can be passed directly.  Raises
    :class:`IndexOutOfRange` when ``i`` exceeds the number of variables.
    """
    polys = [Polynomial.gen(table, v, variant) if isinstance(v, str) else v for v in vars]
    if i < 0 or i > len(polys):
        raise IndexOutOfRange(f"e_{i} of {len(polys)} variables")
    if table is None:
        if not polys:
            raise ValueError("need a table for an empty variable list")
        table, variant = polys[0].table, polys[0].variant
    return elementary_symmetric_all(polys, table, variant)[i]


def elementary_symmetric_all(polys: Sequence[Polynomial], table, variant) -> list[Polynomial]:
    """[e_0, e_1, ..., e_n] of the given polynomials."""
    es = [Polynomial.one(table, variant)]
    for p in polys:
        nxt = es + [Polynomial.zero(table, variant)]
        for k in range(1, len(nxt)):
            nxt[k] = nxt[k] + es[k - 1] * p
        es = nxt
    return es


def complete_symmetric(k: int, polys: Sequence[Polynomial], table, variant) -> Polynomial:
    """h_k of the given polynomials, by the recursion h_k(x_1..x_i) = h_k(..x_{i-1}) + x_i h_{k-1}."""
    hs = [Polynomial.one(table, variant)] + [Polynomial.zero(table, variant)] * k
    for p in polys:
        for d in range(1, k + 1):
            hs[d] = hs[d] + p * hs[d - 1]
    return hs[k]


def graded_component(p: Polynomial, d: int) -> Polynomial:
    deg = p.table.degree
    return p._new({m: c for m, c in p.terms.items() if deg(m) == d})


def truncate(p: Polynomial, bound: int) -> Polynomial:
    deg = p.table.degree
    return p._new({m: c for m, c in p.terms.items() if deg(m) <= bound})


def series_inverse(p: Polynomial, bound: int) -> Polynomial:
    """Inverse of a total class ``1 + (higher terms)`` modulo degrees above ``bound``."""
    if graded_component(p, 0) != Polynomial.one(p.table, p.variant):
        raise NotAUnit("constant term must be 1")
    comps = [graded_component(p, d) for d in range(bound + 1)]
    q = [Polynomial.one(p.table, p.variant)]
    for d in range(1, bound + 1):
        acc = Polynomial.zero(p.table, p.variant)
        for k in range(1, d + 1):
            if comps[k]:
                acc = acc + comps[k] * q[d - k]
        q.append(-acc)
    out = Polynomial.zero(p.table, p.variant)
    for part in q:
        out = out + part
    return out


def substitute(p: Polynomial, images: Mapping[str, Polynomial],
               target: GeneratorTable | None = None) -> Polynomial:
    """Apply the ring homomorphism sending each generator to its image."""
    used = p.variables()
    missing = used - set(images)
    if missing:
        raise MissingImage(", ".join(sorted(missing)))
    vals = list(images.values())
    if target is None:
        if not vals:
            return p
        target = vals[0].table
    variant = p.variant
    for v in vals:
        if v.table != target:
            raise TableMismatch("images must share one target table")
    powers: dict = {}

    def power(name, e):
        key = (name, e)
        if key not in powers:
            img = images[name].to_variant(variant) if images[name].variant is not variant \
                else images[name]
            powers[key] = img ** e
        return powers[key]

    out: dict = {}
    for m, c in p.terms.items():
        term = Polynomial.constant(target, c, variant)
        for name, e in zip(p.table.names, m):
            if e:
                term = term * power(name, e)
                if not term.terms:
                    break
        for mm, cc in term.terms.items():
            out[mm] = out.get(mm, 0) + cc
    return Polynomial(target, variant, {m: c for m, c in out.items() if _reduce(variant, c)})
