"""Exhaustive ring-axiom checks on a presentation's declared basis.

The structure constants ``b_i * b_j`` are computed once with the rewriting
engine.  Associativity over every basis multiset ``{i, j, k}`` then only needs
base-ring arithmetic: ``(b_i b_j) b_k = sum_m T_ij[m] T_mk``.  When
python-flint is importable that arithmetic runs on its multivariate
polynomials, with the basis index carried as the exponent of an extra
variable ``u`` so that each table row is a single polynomial.  Otherwise the
products are formed with :class:`~chowq.rings.RingElement` arithmetic.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .report import Report
from .rings import RingPresentation, normal_form
from .scalars import Variant

try:
    import flint
except ImportError:             # pragma: no cover - exercised only without the extra
    flint = None


def structure_constants(ring: RingPresentation) -> dict:
    """(i, j) -> b_i * b_j for i <= j, as ring elements."""
    basis = [ring.basis_element(b) for b in ring.basis]
    table = {}
    for i, bi in enumerate(basis):
        for j in range(i, len(basis)):
            table[i, j] = bi * basis[j]
    return table


def _sym(table, i, j):
    return table[(i, j) if i <= j else (j, i)]


def _triples(size):
    return itertools.combinations_with_replacement(range(size), 3)


def _assoc_plain(ring, table) -> list:
    basis = [ring.basis_element(b) for b in ring.basis]
    bad = []
    for i, j, k in _triples(len(basis)):
        a = _sym(table, i, j) * basis[k]
        if a != _sym(table, j, k) * basis[i] or a != _sym(table, i, k) * basis[j]:
            bad.append((i, j, k))
    return bad


def _flint_parts(ring):
    """Contexts whose product is an injective image of the base ring."""
    names = tuple(ring.base.names) + ("u",)
    order = "degrevlex"
    torsion = ring.notes.get("two_torsion")
    if ring.variant is Variant.DYADIC:
        ctx = flint.fmpq_mpoly_ctx.get(names, order)
        return [(ctx, lambda m, c: True, lambda c: flint.fmpq(Fraction(c).numerator,
                                                              Fraction(c).denominator))]
    if ring.variant is Variant.MOD2:
        ctx = flint.nmod_mpoly_ctx.get(names, modulus=2, ordering=order)
        return [(ctx, lambda m, c: True, int)]
    zctx = flint.fmpz_mpoly_ctx.get(names, order)
    if torsion not in ring.base:
        return [(zctx, lambda m, c: True, int)]
    # Z[y, l]/(2l) embeds in Z[y] x F2[y, l]: set l = 0, and reduce mod 2
    t = ring.base.index(torsion)
    fctx = flint.nmod_mpoly_ctx.get(names, modulus=2, ordering=order)
    return [(zctx, lambda m, c: m[t] == 0, int), (fctx, lambda m, c: c % 2 != 0, int)]


def _assoc_flint(ring, table) -> list:
    idx = {b: i for i, b in enumerate(ring.basis)}
    size = len(ring.basis)
    bad = set()
    for ctx, keep, conv in _flint_parts(ring):
        zero = ctx.from_dict({})

        def row(el, marker):
            d = {}
            for b, coeffs in el._c.items():
                u = idx[b] if marker else 0
                for m, c in coeffs.items():
                    if keep(m, c):
                        d[m + (u,)] = conv(c)
            return ctx.from_dict(d)

        rows = {key: row(el, True) for key, el in table.items()}
        vecs = {key: [(idx[b], row(el.__class__(ring, {b: c}), False))
                      for b, c in el._c.items()]
                for key, el in table.items()}

        def times(vec, k):
            acc = zero
            for m, c in vec:
                if c:
                    acc += c * _sym(rows, m, k)
            return acc

        for i, j, k in _triples(size):
            a = times(_sym(vecs, i, j), k)
            if a != times(_sym(vecs, j, k), i) or a != times(_sym(vecs, i, k), j):
                bad.add((i, j, k))
    return sorted(bad)


def ring_soundness_check(ring: RingPresentation, use_flint: bool | None = None) -> Report:
    """Basis closure, relations, commutativity and exhaustive associativity."""
    rep = Report("ring_soundness", {"kind": ring.kind, "n": ring.n, "basis": len(ring.basis)})
    fiber = ring.fiber
    for b in ring.basis:
        el = ring.basis_element(b)
        if normal_form(ring, el.lift()) != el:
            rep.fail(part="basis_closure", monomial=fiber.monomial_text(b))
    for label, poly in ring.relations:
        res = normal_form(ring, poly)
        if res:
            rep.fail(part="relation", relation=label, value=res.to_text())
    table = structure_constants(ring)
    basis = [ring.basis_element(b) for b in ring.basis]
    for i, j in table:
        if i != j and basis[j] * basis[i] != table[i, j]:
            rep.fail(part="commutativity", pair=f"{fiber.monomial_text(ring.basis[i])}, "
                                                 f"{fiber.monomial_text(ring.basis[j])}")
    if use_flint is None:
        use_flint = flint is not None
    bad = _assoc_flint(ring, table) if use_flint else _assoc_plain(ring, table)
    for i, j, k in bad[:20]:
        rep.fail(part="associativity", triple=", ".join(
            fiber.monomial_text(ring.basis[t]) or "1" for t in (i, j, k)))
    rep.witness = {"triples": sum(1 for _ in _triples(len(ring.basis))),
                   "backend": "flint" if use_flint else "python"}
    return rep
