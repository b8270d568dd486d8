"""Groebner bases for global orders and Mora standard bases for local orders.

Orders compare exponent tuples through a key function (bigger key = bigger
monomial):

  * degrevlex-global: total degree descending, ties by reverse lexicographic;
    a well-order, 1 is the smallest monomial.
  * degrevlex-local: total degree ascending with the same tie-break, so 1 is
    the largest monomial.  Standard bases under this order see exactly the
    germ at the origin.
  * block(elim): the eliminated block is compared first (degrevlex), so a
    Groebner basis intersected with the remaining variables generates the
    elimination ideal.

Reduction dispatches on the order: ordinary multivariate division with full
tail reduction for global orders, Mora's weak normal form with ecart control
for local orders.  Among applicable reducers Mora picks one of minimal ecart,
ties broken by lowest index, which makes runs deterministic.

All returned bases are monic; global bases are reduced (tail-reduced) and
sorted, so equality of ideals under the same order is plain tuple equality.
Local bases are minimal (no leading term divides another) but keep their
tails as computed, since full tail reduction need not terminate in the local
ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import Poly, PolyError, fresh_var


class GroebnerError(ValueError):
    pass


# -- monomial orders ---------------------------------------------------------


@dataclass(frozen=True)
class MonomialOrder:
    kind: str  # "degrevlex-global" | "degrevlex-local" | "block"
    elim: tuple[int, ...] = ()  # variable positions of the eliminated block

    @property
    def is_global(self) -> bool:
        return self.kind != "degrevlex-local"

    def key(self, e: tuple):
        if self.kind == "degrevlex-global":
            return (sum(e), tuple(-x for x in reversed(e)))
        if self.kind == "degrevlex-local":
            return (-sum(e), tuple(-x for x in reversed(e)))
        elim = self.elim
        block = tuple(e[i] for i in elim)
        rest = tuple(x for i, x in enumerate(e) if i not in elim)
        return (
            (sum(block), tuple(-x for x in reversed(block))),
            (sum(rest), tuple(-x for x in reversed(rest))),
        )


GLOBAL = MonomialOrder("degrevlex-global")
LOCAL = MonomialOrder("degrevlex-local")


def block_order(elim_positions: Iterable[int]) -> MonomialOrder:
    return MonomialOrder("block", tuple(sorted(elim_positions)))


# -- ideal bases -------------------------------------------------------------


@dataclass(frozen=True)
class IdealBasis:
    """Generator list with its monomial order; is_standard means every
    S-polynomial reduces to zero (Buchberger criterion, Mora normal form for
    local orders)."""

    vars: tuple[str, ...]
    gens: tuple[Poly, ...]
    order: MonomialOrder = GLOBAL
    is_standard: bool = False

    def leading_exponents(self) -> list[tuple]:
        return [max(g.terms, key=self.order.key) for g in self.gens if g]

    def contains_one(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.gens)

    def __iter__(self):
        return iter(self.gens)


# -- raw-dict reduction helpers ----------------------------------------------
# The hot loops work on plain dicts {exps: Fraction} to avoid rebuilding Poly
# objects at every reduction step.


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _sub_mul(h: dict, g: dict, c: Fraction, shift: tuple) -> None:
    # h -= c * x^shift * g, in place
    for e, v in g.items():
        e2 = tuple(a + b for a, b in zip(e, shift))
        nv = h.get(e2, Fraction(0)) - c * v
        if nv == 0:
            h.pop(e2, None)
        else:
            h[e2] = nv


def _lm(h: dict, order: MonomialOrder) -> tuple:
    return max(h, key=order.key)


def _deg(h: dict) -> int:
    return max(sum(e) for e in h)


class _Reducer:
    __slots__ = ("lm", "lc", "terms", "ecart")

    def __init__(self, terms: dict, order: MonomialOrder):
        self.terms = terms
        self.lm = _lm(terms, order)
        self.lc = terms[self.lm]
        self.ecart = _deg(terms) - sum(self.lm)


def _reduce_global(p: dict, reducers: list[_Reducer], order: MonomialOrder) -> dict:
    """Multivariate division with full tail reduction (global orders only)."""
    h = dict(p)
    rem: dict[tuple, Fraction] = {}
    while h:
        m = _lm(h, order)
        for red in reducers:
            if _divides(red.lm, m):
                shift = tuple(a - b for a, b in zip(m, red.lm))
                _sub_mul(h, red.terms, h[m] / red.lc, shift)
                break
        else:
            rem[m] = h.pop(m)
    return rem


def _reduce_mora(p: dict, reducers: list[_Reducer], order: MonomialOrder) -> dict:
    """Mora's weak normal form: the leading term of the result is not
    divisible by any leading term of the input reducers.

    When the chosen reducer has bigger ecart than the intermediate result,
    the intermediate result itself joins the reducer list; this is what makes
    the division terminate without a well-order.  The result equals a unit
    times p modulo the ideal, which is all the local computations need.
    """
    h = dict(p)
    T = list(reducers)
    frozen = len(T)
    while h:
        m = _lm(h, order)
        best = None
        best_key = None
        for i, red in enumerate(T):
            if _divides(red.lm, m):
                k = (red.ecart, i)
                if best_key is None or k < best_key:
                    best, best_key = red, k
        if best is None:
            break
        ecart_h = _deg(h) - sum(m)
        if best.ecart > ecart_h:
            T.append(_Reducer(dict(h), order))
        shift = tuple(a - b for a, b in zip(m, best.lm))
        _sub_mul(h, best.terms, h[m] / best.lc, shift)
    return h


def _reduce_local_full(p: dict, reducers: list[_Reducer], order: MonomialOrder) -> dict:
    # repeated Mora passes, stripping the irreducible head each time; the cap
    # guards against the (never observed) non-terminating tail case
    rem: dict[tuple, Fraction] = {}
    h = dict(p)
    for _ in range(10000):
        h = _reduce_mora(h, reducers, order)
        if not h:
            return rem
        m = _lm(h, order)
        rem[m] = h.pop(m)
    raise GroebnerError("local normal form did not stabilize")


def _monic(terms: dict, order: MonomialOrder) -> dict:
    lc = terms[_lm(terms, order)]
    if lc == 1:
        return terms
    return {e: c / lc for e, c in terms.items()}


def _spoly(a: _Reducer, b: _Reducer, order: MonomialOrder) -> dict:
    lcm = tuple(max(x, y) for x, y in zip(a.lm, b.lm))
    h: dict[tuple, Fraction] = {}
    _sub_mul(h, a.terms, Fraction(-1) / a.lc, tuple(x - y for x, y in zip(lcm, a.lm)))
    _sub_mul(h, b.terms, Fraction(1) / b.lc, tuple(x - y for x, y in zip(lcm, b.lm)))
    return h


def _interreduce(polys: list[dict], order: MonomialOrder) -> list[dict]:
    """Minimal then tail-reduced monic basis; canonical for global orders."""
    polys = [p for p in polys if p]
    # minimalize: drop elements whose leading term another one divides
    keep: list[dict] = []
    lms = [(_lm(p, order), i) for i, p in enumerate(polys)]
    for lm, i in lms:
        if any(
            _divides(lm2, lm) and (lm2 != lm or j < i)
            for lm2, j in lms
            if j != i
        ):
            continue
        keep.append(polys[i])
    # drop duplicate leading terms
    seen = {}
    for p in keep:
        seen.setdefault(_lm(p, order), p)
    keep = list(seen.values())
    if order.is_global:
        reduced = []
        for i, p in enumerate(keep):
            others = [_Reducer(q, order) for j, q in enumerate(keep) if j != i]
            r = _reduce_global(p, others, order)
            if r:
                reduced.append(_monic(r, order))
        keep = reduced
    else:
        keep = [_monic(p, order) for p in keep]
    keep.sort(key=lambda p: order.key(_lm(p, order)), reverse=True)
    return keep


def _buchberger(gens: list[dict], order: MonomialOrder) -> list[dict]:
    reduce = _reduce_global if order.is_global else _reduce_mora
    # preprocessing: reduce each generator by the ones accepted so far; the
    # remainder replaces it, so the (localized) ideal is unchanged
    G: list[_Reducer] = []
    for g in sorted(gens, key=lambda p: order.key(_lm(p, order))):
        r = reduce(g, G, order) if G else g
        if r:
            G.append(_Reducer(_monic(r, order), order))
    pairs: set[tuple[int, int]] = {(i, j) for j in range(len(G)) for i in range(j)}

    def lcm_of(i, j):
        return tuple(max(x, y) for x, y in zip(G[i].lm, G[j].lm))

    while pairs:
        i, j = min(pairs, key=lambda ij: (sum(lcm_of(*ij)), ij))
        pairs.discard((i, j))
        lcm = lcm_of(i, j)
        if order.is_global:
            # product criterion: coprime leading terms reduce to zero
            if all(x + y == z for x, y, z in zip(G[i].lm, G[j].lm, lcm)):
                continue
            # chain criterion
            skip = False
            for k in range(len(G)):
                if k in (i, j) or not _divides(G[k].lm, lcm):
                    continue
                if (min(i, k), max(i, k)) not in pairs and (
                    min(j, k),
                    max(j, k),
                ) not in pairs:
                    skip = True
                    break
            if skip:
                continue
        r = reduce(_spoly(G[i], G[j], order), G, order)
        if r:
            G.append(_Reducer(_monic(r, order), order))
            new = len(G) - 1
            pairs.update((k, new) for k in range(new))
    return _interreduce([g.terms for g in G], order)


def standard_basis(gens: Sequence[Poly], order: MonomialOrder = GLOBAL) -> IdealBasis:
    """Groebner basis (global order) or Mora standard basis (local order).

    The result generates the same ideal, or the same localized ideal for a
    local order, and satisfies the Buchberger criterion.
    """
    gens = list(gens)
    if not gens:
        raise GroebnerError("empty generator list")
    vars = gens[0].vars
    for g in gens:
        if g.vars != vars:
            raise GroebnerError("generators live in different rings")
    dicts = [dict(g.terms) for g in gens if g]
    if not dicts:
        return IdealBasis(vars, (), order, True)
    out = _buchberger(dicts, order)
    return IdealBasis(vars, tuple(Poly(vars, t) for t in out), order, True)


def normal_form(p: Poly, basis: IdealBasis) -> Poly:
    """Remainder of p on division by the basis.

    For a standard basis the remainder is unique; otherwise it is a valid,
    order-dependent reduction.  No term of the remainder is divisible by a
    leading term of the basis.
    """
    if p.vars != basis.vars:
        raise GroebnerError(f"variable mismatch: {p.vars} vs {basis.vars}")
    reducers = [_Reducer(dict(g.terms), basis.order) for g in basis.gens if g]
    if not reducers:
        return p
    reduce = _reduce_global if basis.order.is_global else _reduce_local_full
    return Poly(p.vars, reduce(dict(p.terms), reducers, basis.order))


def in_ideal(p: Poly, basis: IdealBasis) -> bool:
    return normal_form(p, basis).is_zero()


def bases_equal(a: IdealBasis, b: IdealBasis) -> bool:
    """Equality of reduced bases (same vars, same order)."""
    return a.vars == b.vars and a.order == b.order and a.gens == b.gens


# -- elimination, intersection, saturation -----------------------------------


def eliminate(gens: Sequence[Poly], drop_vars: Iterable[str]) -> IdealBasis:
    """Basis of ideal(gens) intersected with the ring without drop_vars."""
    gens = [g for g in gens if g is not None]
    if not gens:
        raise GroebnerError("empty generator list")
    vars = gens[0].vars
    drop = set(drop_vars)
    unknown = drop - set(vars)
    if unknown:
        raise GroebnerError(f"unknown variables {sorted(unknown)}")
    positions = [i for i, v in enumerate(vars) if v in drop]
    kept = tuple(v for v in vars if v not in drop)
    if not kept:
        raise GroebnerError("cannot eliminate every variable")
    basis = standard_basis(gens, block_order(positions))
    keep_idx = [i for i, v in enumerate(vars) if v not in drop]
    out = []
    for g in basis.gens:
        if all(all(e[i] == 0 for i in positions) for e in g.terms):
            out.append(
                Poly(kept, {tuple(e[i] for i in keep_idx): c for e, c in g.terms.items()})
            )
    reduced = _interreduce([dict(g.terms) for g in out], GLOBAL) if out else []
    return IdealBasis(kept, tuple(Poly(kept, t) for t in reduced), GLOBAL, True)


def _lift(p: Poly, vars2: tuple[str, ...]) -> Poly:
    # embed into a superring that appends fresh variables at the end
    extra = len(vars2) - len(p.vars)
    return Poly(vars2, {e + (0,) * extra: c for e, c in p.terms.items()})


def intersect(gens_a: Sequence[Poly], gens_b: Sequence[Poly]) -> IdealBasis:
    """Ideal intersection via the one-tag-variable elimination."""
    if not gens_a or not gens_b:
        raise GroebnerError("empty generator list")
    vars = gens_a[0].vars
    t = fresh_var(vars, "t_")
    vars2 = vars + (t,)
    tpoly = Poly.variable(vars2, t)
    one = Poly.const(vars2, 1)
    ext = [tpoly * _lift(g, vars2) for g in gens_a if g]
    ext += [(one - tpoly) * _lift(g, vars2) for g in gens_b if g]
    return eliminate(ext, {t})


def saturate(gens: Sequence[Poly], h: Poly) -> IdealBasis:
    """(ideal : h^infinity) by the Rabinowitsch trick: eliminate t from
    gens together with t*h - 1."""
    if h is None or h.is_zero():
        raise GroebnerError("cannot saturate by zero")
    gens = [g for g in gens if g]
    if not gens:
        raise GroebnerError("empty generator list")
    vars = gens[0].vars
    if h.is_constant():
        return standard_basis(gens, GLOBAL)
    t = fresh_var(vars, "t_")
    vars2 = vars + (t,)
    tag = Poly.variable(vars2, t) * _lift(h, vars2) - Poly.const(vars2, 1)
    return eliminate([_lift(g, vars2) for g in gens] + [tag], {t})


def saturate_by_ideal(gens: Sequence[Poly], cogens: Sequence[Poly]) -> IdealBasis:
    """(ideal : C^infinity) for C = ideal(cogens): removes exactly the primary
    components whose radical contains C.

    Computed as the intersection over the generators c of (ideal : c^infinity);
    a second round is provably a fixed point, so one round is exact.
    """
    cogens = [c for c in cogens if c is not None and not c.is_zero()]
    if not cogens:
        raise GroebnerError("cannot saturate by the zero ideal")
    gens = [g for g in gens if g]
    if not gens:
        raise GroebnerError("empty generator list")
    if any(c.is_constant() for c in cogens):
        # C is the unit ideal; saturating by it changes nothing
        return standard_basis(gens, GLOBAL)
    result = saturate(gens, cogens[0])
    for c in cogens[1:]:
        part = saturate(gens, c)
        if result.contains_one():
            result = part
            continue
        if part.contains_one():
            continue
        result = intersect(result.gens, part.gens)
    return result


# -- principal-ideal gcd utilities -------------------------------------------


def divide_exact(p: Poly, q: Poly) -> Poly:
    """Quotient p/q when the division is exact."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    reducers = [_Reducer(dict(q.terms), GLOBAL)]
    h = dict(p.terms)
    quot: dict[tuple, Fraction] = {}
    while h:
        m = _lm(h, GLOBAL)
        if not _divides(reducers[0].lm, m):
            raise PolyError("division is not exact")
        shift = tuple(a - b for a, b in zip(m, reducers[0].lm))
        c = h[m] / reducers[0].lc
        quot[shift] = c
        _sub_mul(h, reducers[0].terms, c, shift)
    return Poly(p.vars, quot)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd of two polynomials, via (p) intersect (q) = (lcm)."""
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    inter = intersect([p], [q])
    if len(inter.gens) != 1:
        raise GroebnerError("intersection of principal ideals is not principal")
    g = divide_exact(p * q, inter.gens[0])
    return Poly(g.vars, _monic(dict(g.terms), GLOBAL))


def squarefree_part(p: Poly) -> Poly:
    """p divided by the gcd of p with all its first partials."""
    if p.is_zero() or p.is_constant():
        return p
    g = p
    for v in p.vars:
        g = poly_gcd(g, p.derivative(v))
        if g.is_constant():
            break
    out = divide_exact(p, g)
    return Poly(out.vars, _monic(dict(out.terms), GLOBAL))
