"""Characteristic classes on the log resolution, as truncated polynomials.

Everything is driven by the series Q(x) = x / (1 - exp(-x)).  The total
Chern class of the resolution and its Todd class are products of local
factors, one per building-set element, each a rational expression in the
sums of variables strictly below / weakly below the element.  From the
Chern class of the sheaf of logarithmic differentials the Chern classes
of its exterior powers are produced by rewriting the universal splitting
computation in the elementary-symmetric basis, and Chern characters of
the dual bundles follow from Newton's identities.

Two deliberately independent routes to the same Chern character are kept:
`ch_dual_exterior` (elementary-symmetric rewriting plus Newton's
identities) and `ch_dual_exterior_roots` (direct expansion of the
exponential sums in formal roots).  They must agree as free-ring
polynomials; the verification harness compares them term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from .arrangement import StructureError
from .nested import BuildingSet
from .ring import GradedPoly

_ZERO = Fraction(0)
_ONE = Fraction(1)


def q_series(deg: int) -> list[Fraction]:
    """Coefficients of Q(x) = x / (1 - exp(-x)) through degree `deg`."""
    # 1 - exp(-x) = x * E(x) with E(k-th coefficient) = (-1)^k / (k+1)!
    e = [Fraction((-1) ** k, factorial(k + 1)) for k in range(deg + 1)]
    q = [_ONE]
    for k in range(1, deg + 1):
        q.append(-sum((e[i] * q[k - i] for i in range(1, k + 1)), _ZERO))
    return q


def series_apply(coeffs: list[Fraction], z: GradedPoly) -> GradedPoly:
    """Evaluate a power series with the given coefficients at `z`.

    `z` must have zero constant term, so the composition is finite in the
    truncated ring.
    """
    if z.constant_term:
        raise ValueError("series composition needs a zero constant term")
    out = GradedPoly.constant(coeffs[0], z.nvars, z.trunc)
    power = GradedPoly.constant(1, z.nvars, z.trunc)
    for k in range(1, min(len(coeffs), z.trunc + 1)):
        power = power * z
        if not power.terms:
            break
        if coeffs[k]:
            out = out + power * coeffs[k]
    return out


def _below_sums(bs: BuildingSet, v: int):
    nv, trunc = bs.size, bs.n - 1
    strict = GradedPoly.zero(nv, trunc)
    for w in range(nv):
        if bs.lt(w, v):
            strict = strict + GradedPoly.variable(w, nv, trunc)
    weak = strict + GradedPoly.variable(v, nv, trunc)
    return strict, weak


def chern_total(bs: BuildingSet) -> GradedPoly:
    """Total Chern class of the resolution."""
    nv, trunc = bs.size, bs.n - 1
    one = GradedPoly.constant(1, nv, trunc)
    c0 = GradedPoly.variable(0, nv, trunc)
    total = (one - c0) ** bs.n
    for v in range(1, nv):
        r = bs.codims[v]
        strict, weak = _below_sums(bs, v)
        cv = GradedPoly.variable(v, nv, trunc)
        total = total * (one - strict) ** (-r) * (one + cv) * (one - weak) ** r
    return total


def todd_class(bs: BuildingSet) -> GradedPoly:
    """Todd class of the resolution."""
    nv, trunc = bs.size, bs.n - 1
    q = q_series(trunc)
    c0 = GradedPoly.variable(0, nv, trunc)
    total = series_apply(q, -c0) ** bs.n
    for v in range(1, nv):
        r = bs.codims[v]
        strict, weak = _below_sums(bs, v)
        cv = GradedPoly.variable(v, nv, trunc)
        total = (
            total
            * series_apply(q, -strict) ** (-r)
            * series_apply(q, cv)
            * series_apply(q, -weak) ** r
        )
    return total


def chern_log_forms(bs: BuildingSet, total_chern: GradedPoly) -> GradedPoly:
    """Chern class of the logarithmic cotangent sheaf along the boundary.

    Dualizing flips the sign of each odd-degree part of the Chern class;
    the boundary divisors then contribute one geometric factor each.
    """
    out = total_chern.alternate_signs()
    nv, trunc = bs.size, bs.n - 1
    one = GradedPoly.constant(1, nv, trunc)
    for v in range(1, nv):
        cv = GradedPoly.variable(v, nv, trunc)
        out = out * (one - cv).geom_inv()
    return out


# --- symmetric-function engine in formal roots ---------------------------
#
# Root polynomials are dicts mapping an exponent tuple over the m formal
# roots to a Fraction; they stay homogeneous of degree <= the truncation.

RootPoly = dict[tuple[int, ...], Fraction]


def _rp_mul(a: RootPoly, b: RootPoly, cap: int) -> RootPoly:
    out: RootPoly = {}
    for ma, ca in a.items():
        da = sum(ma)
        for mb, cb in b.items():
            if da + sum(mb) > cap:
                continue
            mono = tuple(x + y for x, y in zip(ma, mb))
            nv = out.get(mono, _ZERO) + ca * cb
            if nv:
                out[mono] = nv
            else:
                out.pop(mono, None)
    return out


def _rp_pow(a: RootPoly, k: int, cap: int, m: int) -> RootPoly:
    out: RootPoly = {(0,) * m: _ONE}
    for _ in range(k):
        out = _rp_mul(out, a, cap)
    return out


def _elementary(m: int, j: int) -> RootPoly:
    out: RootPoly = {}
    for combo in combinations(range(m), j):
        mono = tuple(1 if i in combo else 0 for i in range(m))
        out[mono] = _ONE
    return out


def sym_to_elementary(sym: RootPoly, m: int) -> dict[tuple[int, ...], Fraction]:
    """Rewrite a symmetric root polynomial in the elementary basis.

    Repeatedly strips the lexicographically leading term; a leading
    exponent that is not weakly decreasing means the input was not
    symmetric, which is an internal error here.
    """
    work = {mo: c for mo, c in sym.items() if c}
    cap = max((sum(mo) for mo in work), default=0)
    out: dict[tuple[int, ...], Fraction] = {}
    while work:
        lead = max(work)
        if any(lead[i] < lead[i + 1] for i in range(m - 1)):
            raise StructureError("root polynomial is not symmetric")
        emono = tuple(lead[i] - lead[i + 1] for i in range(m - 1)) + (lead[m - 1],)
        coeff = work[lead]
        out[emono] = out.get(emono, _ZERO) + coeff
        expansion: RootPoly = {(0,) * m: _ONE}
        for j, e in enumerate(emono):
            if e:
                expansion = _rp_mul(expansion, _rp_pow(_elementary(m, j + 1), e, cap, m), cap)
        for mono, c in expansion.items():
            nv = work.get(mono, _ZERO) - coeff * c
            if nv:
                work[mono] = nv
            else:
                work.pop(mono, None)
    return {mo: c for mo, c in out.items() if c}


def _substitute_elementary(
    rewritten: dict[tuple[int, ...], Fraction], h_parts: list[GradedPoly], nv: int, trunc: int
) -> GradedPoly:
    """Plug the graded parts of the log Chern class into e_1, ..., e_m."""
    out = GradedPoly.zero(nv, trunc)
    for emono, coeff in rewritten.items():
        term = GradedPoly.constant(coeff, nv, trunc)
        for j, e in enumerate(emono):
            for _ in range(e):
                term = term * h_parts[j + 1]
        out = out + term
    return out


def exterior_chern(bs: BuildingSet, p: int, log_chern: GradedPoly) -> list[GradedPoly]:
    """Chern classes of the p-th exterior power of the log forms sheaf.

    Returns the list indexed by degree 0 .. n-1.  Universally, the total
    Chern class of the exterior power is the product of (1 + sum of p
    distinct roots); each coefficient is symmetric, hence a polynomial in
    the elementary symmetric functions, which are the graded parts of the
    log Chern class itself.
    """
    nv, trunc = bs.size, bs.n - 1
    m = trunc
    one = GradedPoly.constant(1, nv, trunc)
    zero = GradedPoly.zero(nv, trunc)
    if p == 0:
        return [one] + [zero] * trunc
    if not 0 < p <= m:
        raise ValueError(f"exterior power {p} out of range 0..{m}")

    tcoefs: list[RootPoly] = [{(0,) * m: _ONE}]
    for combo in combinations(range(m), p):
        ell: RootPoly = {tuple(1 if i == r else 0 for i in range(m)): _ONE for r in combo}
        nxt: list[RootPoly] = []
        for i in range(min(len(tcoefs) + 1, trunc + 1)):
            cur: RootPoly = dict(tcoefs[i]) if i < len(tcoefs) else {}
            if i >= 1:
                for mono, c in _rp_mul(tcoefs[i - 1], ell, trunc).items():
                    nvl = cur.get(mono, _ZERO) + c
                    if nvl:
                        cur[mono] = nvl
                    else:
                        cur.pop(mono, None)
            nxt.append(cur)
        tcoefs = nxt

    h_parts = log_chern.graded_parts()
    row = []
    for i in range(trunc + 1):
        if i < len(tcoefs) and tcoefs[i]:
            rewritten = sym_to_elementary(tcoefs[i], m)
            row.append(_substitute_elementary(rewritten, h_parts, nv, trunc))
        else:
            row.append(zero)
    return row


def dual_twist(row: list[GradedPoly]) -> list[GradedPoly]:
    """Chern classes of the dual bundle: flip the sign in each odd degree."""
    return [cls * ((-1) ** i) for i, cls in enumerate(row)]


def ch_dual_exterior(bs: BuildingSet, p: int, exterior_row: list[GradedPoly]) -> GradedPoly:
    """Chern character of the dual of the p-th exterior power.

    Newton's identities convert the (dualized) Chern classes to power
    sums; the rank contributes the constant term.
    """
    nv, trunc = bs.size, bs.n - 1
    rank = comb(trunc, p)
    chat = dual_twist(exterior_row)
    power_sums: list[GradedPoly] = []
    for j in range(1, trunc + 1):
        acc = chat[j] * ((-1) ** (j - 1) * j)
        for i in range(1, j):
            acc = acc + chat[j - i] * power_sums[i - 1] * ((-1) ** (j - 1 + i))
        power_sums.append(acc)
    out = GradedPoly.constant(rank, nv, trunc)
    for j, ps in enumerate(power_sums, start=1):
        out = out + ps * Fraction(1, factorial(j))
    return out


def ch_dual_exterior_roots(bs: BuildingSet, p: int, log_chern: GradedPoly) -> GradedPoly:
    """Same Chern character by direct expansion in formal roots.

    Sums exp(-(sum of p distinct roots)) over all root subsets, degree by
    degree, rewriting each symmetric slice in the elementary basis.  Kept
    as an independent cross-check of `ch_dual_exterior`; the two must be
    equal in the free truncated ring.
    """
    nv, trunc = bs.size, bs.n - 1
    m = trunc
    h_parts = log_chern.graded_parts()
    out = GradedPoly.constant(comb(m, p), nv, trunc)
    for j in range(1, trunc + 1):
        slice_: RootPoly = {}
        for combo in combinations(range(m), p):
            ell: RootPoly = {
                tuple(1 if i == r else 0 for i in range(m)): _ONE for r in combo
            }
            powj = _rp_pow(ell, j, trunc, m)
            for mono, c in powj.items():
                nvl = slice_.get(mono, _ZERO) + c
                if nvl:
                    slice_[mono] = nvl
                else:
                    slice_.pop(mono, None)
        if not slice_:
            continue
        rewritten = sym_to_elementary(slice_, m)
        piece = _substitute_elementary(rewritten, h_parts, nv, trunc)
        out = out + piece * Fraction((-1) ** j, factorial(j))
    return out


@dataclass
class CharClasses:
    """All characteristic classes needed by the spectrum formula."""

    building: BuildingSet
    total: GradedPoly
    todd: GradedPoly
    log_chern: GradedPoly
    exterior: tuple[tuple[GradedPoly, ...], ...]
    dual_ch: tuple[GradedPoly, ...]


def char_classes(bs: BuildingSet) -> CharClasses:
    total = chern_total(bs)
    todd = todd_class(bs)
    log_chern = chern_log_forms(bs, total)
    exterior = []
    dual_ch = []
    for p in range(bs.n):
        row = exterior_chern(bs, p, log_chern)
        exterior.append(tuple(row))
        dual_ch.append(ch_dual_exterior(bs, p, row))
    return CharClasses(bs, total, todd, log_chern, tuple(exterior), tuple(dual_ch))
