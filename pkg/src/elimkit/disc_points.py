"""Discriminant of n-1 homogeneous forms in n variables.

The defining identity is

    Disc(f_1,...,f_{n-1}) * Res(f_1,...,f_{n-1}, X_i)
        = Res(f_1,...,f_{n-1}, J_i)      for every i,

with Disc = 1 when every degree is 1.  Specialized inputs are handled
by the division above when some Res(fs, X_i) is a nonzero divisor, and
otherwise by lifting to characteristic zero and perturbing with
t * (linear form)^{d_i}, evaluating at t = 0 afterwards.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import ring as rg
from .determinants import det_bareiss
from .errors import (
    DeltaIsOne,
    NotDivisible,
    PerturbationDegenerate,
    SignatureMismatch,
    UnsupportedRing,
)
from .jacobian import _validate as _validate_system
from .jacobian import jac_minor, jacobian_degree
from .mpoly import (
    DegreeSignature,
    MultiPoly,
    is_homogeneous,
    lift_poly,
    substitute,
)
from .resultant import resultant

__all__ = [
    "PointDiscInstance",
    "disc_points",
    "disc_points_traced",
    "disc_points_degree",
    "total_degree",
    "linear_forms_disc",
    "delta_mod_delta",
    "base_change_K",
    "base_change_K_degree",
]


@dataclass(frozen=True)
class PointDiscInstance:
    fs: tuple
    sig: DegreeSignature
    value: object  # RingElement
    strategy: str  # "unit-degrees" | "division" | "perturbation"
    index: int | None = None
    attempts: int = 0


def disc_points(fs, sig, budget=8, seed=0):
    return disc_points_traced(fs, sig, budget=budget, seed=seed).value


def disc_points_traced(fs, sig, budget=8, seed=0):
    """Discriminant plus a trace of how it was obtained."""
    if not fs:
        raise SignatureMismatch("need at least one form (n >= 2 variables)")
    _validate_system(fs, sig)
    ring = fs[0].ring
    if all(d == 1 for d in sig.degrees):
        return PointDiscInstance(tuple(fs), sig, rg.element(ring, 1), "unit-degrees")

    found = _by_division(fs, sig)
    if found is not None:
        value, index = found
        return PointDiscInstance(tuple(fs), sig, value, "division", index=index)

    value, attempts = _by_perturbation(fs, sig, budget, seed)
    return PointDiscInstance(
        tuple(fs), sig, value, "perturbation", attempts=attempts
    )


def _by_division(fs, sig):
    """Strategy (a): smallest index whose denominator is a nonzero divisor."""
    n = sig.nvars
    ring = fs[0].ring
    jdeg = jacobian_degree(sig)
    first = None
    for i in range(1, n + 1):
        xi = MultiPoly.variable(ring, n, i)
        den = resultant(fs + [xi], DegreeSignature(n, sig.degrees + (1,)))
        if den.is_zero() or not den.is_nzd():
            continue
        ji = jac_minor(fs, sig, i)
        num = resultant(fs + [ji], DegreeSignature(n, sig.degrees + (jdeg,)))
        try:
            q = rg.exact_divide(num, den)
        except NotDivisible:
            continue
        if first is None:
            first = (q, i)
            if not __debug__:
                return first
        else:
            assert q == first[0], (
                f"defining identity gave different values at indices {first[1]} and {i}"
            )
            return first
    return first


def _random_linear(rng, ring, n):
    while True:
        coeffs = [rng.randint(-3, 3) for _ in range(n)]
        if any(coeffs):
            break
    acc = MultiPoly.zero(ring, n)
    for j, c in enumerate(coeffs, start=1):
        if c:
            acc = acc.add(MultiPoly.variable(ring, n, j).scale_int(c))
    return acc


def _kill_last_payload_var(payload):
    """Set the last coefficient-indeterminate to 0 and drop its slot."""
    out = {}
    for e, c in payload.terms.items():
        if e[-1] == 0:
            out[e[:-1]] = c
    return out


def _by_perturbation(fs, sig, budget, seed):
    """Strategy (b): lift to a characteristic-zero base and deform."""
    ring = fs[0].ring
    n = sig.nvars
    modular = rg.scalar_base(ring).kind == rg.MODULAR
    if modular:
        lifted = [lift_poly(f) for f in fs]
        lring = lifted[0].ring
    else:
        lifted = list(fs)
        lring = ring

    tname = "t"
    taken = set(lring.variables) if lring.kind == rg.POLYEXT else set()
    while tname in taken:
        tname += "_"
    ext = rg.join_extension(lring, (tname,))
    tpos = len(ext.variables) - 1

    rng = random.Random(seed)
    for attempt in range(1, budget + 1):
        perturbed = []
        for f, d in zip(lifted, sig.degrees):
            ell = _random_linear(rng, ext, n)
            bump = ell.pow(d).map_coefficients(
                lambda c: _var_payload_mul(ext, c, tpos)
            )
            perturbed.append(f.change_ring(ext).add(bump))
        found = _by_division(perturbed, sig)
        if found is None:
            continue
        payload = found[0].value
        assert isinstance(payload, MultiPoly)
        kept = _kill_last_payload_var(payload)
        if lring.kind == rg.POLYEXT:
            value = rg.RingElement(
                lring, MultiPoly(rg.scalar_base(lring), len(lring.variables), kept)
            )
        else:
            value = rg.RingElement(lring, kept.get((), rg.val_zero(lring)))
        if modular:
            if ring.kind == rg.POLYEXT:
                reduced = value.value.change_ring(rg.scalar_base(ring))
                value = rg.RingElement(ring, reduced)
            else:
                value = rg.RingElement(ring, rg.val_convert(lring, ring, value.value))
        return value, attempt
    raise PerturbationDegenerate(
        f"no admissible index after {budget} random perturbations"
    )


def _var_payload_mul(ext, coeff, tpos):
    """Multiply a payload of ``ext`` by the extension variable at tpos."""
    base = rg.scalar_base(ext)
    nv = len(ext.variables)
    if isinstance(coeff, MultiPoly):
        out = {}
        for e, c in coeff.terms.items():
            ee = list(e)
            ee[tpos] += 1
            out[tuple(ee)] = c
        return MultiPoly(base, nv, out)
    e = [0] * nv
    e[tpos] = 1
    return MultiPoly(base, nv, {tuple(e): coeff})


# ---------------------------------------------------------------------------
# degrees
# ---------------------------------------------------------------------------


def disc_points_degree(sig, i):
    """Degree in the coefficients of f_i."""
    if not 1 <= i <= sig.r:
        raise SignatureMismatch(f"index {i} out of range 1..{sig.r}")
    p = math.prod(sig.degrees)
    s = sum(d - 1 for d in sig.degrees)
    di = sig.degrees[i - 1]
    return (p // di) * ((di - 1) + s)


def total_degree(sig):
    n = sig.nvars
    p = math.prod(sig.degrees)
    return (n - 1) * p + (sum(sig.degrees) - n) * sum(p // d for d in sig.degrees)


# ---------------------------------------------------------------------------
# split forms
# ---------------------------------------------------------------------------


def linear_forms_disc(lines):
    """Discriminant of products of linear forms, from the determinant product.

    ``lines[i]`` holds the d_{i+1} linear forms whose product is slot
    i+1.  The value is (-1)^s times the product of squared n x n
    determinants det(l_{1,j_1},...,l_{n-1,j_{n-1}}, l_{i,j}) with the
    pair {j_i, j} taken once per tuple.
    """
    if not lines:
        raise SignatureMismatch("need at least one slot")
    ring = None
    n = None
    for slot in lines:
        if not slot:
            raise SignatureMismatch("each slot needs at least one linear form")
        for l in slot:
            if ring is None:
                ring, n = l.ring, l.nvars
            if l.ring != ring or l.nvars != n:
                raise SignatureMismatch("all lines must share one ring and nvars")
            if is_homogeneous(l) != 1:
                raise SignatureMismatch("all slot entries must be linear forms")
    if len(lines) != n - 1:
        raise SignatureMismatch(f"expected {n - 1} slots for {n} variables")
    degrees = tuple(len(slot) for slot in lines)
    s = (math.prod(degrees) * sum(d - 1 for d in degrees)) // 2

    def coeff_row(l):
        return [l.coefficient_of(tuple(1 if k == j else 0 for k in range(n))) for j in range(n)]

    acc = rg.val_one(ring)
    for combo in _tuples(degrees):
        base_rows = [coeff_row(lines[i][combo[i]]) for i in range(n - 1)]
        for i in range(n - 1):
            for j in range(combo[i] + 1, degrees[i]):
                det = det_bareiss(ring, base_rows + [coeff_row(lines[i][j])])
                acc = rg.val_mul(ring, acc, rg.val_mul(ring, det, det))
    if s % 2:
        acc = rg.val_neg(ring, acc)
    return rg.RingElement(ring, acc)


def _tuples(degrees):
    combos = [()]
    for d in degrees:
        combos = [c + (j,) for c in combos for j in range(d)]
    return combos


# ---------------------------------------------------------------------------
# reduction modulo the gcd of the degrees
# ---------------------------------------------------------------------------


def _mod_delta_ring(ring, delta):
    """The same ring with its scalar base replaced by Z/delta."""
    base = rg.scalar_base(ring)
    if base.kind == rg.INTEGERS:
        new_base = rg.Zmod(delta)
    elif base.kind == rg.MODULAR:
        if base.modulus % delta:
            raise UnsupportedRing(
                f"cannot reduce Z/{base.modulus} modulo {delta}"
            )
        new_base = rg.Zmod(delta)
    else:
        raise UnsupportedRing("reduction modulo delta needs a Z-based ring")
    if ring.kind == rg.POLYEXT:
        return rg.polyext(new_base, ring.variables)
    return new_base


def _reduce_scalar_base(f, new_ring):
    old_base = rg.scalar_base(f.ring)
    new_base = rg.scalar_base(new_ring)

    def conv(c):
        if isinstance(c, MultiPoly):
            return c.map_coefficients(
                lambda s: rg.val_convert(old_base, new_base, s), new_base
            )
        return rg.val_convert(old_base, new_base, c)

    return f.map_coefficients(conv, new_ring)


def delta_mod_delta(fs, sig):
    """The form Delta with J_i = X_i * Delta modulo gcd(d_1,...,d_{n-1})."""
    _validate_system(fs, sig)
    delta = math.gcd(*sig.degrees)
    if delta < 2:
        raise DeltaIsOne(f"gcd of degrees {sig.degrees} is 1")
    n = sig.nvars
    target = _mod_delta_ring(fs[0].ring, delta)
    jn = _reduce_scalar_base(jac_minor(fs, sig, n), target)
    delta_form = _divide_by_variable(jn, n)
    for i in range(1, n):
        ji = _reduce_scalar_base(jac_minor(fs, sig, i), target)
        xi = MultiPoly.variable(target, n, i)
        if not ji.eq(xi.mul(delta_form)):
            raise NotDivisible(
                f"J_{i} is not X_{i} * Delta modulo {delta}", witness=ji
            )
    return delta_form


def _divide_by_variable(f, i):
    out = {}
    pos = i - 1
    for e, c in f.terms.items():
        if e[pos] == 0:
            raise NotDivisible(f"term {e} has no factor X_{i}", witness=f)
        ee = list(e)
        ee[pos] -= 1
        out[tuple(ee)] = c
    return MultiPoly(f.ring, f.nvars, out)


# ---------------------------------------------------------------------------
# base change
# ---------------------------------------------------------------------------


def base_change_K_degree(sig, d):
    """Degree of K in the coefficients of the g_i jointly."""
    n = sig.nvars
    return n * (n - 1) * (d - 1) * d ** (n - 2) * math.prod(sig.degrees)


def base_change_K_fdegree(sig, d, i):
    """Degree of K in the coefficients of f_i."""
    n = sig.nvars
    p = math.prod(sig.degrees)
    return n * (d - 1) * d ** (n - 2) * (p // sig.degrees[i - 1])


def base_change_K(fs, sig, gs):
    """The cofactor K with Disc(f o g) = Disc(f)^{d^{n-1}} Res(g)^e K."""
    _validate_system(fs, sig)
    n = sig.nvars
    if len(gs) != n:
        raise SignatureMismatch(f"need {n} substitution forms, got {len(gs)}")
    ds = set()
    for g in gs:
        if g.nvars != n or g.ring != fs[0].ring:
            raise SignatureMismatch("substitution forms must match the system")
        h = is_homogeneous(g)
        if h is None or h == "any":
            raise SignatureMismatch("substitution forms must be homogeneous and nonzero")
        ds.add(h)
    if len(ds) != 1:
        raise SignatureMismatch("substitution forms must share one degree")
    d = ds.pop()
    if d < 2:
        raise SignatureMismatch("base change requires degree d >= 2")

    composed = [substitute(f, gs) for f in fs]
    comp_sig = DegreeSignature(n, tuple(di * d for di in sig.degrees))
    disc_fg = disc_points(composed, comp_sig)
    disc_f = disc_points(fs, sig)
    res_g = resultant(gs, DegreeSignature(n, (d,) * n))
    e = math.prod(sig.degrees) * sum(di - 1 for di in sig.degrees)
    denom = disc_f ** (d ** (n - 1)) * res_g**e
    return rg.exact_divide(disc_fg, denom)
