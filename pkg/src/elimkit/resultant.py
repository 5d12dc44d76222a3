"""The multivariate resultant of n homogeneous forms in n variables.

The resultant is normalized so that pure powers give 1:
Res(X_1^{d_1}, ..., X_n^{d_n}) = 1.  Computation goes through the
classical Macaulay construction at critical degree nu = sum(d_i - 1) + 1:
the determinant of the big matrix M equals the resultant times the
determinant of the reduced submatrix M', identically in the coefficients.
When det(M') vanishes for special coefficients, a perturbation f_i +
t * X_i^{d_i} makes both matrices t + (original), so both determinants
become monic polynomials in t, the quotient R(t) is computed by exact
univariate division, and R(0) is the answer.  Both routes agree with the
generic computation under every specialization, which is what pins the
value down.

Modular coefficients are canonically lifted to Z, computed there, and
reduced back; this is also how the value is defined in that case.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import ring as rg
from .determinants import det_payload_auto
from .errors import (
    NonHomogeneous,
    NotDivisible,
    NotGeneric,
    PerturbationDegenerate,
    RingMismatch,
    SignatureMismatch,
)
from .mpoly import (
    DegreeSignature,
    MultiPoly,
    dehomogenize,
    flatten_extension,
    generic_system,
    is_homogeneous,
    isobaric_part,
    lift_poly,
    monomials_of_degree,
    poly_exact_div,
    weight_valuation,
    zariski_weight_vector,
)

__all__ = [
    "MacaulaySystem",
    "PerturbationPlan",
    "build_macaulay",
    "resultant",
    "gcp_resultant",
    "is_inertia_form_generic",
    "zariski_lowest_part",
]


@dataclass
class MacaulaySystem:
    """The numerator/denominator matrix pair for one signature."""

    sig: DegreeSignature
    ring: object
    cols: list
    rows: list  # dense rows of payloads, aligned with cols
    row_slot: list  # which f_i produced each row
    reduced: list  # positions belonging to the reduced submatrix M'

    def numerator_det(self):
        return det_payload_auto(self.ring, self.rows)

    def denominator_det(self):
        sub = [[self.rows[i][j] for j in self.reduced] for i in self.reduced]
        return det_payload_auto(self.ring, sub)


@dataclass
class PerturbationPlan:
    """How gcp_resultant perturbs a degenerate system.

    ``forms`` = None means the default p_i = X_i^{d_i}, for which the
    perturbed denominator is monic in t and the division never fails.
    """

    t_name: str = "t"
    forms: list | None = None
    budget: int = 8
    seed: int = 0


def _validate_system(fs, sig):
    if sig.r != sig.nvars:
        raise SignatureMismatch(
            f"resultant needs as many forms as variables, got {sig.r} for n={sig.nvars}"
        )
    if len(fs) != sig.r:
        raise SignatureMismatch(f"expected {sig.r} polynomials, got {len(fs)}")
    ring = fs[0].ring
    for i, f in enumerate(fs):
        if f.ring != ring:
            raise RingMismatch("all input forms must share one coefficient ring")
        if f.nvars != sig.nvars:
            raise SignatureMismatch(
                f"form {i + 1} has {f.nvars} variables, signature says {sig.nvars}"
            )
        h = is_homogeneous(f)
        if h is None:
            raise NonHomogeneous(f"form {i + 1} is not homogeneous")
        if h != "any" and h != sig.degrees[i]:
            raise SignatureMismatch(
                f"form {i + 1} has degree {h}, signature says {sig.degrees[i]}"
            )
    return ring


def build_macaulay(fs, sig):
    """Macaulay matrices at the critical degree for a validated system."""
    ring = fs[0].ring
    n = sig.nvars
    d = sig.degrees
    nu = sig.critical_degree
    cols = monomials_of_degree(n, nu)
    colpos = {e: p for p, e in enumerate(cols)}
    zero = rg.val_zero(ring)
    rows = []
    row_slot = []
    reduced = []
    for p, gamma in enumerate(cols):
        i = next(j for j in range(n) if gamma[j] >= d[j])
        shift = list(gamma)
        shift[i] -= d[i]
        row = [zero] * len(cols)
        for beta, c in fs[i].terms.items():
            target = tuple(a + b for a, b in zip(shift, beta))
            row[colpos[target]] = rg.val_add(ring, row[colpos[target]], c)
        rows.append(row)
        row_slot.append(i + 1)
        if sum(1 for j in range(n) if gamma[j] >= d[j]) >= 2:
            reduced.append(p)
    return MacaulaySystem(sig=sig, ring=ring, cols=cols, rows=rows, row_slot=row_slot, reduced=reduced)


def _diagonal_value(fs, sig):
    """Product formula when every slot is c_i * X_i^{d_i}; None otherwise."""
    ring = fs[0].ring
    n = sig.nvars
    coeffs = []
    for i, f in enumerate(fs):
        if len(f.terms) != 1:
            return None
        e = [0] * n
        e[i] = sig.degrees[i]
        c = f.terms.get(tuple(e))
        if c is None:
            return None
        coeffs.append(c)
    total = rg.val_one(ring)
    for i, c in enumerate(coeffs):
        exp = 1
        for j, dj in enumerate(sig.degrees):
            if j != i:
                exp *= dj
        total = rg.val_mul(ring, total, rg.val_pow(ring, c, exp))
    return total


def resultant(fs, sig, use_fast_paths=True):
    """Normalized resultant of n homogeneous forms in n variables."""
    fs = list(fs)
    ring = _validate_system(fs, sig)
    n = sig.nvars
    if any(f.is_zero() for f in fs):
        return rg.RingElement(ring, rg.val_zero(ring))
    if n == 1:
        # Res(c * X1^d) = c
        return rg.RingElement(ring, fs[0].terms[(sig.degrees[0],)])
    if use_fast_paths:
        diag = _diagonal_value(fs, sig)
        if diag is not None:
            return rg.RingElement(ring, diag)
    if rg.scalar_base(ring).kind == rg.MODULAR:
        lifted = [lift_poly(f) for f in fs]
        res = resultant(lifted, sig, use_fast_paths=use_fast_paths)
        back = rg.val_convert(res.ring, ring, res.value)
        return rg.RingElement(ring, back)
    ms = build_macaulay(fs, sig)
    den = ms.denominator_det()
    if rg.val_is_nzd(ring, den):
        num = ms.numerator_det()
        return rg.RingElement(ring, rg.val_exact_divide(ring, num, den))
    return gcp_resultant(fs, sig)


def _fresh_name(ring, base_name):
    taken = set()
    r = ring
    while r.kind == rg.POLYEXT:
        taken.update(r.variables)
        r = r.base
    name = base_name
    while name in taken:
        name += "_"
    return name


def gcp_resultant(fs, sig, plan=None):
    """Resultant of a system whose Macaulay denominator vanished.

    Computes R(t) = Res(f_1 + t p_1, ..., f_n + t p_n) over ring[t] by the
    Macaulay ratio (exact there) and returns R(0).
    """
    fs = list(fs)
    ring = _validate_system(fs, sig)
    if any(f.is_zero() for f in fs):
        return rg.RingElement(ring, rg.val_zero(ring))
    if rg.scalar_base(ring).kind == rg.MODULAR:
        lifted = [lift_poly(f) for f in fs]
        res = gcp_resultant(lifted, sig, plan)
        return rg.RingElement(ring, rg.val_convert(res.ring, ring, res.value))
    if plan is None:
        plan = PerturbationPlan()
    n = sig.nvars
    tname = _fresh_name(ring, plan.t_name)
    ext = rg.join_extension(ring, (tname,))
    tpos = ext.variables.index(tname)
    tmono = [0] * len(ext.variables)
    tmono[tpos] = 1
    tval = MultiPoly(ext.base, len(ext.variables), {tuple(tmono): rg.val_one(ext.base)})
    rng = random.Random(plan.seed)
    forms = plan.forms
    for attempt in range(max(1, plan.budget)):
        if forms is None:
            ps = []
            for i in range(n):
                e = [0] * n
                e[i] = sig.degrees[i]
                ps.append(MultiPoly.monomial(ring, n, tuple(e), rg.val_one(ring)))
        else:
            ps = forms
        fs_t = []
        for f, p in zip(fs, ps):
            fe = f.change_ring(ext)
            pe = p.change_ring(ext).scale(tval)
            fs_t.append(fe.add(pe))
        ms = build_macaulay(fs_t, sig)
        den = ms.denominator_det()
        if not rg.val_is_zero(ext, den):
            try:
                q = rg.val_exact_divide(ext, ms.numerator_det(), den)
            except NotDivisible:
                q = None
            if q is not None:
                value = _eval_aux_zero(q, tpos)
                if ring.kind != rg.POLYEXT:
                    value = value.constant_value()
                return rg.RingElement(ring, value)
        # re-randomize: d_i-th powers of small-integer linear forms
        forms = []
        for i in range(n):
            while True:
                vec = [rng.randint(-3, 3) for _ in range(n)]
                if any(vec):
                    break
            lin = MultiPoly.from_terms(
                ring,
                n,
                [
                    (tuple(1 if k == j else 0 for k in range(n)), rg.val_from_int(ring, a))
                    for j, a in enumerate(vec)
                    if a
                ],
            )
            forms.append(lin.pow(sig.degrees[i]))
    raise PerturbationDegenerate(
        f"no usable perturbation within budget {plan.budget} for signature {sig}"
    )


def _eval_aux_zero(payload, tpos):
    """Set the auxiliary variable to 0 and drop it from the payload."""
    out = {}
    for e, c in payload.terms.items():
        if e[tpos] == 0:
            out[e[:tpos] + e[tpos + 1 :]] = c
    return MultiPoly(payload.ring, payload.nvars - 1, out)


# ---------------------------------------------------------------------------
# inertia forms


def is_inertia_form_generic(a, sig):
    """Kronecker-substitution membership test over the universal coefficients.

    For the fully generic system of the signature, a polynomial (or
    coefficient-ring element) is an inertia form exactly when substituting
    E_i |-> E_i - f_i(X_1, ..., X_{n-1}, 1) for every slot's distinguished
    coefficient E_i (the one at X_n^{d_i}) kills it.
    """
    if sig.r != sig.nvars:
        raise SignatureMismatch("inertia test needs r = n slots")
    ext, fs = generic_system(sig)
    n = sig.nvars
    m = len(ext.variables)
    if isinstance(a, rg.RingElement):
        if a.ring != ext:
            raise NotGeneric("input does not live over the universal coefficient ring")
        poly = MultiPoly(ext, n, {(0,) * n: a.value} if not a.is_zero() else {})
    elif isinstance(a, MultiPoly):
        if a.ring != ext or a.nvars != n:
            raise NotGeneric("input does not live over the universal coefficient ring")
        poly = a
    else:
        raise NotGeneric(f"unsupported input {a!r}")
    flat = flatten_extension(poly)  # ZZ-poly in m + n vars, U's first
    flat_tilde = dehomogenize(flat, m + n, "one")
    nv = m + n - 1
    images = []
    for j in range(nv):
        images.append(MultiPoly.variable(rg.ZZ, nv, j + 1))
    for i in range(1, n + 1):
        ei_name = f"U{i}_" + "_".join(["0"] * (n - 1) + [str(sig.degrees[i - 1])])
        pos = ext.variables.index(ei_name)
        fi_flat = dehomogenize(flatten_extension(fs[i - 1]), m + n, "one")
        images[pos] = MultiPoly.variable(rg.ZZ, nv, pos + 1).sub(fi_flat)
    return flat_tilde.substitute(images).is_zero()


# ---------------------------------------------------------------------------
# Zariski grading


def zariski_lowest_part(fs, sig, mu):
    """Lowest isobaric part H of the generic resultant, and H1 = H / Res(g).

    The i-th form is read as X_n^{mu_i} g_i + h_i; coefficients carry
    weight max(alpha_n - mu_i, 0).  Returns (H, H1) as coefficient-ring
    polynomials; the exact division is part of the claim being realized,
    so NotDivisible propagates as a genuine failure.
    """
    if sig.r != sig.nvars:
        raise SignatureMismatch("this grading concerns r = n slots")
    if len(mu) != sig.r:
        raise SignatureMismatch(f"{sig.r} weights expected, got {len(mu)}")
    for mi, di in zip(mu, sig.degrees):
        if not 0 <= mi < di:
            raise SignatureMismatch(f"need 0 <= mu_i < d_i, got mu={mu}")
    ext, generic_fs = generic_system(sig)
    for f, g in zip(fs, generic_fs):
        if not f.eq(g):
            raise NotGeneric("zariski_lowest_part expects the fully generic system")
    n = sig.nvars
    res = resultant(fs, sig)
    w = zariski_weight_vector(sig, mu)
    v = weight_valuation(res, w)
    H = isobaric_part(res, w, v).value
    # build g_i: the part of f_i with alpha_n >= mu_i, divided by X_n^{mu_i}
    gs = []
    for i, f in enumerate(fs):
        terms = {}
        for e, c in f.terms.items():
            if e[-1] >= mu[i]:
                terms[e[:-1] + (e[-1] - mu[i],)] = c
        gs.append(MultiPoly(ext, n, terms))
    gsig = DegreeSignature(n, tuple(d - m for d, m in zip(sig.degrees, mu)))
    resg = resultant(gs, gsig)
    H1 = poly_exact_div(H, resg.value)
    return H, H1
