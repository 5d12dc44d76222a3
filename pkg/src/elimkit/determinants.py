"""Exact determinant engines.

Three engines cover the shapes of matrix this package meets:

* :func:`det_bareiss` — fraction-free elimination for matrices whose
  entries live in an integral domain (integer, rational, or polynomial
  payloads).  The exact divisions are guaranteed by Sylvester's identity.
* :func:`det_packed` — division-free minor expansion over column subsets,
  specialized to polynomial entries with integer coefficients packed into
  integer exponent keys.  This handles the large sparse symbolic Macaulay
  matrices where Bareiss would drown in intermediate swell.
* :func:`det_poly_matrix` — small matrices of MultiPoly entries (Jacobian
  work), cofactor expansion up to 4x4 and Bareiss beyond.

:func:`strip_single_entries` peels off rows and columns containing one
nonzero entry first; pure-power Macaulay matrices collapse to nothing.
"""

from __future__ import annotations

from . import ring as rg
from .errors import NotDivisible
from .mpoly import MultiPoly

__all__ = [
    "det_bareiss",
    "det_packed",
    "det_payload_auto",
    "det_poly_matrix",
    "strip_single_entries",
]


def det_bareiss(ring, rows):
    """Determinant of a square payload matrix over an integral domain."""
    n = len(rows)
    if n == 0:
        return rg.val_one(ring)
    m = [list(r) for r in rows]
    sign = 1
    prev = rg.val_one(ring)
    for k in range(n - 1):
        piv = None
        best = None
        for i in range(k, n):
            if not rg.val_is_zero(ring, m[i][k]):
                weight = sum(1 for j in range(k, n) if not rg.val_is_zero(ring, m[i][j]))
                if best is None or weight < best:
                    best, piv = weight, i
        if piv is None:
            return rg.val_zero(ring)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pivval = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                num = rg.val_sub(
                    ring,
                    rg.val_mul(ring, pivval, row_i[j]),
                    rg.val_mul(ring, mik, row_k[j]),
                )
                row_i[j] = rg.val_exact_divide(ring, num, prev)
            row_i[k] = rg.val_zero(ring)
        prev = pivval
    d = m[n - 1][n - 1]
    return rg.val_neg(ring, d) if sign < 0 else d


def strip_single_entries(sparse_rows, ncols, ring):
    """Peel rows/columns with a single nonzero entry off a sparse matrix.

    ``sparse_rows`` is a list of dicts {column index: payload}.  Returns
    (factor, sign, remaining_rows, remaining_cols) where the determinant
    of the original matrix is sign * factor * det(remaining submatrix).
    """
    rows_alive = list(range(len(sparse_rows)))
    cols_alive = list(range(ncols))
    col_count = {}
    for r in sparse_rows:
        for c in r:
            col_count[c] = col_count.get(c, 0) + 1
    factor = rg.val_one(ring)
    sign = 1
    changed = True
    while changed and rows_alive:
        changed = False
        for r in list(rows_alive):
            live = [c for c in sparse_rows[r] if c in set(cols_alive)]
            if len(live) == 1:
                c = live[0]
                p, q = rows_alive.index(r), cols_alive.index(c)
                sign *= -1 if (p + q) % 2 else 1
                factor = rg.val_mul(ring, factor, sparse_rows[r][c])
                rows_alive.remove(r)
                cols_alive.remove(c)
                changed = True
        # columns with a single live entry
        if rows_alive:
            live_cols = set(cols_alive)
            usage = {c: [] for c in cols_alive}
            for r in rows_alive:
                for c in sparse_rows[r]:
                    if c in live_cols:
                        usage[c].append(r)
            for c, rs in usage.items():
                if len(rs) == 1 and c in cols_alive and rs[0] in rows_alive:
                    r = rs[0]
                    p, q = rows_alive.index(r), cols_alive.index(c)
                    sign *= -1 if (p + q) % 2 else 1
                    factor = rg.val_mul(ring, factor, sparse_rows[r][c])
                    rows_alive.remove(r)
                    cols_alive.remove(c)
                    changed = True
    return factor, sign, rows_alive, cols_alive


# ---------------------------------------------------------------------------
# packed minor-expansion DP


def pack_exponents(exp, shift):
    key = 0
    for e in exp:
        key = (key << shift) | e
    return key


def unpack_exponents(key, shift, nvars):
    mask = (1 << shift) - 1
    out = [0] * nvars
    for j in range(nvars - 1, -1, -1):
        out[j] = key & mask
        key >>= shift
    return tuple(out)


def det_packed(sparse_rows, cols):
    """Division-free determinant of a sparse matrix of packed polynomials.

    ``sparse_rows``: list of dicts {column: {packed exponent: int}} (each
    entry a polynomial with integer coefficients).  ``cols``: the column
    index list.  Columns no later row can fill prune the state space, so
    reasonably banded matrices stay small.  Returns a packed polynomial.
    """
    n = len(sparse_rows)
    if n != len(cols):
        raise ValueError("matrix must be square")
    if n == 0:
        return {0: 1}
    colpos = {c: i for i, c in enumerate(cols)}
    touched = set()
    for row in sparse_rows:
        if not row:
            return {}
        touched.update(colpos[c] for c in row)
    if len(touched) < n:
        return {}
    # rows ordered to keep the active column window narrow
    order = sorted(range(n), key=lambda r: min(colpos[c] for c in sparse_rows[r]))
    perm_sign = _permutation_sign(order)
    # the step after which each column can no longer be filled
    last_step = {}
    for step, r in enumerate(order):
        for c in sparse_rows[r]:
            last_step[colpos[c]] = step
    seen_last = {}
    for c, step in last_step.items():
        seen_last.setdefault(step, []).append(c)
    states = {0: {0: 1}}
    for step, r in enumerate(order):
        row = sparse_rows[r]
        entries = [(colpos[c], poly) for c, poly in row.items()]
        new_states = {}
        for mask, poly in states.items():
            for cp, entry in entries:
                bit = 1 << cp
                if mask & bit:
                    continue
                parity = (step + (mask & (bit - 1)).bit_count()) & 1
                nm = mask | bit
                acc = new_states.get(nm)
                if acc is None:
                    acc = {}
                    new_states[nm] = acc
                if parity:
                    for pk, pv in poly.items():
                        for ek, ev in entry.items():
                            k = pk + ek
                            acc[k] = acc.get(k, 0) - pv * ev
                else:
                    for pk, pv in poly.items():
                        for ek, ev in entry.items():
                            k = pk + ek
                            acc[k] = acc.get(k, 0) + pv * ev
        # prune dead columns and zero polynomials
        must = seen_last.get(step)
        states = {}
        for mask, poly in new_states.items():
            if must and any(not (mask >> c) & 1 for c in must):
                continue
            cleaned = {k: v for k, v in poly.items() if v}
            if cleaned:
                states[mask] = cleaned
    full = (1 << n) - 1
    result = states.get(full, {})
    if perm_sign < 0:
        result = {k: -v for k, v in result.items()}
    return result


def _permutation_sign(perm):
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _collect_per_var_bounds(sparse_rows, nvars):
    bounds = [0] * nvars
    for row in sparse_rows:
        rowmax = [0] * nvars
        for poly in row.values():
            for exp in poly.terms:
                for j, e in enumerate(exp):
                    if e > rowmax[j]:
                        rowmax[j] = e
        for j in range(nvars):
            bounds[j] += rowmax[j]
    return bounds


def det_payload_auto(ring, rows):
    """Determinant of a square payload matrix, choosing an engine.

    Single-nonzero rows and columns are stripped first.  One-level
    polynomial extensions of Z go through the packed division-free DP;
    everything else (integers, rationals, other domains) uses Bareiss.
    """
    n = len(rows)
    sparse = []
    for r in rows:
        sparse.append({j: v for j, v in enumerate(r) if not rg.val_is_zero(ring, v)})
    factor, sign, rows_alive, cols_alive = strip_single_entries(sparse, n, ring)
    if not rows_alive:
        return rg.val_neg(ring, factor) if sign < 0 else factor
    sub = [[rows[i][j] for j in cols_alive] for i in rows_alive]
    if (
        ring.kind == rg.POLYEXT
        and ring.base == rg.ZZ
        and len(sub) >= 5
    ):
        core = _det_packed_over_zz_ext(ring, sub)
    else:
        core = det_bareiss(ring, sub)
    out = rg.val_mul(ring, factor, core)
    return rg.val_neg(ring, out) if sign < 0 else out


def _det_packed_over_zz_ext(ring, rows):
    nvars = len(ring.variables)
    sparse = []
    for r in rows:
        sparse.append({j: v for j, v in enumerate(r) if not v.is_zero()})
    bounds = _collect_per_var_bounds(sparse, nvars)
    shift = max(b.bit_length() for b in bounds) + 1 if bounds else 1
    packed_rows = []
    for row in sparse:
        packed_rows.append(
            {
                c: {pack_exponents(e, shift): v for e, v in poly.terms.items()}
                for c, poly in row.items()
            }
        )
    result = det_packed(packed_rows, list(range(len(rows))))
    terms = {unpack_exponents(k, shift, nvars): v for k, v in result.items()}
    return MultiPoly(ring.base, nvars, {e: c for e, c in terms.items() if c})


def det_poly_matrix(mat):
    """Determinant of a square matrix of MultiPoly entries."""
    n = len(mat)
    if n == 0:
        raise ValueError("det_poly_matrix needs the ambient ring; use a 1x1 or larger matrix")
    proto = mat[0][0]
    ring, nv = proto.ring, proto.nvars
    if n <= 4:
        return _cofactor(mat, list(range(n)), list(range(n)), ring, nv)
    return _bareiss_polys(mat, ring, nv)


def _cofactor(mat, rows, cols, ring, nv):
    if len(rows) == 1:
        return mat[rows[0]][cols[0]]
    total = MultiPoly.zero(ring, nv)
    r = rows[0]
    rest = rows[1:]
    for k, c in enumerate(cols):
        entry = mat[r][c]
        if entry.is_zero():
            continue
        minor = _cofactor(mat, rest, cols[:k] + cols[k + 1 :], ring, nv)
        piece = entry.mul(minor)
        total = total.sub(piece) if k % 2 else total.add(piece)
    return total


def _bareiss_polys(mat, ring, nv):
    from .mpoly import poly_exact_div

    n = len(mat)
    m = [[mat[i][j] for j in range(n)] for i in range(n)]
    sign = 1
    prev = MultiPoly.from_int(ring, nv, 1)
    for k in range(n - 1):
        piv = None
        for i in range(k, n):
            if not m[i][k].is_zero():
                piv = i
                break
        if piv is None:
            return MultiPoly.zero(ring, nv)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k].mul(m[i][j]).sub(m[i][k].mul(m[k][j]))
                m[i][j] = poly_exact_div(num, prev)
            m[i][k] = MultiPoly.zero(ring, nv)
        prev = m[k][k]
    return m[n - 1][n - 1].neg() if sign < 0 else m[n - 1][n - 1]
