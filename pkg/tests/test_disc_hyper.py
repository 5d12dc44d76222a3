"""Discriminant of a single homogeneous form."""

import random

import pytest

from elimkit import ring as rg
from elimkit.determinants import det_bareiss
from elimkit.disc_hyper import (
    a_exponent,
    delta_n_identity,
    disc_hyper,
    disc_hyper_basechange,
    disc_hyper_degree,
    disc_times_bar,
    disc_valuation,
    quadric_disc,
)
from elimkit.errors import (
    DegreeTooLow,
    NonHomogeneous,
    NotGeneric,
    NotQuadratic,
    SignatureMismatch,
)
from elimkit.mpoly import (
    DegreeSignature,
    MultiPoly,
    generic_system,
    monomials_of_degree,
    partial_derivative,
    poly_sqrt,
    weight_valuation,
    zariski_weight_vector,
)
from elimkit.oracle import generic_disc
from elimkit.resultant import resultant


def sym(ext, i):
    """Payload for the i-th extension variable of ext."""
    n = len(ext.variables)
    e = [0] * n
    e[i] = 1
    return MultiPoly(rg.scalar_base(ext), n, {tuple(e): 1})


def rand_form(ring, nvars, degree, rng, spread=4):
    terms = {}
    for e in monomials_of_degree(nvars, degree):
        c = rng.randrange(-spread, spread + 1)
        if c:
            terms[e] = rg.val_from_int(ring, c)
    # keep the degree honest even when every draw happens to be zero
    lead = (degree,) + (0,) * (nvars - 1)
    if lead not in terms:
        terms[lead] = rg.val_one(ring)
    return MultiPoly(ring, nvars, terms)


class TestExponentTable:
    def test_two_variable_values(self):
        for d in range(2, 7):
            assert a_exponent(2, d) == d - 2

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_recurrence(self, n, d):
        assert a_exponent(n - 1, d) + a_exponent(n, d) == (d - 1) ** (n - 1)

    def test_rejects_bad_arguments(self):
        with pytest.raises(SignatureMismatch):
            a_exponent(0, 3)
        with pytest.raises(SignatureMismatch):
            a_exponent(2, 1)

    def test_total_degree(self):
        assert disc_hyper_degree(2, 3) == 4
        assert disc_hyper_degree(3, 2) == 3
        assert disc_hyper_degree(3, 3) == 12
        assert disc_hyper_degree(4, 2) == 4


class TestFrozenForms:
    def test_binary_quadratic(self):
        ext = rg.polyext(rg.ZZ, ("a", "b", "c"))
        f = MultiPoly(
            ext, 2, {(2, 0): sym(ext, 0), (1, 1): sym(ext, 1), (0, 2): sym(ext, 2)}
        )
        assert disc_hyper(f).value.terms == {(1, 0, 1): 4, (0, 2, 0): -1}

    def test_binary_quadratic_number(self):
        f = MultiPoly(rg.ZZ, 2, {(2, 0): 3, (1, 1): 5, (0, 2): 7})
        assert disc_hyper(f).value == 59

    def test_binary_cubic(self):
        ext = rg.polyext(rg.ZZ, ("a", "b", "c", "e"))
        f = MultiPoly(
            ext,
            2,
            {(3, 0): sym(ext, 0), (2, 1): sym(ext, 1), (1, 2): sym(ext, 2), (0, 3): sym(ext, 3)},
        )
        assert disc_hyper(f).value.terms == {
            (0, 3, 0, 1): 4,
            (1, 1, 1, 1): -18,
            (0, 2, 2, 0): -1,
            (1, 0, 3, 0): 4,
            (2, 0, 0, 2): 27,
        }

    def test_defining_division(self):
        # d^{a(n,d)} Disc is exactly the resultant of the partials.
        ext, fs = generic_system(DegreeSignature(2, (3,)))
        f = fs[0]
        partials = [partial_derivative(f, 1), partial_derivative(f, 2)]
        res = resultant(partials, DegreeSignature(2, (2, 2)))
        disc = disc_hyper(f)
        assert disc * rg.element(ext, 3 ** a_exponent(2, 3)) == res

    def test_univariate_form_is_its_leading_coefficient(self):
        f = MultiPoly(rg.ZZ, 1, {(4,): 9})
        assert disc_hyper(f).value == 9


class TestDiagonalForms:
    @pytest.mark.parametrize("n,d", [(2, 3), (2, 4), (3, 2), (3, 3)])
    def test_closed_form(self, n, d):
        names = tuple(f"A{i}" for i in range(1, n + 1))
        ext = rg.polyext(rg.ZZ, names)
        terms = {}
        for i in range(n):
            e = [0] * n
            e[i] = d
            terms[tuple(e)] = sym(ext, i)
        disc = disc_hyper(MultiPoly(ext, n, terms))
        k = (d - 1) ** (n - 1)
        scale = d ** (n * k - a_exponent(n, d))
        assert disc.value.terms == {(k,) * n: scale}


class TestConeOverGenericBase:
    """A fresh top coefficient times the last variable to the d-th power."""

    def test_binary_cubic_over_point(self):
        ext = rg.polyext(rg.ZZ, ("U", "A"))
        f = MultiPoly(ext, 2, {(0, 3): sym(ext, 0), (3, 0): sym(ext, 1)})
        # 3^{2+1} U^2 A^2, the base contributing Disc(A X^3) = A squared
        assert disc_hyper(f).value.terms == {(2, 2): 27}

    def test_quadric_over_generic_conic(self):
        ext, fs = generic_system(DegreeSignature(2, (2,)))
        wide = rg.join_extension(ext, ("U",))
        terms = {e + (0,): rg.val_convert(ext, wide, c) for e, c in fs[0].terms.items()}
        terms[(0, 0, 2)] = sym(wide, wide.variables.index("U"))
        f = MultiPoly(wide, 3, terms)
        # Disc(U X3^2 + h) = 2^0 U Disc(h) for a plane conic h
        u_elt = rg.RingElement(wide, terms[(0, 0, 2)])
        base = disc_hyper(fs[0])
        base_wide = rg.RingElement(wide, rg.val_convert(ext, wide, base.value))
        assert disc_hyper(f) == u_elt * base_wide


class TestChainForm:
    """X1^d + U X1 X2^{d-1} + X2 X3^{d-1} + ... with a single surviving monomial."""

    @pytest.mark.parametrize("d", [3, 4])
    def test_two_variables_exactly(self, d):
        ext = rg.polyext(rg.ZZ, ("U",))
        u = MultiPoly(rg.ZZ, 1, {(1,): 1})
        one = MultiPoly(rg.ZZ, 1, {(0,): 1})
        g = MultiPoly(ext, 2, {(d, 0): one, (1, d - 1): u})
        want = {(d,): (-1) ** (d - 1) * (d - 1) ** (d - 1)}
        assert disc_hyper(g).value.terms == want

    @pytest.mark.parametrize("n,d", [(2, 3), (3, 2), (3, 3)])
    def test_reduction_mod_d(self, n, d):
        base = rg.Zmod(d)
        ext = rg.polyext(base, ("U",))
        u = MultiPoly(base, 1, {(1,): 1 % d})
        one = MultiPoly(base, 1, {(0,): 1 % d})
        terms = {}
        e = [0] * n
        e[0] = d
        terms[tuple(e)] = one
        e = [0] * n
        e[0], e[1] = 1, d - 1
        terms[tuple(e)] = u
        for i in range(1, n - 1):
            e = [0] * n
            e[i], e[i + 1] = 1, d - 1
            terms[tuple(e)] = one
        g = MultiPoly(ext, n, terms)
        k = (d - 1) ** (n - 1) + (-1) ** n
        assert disc_hyper(g).value.terms == {(k,): 1 % d}


class TestScalingAndLinearChange:
    @pytest.mark.parametrize("n,d", [(2, 3), (3, 2)])
    def test_scaling_exponent(self, n, d):
        rng = random.Random(31 * n + d)
        for _ in range(5):
            f = rand_form(rg.ZZ, n, d, rng)
            t = rng.choice([2, 3, 5, -2])
            lhs = disc_hyper(f.scale_int(t))
            rhs = disc_hyper(f) * rg.element(rg.ZZ, t ** (n * (d - 1) ** (n - 1)))
            assert lhs == rhs

    def test_linear_substitution_exponent(self):
        ext, fs = generic_system(DegreeSignature(3, (2,)))
        f = fs[0]
        rng = random.Random(7)
        xs = [MultiPoly.variable(ext, 3, j) for j in (1, 2, 3)]
        for _ in range(4):
            m = [[rng.randrange(-3, 4) for _ in range(3)] for _ in range(3)]
            subs = []
            for i in range(3):
                acc = MultiPoly.zero(ext, 3)
                for j in range(3):
                    acc = acc.add(xs[j].scale_int(m[i][j]))
                subs.append(acc)
            det = det_bareiss(rg.ZZ, [list(row) for row in m])
            lhs = disc_hyper(f.substitute(subs))
            rhs = disc_hyper(f) * rg.element(ext, det ** 2)  # d(d-1)^{n-1} = 2
            assert lhs == rhs

    def test_singular_substitution_kills_the_discriminant(self):
        ext, fs = generic_system(DegreeSignature(2, (3,)))
        x = MultiPoly.variable(ext, 2, 1)
        y = MultiPoly.variable(ext, 2, 2)
        image = x.add(y.scale_int(2))
        composed = fs[0].substitute([image, image.scale_int(2)])
        assert disc_hyper(composed).value.is_zero()


class TestQuadricClosedForm:
    def test_three_variables_is_half_the_symmetric_determinant(self):
        ext, fs = generic_system(DegreeSignature(3, (2,)))
        f = fs[0]

        def coeff(i, j):
            e = [0, 0, 0]
            e[i] += 1
            e[j] += 1
            return f.coefficient_of(tuple(e))

        rows = []
        for i in range(3):
            row = []
            for j in range(3):
                c = coeff(i, j)
                if i == j:
                    c = rg.val_add(ext, c, c)
                row.append(c)
            rows.append(row)
        det = rg.RingElement(ext, det_bareiss(ext, rows))
        disc = disc_hyper(f)
        assert disc * rg.element(ext, 2) == det
        assert quadric_disc(f) == disc

    @pytest.mark.parametrize("n", [2, 4])
    def test_even_sizes_agree_with_the_resultant_route(self, n):
        ext, fs = generic_system(DegreeSignature(n, (2,)))
        assert quadric_disc(fs[0]) == disc_hyper(fs[0])

    def test_modular_quadric(self):
        rng = random.Random(5)
        for p in (3, 5, 101):
            f = rand_form(rg.Zmod(p), 3, 2, rng)
            assert quadric_disc(f) == disc_hyper(f)

    def test_rejects_non_quadratics(self):
        f = MultiPoly(rg.ZZ, 2, {(3, 0): 1})
        with pytest.raises(NotQuadratic):
            quadric_disc(f)


class TestCharacteristicTwo:
    def test_four_variable_quadric_is_a_square(self):
        ext, fs = generic_system(DegreeSignature(4, (2,)), base=rg.Zmod(2))
        disc = disc_hyper(fs[0])
        root = poly_sqrt(disc.value)
        assert root is not None
        assert root.mul(root).eq(disc.value)

    def test_binary_quadric_square_root_is_the_middle_coefficient(self):
        ext, fs = generic_system(DegreeSignature(2, (2,)), base=rg.Zmod(2))
        disc = disc_hyper(fs[0])
        root = poly_sqrt(disc.value)
        assert root is not None
        # 4ac - b^2 reduces to b^2
        middle = sym(ext, ext.variables.index("U1_1_1"))
        assert root.eq(middle) or root.eq(middle.neg())


class TestBarProduct:
    @pytest.mark.parametrize("n,d", [(2, 3), (3, 2)])
    def test_resultant_with_the_form_appended(self, n, d):
        ext, fs = generic_system(DegreeSignature(n, (d,)))
        f = fs[0]
        s = disc_times_bar(f)
        kept = {e[:-1]: c for e, c in f.terms.items() if e[-1] == 0}
        fbar = MultiPoly(ext, n - 1, kept)
        assert s == disc_hyper(f) * disc_hyper(fbar)


class TestBaseChange:
    def test_linear_substitutions_leave_no_extra_factor(self):
        ext = rg.polyext(rg.ZZ, ("a", "b", "c"))
        f = MultiPoly(
            ext, 2, {(2, 0): sym(ext, 0), (1, 1): sym(ext, 1), (0, 2): sym(ext, 2)}
        )
        x = MultiPoly.variable(ext, 2, 1)
        y = MultiPoly.variable(ext, 2, 2)
        gs = [x.add(y.scale_int(2)), x.scale_int(3).add(y)]
        assert disc_hyper_basechange(f, gs) == rg.element(ext, 1)

    def test_reconstruction_is_exact(self):
        f = MultiPoly(rg.ZZ, 2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
        x = MultiPoly.variable(rg.ZZ, 2, 1)
        y = MultiPoly.variable(rg.ZZ, 2, 2)
        gs = [x.mul(x).add(y.mul(y)), x.mul(y)]
        k = disc_hyper_basechange(f, gs)
        composed = f.substitute(gs)
        res_g = resultant(gs, DegreeSignature(2, (2, 2)))
        lhs = disc_hyper(composed)
        rhs = disc_hyper(f) ** 2 * res_g ** 2 * k
        assert lhs == rhs
        assert bool(k)

    def test_rejects_mismatched_substitutions(self):
        f = MultiPoly(rg.ZZ, 2, {(2, 0): 1, (0, 2): 1})
        x = MultiPoly.variable(rg.ZZ, 2, 1)
        y = MultiPoly.variable(rg.ZZ, 2, 2)
        with pytest.raises(SignatureMismatch):
            disc_hyper_basechange(f, [x])
        with pytest.raises(SignatureMismatch):
            disc_hyper_basechange(f, [x.mul(x), y])


class TestValuation:
    @pytest.mark.parametrize("n,d,mu", [(2, 3, 1), (2, 4, 1), (2, 4, 2), (3, 3, 1)])
    def test_valuation_formula(self, n, d, mu):
        ext, fs = generic_system(DegreeSignature(n, (d,)))
        val, low, red = disc_valuation(fs[0], mu)
        assert val == (d - mu) * (d - 1 - mu) ** (n - 1)
        weights = zariski_weight_vector(DegreeSignature(n, (d,)), (mu,))
        assert weight_valuation(low, weights) == val

    def test_binary_cubic_frozen_parts(self):
        ext, fs = generic_system(DegreeSignature(2, (3,)))
        val, low, red = disc_valuation(fs[0], 1)
        base = rg.scalar_base(ext)
        nv = len(ext.variables)
        # names a, b, c, e in order U1_3_0, U1_2_1, U1_1_2, U1_0_3
        assert val == 2
        assert low.value.eq(MultiPoly(base, nv, {(0, 3, 0, 1): 4, (0, 2, 2, 0): -1}))
        assert red.value.eq(MultiPoly(base, nv, {(1, 1, 0, 0): 1}))

    def test_mu_zero_is_trivial(self):
        ext, fs = generic_system(DegreeSignature(2, (3,)))
        val, low, red = disc_valuation(fs[0], 0)
        assert val == 0
        assert low == disc_hyper(fs[0])
        assert red == rg.element(ext, 1)

    def test_rejects_out_of_range_mu(self):
        ext, fs = generic_system(DegreeSignature(2, (3,)))
        with pytest.raises(SignatureMismatch):
            disc_valuation(fs[0], 2)
        with pytest.raises(SignatureMismatch):
            disc_valuation(fs[0], -1)

    def test_rejects_specialized_forms(self):
        f = MultiPoly(rg.ZZ, 2, {(3, 0): 1, (0, 3): 1})
        with pytest.raises(NotGeneric):
            disc_valuation(f, 1)


class TestDeltaIdentity:
    @pytest.mark.parametrize("n,d", [(2, 2), (2, 3), (3, 2)])
    def test_partial_with_respect_to_the_last_pure_coefficient(self, n, d):
        assert delta_n_identity(n, d)


class TestModularLift:
    def test_reduction_commutes(self):
        rng = random.Random(11)
        for p in (2, 3, 5, 101):
            f = rand_form(rg.ZZ, 2, 3, rng)
            dz = disc_hyper(f)
            fp = f.change_ring(rg.Zmod(p))
            assert disc_hyper(fp).value == dz.value % p


class TestGenericCacheAgreement:
    @pytest.mark.parametrize("n,d", [(2, 2), (2, 3), (3, 2)])
    def test_specializations_match(self, n, d):
        entry = generic_disc(DegreeSignature(n, (d,)), kind="hyper")
        rng = random.Random(17 * n + d)
        for _ in range(6):
            f = rand_form(rg.ZZ, n, d, rng)
            assert entry.specialize([f]) == disc_hyper(f)
        for _ in range(4):
            f = rand_form(rg.Zmod(5), n, d, rng)
            assert entry.specialize([f]) == disc_hyper(f)


class TestInputValidation:
    def test_rejects_inhomogeneous_input(self):
        f = MultiPoly(rg.ZZ, 2, {(2, 0): 1, (1, 0): 1})
        with pytest.raises(NonHomogeneous):
            disc_hyper(f)

    def test_rejects_low_degree(self):
        with pytest.raises(DegreeTooLow):
            disc_hyper(MultiPoly(rg.ZZ, 2, {(1, 0): 1}))
        with pytest.raises(DegreeTooLow):
            disc_hyper(MultiPoly.zero(rg.ZZ, 2))
