from fractions import Fraction
from unittest import TestCase

from aohs import QQ, PrimeField, make_extension
from aohs.errors import DivisionByZeroException
from aohs.univariate import UnivariatePolynomial, gcd, xgcd, xgcd_many, squarefree_decomposition, \
    distinct_degree_factorization, factor_profile, BinaryForm, binary_gcd, resultant, roots, order_at, \
    rational_roots, _euclid_gcd, _euclid_xgcd, _musser, _ddf
from aohs.util import make_rng


def upoly(field, *coefficients):
    return UnivariatePolynomial(field, coefficients)


def random_upoly(field, rng, degree):
    return UnivariatePolynomial(field, [field.random_element(rng) for _ in range(degree)] + [1])


class TestUnivariateArithmetic(TestCase):
    def testDivision(self):
        field = PrimeField(7)
        f = upoly(field, 1, 2, 3, 4)
        g = upoly(field, 5, 1)
        q, r = divmod(f, g)
        self.assertEqual(q * g + r, f)
        self.assertLess(r.degree, g.degree)
        with self.assertRaises(DivisionByZeroException):
            divmod(f, upoly(field))

    def testExactDivision(self):
        field = PrimeField(5)
        f = upoly(field, -1, 0, 1)
        self.assertEqual(f.exact_div(upoly(field, 1, 1)), upoly(field, -1, 1))
        with self.assertRaises(ValueError):
            f.exact_div(upoly(field, 2, 1))

    def testEvaluate(self):
        self.assertEqual(upoly(QQ, 1, 0, 1).evaluate(Fraction(1, 2)), Fraction(5, 4))
        field = make_extension(3, 2)
        self.assertEqual(upoly(PrimeField(3), 1, 0, 1).evaluate(field.generator), field.zero)

    def testDerivatives(self):
        f = upoly(QQ, 0, 0, 0, 0, 1)
        self.assertEqual(f.derivative(), upoly(QQ, 0, 0, 0, 4))
        self.assertEqual(f.hasse_derivative(2), upoly(QQ, 0, 0, 6))
        self.assertTrue(f.hasse_derivative(-1).is_zero())

    def test_powmod(self):
        field = PrimeField(11)
        rng = make_rng(0, 300)
        for _ in range(20):
            f = random_upoly(field, rng, 3)
            modulus = random_upoly(field, rng, 4)
            self.assertEqual(f.powmod(13, modulus), (f ** 13) % modulus)


class TestGcd(TestCase):
    def testExamples(self):
        self.assertEqual(gcd(upoly(QQ, 0, 0, 1), upoly(QQ, 0, 0, 0, 1)), upoly(QQ, 0, 0, 1))
        self.assertEqual(gcd(upoly(QQ, 0, 1, -1), upoly(QQ, 0, 1, 0, -1)), upoly(QQ, 0, -1, 1))
        field = PrimeField(2)
        self.assertEqual(gcd(upoly(field, 1, 1), upoly(field, 1, 1, 1)), upoly(field, 1))

    def testZero(self):
        with self.assertRaises(ValueError):
            gcd(upoly(QQ), upoly(QQ))
        self.assertEqual(gcd(upoly(QQ), upoly(QQ, 2, 4)), upoly(QQ, Fraction(1, 2), 1))

    def test_bezout(self):
        field = PrimeField(13)
        rng = make_rng(1, 300)
        for _ in range(50):
            common = random_upoly(field, rng, int(rng.integers(0, 3)))
            f = common * random_upoly(field, rng, int(rng.integers(0, 4)))
            g = common * random_upoly(field, rng, int(rng.integers(0, 4)))
            d, a, b = xgcd(f, g)
            self.assertEqual(a * f + b * g, d)
            self.assertEqual(d.leading, field.one)
            self.assertTrue((f % d).is_zero())
            self.assertTrue((g % d).is_zero())
            self.assertTrue((d % common).is_zero())

    def test_xgcd_many(self):
        field = PrimeField(7)
        z = UnivariatePolynomial.x(field)
        polynomials = [z * (z - 1), z * (z - 2), upoly(field), z ** 3]
        d, cofactors = xgcd_many(polynomials)
        self.assertEqual(d, z)
        total = upoly(field)
        for c, f in zip(cofactors, polynomials):
            total = total + c * f
        self.assertEqual(total, d)


class TestFactorization(TestCase):
    def testSquarefree(self):
        field = PrimeField(7)
        z = UnivariatePolynomial.x(field)
        f = (z - 1) * (z - 2) ** 2 * (z - 3) ** 2
        decomposition = squarefree_decomposition(f)
        self.assertEqual(decomposition, [(z - 1, 1), ((z - 2) * (z - 3), 2)])

    def testSquarefreeCharacteristic(self):
        field = PrimeField(3)
        z = UnivariatePolynomial.x(field)
        f = (z ** 3 - z - 1) ** 3 * (z + 1)
        self.assertEqual(squarefree_decomposition(f), [(z + 1, 1), (z ** 3 - z - 1, 3)])

    def testDistinctDegree(self):
        field = PrimeField(3)
        z = UnivariatePolynomial.x(field)
        f = (z ** 2 + 1) * (z - 1) * z
        blocks = distinct_degree_factorization(f)
        self.assertEqual(blocks, [((z - 1) * z, 1), (z ** 2 + 1, 2)])

    def testProfiles(self):
        z7 = UnivariatePolynomial.x(PrimeField(7))
        self.assertTupleEqual(factor_profile(z7 ** 2 * (z7 - 1)), ((1, 1), (1, 2)))
        z3 = UnivariatePolynomial.x(PrimeField(3))
        self.assertTupleEqual(factor_profile(z3 ** 2 + 1), ((2, 1),))
        self.assertTupleEqual(factor_profile((z3 ** 2 + 1) ** 2), ((2, 2),))
        with self.assertRaises(ValueError):
            factor_profile(upoly(PrimeField(3)))

    def test_profile_degrees(self):
        field = PrimeField(5)
        rng = make_rng(2, 300)
        for _ in range(100):
            f = random_upoly(field, rng, 1)
            for _ in range(int(rng.integers(0, 4))):
                f = f * random_upoly(field, rng, int(rng.integers(1, 4)))
            profile = factor_profile(f)
            self.assertEqual(sum(d * m for d, m in profile), f.degree)

    def test_profile_product(self):
        field = PrimeField(3)
        rng = make_rng(3, 300)
        for _ in range(50):
            f = random_upoly(field, rng, int(rng.integers(1, 7)))
            product = upoly(field, 1)
            for factor, multiplicity in squarefree_decomposition(f):
                for block, _ in distinct_degree_factorization(factor):
                    product = product * block ** multiplicity
            self.assertEqual(product, f.monic())

    def test_generic_algorithms_agree(self):
        """The algorithms used over F_{p^e} agree with the sympy ones on prime fields"""
        field = PrimeField(5)
        rng = make_rng(4, 300)
        for _ in range(200):
            f = random_upoly(field, rng, int(rng.integers(1, 7)))
            g = random_upoly(field, rng, int(rng.integers(0, 5))) * random_upoly(field, rng, 1)
            self.assertEqual(_euclid_gcd(f, g), gcd(f, g))
            d, a, b = _euclid_xgcd(f, g)
            self.assertEqual(d, xgcd(f, g)[0])
            self.assertEqual(a * f + b * g, d)
            squarefree = [factor for factor, _ in squarefree_decomposition(f)]
            product = upoly(field, 1)
            for factor, multiplicity in _musser(f.monic()):
                product = product * factor ** multiplicity
            self.assertEqual(product, f.monic())
            for factor in squarefree:
                self.assertEqual(_ddf(factor), distinct_degree_factorization(factor))

    def test_extension_profile(self):
        field = make_extension(3, 2)
        z = UnivariatePolynomial.x(field)
        self.assertTupleEqual(factor_profile(z ** 2 + 1), ((1, 1), (1, 1)))


class TestBinaryForms(TestCase):
    def setUp(self):
        self.field = PrimeField(7)

    def testCommonRootAtZero(self):
        # t0*t1 and t1^2
        f = BinaryForm.from_coefficients(self.field, [0, 1, 0])
        g = BinaryForm.from_coefficients(self.field, [0, 0, 1])
        d = binary_gcd(f, g)
        self.assertEqual(d.degree, 1)
        self.assertEqual(d.dehomogenized.degree, 1)
        self.assertEqual(d.infinity_multiplicity, 0)
        self.assertTupleEqual(d.factor_profile(), ((1, 1),))

    def testCommonRootAtInfinity(self):
        # t0*t1 and t0^2
        f = BinaryForm.from_coefficients(self.field, [0, 1, 0])
        g = BinaryForm.from_coefficients(self.field, [1, 0, 0])
        d = binary_gcd(f, g)
        self.assertEqual(d.degree, 1)
        self.assertEqual(d.infinity_multiplicity, 1)
        self.assertTupleEqual(d.factor_profile(), ((1, 1),))

    def testCommonFiniteRoot(self):
        # t0^2 - t1^2 and t0 - t1
        f = BinaryForm.from_coefficients(self.field, [1, 0, -1])
        g = BinaryForm.from_coefficients(self.field, [1, -1])
        d = binary_gcd(f, g)
        self.assertEqual(d.degree, 1)
        self.assertEqual(d.evaluate(self.field.one, self.field.one), 0)
        self.assertTupleEqual(d.factor_profile(), ((1, 1),))

    def testCoprime(self):
        f = BinaryForm.from_coefficients(self.field, [1, 0, 1])
        g = BinaryForm.from_coefficients(self.field, [0, 1])
        d = binary_gcd(f, g)
        self.assertEqual(d.degree, 0)
        self.assertTupleEqual(d.factor_profile(), ())

    def test_zero_forms(self):
        zero = BinaryForm.from_coefficients(self.field, [0, 0])
        with self.assertRaises(ValueError):
            binary_gcd(zero, zero)
        f = BinaryForm.from_coefficients(self.field, [1, 1])
        self.assertEqual(binary_gcd(zero, f), f)


class TestRoots(TestCase):
    def testRoots(self):
        field = PrimeField(7)
        z = UnivariatePolynomial.x(field)
        self.assertEqual(roots((z - 1) ** 2 * (z - 5) * (z ** 2 + 1)), [field(1), field(5)])
        extension = make_extension(7, 2)
        found = roots(z ** 2 + 1, field=extension)
        self.assertEqual(len(found), 2)
        for a in found:
            self.assertEqual(a * a, -extension.one)

    def test_large_field(self):
        field = PrimeField(10007)
        z = UnivariatePolynomial.x(field)
        expected = [field(3), field(17), field(4000)]
        f = (z - 3) * (z - 17) * (z - 4000) * (z ** 2 - 5)
        found = roots(f)
        self.assertEqual([a for a in found if a in expected], expected)
        for a in found:
            self.assertEqual(f.evaluate(a), 0)

    def testOrder(self):
        field = PrimeField(5)
        z = UnivariatePolynomial.x(field)
        self.assertEqual(order_at(z ** 3 * (z - 1), field(0)), 3)
        self.assertEqual(order_at(z ** 3 * (z - 1), field(2)), 0)

    def testRationalRoots(self):
        z = UnivariatePolynomial.x(QQ)
        f = z * (2 * z - 1) ** 2 * (z + 3)
        self.assertEqual(rational_roots(f), [(Fraction(-3), 1), (Fraction(0), 1), (Fraction(1, 2), 2)])

    def test_resultant(self):
        field = PrimeField(11)
        x = UnivariatePolynomial.x(field, variable="x")
        one = UnivariatePolynomial(field, [1], variable="x")
        # y^2 - x and y - x: resultant x^2 - x
        res = resultant([-x, UnivariatePolynomial(field, [], variable="x"), one], [-x, one])
        self.assertEqual(res, x * x - x)

    def test_rational_resultant(self):
        x = UnivariatePolynomial.x(QQ, variable="x")
        one = UnivariatePolynomial(QQ, [1], variable="x")
        zero = UnivariatePolynomial(QQ, [], variable="x")
        # y^2 + x^2 - 1 and 2*y - x: resultant 5*x^2 - 4
        res = resultant([x * x - 1, zero, one], [-x, one + one])
        self.assertEqual(res, 5 * x * x - 4)
        self.assertEqual(resultant([x, one], [one]), one)
        field = make_extension(3, 2)
        z = UnivariatePolynomial.x(field, variable="x")
        with self.assertRaises(TypeError):
            resultant([z, UnivariatePolynomial(field, [1], variable="x")], [z, z + 1])
