import pickle
from fractions import Fraction
from unittest import TestCase

from aohs import QQ, PrimeField, ExtensionField, make_extension, is_prime
from aohs.arith import Field
from aohs.errors import FieldMismatchException, DivisionByZeroException, NotPrimeException, \
    ReducibleModulusException


class TestPrimeField(TestCase):
    def testArithmetic(self):
        field = PrimeField(7)
        a, b = field(3), field(5)
        self.assertEqual(a + b, 1)
        self.assertEqual(a - b, 5)
        self.assertEqual(a * b, 1)
        self.assertEqual(a / b, field(3) * field(3))
        self.assertEqual(-a, 4)
        self.assertEqual(a ** 6, 1)
        self.assertEqual(a ** -1, b)
        self.assertEqual(2 + a, 5)

    def testConversions(self):
        field = PrimeField(7)
        self.assertEqual(field("1/2"), 4)
        self.assertEqual(field(Fraction(-1, 3)), 2)
        self.assertEqual(field(-1).residue, 6)
        with self.assertRaises(DivisionByZeroException):
            field(Fraction(1, 7))

    def test_int_equality_and_hash(self):
        field = PrimeField(7)
        self.assertEqual(hash(field(3)), hash(3))
        self.assertEqual(field(3), 3)
        self.assertNotEqual(field(3), 10)
        self.assertNotEqual(field(3), -4)
        self.assertEqual(len({field(3), 3}), 1)
        self.assertEqual(len({field(3), field(10)}), 1)
        self.assertEqual({field(3): "a"}[3], "a")

    def testDivisionByZero(self):
        field = PrimeField(5)
        with self.assertRaises(DivisionByZeroException):
            field.one / field.zero
        with self.assertRaises(ZeroDivisionError):
            field.zero.inverse()

    def testMismatch(self):
        with self.assertRaises(FieldMismatchException):
            PrimeField(5)(1) + PrimeField(7)(1)
        with self.assertRaises(FieldMismatchException):
            PrimeField(5)(1) + Fraction(1, 2)
        with self.assertRaises(TypeError):
            PrimeField(5)(1) * PrimeField(3)(1)

    def testNotPrime(self):
        with self.assertRaises(NotPrimeException):
            PrimeField(9)
        with self.assertRaises(ValueError):
            PrimeField(1)

    def test_elements(self):
        field = PrimeField(5)
        self.assertListEqual([e.residue for e in field.elements()], [0, 1, 2, 3, 4])
        self.assertEqual(field.order, 5)
        self.assertEqual(field.name, "GF(5)")

    def test_pickle(self):
        field = PrimeField(11)
        element = field(4)
        copied = pickle.loads(pickle.dumps(element))
        self.assertEqual(copied, element)
        self.assertEqual(copied.field, field)


class TestRationalField(TestCase):
    def testParse(self):
        self.assertEqual(QQ("3/4"), Fraction(3, 4))
        self.assertEqual(QQ(" -2 "), Fraction(-2))
        self.assertEqual(QQ.format(Fraction(-3, 6)), "-1/2")
        self.assertEqual(QQ.format(Fraction(4, 2)), "2")
        with self.assertRaises(DivisionByZeroException):
            QQ("1/0")

    def testMismatch(self):
        with self.assertRaises(FieldMismatchException):
            QQ(PrimeField(3)(1))


class TestExtensionField(TestCase):
    def testSmallestModulus(self):
        self.assertTupleEqual(make_extension(2, 2).modulus, (1, 1, 1))
        self.assertTupleEqual(make_extension(3, 2).modulus, (1, 0, 1))
        self.assertEqual(make_extension(5, 1), PrimeField(5))

    def testNoRootInBase(self):
        field = make_extension(3, 2)
        base = PrimeField(3)
        modulus = field.modulus
        for a in base.elements():
            self.assertNotEqual(sum(c * a ** i for i, c in enumerate(modulus)), 0)
        t = field.generator
        self.assertEqual(sum((t ** i) * c for i, c in enumerate(modulus)), field.zero)

    def testFieldAxioms(self):
        field = make_extension(3, 3)
        elements = list(field.elements())
        self.assertEqual(len(elements), 27)
        nonzero = [e for e in elements if e]
        for e in nonzero:
            self.assertEqual(e * e.inverse(), field.one)
            self.assertEqual(e ** (field.order - 1), field.one)
        a, b, c = elements[5], elements[13], elements[22]
        self.assertEqual(a * (b + c), a * b + a * c)

    def testFrobeniusFixesBase(self):
        field = make_extension(5, 2)
        for a in field.elements():
            fixed = a ** 5 == a
            self.assertEqual(fixed, not any(a.coordinates[1:]))

    def test_frobenius(self):
        field = make_extension(3, 2)
        for a in field.elements():
            self.assertEqual(a.frobenius(), a ** 3)
            self.assertEqual(a.frobenius(2), a)
            self.assertEqual((a + field.generator).frobenius(), a.frobenius() + field.generator.frobenius())

    def testReducible(self):
        with self.assertRaises(ReducibleModulusException):
            ExtensionField(2, (1, 0, 1))
        with self.assertRaises(ReducibleModulusException):
            ExtensionField(3, (1, 2))

    def testMismatch(self):
        field = make_extension(3, 2)
        with self.assertRaises(FieldMismatchException):
            field.generator + make_extension(5, 2).generator
        with self.assertRaises(FieldMismatchException):
            field.generator + PrimeField(3)(1)

    def test_embedding_and_format(self):
        field = make_extension(2, 2)
        t = field.generator
        self.assertEqual(t * t, t + 1)
        self.assertEqual(field(PrimeField(2)(1)), field.one)
        self.assertEqual(str(t + 1), "t + 1")
        self.assertEqual(field.name, "GF(2^2)")

    def test_pickle(self):
        field = make_extension(7, 2)
        element = field((3, 4))
        copied = pickle.loads(pickle.dumps(element))
        self.assertEqual(copied, element)


class TestIsPrime(TestCase):
    def test_is_prime(self):
        self.assertListEqual([n for n in range(30) if is_prime(n)], [2, 3, 5, 7, 11, 13, 17, 19, 23, 29])
        self.assertTrue(is_prime(1009))


class TestField(TestCase):
    def test_abstract(self):
        with self.assertRaises(TypeError):
            Field()
        self.assertIsInstance(QQ, Field)
        self.assertIsInstance(PrimeField(5), Field)
        self.assertIsInstance(make_extension(2, 3), Field)
