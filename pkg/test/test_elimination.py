from unittest import TestCase

from aohs import PrimeField, PolynomialRing
from aohs.elimination import plane_points, local_length, polynomial_determinant
from aohs.errors import NonZeroDimensionalException, MultiplicityTooLargeException
from aohs.variety import normalize_point


def plane_forms(field, texts):
    ring = PolynomialRing(field, ("s0", "s1", "s2"))
    return [ring.parse(text) for text in texts]


class TestPlanePoints(TestCase):
    def testFourRationalPoints(self):
        field = PrimeField(101)
        forms = plane_forms(field, ["s1^2 - s0*s1", "s2^2 - s0*s2"])
        points = plane_points(forms, seed=3)
        self.assertEqual(len(points), 4)
        found = {normalize_point(point.coordinates, field) for point in points}
        expected = {tuple(field(v) for v in coordinates) for coordinates in [(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1)]}
        self.assertSetEqual(found, expected)
        for point in points:
            self.assertEqual(point.degree, 1)
            self.assertEqual(point.length, 1)
            for form in forms:
                self.assertEqual(form.evaluate(list(point.coordinates)), 0)

    def testFatPoint(self):
        field = PrimeField(101)
        points = plane_points(plane_forms(field, ["s1^2", "s2^2"]), seed=1)
        self.assertEqual(len(points), 1)
        self.assertEqual(normalize_point(points[0].coordinates, field), (field(1), field(0), field(0)))
        self.assertEqual(points[0].length, 4)

    def testConjugatePoints(self):
        # s1^2 + s0^2 has no root over GF(11)
        points = plane_points(plane_forms(PrimeField(11), ["s1^2 + s0^2", "s0*s2", "s2^2"]), seed=5)
        self.assertEqual(len(points), 1)
        self.assertEqual(points[0].degree, 2)
        self.assertEqual(points[0].length, 1)

    def test_conjugate_points_lie_on_forms(self):
        field = PrimeField(13)
        forms = plane_forms(field, ["s1^2 - 2*s0^2", "s2 - s1"])
        for seed in range(10):
            points = plane_points(forms, seed=seed)
            self.assertEqual(len(points), 1)
            self.assertEqual(points[0].degree, 2)
            for form in forms:
                self.assertEqual(form.evaluate(list(points[0].coordinates)), 0)

    def test_no_solution(self):
        field = PrimeField(101)
        self.assertListEqual(plane_points(plane_forms(field, ["1", "2"])), [])

    def testCurves(self):
        field = PrimeField(101)
        with self.assertRaises(NonZeroDimensionalException):
            plane_points(plane_forms(field, ["s0*s1 - s2^2"]))
        with self.assertRaises(NonZeroDimensionalException):
            plane_points(plane_forms(field, ["s0*s1", "s1*s2"]))
        with self.assertRaises(NonZeroDimensionalException):
            plane_points(plane_forms(field, ["0"]))

    def test_degree_mismatch(self):
        with self.assertRaises(ValueError):
            plane_points(plane_forms(PrimeField(101), ["s1", "s2^2"]))


class TestLocalLength(TestCase):
    def setUp(self):
        self.field = PrimeField(13)
        self.ring = PolynomialRing(self.field, ("x", "y"))
        self.origin = (self.field.zero, self.field.zero)

    def parse(self, *texts):
        return [self.ring.parse(text) for text in texts]

    def testLengths(self):
        self.assertEqual(local_length(self.parse("x^2", "y"), self.origin), 2)
        self.assertEqual(local_length(self.parse("x^2", "y^2"), self.origin), 4)
        self.assertEqual(local_length(self.parse("x*y", "x + y^3"), self.origin), 4)
        self.assertEqual(local_length(self.parse("x - 1", "y"), self.origin), 0)

    def testShiftedPoint(self):
        point = (self.field(2), self.field(5))
        self.assertEqual(local_length(self.parse("x^3 - 6*x^2 + 12*x - 8", "y - 5"), point), 3)

    def testCap(self):
        with self.assertRaises(MultiplicityTooLargeException):
            local_length(self.parse("x^3", "y"), self.origin, max_degree=2)


class TestPolynomialDeterminant(TestCase):
    def testDeterminant(self):
        ring = PolynomialRing(PrimeField(7), ("a", "b", "c", "d"))
        a, b, c, d = ring.gens
        self.assertEqual(polynomial_determinant([[a, b], [c, d]], ring), a * d - b * c)
        self.assertEqual(polynomial_determinant([[a]], ring), a)
        zero = ring.zero
        diagonal = [[a, zero, zero], [zero, b, zero], [zero, zero, c]]
        self.assertEqual(polynomial_determinant(diagonal, ring), a * b * c)
