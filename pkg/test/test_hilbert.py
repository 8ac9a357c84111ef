from unittest import TestCase

from aohs import QQ, MultiplicityProfile, LineChart, pull_to_chart, builtin_chart
from aohs.errors import InvalidProfileException, ZeroGeneratorException, OffSchemeException, \
    CoincidentPointsException
from aohs.hilbert import HilbertPoint, oh_equations, jacobian_oracle, merge_profile_check
from test.util import random_instance


def chart_system(name, star=None):
    generators = builtin_chart(name)
    chart = LineChart(generators[0].ring.nvars, star=star)
    return [pull_to_chart(g, chart) for g in generators], chart


def origin(chart):
    return {name: QQ.zero for name in chart.chart_variables}


class TestMultiplicityProfile(TestCase):
    def testParse(self):
        profile = MultiplicityProfile.parse("2,1,1")
        self.assertTupleEqual(profile.parts, (2, 1, 1))
        self.assertEqual(profile.r, 3)
        self.assertEqual(profile.k, 4)
        self.assertEqual(str(profile), "2,1,1")
        self.assertEqual(profile, (2, 1, 1))

    def testInvalid(self):
        for text in ["", "1,,2", "a", "0", "2,-1"]:
            with self.assertRaises(InvalidProfileException):
                MultiplicityProfile.parse(text)
        with self.assertRaises(InvalidProfileException):
            MultiplicityProfile([])

    def testMerge(self):
        profile = MultiplicityProfile((1, 2, 3))
        self.assertEqual(profile.merged(0, 2), (4, 2))
        self.assertTupleEqual(profile.unordered(), (3, 2, 1))
        with self.assertRaises(IndexError):
            profile.merged(2, 1)


class TestOHEquations(TestCase):
    def testParabola(self):
        pulled, chart = chart_system("parabola")
        presentation = oh_equations(pulled, (2,))
        self.assertEqual(len(presentation.equations), 2)
        self.assertTupleEqual(presentation.chart_variables, ("u1", "v1"))
        self.assertTupleEqual(presentation.marked_variables, ("z1",))
        u1, v1, z1 = presentation.ring.gens
        self.assertEqual(presentation.equation(0, 0), v1 + z1 ** 2)
        self.assertEqual(presentation.equation(0, 1), u1 - 2 * z1)
        self.assertEqual(presentation.expected_dimension, 1)
        verdict = jacobian_oracle(presentation, HilbertPoint(origin(chart), [QQ.zero], (2,)))
        self.assertTrue(verdict.smooth)
        self.assertEqual(verdict.rank, 2)

    def testTwistedCubic(self):
        pulled, chart = chart_system("twisted-cubic")
        presentation = oh_equations(pulled, MultiplicityProfile((2,)))
        self.assertEqual(len(presentation.equations), 4)
        self.assertEqual(presentation.expected_dimension, 1)
        point = HilbertPoint(origin(chart), [QQ.zero], (2,))
        for value in presentation.evaluate(point.assignment(presentation)):
            self.assertEqual(value, 0)
        verdict = jacobian_oracle(presentation, point)
        self.assertTrue(verdict.smooth)
        self.assertEqual(verdict.rank, 4)
        self.assertDictEqual(verdict.to_dict(), {
            "smooth": True, "rank": 4, "expected_codimension": 4, "expected_dimension": 1
        })

    def testText(self):
        pulled, _ = chart_system("parabola")
        text = oh_equations(pulled, (1, 1)).to_text()
        self.assertEqual(len(text.split("\n")), 2)

    def testOffScheme(self):
        pulled, chart = chart_system("twisted-cubic")
        presentation = oh_equations(pulled, (3,))
        with self.assertRaises(OffSchemeException) as context:
            jacobian_oracle(presentation, HilbertPoint(origin(chart), [QQ.zero], (3,)))
        self.assertEqual(context.exception.index, 2)

    def testZeroGenerator(self):
        pulled, _ = chart_system("parabola")
        with self.assertRaises(ZeroGeneratorException):
            oh_equations(pulled + [pulled[0].ring.zero], (1,))

    def test_star_presentation(self):
        pulled, chart = chart_system("twisted-cubic", star=QQ.one)
        presentation = oh_equations(pulled, (2,))
        self.assertTupleEqual(presentation.chart_variables, ("u1", "u2"))
        self.assertEqual(presentation.expected_dimension, -1)
        verdict = jacobian_oracle(presentation, HilbertPoint(origin(chart), [QQ.zero], (2,)))
        self.assertFalse(verdict.smooth)

    def test_marked_point_count(self):
        with self.assertRaises(ValueError):
            HilbertPoint({}, [QQ.zero], (1, 1))


class TestMergeCheck(TestCase):
    def testDistinctPoints(self):
        pulled, chart = chart_system("parabola")
        point = HilbertPoint(origin(chart), [QQ.zero, QQ.one], (1, 1))
        self.assertIsNone(point.coincident_pair())
        with self.assertRaises(CoincidentPointsException):
            merge_profile_check(pulled, point)

    def testParabolaTangent(self):
        pulled, chart = chart_system("parabola")
        check = merge_profile_check(pulled, HilbertPoint(origin(chart), [QQ.zero, QQ.zero], (1, 1)))
        self.assertTupleEqual(check.pair, (0, 1))
        self.assertTrue(check.merged.smooth)
        self.assertTrue(check.equal)

    def test_random_coincident_instances(self):
        for seed in range(500):
            instance = random_instance(seed, max_k=4, coincident=True)
            point = HilbertPoint(instance.origin(), instance.points, instance.profile)
            check = merge_profile_check(instance.pulled(), point)
            self.assertTrue(check.equal, msg="seed {}".format(seed))
