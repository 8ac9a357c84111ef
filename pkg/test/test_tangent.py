from unittest import TestCase

from aohs import QQ, MultiplicityProfile, LineChart, builtin_chart, normalize_generators, pull_to_chart
from aohs.errors import StarPointException, CoincidentPointsException, OffSchemeException
from aohs.hilbert import HilbertPoint, oh_equations, jacobian_oracle
from aohs.tangent import smooth_at, smooth_fiber_at, mult_flags, merge_coincident, merge_then_test, \
    MODE_GRASSMANN, MODE_STAR
from test.util import FIELD, random_instance


def normalized(name, points):
    return normalize_generators(builtin_chart(name), points)


class TestTwistedCubic(TestCase):
    def setUp(self):
        self.norm = normalized("twisted-cubic", [QQ.zero])

    def testFlags(self):
        flags = mult_flags(self.norm, (2,), [QQ.zero])
        self.assertTupleEqual(flags.e, (2,))
        self.assertTupleEqual(flags.h, (1,))
        flags = mult_flags(self.norm, (1,), [QQ.zero])
        self.assertTupleEqual(flags.h, (1,))

    def testGrassmann(self):
        verdict = smooth_at(self.norm, (2,), [QQ.zero])
        self.assertEqual(verdict.mode, MODE_GRASSMANN)
        self.assertListEqual(verdict.rows, [[0, 0, -1, 0], [0, 0, 0, 1], [0, 1, -1, 0]])
        self.assertTupleEqual(verdict.basis, ("u1", "u2", "v1", "v2"))
        self.assertEqual(verdict.rank, 3)
        self.assertEqual(verdict.expected_rank, 3)
        self.assertEqual(verdict.expected_dimension, 1)
        self.assertTrue(verdict.smooth)
        document = verdict.to_dict()
        self.assertListEqual(document["rows"][2], ["0", "1", "-1", "0"])
        self.assertListEqual(document["e"], [2])
        self.assertListEqual(document["h"], [1])

    def testStar(self):
        verdict = smooth_fiber_at(self.norm, (2,), [QQ.zero], QQ.one)
        self.assertEqual(verdict.mode, MODE_STAR)
        self.assertListEqual(verdict.rows, [[-1, 0, -1], [0, 1, 0]])
        self.assertEqual(verdict.rank, 2)
        self.assertEqual(verdict.expected_rank, 3)
        self.assertEqual(verdict.expected_dimension, -1)
        self.assertFalse(verdict.smooth)

    def testOracleAgreement(self):
        generators = builtin_chart("twisted-cubic")
        for star in [None, QQ.one]:
            chart = LineChart(3, star=star)
            presentation = oh_equations([pull_to_chart(g, chart) for g in generators], (2,))
            origin = {name: QQ.zero for name in chart.chart_variables}
            oracle = jacobian_oracle(presentation, HilbertPoint(origin, [QQ.zero], (2,)))
            if star is None:
                verdict = smooth_at(self.norm, (2,), [QQ.zero])
            else:
                verdict = smooth_fiber_at(self.norm, (2,), [QQ.zero], star)
            self.assertEqual(verdict.smooth, oracle.smooth)

    def testErrors(self):
        with self.assertRaises(StarPointException):
            smooth_fiber_at(self.norm, (2,), [QQ.zero], QQ.zero)
        with self.assertRaises(CoincidentPointsException):
            smooth_at(self.norm, (1, 1), [QQ.zero, QQ.zero])
        with self.assertRaises(OffSchemeException) as context:
            smooth_at(self.norm, (3,), [QQ.zero])
        self.assertEqual(context.exception.index, 0)


class TestMerge(TestCase):
    def testMergeCoincident(self):
        profile, points = merge_coincident((1, 2, 1), [QQ(0), QQ(1), QQ(0)])
        self.assertEqual(profile, MultiplicityProfile((2, 2)))
        self.assertTupleEqual(points, (QQ(0), QQ(1)))
        profile, points = merge_coincident((1, 1), [QQ(0), QQ(1)])
        self.assertEqual(profile, (1, 1))

    def testParabolaTangent(self):
        norm = normalized("parabola", [QQ.zero])
        verdict = merge_then_test(norm, (1, 1), [QQ.zero, QQ.zero])
        self.assertTrue(verdict.smooth)
        self.assertEqual(verdict.expected_dimension, 1)
        self.assertListEqual(verdict.rows, [[0, -1]])


class TestRandomInstances(TestCase):
    def test_grassmann_matches_oracle(self):
        for seed in range(500):
            instance = random_instance(seed)
            presentation = oh_equations(instance.pulled(), instance.profile)
            oracle = jacobian_oracle(presentation, HilbertPoint(instance.origin(), instance.points, instance.profile))
            norm = normalize_generators(instance.generators, instance.points, seed=seed)
            verdict = smooth_at(norm, instance.profile, instance.points)
            self.assertEqual(verdict.smooth, oracle.smooth, msg="seed {}".format(seed))
            self.assertEqual(verdict.expected_dimension, oracle.expected_dimension)

    def test_star_matches_oracle(self):
        for seed in range(500):
            instance = random_instance(seed, max_k=3)
            b = FIELD(seed + 500)
            if b in instance.points:
                continue
            presentation = oh_equations(instance.pulled(star=b), instance.profile)
            oracle = jacobian_oracle(presentation,
                                     HilbertPoint(instance.origin(star=True), instance.points, instance.profile))
            norm = normalize_generators(instance.generators, instance.points, seed=seed)
            verdict = smooth_fiber_at(norm, instance.profile, instance.points, b)
            self.assertEqual(verdict.smooth, oracle.smooth, msg="seed {}".format(seed))

    def test_fiber_verdict_ignores_b(self):
        for seed in range(500):
            instance = random_instance(seed)
            norm = normalize_generators(instance.generators, instance.points, seed=seed)
            verdicts = list()
            for b in [FIELD(seed + 3), FIELD(7 * seed + 11), FIELD(1000 - seed)]:
                if b in instance.points:
                    continue
                verdicts.append(smooth_fiber_at(norm, instance.profile, instance.points, b))
            self.assertEqual(len({(v.smooth, v.rank) for v in verdicts}), 1, msg="seed {}".format(seed))

    def test_merge_matches_split_oracle(self):
        for seed in range(500):
            instance = random_instance(seed, max_k=3, coincident=True)
            presentation = oh_equations(instance.pulled(), instance.profile)
            oracle = jacobian_oracle(presentation, HilbertPoint(instance.origin(), instance.points, instance.profile))
            _, points = merge_coincident(instance.profile, instance.points)
            norm = normalize_generators(instance.generators, points, seed=seed)
            self.assertEqual(merge_then_test(norm, instance.profile, instance.points).smooth, oracle.smooth,
                             msg="seed {}".format(seed))
