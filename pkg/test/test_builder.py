from unittest import TestCase

from aohs import RunConfigBuilder, RunConfig, MissingComponentException, InvalidBuildingException, \
    MultiplicityProfile, RecordingLogger, SilentLogger


class TestBuilder(TestCase):
    def testCensusConfig(self):
        logger = RecordingLogger()
        builder = RunConfigBuilder()
        builder.set_command("census")

        with self.assertRaises(MissingComponentException):
            builder.get()

        builder.set_command("census")
        builder.set_builtin("twisted-cubic")
        with self.assertRaises(MissingComponentException):
            builder.get()

        builder.set_command("census").set_builtin("twisted-cubic").set_primes([7, 11, 13])
        builder.set_profile("1,1").set_seed(3).set_draws(2).set_n_jobs(4).set_budget(5000).set_timing()
        builder.set_logger(logger)
        config = builder.get()
        self.assertIsInstance(config, RunConfig)
        self.assertEqual(config.command, "census")
        self.assertTupleEqual(config.primes, (7, 11, 13))
        self.assertEqual(config.profile, MultiplicityProfile((1, 1)))
        self.assertEqual(config.seed, 3)
        self.assertEqual(config.draws, 2)
        self.assertEqual(config.n_jobs, 4)
        self.assertEqual(config.budget, 5000)
        self.assertTrue(config.with_timing)
        self.assertIs(config.logger, logger)

        # the builder is reset after get()
        with self.assertRaises(MissingComponentException):
            builder.get()

    def testDefaults(self):
        config = RunConfigBuilder().set_command("secant-cover").set_input("variety.json").set_primes([5]).get()
        self.assertEqual(config.k, 2)
        self.assertEqual(config.extension, 1)
        self.assertIsNone(config.profile)
        self.assertIsInstance(config.logger, SilentLogger)
        self.assertDictEqual(config.to_dict(), {
            "command": "secant-cover", "builtin": None, "input": "variety.json", "primes": [5], "profile": None,
            "seed": 0, "out": None, "budget": 1000000, "jobs": 1, "draws": 1, "extension": 1, "star": None,
            "points": [], "k": 2, "samples": 20, "timing": False
        })

    def testSmoothAt(self):
        builder = RunConfigBuilder()
        builder.set_command("smooth-at").set_builtin("parabola").set_profile((2,))
        with self.assertRaises(MissingComponentException):
            builder.get()
        builder.set_command("smooth-at").set_builtin("parabola").set_profile((2,)).set_points(["0", "1"])
        with self.assertRaises(InvalidBuildingException):
            builder.get()
        config = builder.set_command("smooth-at").set_builtin("parabola").set_profile("2").set_points(["0"]).get()
        self.assertTupleEqual(config.points, ("0",))

    def testInvalid(self):
        def census():
            return RunConfigBuilder().set_command("census").set_builtin("parabola").set_primes([7])

        invalid = [
            RunConfigBuilder().set_command("solve").set_builtin("parabola"),
            census().set_input("variety.json"),
            census().set_primes([7, 7]),
            census().set_primes([9]),
            census().set_profile("2,0"),
            census().set_seed(-1),
            census().set_budget(0),
            census().set_k(1),
            census().set_n_jobs(0),
            census().set_draws(0),
            census().set_extension(0),
            RunConfigBuilder().set_command("sample").set_builtin("parabola").set_primes([7, 11]).set_profile("2")
        ]
        for builder in invalid:
            with self.assertRaises(InvalidBuildingException):
                builder.get()
        with self.assertRaises(MissingComponentException):
            RunConfigBuilder().set_command("oh-eqs").set_builtin("parabola").get()
        self.assertEqual(RunConfigBuilder().set_command("gallery").get().command, "gallery")
