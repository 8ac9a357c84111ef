import io
import json
import os
import shutil
import tempfile
from unittest import TestCase
from unittest.mock import patch

from aohs.cli import main, render, log_level, EXIT_SUCCESS, EXIT_ERROR
from aohs.gallery import names
from aohs.logging import Logger


def run(argv):
    """Run the command line, returns the exit status and what was written on stdout and stderr"""
    with patch("sys.stdout", new_callable=io.StringIO) as stdout, patch("sys.stderr", new_callable=io.StringIO) as stderr:
        status = main(argv)
    return status, stdout.getvalue(), stderr.getvalue()


class TestCommandLine(TestCase):
    def setUp(self):
        self.folder = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.folder)

    def path(self, name):
        return os.path.join(self.folder, name)

    def write_document(self, name, document):
        with open(self.path(name), "w") as file:
            json.dump(document, file)
        return self.path(name)

    def testGallery(self):
        status, out, _ = run(["gallery", "list"])
        self.assertEqual(status, EXIT_SUCCESS)
        self.assertEqual(len(out.strip().split("\n")), len(names()))
        self.assertTrue(out.startswith("parabola: "))

    def testOHEquations(self):
        status, out, _ = run(["oh-eqs", "--builtin", "parabola", "--profile", "2"])
        self.assertEqual(status, EXIT_SUCCESS)
        self.assertEqual(len(out.strip().split("\n")), 2)
        status, out, _ = run(["oh-eqs", "--builtin", "twisted-cubic", "--profile", "2", "--star", "1"])
        self.assertEqual(status, EXIT_SUCCESS)
        self.assertEqual(len(out.strip().split("\n")), 4)

    def testSmoothAt(self):
        out_path = self.path("verdict.json")
        status, out, _ = run(["smooth-at", "--builtin", "twisted-cubic", "--profile", "2", "--points", "0",
                              "--out", out_path])
        self.assertEqual(status, EXIT_SUCCESS)
        self.assertEqual(out, "")
        with open(out_path, "r") as file:
            report = json.load(file)
        self.assertTrue(report["agree"])
        self.assertTrue(report["verdict"]["smooth"])
        self.assertEqual(report["config"]["profile"], "2")

        status, out, _ = run(["smooth-at", "--builtin", "twisted-cubic", "--profile", "2", "--points", "0",
                              "--star", "1"])
        report = json.loads(out)
        self.assertFalse(report["verdict"]["smooth"])
        self.assertTrue(report["agree"])

    def testMergedPoints(self):
        status, out, _ = run(["smooth-at", "--builtin", "parabola", "--profile", "1,1", "--points", "0,0"])
        self.assertEqual(status, EXIT_SUCCESS)
        report = json.loads(out)
        self.assertEqual(report["profile"], "2")
        self.assertTrue(report["verdict"]["smooth"])

    def testChartDocument(self):
        path = self.write_document("chart.json", {
            "field": "GF(101)", "variables": ["x1", "x2", "z"], "generators": ["x1 - z^2", "x2 - z*x1"]
        })
        status, out, _ = run(["smooth-at", "--input", path, "--profile", "2", "--points", "0"])
        self.assertEqual(status, EXIT_SUCCESS)
        self.assertTrue(json.loads(out)["verdict"]["smooth"])

    def testSecantCover(self):
        status, out, _ = run(["secant-cover", "--builtin", "parabola", "--primes", "7,11"])
        self.assertEqual(status, EXIT_SUCCESS)
        report = json.loads(out)
        self.assertEqual(report["cover"]["points"]["7"]["marked"], 57)
        self.assertEqual(report["cover"]["estimate"]["dimension"], 2)
        self.assertEqual(report["variety"]["type"], "implicit")

    def testCensusReproducible(self):
        argv = ["census", "--builtin", "parabola", "--primes", "7,11", "--seed", "5"]
        first, second = run(argv), run(argv)
        self.assertIn(first[0], {0, 1})
        self.assertEqual(first[1], second[1])
        report = json.loads(first[1])
        self.assertSetEqual(set(report["census"]["reports"].keys()), {"7", "11"})
        self.assertNotIn("timing", report["census"]["reports"]["7"][0])

    def testErrors(self):
        status, _, err = run(["census", "--builtin", "cubic-surface", "--primes", "7"])
        self.assertEqual(status, EXIT_ERROR)
        self.assertIn("Unknown builtin", err)
        status, _, err = run(["census", "--input", self.path("missing.json"), "--primes", "7"])
        self.assertEqual(status, EXIT_ERROR)
        status, _, _ = run(["smooth-at", "--builtin", "parabola", "--profile", "2", "--points", "0,1"])
        self.assertEqual(status, EXIT_ERROR)
        status, _, _ = run(["census", "--builtin", "parabola", "--primes", "7,8"])
        self.assertEqual(status, EXIT_ERROR)
        path = self.write_document("broken.json", {"variables": ["X0", "X1", "X2"], "generators": ["X0 +* X1"]})
        status, _, err = run(["census", "--input", path, "--primes", "7"])
        self.assertEqual(status, EXIT_ERROR)
        self.assertIn("generators[0]", err)
        with self.assertRaises(SystemExit):
            run(["census", "--builtin", "parabola"])

    def test_helpers(self):
        self.assertEqual(render({"b": 1, "a": 2}), '{\n  "a": 2,\n  "b": 1\n}\n')
        self.assertEqual(render("text"), "text\n")
        self.assertEqual(log_level(0, 0), Logger.WARNING)
        self.assertEqual(log_level(5, 0), Logger.DEBUG)
        self.assertEqual(log_level(0, 5), Logger.SILENT)
