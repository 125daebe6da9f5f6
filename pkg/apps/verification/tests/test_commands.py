import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from apps.common.commands import EXIT_PARSE_ERROR, EXIT_VERIFICATION_FAILED
from apps.verification.identities import check_names


class TestVerifyCommand(SimpleTestCase):
    def run_verify(self, *args):
        out, err = StringIO(), StringIO()
        call_command("verify", *args, stdout=out, stderr=err)
        return out.getvalue(), err.getvalue()

    def test_passes(self):
        out, err = self.run_verify("--max-n", "16")
        lines = out.splitlines()
        self.assertEqual(len(lines), len(check_names()))
        self.assertTrue(all(line.startswith("PASS ") for line in lines))
        self.assertIn("checks passed up to N=16", err)

    def test_trivial_bound(self):
        out, _ = self.run_verify("--max-n", "1")
        self.assertNotIn("FAIL", out)

    def test_json(self):
        out, _ = self.run_verify("--max-n", "8", "--json", "--kinds", "dif,difw", "--seed", "11")
        report = json.loads(out)
        self.assertTrue(report["passed"])
        self.assertEqual(report["seed"], 11)
        self.assertEqual(report["kinds"], ["dif", "difw"])

    def test_single_check(self):
        out, _ = self.run_verify("--max-n", "8", "--check", "dft_unitarity")
        self.assertEqual(len(out.splitlines()), 1)

    def test_fault(self):
        err = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command("verify", "--max-n", "16", "--inject-fault", stdout=StringIO(), stderr=err)
        self.assertEqual(ctx.exception.returncode, EXIT_VERIFICATION_FAILED)
        self.assertIn("dit_factorization", str(ctx.exception))
        self.assertIn("counterexample for dit_factorization", err.getvalue())
        self.assertIn('"radices": [2, 2]', err.getvalue())

    def test_bad_flags(self):
        for args in (("--kinds", "fft"), ("--max-n", "0")):
            with self.subTest(args=args):
                with self.assertRaises(CommandError) as ctx:
                    self.run_verify(*args)
                self.assertEqual(ctx.exception.returncode, EXIT_PARSE_ERROR)
