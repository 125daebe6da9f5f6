import io
import tempfile
import unittest
from pathlib import Path

import numpy as np

from apps.common.exceptions import FileAccessError, VectorFormatError
from apps.common.vectorio import format_complex_vector, parse_complex_vector, read_vector, write_vector


class TestParse(unittest.TestCase):
    def test_comments_and_blanks(self):
        values = parse_complex_vector(["# header", "", "1 0", "  -0.5 2.5  ", "# tail"])
        np.testing.assert_array_equal(values, [1 + 0j, -0.5 + 2.5j])
        self.assertEqual(values.dtype, np.complex128)

    def test_errors_carry_line_numbers(self):
        cases = {
            ("1 0", "2"): "line 2",
            ("1 0", "x 1"): "line 2",
            ("nan 0",): "line 1",
        }
        for lines, where in cases.items():
            with self.subTest(lines=lines):
                with self.assertRaises(VectorFormatError) as ctx:
                    parse_complex_vector(lines)
                self.assertIn(where, str(ctx.exception))

    def test_empty(self):
        with self.assertRaises(VectorFormatError) as ctx:
            parse_complex_vector(["# only a comment"])
        self.assertIsNone(ctx.exception.line_number)


class TestFormat(unittest.TestCase):
    def test_shortest_repr(self):
        text = format_complex_vector(np.array([0.1 + 0j, -1e-20 + 3j]), comment="fft n=2")
        self.assertEqual(text, "# fft n=2\n0.1 0.0\n-1e-20 3.0\n")

    def test_file_and_stream(self):
        values = np.array([1 + 2j, 3 - 4j])
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "v.txt"
            write_vector(path, values)
            np.testing.assert_array_equal(read_vector(path), values)
        out = io.StringIO()
        write_vector("-", values, stdout=out)
        np.testing.assert_array_equal(read_vector("-", stdin=io.StringIO(out.getvalue())), values)


class TestFileErrors(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.dir = Path(self.tmp.name)

    def test_missing_file(self):
        with self.assertRaises(FileAccessError):
            read_vector(self.dir / "missing.txt")

    def test_undecodable_bytes(self):
        path = self.dir / "latin.txt"
        path.write_bytes(b"1 0\n\xff\xfe 0\n")
        with self.assertRaises(FileAccessError):
            read_vector(path)

    def test_unwritable_target(self):
        with self.assertRaises(FileAccessError):
            write_vector(self.dir / "no" / "such" / "dir.txt", np.ones(2))

    def test_format_errors_keep_their_type(self):
        path = self.dir / "bad.txt"
        path.write_text("1 0\nx 0\n", encoding="utf-8")
        with self.assertRaises(VectorFormatError) as ctx:
            read_vector(path)
        self.assertEqual(ctx.exception.line_number, 2)
