import json
import subprocess
import sys

import pytest

from helpers import rand_gauss, rand_poly
from pyramids.cli import run
from pyramids.exact import format_gauss
from pyramids.io import (
    dumps,
    poly_from_json,
    poly_to_json,
    pyramid_from_json,
    pyramid_to_json,
    rows_from_csv,
    rows_to_csv,
)
from pyramids.transforms import PyramidRow


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestIO:
    def test_json_shapes(self):
        row = PyramidRow.of(["1/4", "1/2", "1/4"])
        assert pyramid_to_json(row) == {"n": 2, "entries": ["1/4", "1/2", "1/4"]}
        assert pyramid_from_json(pyramid_to_json(row)) == row

    def test_random_round_trip(self, rng):
        for _ in range(50):
            n = rng.randint(0, 6)
            row = PyramidRow.of([rand_gauss(rng) for _ in range(n + 1)])
            text = dumps(pyramid_to_json(row))
            assert pyramid_from_json(text) == row
            assert dumps(pyramid_to_json(pyramid_from_json(text))) == text
            P = rand_poly(rng, n)
            assert poly_from_json(dumps(poly_to_json(P))) == P

    def test_csv(self):
        rows = [[1], ["1/2 i", "-3/4"]]
        text = rows_to_csv(rows)
        assert text == "1\n1/2 i,-3/4\n"
        assert [[format_gauss(x) for x in r] for r in rows_from_csv(text)] == [["1"], ["1/2 i", "-3/4"]]

    def test_bad_json(self):
        with pytest.raises(ValueError):
            pyramid_from_json({"n": 1})


class TestCommands:
    def test_reduce(self, capsys):
        assert call(capsys, "reduce", "q p^2 q")[:2] == (0, "z^2 + 1/4\n")
        code, out, _ = call(capsys, "reduce", "q^2 p^2", "--method", "interpolation", "--json")
        assert code == 0 and json.loads(out) == {"coeffs": ["-3/4", "2 i", "1"]}

    def test_normal_order(self, capsys):
        code, out, _ = call(capsys, "normal-order", "pq", "--json")
        assert json.loads(out) == {"terms": [{"q": 1, "p": 1, "coeff": "1"}, {"q": 0, "p": 0, "coeff": "-1 i"}]}

    def test_family(self, capsys):
        code, out, _ = call(capsys, "family", "weyl", "--n", "2")
        assert code == 0
        assert json.loads(out) == {"n": 2, "entries": ["1/4", "1/2", "1/4"], "coeffs": ["-1/4", "0", "1"]}
        code, out, _ = call(capsys, "family", "hermite", "--n", "3", "--csv", "--integerize")
        assert out == "1\n1,1\n3,2,3\n7,17,17,7\n"

    def test_eulerian(self, capsys):
        code, out, _ = call(capsys, "eulerian", "--n", "3")
        assert code == 0 and json.loads(out)["row"] == [1, 23, 23, 1]
        code, out, _ = call(capsys, "eulerian", "--n", "6", "--check", "all")
        assert code == 0

    def test_screen(self, capsys):
        code, out, _ = call(capsys, "screen", "--family", "binom-pow", "--max-r", "4")
        assert json.loads(out)["passing"] == [1, 2]
        code, out, _ = call(capsys, "screen", "--family", "born-jordan")
        assert json.loads(out)["condition1"] == "-9/20"

    def test_identities(self, capsys):
        code, out, _ = call(capsys, "identities", "--max-n", "4", "--max-m", "4", "--bridges")
        assert code == 0
        report = json.loads(out)
        assert {"identity", "n", "status"} <= set(report[0])

    def test_outer_diagonal(self, capsys):
        code, out, _ = call(capsys, "outer-diagonal", "chebyshev_u", "--max-n", "4")
        data = json.loads(out)
        assert code == 0 and data["values"][3] == "1/2"

    def test_exit_codes(self, capsys):
        assert call(capsys, "bogus")[0] == 1
        assert call(capsys)[0] == 1
        assert call(capsys, "family", "weyl")[0] == 1
        code, _, err = call(capsys, "reduce", "q p ^")
        assert code == 2 and "position 5" in err
        assert call(capsys, "reduce", "q p p")[0] == 3
        assert call(capsys, "poly2pyramid", "--n", "0", "0", "1")[0] == 3
        assert call(capsys, "pyramid2poly", "1/0")[0] == 2

    def test_file_round_trip(self, tmp_path, capsys):
        src = tmp_path / "poly.json"
        src.write_text(dumps({"coeffs": ["9/16", "0", "-7/2", "1/3 i", "1"]}))
        mid, back = tmp_path / "row.json", tmp_path / "back.json"
        assert run(["poly2pyramid", "--n", "4", "-i", str(src), "-o", str(mid)]) == 0
        assert run(["pyramid2poly", "-i", str(mid), "-o", str(back)]) == 0
        assert back.read_bytes() == src.read_bytes()

    def test_deterministic_output(self, capsys):
        first = call(capsys, "family", "legendre", "--n", "6", "--integerize")[1]
        assert call(capsys, "family", "legendre", "--n", "6", "--integerize")[1] == first


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "pyramids", "reduce", "2i*p*q + p^2 q^2"], capture_output=True, text=True
    )
    assert out.returncode == 0 and out.stdout == "z^2 + 1/4\n"
