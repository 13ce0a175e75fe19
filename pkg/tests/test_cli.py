import json
import subprocess
import sys

import pytest

from biquat.cli.main import main
from biquat.cli.verify import IDENTITIES, run_verify
from oracles import BASIS, PUBLISHED_BASIS_TABLE

ZERO_TEXT = "(0+0I) + (0+0I)i + (0+0I)j + (0+0I)k"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestEval:
    def test_canonical_zero(self, capsys):
        assert run(capsys, "eval", "(i+Ij)^2") == (0, ZERO_TEXT + "\n", "")

    def test_value(self, capsys):
        code, out, _ = run(capsys, "eval", "1 + 2i + 3Ij")
        assert code == 0 and out.strip() == "(1+0I) + (2+0I)i + (0+3I)j + (0+0I)k"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "eval", "--json", "0.5 + 0.5Ii")
        data = json.loads(out)
        assert code == 0
        assert [data[k] for k in ("w_r", "x_r", "y_r", "z_r", "w_i", "x_i", "y_i", "z_i")] == \
            [0.5, 0, 0, 0, 0, 0.5, 0, 0]
        assert data["idempotent"] is True and data["divisor_of_zero"] is True

    def test_domain_error(self, capsys):
        code, out, err = run(capsys, "eval", "1/(1 + Ii)")
        assert code == 1 and out == ""
        assert "DivisorOfZero" in err and "columns 3-10" in err and "|q_r| = |q_i|" in err

    def test_syntax_error(self, capsys):
        code, _, err = run(capsys, "eval", "conj(")
        assert code == 2
        assert "column 6" in err
        assert err.splitlines()[-1].index("^") == 2 + 5


class TestClassify:
    def test_idempotent(self, capsys):
        code, out, _ = run(capsys, "classify", "0.5 + 0.5Ii")
        lines = out.splitlines()
        assert code == 0
        assert "idempotent=true" in lines and "divisor_of_zero=true" in lines
        assert "nilpotent=false" in lines

    def test_json(self, capsys):
        _, out, _ = run(capsys, "classify", "--json", "i + Ij")
        data = json.loads(out)
        assert data["nilpotent"] and data["pure"] and data["divisor_of_zero"]


class TestRepr:
    @pytest.mark.parametrize("form", ["cartesian", "sv", "cf1", "cf2", "cd", "sym", "hpolar", "cpolar", "geom"])
    def test_every_form(self, capsys, form):
        code, out, _ = run(capsys, "repr", "i + 2I", "--form", form)
        assert code == 0 and out.strip()

    def test_hamilton_values(self, capsys):
        _, out, _ = run(capsys, "repr", "i + 2I", "--form", "hpolar")
        assert "R = (0+1.7320508075688772I)" in out
        assert "Theta = (0-0.5493061443340549I)" in out

    def test_polar_of_divisor(self, capsys):
        code, _, err = run(capsys, "repr", "1 + Ii", "--form", "cpolar")
        assert code == 1 and "DivisorOfZero" in err

    def test_nilpotent_vector(self, capsys):
        code, _, err = run(capsys, "repr", "1 + i + Ij", "--form", "cf1")
        assert code == 1 and "NilpotentVectorPart" in err


class TestTables:
    def test_basis_matches_published(self, capsys):
        code, out, _ = run(capsys, "tables", "--basis")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split("|")[1].split() == list(BASIS)
        rows = [line.split("|") for line in lines[2:]]
        assert [r[0].strip() for r in rows] == list(BASIS)
        assert [tuple(r[1].split()) for r in rows] == list(PUBLISHED_BASIS_TABLE)

    def test_cells(self, capsys):
        _, out, _ = run(capsys, "tables", "--basis")
        rows = {line.split("|")[0].strip(): line.split("|")[1].split() for line in out.splitlines()[2:]}
        assert rows["i"][BASIS.index("j")] == "k"
        assert rows["iI"][BASIS.index("jI")] == "-k"

    def test_grades_flag_one_discrepancy(self, capsys):
        code, out, _ = run(capsys, "tables", "--grades")
        assert code == 0
        notes = [line for line in out.splitlines() if line.startswith("*")]
        assert len(notes) == 1 and "B.V" in notes[0]
        assert out.count("*") == 3  # two flagged cells plus the note

    def test_requires_choice(self, capsys):
        with pytest.raises(SystemExit):
            main(["tables"])


class TestVerify:
    def test_small_run_passes(self, capsys):
        code, out, err = run(capsys, "verify", "--seed", "1", "--samples", "200")
        assert code == 0
        assert out.splitlines()[-1] == f"{len(IDENTITIES)}/{len(IDENTITIES)} identities passed"
        assert "wall time" in err and "wall time" not in out

    def test_failure_exit_code(self, capsys):
        code, out, _ = run(capsys, "verify", "--samples", "50", "--tol", "1e-30")
        assert code == 3 and "FAIL" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--samples", "20", "--json")
        data = json.loads(out)
        assert code == 0 and data["passed"] and data["seed"] == 42
        assert {r["name"] for r in data["identities"]} == {i.name for i in IDENTITIES}
        for r in data["identities"]:
            assert r["passed"] == (r["max_residual"] <= data["tolerance"])

    def test_deterministic_and_parallel_invariant(self, capsys):
        outputs = []
        for workers in ("1", "1", "2"):
            outputs.append(run(capsys, "verify", "--seed", "7", "--samples", "300", "--workers", workers)[1])
        assert outputs[0] == outputs[1] == outputs[2]

    def test_report_depends_on_seed(self):
        a, b = run_verify(1, 100), run_verify(2, 100)
        assert [r.max_residual for r in a.results] != [r.max_residual for r in b.results]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "biquat.cli", "eval", "i*j"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "(0+0I) + (0+0I)i + (0+0I)j + (1+0I)k"
