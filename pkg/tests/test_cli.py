import io
import json
import subprocess
import sys

import pytest

from b3aut import intmat
from b3aut.braid3 import normal_form, parse_braid, sigma
from b3aut.cli import main
from b3aut.intmat import M, Mat2, parse_matrix


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), stdout=buf)
    return code, buf.getvalue().strip()


def run_json(*argv):
    code, out = run("--format", "json", *argv)
    return code, json.loads(out) if out else None


def test_braid_nf():
    code, out = run("braid-nf", "aba bab")
    assert code == 0 and out == "s^0 1 s^0 c^1"
    code, obj = run_json("braid-nf", "aba bab")
    assert obj["kind"] == "braid-nf" and obj["witness"]["n"] == 1


def test_braid_eq():
    assert run("braid-eq", "aba", "bab") == (0, "equal")
    assert run("braid-eq", "ab", "ba") == (0, "different")


def test_mat2braid_round_trip():
    code, out = run("mat2braid", "[[1,-1],[1,0]]")
    assert code == 0
    assert sigma(parse_braid(out)) == M
    code, back = run("braid2mat", out)
    assert parse_matrix(back) == M


def test_aut_check():
    assert run("aut-check", "u->v ; v->VU") == (0, "automorphism: yes, direct: yes")
    assert run("aut-check", "u->u ; v->u") == (0, "automorphism: no, direct: no")
    code, obj = run_json("aut-check", "u->u ; v->uvU")
    assert obj["value"] == {"automorphism": True, "direct": True}


def test_aut_commands():
    code, obj = run_json("aut-decompose", "u->U ; v->V")
    assert code == 0 and obj["value"]["inner"] == "vu" and obj["witness"] == "u->U ; v->V"
    assert run("aut-order", "u->v ; v->U") == (0, "4")
    assert run("aut-order", "u->vu ; v->v") == (0, "inf")
    assert run("aut-torsion", "u->v ; v->u") == (0, "Delta")


def test_matrix_commands():
    assert run("f", "-2") == (0, "[[1,1],[1,2]]")
    assert run("derived", "[[2,1],[1,1]]") == (0, "yes")
    assert run("derived", "1 -1 0 1") == (0, "no")
    assert run("rewrite-f", "[[2,1],[1,1]]") == (0, "f-1")
    assert run("torsion-sl", "0 -1 1 0") == (0, "S")
    assert run("torsion-gl", "0 1 1 0") == (0, "D")


def test_exit_codes():
    assert run("aut-decompose", "u->u ; v->u")[0] == 1
    assert run("aut-torsion", "u->u ; v->Uv")[0] == 1
    assert run("rewrite-f", "1 -1 0 1")[0] == 1
    assert run("mat2braid", "0 1 1 0")[0] == 1
    assert run("braid-nf", "xyz")[0] == 2
    assert run("torsion-sl", "[[1,2]]")[0] == 2
    assert run("aut-check", "u->v")[0] == 2
    assert run("no-such-command")[0] == 2
    assert run()[0] == 2


@pytest.mark.parametrize("word", ["a", "bAba", "s^3 A", "c^-2 b", "ab ab ab a"])
def test_round_trip_stable(word):
    _, nf_text = run("braid-nf", word)
    _, again = run("braid-nf", nf_text)
    assert again == nf_text
    assert normal_form(parse_braid(nf_text)) == normal_form(parse_braid(word))


def test_decompose_round_trip():
    _, obj = run_json("aut-decompose", "u->uvuVU ; v->uvU")
    assert obj["witness"] == "u->uvuVU ; v->uvU"


def test_flag_positions():
    a = run("--format", "json", "braid-eq", "a", "a")[1]
    b = run("braid-eq", "a", "a", "--format", "json")[1]
    assert a == b and json.loads(a)["value"] is True


def test_verify_passes():
    code, obj = run_json("verify", "--seed", "3", "--max-size", "10")
    assert code == 0 and all(obj["value"].values())


def test_verify_detects_mutation(monkeypatch):
    monkeypatch.setattr(intmat, "S", Mat2(0, 1, -1, 0))
    code, out = run("verify")
    assert code == 1
    assert "FAIL" in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "b3aut", "braid-nf", "s s"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "s^0 1 s^0 c^1"
