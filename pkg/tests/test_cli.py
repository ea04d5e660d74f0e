import json
import subprocess
import sys

import pytest

from suzuki import make_ring
from suzuki.cli import main
from suzuki.group import x_plus

IDENT = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
DIAG = [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 5, 0], [0, 0, 0, 5]]
GF8 = {"kind": "gf2m", "m": 3}


def write(tmp_path, name, matrix, ring=GF8):
    p = tmp_path / name
    doc = {"matrix": matrix} if ring is None else {"ring": ring, "matrix": matrix}
    p.write_text(json.dumps(doc))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_ring_info(capsys):
    code, out, _ = run(capsys, "ring-info", "--m", "3")
    assert code == 0
    assert out.strip() == "GF(8): 8 elements, modulus 0b1011, tau(x) = x^4, |Sz| = 29120"
    code, out, _ = run(capsys, "ring-info", "--ring", json.dumps(GF8), "--machine")
    assert json.loads(out) == {
        "group_order": 29120, "is_field": True, "kind": "gf2m", "m": 3,
        "modulus": 11, "size": 8, "tits_exponent": 4,
    }
    code, out, _ = run(capsys, "ring-info", "--m", "3", "--dual", "--machine")
    assert json.loads(out)["size"] == 64 and "group_order" not in json.loads(out)


def test_member(tmp_path, capsys):
    code, out, _ = run(capsys, "member", "--matrix", write(tmp_path, "i.json", IDENT))
    assert (code, out.strip()) == (0, "true")
    code, out, _ = run(capsys, "member", "--matrix", write(tmp_path, "d.json", DIAG), "--machine")
    assert code == 1
    assert json.loads(out) == {"coordinate": 0, "generator": 0, "member": False, "reason": "relation"}


def test_member_ring_from_flag(tmp_path, capsys):
    p = write(tmp_path, "i.json", IDENT, ring=None)
    assert run(capsys, "member", "--matrix", p, "--m", "5")[0] == 0
    code, _, err = run(capsys, "member", "--matrix", p)
    assert code == 2 and "no ring" in err


def test_member_dual(tmp_path, capsys):
    m = [[[1, 0] if i == j else [0, 0] for j in range(4)] for i in range(4)]
    p = write(tmp_path, "d.json", m, {"kind": "dual", "m": 3})
    assert run(capsys, "member", "--matrix", p)[0] == 0


def test_decompose(tmp_path, capsys):
    code, out, _ = run(capsys, "decompose", "--matrix", write(tmp_path, "i.json", IDENT), "--machine")
    assert code == 0
    assert json.loads(out) == {"cell": "unit", "t": 1, "u1": None, "u2": [0, 0]}
    code, _, _ = run(capsys, "decompose", "--matrix", write(tmp_path, "d.json", DIAG))
    assert code == 1
    m = [[[1, 0] if i == j else [0, 0] for j in range(4)] for i in range(4)]
    code, _, err = run(capsys, "decompose", "--matrix", write(tmp_path, "x.json", m, {"kind": "dual", "m": 3}))
    assert code == 2 and "field" in err


def test_random_then_decompose(tmp_path, capsys):
    code, out, _ = run(capsys, "random", "--m", "3", "--seed", "5", "--machine")
    assert code == 0
    doc = json.loads(out)
    p = tmp_path / "r.json"
    p.write_text(out)
    code, out2, _ = run(capsys, "member", "--matrix", str(p))
    assert code == 0
    code, out3, _ = run(capsys, "decompose", "--matrix", str(p), "--machine")
    assert code == 0 and json.loads(out3)["cell"] in ("unit", "big")
    assert doc["ring"] == GF8


def test_mul_and_inv(tmp_path, capsys):
    x = [[1, 1, 1, 1], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]]  # x+(1, 0) over GF(2)
    F2 = {"kind": "gf2m", "m": 1}
    F = make_ring("gf2m", 1)
    p = write(tmp_path, "x.json", x, F2)
    code, out, _ = run(capsys, "mul", "--matrix", p, "--matrix", p, "--machine")
    assert code == 0
    # x+(1,0)^2 = x+(0, 1)
    assert json.loads(out)["matrix"] == [[1, 0, 1, 1], [0, 1, 0, 1], [0, 0, 1, 0], [0, 0, 0, 1]]
    code, out, _ = run(capsys, "inv", "--matrix", p, "--machine")
    assert code == 0
    # x+(1,0)^-1 = x+(1, 1)
    assert json.loads(out)["matrix"] == x_plus(F.one, F.one).matrix.tolist()
    bad = write(tmp_path, "b.json", [[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], F2)
    assert run(capsys, "inv", "--matrix", bad)[0] == 1
    assert run(capsys, "mul", "--matrix", p)[0] == 2
    q = write(tmp_path, "i8.json", IDENT)
    assert run(capsys, "mul", "--matrix", p, "--matrix", q)[0] == 2


def test_enumerate(tmp_path, capsys):
    code, out, _ = run(capsys, "enumerate", "--m", "1", "--machine")
    assert (code, json.loads(out)) == (0, {"count": 20})
    code, out, _ = run(capsys, "enumerate", "--m", "3", "--count-only")
    assert (code, out.strip()) == (0, "29120")
    path = str(tmp_path / "k.bin")
    code, out, _ = run(capsys, "enumerate", "--m", "1", "--out", path, "--machine")
    assert json.loads(out) == {"count": 20, "out": path, "record_bytes": 2}
    assert (tmp_path / "k.bin").stat().st_size == 40
    assert run(capsys, "enumerate", "--m", "5")[0] == 2
    assert run(capsys, "enumerate", "--m", "7", "--count-only")[0] == 2
    assert run(capsys, "enumerate", "--m", "3", "--dual")[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--m", "3", "--suite", "weyl", "--machine")
    assert code == 0 and json.loads(out)["status"] == "pass"
    code, out, _ = run(capsys, "verify", "--m", "1", "--suite", "commutators", "--machine")
    assert code == 0 and json.loads(out)["status"] == "vacuous"
    code, _, _ = run(capsys, "verify", "--m", "3", "--dual", "--suite", "roundtrip")
    assert code == 2


def test_prove(capsys):
    code, out, _ = run(capsys, "prove", "--all")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 9 and all(line.endswith(": pass") for line in lines)
    code, out, _ = run(capsys, "prove", "--identity", "conjugation", "--convention", "left")
    assert code == 1 and "FAIL" in out
    code, out, _ = run(capsys, "prove", "--identity", "weyl-first", "--literal", "--machine")
    doc = json.loads(out)
    assert code == 1 and doc[0]["pass"] is False and doc[0]["at"] == "(0,3)"


@pytest.mark.parametrize("argv", [
    ["ring-info", "--m", "4"],
    ["ring-info", "--ring", "{not json"],
    ["ring-info"],
    ["member", "--matrix", "/nonexistent.json"],
])
def test_bad_input_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_malformed_matrix(tmp_path, capsys):
    p = write(tmp_path, "m.json", [[1, 2], [3, 4]])
    assert run(capsys, "member", "--matrix", p)[0] == 2
    p = write(tmp_path, "n.json", [[9] * 4] * 4)
    assert run(capsys, "member", "--matrix", p)[0] == 2


def test_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_machine_output_is_byte_identical(capsys):
    outs = set()
    for _ in range(2):
        _, out, _ = run(capsys, "verify", "--m", "3", "--suite", "closure", "--samples", "30", "--machine")
        outs.add(out)
        _, out, _ = run(capsys, "random", "--m", "5", "--seed", "11", "--machine")
        outs.add(out)
    assert len(outs) == 2


def test_module_entry_point_stdin():
    doc = json.dumps({"ring": GF8, "matrix": IDENT})
    res = subprocess.run([sys.executable, "-m", "suzuki", "member", "--matrix", "-"],
                         input=doc, capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.strip() == "true"
