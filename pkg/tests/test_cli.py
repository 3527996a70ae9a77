import io
import json
import sys

import pytest

from helpers import FIXTURES

from qschemoid.cli import cli_main


def run(argv, stdin=None, monkeypatch=None, capsys=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli_main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def fx(name):
    return str(FIXTURES / name)


def test_build_then_haut(monkeypatch, capsys):
    code, scheme, _ = run(["build", "trivial-scheme", "3"], capsys=capsys)
    assert code == 0
    code, out, _ = run(["haut", "-"], stdin=scheme, monkeypatch=monkeypatch, capsys=capsys)
    assert code == 0
    assert out.splitlines()[0] == "order 6, type Sym(3)"


def test_contractible_commuting_square(capsys):
    code, out, _ = run(["contractible", fx("remark38.qsmd")], capsys=capsys)
    assert code == 2
    assert "contractible: false" in out and "obstruction: false" in out


def test_contractible_idempotent_pairs(capsys):
    code, out, _ = run(["contractible", fx("sec3_example.qsmd")], capsys=capsys)
    assert code == 0 and "contractible: true" in out


def test_constants_idempotent_pairs(capsys):
    code, out, _ = run(["constants", fx("sec3_example.qsmd")], capsys=capsys)
    assert code == 0
    lines = set(out.splitlines())
    for expected in ("p^sigma_(1,sigma) = 1", "p^sigma_(sigma,1) = 1", "p^sigma_(1,1) = 0",
                     "p^1_(1,1) = 1", "p^1_(1,sigma) = 0", "p^1_(sigma,1) = 0",
                     "p^1_(sigma,sigma) = 0", "p^sigma_(sigma,sigma) = 3"):
        assert expected in lines


def test_json_is_deterministic(capsys):
    _, a, _ = run(["--json", "haut", fx("s_z3.scheme")], capsys=capsys)
    _, b, _ = run(["haut", fx("s_z3.scheme"), "--json"], capsys=capsys)
    assert a == b
    data = json.loads(a)
    assert data["order"] == 2 and data["type"] == "Z/2"
    assert list(data) == sorted(data)


def test_homotopic_exit_codes(capsys):
    assert run(["homotopic", fx("trivial2.scheme"), "id", "obj:1,0"], capsys=capsys)[0] == 0
    assert run(["homotopic", fx("trivial3.scheme"), "id", "obj:1,0,2"], capsys=capsys)[0] == 2
    assert run(["homotopic", fx("trivial3.scheme"), "id", "u:99"], capsys=capsys)[0] == 1


def test_asmd_homotopic(capsys):
    code, out, _ = run(["asmd-homotopic", fx("trivial2_transpose.qsmd"), "id", "obj:1,0"],
                       capsys=capsys)
    assert code == 2
    assert run(["asmd-homotopic", fx("trivial2_transpose.qsmd"), "id", "id"], capsys=capsys)[0] == 0
    assert run(["asmd-homotopic", fx("remark38.qsmd"), "id", "id"], capsys=capsys)[0] == 1


def test_iso_and_classes(capsys):
    assert run(["iso", fx("stilde_z3.qsmd"), fx("s_z3.scheme")], capsys=capsys)[0] == 0
    assert run(["iso", fx("trivial2.scheme"), fx("trivial3.scheme")], capsys=capsys)[0] == 2
    code, out, _ = run(["classes", fx("trivial2.scheme")], capsys=capsys)
    assert code == 0 and out.startswith("4 morphisms in 2 homotopy class(es)")


def test_build_variants(tmp_path, capsys):
    for argv in (["build", "s-group", fx("z3.group")], ["build", "jmath", fx("trivial2.scheme")],
                 ["build", "k", fx("remark38.qsmd")],
                 ["build", "product", fx("trivial2.scheme"), fx("tilde_interval.qsmd")]):
        assert run(argv, capsys=capsys)[0] == 0
    code, out, _ = run(["build", "stilde", fx("z2.group")], capsys=capsys)
    assert out == (FIXTURES / "stilde_z2.qsmd").read_text()
    target = tmp_path / "out.scheme"
    run(["--out", str(target), "build", "trivial-scheme", "4"], capsys=capsys)
    assert target.read_text() == (FIXTURES / "trivial4.scheme").read_text()


def test_cap_flag(capsys):
    code, _, err = run(["--cap", "3", "haut", fx("trivial3.scheme")], capsys=capsys)
    assert code == 1 and "error:" in err


@pytest.mark.parametrize("argv", [["validate", "/nonexistent"], ["build", "nothing"],
                                  ["frobnicate"], ["build", "trivial-scheme", "x"]])
def test_bad_input_exit_one(argv, capsys):
    code, out, err = run(argv, capsys=capsys)
    assert code == 1 and out == "" and err


def test_validate_reports(monkeypatch, capsys):
    code, out, _ = run(["validate", "-"], stdin="#ascheme v1\n2\n0 1\n1 1\n",
                       monkeypatch=monkeypatch, capsys=capsys)
    assert code == 1
    code, out, _ = run(["validate", fx("remark38.qsmd")], capsys=capsys)
    assert out == "valid: 4 objects, 9 morphisms, 4 blocks\n"


def test_threads_do_not_change_reports(monkeypatch, capsys):
    _, one, _ = run(["classes", fx("s_z4.scheme")], capsys=capsys)
    _, four, _ = run(["--threads", "4", "classes", fx("s_z4.scheme")], capsys=capsys)
    monkeypatch.setenv("QSCHEMOID_THREADS", "3")
    _, env, _ = run(["classes", fx("s_z4.scheme")], capsys=capsys)
    assert one == four == env
