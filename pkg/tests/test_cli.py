import json

from conftest import cyclic, inversion_action, loop7

from hopfloop import CoactionData, dualize, loop_algebra
from hopfloop import fileio
from hopfloop.cli import main


def write_fixture_tree(tmp_path, H2, H3):
    (tmp_path / "c2.cayley").write_text(fileio.serialize_cayley(cyclic(2)))
    (tmp_path / "h2.hq").write_text(fileio.serialize_structure(H2))
    (tmp_path / "h3.hq").write_text(fileio.serialize_structure(H3))
    (tmp_path / "inv.act").write_text(
        fileio.serialize_action(inversion_action()))
    (tmp_path / "triv.coact").write_text(
        fileio.serialize_coaction(CoactionData.trivial(H2, 3)))


def test_verify_structure_pass(tmp_path, capsys, H2):
    path = tmp_path / "c2.hq"
    path.write_text(fileio.serialize_structure(H2))
    assert main(["verify", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "pass"
    assert doc["kind"] == "hopfqg"


def test_verify_corrupted_structure_exit_1(tmp_path, capsys, H2):
    text = fileio.serialize_structure(H2).replace(
        "antipode:\n0 0 1\n1 1 1", "antipode:\n0 0 1\n1 0 1")
    path = tmp_path / "bad.hq"
    path.write_text(text)
    assert main(["verify", str(path)]) == 1
    doc = json.loads(capsys.readouterr().out)
    failing = [l for l in doc["laws"] if not l["pass"]
               and not l.get("informational")]
    assert failing and all("witness" in l for l in failing)


def test_verify_loop7_informational_assoc(tmp_path, capsys):
    path = tmp_path / "l7.hq"
    path.write_text(fileio.serialize_structure(loop_algebra(loop7())))
    assert main(["verify", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assoc = next(l for l in doc["laws"] if l["law"] == "assoc")
    assert assoc["informational"] and not assoc["pass"]


def test_verify_parse_error_exit_2(tmp_path, capsys):
    path = tmp_path / "junk.hq"
    path.write_text("hopfqg\nfield Q\ndim 2\nmu:\nbroken\n")
    assert main(["verify", str(path)]) == 2
    err = capsys.readouterr().err
    assert "line 5" in err
    assert main(["verify", str(tmp_path / "missing.hq")]) == 2


def test_verify_cayley_and_dimodule(tmp_path, capsys, H2, H3):
    write_fixture_tree(tmp_path, H2, H3)
    assert main(["verify", str(tmp_path / "c2.cayley")]) == 0
    bundle = tmp_path / "d.bundle"
    bundle.write_text("dimodule quasigroup\nh2.hq\ninv.act\ntriv.coact\n")
    assert main(["verify", str(bundle)]) == 0
    capsys.readouterr()


def test_loop_algebra_then_verify(tmp_path, capsys, H2, H3):
    write_fixture_tree(tmp_path, H2, H3)
    out = tmp_path / "c2.hq"
    assert main(["loop-algebra", str(tmp_path / "c2.cayley"),
                 "-o", str(out)]) == 0
    assert main(["verify", str(out)]) == 0
    capsys.readouterr()


def test_loop_algebra_gf5_flag(tmp_path, capsys, H2, H3):
    write_fixture_tree(tmp_path, H2, H3)
    out = tmp_path / "c2f5.hq"
    assert main(["--field", "F5", "loop-algebra",
                 str(tmp_path / "c2.cayley"), "-o", str(out)]) == 0
    assert "field F 5" in out.read_text()
    assert main(["verify", str(out)]) == 0
    capsys.readouterr()


def test_loop_algebra_non_ip_exit_1(tmp_path, capsys):
    from conftest import NON_IP_ROWS
    path = tmp_path / "bad.cayley"
    path.write_text("loop 5\n" + "\n".join(
        " ".join(str(v) for v in row) for row in NON_IP_ROWS) + "\n")
    assert main(["loop-algebra", str(path)]) == 1
    capsys.readouterr()


def test_dual_roundtrip(tmp_path, capsys, H2, H3):
    write_fixture_tree(tmp_path, H2, H3)
    d1 = tmp_path / "h2d.hq"
    d2 = tmp_path / "h2dd.hq"
    assert main(["dual", str(tmp_path / "h2.hq"), "-o", str(d1)]) == 0
    assert main(["dual", str(d1), "-o", str(d2)]) == 0
    assert d2.read_text() == (tmp_path / "h2.hq").read_text()
    assert main(["verify", str(d1)]) == 0
    capsys.readouterr()


def test_smash_build_and_verify(tmp_path, capsys, H2, H3):
    write_fixture_tree(tmp_path, H2, H3)
    bundle = tmp_path / "s.bundle"
    bundle.write_text("smash\nh2.hq\nh3.hq\ninv.act\n")
    out = tmp_path / "s3.hq"
    assert main(["smash", str(bundle), "-o", str(out)]) == 0
    assert main(["verify", str(out)]) == 0
    capsys.readouterr()


def test_cosmash_build_and_verify(tmp_path, capsys, H2, H3):
    (tmp_path / "h2d.hq").write_text(
        fileio.serialize_structure(dualize(H2)))
    (tmp_path / "h3d.hq").write_text(
        fileio.serialize_structure(dualize(H3)))
    (tmp_path / "dual.coact").write_text(fileio.serialize_coaction(
        CoactionData.dual_of_action(inversion_action())))
    bundle = tmp_path / "c.bundle"
    bundle.write_text("cosmash\nh2d.hq\nh3d.hq\ndual.coact\n")
    out = tmp_path / "c.hq"
    assert main(["cosmash", str(bundle), "-o", str(out)]) == 0
    assert main(["verify", str(out)]) == 0
    capsys.readouterr()


def test_dequation_trivial_bundle(tmp_path, capsys, H2, H3):
    write_fixture_tree(tmp_path, H2, H3)
    bundle = tmp_path / "d.bundle"
    bundle.write_text("dimodule quasigroup\nh2.hq\ninv.act\ntriv.coact\n")
    assert main(["dequation", str(bundle)]) == 0
    out = capsys.readouterr().out
    assert out == "R = identity; D-equation: pass\n"


def test_search_loops_cli(tmp_path, capsys):
    prefix = str(tmp_path) + "/"
    assert main(["search-loops", "7", "--nonassoc", "--limit", "1",
                 "--prefix", prefix]) == 0
    out = capsys.readouterr().out
    assert "found 1" in out
    cayley = tmp_path / "loop7-0.cayley"
    assert cayley.exists()
    hq = tmp_path / "l7.hq"
    assert main(["loop-algebra", str(cayley), "-o", str(hq)]) == 0
    assert main(["verify", str(hq)]) == 0
    capsys.readouterr()


def test_report_flag_writes_identical_document(tmp_path, capsys, H2):
    path = tmp_path / "c2.hq"
    path.write_text(fileio.serialize_structure(H2))
    rpt = tmp_path / "r.json"
    assert main(["--report", str(rpt), "verify", str(path)]) == 0
    stdout = capsys.readouterr().out
    assert rpt.read_text() == stdout


def test_report_determinism(tmp_path, capsys, H2):
    path = tmp_path / "c2.hq"
    path.write_text(fileio.serialize_structure(H2))
    main(["verify", str(path)])
    first = capsys.readouterr().out
    main(["verify", str(path)])
    assert capsys.readouterr().out == first
