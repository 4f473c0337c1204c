from __future__ import annotations

import os
import subprocess
import sys

import pytest

from semimap.catalog import export, lookup
from semimap.cli import main
from semimap.isomorphism import canonical_form, certificate_hash
from semimap.map_core import read_map, relabel, write_map


@pytest.fixture
def catalog_dir(tmp_path):
    export(tmp_path)
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_fixture(capsys, tmp_path, t7):
    p = tmp_path / "T7.map"
    write_map(t7, p)
    code, out, _ = run(capsys, "classify", str(p))
    assert code == 0
    assert out.strip() == "[3^6] torus chi=0 vertices=7 curvature=0"


def test_classify_mixed_curvature(capsys, tmp_path, t7):
    from semimap.map_core import stack_face
    p = tmp_path / "s.map"
    write_map(stack_face(t7, 0), p)
    _, out, _ = run(capsys, "classify", str(p))
    assert out.strip().endswith("curvature=mixed")


def test_validate(capsys, tmp_path, catalog_dir):
    code, out, _ = run(capsys, "validate", str(catalog_dir / "A2(T).map"))
    assert code == 0 and out.startswith("valid")
    bad = tmp_path / "bad.map"
    bad.write_text("map 4\n0 1 2\n0 1 3\n")
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 1 and out.startswith("invalid EdgeNotOnTwoFaces")


def test_enumerate_prints_summary_and_writes_files(capsys, tmp_path):
    outdir = tmp_path / "maps"
    code, out, _ = run(capsys, "enumerate", "--type", "3^6:3^4.6", "--max-vertices", "12", "--out", str(outdir))
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "found 3 maps"
    assert len(lines) == 4
    names = sorted(os.listdir(outdir))
    assert names == sorted(f"{ln.split()[0]}.map" for ln in lines[1:])
    for name in names:
        m = read_map(outdir / name)
        assert certificate_hash(m) == name[:-4]
    expected = {certificate_hash(lookup(n).map) for n in ("A1(K)", "A2(T)", "A3(T)")}
    assert {ln.split()[0] for ln in lines[1:]} == expected


def test_enumerate_output_ignores_worker_count(capsys):
    _, one, _ = run(capsys, "enumerate", "--type", "[3^6:3^3.4^2]", "--max-vertices", "12")
    _, many, _ = run(capsys, "enumerate", "--type", "[3^6:3^3.4^2]", "--max-vertices", "12", "--workers", "4")
    assert one == many
    assert one.startswith("found 13 maps")


def test_enumerate_budget_exit(capsys):
    code, _, err = run(capsys, "enumerate", "--type", "[3^6:3^3.4^2]", "--max-vertices", "12", "--budget", "20")
    assert code == 3
    assert "budget" in err


def test_enumerate_tsv(capsys):
    _, out, _ = run(capsys, "--tsv", "enumerate", "--type", "[3^6:3^2.4.3.4]", "--max-vertices", "12")
    lines = out.strip().splitlines()
    assert lines[0] == "found\t1"
    assert lines[1].split("\t")[1:] == ["vertices=11", "klein-bottle", lines[1].split("\t")[3]]


def test_obstruct(capsys):
    code, out, _ = run(capsys, "obstruct", "--type", "[3^3.4^2:3^2.6^2]", "--radius", "2")
    assert (code, out.strip()) == (0, "obstructed")
    code, out, _ = run(capsys, "obstruct", "--type", "[3^6:3^4.6]")
    assert (code, out.strip()) == (2, "unknown")


def test_iso(capsys, tmp_path, catalog_dir):
    code, out, _ = run(capsys, "iso", str(catalog_dir / "E3(T).map"), str(catalog_dir / "E6(T).map"))
    assert (code, out.strip()) == (1, "non-isomorphic")
    m = lookup("A1(K)").map
    perm = [(v + 3) % m.n_vertices for v in range(m.n_vertices)]
    p = tmp_path / "r.map"
    write_map(relabel(m, perm), p)
    code, out, _ = run(capsys, "iso", "--witness", str(catalog_dir / "A1(K).map"), str(p))
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "isomorphic"
    assert lines[1].startswith("(")


def test_iso_different_sizes(capsys, catalog_dir):
    code, out, _ = run(capsys, "iso", str(catalog_dir / "D1(K).map"), str(catalog_dir / "A2(T).map"))
    assert (code, out.strip()) == (1, "non-isomorphic")


def test_charpoly(capsys, catalog_dir):
    code, out, _ = run(capsys, "charpoly", str(catalog_dir / "E4(T).map"))
    assert code == 0
    assert out.strip() == "a^12 - 32a^10 - 40a^9 + 254a^8 + 440a^7 - 628a^6 - 1400a^5 + 105a^4 + 1000a^3 + 300a^2"


def test_catalog_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and len(out.strip().splitlines()) == 30
    code, out, _ = run(capsys, "catalog", "show", "d1")
    assert code == 0 and "name D1(K)" in out and "lk(0) C_" in out
    code, out, _ = run(capsys, "catalog", "export", str(tmp_path / "x"))
    assert code == 0 and len(os.listdir(tmp_path / "x")) == 30
    for name in os.listdir(tmp_path / "x"):
        e = lookup(name[:-4])
        assert canonical_form(read_map(tmp_path / "x" / name)) == canonical_form(e.map)


@pytest.mark.parametrize("argv", [
    ["catalog", "show", "Z9"],
    ["classify", "/nonexistent/file.map"],
    ["enumerate", "--type", "[3^6:", "--max-vertices", "12"],
    ["enumerate", "--type", "[3^6]", "--max-vertices", "12"],
    ["obstruct", "--type", "[3^7:3^6]"],
    ["catalog", "export"],
])
def test_input_errors_have_no_traceback(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 4
    assert err.startswith("semimap: ")
    assert "Traceback" not in err


def test_unknown_name_suggests(capsys):
    _, _, err = run(capsys, "catalog", "show", "z9")
    assert "did you mean" in err


def test_malformed_map_file(capsys, tmp_path):
    p = tmp_path / "m.map"
    p.write_text("map 4\n0 1 x\n")
    code, _, err = run(capsys, "classify", str(p))
    assert code == 4 and "line 2" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["enumerate", "--type", "[3^6:3^4.6]", "--max-vertices", "0"])
    assert info.value.code == 2


def test_module_entry_point(tmp_path):
    out = subprocess.run(
        [sys.executable, "-m", "semimap.cli", "obstruct", "--type", "[3^3.4^2:4.6.12]"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0
    assert out.stdout.strip() == "obstructed"
