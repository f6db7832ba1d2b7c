import json

import pytest

from mahonian.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poly(capsys):
    code, out, _ = run(capsys, "poly", "--id", "der-s", "--n", "3")
    assert code == 0 and out.strip() == "q + q^2"
    code, out, _ = run(capsys, "poly", "--id", "signed-der-d", "--n", "2", "--json")
    blob = json.loads(out)
    assert blob["poly"] == "-q^2" and blob["eps"] == -1
    assert blob["min_deg"] == 2 and blob["coeffs"] == ["-1/1"]
    code, out, _ = run(capsys, "poly", "--id", "delta-less", "--n", "2", "--eps", "-1")
    assert out.strip() == "q - q^2"


def test_brute(capsys):
    code, out, _ = run(capsys, "brute", "--family", "d", "--n", "2", "--stat", "dmaj",
                       "--sign", "len-d", "--restrict", "derangements")
    assert code == 0 and out.strip() == "-q^2"
    code, out, _ = run(capsys, "brute", "--family", "b", "--n", "1", "--stat", "fmaj", "--json")
    assert json.loads(out)["poly"] == "1 + q"


def test_brute_invalid_spec_exits_2(capsys):
    code, _, err = run(capsys, "brute", "--family", "b", "--n", "2", "--stat", "len-a")
    assert code == 2 and "only defined on S_n" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--id", "der-s", "--max-n", "4", "--json")
    blob = json.loads(out)
    assert code == 0 and blob["id"] == "der-s"
    assert [r["n"] for r in blob["results"]] == [1, 2, 3, 4]
    assert all(r["status"] == "PASS" and r["diff"] is None for r in blob["results"])
    code, out, _ = run(capsys, "verify", "--id", "rel-bd")
    assert code == 0 and "PASS" in out


def test_verify_unknown(capsys):
    code, _, err = run(capsys, "verify", "--id", "bogus")
    assert code == 2 and "unknown identity" in err


def test_verify_all_quick(capsys):
    code, out, _ = run(capsys, "verify-all", "--quick")
    assert code == 0
    assert out.strip().splitlines()[-1].endswith("identities pass")


@pytest.mark.parametrize("method", ["closed", "rec1", "rec2", "enumerate"])
def test_counts(capsys, method):
    code, out, _ = run(capsys, "counts", "--family", "ab", "--max-n", "4", "--method", method)
    assert code == 0
    assert out.split() == ["1", "0", "2", "3", "3", "14", "4", "117"]


def test_fiber(capsys):
    code, out, _ = run(capsys, "fiber", "--family", "b", "--n", "4", "--sigma=-2 -1")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 6 and "1 2 -4 -3" in lines


def test_shuffle(capsys):
    code, out, _ = run(capsys, "shuffle", "--left", "4 -5 1", "--right", "2 3", "--sb")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 6 and all(l.endswith(" 1") for l in lines)
    code, out, _ = run(capsys, "shuffle", "--left=-4 -1", "--right", "2 3")
    assert len(out.strip().splitlines()) == 6


def test_shuffle_overlap_exits_2(capsys):
    code, _, err = run(capsys, "shuffle", "--left", "1 2", "--right", "2 3")
    assert code == 2 and "overlap" in err


def test_console_script_entry_point():
    import subprocess, sys
    out = subprocess.run([sys.executable, "-m", "mahonian.cli", "poly", "--id", "counts-ad",
                          "--n", "2"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "1"
