import json
import subprocess
import sys

import pytest

from torusgroups.cli import main, run


def js(argv):
    _, code, text = run(argv + ["--format", "json", "--no-timestamp"])
    return code, json.loads(text)


def test_verify_passing_case():
    code, doc = js(["cases", "verify", "a17+a2"])
    assert code == 0 and doc["exit"] == 0 and doc["schema"] == "1"
    statuses = {c["status"] for r in doc["reports"] for c in r["checks"]}
    assert statuses == {"PASS"}


def test_verify_failing_case_exits_one():
    code, doc = js(["cases", "verify", "2a8+a3"])
    assert code == 1
    failed = [c["name"] for r in doc["reports"] for c in r["checks"] if c["status"] == "FAIL"]
    assert failed == ["n+ relation (as printed)"]


def test_inconclusive_case_exits_zero():
    code, doc = js(["cases", "verify", "2e7+a2+3a1"])
    assert code == 0
    assert doc["reports"][0]["checks"][0]["status"] == "INCONCLUSIVE"


def test_usage_errors(capsys):
    assert main(["cases", "verify", "nope"]) == 2
    assert "valid ids" in capsys.readouterr().err
    assert main(["bogus"]) == 2
    assert main(["invariants", "abelianize"]) == 2
    assert main(["invariants", "homcount", "--named", "rb3", "--battery", "Q8"]) == 2


def test_json_deterministic():
    argv = ["geometry", "family", "tangent", "--samples", "3", "--seed", "4",
            "--format", "json", "--no-timestamp"]
    assert run(argv)[2] == run(argv)[2]
    doc = json.loads(run(argv)[2])
    assert doc["seed"] == 4 and doc["argv"] == argv
    assert "timestamp" in json.loads(run(argv[:-1])[2])


def test_family_samples():
    code, doc = js(["geometry", "family", "inflection", "--samples", "5", "--seed", "7"])
    checks = [c for r in doc["reports"] for c in r["checks"]]
    assert code == 0 and len(checks) == 5
    assert all(c["status"] == "PASS" for c in checks)


def test_family_params():
    code, _ = js(["geometry", "family", "tangent", "--param", "t=1", "--param", "a=0"])
    assert code == 0
    assert main(["geometry", "family", "tangent", "--param", "t=1"]) == 2


def test_identities():
    code, doc = js(["geometry", "identity", "all"])
    assert code == 0 and len(doc["reports"][0]["checks"]) == 8


def test_abelianize_from_file(tmp_path):
    f = tmp_path / "z6.pres"
    f.write_text("gens: u v\nu^2\nv v v\n")
    _, code, text = run(["invariants", "abelianize", "--presentation", str(f)])
    assert code == 0 and text.strip() == "Z6"


def test_homcount_battery():
    code, doc = js(["invariants", "homcount", "--named", "rb3", "--battery", "S3,A4"])
    checks = {c["name"]: c["detail"] for c in doc["reports"][0]["checks"]}
    assert checks == {"S3": "12", "A4": "36"}


def test_coset_expect_and_overflow(tmp_path):
    f = tmp_path / "s3.pres"
    f.write_text("gens: u v\nu^2\nv^3\n(u v)^2\n")
    code, doc = js(["invariants", "coset", "--presentation", str(f), "--expect", "6"])
    assert code == 0 and doc["reports"][0]["checks"][0]["detail"] == "6"
    code, _ = js(["invariants", "coset", "--presentation", str(f), "--expect", "5"])
    assert code == 1
    code, doc = js(["invariants", "coset", "--presentation", str(f), "--subgroup", "v"])
    assert doc["reports"][0]["checks"][0]["detail"] == "2"
    # Z2 * Z3 is infinite: overflow is inconclusive, not a failure
    code, doc = js(["invariants", "coset", "--named", "rb3", "--coset-limit", "50"])
    assert code == 0
    assert doc["reports"][0]["checks"][0]["status"] == "INCONCLUSIVE"


def test_rb3_command():
    code, _ = js(["invariants", "rb3", "--named", "b3-mod-center", "--s1", "s1", "--s2", "s2"])
    assert code == 0
    code, _ = js(["invariants", "rb3", "--case", "a11+3a2", "--s1", "a ab", "--s2", "b bb g gb"])
    assert code == 0
    # u has order 2 but s1 has infinite order in Z2 * Z3
    code, _ = js(["invariants", "rb3", "--named", "rb3", "--s1", "u", "--s2", "v"])
    assert code == 1
    assert main(["invariants", "rb3", "--named", "rb3", "--s1", "u", "--s2", ""]) == 2


def test_present_commands(tmp_path):
    _, code, text = run(["present", "double-cover", "--named", "simplest", "-d", "d"])
    assert code == 0 and text.startswith("gens: g gb")
    f = tmp_path / "cover.pres"
    f.write_text(text + "\n")
    _, code, again = run(["present", "normalize", "--presentation", str(f)])
    assert again == text
    _, code, q = run(["present", "quotient", "--named", "rb3", "-r", "u = v"])
    assert code == 0 and q.splitlines()[0] == "gens: u v"
    assert len(q.splitlines()) == 4
    assert main(["present", "double-cover", "--named", "rb3", "-d", "zz"]) == 2


def test_export(tmp_path):
    out = tmp_path / "reg.json"
    _, code, _ = run(["cases", "export", "--output", str(out)])
    assert code == 0
    from torusgroups import registry
    assert out.read_text(encoding="utf-8") == registry.export_json()


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "torusgroups", "cases", "list"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "a17+a2" in res.stdout
