"""End-to-end checks of the quivq command line: schemas, exit codes, determinism."""
import json
import subprocess
import sys
import unittest
from pathlib import Path

QUIVQ = sys.argv.pop(1)
DATA = Path(__file__).parent / "data"


def run(*args, stdin=None):
    p = subprocess.run([QUIVQ, *args], input=stdin, capture_output=True, text=True)
    return p.returncode, p.stdout


def run_json(*args, stdin=None):
    code, out = run(*args, stdin=stdin)
    return code, json.loads(out)


class Cli(unittest.TestCase):
    def test_mckay_cyclic2(self):
        code, d = run_json("mckay", "--family", "cyclic", "--m", "2")
        self.assertEqual(code, 0)
        self.assertEqual(d["schema"], "quivq.mckay/1")
        self.assertEqual(d["delta"], [1, 1])
        self.assertEqual(d["adjacency"], [[0, 2], [2, 0]])
        self.assertEqual(d["character_table"], [["1", "1"], ["1", "-1"]])

    def test_mckay_cyclotomic_entries(self):
        _, d = run_json("mckay", "--family", "cyclic", "--m", "3")
        entry = d["character_table"][1][1]
        self.assertEqual(entry["conductor"], 3)
        self.assertEqual(len(entry["coeffs"]), 2)

    def test_cb_check(self):
        code, d = run_json("cb-check", "--input", str(DATA / "cb_affine_a1.json"))
        self.assertEqual(code, 0)
        self.assertTrue(d["weak"])
        self.assertFalse(d["strict"])
        self.assertEqual(d["p"], "1")
        self.assertIn([[1, 1, 0], [0, 0, 1]], d["violations"])
        _, t = run_json("cb-check", "--input", str(DATA / "cb_typea.json"))
        self.assertTrue(t["holds"])
        self.assertEqual(t["scanned"], 6)

    def test_multiplicity(self):
        _, d = run_json("multiplicity", "--input", str(DATA / "multiplicity_a2.json"))
        self.assertEqual(d["multiplicity"], 2)

    def test_params_map_cyclic2(self):
        code, d = run_json("params-map", "--kind", "upsilon0", "--family", "cyclic", "--m", "2")
        self.assertEqual(code, 0)
        self.assertEqual(d["matrix"], [["1", "1"], ["0", "1/2"], ["0", "-1/2"]])
        self.assertTrue(d["verified_inverse"])
        _, u = run_json("params-map", "--kind", "upsilon", "--family", "cyclic", "--m", "2")
        self.assertEqual(u["matrix"], [["1", "1", "-1/2"], ["0", "0", "1/2"], ["0", "-1", "1/2"]])
        self.assertEqual(u["source"]["labels"], ["h", "c1", "k"])

    def test_sra_check(self):
        _, d = run_json("sra-check", "--family", "cyclic", "--m", "2", "--n", "1", "--max-degree", "2")
        self.assertTrue(d["confluent"])
        self.assertEqual([x["graded"] for x in d["dimensions"]], [2, 4, 6])
        self.assertEqual([x["spherical"] for x in d["dimensions"]], [1, 0, 3])

    def test_comoment(self):
        _, d = run_json("comoment-check", "--input", str(DATA / "comoment_kronecker.json"))
        self.assertTrue(d["parity_invariant"])
        self.assertTrue(d["homomorphism"])

    def test_lift_verify_round_trip(self):
        code, lift = run_json("maffei-lift", "--input", str(DATA / "typea_general.json"))
        self.assertEqual(code, 0)
        self.assertEqual(lift["stats"]["underdetermined_stages"], 0)
        doc = {"typea": lift["lift"]["typea"], "lift": lift["lift"], "rep": lift["rep"]}
        code, v = run_json("maffei-verify", "--input", "-", stdin=json.dumps(doc))
        self.assertEqual(code, 0)
        self.assertTrue(v["pass"])
        # perturb a matched block: the report names it
        doc["lift"]["Bt"][1][0][0] = "12345"
        _, bad = run_json("maffei-verify", "--input", "-", stdin=json.dumps(doc))
        self.assertFalse(bad["pass"])
        self.assertIn("match BB(1)", bad["failures"])

    def test_flag_iso(self):
        _, d = run_json("flag-iso", "--input", str(DATA / "typea_e0.json"))
        self.assertEqual([len(f[0]) if f else 0 for f in d["flag"]], [0, 2, 3, 4])

    def test_pullback(self):
        _, d = run_json("pullback-check", "--input", str(DATA / "typea_general.json"))
        self.assertTrue(d["pass"])

    def test_reflect(self):
        _, d = run_json("reflect", "--input", str(DATA / "reflect_kronecker.json"))
        self.assertEqual(d["rep"]["v"], [0, 1])
        self.assertEqual(d["chi"], ["-6", "0"])

    def test_slodowy(self):
        _, d = run_json("slodowy", "--N", "3", "--partition", "2,1")
        self.assertEqual(d["dimension"], 5)
        self.assertTrue(d["sl2_relations"])
        self.assertTrue(all(b["kazhdan_degree"] >= 2 for b in d["basis"]))

    def test_exit_codes(self):
        code, d = run_json("cb-check", "--input", str(DATA / "malformed.json"))
        self.assertEqual(code, 1)
        self.assertEqual(d["error"], "MalformedInput")
        code, _ = run("cb-check", "--input", "-", stdin="{not json")
        self.assertEqual(code, 1)
        code, d = run_json("slodowy", "--N", "3", "--partition", "2,2")
        self.assertEqual(code, 2)
        self.assertEqual(d["error"], "InvalidPartition")
        code, d = run_json("params-map", "--kind", "upsilon", "--family", "cyclic", "--m", "2", "--n", "1")
        self.assertEqual(code, 2)
        self.assertEqual(d["error"], "Unsupported")
        code, _ = run("no-such-command")
        self.assertEqual(code, 1)

    def test_determinism(self):
        args = ["maffei-lift", "--input", str(DATA / "typea_general.json")]
        a = run("--seed", "7", *args)[1]
        b = run("--seed", "7", *args)[1]
        c = run("--seed", "8", *args)[1]
        self.assertEqual(a, b)
        self.assertNotEqual(a, c)

    def test_selftest_filter(self):
        _, d = run_json("selftest", "--filter", "maffei")
        self.assertEqual([c["criterion"] for c in d["criteria"]], [5])
        self.assertTrue(d["pass"])

    def test_selftest_full(self):
        # criterion 2's strict Crawley-Boevey items fail by equality; everything else passes
        code, d = run_json("selftest")
        self.assertEqual(code, 3)
        failing = [(c["criterion"], i["name"]) for c in d["criteria"] for i in c["items"] if not i["pass"]]
        self.assertEqual(len(failing), 2)
        for crit, name in failing:
            self.assertEqual(crit, 2)
            self.assertTrue(name.startswith("strict inequality"))

    def test_selftest_corrupted_table(self):
        _, clean = run_json("selftest", "--filter", "mckay")
        self.assertTrue(clean["pass"])
        _, d = run_json("selftest", "--corrupt-table")
        status = {c["criterion"]: c["pass"] for c in d["criteria"]}
        self.assertFalse(status[1])
        for k in (3, 4, 5, 6, 7, 8, 9):
            self.assertTrue(status[k], k)


if __name__ == "__main__":
    unittest.main()
