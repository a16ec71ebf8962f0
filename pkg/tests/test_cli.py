import json
import subprocess
import sys

import pytest

from relramsey.certificates import Certificate
from relramsey.cli import main
from relramsey.structures import graph, linear_order, pure_set


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("RAMSEY_THREADS", raising=False)
    (tmp_path / "lo3.struct").write_text(linear_order(3).dumps())
    (tmp_path / "set2.struct").write_text(pure_set(2).dumps())
    return tmp_path


def test_arrow_holds(workdir):
    assert main(["arrow", "--class", "linear_orders", "--C", "6", "--B", "3", "--A", "2", "-k", "2", "-l", "1"]) == 0
    cert = Certificate.load(workdir / "arrow.cert.json")
    assert cert.holds


def test_arrow_fails_and_verifies(workdir):
    assert main(["arrow", "--C", "5", "--B", "3", "--A", "2", "-k", "2", "--out", "lo5.json"]) == 1
    assert main(["verify", "lo5.json"]) == 0
    d = json.loads((workdir / "lo5.json").read_text())
    d["detail"]["coloring"][0][1] ^= 1
    (workdir / "tampered.json").write_text(json.dumps(d))
    assert main(["verify", "tampered.json"]) == 1


def test_rel_arrow_k1(workdir):
    args = ["rel-arrow", "--mode", "struct", "--pair", "sets:linear_orders", "--Bstar", "lo3.struct", "--A", "set2.struct", "-k", "1"]
    assert main(args) == 0


def test_export_cnf(workdir):
    pysat = pytest.importorskip("pysat.formula")
    from pysat.solvers import Minisat22

    for c, want in ((5, 1), (6, 0)):
        code = main(["arrow", "--C", str(c), "--B", "3", "--A", "2", "-k", "2", "--export-cnf", "o.cnf"])
        assert code == want
        f = pysat.CNF(from_file=str(workdir / "o.cnf"))
        with Minisat22(bootstrap_with=f.clauses) as s:
            assert s.solve() == (code == 1)


def test_timeout_exit_code(workdir):
    code = main(["arrow", "--C", "16", "--B", "3", "--A", "2", "-k", "3", "--timeout-ms", "100", "--threads", "1"])
    assert code in (1, 2)
    if code == 2:
        assert Certificate.load(workdir / "arrow.cert.json").exhausted


def test_input_errors(workdir, capsys):
    assert main(["arrow", "--B", "3", "--A", "2", "-k", "2"]) == 3
    assert "--C" in capsys.readouterr().err
    (workdir / "broken.struct").write_text('{"signature": [\n oops')
    assert main(["arrow", "--C", "broken.struct", "--B", "3", "--A", "2", "-k", "2"]) == 3
    assert "line 2" in capsys.readouterr().err
    assert main(["arrow", "--C", "4", "--B", "3", "--A", "2", "-k", "0"]) == 3
    (workdir / "g.struct").write_text(graph(2, []).dumps())
    assert main(["arrow", "--class", "linear_orders", "--C", "g.struct", "--B", "3", "--A", "2", "-k", "2"]) == 3
    assert main(["nonsense"]) == 3


def test_threads_env_and_determinism(workdir, monkeypatch):
    main(["arrow", "--C", "5", "--B", "3", "--A", "2", "-k", "2", "--threads", "1", "--out", "a.json"])
    monkeypatch.setenv("RAMSEY_THREADS", "8")
    main(["arrow", "--C", "5", "--B", "3", "--A", "2", "-k", "2", "--threads", "1", "--out", "b.json"])
    assert (workdir / "a.json").read_bytes() == (workdir / "b.json").read_bytes()
    monkeypatch.setenv("RAMSEY_THREADS", "x")
    assert main(["arrow", "--C", "5", "--B", "3", "--A", "2", "-k", "2"]) == 3


def test_scan_commands(workdir):
    assert main(["ramsey-witness", "--class", "linear_orders", "--B", "3", "--A", "2", "-k", "2", "--n-max", "6"]) == 0
    assert main(["ramsey-witness", "--class", "linear_orders", "--B", "3", "--A", "2", "-k", "2", "--n-max", "5"]) == 2
    assert main(["rel-witness", "--pair", "sets:linear_orders", "--Bstar", "lo3.struct", "--A", "set2.struct", "-k", "1"]) == 0
    assert main(["rigidity", "--class", "graphs", "--n-max", "2"]) == 1
    assert main(["rigidity", "--class", "linear_orders", "--n-max", "4"]) == 0
    (workdir / "k2k1.struct").write_text(graph(3, [(0, 1)]).dumps())
    assert main(["expansion-property", "--pair", "graphs:ordered_graphs", "--A", "k2k1.struct", "--n-max", "6"]) == 0
    assert main(["verify", "expansion-property.cert.json"]) == 0
    (workdir / "p3.struct").write_text(graph(3, [(0, 1), (1, 2)]).dumps())
    assert main(["degree", "--pair", "graphs:ordered_graphs", "--A", "p3.struct", "-k", "2", "--n-max", "3"]) == 0
    assert main(["verify", "degree.cert.json"]) == 0


def test_listing_commands(workdir, capsys):
    assert main(["enumerate", "--class", "graphs", "--n-max", "3", "--out", "g.json"]) == 0
    doc = json.loads((workdir / "g.json").read_text())
    assert [len(doc["members"][s]) for s in "123"] == [1, 2, 4]
    assert main(["expansions", "--pair", "graphs:ordered_graphs", "--A", "p3.struct"]) == 3
    (workdir / "p3.struct").write_text(graph(3, [(0, 1), (1, 2)]).dumps())
    capsys.readouterr()
    assert main(["expansions", "--pair", "graphs:ordered_graphs", "--A", "p3.struct"]) == 0
    assert len(json.loads(capsys.readouterr().out)["up_to_iso"]) == 3
    assert main(["fraisse-sanity", "--class", "graphs", "--n-max", "3"]) == 0


def test_module_entry_point(workdir):
    r = subprocess.run([sys.executable, "-m", "relramsey", "arrow", "--C", "3", "--B", "2", "--A", "1", "-k", "2"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "arrow relation" in r.stdout
