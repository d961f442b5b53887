"""Smoke tests for the property-suite runner (full scale lives in
tests/test_acceptance.py)."""

from contractads import verify


def test_connected_graph_sweep_counts():
    assert len(verify.connected_graphs(4)) == 1 + 1 + 2 + 6
    assert len(verify.connected_graphs(4, min_n=2)) == 9
    assert all(g.n >= 2 for g in verify.connected_graphs(4, min_n=2))


def test_run_all_clamped():
    results = verify.run_all(max_vertices=2, seed=7)
    assert [r["name"] for r in results] == [
        "fm1-census", "face-lattice-oracle", "os-dimensions",
        "euler-identity", "wedge-betti", "anick-suite", "psi-h-classes",
        "contractad-axioms", "nerve-homology"]
    assert all(r["ok"] for r in results)
    assert all(r["seconds"] >= 0 for r in results)


def test_os_check_seed_determinism():
    a = verify.check_os_dimensions(max_vertices=4, seed=123)
    b = verify.check_os_dimensions(max_vertices=4, seed=123)
    assert a == b and a["ok"]


def test_cli_verify_clamped(capsys):
    from contractads import cli
    assert cli.run(["verify", "--all", "--max-vertices", "2"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 0  # json by default
    assert '"ok": true' in out
