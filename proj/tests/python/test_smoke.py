"""End-to-end smoke tests for the python module and the CLI binary.

The module is found via PYTHONPATH (the build tree puts _core next to the
package __init__). The CLI path arrives in the CONVEXTEST_CLI environment
variable; ctest sets both.
"""

import json
import os
import subprocess

import pytest

import convextest as ct


# ---------------------------------------------------------------------------
# module surface
# ---------------------------------------------------------------------------


def test_exports():
    for name in (
        "PointSet",
        "convex_position_test",
        "convex_minus",
        "convex_plus",
        "derive_far_params",
        "derive_close_params",
        "gen_convex",
        "gen_sawtooth",
        "gen_close",
        "gen_triangle_centroid",
        "min_removal_to_convex",
        "max_convex_subset_2d",
        "brute_force_convex_position",
        "minimal_far_sample_size",
        "orientation",
        "read_point_set",
        "write_point_set",
        "split_seed",
        "lemma3_report",
        "ConstraintError",
        "ParseError",
    ):
        assert hasattr(ct, name), name


def test_point_set_basics():
    ps = ct.PointSet([["1/3", 2], [0.25, "-7"], ["0.5", "1"]])
    assert ps.dim == 2
    assert len(ps) == 3
    assert ps.coords() == [["1/3", "2"], ["1/4", "-7"], ["1/2", "1"]]
    floats = ps.coords_float()
    assert abs(floats[0][0] - 1 / 3) < 1e-15
    sub = ps.subset([2, 0])
    assert sub.coords() == [["1/2", "1"], ["1/3", "2"]]
    assert "n=3" in repr(ps)


def test_orientation_signs():
    ps = ct.PointSet([[0, 0], [1, 0], [0, 1]])
    assert ct.orientation(ps, [0, 1, 2]) == 1
    assert ct.orientation(ps, [0, 2, 1]) == -1
    collinear = ct.PointSet([[0, 0], [1, 1], [2, 2]])
    assert ct.orientation(collinear, [0, 1, 2]) == 0


def test_triangle_centroid_witness():
    ps = ct.gen_triangle_centroid()
    res = ct.convex_position_test(ps)
    assert not res["in_convex_position"]
    w = res["witness"]
    assert w["ids"] == [0, 1, 2, 3]
    assert w["interior_id"] == 3
    assert w["coefficients"] == {0: "1/3", 1: "1/3", 2: "1/3"}
    assert not ct.brute_force_convex_position(ps)


def test_sawtooth_oracles():
    saw = ct.gen_sawtooth(12)
    assert not ct.brute_force_convex_position(saw)
    removal, removed_ids = ct.min_removal_to_convex(saw)
    assert removal == 3
    keep = [i for i in range(len(saw)) if i not in set(removed_ids)]
    assert ct.convex_position_test(saw.subset(keep))["in_convex_position"]
    size, ids = ct.max_convex_subset_2d(saw)
    assert size == 9 == len(ids)


def test_far_params_frozen_values():
    p = ct.derive_far_params(2048, 2, "1/10")
    assert (p["k"], p["ell"], p["s"], p["repetitions"]) == (68, 3, 401, 22)
    assert ct.minimal_far_sample_size(2048, 68, 3) == 401
    with pytest.raises(ct.ConstraintError) as exc:
        ct.derive_far_params(1024, 2, "1/2")
    assert "epsilon <= (d-1)/(2d)" in str(exc.value)


def test_convex_minus_accepts_convex():
    ps = ct.gen_convex(1024, 2, seed=5)
    v = ct.convex_minus(ps, "1/10", seed=1)
    assert v["accept"]
    assert v["witness"] is None
    assert len(v["trials"]) == 22
    assert all(t["sample_convex"] for t in v["trials"])


def test_convex_minus_rejects_sawtooth():
    saw = ct.gen_sawtooth(1024)
    rejects = 0
    first_witness = None
    for seed in range(5):
        v = ct.convex_minus(saw, "1/5", seed=seed)
        if not v["accept"]:
            rejects += 1
            if first_witness is None:
                first_witness = v["witness"]
    assert rejects >= 2  # each run rejects w.p. >= 2/3
    assert first_witness is not None
    assert len(first_witness["ids"]) == 4
    sub = saw.subset(first_witness["ids"])
    assert not ct.convex_position_test(sub)["in_convex_position"]


def test_convex_plus_close_instance():
    inst = ct.gen_close(1500, 2, "1/750", seed=3)
    assert len(inst["displaced"]) == 2
    assert ct.derive_close_params(1500, 2, "1/750")["s"] == 125
    accepted = []
    for seed in range(10):
        v = ct.convex_plus(inst["points"], "1/750", seed=seed)
        if v["accept"]:
            accepted.append(v["positive_certificate"])
    assert accepted  # accept probability is ~0.84 per seed
    for cert in accepted:
        assert len(cert) == 125
        sub = inst["points"].subset(cert)
        assert ct.convex_position_test(sub)["in_convex_position"]


def test_file_roundtrip(tmp_path):
    path = str(tmp_path / "points.txt")
    ps = ct.PointSet([["1/3", "-2"], ["7", "0.5"]])
    ct.write_point_set(path, ps, comment="fixture")
    back = ct.read_point_set(path)
    assert back.coords() == ps.coords()
    with open(path, "rb") as fh:
        raw = fh.read()
    assert raw.startswith(b"# fixture\n2 2\n")
    assert b"\r" not in raw

    bad = tmp_path / "bad.txt"
    bad.write_text("2 2\n1 2\n1 2/0\n")
    with pytest.raises(ct.ParseError):
        ct.read_point_set(str(bad))


def test_split_seed_determinism():
    a = [ct.split_seed(99, t) for t in range(100)]
    b = [ct.split_seed(99, t) for t in range(100)]
    assert a == b
    assert len(set(a)) == 100


def test_lemma3_report():
    rep = ct.lemma3_report(1024, 10, 3, trials=2000, seed=7)
    assert rep["s"] == 380
    num, den = map(int, rep["factor1"].split("/"))
    assert 2 * num >= den  # factor1 >= 1/2, exact
    assert rep["bound"] >= 0.25
    assert 0.2 < rep["empirical"] < 0.65


# ---------------------------------------------------------------------------
# CLI binary
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def cli():
    path = os.environ.get("CONVEXTEST_CLI")
    assert path and os.path.exists(path), "CONVEXTEST_CLI must point at the binary"
    return path


def run_cli(cli, *args, env_extra=None, drop=()):
    env = {k: v for k, v in os.environ.items() if k not in drop}
    env.update(env_extra or {})
    return subprocess.run(
        [cli, *args], capture_output=True, text=True, env=env, timeout=240
    )


def test_cli_gen_and_reject(cli, tmp_path):
    saw = str(tmp_path / "saw.txt")
    r = run_cli(cli, "gen", "sawtooth", "--n", "1024", "--out", saw)
    assert r.returncode == 0
    meta = json.loads(r.stdout)
    assert meta["tag"] == "far(<1/4)"
    assert meta["n"] == 1024

    r = run_cli(cli, "test-far", saw, "--epsilon", "1/5", "--seed", "0")
    assert r.returncode == 1
    rec = json.loads(r.stdout)
    assert rec["command"] == "test-far"
    assert rec["decision"] == "reject"
    assert rec["certificate"]["type"] == "negative"
    assert len(rec["certificate"]["ids"]) == 4
    assert rec["params"]["ell"] == 3
    assert rec["trials"][-1]["sample_convex"] is False


def test_cli_seed_sources(cli, tmp_path):
    conv = str(tmp_path / "conv.txt")
    assert run_cli(cli, "gen", "convex", "--n", "1024", "--out", conv).returncode == 0

    r = run_cli(
        cli,
        "test-far",
        conv,
        "--epsilon",
        "1/10",
        env_extra={"CONVEXTEST_SEED": "9"},
    )
    assert r.returncode == 0
    rec = json.loads(r.stdout)
    assert rec["seed"] == 9
    assert rec["decision"] == "accept"
    assert rec["certificate"] is None

    r = run_cli(
        cli,
        "test-far",
        conv,
        "--epsilon",
        "1/10",
        "--seed",
        "4",
        env_extra={"CONVEXTEST_SEED": "9"},
    )
    assert json.loads(r.stdout)["seed"] == 4  # flag wins over environment

    r = run_cli(
        cli,
        "test-far",
        conv,
        "--epsilon",
        "1/10",
        env_extra={"CONVEXTEST_SEED": "banana"},
    )
    assert r.returncode == 2
    assert "CONVEXTEST_SEED" in r.stderr


def test_cli_constraint_exit_code(cli, tmp_path):
    conv = str(tmp_path / "conv.txt")
    assert run_cli(cli, "gen", "convex", "--n", "1024", "--out", conv).returncode == 0
    r = run_cli(cli, "test-far", conv, "--epsilon", "1/2", drop=("CONVEXTEST_SEED",))
    assert r.returncode == 2
    assert "constraint violated" in r.stderr
    assert "epsilon <= (d-1)/(2d)" in r.stderr


def test_cli_batch(cli, tmp_path):
    conv = str(tmp_path / "conv.txt")
    assert run_cli(cli, "gen", "convex", "--n", "1024", "--out", conv).returncode == 0
    r = run_cli(
        cli,
        "test-far",
        conv,
        "--epsilon",
        "1/10",
        "--seed",
        "3",
        "--batch",
        "3",
        "--jobs",
        "2",
    )
    assert r.returncode == 0
    lines = [json.loads(line) for line in r.stdout.splitlines() if line.strip()]
    assert len(lines) == 3
    assert all(rec["decision"] == "accept" for rec in lines)
    assert len({rec["seed"] for rec in lines}) == 3  # split seeds are distinct


def test_cli_appendix(cli):
    r = run_cli(cli, "verify-lemma3", "--appendix")
    assert r.returncode == 0
    rep = json.loads(r.stdout)
    assert rep["s_old"] == 363
    assert rep["s_old_exceeds_n"] is True
    assert rep["s_fixed"] == 184
    assert rep["product_below_quarter"] is True
