import json
import subprocess
import sys

import pytest

from galois_hulls.cli import main

COSET = {"m": 1, "z": 1, "w": 3, "t": 2}
FIELD81 = {"p": 3, "h": 4}


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(path)


def request(**kw):
    req = {"method": "theorem_c", "field": FIELD81, "params": COSET, "k": 2, "l": 1, "e_prime": 1, "extended": False}
    req.update(kw)
    return req


def test_construct_theorem_c(tmp_path, capsys):
    code, out, _ = run(capsys, ["construct", write(tmp_path, "r.json", request())])
    rep = json.loads(out)
    assert code == 0
    assert rep["hull"]["hull_dim"] == 1 and rep["mds"] == "proved-mds" and rep["agreement"]
    assert rep["provenance"]["twist_plan"]["s"] == 1
    assert set(rep) == {"request", "spec", "hull", "mds", "agreement", "wall_time", "provenance"}


def test_construct_from_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, ["construct", "-"], stdin=json.dumps(request(l=2)), monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["hull"]["hull_dim"] == 2


def test_construct_field_flag(tmp_path, capsys):
    req = request()
    del req["field"]
    code, out, _ = run(capsys, ["construct", "--field", "3,4", write(tmp_path, "r.json", req)])
    assert code == 0


def test_construct_theorem_a(tmp_path, capsys):
    req = {"method": "theorem_a", "field": FIELD81,
           "params": {"seed_theorem_c": dict(COSET, e=1, k=2)}, "k": 1, "l": 0, "e_prime": 3}
    code, out, _ = run(capsys, ["construct", write(tmp_path, "a.json", req)])
    rep = json.loads(out)
    assert code == 0 and rep["hull"]["e"] == 3 and rep["hull"]["hull_dim"] == 0
    assert rep["provenance"]["witness"]["deg_h"] == 0


def test_construct_theorem_a_extended(tmp_path, capsys):
    req = {"method": "theorem_a", "field": FIELD81, "extended": True,
           "params": {"seed_theorem_c": dict(COSET, e=1, k=3)}, "k": 2, "l": 1, "e_prime": 1}
    code, out, _ = run(capsys, ["construct", write(tmp_path, "a.json", req)])
    rep = json.loads(out)
    assert code == 0 and rep["hull"]["n"] == 10 and rep["hull"]["hull_dim"] == 1


def test_construct_theorem_b(tmp_path, capsys):
    req = {"method": "theorem_b", "field": FIELD81,
           "params": {"seed_search": {"n": 4, "k": 1}}, "k": 1, "l": 0, "e_prime": 0}
    code, out, _ = run(capsys, ["construct", write(tmp_path, "b.json", req)])
    rep = json.loads(out)
    assert code == 0 and rep["provenance"]["witness"]["deg_h"] == 2


def test_construct_explicit_seed(tmp_path, capsys):
    code, out, _ = run(capsys, ["construct", write(tmp_path, "r.json", request(l=2))])
    seed = json.loads(out)["spec"]
    req = {"method": "theorem_a", "field": FIELD81, "params": {"seed": seed}, "k": 1, "l": 1, "e_prime": 3}
    code, out, _ = run(capsys, ["construct", write(tmp_path, "a.json", req)])
    assert code == 0 and json.loads(out)["hull"]["hull_dim"] == 1


def test_hypothesis_violation_exit_3(tmp_path, capsys):
    req = {"method": "theorem_a", "field": {"p": 3, "h": 3},
           "params": {"seed": {"field": {"p": 3, "h": 3}, "a": [[0, 0, 0], [0, 0, 1], [0, 0, 2]],
                               "v": [[0, 0, 1]] * 3, "k": 1, "extended": False}},
           "k": 1, "l": 0, "e_prime": 1}
    code, _, err = run(capsys, ["construct", write(tmp_path, "a.json", req)])
    assert code == 3 and "h/e must be even" in err


def test_bound_violation_exit_3(tmp_path, capsys):
    code, _, err = run(capsys, ["construct", write(tmp_path, "r.json", request(k=5))])
    assert code == 3 and "k=5" in err


@pytest.mark.parametrize("bad", [
    "{not json",
    json.dumps(request(field={"p": "x", "h": 4})),
    json.dumps(request(field={"p": 4, "h": 1})),
    json.dumps(request(method="theorem_z")),
    json.dumps(request(params={"m": 1})),
])
def test_malformed_exit_2(tmp_path, capsys, bad):
    code, _, err = run(capsys, ["construct", write(tmp_path, "bad.json", bad)])
    assert code == 2 and err.startswith("error:")


def test_verify_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, ["construct", write(tmp_path, "r.json", request(l=2))])
    built = json.loads(out)
    code, out, _ = run(capsys, ["verify", write(tmp_path, "s.json", built["spec"]), "--e", "1"])
    rep = json.loads(out)
    assert code == 0
    assert rep["hull"]["hull_dim"] == built["hull"]["hull_dim"] == 2
    assert rep["self_orthogonal"] and rep["mds"] == built["mds"]
    assert rep["witness"]["h"] == [[0, 0, 0, 1]] and rep["witness"]["deg_h"] == 0


def test_verify_random(capsys):
    code, out, _ = run(capsys, ["verify", "--random", "4,2", "--field", "3,2", "--e", "1"])
    rep = json.loads(out)
    assert code == 0 and rep["hull"]["n"] == 4 and rep["mds"] == "proved-mds"
    code2, out2, _ = run(capsys, ["verify", "--random", "4,2", "--field", "3,2", "--e", "1"])
    assert json.loads(out2)["spec"] == rep["spec"]
    _, out3, _ = run(capsys, ["verify", "--random", "4,2", "--field", "3,2", "--e", "1", "--seed", "9"])
    assert json.loads(out3)["spec"] != rep["spec"]


def test_verify_rejects_k0(tmp_path, capsys):
    spec = {"field": {"p": 3, "h": 2}, "a": [[0, 0], [0, 1]], "v": [[0, 1], [0, 1]], "k": 0}
    code, _, _ = run(capsys, ["verify", write(tmp_path, "s.json", spec), "--e", "0"])
    assert code == 2


EXAMPLE1_CSV = "p,h,n,deg_h,e_prime,k_max\n3,8,6561,0,1,1640\n3,8,6561,0,3,235\n3,8,6561,0,5,27\n3,8,6561,0,7,3\n"
EXAMPLE5_CSV = "p,h,n,deg_h,e_prime,k_max\n3,6,520,7,0,256\n3,6,520,7,2,52\n3,6,520,7,4,7\n"


def test_bounds_reproduce_byte_exact(capsys):
    assert run(capsys, ["bounds", "--reproduce", "example1"])[1] == EXAMPLE1_CSV
    assert run(capsys, ["bounds", "--reproduce", "example5", "--csv"])[1] == EXAMPLE5_CSV
    assert run(capsys, ["reproduce", "example1"])[1] == EXAMPLE1_CSV


def test_bounds_single_query(capsys):
    code, out, _ = run(capsys, ["bounds", "--field", "3,4", "--n", "9", "--deg-h", "0", "--e-prime", "1", "--json"])
    rows = json.loads(out)
    assert code == 0 and rows[0]["k_max"] == 2 and rows[0]["exceeds_hermitian"] is True


def test_bounds_missing_args(capsys):
    assert run(capsys, ["bounds", "--field", "3,4"])[0] == 2


def test_reproduce_tables(capsys):
    out = run(capsys, ["reproduce", "remark6"])[1]
    assert out.splitlines()[1].split(",")[4] == "2" and out.splitlines()[2].split(",")[4] == "4"
    out = run(capsys, ["reproduce", "table3"])[1]
    assert "8,1,1 3 5 7" in out.splitlines()
    out = run(capsys, ["reproduce", "table5", "--json"])[1]
    assert {"p": 3, "t": 2, "m": 1, "h": 4, "q": 81} in json.loads(out)


def test_enumerate(capsys):
    code, out, _ = run(capsys, ["enumerate", "--class", "5", "--q-max", "100"])
    lines = out.splitlines()
    assert code == 0 and lines[0] == "class,p,h,q,e,e_prime,t,m,w,z,n,k_min,k_max,l_min,l_max"
    assert "5,3,4,81,1,1,2,1,3,1,9,1,2,0,2" in lines
    code, out, _ = run(capsys, ["enumerate", "--class", "3", "--q-max", "10000", "--h", "3"])
    assert out.splitlines() == ["class,p,h,q,e,e_prime,t,m,w,z,n,k_min,k_max,l_min,l_max"]
    assert run(capsys, ["enumerate", "--class", "9", "--q-max", "100"])[0] == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["bounds", "--n", "x"])
    assert exc.value.code == 2


def test_module_entry_point(tmp_path):
    path = write(tmp_path, "r.json", request(l=0))
    proc = subprocess.run([sys.executable, "-m", "galois_hulls", "construct", path, "--threads", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["hull"]["hull_dim"] == 0


def test_oracle_disagreement_exit_4(tmp_path, capsys, monkeypatch):
    from galois_hulls import codes

    real = codes.hull

    def off_by_one(C, e):
        rep = real(C, e)
        return codes.HullReport(rep.e, rep.dim + 1, rep.basis)

    monkeypatch.setattr(codes, "hull", off_by_one)
    code, out, _ = run(capsys, ["construct", write(tmp_path, "r.json", request())])
    assert code == 4 and json.loads(out)["agreement"] is False
