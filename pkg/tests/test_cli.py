import subprocess
import sys

import pytest

from ganz.certfile import dumps
from ganz.cli import run
from ganz.instances import shipped_radical_certs, sd
from ganz.parser import parse
from ganz.certificates import ConeCert


@pytest.fixture
def cert_file(tmp_path):
    name, s, cert = shipped_radical_certs()[0]
    path = tmp_path / "cert.json"
    path.write_text(dumps(s, cert))
    return str(path)


def test_radical_verify_valid(cert_file):
    code, out = run(["radical-verify", cert_file])
    assert code == 0 and "result: Valid" in out


def test_radical_verify_invalid(tmp_path):
    name, s, cert = shipped_radical_certs()[0]
    bad = type(cert)(parse("x1/(1+x1^2) + eps", 1), cert.generators, cert.coeffs)
    path = tmp_path / "bad.json"
    path.write_text(dumps(s, bad))
    code, out = run(["radical-verify", str(path)])
    assert code == 1 and "result: Invalid" in out and "residual:" in out


def test_bad_file_is_usage_error(tmp_path):
    path = tmp_path / "x.json"
    path.write_text("{}")
    assert run(["radical-verify", str(path)])[0] == 2
    assert run(["radical-verify", str(tmp_path / "missing.json")])[0] == 2


def test_cone_verify(tmp_path):
    s = sd(["x1", "1-x1"])
    cert = ConeCert.from_mapping({(1, 2): [parse("1", 1)]})
    path = tmp_path / "cone.json"
    path.write_text(dumps(s, cert))
    code, out = run(["cone-verify", str(path), "--seed", "3", "--count", "20"])
    assert code == 0, out
    assert run(["cone-verify", str(path), "--b", "1/2"])[0] == 0


def test_probe_seed7_deterministic():
    argv = ["probe-integrality", "--h", "1/x1", "--set", "p: x1", "--seed", "7", "--count", "200"]
    a, b = run(argv), run(argv)
    assert a == b and a[0] == 1
    assert "witness: b=(" in a[1] and "seed=7" in a[1]


def test_probe_no_violation_and_empty():
    code, out = run(["probe-integrality", "--h", "1/(1+x1)", "--set", "p: x1", "--count", "50"])
    assert code == 0 and "NoViolationFound" in out
    code, out = run(["probe-integrality", "--h", "1", "--set", "p: -1-x1^2", "--count", "10"])
    assert code == 3


def test_probe_grid():
    code, out = run(["probe-integrality", "--h", "1/x1", "--set", "p: x1", "--grid-step", "1/2", "--radius", "1", "--eps-orders", "1"])
    assert code == 1 and "grid" in out


def test_probe_bounded():
    code, out = run(["probe-bounded", "--h", "x1", "--a", "1", "--set", "p: x1", "--seed", "1"])
    assert code == 1
    code, out = run(["probe-bounded", "--h", "5", "--a", "1", "--set", "p: x1", "--seed", "1"])
    assert code == 0
    assert run(["probe-bounded", "--h", "x1", "--set", "p: x1"])[0] == 2


def test_values_and_signs():
    code, out = run(["val", "--h", "1/x1", "--b", "4*eps"])
    assert code == 0 and "valuation: -1" in out
    code, out = run(["sign", "--h=-3*eps+eps^2"])
    assert code == 0 and "sign: -1" in out
    code, out = run(["near-val", "--h", "x1^2+eps", "--b", "0", "--d", "1"])
    assert "value: (0, 1)" in out
    code, out = run(["near-val", "--h", "(x1^2+eps^3)/eps^2", "--w", "1"])
    assert "residue: x1^2" in out


def test_degenerate_direction_exit_3():
    code, out = run(["near-val", "--h", "x1-x2", "--b", "0,0", "--d", "1,1"])
    assert code == 3


def test_cone_search():
    code, out = run(["cone-search", "--set", "p: x1; 1-x1", "--h", "x1-x1^2", "--degree-bound", "2"])
    assert code == 0 and "subset=[1,2]" in out
    code, out = run(["cone-search", "--set", "p: x1", "--h=-x1"])
    assert code == 1 and "Unknown" in out


def test_order_pipeline():
    code, out = run(["order-pipeline", "--set", "p: x1; x1^2+eps^3", "--w", "1"])
    assert code == 0 and out.count("-> +1") == 2
    code, out = run(["order-pipeline", "--set", "p: -x1^2", "--w", "1"])
    assert code == 3 and "NotFound" in out


def test_usage_errors():
    assert run([])[0] == 2
    assert run(["bogus"])[0] == 2
    assert run(["parse", "--h", "x1 + * 2"])[0] == 2
    assert run(["parse", "--h", "3/0"])[0] == 2
    assert run(["near-val", "--h", "x1", "--b", "1,2", "--d", "1"])[0] == 2
    assert run(["probe-integrality", "--h", "x1", "--set", "q: x1"])[0] == 2


def test_console_entry_point(cert_file):
    proc = subprocess.run([sys.executable, "-m", "ganz.cli", "radical-verify", cert_file], capture_output=True, text=True)
    assert proc.returncode == 0 and "Valid" in proc.stdout


def test_selftest():
    code, out = run(["selftest"])
    assert code == 0, out
    assert out.count("[PASS]") == 11 and "kernel backend:" in out


@pytest.mark.parametrize(
    "argv, code",
    [
        (["probe-integrality", "--h", "x1", "--set", "p: x1", "--grid-step", "0"], 2),
        (["probe-integrality", "--h", "x1", "--set", "p: x1", "--count", "-3"], 2),
        (["near-val", "--h", "x1", "--b", "0", "--d", "0"], 2),
        (["probe-bounded", "--h", "x1", "--a", "0", "--set", "p: x1"], 2),
        (["cone-search", "--h", "x1", "--set", "p: x1", "--degree-bound", "0"], 2),
        (["order-pipeline", "--set", "p: 0", "--w", "1"], 1),
        (["order-pipeline", "--set", "p: x1 | g: 1/x1", "--w", "1"], 1),
        (["val", "--h", "1/x1", "--b", "0"], 3),
    ],
)
def test_bad_inputs_map_to_exit_codes(argv, code):
    assert run(argv)[0] == code


def test_never_raises_on_random_argv():
    import random

    rng = random.Random(99)
    exprs = ["x1", "1/x1", "x1-x2", "eps", "0", "x1^2+eps", "(x1", "3/0", "-x1", "x2/(x1-1)"]
    points = ["0", "1/2", "eps", "0,0", "1,-1", "4*eps,1", "0,0,0"]
    for _ in range(300):
        cmd = rng.choice(["val", "sign", "near-val", "cone-search", "order-pipeline", "probe-integrality", "probe-bounded", "parse"])
        argv = [cmd]
        for flag, pool in (("--h", exprs), ("--a", exprs), ("--b", points), ("--d", points), ("--w", ["1", "1,0", "0,-1"])):
            if rng.random() < 0.5:
                argv.append(f"{flag}={rng.choice(pool)}")
        if rng.random() < 0.7:
            argv.append(f"--set=p: {rng.choice(exprs)}; {rng.choice(exprs)}")
        argv += ["--count", "5"]
        code, out = run(argv)
        assert code in (0, 1, 2, 3), argv
