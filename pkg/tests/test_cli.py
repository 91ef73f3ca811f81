"""Command-line front end: commands, exit codes, determinism, formats."""

import json

import numpy as np
import pytest

from mpshift import MatrixPoly, LaurentPoly, read_poly, write_poly
from mpshift.cli import main, parse_complex
from mpshift.fixtures import p1 as fixture_p1


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# --- literals ---

def test_parse_complex_literals():
    assert parse_complex("1") == 1.0
    assert parse_complex("-2.5") == -2.5
    assert parse_complex("1+2i") == 1 + 2j
    assert parse_complex("1.5-0.25i") == 1.5 - 0.25j
    assert parse_complex("1e-3+2e-4i") == 1e-3 + 2e-4j
    assert parse_complex("inf") == complex(np.inf)


def test_parse_complex_rejects_garbage():
    from mpshift.cli import UsageError

    with pytest.raises(UsageError):
        parse_complex("2i+1")


# --- fixture ---

def test_fixture_p1_contents(tmp_path, capsys):
    out = tmp_path / "p1.mp.json"
    code, _, _ = run(capsys, "fixture", "p1", "-o", str(out))
    assert code == 0
    poly = read_poly(out)
    assert np.array_equal(poly.coeffs[0], -np.array([[1.0, 1.0], [0.0, 1.0]], dtype=complex))
    assert np.array_equal(poly.coeffs[1], np.array([[4.0, 3.0], [1.0, 4.0]], dtype=complex))
    assert np.array_equal(poly.coeffs[2], -np.array([[3.0, 0.0], [1.0, 2.0]], dtype=complex))


def test_fixture_p2_and_p3(tmp_path, capsys):
    for name, n, d in (("p2", 3, 2), ("p3", 5, 4)):
        out = tmp_path / f"{name}.mp.json"
        code, _, _ = run(capsys, "fixture", name, "-o", str(out))
        assert code == 0
        poly = read_poly(out)
        assert poly.n == n and poly.d == d


def test_fixture_unknown_name_exits_2(tmp_path, capsys):
    code, _, _ = run(capsys, "fixture", "p9", "-o", str(tmp_path / "x.mp.json"))
    assert code == 2


# --- eig ---

def test_eig_p1_table(tmp_path, capsys):
    path = tmp_path / "p1.mp.json"
    write_poly(fixture_p1(), path)
    code, out, _ = run(capsys, "eig", str(path))
    assert code == 0
    assert "0.333333333333333" in out
    assert "0.5" in out
    assert out.count("0.9999999") + out.count("1.0000000") >= 2


def test_eig_p2_has_two_inf_lines(tmp_path, capsys):
    from mpshift.fixtures import p2

    path = tmp_path / "p2.mp.json"
    write_poly(p2(), path)
    code, out, _ = run(capsys, "eig", str(path))
    assert code == 0
    assert sum(line.startswith("Inf") for line in out.splitlines()) == 2


def test_eig_json_format(tmp_path, capsys):
    path = tmp_path / "p1.mp.json"
    write_poly(fixture_p1(), path)
    code, out, _ = run(capsys, "eig", str(path), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["eigenvalues"]) == 4


def test_eig_empty_file_exits_2(tmp_path, capsys):
    path = tmp_path / "empty.mp.json"
    path.write_text("", encoding="utf-8")
    code, _, err = run(capsys, "eig", str(path))
    assert code == 2 and "error" in err


def test_eig_missing_file_exits_2(tmp_path, capsys):
    code, _, _ = run(capsys, "eig", str(tmp_path / "nope.mp.json"))
    assert code == 2


# --- shift ---

def canonical_bytes(path, tmp_path, tag):
    """Re-serialize with signed zeros canonicalized (the float formatting itself
    is already shortest-round-trip)."""
    p = read_poly(path)
    coeffs = [np.asarray(c) + (0.0 + 0.0j) for c in p.coeffs]
    out = tmp_path / f"canon-{tag}.mp.json"
    write_poly(MatrixPoly(coeffs), out)
    return out.read_bytes()


def test_shift_p1_regression_byte_for_byte(tmp_path, capsys):
    src = tmp_path / "p1.mp.json"
    dst = tmp_path / "p1s.mp.json"
    write_poly(fixture_p1(), src)
    code, out, _ = run(
        capsys, "shift", str(src), "--lambda", "1", "--mu", "0",
        "--u", "1,0", "--v", "1,0", "-o", str(dst),
    )
    assert code == 0 and "PASS" in out
    expected = MatrixPoly(
        [
            -np.array([[0.0, 1.0], [0.0, 1.0]]),
            np.array([[1.0, 3.0], [0.0, 4.0]]),
            -np.array([[3.0, 0.0], [1.0, 2.0]]),
        ]
    )
    got = read_poly(dst)
    for a, b in zip(got.coeffs, expected.coeffs):
        assert np.array_equal(a, b)  # integer-exact
    ref = tmp_path / "expected.mp.json"
    write_poly(expected, ref)
    assert canonical_bytes(dst, tmp_path, "got") == canonical_bytes(ref, tmp_path, "ref")


def test_shift_noop_warns(tmp_path, capsys):
    src = tmp_path / "p1.mp.json"
    dst = tmp_path / "out.mp.json"
    write_poly(fixture_p1(), src)
    code, _, err = run(
        capsys, "shift", str(src), "--lambda", "1", "--mu", "1",
        "--u", "1,0", "-o", str(dst),
    )
    assert code == 0
    assert "no-op" in err
    back = read_poly(dst)
    for a, b in zip(back.coeffs, fixture_p1().coeffs):
        assert np.array_equal(a, b)


def test_shift_mode_conflict_exits_2(tmp_path, capsys):
    src = tmp_path / "p1.mp.json"
    write_poly(fixture_p1(), src)
    code, _, _ = run(
        capsys, "shift", str(src), "--from-inf", "--to-inf", "--mu", "1",
        "-o", str(tmp_path / "x.mp.json"),
    )
    assert code == 2


def test_shift_auto_vector(tmp_path, capsys):
    src = tmp_path / "p1.mp.json"
    dst = tmp_path / "auto.mp.json"
    write_poly(fixture_p1(), src)
    code, out, _ = run(
        capsys, "shift", str(src), "--lambda", "1", "--mu", "0", "-o", str(dst)
    )
    assert code == 0 and "PASS" in out
    got = read_poly(dst)
    expected = MatrixPoly(
        [
            -np.array([[0.0, 1.0], [0.0, 1.0]]),
            np.array([[1.0, 3.0], [0.0, 4.0]]),
            -np.array([[3.0, 0.0], [1.0, 2.0]]),
        ]
    )
    for a, b in zip(got.coeffs, expected.coeffs):
        assert np.allclose(a, b, atol=1e-12)


def test_shift_from_inf_p2_sequence(tmp_path, capsys):
    from mpshift.fixtures import p2

    src = tmp_path / "p2.mp.json"
    mid = tmp_path / "t1.mp.json"
    dst = tmp_path / "t2.mp.json"
    write_poly(p2(), src)
    code, out, _ = run(
        capsys, "shift", str(src), "--from-inf", "--mu", "1", "--u", "1,0,0",
        "-o", str(mid),
    )
    assert code == 0 and "PASS" in out
    code, out, _ = run(
        capsys, "shift", str(mid), "--from-inf", "--mu", "0.5", "--u", "1,0,0",
        "-o", str(dst),
    )
    assert code == 0 and "PASS" in out
    final = read_poly(dst)
    assert np.array_equal(
        final.coeffs[2],
        np.array([[2.0, 0.0, 0.0], [2.0, 1.0, 0.0], [2.0, 0.0, 1.0]], dtype=complex),
    )


def test_shift_left_side(tmp_path, capsys):
    from mpshift.fixtures import p3

    src = tmp_path / "p3.mp.json"
    dst = tmp_path / "left.mp.json"
    write_poly(p3(), src)
    code, out, _ = run(
        capsys, "shift", str(src), "--lambda", "1", "--mu", "0", "--side", "left",
        "-o", str(dst),
    )
    assert code == 0 and "PASS" in out


def test_shift_multi(tmp_path, capsys):
    from mpshift.fixtures import p1 as f1

    src = tmp_path / "p1.mp.json"
    dst = tmp_path / "multi.mp.json"
    spec = tmp_path / "packet.json"
    write_poly(f1(), src)
    spec.write_text(json.dumps({"lambdas": ["1"], "targets": ["0"]}), encoding="utf-8")
    code, out, _ = run(capsys, "shift", str(src), "--multi", str(spec), "-o", str(dst))
    assert code == 0 and "PASS" in out


def test_shift_json_report(tmp_path, capsys):
    src = tmp_path / "p1.mp.json"
    dst = tmp_path / "out.mp.json"
    write_poly(fixture_p1(), src)
    code, out, _ = run(
        capsys, "shift", str(src), "--lambda", "1", "--mu", "0", "--u", "1,0",
        "-o", str(dst), "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["oracle"]["passed"] is True


# --- factor ---

def _write_scalar_quad(path):
    write_poly(
        LaurentPoly(-1, (np.array([[-0.25]]), np.array([[1.0]]), np.array([[-0.25]]))),
        path,
    )


def test_factor_scalar_quad(tmp_path, capsys):
    path = tmp_path / "quad.mp.json"
    _write_scalar_quad(path)
    code, out, _ = run(capsys, "factor", str(path), "--quad")
    assert code == 0
    assert "0.2679491924311227" in out


def test_factor_both_reports_w(tmp_path, capsys):
    path = tmp_path / "quad.mp.json"
    _write_scalar_quad(path)
    code, out, _ = run(capsys, "factor", str(path), "--quad", "--both")
    assert code == 0
    assert "1.1547005383792515" in out


def test_factor_quad_on_polynomial_exits_2(tmp_path, capsys):
    path = tmp_path / "p1.mp.json"
    write_poly(fixture_p1(), path)
    code, _, _ = run(capsys, "factor", str(path), "--quad")
    assert code == 2


def test_factor_polynomial_path(tmp_path, capsys):
    # shifted P3 has a genuine canonical factorization
    from mpshift import ShiftSpec, right_shift_poly
    from mpshift.fixtures import p3

    shifted = right_shift_poly(p3(), ShiftSpec(1.0, 0.0, np.ones(5), np.ones(5) / 5))
    path = tmp_path / "p3s.mp.json"
    write_poly(shifted, path)
    code, out, _ = run(capsys, "factor", str(path), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["ucoeffs"]) == 4  # degree d-1 quotient of a quartic


def test_factor_unfactorable_exits_1(tmp_path, capsys):
    from mpshift.fixtures import p3

    path = tmp_path / "p3.mp.json"
    write_poly(p3(), path)
    code, _, err = run(capsys, "factor", str(path))
    assert code == 1 and "error" in err


# --- solve ---

def test_solve_p3(tmp_path, capsys):
    from mpshift.fixtures import p3

    path = tmp_path / "p3.mp.json"
    write_poly(p3(), path)
    code, out, _ = run(capsys, "solve", str(path), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["iterations"] - 12) <= 2
    assert payload["residual"] <= 1e-10


def test_solve_p3_shifted(tmp_path, capsys):
    from mpshift.fixtures import p3

    path = tmp_path / "p3.mp.json"
    write_poly(p3(), path)
    code, out, _ = run(
        capsys, "solve", str(path), "--shift", "1,0",
        "--u", "1,1,1,1,1", "--v", "0.2,0.2,0.2,0.2,0.2", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["iterations"] - 6) <= 2
    assert payload["shifted"] is True


def test_solve_degree_one(tmp_path, capsys):
    path = tmp_path / "pencil.mp.json"
    write_poly(MatrixPoly([-np.diag([0.3, 0.5]), np.eye(2)]), path)
    code, out, _ = run(capsys, "solve", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["iterations"] == 1


def test_solve_splitting_failure_exits_1(tmp_path, capsys):
    path = tmp_path / "circle.mp.json"
    write_poly(
        MatrixPoly([np.array([[1j]]), np.array([[-1 - 1j]]), np.array([[1.0]])]), path
    )
    code, _, err = run(capsys, "solve", str(path))
    assert code == 1 and "error" in err


# --- check ---

def test_check_pass_and_fail(tmp_path, capsys):
    src = tmp_path / "p1.mp.json"
    dst = tmp_path / "p1s.mp.json"
    write_poly(fixture_p1(), src)
    run(
        capsys, "shift", str(src), "--lambda", "1", "--mu", "0", "--u", "1,0",
        "--v", "1,0", "-o", str(dst),
    )
    code, out, _ = run(capsys, "check", str(src), str(dst), "--removed", "1", "--added", "0")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "check", str(src), str(dst), "--removed", "", "--added", "")
    assert code == 1 and "FAIL" in out


# --- determinism ---

def test_shift_is_byte_deterministic(tmp_path, capsys):
    src = tmp_path / "p1.mp.json"
    write_poly(fixture_p1(), src)
    outs = []
    logs = []
    for name in ("a.mp.json", "b.mp.json"):
        dst = tmp_path / name
        code, out, _ = run(
            capsys, "shift", str(src), "--lambda", "0.5", "--mu", "0.25",
            "-o", str(dst), "--seed", "42",
        )
        assert code == 0
        outs.append(dst.read_bytes())
        logs.append(out.replace(name, "OUT"))
    assert outs[0] == outs[1]
    assert logs[0] == logs[1]


def test_eig_is_deterministic(tmp_path, capsys):
    from mpshift.fixtures import p3

    path = tmp_path / "p3.mp.json"
    write_poly(p3(), path)
    _, out1, _ = run(capsys, "eig", str(path), "--seed", "7")
    _, out2, _ = run(capsys, "eig", str(path), "--seed", "7")
    assert out1 == out2


# --- remaining command surfaces ---

def test_eig_left_vectors_flag(tmp_path, capsys):
    path = tmp_path / "p1.mp.json"
    write_poly(fixture_p1(), path)
    code, out, _ = run(capsys, "eig", str(path), "--left", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert all(row["left"] is not None for row in payload["eigenvalues"])


def test_shift_to_inf_cli(tmp_path, capsys):
    path = tmp_path / "p1.mp.json"
    dst = tmp_path / "out.mp.json"
    write_poly(fixture_p1(), path)
    code, out, _ = run(
        capsys, "shift", str(path), "--to-inf", "--lambda", "0.5", "-o", str(dst)
    )
    assert code == 0 and "PASS" in out
    lead = read_poly(dst).coeffs[-1]
    assert abs(np.linalg.det(lead)) <= 1e-8  # one eigenvalue went to infinity


def test_shift_double_cli(tmp_path, capsys):
    from mpshift.fixtures import p1 as f1

    path = tmp_path / "p1.mp.json"
    dst = tmp_path / "out.mp.json"
    write_poly(f1(), path)
    code, out, _ = run(
        capsys, "shift", str(path), "--double",
        "--lambda", "0.3333333333333333", "--mu", "0.1",
        "--lambda2", "1", "--mu2", "2", "-o", str(dst),
    )
    assert code == 0 and "PASS" in out


def test_shift_palindromic_cli(tmp_path, capsys):
    rng = np.random.default_rng(401)
    a0 = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    r = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    p = MatrixPoly([a0, r + r.conj().T, a0.conj().T])
    from mpshift import polyeig

    pair = next(
        q for q in sorted(polyeig(p).finite(), key=lambda q: abs(q.value))
        if abs(abs(q.value) - 1.0) > 0.05
    )
    lam = complex(pair.value)
    path = tmp_path / "pal.mp.json"
    dst = tmp_path / "out.mp.json"
    write_poly(p, path)
    lam_txt = f"{lam.real!r}{'+' if lam.imag >= 0 else '-'}{abs(lam.imag)!r}i"
    code, out, _ = run(
        capsys, "shift", str(path), "--palindromic",
        f"--lambda={lam_txt}", "--mu", "0.25", "-o", str(dst),
    )
    assert code == 0 and "PASS" in out
    got = read_poly(dst)
    assert np.array_equal(got.coeffs[0], got.coeffs[2].conj().T)


def test_shift_multi_m2_cli(tmp_path, capsys):
    from mpshift.fixtures import p2

    path = tmp_path / "p2.mp.json"
    dst = tmp_path / "out.mp.json"
    spec = tmp_path / "packet.json"
    write_poly(p2(), path)
    # note: the +-i pair of this fixture shares one real eigenvector, so a
    # {i, -i} packet is genuinely dependent; pair i with i*sqrt(3) instead
    spec.write_text(
        json.dumps(
            {"lambdas": ["0+1i", "0+1.7320508075688772i"], "targets": ["0.3", "-0.3"]}
        ),
        encoding="utf-8",
    )
    code, out, _ = run(capsys, "shift", str(path), "--multi", str(spec), "-o", str(dst))
    assert code == 0 and "PASS" in out


def test_shift_multi_dependent_packet_exits_2(tmp_path, capsys):
    from mpshift.fixtures import p2

    path = tmp_path / "p2.mp.json"
    spec = tmp_path / "packet.json"
    write_poly(p2(), path)
    spec.write_text(
        json.dumps({"lambdas": ["0+1i", "0-1i"], "targets": ["0.3", "-0.3"]}),
        encoding="utf-8",
    )
    code, _, err = run(
        capsys, "shift", str(path), "--multi", str(spec), "-o", str(tmp_path / "x.mp.json")
    )
    assert code == 2 and "error" in err


def test_shift_laurent_input_cli(tmp_path, capsys):
    rng = np.random.default_rng(409)
    lam = 0.5 + 0.2j
    u = np.zeros(3, dtype=complex)
    u[0] = 1.0
    p = LaurentPoly(-1, [rng.standard_normal((3, 3)) for _ in range(3)])
    from conftest import plant_right

    p = plant_right(p, lam, u)
    path = tmp_path / "laur.mp.json"
    dst = tmp_path / "out.mp.json"
    write_poly(p, path)
    code, out, _ = run(
        capsys, "shift", str(path), "--lambda", "0.5+0.2i", "--mu", "0.1",
        "--u", "1,0,0", "-o", str(dst),
    )
    assert code == 0 and "PASS" in out
    assert isinstance(read_poly(dst), LaurentPoly)


def test_check_fit_constant_cli(tmp_path, capsys):
    from mpshift import shift_from_infinity
    from mpshift.fixtures import p2

    src = tmp_path / "p2.mp.json"
    dst = tmp_path / "t1.mp.json"
    write_poly(p2(), src)
    write_poly(shift_from_infinity(p2(), 1.0, [1, 0, 0]), dst)
    code, out, _ = run(
        capsys, "check", str(src), str(dst), "--added", "1", "--fit-constant"
    )
    assert code == 0 and "PASS" in out


def test_eig_numeric_failure_exits_1(tmp_path, capsys):
    # det A(z) identically zero: a numeric failure, not a parse error
    degenerate = MatrixPoly(
        [np.array([[1.0, 0.0], [0.0, 0.0]]), np.array([[0.0, 1.0], [0.0, 0.0]])]
    )
    path = tmp_path / "degen.mp.json"
    write_poly(degenerate, path)
    code, _, err = run(capsys, "eig", str(path))
    assert code == 1 and "error" in err
