import json
import subprocess
import sys

import pytest

from sl2tqft.cli import EXIT_INTERNAL, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, emit_report, execute
from sl2tqft.ring import Scalar


def run(capsys, *argv):
    code = execute(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_class_torus(capsys):
    code, out, _ = run(capsys, "class", "--genus", "1")
    assert code == EXIT_OK
    assert out.strip() == "q^4 + 4q^3 - q^2 - 4q"


def test_class_json_round_trip(capsys):
    code, out, _ = run(capsys, "class", "--genus", "2", "--punctures", "jp:1,mi:1", "--format", "json")
    assert code == EXIT_OK
    value = Scalar.from_json(out.strip())
    assert value.is_polynomial()
    code, out2, _ = run(capsys, "class", "--genus", "2", "--punctures", "jp:1,mi:1", "--method", "closed")
    assert value.render() == out2.strip()


def test_class_both(capsys):
    code, out, _ = run(capsys, "class", "--genus", "1", "--punctures", "jm:2", "--method", "both",
                       "--format", "json")
    assert code == EXIT_OK and json.loads(out)["pass"] is True


def test_class_intro_undefined(capsys):
    code, _, err = run(capsys, "class", "--genus", "1", "--punctures", "jp:1,jm:1",
                       "--method", "closed", "--variant", "intro")
    assert code == EXIT_USAGE and "no case" in err


@pytest.mark.parametrize("argv", [
    ["class"],
    ["class", "--genus", "-1"],
    ["class", "--genus", "1", "--punctures", "jx:1"],
    ["count", "--genus", "1", "--prime", "4"],
    ["count", "--genus", "1", "--prime", "2"],
    ["count", "--genus", "1", "--prime", "3,5"],
    ["verify", "--primes", "6"],
    ["eval", "--word", "D . Dt"],
    ["eval", "--word", "Dt . Q . D"],
    ["matrix", "--op", "pants"],
    ["bogus"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert err.startswith("usage error")


def test_word_error_shows_grammar(capsys):
    _, _, err = run(capsys, "eval", "--word", "Dt . Q . D")
    assert "position 5" in err and "grammar" in err


def test_matrix_json(capsys):
    code, out, _ = run(capsys, "matrix", "--op", "eta-inv", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["basis"][0] == "T1"


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--genus", "1", "--prime", "3")
    assert (code, out.strip()) == (EXIT_OK, "168")


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--word", "Dt . L . D")
    assert (code, out.strip()) == (EXIT_OK, "q^4 + 4q^3 - q^2 - 4q")


def test_verify_small_grid_passes(capsys):
    code, out, _ = run(capsys, "verify", "--max-genus", "1", "--max-punctures", "1", "--primes", "5")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert len(lines) == 2 * 4 * 2
    assert all(line.startswith("PASS") for line in lines)


def test_verify_reports_mismatch_at_three(capsys):
    code, out, _ = run(capsys, "verify", "--max-genus", "1", "--max-punctures", "1", "--primes", "3",
                       "--format", "json")
    assert code == EXIT_MISMATCH
    recs = json.loads(out)
    failing = [r["spec"] for r in recs if not r["pass"]]
    assert failing == [{"genus": 1, "r_plus": 0, "r_minus": 1, "t": 0}]


def test_verify_internal_error(capsys, monkeypatch):
    import sl2tqft.cli as cli
    from sl2tqft.core import Basis
    from sl2tqft.operators import OperatorSet

    good = OperatorSet.from_tables()
    bad = OperatorSet.from_tables(cz_jp=good.cz_jp.replace(Basis.Tp, Basis.T1, 0))
    monkeypatch.setattr(cli, "operators", lambda: bad)
    code, _, err = run(capsys, "verify", "--max-genus", "0", "--max-punctures", "0")
    assert code == EXIT_INTERNAL
    assert "FAIL" in err


def test_adjudicate(capsys):
    code, out, _ = run(capsys, "adjudicate", "--genus", "1", "--punctures", "mi:1")
    assert code == EXIT_OK
    (s5,) = [line for line in out.splitlines() if "closed:section5" in line]
    assert s5.startswith("PASS")
    code, out, _ = run(capsys, "adjudicate", "--genus", "1", "--punctures", "mi:1", "--format", "json")
    assert len(json.loads(out)) == 3


def test_report_ordering_and_empty():
    def rec(g, t, prime=None):
        r = {"spec": {"genus": g, "r_plus": 0, "r_minus": 0, "t": t}, "method_a": "a", "method_b": "b",
             "value_a": 1, "value_b": 1, "pass": True}
        if prime:
            r["prime"] = prime
        return r

    text = emit_report([rec(1, 0, 7), rec(0, 1), rec(1, 0, 5), rec(1, 0)])
    order = [line.split(" b: ")[0] for line in text.splitlines()]
    assert order == [
        "PASS g=0 r+=0 r-=0 t=1 a vs",
        "PASS g=1 r+=0 r-=0 t=0 a vs",
        "PASS g=1 r+=0 r-=0 t=0 p=5 a vs",
        "PASS g=1 r+=0 r-=0 t=0 p=7 a vs",
    ]
    assert emit_report([]) == ""
    assert json.loads(emit_report([], "json")) == []


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sl2tqft", "class", "--genus", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
