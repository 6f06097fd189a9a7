"""Command-line interface: outputs, exit codes, file and stdio pipelines."""

import json
import subprocess
import sys

import numpy as np
import pytest

from swsc import corpus
from swsc.cli import run
from swsc.coder import HEADER_BYTES


def test_params_command_prints_derived_constants(capsys):
    assert run(["params", "--sigma", "256", "--lambda", "2", "--c", "10"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "sigma=256" in out
    assert "ell=1280" in out
    assert "threshold=80" in out
    assert "l_max=4" in out
    assert "width=8" in out
    assert "delta=2.528771" in out


def test_params_command_json(capsys):
    assert run(["params", "--sigma", "4096", "--lambda", "1.5", "--c", "2",
                "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["params"] == {"sigma": 4096, "lambda": 1.5, "c": 2,
                             "ell": 6144, "threshold": 24, "l_max": 8,
                             "width": 12}


def test_gen_writes_the_library_bytes(tmp_path):
    out = tmp_path / "corpus.bin"
    assert run(["gen", str(out), "--dist", "zipf", "--sigma", "4096",
                "--n", "500", "--seed", "9", "--s", "1.5"]) == 0
    want = corpus.gen_zipf(4096, 500, s=1.5, seed=9).astype("<u2").tobytes()
    assert out.read_bytes() == want


def test_gen_is_deterministic(tmp_path):
    a, b = tmp_path / "a.bin", tmp_path / "b.bin"
    args = ["--dist", "markov", "--sigma", "64", "--n", "400", "--seed", "3"]
    assert run(["gen", str(a)] + args) == 0
    assert run(["gen", str(b)] + args) == 0
    assert a.read_bytes() == b.read_bytes()


def test_encode_decode_file_roundtrip(tmp_path, capsys):
    raw = tmp_path / "raw.bin"
    packed = tmp_path / "packed.swsc"
    restored = tmp_path / "restored.bin"
    assert run(["gen", str(raw), "--dist", "uniform", "--sigma", "300",
                "--n", "400", "--seed", "5"]) == 0
    assert run(["encode", str(raw), str(packed), "--sigma", "300"]) == 0
    err = capsys.readouterr().err
    assert "n=400" in err
    assert "payload_bits=" in err
    assert packed.stat().st_size > HEADER_BYTES
    assert run(["decode", str(packed), str(restored)]) == 0
    assert restored.read_bytes() == raw.read_bytes()


def test_encode_report_json(tmp_path, capsys):
    raw = tmp_path / "raw.bin"
    packed = tmp_path / "packed.swsc"
    run(["gen", str(raw), "--dist", "zipf", "--sigma", "256", "--n", "3000",
         "--seed", "1"])
    capsys.readouterr()
    assert run(["encode", str(raw), str(packed), "--sigma", "256",
                "--verify-bound", "--json"]) == 0
    doc = json.loads(capsys.readouterr().err)
    assert doc["command"] == "encode"
    assert doc["report"]["n"] == 3000
    assert doc["bound"]["passed"] is True
    assert doc["stats"]["n"] == 3000


def test_verify_bound_text_line(tmp_path, capsys):
    raw = tmp_path / "raw.bin"
    packed = tmp_path / "p.swsc"
    run(["gen", str(raw), "--dist", "zipf", "--sigma", "256", "--n", "3000",
         "--seed", "2"])
    capsys.readouterr()
    assert run(["encode", str(raw), str(packed), "--sigma", "256",
                "--verify-bound"]) == 0
    assert "bound_check=PASS" in capsys.readouterr().err


def test_stats_command(tmp_path, capsys):
    raw = tmp_path / "raw.bin"
    raw.write_bytes(bytes([0, 0, 0, 1]))
    assert run(["stats", str(raw), "--sigma", "256"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "n=4" in out
    assert "distinct=2" in out
    assert "h0=0.811278" in out


def test_stats_json(tmp_path, capsys):
    raw = tmp_path / "raw.bin"
    raw.write_bytes(bytes(range(16)))
    assert run(["stats", str(raw), "--sigma", "16", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["stats"]["n"] == 16
    assert doc["stats"]["h0"] == pytest.approx(4.0)


def test_decode_contradicting_sigma_fails(tmp_path, capsys):
    raw = tmp_path / "raw.bin"
    packed = tmp_path / "p.swsc"
    run(["gen", str(raw), "--dist", "uniform", "--sigma", "64", "--n", "50"])
    run(["encode", str(raw), str(packed), "--sigma", "64"])
    capsys.readouterr()
    assert run(["decode", str(packed), "-", "--sigma", "128"]) == 5
    assert "contradicts" in capsys.readouterr().err
    assert run(["decode", str(packed), str(tmp_path / "out.bin"),
                "--sigma", "64", "--lambda", "2", "--c", "10"]) == 0


def test_exit_code_for_missing_input():
    assert run(["encode", "/nonexistent/path.bin", "-", "--sigma", "64"]) == 3


def test_exit_code_for_corrupt_stream(tmp_path, capsys):
    bad = tmp_path / "bad.swsc"
    bad.write_bytes(b"not a stream at all, nowhere near long enough")
    assert run(["decode", str(bad), "-"]) == 4
    assert "corrupt stream" in capsys.readouterr().err


def test_exit_code_for_symbol_out_of_range(tmp_path, capsys):
    raw = tmp_path / "raw.bin"
    raw.write_bytes(bytes([200]))
    assert run(["encode", str(raw), "-", "--sigma", "100"]) == 5
    assert "parameter error" in capsys.readouterr().err


def test_exit_code_for_too_narrow_symbol_bytes(tmp_path):
    raw = tmp_path / "raw.bin"
    raw.write_bytes(bytes(4))
    assert run(["encode", str(raw), "-", "--sigma", "300",
                "--symbol-bytes", "1"]) == 5


def test_exit_code_for_misaligned_raw_length(tmp_path):
    raw = tmp_path / "raw.bin"
    raw.write_bytes(bytes(3))  # sigma 300 needs 2-byte symbols
    assert run(["encode", str(raw), "-", "--sigma", "300"]) == 5


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as exc:
        run([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["encode", "--sigma"])
    assert exc.value.code == 2


def test_wider_symbol_bytes_accepted(tmp_path):
    raw = tmp_path / "raw.bin"
    out = tmp_path / "out.bin"
    packed = tmp_path / "p.swsc"
    run(["gen", str(raw), "--dist", "uniform", "--sigma", "100", "--n", "64",
         "--symbol-bytes", "4"])
    assert run(["encode", str(raw), str(packed), "--sigma", "100",
                "--symbol-bytes", "4"]) == 0
    assert run(["decode", str(packed), str(out), "--symbol-bytes", "4"]) == 0
    assert out.read_bytes() == raw.read_bytes()


def test_stdio_pipeline_roundtrip():
    base = [sys.executable, "-m", "swsc"]
    gen = subprocess.run(
        base + ["gen", "--dist", "zipf", "--sigma", "1000", "--n", "2000",
                "--seed", "77"],
        capture_output=True, check=True)
    raw = gen.stdout
    assert len(raw) == 4000
    enc = subprocess.run(base + ["encode", "--sigma", "1000"], input=raw,
                         capture_output=True, check=True)
    assert b"payload_bits=" in enc.stderr
    dec = subprocess.run(base + ["decode"], input=enc.stdout,
                         capture_output=True, check=True)
    assert dec.stdout == raw
