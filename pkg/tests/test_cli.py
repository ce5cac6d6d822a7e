"""CLI driver: exit codes, JSON/CSV schema, determinism, resume, plots."""

import json

from qcv import cli_report as cli


def run(args, out):
    return cli.verify_main(args + ["--out", str(out)])


def test_exit_codes_and_outputs(tmp_path):
    rc = run(["sums", "--from", "5", "--to", "9"], tmp_path)
    assert rc == 1  # the printed S2/S3 display records fail honestly
    data = json.loads((tmp_path / "certificates.json").read_text())
    assert set(data) == {"certificates", "meta"}
    assert data["meta"]["config_hash"]
    for cert in data["certificates"]:
        assert set(cert) == {"check_id", "params", "claimed", "computed",
                             "verdict", "mode", "precision_bits",
                             "runtime_ms", "notes"}
        assert cert["runtime_ms"] == 0
    ids = [c["check_id"] for c in data["certificates"]]
    assert len(ids) == len(set(ids))
    assert (tmp_path / "sums.csv").exists()
    assert (tmp_path / "checkpoint.log").exists()


def test_all_pass_suite_exit_zero(tmp_path):
    rc = run(["one-minus-x2"], tmp_path)
    assert rc == 0
    data = json.loads((tmp_path / "certificates.json").read_text())
    ids = [c["check_id"] for c in data["certificates"]]
    assert len(ids) == len(set(ids))


def test_float64_mode_cannot_pass(tmp_path):
    rc = run(["one-minus-x2", "--mode", "float64"], tmp_path)
    assert rc == 2  # everything would pass; screening caps at Inconclusive


def test_usage_errors(tmp_path):
    assert cli.verify_main(["nonsense", "--out", str(tmp_path)]) == 64
    assert run(["sums", "--from", "9", "--to", "5"], tmp_path) == 64


def test_determinism_byte_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run(["pointwise", "--from", "6", "--to", "30"], a)
    run(["pointwise", "--from", "6", "--to", "30"], b)
    assert (a / "certificates.json").read_bytes() == (b / "certificates.json").read_bytes()
    assert (a / "pointwise.csv").read_bytes() == (b / "pointwise.csv").read_bytes()


def test_resume_identical_and_mismatch(tmp_path):
    full, part = tmp_path / "full", tmp_path / "part"
    run(["sums", "--from", "5", "--to", "13"], full)
    # simulate an interrupted run: keep the header and first 5 records
    part.mkdir()
    lines = (full / "checkpoint.log").read_text().splitlines()
    (part / "checkpoint.log").write_text("\n".join(lines[:6]) + "\n")
    rc = cli.verify_main(["sums", "--from", "5", "--to", "13", "--resume",
                          "--out", str(part)])
    assert rc in (0, 1)
    assert (part / "certificates.json").read_bytes() == \
        (full / "certificates.json").read_bytes()
    # config mismatch refuses
    rc = cli.verify_main(["sums", "--from", "5", "--to", "17", "--resume",
                          "--out", str(part)])
    assert rc == 65
    # resume on an empty checkpoint runs fully
    empty = tmp_path / "empty"
    empty.mkdir()
    rc = cli.verify_main(["sums", "--from", "5", "--to", "13", "--resume",
                          "--out", str(empty)])
    assert (empty / "certificates.json").read_bytes() == \
        (full / "certificates.json").read_bytes()


def test_qcv_out_env_override(tmp_path, monkeypatch):
    target = tmp_path / "env-target"
    monkeypatch.setenv("QCV_OUT", str(target))
    cli.verify_main(["sums", "--from", "5", "--to", "5", "--out",
                     str(tmp_path / "ignored")])
    assert (target / "certificates.json").exists()
    assert not (tmp_path / "ignored").exists()


def test_induction_csv_columns(tmp_path):
    run(["induction", "--from", "41", "--to", "61"], tmp_path)
    header = (tmp_path / "induction.csv").read_text().splitlines()[0]
    assert header.split(",")[:3] == ["n", "g_at_lower_endpoint", "g_at_upper_endpoint"]


def test_cn_csv_columns(tmp_path):
    run(["cn", "--from", "6", "--to", "10"], tmp_path)
    lines = (tmp_path / "cn.csv").read_text().splitlines()
    assert lines[0] == "n,c_n_lo,c_n_hi,claimed,verdict"
    assert len(lines) == 6


def test_plot_scatter(tmp_path):
    csv_path = tmp_path / "one.csv"
    csv_path.write_text("x,y\n1.5,-2.25\n")
    svg = tmp_path / "one.svg"
    rc = cli.report_main(["plot", "--input", str(csv_path), "--x", "x",
                          "--y", "y", "--output", str(svg)])
    assert rc == 0
    text = svg.read_text()
    assert text.startswith("<svg")
    assert text.count("<circle") == 1
    # determinism
    svg2 = tmp_path / "two.svg"
    cli.report_main(["plot", "--input", str(csv_path), "--x", "x",
                     "--y", "y", "--output", str(svg2)])
    assert svg.read_bytes() == svg2.read_bytes()
    rc = cli.report_main(["plot", "--input", str(csv_path), "--x", "missing",
                          "--y", "y", "--output", str(svg)])
    assert rc == 64


def test_d0_override_runs(tmp_path):
    rc = run(["induction", "--from", "41", "--to", "45", "--d0", "17"], tmp_path)
    data = json.loads((tmp_path / "certificates.json").read_text())
    sweep = [c for c in data["certificates"] if c["check_id"] == "induction/n=41"]
    assert sweep and sweep[0]["params"]["d0"] == "17"
