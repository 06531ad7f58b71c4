"""End-to-end tests of the command-line interface (run in-process)."""

import json
import os

import pytest

from chebsalem.cli import main
from chebsalem.search import TABLE8


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


# ---------------------------------------------------------------------------
# convert
# ---------------------------------------------------------------------------


def test_convert_from_cheb(capsys):
    payload = run_json(capsys, "convert", "--cheb", "1,0,1")
    assert payload["schema"] == "v1"
    assert payload["cheb"] == [1, 0, 1]
    assert payload["pretty"] == "x^2 - 1"
    assert payload["monomial"]["coeffs"] == ["-1", "0", "1"]


def test_convert_from_monomial(capsys):
    payload = run_json(capsys, "convert", "--coeffs=-1,0,1")
    assert payload["cheb"] == [1, 0, 1]


def test_convert_roundtrip_section_example(capsys):
    payload = run_json(capsys, "convert", "--cheb", "1,-1,0,0,0,-1,1")
    back = run_json(
        capsys, "convert", "--coeffs=" + ",".join(payload["monomial"]["coeffs"])
    )
    assert back["cheb"] == [1, -1, 0, 0, 0, -1, 1]


def test_convert_requires_exactly_one_input(capsys):
    code, _, err = run(capsys, "convert", "--cheb", "1,1", "--coeffs", "1,1")
    assert code == 2
    assert "exactly one" in err
    code, _, _ = run(capsys, "convert")
    assert code == 2


def test_convert_rejects_garbage_integers(capsys):
    code, _, err = run(capsys, "convert", "--cheb", "1,zebra")
    assert code == 2
    assert "comma-separated integers" in err


def test_convert_span_and_classify(capsys):
    payload = run_json(capsys, "convert", "--cheb", "0,0,1", "--span", "--classify")
    assert payload["hyperbolic"] is True
    assert payload["kronecker"] is True
    assert payload["span"]["decimal"].startswith("2.8284271247")


def test_convert_span_fails_without_real_roots(capsys):
    # x^2 + 1 has no real roots: span certification fails, exit code 1
    code, _, err = run(capsys, "convert", "--coeffs", "1,0,1", "--span")
    assert code == 1
    assert "certification failed" in err


def test_convert_digits_control(capsys):
    wide = run_json(capsys, "convert", "--cheb", "0,0,1", "--span")
    narrow = run_json(capsys, "convert", "--cheb", "0,0,1", "--span", "--digits", "4")
    assert narrow["span"]["decimal"] == "2.828"
    assert len(wide["span"]["decimal"]) > len(narrow["span"]["decimal"])


def test_convert_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "convert", "--cheb", "1,0,1", "--out", str(target))
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["pretty"] == "x^2 - 1"


def test_convert_plot_dir(capsys, tmp_path):
    plot_dir = tmp_path / "figs"
    payload = run_json(
        capsys, "convert", "--cheb", "0,0,0,1", "--plot-dir", str(plot_dir)
    )
    for path in payload["plots"]:
        assert os.path.exists(path)
        assert os.path.getsize(path) > 0
        assert os.path.dirname(path) == str(plot_dir)


def test_byte_identical_reruns(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "family", "--spec", "two:h1=1,h2=2,n=2", "--limits", "--out", str(a))
    run(capsys, "family", "--spec", "two:h1=1,h2=2,n=2", "--limits", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


# ---------------------------------------------------------------------------
# family
# ---------------------------------------------------------------------------


def test_family_basic_report(capsys):
    payload = run_json(capsys, "family", "--spec", "an:n=3")
    assert payload["spec"] == "an:n=3"
    assert payload["degree"] == 3
    assert len(payload["coords"]) == 4
    assert payload["complex_pairs"] == 0
    assert payload["roots"]["n_real"] == 3


def test_family_identity_flag(capsys):
    payload = run_json(
        capsys, "family", "--spec", "two:h1=1,h2=2,n=2", "--verify-identity"
    )
    assert payload["identity"] is True
    payload = run_json(capsys, "family", "--spec", "kns:k=1,n=3,s=1", "--verify-identity")
    assert payload["identity"] is True


def test_family_limits_block(capsys):
    payload = run_json(capsys, "family", "--spec", "two:h1=1,h2=2,n=2", "--limits")
    block = payload["limits"]
    assert set(block) == {"lower", "upper", "span", "span_equals_two_minus_lower"}
    assert block["span_equals_two_minus_lower"] is True
    assert block["upper"]["selector"] == "largest_real"
    assert block["lower"]["selector"] == "negative_root"
    assert block["lower"]["poly"]["coeffs"]  # printed limit polynomial


def test_family_limits_kronecker_constants(capsys):
    payload = run_json(capsys, "family", "--spec", "bn:n=4", "--limits")
    block = payload["limits"]
    assert block["lower"]["enclosure"]["lo"] == "-2"
    assert block["upper"]["enclosure"]["hi"] == "2"
    assert "span" not in block


def test_family_classify(capsys):
    payload = run_json(capsys, "family", "--spec", "minus1:k=0,n=2", "--classify")
    assert payload["salem"]["class"] == "SalemLike"
    payload = run_json(capsys, "family", "--spec", "two:h1=1,h2=2,n=2", "--classify")
    assert payload["salem"]["class"] == "NegativeSalemLike"


def test_family_convergence_rows(capsys):
    payload = run_json(
        capsys, "family", "--spec", "minus1:k=0,n=1", "--n-range", "2:4"
    )
    rows = payload["convergence"]
    assert [row["n"] for row in rows] == [2, 3, 4]
    distances = [float(row["distance"]["decimal"]) for row in rows]
    assert distances == sorted(distances, reverse=True)


def test_family_convergence_comma_list(capsys):
    payload = run_json(
        capsys, "family", "--spec", "minus1:k=1,n=1", "--n-range", "3,2"
    )
    assert [row["n"] for row in payload["convergence"]] == [2, 3]


def test_family_bad_spec(capsys):
    code, _, err = run(capsys, "family", "--spec", "nope:n=3")
    assert code == 2
    assert "error:" in err


def test_family_bad_range(capsys):
    code, _, _ = run(capsys, "family", "--spec", "minus1:k=0,n=1", "--n-range", "5:3")
    assert code == 2


def test_family_plot_dir(capsys, tmp_path):
    plot_dir = tmp_path / "figs"
    payload = run_json(
        capsys,
        "family",
        "--spec",
        "minus1:k=0,n=1",
        "--n-range",
        "2:3",
        "--plot-dir",
        str(plot_dir),
    )
    assert len(payload["plots"]) == 2
    names = {os.path.basename(p) for p in payload["plots"]}
    assert names == {"family_roots.png", "family_convergence.png"}
    for path in payload["plots"]:
        assert os.path.getsize(path) > 0


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


def test_search_jsonl(capsys):
    code, out, _ = run(capsys, "search", "--degree", "2", "--coeffs=-1,0,1")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 6
    records = [json.loads(line) for line in lines]
    for record in records:
        assert record["schema"] == "v1"
        assert record["coords"][-1] == 1
        assert "pruned" not in record
    assert records[1]["poly"]["coeffs"] == ["-3", "0", "1"]  # x^2 - 3


def test_search_csv(capsys):
    code, out, _ = run(
        capsys, "search", "--degree", "2", "--coeffs=-1,0,1", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "coords,monomial_coeffs,span_lo,span_hi,kronecker"
    assert len(lines) == 7
    assert lines[1].startswith("-1;-1;1,")
    assert lines[1].endswith(",false")


def test_search_pruned_labeling(capsys):
    code, out, _ = run(
        capsys, "search", "--degree", "2", "--coeffs=-1,0,1",
        "--prune-alternating",
    )
    assert code == 0
    assert all(json.loads(line)["pruned"] is True for line in out.strip().split("\n"))
    code, out, _ = run(
        capsys, "search", "--degree", "2", "--coeffs=-1,0,1",
        "--prune-monotone", "--format", "csv",
    )
    assert out.startswith("# pruned search\n")


def test_search_span_bound_fraction(capsys):
    code, out, _ = run(
        capsys, "search", "--degree", "2", "--coeffs=-1,0,1", "--span-lt", "7/2"
    )
    assert code == 0
    for line in out.strip().split("\n"):
        record = json.loads(line)
        from fractions import Fraction

        assert Fraction(record["span"][1]) < Fraction(7, 2)


def test_search_bad_span_bound(capsys):
    code, _, _ = run(
        capsys, "search", "--degree", "2", "--coeffs=-1,0,1", "--span-lt", "wide"
    )
    assert code == 2


def test_search_too_large(capsys):
    code, _, err = run(capsys, "search", "--degree", "40", "--coeffs=-1,0,1")
    assert code == 2
    assert "guard" in err


def test_search_threads_flag_deterministic(capsys):
    _, one, _ = run(capsys, "search", "--degree", "3", "--coeffs=-1,0,1",
                    "--threads", "1")
    _, two, _ = run(capsys, "search", "--degree", "3", "--coeffs=-1,0,1",
                    "--threads", "2")
    assert one == two


def test_search_plot_dir(capsys, tmp_path):
    plot_dir = tmp_path / "figs"
    code, _, _ = run(
        capsys, "search", "--degree", "2", "--coeffs=-1,0,1",
        "--plot-dir", str(plot_dir),
    )
    assert code == 0
    assert (plot_dir / "search_spans.png").stat().st_size > 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def test_verify_table8(capsys):
    payload = run_json(capsys, "verify", "table8")
    assert payload["passed"] is True
    assert len(payload["report"]["rows"]) == 26
    assert payload["report"]["ordered_by_span"] is True


def test_verify_degree18(capsys):
    payload = run_json(capsys, "verify", "degree18")
    (row,) = payload["report"]["rows"]
    assert row["label"] == "deg18"
    assert row["kronecker"] is False


def test_verify_tampered_table_exits_3(capsys, monkeypatch):
    bad = (("8a", TABLE8[0][1], True),) + TABLE8[1:]
    monkeypatch.setattr("chebsalem.search.TABLE8", bad)
    code, _, err = run(capsys, "verify", "table8")
    assert code == 3
    assert "fixture mismatch" in err


def test_verify_plot_dir(capsys, tmp_path):
    plot_dir = tmp_path / "figs"
    code, _, _ = run(capsys, "verify", "table8", "--plot-dir", str(plot_dir))
    assert code == 0
    assert (plot_dir / "verify_table8_spans.png").stat().st_size > 0


# ---------------------------------------------------------------------------
# parser-level errors
# ---------------------------------------------------------------------------


def test_unknown_verify_target_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "bogus"])
    assert exc.value.code == 2


def test_missing_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
