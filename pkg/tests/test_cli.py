import json

import pytest
from click.testing import CliRunner

from credal import golden, load_mass_document, make_mass, build_frame
from credal.cli import main

TARGET_MASS = {
    "frame": ["a", "h", "r"],
    "masses": [{"set": ["a"], "mass": 0.5}, {"set": ["r"], "mass": 0.5}],
}
OVER_HR = {"contexts": [{"set": ["h", "r"], "alpha": 0.4}]}
DISCOUNT_A = {"contexts": [{"set": ["a"], "alpha": 0.4}]}
FULL_FRAME_CTX = {"contexts": [{"set": "*", "alpha": 0.4}]}

CASE_MASS = {
    "frame": ["w1", "w2", "w3"],
    "masses": [
        {"set": ["w1"], "mass": 0.3},
        {"set": ["w2"], "mass": 0.2},
        {"set": ["w1", "w2"], "mass": 0.2},
        {"set": ["w3"], "mass": 0.2},
        {"set": "*", "mass": 0.1},
    ],
}
DECAY_C1 = {
    "decay": [
        {"set": ["w1"], "half_life_s": 1.0},
        {"set": ["w2"], "half_life_s": 4.0},
        {"set": ["w3"], "half_life_s": 15.0},
    ]
}
DECAY_C2 = {
    "decay": [
        {"set": ["w1"], "half_life_s": 5.0},
        {"set": ["w2"], "half_life_s": 4.0},
        {"set": ["w3"], "half_life_s": 15.0},
    ]
}


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def docs(tmp_path):
    paths = {}
    for name, obj in {
        "mass": TARGET_MASS,
        "over_hr": OVER_HR,
        "discount_a": DISCOUNT_A,
        "full_ctx": FULL_FRAME_CTX,
        "case_mass": CASE_MASS,
        "decay_c1": DECAY_C1,
        "decay_c2": DECAY_C2,
    }.items():
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(obj), encoding="utf-8")
        paths[name] = str(path)
    return paths


def test_discount_three_schemes_text(runner, docs):
    result = runner.invoke(
        main,
        ["discount", "--mass", docs["mass"], "--context", docs["over_hr"],
         "--scheme", "c,p,o"],
    )
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].split() == ["set", "conservative", "proportional", "optimistic"]
    table = {line.split()[0]: line.split()[1:] for line in lines[1:]}
    assert table["{a}"] == ["0.500000"] * 3
    assert table["{r}"] == ["0.300000"] * 3
    assert table["Ω"] == ["0.200000"] * 3
    assert table["∅"] == ["0.000000"] * 3


def test_discount_contextual_column(runner, docs):
    result = runner.invoke(
        main,
        ["discount", "--mass", docs["mass"], "--context", docs["discount_a"],
         "--scheme", "contextual"],
    )
    assert result.exit_code == 0
    table = {l.split()[0]: l.split()[1:] for l in result.output.splitlines()[1:]}
    assert table["{a}"] == ["0.500000"]
    assert table["{r}"] == ["0.300000"]
    assert table["{a,r}"] == ["0.200000"]


def test_discount_empty_scheme_list_exits_2(runner, docs):
    result = runner.invoke(
        main,
        ["discount", "--mass", docs["mass"], "--context", docs["over_hr"],
         "--scheme", ","],
    )
    assert result.exit_code == 2
    assert "scheme" in result.output


def test_discount_unknown_scheme_exits_2(runner, docs):
    result = runner.invoke(
        main,
        ["discount", "--mass", docs["mass"], "--context", docs["over_hr"],
         "--scheme", "dempster"],
    )
    assert result.exit_code == 2


def test_discount_invalid_document_exits_2(runner, docs, tmp_path):
    bad = tmp_path / "bad_mass.json"
    bad.write_text(
        json.dumps({"frame": ["a"], "masses": [{"set": ["a"], "mass": 0.9}]}),
        encoding="utf-8",
    )
    result = runner.invoke(
        main,
        ["discount", "--mass", str(bad), "--context", docs["over_hr"],
         "--scheme", "c"],
    )
    assert result.exit_code == 2
    assert "masses" in result.output
    assert "bad_mass.json" in result.output


def test_discount_classical_requires_full_frame_context(runner, docs):
    ok = runner.invoke(
        main,
        ["discount", "--mass", docs["mass"], "--context", docs["full_ctx"],
         "--scheme", "classical"],
    )
    assert ok.exit_code == 0
    table = {l.split()[0]: l.split()[1:] for l in ok.output.splitlines()[1:]}
    assert table["{a}"] == ["0.300000"]
    assert table["Ω"] == ["0.400000"]
    bad = runner.invoke(
        main,
        ["discount", "--mass", docs["mass"], "--context", docs["over_hr"],
         "--scheme", "classical"],
    )
    assert bad.exit_code == 2


def test_discount_generalized_needs_subnormal_input(runner, docs):
    # zero implicability is a scheme error, not a document error
    result = runner.invoke(
        main,
        ["discount", "--mass", docs["mass"], "--context", docs["discount_a"],
         "--scheme", "generalized"],
    )
    assert result.exit_code == 3
    assert "implicability" in result.output


def test_discount_json_round_trip(runner, docs, tmp_path):
    out = tmp_path / "out.json"
    result = runner.invoke(
        main,
        ["discount", "--mass", docs["mass"], "--context", docs["over_hr"],
         "--scheme", "conservative", "--format", "json", "--out", str(out)],
    )
    assert result.exit_code == 0
    reloaded = load_mass_document(out)
    frame = build_frame(["a", "h", "r"])
    from credal import ContextVector, conservative_discount

    expected = conservative_discount(
        make_mass(frame, {"a": 0.5, "r": 0.5}),
        ContextVector.from_pairs(frame, [(("h", "r"), 0.4)]),
    )
    assert reloaded == expected
    payload = json.loads(out.read_text())
    assert payload["scheme"] == "conservative"


def test_discount_compare_column(runner, docs):
    result = runner.invoke(
        main,
        ["discount", "--mass", docs["mass"], "--context", docs["over_hr"],
         "--scheme", "c", "--compare"],
    )
    assert result.output.splitlines()[0].split() == ["set", "m", "conservative"]


def test_discount_csv_format(runner, docs):
    result = runner.invoke(
        main,
        ["discount", "--mass", docs["mass"], "--context", docs["over_hr"],
         "--scheme", "c,o", "--format", "csv"],
    )
    lines = result.output.splitlines()
    assert lines[0] == "set,conservative,optimistic"
    rows = {l.split(",")[0]: l.split(",")[1:] for l in lines[1:]}
    assert rows[""] == ["0.000000", "0.000000"]
    assert rows["a"] == ["0.500000", "0.500000"]
    assert rows["*"] == ["0.200000", "0.200000"]


def test_rendering_is_deterministic(runner, docs):
    args = ["discount", "--mass", docs["mass"], "--context", docs["over_hr"],
            "--scheme", "c,p,o"]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.output == second.output


def test_temporal_infeasible_contextual_exits_3(runner, docs):
    result = runner.invoke(
        main,
        ["temporal", "--mass", docs["case_mass"], "--decay", docs["decay_c1"],
         "--time", "4", "--scheme", "contextual"],
    )
    assert result.exit_code == 3
    for token in ("-1.5787", "0.6777", "0.8061"):
        assert token in result.output


def test_temporal_contextual_case2_column(runner, docs):
    result = runner.invoke(
        main,
        ["temporal", "--mass", docs["case_mass"], "--decay", docs["decay_c2"],
         "--time", "4", "--scheme", "contextual", "--format", "json"],
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["alpha"]["contextual"] == pytest.approx(
        [0.1493, 0.0228, 0.4122], abs=1e-3
    )
    masses = {tuple(e["set"]): e["mass"] for e in payload["masses"]}
    expected = {
        ("w1",): 0.1723,
        ("w2",): 0.1,
        ("w1", "w2"): 0.1391,
        ("w3",): 0.1662,
        ("w1", "w3"): 0.15,
        ("w2", "w3"): 0.074,
        ("w1", "w2", "w3"): 0.1983,
    }
    for key, value in expected.items():
        assert masses[key] == pytest.approx(value, abs=5e-4)


def test_temporal_age_zero_echoes_input(runner, docs):
    result = runner.invoke(
        main,
        ["temporal", "--mass", docs["case_mass"], "--decay", docs["decay_c1"],
         "--time", "0", "--scheme", "c", "--format", "json"],
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    masses = {tuple(e["set"]): e["mass"] for e in payload["masses"]}
    assert masses[("w1",)] == 0.3
    assert masses[("w1", "w2", "w3")] == 0.1


def test_temporal_text_prints_vectors(runner, docs):
    result = runner.invoke(
        main,
        ["temporal", "--mass", docs["case_mass"], "--decay", docs["decay_c1"],
         "--time", "4", "--scheme", "c,p,o", "--alpha-mode", "paper-table"],
    )
    assert result.exit_code == 0
    assert "lambda: [0.6931, 0.1733, 0.0462]" in result.output
    assert "kappa(t=4): [0.0625, 0.5000, 0.8312]" in result.output
    assert "alpha[paper-table]: [0.0625, 0.5000, 0.8312]" in result.output


def test_temporal_rejects_negative_time(runner, docs):
    result = runner.invoke(
        main,
        ["temporal", "--mass", docs["case_mass"], "--decay", docs["decay_c1"],
         "--time", "-4", "--scheme", "c"],
    )
    assert result.exit_code == 2


def test_temporal_rejects_classical(runner, docs):
    result = runner.invoke(
        main,
        ["temporal", "--mass", docs["case_mass"], "--decay", docs["decay_c1"],
         "--time", "4", "--scheme", "classical"],
    )
    assert result.exit_code == 2


def test_combine_two_documents(runner, docs, tmp_path):
    component = tmp_path / "component.json"
    component.write_text(
        json.dumps(
            {
                "frame": ["a", "h", "r"],
                "masses": [{"set": [], "mass": 0.6}, {"set": ["a"], "mass": 0.4}],
            }
        ),
        encoding="utf-8",
    )
    result = runner.invoke(
        main,
        ["combine", "--mass", docs["mass"], "--mass", str(component),
         "--format", "json"],
    )
    assert result.exit_code == 0
    masses = {tuple(e["set"]): e["mass"] for e in json.loads(result.output)["masses"]}
    assert masses[("a",)] == pytest.approx(0.5)
    assert masses[("r",)] == pytest.approx(0.3)
    assert masses[("a", "r")] == pytest.approx(0.2)


def test_combine_wrong_count_exits_2(runner, docs):
    result = runner.invoke(main, ["combine", "--mass", docs["mass"]])
    assert result.exit_code == 2


def test_combine_json_output_reloads(runner, docs, tmp_path):
    out = tmp_path / "combined.json"
    result = runner.invoke(
        main,
        ["combine", "--mass", docs["mass"], "--mass", docs["mass"],
         "--format", "json", "--out", str(out)],
    )
    assert result.exit_code == 0
    reloaded = load_mass_document(out)
    assert reloaded.mass("a") == pytest.approx(0.25)
    assert reloaded.mass(("a", "r")) == pytest.approx(0.5)


def test_inspect_outputs_transforms(runner, docs):
    result = runner.invoke(
        main, ["inspect", "--mass", docs["mass"], "--format", "json"]
    )
    assert result.exit_code == 0
    rows = {tuple(r["set"]): r for r in json.loads(result.output)["rows"]}
    assert rows[("a", "r")]["belief"] == pytest.approx(1.0)
    assert rows[()]["implicability"] == pytest.approx(0.0)
    assert rows[("a", "h", "r")]["implicability"] == pytest.approx(1.0)
    text = runner.invoke(main, ["inspect", "--mass", docs["mass"]])
    assert text.output.splitlines()[0].split() == [
        "set", "mass", "belief", "implicability",
    ]


def test_paper_fresh_build_exits_0(runner):
    result = runner.invoke(main, ["paper"])
    assert result.exit_code == 0
    assert "FAIL" not in result.output
    assert result.output.strip().endswith("cells within 0.0005")


def test_paper_perturbed_cell_exits_1(runner, monkeypatch):
    monkeypatch.setitem(
        golden.EXPECTED, "case1.conservative.w1w2",
        golden.EXPECTED["case1.conservative.w1w2"] + 1e-2,
    )
    result = runner.invoke(main, ["paper"])
    assert result.exit_code == 1
    fail_lines = [l for l in result.output.splitlines() if l.startswith("FAIL")]
    assert len(fail_lines) == 1
    assert "case1.conservative.w1w2" in fail_lines[0]
    assert "diff" in fail_lines[0]


def test_paper_csv_reports_per_cell(runner, monkeypatch):
    monkeypatch.setitem(
        golden.EXPECTED, "kappa.c2.w1", golden.EXPECTED["kappa.c2.w1"] + 1e-2
    )
    result = runner.invoke(main, ["paper", "--format", "csv"])
    assert result.exit_code == 1
    lines = result.output.splitlines()
    assert lines[0] == "cell,expected,actual,diff,status"
    assert any(l.startswith("kappa.c2.w1,") and l.endswith("FAIL") for l in lines)


def test_paper_tolerance_env_override(runner, monkeypatch):
    monkeypatch.setitem(
        golden.EXPECTED, "kappa.c2.w1", golden.EXPECTED["kappa.c2.w1"] + 1e-2
    )
    monkeypatch.setenv("CREDAL_TOL", "0.5")
    result = runner.invoke(main, ["paper"])
    assert result.exit_code == 0


def test_out_writes_file(runner, docs, tmp_path):
    out = tmp_path / "table.txt"
    to_file = runner.invoke(
        main,
        ["discount", "--mass", docs["mass"], "--context", docs["over_hr"],
         "--scheme", "c", "--out", str(out)],
    )
    to_stdout = runner.invoke(
        main,
        ["discount", "--mass", docs["mass"], "--context", docs["over_hr"],
         "--scheme", "c"],
    )
    assert to_file.exit_code == 0
    assert out.read_text() == to_stdout.output
