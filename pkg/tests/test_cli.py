import json
import math
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from mushy.cli import (
    EXIT_INPUT,
    EXIT_NUMERICAL,
    EXIT_OK,
    EXIT_RESIDUAL,
    EXIT_RESTRICTION,
    Scenario,
    main,
    parse_scenario,
    scenario_to_ini,
    scenario_to_json,
)
from mushy.model import Face, UnknownCase

L_REF = 1.4636343789756727

CASE_L_INI = """\
[problem]
type = convective
case = l

[coefficients]
k = 1.0
rho = 1.0
c = 1.0
epsilon = 0.5
gamma = 0.1

[boundary]
q0 = 1.0
h0 = 2.0
d_inf = 1.4225620128255847
"""


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture()
def case_l_path(tmp_path):
    path = tmp_path / "case_l.ini"
    path.write_text(CASE_L_INI)
    return path


@pytest.fixture()
def direct_path(tmp_path):
    text = CASE_L_INI.replace("case = l", "case = direct")
    text = text.replace("k = 1.0", f"l = {L_REF!r}\nk = 1.0")
    path = tmp_path / "direct.ini"
    path.write_text(text)
    return path


def test_solve_recovers_latent_heat(case_l_path, capsys):
    code, out, _ = run(["solve", str(case_l_path)], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["case"] == "l"
    assert math.isclose(doc["value"], L_REF, rel_tol=1e-12)
    assert abs(doc["xi"] - 0.5) <= 1e-13
    assert [r["id"] for r in doc["restrictions"]] == ["R1", "R2"]
    assert abs(doc["residuals"]["stefan"]) <= 1e-14
    assert abs(doc["residuals"]["face"]) <= 1e-14


def test_solve_csv_format(case_l_path, capsys):
    code, out, _ = run(["solve", str(case_l_path), "--format", "csv"], capsys)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "key,value"
    table = dict(line.split(",", 1) for line in lines[1:])
    assert math.isclose(float(table["value"]), L_REF, rel_tol=1e-12)
    assert table["restrictions.R1.satisfied"] == "true"


def test_solve_writes_output_file(case_l_path, tmp_path, capsys):
    out_path = tmp_path / "result.json"
    code, out, _ = run(["solve", str(case_l_path), "--out", str(out_path)], capsys)
    assert code == EXIT_OK and out == ""
    assert math.isclose(json.loads(out_path.read_text())["value"], L_REF, rel_tol=1e-12)


def test_manufacture_then_solve_round_trip(tmp_path, capsys):
    scenario = tmp_path / "made.ini"
    code, _, _ = run(
        ["manufacture", "--xi", "0.8", "--k", "2.0", "--rho", "0.7", "--c", "1.3",
         "--epsilon", "0.35", "--gamma", "0.6", "--q0", "1.4", "--h0", "3.0",
         "--case", "rho", "--out", str(scenario)], capsys)
    assert code == EXIT_OK
    text = scenario.read_text()
    truth = float(text.split("; true rho = ")[1].splitlines()[0])
    assert truth == 0.7
    code, out, _ = run(["solve", str(scenario)], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert math.isclose(doc["value"], 0.7, rel_tol=1e-11)
    assert abs(doc["xi"] - 0.8) <= 1e-12


def test_manufacture_requires_h0_for_convective(capsys):
    code, _, err = run(
        ["manufacture", "--xi", "0.5", "--k", "1", "--rho", "1", "--c", "1",
         "--epsilon", "0.5", "--gamma", "0.1", "--q0", "1"], capsys)
    assert code == EXIT_INPUT
    assert "h0" in err


def test_direct_mode_consistent_data(direct_path, capsys):
    code, out, _ = run(["solve", str(direct_path)], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["case"] == "direct"
    assert "value" not in doc
    assert abs(doc["xi"] - 0.5) <= 1e-10
    assert abs(doc["residuals"]["face"]) <= 1e-11


def test_direct_mode_surfaces_inconsistency(tmp_path, capsys):
    path = tmp_path / "bad.ini"
    path.write_text(CASE_L_INI.replace("case = l", "case = direct").replace(
        "k = 1.0", "l = 1.38037\nk = 1.0"))
    code, out, _ = run(["solve", str(path)], capsys)
    assert code == EXIT_OK  # solving succeeds; the residual carries the verdict
    doc = json.loads(out)
    assert abs(doc["residuals"]["stefan"]) <= 1e-13
    assert abs(doc["residuals"]["face"]) > 1e-3
    code, out, _ = run(["verify", str(path)], capsys)
    assert code == EXIT_RESIDUAL
    assert json.loads(out)["failures"] == ["face"]


def test_verify_consistent_scenario_passes(case_l_path, capsys):
    code, out, _ = run(["verify", str(case_l_path)], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["passed"] is True
    assert doc["pde_residual_max"] < 1e-6
    assert set(doc["condition_residuals"]) == {"fusion_at_s", "stefan", "mushy_width", "flux", "face"}


def test_verify_detects_front_perturbation(case_l_path, capsys):
    code, out, _ = run(["verify", str(case_l_path), "--xi-perturb", "1e-3"], capsys)
    assert code == EXIT_RESIDUAL
    assert json.loads(out)["failures"] == ["face", "stefan"]


def test_profile_stdout_contains_both_tables(case_l_path, capsys):
    code, out, _ = run(["profile", str(case_l_path), "--t", "4.0", "--t", "1.0", "--nx", "5"], capsys)
    assert code == EXIT_OK
    profile_text, fronts_text = out.split("\n\n")
    rows = [line.split(",") for line in profile_text.splitlines()]
    assert rows[0] == ["t", "x", "temperature", "region"]
    times = [float(r[0]) for r in rows[1:]]
    assert times == sorted(times)  # unsorted --t flags are ordered
    assert {r[3] for r in rows[1:]} == {"solid", "liquid"}
    front_rows = [line.split(",") for line in fronts_text.splitlines()]
    assert front_rows[0] == ["t", "s", "r"]
    s1, r1 = (float(v) for v in front_rows[1][1:])
    assert math.isclose(s1, 1.0, rel_tol=1e-13)
    assert r1 > s1


def test_profile_files(case_l_path, tmp_path, capsys):
    out_path = tmp_path / "profile.csv"
    code, _, err = run(["profile", str(case_l_path), "--out", str(out_path)], capsys)
    assert code == EXIT_OK
    fronts = tmp_path / "profile.fronts.csv"
    assert out_path.exists() and fronts.exists()
    assert str(fronts) in err
    body = out_path.read_text().splitlines()
    assert len(body) == 51  # header + default 50 points


def test_profile_rejects_nonpositive_time(case_l_path, capsys):
    code, _, err = run(["profile", str(case_l_path), "--t", "0"], capsys)
    assert code == EXIT_INPUT


@pytest.fixture()
def dirichlet_gamma_path(tmp_path, capsys):
    path = tmp_path / "diri_gamma.ini"
    code, _, _ = run(
        ["manufacture", "--problem", "dirichlet", "--xi", "0.7", "--k", "1", "--rho", "1",
         "--c", "1", "--epsilon", "0.5", "--gamma", "1.72", "--q0", "1",
         "--case", "gamma", "--out", str(path)], capsys)
    assert code == EXIT_OK
    return path


def test_limit_study_csv(dirichlet_gamma_path, capsys):
    code, out, _ = run(
        ["limit", str(dirichlet_gamma_path), "--format", "csv", "--h0-grid", "10,100,1000,10000"],
        capsys)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "h0,xi_conv,delta_xi,coefficient"
    assert len([l for l in lines if not l.startswith("#")]) == 5
    slope_line = next(l for l in lines if l.startswith("# fitted_slope"))
    assert abs(float(slope_line.split("=")[1]) + 1.0) < 0.1


def test_limit_study_json_reports_exclusions(dirichlet_gamma_path, capsys):
    code, out, _ = run(
        ["limit", str(dirichlet_gamma_path), "--h0-grid", "0.4,100,1000,10000"], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert len(doc["rows"]) == 3
    assert doc["excluded"][0]["failed"] == ["R1"]
    assert abs(doc["fitted_slope"] + 1.0) < 0.15


def test_limit_requires_dirichlet_scenario(case_l_path, capsys):
    code, _, err = run(["limit", str(case_l_path)], capsys)
    assert code == EXIT_INPUT
    assert "dirichlet" in err


def test_check_restrictions_pass(case_l_path, capsys):
    code, out, _ = run(["check-restrictions", str(case_l_path)], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["all_satisfied"] is True
    assert [r["id"] for r in doc["restrictions"]] == ["R1", "R2"]


def test_check_restrictions_failure_exit(tmp_path, capsys):
    path = tmp_path / "hot.ini"
    path.write_text(CASE_L_INI.replace("q0 = 1.0", "q0 = 99.0"))
    code, out, _ = run(["check-restrictions", str(path)], capsys)
    assert code == EXIT_RESTRICTION
    doc = json.loads(out)
    assert doc["all_satisfied"] is False
    assert doc["restrictions"][0]["id"] == "R1"
    assert doc["restrictions"][0]["satisfied"] is False


def test_restriction_failure_exit_and_report(tmp_path, capsys):
    path = tmp_path / "hot.ini"
    path.write_text(CASE_L_INI.replace("q0 = 1.0", "q0 = 99.0"))
    code, out, err = run(["solve", str(path)], capsys)
    assert code == EXIT_RESTRICTION
    assert "R1" in err
    doc = json.loads(out)
    assert doc["error"] == "restriction failure"
    assert doc["restrictions"][0]["id"] == "R1"


@pytest.mark.parametrize(
    "mutate",
    [
        lambda text: text.replace("k = 1.0", "k = -3.0"),
        lambda text: text.replace("case = l", "case = latentheat"),
        lambda text: text.replace("q0 = 1.0", "q0 = banana"),
        lambda text: text + "\nwhatever = 1\n",
        lambda text: text.replace("[boundary]\nq0 = 1.0\n", "[boundary]\n"),
        lambda text: "",
    ],
)
def test_malformed_scenarios_exit_one(tmp_path, capsys, mutate):
    path = tmp_path / "broken.ini"
    path.write_text(mutate(CASE_L_INI))
    code, _, err = run(["solve", str(path)], capsys)
    assert code == EXIT_INPUT
    assert err.startswith("error:")


def test_missing_file_exits_one(tmp_path, capsys):
    code, _, err = run(["solve", str(tmp_path / "nope.ini")], capsys)
    assert code == EXIT_INPUT


def test_unsolvable_direct_data_exit_numerical(direct_path, tmp_path, capsys):
    text = direct_path.read_text().replace(f"l = {L_REF!r}", "l = 1e9")
    path = tmp_path / "noroot.ini"
    path.write_text(text)
    code, _, err = run(["solve", str(path)], capsys)
    assert code == EXIT_NUMERICAL


def test_case_override_reuses_direct_scenario(direct_path, capsys):
    code, out, _ = run(["solve", str(direct_path), "--case", "l"], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["case"] == "l"
    assert math.isclose(doc["value"], L_REF, rel_tol=1e-12)


def test_problem_override_to_dirichlet(case_l_path, capsys):
    code, out, _ = run(
        ["solve", str(case_l_path), "--problem", "dirichlet"], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["problem"] == "dirichlet"
    # same datum read as prescribed temperature gives a deeper front
    assert doc["xi"] > 0.5


def test_json_scenario_files_are_interchangeable(case_l_path, tmp_path, capsys):
    scenario = parse_scenario(case_l_path.read_text())
    json_path = tmp_path / "case_l.json"
    json_path.write_text(scenario_to_json(scenario))
    code, out, _ = run(["solve", str(json_path)], capsys)
    assert code == EXIT_OK
    assert math.isclose(json.loads(out)["value"], L_REF, rel_tol=1e-12)


def test_options_section_round_trips(tmp_path, capsys):
    text = CASE_L_INI + "\n[options]\nabs_tol = 1e-13\nmax_iter = 90\n"
    scenario = parse_scenario(text)
    assert scenario.options == {"abs_tol": 1e-13, "max_iter": 90.0}
    assert parse_scenario(scenario_to_ini(scenario)) == scenario


positive_floats = st.floats(min_value=1e-6, max_value=1e6)


@given(k=positive_floats, rho=positive_floats, c=positive_floats,
       gamma=positive_floats, q0=positive_floats, d_inf=positive_floats,
       eps=st.floats(min_value=1e-3, max_value=0.999))
def test_serialization_is_lossless(k, rho, c, gamma, q0, d_inf, eps):
    scenario = Scenario(
        problem=Face.CONVECTIVE,
        case=UnknownCase.L,
        coefficients={"k": k, "rho": rho, "c": c, "epsilon": eps, "gamma": gamma},
        boundary={"q0": q0, "d_inf": d_inf, "h0": 2.0},
        options={},
    )
    assert parse_scenario(scenario_to_ini(scenario)) == scenario
    assert parse_scenario(scenario_to_json(scenario)) == scenario


def test_module_entry_point(case_l_path, tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "mushy", "solve", str(case_l_path)],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["case"] == "l"
