import json

import pytest

from core.engine import Engine


def run(capsys, *argv: str) -> tuple[int, str]:
    code = Engine().run(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv: str) -> tuple[int, dict]:
    code, out = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_lift_example(capsys):
    code, response = run_json(capsys, "lift", "--poly", "1,11,-5", "--prime", "7", "--seed", "1", "--precision", "3")
    assert code == 0
    assert response["status"] == "ok"
    (root,) = response["payload"]["roots"]
    assert root["residue"] == 239
    assert root["root"]["digits"] == [1, 6, 4]


def test_lift_scans_every_seed(capsys):
    code, response = run_json(capsys, "lift", "--poly", "1,11,-5", "--prime", "7", "--precision", "10")
    assert code == 0
    assert sorted(root["residue"] % 7 for root in response["payload"]["roots"]) == [1, 4]


def test_lift_degenerate_seed(capsys):
    code, response = run_json(capsys, "lift", "--poly", "17,6,2", "--prime", "5", "--seed", "1", "--precision", "30")
    assert code == 0
    assert sorted(root["residue"] % 25 for root in response["payload"]["roots"]) == [6, 16]


def test_human_output(capsys):
    code, out = run(capsys, "classify", "--f0", "9", "--f1", "12")
    assert code == 0
    assert out.strip() == "NeedsRootAnalysis p=3 w=2 m=1"

    code, out = run(capsys, "lift", "--poly", "1,11,-5", "--prime", "7", "--seed", "1", "--precision", "3")
    assert "residue 239" in out


def test_json_flag_after_subcommand(capsys):
    code, out = run(capsys, "classify", "--f0", "5", "--f1", "1", "--json")
    assert code == 0
    assert json.loads(out)["payload"]["kind"] == "IrreduciblePrime"


def test_teichmuller(capsys):
    code, response = run_json(capsys, "teichmuller", "--prime", "5", "--q", "2", "--precision", "2")
    assert code == 0
    assert response["payload"]["lifts"][0]["residue"] == 7

    code, response = run_json(capsys, "teichmuller", "--prime", "7", "--precision", "4")
    assert [lift["q"] for lift in response["payload"]["lifts"]] == [1, 2, 3, 4, 5, 6]


def test_bell_and_invert(capsys):
    code, response = run_json(capsys, "bell", "4", "2", "1,1,1", "--oracle")
    assert code == 0
    assert response["payload"]["value"] == "7"
    assert response["payload"]["oracle"] == "7"

    code, response = run_json(capsys, "invert", "--alphas", "1", "--order", "4")
    assert code == 0
    assert response["payload"]["betas"] == ["-1", "4", "-30", "336"]


def test_factor(capsys):
    code, response = run_json(capsys, "factor", "--coeffs", "9,12,7,8", "--tail", "geometric:1", "--order", "6")
    assert code == 0
    payload = response["payload"]
    assert payload["A"] == ["3", "-1", "0", "0", "0", "0", "0"]
    assert payload["B"] == ["3", "5", "4", "4", "4", "4", "4"]
    assert all(payload["checks"].values())


def test_factor_multiple_root(capsys):
    code, response = run_json(capsys, "factor", "--coeffs", "9,3,-5,1", "--multiple")
    assert code == 0
    assert response["payload"]["G"] == [-3, 1]
    assert response["payload"]["reduced"] == [-3, -2, 1]


def test_negative_leading_coefficients(capsys):
    # x^2 - 2 mod 7 has the roots 3 and 4
    code, response = run_json(capsys, "lift", "--poly", "-2,0,1", "--prime", "7", "--precision", "5")
    assert code == 0
    roots = response["payload"]["roots"]
    assert sorted(root["residue"] % 7 for root in roots) == [3, 4]
    assert all((root["residue"] ** 2 - 2) % 7**5 == 0 for root in roots)

    # -(x - 3)^2 (x + 1)
    code, response = run_json(capsys, "factor", "--coeffs", "-9,-3,5,-1", "--multiple")
    assert code == 0
    assert response["payload"]["G"] == [-3, 1]
    assert response["payload"]["reduced"] == [3, 2, -1]

    # t (1 - t) is inverted by the Catalan numbers
    code, response = run_json(capsys, "invert", "--alphas", "-1,0", "--order", "4")
    assert code == 0
    assert response["payload"]["betas"] == ["1", "4", "30", "336"]

    code, response = run_json(capsys, "bell", "2", "1", "-1,3")
    assert code == 0
    assert response["payload"]["value"] == "3"
    code, response = run_json(capsys, "bell", "2", "2", "-1/2,3", "--oracle")
    assert response["payload"]["value"] == response["payload"]["oracle"] == "1/4"


def test_factor_double_rational_root(capsys):
    code, response = run_json(capsys, "factor", "--coeffs", "9,-12,4", "--order", "4")
    assert code == 0
    assert response["payload"]["A"] == ["3", "-2", "0", "0", "0"]
    assert response["payload"]["B"] == ["3", "-2", "0", "0", "0"]


@pytest.mark.parametrize(
    "argv, code, error",
    [
        (["lift", "--poly", "1,11,-5", "--prime", "9", "--seed", "1", "--precision", "3"], 2, "NotPrime"),
        (["lift", "--poly", "1,11,-5", "--prime", "7", "--seed", "2", "--precision", "3"], 1, "NotARootModP"),
        (["lift", "--poly", "1,x", "--prime", "7", "--precision", "3"], 2, "InvalidInput"),
        (["teichmuller", "--prime", "5", "--q", "5", "--precision", "3"], 1, "OutOfRange"),
        (["factor", "--coeffs", "9,3,1", "--order", "4"], 1, "NoSuitableRoot"),
        (["classify", "--f0", "9"], 2, "UsageError"),
        (["unknown"], 2, "UsageError"),
    ],
)
def test_errors(capsys, argv, code, error):
    returned, response = run_json(capsys, *argv)
    assert returned == code
    assert response["status"] == "error"
    assert response["error"]["code"] == error


def test_no_suitable_root_details(capsys):
    _, response = run_json(capsys, "factor", "--coeffs", "9,3,1", "--order", "4")
    assert response["error"]["details"] == {"fallback_applies": False, "necessity_known": True}


def test_output_is_deterministic(capsys):
    argv = ("factor", "--coeffs", "9,-3,-2", "--order", "5")
    assert run_json(capsys, *argv) == run_json(capsys, *argv)


@pytest.mark.parametrize(
    "argv",
    [
        ("lift", "--poly", "17,6,2", "--prime", "5", "--seed", "1", "--precision", "20"),
        ("factor", "--coeffs", "9,12,7,8", "--tail", "geometric:1", "--order", "6"),
        ("factor", "--coeffs", "9,-3,-2", "--order", "5"),
    ],
)
def test_verify_round_trip(capsys, tmp_path, argv):
    _, out = run(capsys, "--json", *argv)
    path = tmp_path / "response.json"
    path.write_text(out, encoding="utf-8")

    code, response = run_json(capsys, "verify", "--input", str(path))
    assert code == 0
    assert response["payload"]["passed"]
