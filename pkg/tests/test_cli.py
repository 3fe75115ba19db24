import json

import pytest
from click.testing import CliRunner

from hilbtaut.charpoly import CharPoly
from hilbtaut.cli import DescriptorError, load_descriptor, main
from hilbtaut.family import symbolic_family
from hilbtaut.tautmod import from_data, gamma_power, to_data


@pytest.fixture
def runner():
    return CliRunner()


def write(tmp_path, text, name="family.ini"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_load_minimal_smooth(tmp_path):
    path = write(
        tmp_path,
        """
        [family]
        dim_b = 1
        """,
    )
    fam = load_descriptor(path)
    assert fam.dim_b == 1
    assert fam.nodes == []
    assert fam.sigma().is_zero()


def test_load_one_node(tmp_path):
    path = write(
        tmp_path,
        """
        [family]
        dim_b = 1
        genus = 2
        [characters]
        d = 7
        b = 3/2
        [node.s]
        weight = 1
        """,
    )
    fam = load_descriptor(path)
    assert fam.sigma() == CharPoly.const(1)
    assert fam.char("b") == CharPoly.const("3/2")
    assert fam.char("omega2") == CharPoly.symbol("omega2")
    # over a curve base the node section pulls the bundle back to zero
    assert fam.node("s").tau_L == CharPoly.const(0)


def test_load_rejects_negative_weight(tmp_path):
    path = write(
        tmp_path,
        """
        [family]
        dim_b = 1
        [node.s]
        weight = -1
        """,
    )
    with pytest.raises(DescriptorError, match="positive"):
        load_descriptor(path)


def test_load_rejects_bad_dim(tmp_path):
    path = write(tmp_path, "[family]\ndim_b = 0\n")
    with pytest.raises(DescriptorError, match="dim_b"):
        load_descriptor(path)
    path = write(tmp_path, "[family]\nd = 1\n", name="f2.ini")
    with pytest.raises(DescriptorError, match="dim_b"):
        load_descriptor(path)


def test_load_parse_error_has_line_number(tmp_path):
    path = write(tmp_path, "[family]\ndim_b = 1\nbroken line\n")
    with pytest.raises(DescriptorError, match=":3"):
        load_descriptor(path)


def test_gamma_power_command(runner):
    result = runner.invoke(main, ["gamma-power", "--m", "3", "--k", "4", "--integrate"])
    assert result.exit_code == 0
    assert result.output.strip() == "13*omega2 - 9*sigma"


def test_pluecker_command(runner):
    result = runner.invoke(main, ["pluecker", "--which", "s2", "--m", "3"])
    assert result.exit_code == 0
    assert result.output.strip() == "6*L2 + 12*Lomega + 7*omega2 - 5*sigma"
    result = runner.invoke(main, ["pluecker", "--which", "c2", "--m", "2"])
    assert result.output.strip() == "L2 + Lomega"


def test_trisecants_command(runner):
    result = runner.invoke(
        main,
        ["trisecants", "--d", "6", "--g", "0", "--b", "0", "--lomega", "0",
         "--omega2", "0", "--sigma", "1"],
    )
    assert result.exit_code == 0
    assert result.output.strip() == "-2"


def test_structured_output_roundtrip(runner):
    result = runner.invoke(
        main, ["gamma-power", "--m", "3", "--k", "3", "--output", "json"]
    )
    assert result.exit_code == 0
    data = json.loads(result.output)
    fam = symbolic_family(1)
    rebuilt = from_data(fam, data)
    assert rebuilt == gamma_power(fam, 3, 3)


def test_structured_output_deterministic(runner):
    args = ["gamma-power", "--m", "3", "--k", "3", "--output", "json"]
    first = runner.invoke(main, args).output
    second = runner.invoke(main, args).output
    assert first == second


def test_shipped_sample_descriptor(runner):
    import os

    path = os.path.join(os.path.dirname(__file__), "..", "sample-family.ini")
    fam = load_descriptor(path)
    assert fam.dim_b == 1 and fam.sigma() == CharPoly.const(1)
    result = runner.invoke(
        main, ["gamma-power", "--m", "3", "--k", "4", "--integrate", path]
    )
    assert result.output.strip() == "-9 + 13*omega2"


def test_descriptor_flows_into_commands(runner, tmp_path):
    path = write(
        tmp_path,
        """
        [family]
        dim_b = 1
        [characters]
        omega2 = 4
        [node.s]
        weight = 2
        """,
    )
    result = runner.invoke(
        main,
        ["gamma-power", "--m", "2", "--k", "3", "--integrate", path],
    )
    assert result.exit_code == 0
    # omega2/2 - sigma/2 with omega2 = 4, sigma = 2
    assert result.output.strip() == "1"


def test_oracle_check_command(runner):
    result = runner.invoke(main, ["oracle-check", "--cases", "5"])
    assert result.exit_code == 0
    assert "failures = 0" in result.output


def test_chern_command(runner):
    result = runner.invoke(main, ["chern", "--m", "2", "--closed-form"])
    assert result.exit_code == 0
    assert "Gamma" in result.output


def test_transfer_command(runner):
    fam = symbolic_family(1)
    blob = json.dumps(to_data(gamma_power(fam, 2, 1)))
    result = runner.invoke(main, ["transfer", "--class-json", blob, "--beta", "L"])
    assert result.exit_code == 0
    assert "Gamma_(2,1)" in result.output


def test_double_points_command(runner):
    result = runner.invoke(main, ["double-points", "--n", "3"])
    assert result.exit_code == 0
    result = runner.invoke(main, ["double-points", "--n", "2", "--push-to-base"])
    assert result.exit_code == 0
    assert "kappaL_0" in result.output


def test_exit_codes_through_entry_point(tmp_path):
    import subprocess
    import sys

    def run(*args):
        return subprocess.run(
            [sys.executable, "-m", "hilbtaut.cli"] + list(args),
            capture_output=True,
            text=True,
        )

    ok = run("gamma-power", "--m", "2", "--k", "3", "--integrate")
    assert ok.returncode == 0

    bad = write(tmp_path, "[family]\ndim_b = 0\n")
    invalid = run("gamma-power", "--m", "2", "--k", "3", bad)
    assert invalid.returncode == 1
    assert "descriptor error" in invalid.stderr

    engine = run("transfer", "--class-json", '{"m": 1, "diag": [], "bad": []}')
    assert engine.returncode == 2
    assert "engine error" in engine.stderr
