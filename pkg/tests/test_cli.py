import json

from click.testing import CliRunner

from latdist.cli import main

runner = CliRunner()


def test_square_stats_csv():
    result = runner.invoke(main, ["square-stats", "--side", "3"])
    assert result.exit_code == 0
    lines = result.output.strip().split("\n")
    assert lines[0] == "side,N,x,energy,csBound,gapRatio,energy_over_N3lnN,x_sqrtlnN_over_N"
    fields = lines[1].split(",")
    assert fields[:4] == ["3", "9", "5", "1248"]
    assert fields[4] == "1036.8"


def test_rect_csv_golden():
    result = runner.invoke(main, ["rect", "--n", "64", "--alpha", "1/3"])
    assert result.exit_code == 0
    lines = result.output.strip().split("\n")
    header = "n,alpha,W,H,iMin,sublattice,D,D_over_n,excessSum,S,sumR,sumD,sumR2,sumD2,sumBinomR2,sumBinomD2"
    assert lines[0] == header
    fields = dict(zip(header.split(","), lines[1].split(",")))
    assert fields["W"] == "16" and fields["H"] == "4" and fields["iMin"] == "8"
    assert fields["sumR"] == "45" and fields["sumD"] == "45"


def test_rect_empty_sublattice_exit_2():
    result = runner.invoke(main, ["rect", "--n", "10", "--alpha", "9/20"])
    assert result.exit_code == 2
    assert "sublattice empty" in result.output


def test_rect_float_alpha_exit_2():
    result = runner.invoke(main, ["rect", "--n", "64", "--alpha", "0.33"])
    assert result.exit_code == 2


def test_capacity_exit_3():
    result = runner.invoke(main, ["rhat", "--limit", str(1 << 40)])
    assert result.exit_code == 3


def test_landau_csv():
    result = runner.invoke(main, ["landau", "--limit", "100", "--checkpoints", "10,100"])
    assert result.exit_code == 0
    lines = result.output.strip().split("\n")
    assert lines[0] == "N,count,ratio"
    assert lines[1].startswith("10,7,")
    assert lines[2].startswith("100,43,")


def test_rhat_json():
    result = runner.invoke(main, ["--format", "json", "rhat", "--limit", "10"])
    assert result.exit_code == 0
    body = json.loads(result.output)
    assert body["checkpoints"][0]["rhat"] == "22"


def test_lshape_csv():
    result = runner.invoke(main, ["lshape", "--n", "2"])
    assert result.exit_code == 0
    lines = result.output.strip().split("\n")
    assert lines[0] == "n,points,D,trivialEnergy,energy,csBound,gapRatio,trivialEnergy_over_n3"
    assert lines[1].split(",")[:5] == ["2", "4", "4", "16", "40"]


def test_arcs_summary_csv():
    result = runner.invoke(main, ["arcs", "--nmax", "100", "--beta", "1/6"])
    assert result.exit_code == 0
    lines = result.output.strip().split("\n")
    assert lines[0] == "Nmax,beta,scanned,overallMax"
    assert lines[1].startswith("100,1/6,")


def test_identities_csv():
    result = runner.invoke(main, ["identities", "--n", "4096", "--alpha", "2/5"])
    assert result.exit_code == 0
    lines = result.output.strip().split("\n")
    fields = dict(zip(lines[0].split(","), lines[1].split(",")))
    assert fields["sumR"] == fields["sumD"]
    assert fields["sumR2"] == fields["sumD2"]


def test_byte_identical_reruns():
    a = runner.invoke(main, ["square-stats", "--side", "17"]).output
    b = runner.invoke(main, ["--threads", "4", "square-stats", "--side", "17"]).output
    assert a == b


def test_output_file(tmp_path):
    out = tmp_path / "row.csv"
    result = runner.invoke(main, ["--output", str(out), "landau", "--limit", "10"])
    assert result.exit_code == 0
    assert out.read_text().startswith("N,count,ratio\n10,7,")


def test_oracle_check_cli():
    result = runner.invoke(main, ["oracle-check"])
    assert result.exit_code == 0
    assert "ok" in result.output.split("\n")[0]
