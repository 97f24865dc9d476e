import pytest

from dcsp.cli import main, parse_values, read_config_file


class TestParseValues:
    def test_range(self):
        assert parse_values("22:50:2") == tuple(range(22, 51, 2))

    def test_range_default_step(self):
        assert parse_values("3:6") == (3, 4, 5, 6)

    def test_comma_list(self):
        assert parse_values("26,30") == (26, 30)

    def test_single(self):
        assert parse_values("26") == (26,)

    def test_bad_range(self):
        with pytest.raises(ValueError):
            parse_values("10:5")


def test_read_config_file(tmp_path):
    path = tmp_path / "opts.cfg"
    path.write_text("# comment\ntrials = 3\nseed=9  # inline\n\nalgorithms=ssp\n")
    assert read_config_file(path) == {"trials": "3", "seed": "9", "algorithms": "ssp"}
    bad = tmp_path / "bad.cfg"
    bad.write_text("just words\n")
    with pytest.raises(ValueError):
        read_config_file(bad)


class TestCostCommand:
    def test_all_rows(self, capsys):
        code = main(["cost", "--N", "200", "--K", "10", "--L", "6", "--g", "3", "--T", "3"])
        out = capsys.readouterr().out
        assert code == 0
        assert "jsp_jomp: 300" in out
        assert "somp: 60000" in out
        assert "ssp: 25890" in out
        assert "dcsp: 11610" in out

    def test_single_row(self, capsys):
        code = main(["cost", "--algorithm", "ssp", "--N", "200", "--K", "10",
                     "--L", "6", "--T", "1"])
        assert code == 0
        assert "ssp: 12630" in capsys.readouterr().out

    def test_missing_T_fails_cleanly(self, capsys):
        code = main(["cost", "--algorithm", "ssp"])
        assert code == 2
        assert "error" in capsys.readouterr().err


class TestTrialCommand:
    ARGS = ["trial", "--N", "40", "--M", "20", "--K", "3", "--L", "4", "--seed", "5"]

    def test_transcript_and_exit_code(self, capsys):
        code = main(self.ARGS + ["--algorithm", "ssp"])
        out = capsys.readouterr().out
        assert code == 0
        assert "true support:" in out
        assert "wire total:" in out

    def test_deterministic_output(self, capsys):
        main(self.ARGS)
        first = capsys.readouterr().out
        main(self.ARGS)
        second = capsys.readouterr().out
        assert first == second

    def test_expect_success_flag(self, capsys):
        code = main(self.ARGS + ["--algorithm", "ssp", "--expect-success"])
        assert code == 0

    def test_explicit_topology_flag(self, capsys):
        code = main(self.ARGS + ["--topology", "1,3,4;2,4;3,1;4,2"])
        out = capsys.readouterr().out
        assert code == 0
        assert "topology=explicit" in out

    def test_topology_via_config_file(self, capsys, tmp_path):
        cfg = tmp_path / "topo.cfg"
        cfg.write_text("N=40\nM=20\nK=3\nL=4\nseed=5\ntopology=1,2;2,3;3,4;4,1\n")
        code = main(["trial", "--config", str(cfg)])
        assert code == 0
        assert "topology=explicit" in capsys.readouterr().out


class TestFigureCommands:
    def test_fig1_tiny(self, capsys, tmp_path):
        out = tmp_path / "f1"
        code = main([
            "fig1", "--M", "16,20", "--N", "40", "--K", "3", "--L", "4",
            "--trials", "3", "--seed", "2", "--out", str(out),
        ])
        assert code == 0
        assert (tmp_path / "f1.csv").exists()
        assert (tmp_path / "f1.dat").exists()
        assert "M=16" in capsys.readouterr().out

    def test_fig2_tiny(self, capsys, tmp_path):
        out = tmp_path / "f2"
        code = main([
            "fig2", "--L", "2,4", "--N", "40", "--K", "3", "--M", "20",
            "--trials", "2", "--seed", "3", "--out", str(out),
        ])
        assert code == 0
        text = (tmp_path / "f2.csv").read_text()
        assert "somp_analytic_messages" in text

    def test_fig3_tiny(self, capsys):
        code = main([
            "fig3", "--L", "3", "--N", "40", "--K", "3", "--M", "20",
            "--trials", "2", "--seed", "3",
        ])
        assert code == 0
        assert "iters=" in capsys.readouterr().out

    def test_config_file_and_flag_precedence(self, capsys, tmp_path):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text("N=40\nK=3\nL=4\ntrials=5\nseed=2\nM=16\n")
        out_file = tmp_path / "flagged"
        code = main([
            "fig1", "--config", str(cfg), "--trials", "2", "--out", str(out_file),
        ])
        assert code == 0
        rows = [
            line
            for line in (tmp_path / "flagged.csv").read_text().splitlines()
            if not line.startswith("#")
        ]
        header, data = rows[0].split(","), rows[1].split(",")
        record = dict(zip(header, data))
        assert record["M"] == "16"  # from file
        assert record["trials"] == "2"  # flag wins over file

    def test_unknown_config_key(self, capsys, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("bogus=1\n")
        code = main(["fig1", "--config", str(cfg), "--M", "16", "--trials", "1"])
        assert code == 2
        assert "bogus" in capsys.readouterr().err

    def test_validation_error_exit_code(self, capsys):
        code = main(["fig1", "--M", "0:0:0", "--trials", "1"])
        assert code == 2
