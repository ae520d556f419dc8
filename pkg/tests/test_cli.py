import json

import pytest

from diamondkit.cli import INPUT_ERROR, OK, VIOLATED, main
from diamondkit.constructions import star_paley
from diamondkit.hypergraph import baber, format_hyp, load_hyp, save_hyp
from diamondkit.tournament import format_trn, load_trn, save_trn, random_tournament


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    report = json.loads(out) if out.strip().startswith("{") else None
    return code, report


def transitive_trn(n):
    lines = [str(n)]
    for i in range(n):
        lines.append("".join("1" if i < j else "0" for j in range(n)))
    return "\n".join(lines) + "\n"


class TestConstruct:
    def test_star_paley_7(self, tmp_path, capsys):
        out = tmp_path / "t.trn"
        code, report = run(capsys, "construct", "star-paley", "--q", "7",
                           "--out", str(out))
        assert code == OK
        assert report["status"] == "ok"
        assert report["results"]["n"] == 8
        assert report["results"]["diamonds"] == 28
        assert report["results"]["skew_conference"] is True
        assert load_trn(out) == star_paley(7)

    def test_paley_3(self, tmp_path, capsys):
        out = tmp_path / "c3.trn"
        code, report = run(capsys, "construct", "paley", "--q", "3", "--out", str(out))
        assert code == OK
        assert load_trn(out).rows == (0b010, 0b100, 0b001)

    def test_bad_q_exit_2(self, capsys):
        code, _ = run(capsys, "construct", "star-paley", "--q", "5")
        assert code == INPUT_ERROR

    def test_p_k_form(self, capsys):
        code, report = run(capsys, "construct", "paley", "--p", "3", "--k", "3")
        assert code == OK
        assert report["results"]["n"] == 27


class TestCount:
    def test_both_agree_attained(self, tmp_path, capsys):
        path = tmp_path / "t.trn"
        save_trn(star_paley(7), path)
        code, report = run(capsys, "count", "--in", str(path), "--method", "both")
        assert code == OK
        assert report["results"]["naive"] == report["results"]["spectral"] == 28
        assert report["results"]["attained"] is True
        assert report["results"]["bound"] == {"num": 28, "den": 1, "decimal": 28.0}

    def test_transitive_not_attained(self, tmp_path, capsys):
        path = tmp_path / "t.trn"
        path.write_text(transitive_trn(10))
        code, report = run(capsys, "count", "--in", str(path))
        assert code == OK
        assert report["results"]["naive"] == 0
        assert report["results"]["attained"] is False

    def test_corrupt_file_exit_2(self, tmp_path, capsys):
        path = tmp_path / "bad.trn"
        path.write_text("3\n110\n001\n010\n")  # diagonal 1
        code, _ = run(capsys, "count", "--in", str(path))
        assert code == INPUT_ERROR

    def test_missing_file_exit_2(self, capsys):
        code, _ = run(capsys, "count", "--in", "/nonexistent.trn")
        assert code == INPUT_ERROR


class TestVerify:
    def test_design_pass(self, tmp_path, capsys):
        path = tmp_path / "h.hyp"
        save_hyp(baber(star_paley(7)), path)
        code, report = run(capsys, "verify", "--in", str(path),
                           "--checks", "ff4,design")
        assert code == OK
        assert report["results"]["ff4"] is True
        assert report["results"]["design"] is True
        assert report["results"]["design_lambda"] == 2

    def test_ff4_fails_with_named_five_set(self, tmp_path, capsys):
        h = baber(star_paley(7))
        removed = min(h.edges)
        path = tmp_path / "h.hyp"
        path.write_text(format_hyp(type(h)(h.n, h.edges - {removed})))
        code, report = run(capsys, "verify", "--in", str(path), "--checks", "ff4")
        assert code == VIOLATED
        assert report["status"] == "violated"
        assert len(report["results"]["ff4_counterexample"]["five_set"]) == 5
        assert report["results"]["ff4_counterexample"]["count"] == 1

    def test_conference_pass(self, tmp_path, capsys):
        path = tmp_path / "t.trn"
        save_trn(star_paley(7), path)
        code, report = run(capsys, "verify", "--in", str(path),
                           "--checks", "conference,extremal-charpoly")
        assert code == OK
        assert report["results"]["conference"] is True
        assert report["results"]["extremal_charpoly"] == "even-extremal"

    def test_conference_fail(self, tmp_path, capsys):
        path = tmp_path / "t.trn"
        save_trn(random_tournament(8, 0), path)
        code, report = run(capsys, "verify", "--in", str(path), "--checks", "conference")
        assert code == VIOLATED

    def test_unknown_check_exit_2(self, tmp_path, capsys):
        path = tmp_path / "t.trn"
        save_trn(star_paley(7), path)
        code, _ = run(capsys, "verify", "--in", str(path), "--checks", "bogus")
        assert code == INPUT_ERROR


class TestPipelines:
    def test_baber_command(self, tmp_path, capsys):
        trn = tmp_path / "t.trn"
        hyp = tmp_path / "h.hyp"
        save_trn(star_paley(7), trn)
        code, report = run(capsys, "baber", "--in", str(trn), "--out", str(hyp))
        assert code == OK
        assert report["results"]["m"] == 28
        assert load_hyp(hyp) == baber(star_paley(7))

    def test_delete_command(self, tmp_path, capsys):
        trn = tmp_path / "t.trn"
        out = tmp_path / "d.trn"
        save_trn(star_paley(7), trn)
        code, report = run(capsys, "delete", "--in", str(trn),
                           "--vertices", "7", "--out", str(out))
        assert code == OK
        assert report["results"]["n"] == 7
        assert report["results"]["diamonds"] == 14

    def test_extend_command(self, tmp_path, capsys):
        trn = tmp_path / "p7.trn"
        from diamondkit.constructions import paley_tournament
        save_trn(paley_tournament(7), trn)
        code, report = run(capsys, "extend", "--in", str(trn))
        assert code == OK
        assert report["results"]["n"] == 8
        assert report["results"]["skew_conference"] is True

    def test_extend_rejects_non_extremal(self, tmp_path, capsys):
        trn = tmp_path / "t.trn"
        trn.write_text(transitive_trn(7))
        code, _ = run(capsys, "extend", "--in", str(trn))
        assert code == INPUT_ERROR

    def test_round_trip_construct_count(self, tmp_path, capsys):
        out = tmp_path / "t.trn"
        code, report = run(capsys, "construct", "star-paley", "--q", "11",
                           "--out", str(out))
        delta = report["results"]["diamonds"]
        code, report = run(capsys, "count", "--in", str(out), "--method", "both")
        assert code == OK
        assert report["results"]["naive"] == delta == 165


class TestSearchCommand:
    def test_exhaustive_n5(self, capsys):
        code, report = run(capsys, "search", "--mode", "exhaustive", "--n", "5")
        assert code == OK
        assert report["results"]["max_diamonds"] == 2
        assert report["results"]["bound"] == {"num": 5, "den": 2, "decimal": 2.5}
        assert report["results"]["attained"] is False

    def test_local_seeded(self, tmp_path, capsys):
        out = tmp_path / "w.trn"
        code, report = run(capsys, "search", "--mode", "local", "--n", "8",
                           "--restarts", "4", "--steps", "2000", "--seed", "0",
                           "--out", str(out))
        assert code == OK
        w = load_trn(out)
        from diamondkit.tournament import count_diamonds_naive
        assert count_diamonds_naive(w) == report["results"]["max_diamonds"]

    def test_n8_needs_long_run(self, capsys):
        code, _ = run(capsys, "search", "--mode", "exhaustive", "--n", "8")
        assert code == INPUT_ERROR

    def test_report_file(self, tmp_path, capsys):
        report_path = tmp_path / "r.json"
        code = main(["search", "--mode", "exhaustive", "--n", "4",
                     "--report", str(report_path)])
        assert code == OK
        report = json.loads(report_path.read_text())
        assert report["results"]["max_diamonds"] == 1
        assert report["versions"]["diamondkit"]


class TestUsage:
    def test_no_command_exit_2(self, capsys):
        assert main([]) == INPUT_ERROR

    def test_unknown_command_exit_2(self, capsys):
        assert main(["frobnicate"]) == INPUT_ERROR
