from fractions import Fraction

import pytest

from headorder import published
from headorder.cli import main
from headorder.reproduce import (
    check_fig2,
    check_fig3,
    check_fig4,
    check_sov_footnote,
    check_table2,
    check_table3,
    sov_footnote_rows,
    sov_reproducing_p0,
    table2_rows,
    table3_rows,
)


class TestBuilders:
    def test_table2_shape(self):
        rows = table2_rows()
        assert len(rows) == 6
        assert [r[0] for r in rows] == ["languages", "genera"] + ["adjusted"] * 4

    def test_table3_shape(self):
        rows = table3_rows()
        assert len(rows) == 7

    def test_sov_rows(self):
        rows = sov_footnote_rows()
        assert len(rows) == 4
        assert {p0 for _, _, _, p0, _ in rows} == {Fraction(1, 2), Fraction(2, 3)}

    def test_finding_is_one_half(self):
        assert sov_reproducing_p0() == {
            "languages": [Fraction(1, 2)],
            "families": [Fraction(1, 2)],
        }


class TestCheckersPassOnRealData:
    def test_all_green(self):
        assert check_table2(table2_rows()) == []
        assert check_table3(table3_rows()) == []
        assert check_sov_footnote() == []
        assert check_fig2() == []
        assert check_fig3() == []
        assert check_fig4() == []


class TestCheckersCatchDrift:
    def test_wrong_count(self):
        rows = table2_rows()
        unit, prop, F, g, p = rows[0]
        rows[0] = (unit, prop, F, g + 1, p)
        assert any("counts" in problem for problem in check_table2(rows))

    def test_proportion_drift(self):
        rows = table2_rows()
        unit, prop, F, g, p = rows[0]
        rows[0] = (unit, prop + 0.002, F, g, p)
        assert any("proportion" in problem for problem in check_table2(rows))

    def test_p_value_drift(self):
        rows = table2_rows()
        unit, prop, F, g, p = rows[1]
        rows[1] = (unit, prop, F, g, p * 2)
        assert any("p-value" in problem for problem in check_table2(rows))

    def test_missing_row(self):
        assert check_table2(table2_rows()[:-1]) != []

    def test_k_drift(self):
        rows = table3_rows()
        unit, F, d_lo, mu, sigma, mean_D, d_hi, k = rows[0]
        rows[0] = (unit, F, d_lo, mu, sigma, mean_D, d_hi, k + 0.02)
        assert any("k " in problem for problem in check_table3(rows))

    def test_sigma_drift(self):
        rows = table3_rows()
        unit, F, d_lo, mu, sigma, mean_D, d_hi, k = rows[1]
        rows[1] = (unit, F, d_lo, mu, sigma + 0.002, mean_D, d_hi, k)
        assert any("sigma" in problem for problem in check_table3(rows))

    def test_mean_drift(self):
        rows = table3_rows()
        unit, F, d_lo, mu, sigma, mean_D, d_hi, k = rows[2]
        rows[2] = (unit, F, d_lo, mu, sigma, mean_D + 0.0015, d_hi, k)
        assert any("<D>" in problem for problem in check_table3(rows))


class TestCliMismatchExit:
    def test_exit_one_when_published_value_drifts(self, capsys, monkeypatch):
        # pretend the published table claimed a different count
        drifted = list(published.TABLE2_PUBLISHED)
        unit, prop, F, g, p = drifted[0]
        drifted[0] = (unit, prop, F, g + 1, p)
        monkeypatch.setattr(published, "TABLE2_PUBLISHED", tuple(drifted))
        code = main(["reproduce", "table2"])
        err = capsys.readouterr().err
        assert code == 1
        assert "mismatch" in err
