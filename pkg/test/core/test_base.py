from pathlib import Path

from pandas import read_csv

from skccm import __version__
from skccm.base import BaseProcess, format_value


class TestBaseProcess:
    def test_str_repr(self):
        bp = BaseProcess(kw1=1, kw2="2")

        assert str(bp) == "BaseProcess"
        assert repr(bp) == "BaseProcess(kw1=1, kw2='2')"

    def test_eq(self, testprocess, testprocess2):
        tp1_a = testprocess(kw1=1)
        tp1_b = testprocess(kw1=2)
        tp2_a = testprocess2(kwa=1)

        assert tp1_a == testprocess(kw1=1)
        assert all([tp1_a != i for i in [tp1_b, tp2_a]])
        assert tp2_a != tp1_a

    @staticmethod
    def setup_lgr():
        class Lgr:
            msgs = []

            def info(self, msg):
                self.msgs.append(msg)

        return Lgr()

    def test_predict(self, testprocess):
        tp = testprocess(kw1=3)
        tp.logger = self.setup_lgr()

        tp.predict()

        assert "Entering TestProcess processing with call TestProcess(kw1=3)" in tp.logger.msgs

    def test_save_results(self, tmp_path):
        bp = BaseProcess(**{"ccm.q": 3, "channel.ebn0_db": [2.0, 4.0], "bound.l_min": None})
        fname = bp.save_results({"a": [1, 2], "b": [0.5, 0.25]}, str(tmp_path / "{name}.csv"))

        assert Path(fname).name == "BaseProcess.csv"
        lines = Path(fname).read_text().splitlines()
        assert lines[0] == f"# scikit-chaos-coded-modulation {__version__}"
        assert lines[1:4] == [
            "# ccm.q=3",
            "# channel.ebn0_db=[2.0, 4.0]",
            "# bound.l_min=null",
        ]
        assert lines[4] == "a,b"

        df = read_csv(fname, comment="#")
        assert df["a"].tolist() == [1, 2]


class TestFormatValue:
    def test_values(self):
        assert format_value(None) == "null"
        assert format_value(True) == "true"
        assert format_value(1e-8) == "1e-08"
        assert format_value("peak") == "peak"
        assert format_value([1, 2.5]) == "[1, 2.5]"
