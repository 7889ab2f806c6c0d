import math
import os

from harness.MetricsRow import MetricsRow
from harness.MetricsWriter import MetricsWriter
from harness.RunSummary import RunSummary

ROWS = [MetricsRow(iteration=0, seed=0, mean_true_return=0.5, mean_bonus=0.25, distinct_keys=3, counter_bytes=120, ae_loss=None, wall_ms=1.5),
        MetricsRow(iteration=1, seed=0, mean_true_return=1.0, mean_bonus=1 / 3, distinct_keys=4, counter_bytes=160, ae_loss=None, wall_ms=2.0)]
SUMMARY = RunSummary(final_mean_return=1.0, final_std_return=0.0, median_iterations_to_first_goal=math.inf, nb_seeds=1)


class TestMetricsWriter:
    def test_write_metrics(self, tmp_path):
        filepath = os.path.join(tmp_path, "metrics.csv")
        MetricsWriter.write_metrics(rows=ROWS, summary=SUMMARY, filepath=filepath)
        with open(filepath, "rb") as metrics_file:
            lines = metrics_file.read().decode("utf-8").split("\n")
        assert lines[0] == "iteration,seed,mean_true_return,mean_bonus,distinct_keys,counter_bytes,ae_loss"
        assert lines[1] == "0,0,0.5,0.25,3,120,"
        assert lines[2] == "1,0,1,0.333333333,4,160,"
        assert lines[3] == "# summary final_mean_return=1 final_std_return=0 median_iterations_to_first_goal=inf"
        assert lines[4] == ""

    def test_no_carriage_return(self, tmp_path):
        filepath = os.path.join(tmp_path, "metrics.csv")
        MetricsWriter.write_metrics(rows=ROWS, summary=SUMMARY, filepath=filepath)
        with open(filepath, "rb") as metrics_file:
            assert b"\r" not in metrics_file.read()

    def test_read_metrics(self, tmp_path):
        filepath = os.path.join(tmp_path, "metrics.csv")
        MetricsWriter.write_metrics(rows=ROWS, summary=SUMMARY, filepath=filepath)
        dataframe = MetricsWriter.read_metrics(filepath=filepath)
        assert len(dataframe) == 2
        assert dataframe["distinct_keys"].tolist() == [3, 4]
        assert dataframe["ae_loss"].isna().all()

    def test_ae_loss(self):
        rows = [MetricsRow(iteration=0, seed=0, mean_true_return=0.0, mean_bonus=0.0, distinct_keys=0, counter_bytes=0, ae_loss=2.5, wall_ms=0.0)]
        assert MetricsWriter.metrics_dataframe(rows=rows)["ae_loss"].tolist() == [2.5]

    def test_write_timing(self, tmp_path):
        filepath = os.path.join(tmp_path, "timing.csv")
        MetricsWriter.write_timing(rows=ROWS, filepath=filepath)
        with open(filepath, "r", encoding="utf-8") as timing_file:
            assert timing_file.read().splitlines() == ["iteration,seed,wall_ms", "0,0,1.5", "1,0,2"]

    def test_format_number(self):
        assert MetricsWriter.format_number(math.inf) == "inf"
        assert MetricsWriter.format_number(0.1) == "0.1"
        assert MetricsWriter.format_number(2.0) == "2"
