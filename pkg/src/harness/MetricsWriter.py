import math
import os

import pandas as pd

from harness.MetricsRow import MetricsRow
from harness.RunSummary import RunSummary
from utils.constants import METRICS_COLUMNS, TIMING_COLUMNS, CSV_FLOAT_FORMAT


class MetricsWriter:
    """
    Write the CSV outputs of the harness: comma-separated, header row, UTF-8, LF line endings,
    floats with 9 significant digits. Missing values (e.g., the autoencoder loss without learned hashing)
    are empty fields.
    """

    @staticmethod
    def to_csv(dataframe: pd.DataFrame, filepath: str) -> None:
        os.makedirs(os.path.dirname(os.path.abspath(filepath)), exist_ok=True)
        dataframe.to_csv(filepath, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n", encoding="utf-8", na_rep="")

    @staticmethod
    def metrics_dataframe(rows: list[MetricsRow]) -> pd.DataFrame:
        dataframe = pd.DataFrame([row.to_metrics_record() for row in rows], columns=METRICS_COLUMNS)
        # the loss column is entirely empty when hashing is not learned
        dataframe["ae_loss"] = dataframe["ae_loss"].astype("float64")
        return dataframe

    @staticmethod
    def format_number(value: float) -> str:
        if math.isinf(value):
            return "inf"
        return CSV_FLOAT_FORMAT % value

    @staticmethod
    def summary_line(summary: RunSummary) -> str:
        return "# summary final_mean_return=%s final_std_return=%s median_iterations_to_first_goal=%s\n" % (
            MetricsWriter.format_number(summary.final_mean_return), MetricsWriter.format_number(summary.final_std_return),
            MetricsWriter.format_number(summary.median_iterations_to_first_goal))

    @staticmethod
    def write_metrics(rows: list[MetricsRow], summary: RunSummary, filepath: str) -> None:
        MetricsWriter.to_csv(dataframe=MetricsWriter.metrics_dataframe(rows=rows), filepath=filepath)
        with open(filepath, "a", encoding="utf-8", newline="\n") as metrics_file:
            metrics_file.write(MetricsWriter.summary_line(summary=summary))

    @staticmethod
    def write_timing(rows: list[MetricsRow], filepath: str) -> None:
        MetricsWriter.to_csv(dataframe=pd.DataFrame([row.to_timing_record() for row in rows], columns=TIMING_COLUMNS), filepath=filepath)

    @staticmethod
    def read_metrics(filepath: str) -> pd.DataFrame:
        # the summary line is a comment
        return pd.read_csv(filepath, comment="#")
