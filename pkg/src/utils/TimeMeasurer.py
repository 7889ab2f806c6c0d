import time


class TimeMeasurer:
    """
    Measure wall-clock durations in milliseconds (monotonic clock), e.g., the duration of one iteration.
    """

    def __init__(self):
        self.measure = 0.0
        self.start_time = 0.0

    def start(self) -> None:
        self.start_time = time.perf_counter()

    def stop(self) -> float:
        self.measure = (time.perf_counter() - self.start_time) * 1000.0
        return self.measure

    def reset_and_start(self) -> None:
        self.measure = 0.0
        self.start()

    def get_measure(self) -> float:
        return self.measure

    def __enter__(self):
        self.reset_and_start()
        return self

    def __exit__(self, exc_type, exc_value, exc_traceback) -> None:
        self.stop()
