from dataclasses import dataclass

from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError


@dataclass(frozen=True)
class BassConfig:
    """
    Granularity of the Basic Abstraction of ScreenShots: square cells of cell_size pixels,
    nb_bins intensity bins per color channel.
    """
    cell_size: int
    nb_bins: int
    channels: int = 1

    def __post_init__(self):
        if self.cell_size < 1 or self.nb_bins < 1 or self.channels < 1:
            raise ExplorationError(ErrorKind.INVALID_DIMENSION,
                                   "BASS needs C >= 1, B >= 1 and at least one channel, got C=%s, B=%s, channels=%s."
                                   % (self.cell_size, self.nb_bins, self.channels))
