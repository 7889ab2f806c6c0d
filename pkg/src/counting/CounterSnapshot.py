import struct

import numpy as np

from counting.CountMinSketch import CountMinSketch
from counting.ExactCounter import ExactCounter
from counting.VisitCounter import VisitCounter
from utils.CounterBackend import CounterBackend
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.constants import COUNTER_MAGIC, COUNTER_FORMAT_VERSION

EXACT_TAG = 0
COUNT_MIN_TAG = 1
HEADER = struct.Struct("<4sHB")  # magic, version, backend tag


class CounterSnapshot:
    """
    Serialize counters to a flat, versioned, little-endian binary layout, so that runs can be checkpointed.

    Header: magic b"HCNT" | version (uint16) | backend tag (uint8: 0 exact, 1 Count-Min)
    Exact table: number of entries (uint64), then per entry (sorted by key bytes):
                 key length (uint32) | key bytes | count (uint64)
    Count-Min sketch: number of rows l (uint32) | l primes (uint64) | number of new keys (uint64) |
                      the l count arrays (uint64 each), row after row
    """

    @staticmethod
    def dump(counter: VisitCounter) -> bytes:
        if counter.get_backend() == CounterBackend.EXACT:
            chunks = [HEADER.pack(COUNTER_MAGIC, COUNTER_FORMAT_VERSION, EXACT_TAG), struct.pack("<Q", len(counter.table))]
            for key_bytes in sorted(counter.table):
                chunks.append(struct.pack("<I", len(key_bytes)))
                chunks.append(key_bytes)
                chunks.append(struct.pack("<Q", counter.table[key_bytes]))
            return b"".join(chunks)
        else:
            chunks = [HEADER.pack(COUNTER_MAGIC, COUNTER_FORMAT_VERSION, COUNT_MIN_TAG),
                      struct.pack("<I", counter.get_nb_rows()),
                      struct.pack("<%sQ" % counter.get_nb_rows(), *counter.primes),
                      struct.pack("<Q", counter.nb_new_keys)]
            for row in counter.arrays:
                chunks.append(row.astype("<u8").tobytes())
            return b"".join(chunks)

    @staticmethod
    def load(data: bytes) -> VisitCounter:
        try:
            magic, version, tag = HEADER.unpack_from(data, 0)
            if magic != COUNTER_MAGIC or version != COUNTER_FORMAT_VERSION:
                raise ExplorationError(ErrorKind.SNAPSHOT_INVALID, "Unknown counter snapshot (magic %s, version %s)." % (magic, version))
            offset = HEADER.size
            if tag == EXACT_TAG:
                counter = ExactCounter()
                (nb_entries, ) = struct.unpack_from("<Q", data, offset)
                offset += 8
                for _ in range(nb_entries):
                    (key_length, ) = struct.unpack_from("<I", data, offset)
                    offset += 4
                    key_bytes = bytes(data[offset:offset + key_length])
                    offset += key_length
                    (count, ) = struct.unpack_from("<Q", data, offset)
                    offset += 8
                    counter.table[key_bytes] = count
            elif tag == COUNT_MIN_TAG:
                (nb_rows, ) = struct.unpack_from("<I", data, offset)
                offset += 4
                primes = struct.unpack_from("<%sQ" % nb_rows, data, offset)
                offset += 8 * nb_rows
                counter = CountMinSketch(primes=primes)
                (counter.nb_new_keys, ) = struct.unpack_from("<Q", data, offset)
                offset += 8
                for index, prime in enumerate(primes):
                    counter.arrays[index] = np.frombuffer(data, dtype="<u8", count=prime, offset=offset).astype(np.uint64)
                    offset += 8 * prime
            else:
                raise ExplorationError(ErrorKind.SNAPSHOT_INVALID, "Unknown counter backend tag %s." % tag)
        except struct.error as error:
            raise ExplorationError(ErrorKind.SNAPSHOT_INVALID, "Truncated counter snapshot: " + str(error))
        except ValueError as error:
            if isinstance(error, ExplorationError):
                raise
            raise ExplorationError(ErrorKind.SNAPSHOT_INVALID, "Truncated counter snapshot: " + str(error))
        if offset != len(data):
            raise ExplorationError(ErrorKind.SNAPSHOT_INVALID, "The counter snapshot has %s trailing bytes." % (len(data) - offset))
        return counter

    @staticmethod
    def write_to_file(counter: VisitCounter, filepath: str) -> None:
        with open(filepath, "wb") as snapshot_file:
            snapshot_file.write(CounterSnapshot.dump(counter=counter))

    @staticmethod
    def read_from_file(filepath: str) -> VisitCounter:
        with open(filepath, "rb") as snapshot_file:
            return CounterSnapshot.load(data=snapshot_file.read())
