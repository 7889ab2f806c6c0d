import logging
import os
from time import strftime

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s, %(levelname)-5s [%(module)s:%(funcName)s:%(lineno)d] %(message)s',
    datefmt='%Y-%m-%d:%H:%M:%S',
    handlers=[
        logging.StreamHandler()
    ]
)
log = logging.getLogger()
# only important messages (warning, error and fatal) of third-party libraries will be shown
logging.getLogger("numexpr").setLevel(logging.WARNING)
logging.getLogger("hypothesis").setLevel(logging.WARNING)


def add_file_handler(directory: str) -> str:
    """
    Also write the log in a file within the given directory (the output directory of the current run).
    :param directory: A string being the directory in which the log file is created.
    :return: A string being the path of the log file.
    """
    os.makedirs(directory, exist_ok=True)
    log_filepath = os.path.join(directory, 'log-{}.log'.format(strftime('%Y-%m-%d_%H-%M-%S')))
    file_handler = logging.FileHandler(log_filepath)
    file_handler.setFormatter(logging.Formatter(
        fmt='%(asctime)s, %(levelname)-5s [%(module)s:%(funcName)s:%(lineno)d] %(message)s',
        datefmt='%Y-%m-%d:%H:%M:%S'))
    log.addHandler(file_handler)
    return log_filepath


def remove_file_handlers() -> None:
    # close handlers that were writing log files, so that the files can be moved or deleted
    for handler in list(log.handlers):
        if isinstance(handler, logging.FileHandler):
            handler.close()
            log.removeHandler(handler)
