import logging
import threading
import time
from contextlib import contextmanager
from datetime import datetime
from functools import wraps

from settings import LOGGER_NAME, LOG_DIR

__logger = logging.getLogger(LOGGER_NAME)
__logger.setLevel(logging.DEBUG)
__logger.propagate = False

__formatter = logging.Formatter('%(asctime)s - %(threadName)s:%(levelname)s - %(message)s',
                                datefmt='%d-%b-%y %H:%M:%S')

stream_handler = logging.StreamHandler()
stream_handler.setLevel(logging.INFO)
stream_handler.setFormatter(__formatter)
__logger.addHandler(stream_handler)

__debug_handler = None
__file_handler = None

mutex = threading.RLock()


def thread_safe(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
        with mutex:
            return func(*args, **kwargs)

    return wrapper


@thread_safe
def print_debug():
    global __debug_handler
    if __debug_handler is not None:
        return
    __debug_handler = logging.StreamHandler()
    __debug_handler.setLevel(logging.DEBUG)
    __debug_handler.setFormatter(__formatter)
    __logger.removeHandler(stream_handler)
    __logger.addHandler(__debug_handler)


@thread_safe
def log_to_file(log_dir=None):
    global __file_handler
    if __file_handler is not None:
        return __file_handler.baseFilename
    log_dir = LOG_DIR if log_dir is None else log_dir
    log_dir.mkdir(parents=True, exist_ok=True)
    path = log_dir / "{}.log".format(datetime.now().strftime("%Y%m%d-%H%M%S"))
    __file_handler = logging.FileHandler(path, encoding="utf-8")
    __file_handler.setLevel(logging.DEBUG)
    __file_handler.setFormatter(__formatter)
    __logger.addHandler(__file_handler)
    return path


@thread_safe
def debug(*args):
    __logger.debug(*args)


@thread_safe
def info(*args):
    __logger.info(*args)


@thread_safe
def warning(*args):
    __logger.warning(*args)


@thread_safe
def error(*args):
    __logger.error(*args)


@thread_safe
def critical(*args):
    __logger.critical(*args)


@contextmanager
def timed(label):
    start = time.perf_counter()
    try:
        yield
    finally:
        debug("{} took {:.3f}s".format(label, time.perf_counter() - start))


def setLevel(*args):
    __logger.setLevel(*args)
