from skewspan import ROOT_DIR

LOGGER_NAME = "skewspan"
LOG_DIR = ROOT_DIR / "logs"
MAX_WORKERS = 2  # one thread per checker

DATA_PATH = ROOT_DIR / "data"
FIXTURES_PATH = DATA_PATH / "fixtures"

UNIT_ELEMENT = "*"

DEFAULT_CAP = 10 ** 6
DEFAULT_DEPTH = 3
DEFAULT_SEED = 0
DEFAULT_MUTATIONS = 100
DEFAULT_FORMAT = "text"
