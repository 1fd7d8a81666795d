import logging

from teleportsim.utils import environment


logging.basicConfig(format='%(levelname)s:%(message)s', level=environment.get_log_level())
logger = logging.getLogger('teleportsim')


def set_level(level):
    """Applied after the CLI has rewritten the environment."""
    logger.setLevel(logging._checkLevel(level))
