import json
import os


DEFAULT_TOLERANCE = 1e-9


def get_default_tolerance(environ=os.environ):
    tolerance = json.loads(environ.get('TELEPORTSIM_TOLERANCE', json.dumps(DEFAULT_TOLERANCE)))
    assert tolerance > 0, 'TELEPORTSIM_TOLERANCE must be positive'
    return float(tolerance)


def get_log_level(environ=os.environ):
    return environ.get('TELEPORTSIM_LOG_LEVEL', 'INFO').upper()
