"""
Scenario files.

Schema (JSON, all keys lowercase):

    {
      "dim": 2,
      "state": [[1, 0], [0, 0]],                  # optional, N complex [re, im] pairs
      "channel": [[1, 0], [0, 0], [0, 0], [1, 0]], # N*N pairs row-major, or N rows of N pairs
      "measurement": <matrix> | "bell" | "weyl" | {"family": [<matrix>, ...]},
      "options": {"normalize": true, "tolerance": 1e-9}
    }
"""
import dataclasses
import json
import math
import numbers
import typing

import numpy as np

from teleportsim.protocol import extensions
from teleportsim.protocol.types import ChannelMatrix, MeasurementOperator, QuditState
from teleportsim.utils import environment
from teleportsim.utils.errors import ContractError, ScenarioParseError, ScenarioValidationError
from teleportsim.utils.keyword import BELL, WEYL, Keyword
from teleportsim.utils.logger import logger


KNOWN_FIELDS = {'dim', 'state', 'channel', 'measurement', 'options'}
KNOWN_OPTIONS = {'normalize', 'tolerance'}


@dataclasses.dataclass(frozen=True, eq=False)
class Scenario:
    dim: int
    channel: np.ndarray
    measurement: typing.Union[Keyword, typing.Tuple[np.ndarray, ...]]
    state: typing.Optional[np.ndarray] = None
    normalize: bool = True
    tolerance: float = environment.DEFAULT_TOLERANCE

    def channel_matrix(self):
        return ChannelMatrix.from_matrix(self.channel, normalize=self.normalize)

    def measurement_operators(self):
        if self.measurement == BELL:
            return tuple(extensions.bell_family(normalized=self.normalize))
        if self.measurement == WEYL:
            return tuple(extensions.clock_shift_family(self.dim, normalized=self.normalize))
        return tuple(
            MeasurementOperator.from_matrix(m, normalize=self.normalize)
            for m in self.measurement
        )

    def alpha(self):
        if self.state is None:
            raise ScenarioValidationError('scenario has no state to teleport', path='state')
        try:
            return QuditState.from_amplitudes(self.state, normalize=self.normalize)
        except ContractError as e:
            raise ScenarioValidationError(e.msg, path='state') from e


def _is_number(value):
    return isinstance(value, numbers.Real) and not isinstance(value, bool)


def _is_pair(value):
    return isinstance(value, list) and len(value) == 2 and all(_is_number(v) for v in value)


def _decode_complex(value, path):
    if not _is_pair(value):
        raise ScenarioValidationError(f'expected a complex number as [re, im], got {value!r}', path=path)
    re, im = value
    if not (math.isfinite(re) and math.isfinite(im)):
        raise ScenarioValidationError('complex number is not finite', path=path)
    return complex(re, im)


def _decode_vector(value, dim, path):
    if not isinstance(value, list) or len(value) != dim:
        raise ScenarioValidationError(f'expected {dim} complex entries', path=path)
    return np.array([_decode_complex(v, f'{path}[{i}]') for i, v in enumerate(value)], dtype=np.complex128)


def _decode_matrix(value, dim, path):
    if isinstance(value, list) and value and all(_is_pair(v) for v in value):
        flat = _decode_vector(value, dim * dim, path)
        return flat.reshape(dim, dim)
    if not isinstance(value, list) or len(value) != dim:
        raise ScenarioValidationError(f'expected a {dim}x{dim} matrix (flat or nested rows)', path=path)
    return np.array([
        _decode_vector(row, dim, f'{path}[{i}]')
        for i, row in enumerate(value)
    ])


def _decode_measurement(value, dim):
    if isinstance(value, str):
        try:
            keyword = Keyword.from_string(value)
        except ValueError:
            raise ScenarioValidationError(f'unknown measurement keyword {value!r}', path='measurement')
        if keyword == BELL and dim != 2:
            raise ScenarioValidationError('the Bell family needs dim 2', path='measurement')
        return keyword
    if isinstance(value, dict):
        if set(value) != {'family'} or not isinstance(value['family'], list) or not value['family']:
            raise ScenarioValidationError('expected {"family": [matrix, ...]}', path='measurement')
        return tuple(
            _decode_matrix(m, dim, f'measurement.family[{i}]')
            for i, m in enumerate(value['family'])
        )
    return (_decode_matrix(value, dim, 'measurement'),)


def _require(data, field):
    if field not in data:
        raise ScenarioValidationError('missing required field', path=field)
    return data[field]


def parse_scenario(text):
    if isinstance(text, bytes):
        try:
            text = text.decode('utf-8')
        except UnicodeDecodeError as e:
            raise ScenarioParseError(f'scenario is not UTF-8: {e.reason}') from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioParseError(e.msg, line=e.lineno, column=e.colno) from e

    if not isinstance(data, dict):
        raise ScenarioValidationError('scenario must be an object', path='$')
    for field in sorted(set(data) - KNOWN_FIELDS):
        logger.warning(f'unknown scenario field "{field}" ignored')

    dim = _require(data, 'dim')
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ScenarioValidationError(f'expected a positive integer, got {dim!r}', path='dim')

    options = data.get('options', {})
    if not isinstance(options, dict):
        raise ScenarioValidationError('expected an object', path='options')
    for field in sorted(set(options) - KNOWN_OPTIONS):
        logger.warning(f'unknown scenario option "{field}" ignored')
    normalize = options.get('normalize', True)
    if not isinstance(normalize, bool):
        raise ScenarioValidationError('expected true or false', path='options.normalize')
    tolerance = options.get('tolerance', environment.get_default_tolerance())
    if not _is_number(tolerance) or not math.isfinite(tolerance) or tolerance <= 0:
        raise ScenarioValidationError('expected a positive finite number', path='options.tolerance')

    state = data.get('state')
    return Scenario(
        dim=dim,
        channel=_decode_matrix(_require(data, 'channel'), dim, 'channel'),
        measurement=_decode_measurement(_require(data, 'measurement'), dim),
        state=None if state is None else _decode_vector(state, dim, 'state'),
        normalize=normalize,
        tolerance=float(tolerance),
    )
