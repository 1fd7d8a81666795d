import dataclasses
import enum
import json

import numpy as np


# https://stackoverflow.com/questions/51286748/make-the-python-json-encoder-support-pythons-new-dataclasses/51286749#51286749
class EnhancedJSONEncoder(json.JSONEncoder):
    """
    Complex numbers become [re, im] pairs and matrices nested row-major lists of them.
    """
    def default(self, o):
        if dataclasses.is_dataclass(o):
            return dataclasses.asdict(o)
        if isinstance(o, complex):
            return [o.real, o.imag]
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, np.generic):
            return o.item()
        if isinstance(o, enum.Enum):
            return o.value
        return super().default(o)


def dumps(obj):
    return json.dumps(
        obj,
        sort_keys=True,
        indent=2,
        cls=EnhancedJSONEncoder,
    ) + '\n'
