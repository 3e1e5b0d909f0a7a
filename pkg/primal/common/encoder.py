from enum import Enum
from json import JSONEncoder

import numpy as np


class CustomJSONEncoder(JSONEncoder):

    def default(self, o):
        if isinstance(o, (set, frozenset)):
            return sorted(o)

        if isinstance(o, Enum):
            return o.value

        if isinstance(o, np.integer):
            return int(o)

        if isinstance(o, np.bool_):
            return bool(o)

        if isinstance(o, np.ndarray):
            return o.tolist()

        to_dict = getattr(o, 'to_dict', None)
        if callable(to_dict):
            return to_dict()

        return super(CustomJSONEncoder, self).default(o)
